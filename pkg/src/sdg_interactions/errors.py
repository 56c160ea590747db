"""Exception types shared across the package.

Every error carries a stable ``code`` string so the HTTP layer can emit
problem-detail documents without string matching on messages.
"""


class SdgError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}


class MalformedId(SdgError):
    code = "malformed_id"


class UnknownTarget(SdgError):
    code = "unknown_target"


class UnknownGoal(SdgError):
    code = "unknown_goal"


class UnknownTargetPrefix(SdgError):
    code = "unknown_target_prefix"


class FileUnreadable(SdgError):
    code = "file_unreadable"


class DuplicateObservation(SdgError):
    code = "duplicate_observation"


class FormatError(SdgError):
    code = "format_error"


class FixtureFormatError(SdgError):
    code = "fixture_format_error"


class MissingField(SdgError):
    code = "missing_field"


class UnknownCurator(SdgError):
    code = "unknown_curator"


class NotPending(SdgError):
    code = "not_pending"


class NotAuthorized(SdgError):
    code = "not_authorized"


class TooFewGoals(SdgError):
    code = "too_few_goals"


class SelectionLocked(SdgError):
    code = "selection_locked"


class NoGoalsSelected(SdgError):
    code = "no_goals_selected"


class NotYourAssignment(SdgError):
    code = "not_your_assignment"


class AlreadyAnswered(SdgError):
    code = "already_answered"


class AlreadyFinalized(SdgError):
    code = "already_finalized"


class ScoreOutOfRange(SdgError):
    code = "score_out_of_range"


class ExplanationRequired(SdgError):
    code = "explanation_required"


class UnansweredRemaining(SdgError):
    code = "unanswered_remaining"


class ConfigInvalid(SdgError):
    code = "config_invalid"


class StoreUnavailable(SdgError):
    code = "store_unavailable"


class UnknownUser(SdgError):
    code = "unknown_user"


class DuplicateEmail(SdgError):
    code = "duplicate_email"


class InvalidCredentials(SdgError):
    code = "invalid_credentials"
