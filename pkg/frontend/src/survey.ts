/**
 * Survey wizard state machine. Pure: pages feed it assignments from the
 * server and user events; it decides what may be submitted and tracks
 * the card cursor. Validation mirrors the server rule (negative scores
 * need a comment) so bad submissions never leave the client, but the
 * server's 422 is still surfaced if one is forced through.
 */

import { ApiClient, ApiError } from './api';
import type { Assignment, Progress } from './types';

export interface WizardState {
  assignments: Assignment[];
  cursor: number;
  tab: 'survey' | 'review';
  score: number | null;
  comment: string;
  error: string | null;
  finalized: boolean;
  exhausted: boolean;
  progress: Progress;
}

export function emptyProgress(): Progress {
  return {
    total: 0,
    answered: 0,
    states: { unanswered: 0, skipped: 0, answered: 0, finalized: 0 },
  };
}

export function progressOf(assignments: Assignment[]): Progress {
  const states = { unanswered: 0, skipped: 0, answered: 0, finalized: 0 };
  for (const a of assignments) states[a.state] += 1;
  return {
    total: assignments.length,
    answered: states.answered + states.finalized,
    states,
  };
}

export function initWizard(assignments: Assignment[], progress?: Progress): WizardState {
  const state: WizardState = {
    assignments,
    cursor: 0,
    tab: 'survey',
    score: null,
    comment: '',
    error: null,
    finalized: assignments.length > 0 && assignments.every((a) => a.state === 'finalized'),
    exhausted: false,
    progress: progress ?? progressOf(assignments),
  };
  state.cursor = nextOpenIndex(state, -1);
  return state;
}

/** Index of the next assignment still needing an answer, wrapping around. */
export function nextOpenIndex(state: WizardState, from: number): number {
  const n = state.assignments.length;
  for (let step = 1; step <= n; step++) {
    const i = (from + step) % n;
    const s = state.assignments[i]?.state;
    if (s === 'unanswered' || s === 'skipped') return i;
  }
  return from >= 0 ? from : 0;
}

export function current(state: WizardState): Assignment | null {
  return state.assignments[state.cursor] ?? null;
}

/**
 * Client-side gate: null when the pending (score, comment) may be
 * submitted, otherwise the message to show inline. No API call happens
 * while this returns non-null.
 */
export function validate(score: number | null, comment: string): string | null {
  if (score === null) return 'Pick a score on the scale first.';
  if (!Number.isInteger(score) || score < -3 || score > 3) {
    return 'Scores run from -3 to +3.';
  }
  if (score < 0 && comment.trim() === '') {
    return 'Negative evaluations require an explanation.';
  }
  return null;
}

export interface SubmitOutcome {
  state: WizardState;
  submitted: boolean;
}

/** Apply a successful server answer to the local state. */
function applyAnswer(state: WizardState, updated: Assignment): WizardState {
  const assignments = state.assignments.map((a) =>
    a.a === updated.a && a.b === updated.b ? updated : a,
  );
  const next: WizardState = {
    ...state,
    assignments,
    error: null,
    score: null,
    comment: '',
    progress: progressOf(assignments),
  };
  next.cursor = nextOpenIndex(next, state.cursor);
  return next;
}

export async function submitCurrent(state: WizardState, api: ApiClient): Promise<SubmitOutcome> {
  const card = current(state);
  if (!card) return { state, submitted: false };
  const message = validate(state.score, state.comment);
  if (message !== null) {
    return { state: { ...state, error: message }, submitted: false };
  }
  try {
    const result = await api.submitAnswer(card.a, card.b, state.score as number, state.comment.trim());
    return { state: applyAnswer(state, result.assignment), submitted: true };
  } catch (err) {
    if (err instanceof ApiError) {
      return { state: { ...state, error: err.message }, submitted: false };
    }
    throw err;
  }
}

export async function skipCurrent(state: WizardState, api: ApiClient): Promise<WizardState> {
  const card = current(state);
  if (!card) return state;
  try {
    const result = await api.skip(card.a, card.b);
    return applyAnswer(state, result.assignment);
  } catch (err) {
    if (err instanceof ApiError) return { ...state, error: err.message };
    throw err;
  }
}

/** Finalization needs every assignment answered; afterwards everything locks. */
export function canFinalize(state: WizardState): boolean {
  return (
    state.assignments.length > 0 &&
    state.assignments.every((a) => a.state === 'answered' || a.state === 'finalized') &&
    !state.finalized
  );
}

export async function finalizeAll(state: WizardState, api: ApiClient): Promise<WizardState> {
  if (!canFinalize(state)) {
    return { ...state, error: 'Answer every pair before finalizing.' };
  }
  try {
    await api.finalize();
    const assignments = state.assignments.map((a) => ({
      ...a,
      state: 'finalized' as const,
    }));
    return {
      ...state,
      assignments,
      finalized: true,
      error: null,
      progress: progressOf(assignments),
    };
  } catch (err) {
    if (err instanceof ApiError) return { ...state, error: err.message };
    throw err;
  }
}

/** Select a card from the review tab for editing (no-op once finalized). */
export function jumpTo(state: WizardState, index: number): WizardState {
  if (state.finalized || index < 0 || index >= state.assignments.length) return state;
  const card = state.assignments[index];
  return {
    ...state,
    cursor: index,
    tab: 'survey',
    score: card.score,
    comment: card.explanation,
    error: null,
  };
}
