import { describe, expect, it, vi } from 'vitest';

import { ApiClient, ApiError } from '../src/api';
import {
  canFinalize,
  finalizeAll,
  initWizard,
  jumpTo,
  nextOpenIndex,
  progressOf,
  submitCurrent,
  validate,
} from '../src/survey';
import type { Assignment } from '../src/types';

function assignment(a: string, b: string, state: Assignment['state'] = 'unanswered'): Assignment {
  return { a, b, state, score: null, explanation: '' };
}

function mockApi(overrides: Partial<Record<string, unknown>> = {}): ApiClient {
  const api = new ApiClient('');
  Object.assign(api, overrides);
  return api;
}

describe('client-side validation', () => {
  it('requires a score', () => {
    expect(validate(null, '')).toMatch(/score/i);
  });

  it('rejects out-of-scale scores', () => {
    expect(validate(4, '')).toMatch(/-3 to \+3/);
    expect(validate(-4, 'x')).toMatch(/-3 to \+3/);
  });

  it('blocks negative scores without a comment', () => {
    expect(validate(-1, '')).toMatch(/explanation/i);
    expect(validate(-3, '   ')).toMatch(/explanation/i);
  });

  it('accepts negatives with comments and non-negatives without', () => {
    expect(validate(-2, 'budget conflict')).toBeNull();
    expect(validate(0, '')).toBeNull();
    expect(validate(3, '')).toBeNull();
  });
});

describe('submit flow', () => {
  it('never calls the API while validation fails', async () => {
    const submitAnswer = vi.fn();
    const api = mockApi({ submitAnswer });
    const state = {
      ...initWizard([assignment('3.8', '6.5')]),
      score: -2,
      comment: '',
    };
    const outcome = await submitCurrent(state, api);
    expect(outcome.submitted).toBe(false);
    expect(outcome.state.error).toMatch(/explanation/i);
    expect(submitAnswer).not.toHaveBeenCalled();
  });

  it('surfaces a forced server-side 422 as the inline error', async () => {
    const submitAnswer = vi.fn().mockRejectedValue(
      new ApiError(422, {
        code: 'explanation_required',
        message: 'negative evaluations require an explanation',
        detail: {},
      }),
    );
    const api = mockApi({ submitAnswer });
    // a comment of only whitespace passes nothing to trim server-side;
    // pretend the client check was bypassed with a valid-looking state
    const state = {
      ...initWizard([assignment('3.8', '6.5')]),
      score: -2,
      comment: 'x',
    };
    const outcome = await submitCurrent(state, api);
    expect(submitAnswer).toHaveBeenCalledOnce();
    expect(outcome.submitted).toBe(false);
    expect(outcome.state.error).toMatch(/explanation/i);
    expect(outcome.state.assignments[0].state).toBe('unanswered');
  });

  it('applies a successful answer and advances to the next open card', async () => {
    const submitAnswer = vi.fn().mockResolvedValue({
      assignment: { a: '3.8', b: '6.5', state: 'answered', score: 2, explanation: '' },
    });
    const api = mockApi({ submitAnswer });
    const state = {
      ...initWizard([assignment('3.8', '6.5'), assignment('3.1', '6.2')]),
      score: 2,
    };
    const outcome = await submitCurrent(state, api);
    expect(outcome.submitted).toBe(true);
    expect(outcome.state.assignments[0].state).toBe('answered');
    expect(outcome.state.cursor).toBe(1);
    expect(outcome.state.score).toBeNull();
    expect(outcome.state.error).toBeNull();
  });
});

describe('progress indicator', () => {
  it('mirrors server assignment states', () => {
    const assignments: Assignment[] = [
      assignment('3.1', '6.2', 'answered'),
      assignment('3.2', '6.2', 'finalized'),
      assignment('3.3', '6.2', 'skipped'),
      assignment('3.4', '6.2', 'unanswered'),
    ];
    const progress = progressOf(assignments);
    expect(progress.total).toBe(4);
    expect(progress.answered).toBe(2); // answered + finalized
    expect(progress.states).toEqual({
      unanswered: 1,
      skipped: 1,
      answered: 1,
      finalized: 1,
    });
  });

  it('initWizard trusts a server-provided progress document', () => {
    const serverProgress = {
      total: 20,
      answered: 0,
      states: { unanswered: 20, skipped: 0, answered: 0, finalized: 0 },
    };
    const state = initWizard([assignment('3.1', '6.2')], serverProgress);
    expect(state.progress).toEqual(serverProgress);
  });

  it('updates after each successful submission', async () => {
    const submitAnswer = vi.fn().mockResolvedValue({
      assignment: { a: '3.1', b: '6.2', state: 'answered', score: 1, explanation: '' },
    });
    const api = mockApi({ submitAnswer });
    const state = {
      ...initWizard([assignment('3.1', '6.2'), assignment('3.2', '6.3')]),
      score: 1,
    };
    const outcome = await submitCurrent(state, api);
    expect(outcome.state.progress.answered).toBe(1);
    expect(outcome.state.progress.total).toBe(2);
  });
});

describe('skip and review', () => {
  it('skipped pairs come back around', () => {
    const state = initWizard([
      assignment('3.1', '6.2', 'skipped'),
      assignment('3.2', '6.3', 'answered'),
    ]);
    expect(nextOpenIndex(state, 0)).toBe(0); // wraps to the skipped card
  });

  it('jumpTo loads the stored answer for editing', () => {
    const answered: Assignment = {
      a: '3.1', b: '6.2', state: 'answered', score: -2, explanation: 'why',
    };
    const state = initWizard([answered, assignment('3.2', '6.3')]);
    const jumped = jumpTo(state, 0);
    expect(jumped.cursor).toBe(0);
    expect(jumped.score).toBe(-2);
    expect(jumped.comment).toBe('why');
    expect(jumped.tab).toBe('survey');
  });
});

describe('finalize', () => {
  it('requires every assignment answered', async () => {
    const finalize = vi.fn();
    const api = mockApi({ finalize });
    const state = initWizard([
      assignment('3.1', '6.2', 'answered'),
      assignment('3.2', '6.3', 'skipped'),
    ]);
    expect(canFinalize(state)).toBe(false);
    const next = await finalizeAll(state, api);
    expect(finalize).not.toHaveBeenCalled();
    expect(next.error).toMatch(/every pair/i);
  });

  it('locks everything after success', async () => {
    const finalize = vi.fn().mockResolvedValue({ finalized: 2 });
    const api = mockApi({ finalize });
    const state = initWizard([
      assignment('3.1', '6.2', 'answered'),
      assignment('3.2', '6.3', 'answered'),
    ]);
    expect(canFinalize(state)).toBe(true);
    const next = await finalizeAll(state, api);
    expect(next.finalized).toBe(true);
    expect(next.assignments.every((a) => a.state === 'finalized')).toBe(true);
    expect(canFinalize(next)).toBe(false);
    // no client-side edits once finalized
    expect(jumpTo(next, 0)).toBe(next);
  });
});
