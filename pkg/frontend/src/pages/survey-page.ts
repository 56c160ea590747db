import type { AppStore } from '../store';
import {
  WizardState,
  canFinalize,
  current,
  finalizeAll,
  initWizard,
  jumpTo,
  skipCurrent,
  submitCurrent,
} from '../survey';

const SCALE_ORDER = [-3, -2, -1, 0, 1, 2, 3];

export async function renderSurvey(root: HTMLElement, store: AppStore): Promise<void> {
  const api = store.api;
  let doc = await api.assignments();
  if (doc.assignments.length === 0) {
    const batch = await api.requestBatch();
    doc = await api.assignments();
    if (batch.exhausted && doc.assignments.length === 0) {
      root.innerHTML = `<div class="card"><p>No target pairs are available for your
        selected goals right now.</p></div>`;
      return;
    }
  }
  let state = initWizard(doc.assignments, doc.progress);

  const update = (next: WizardState) => {
    state = next;
    draw();
  };

  function draw(): void {
    const labels = store.get().config?.scale_labels ?? {};
    root.innerHTML = `
      <div class="survey-header">
        <nav class="tabs">
          <button id="tab-survey" class="${state.tab === 'survey' ? 'active' : ''}">Survey Proper</button>
          <button id="tab-review" class="${state.tab === 'review' ? 'active' : ''}">Review and Finalize Answers</button>
        </nav>
        <span id="progress">Answered: ${state.progress.answered}/${state.progress.total}</span>
      </div>
      <div id="survey-body"></div>`;
    root.querySelector('#tab-survey')!.addEventListener('click', () => update({ ...state, tab: 'survey' }));
    root.querySelector('#tab-review')!.addEventListener('click', () => update({ ...state, tab: 'review' }));
    const body = root.querySelector('#survey-body') as HTMLElement;
    if (state.tab === 'survey') drawCard(body, labels);
    else drawReview(body, labels);
  }

  function drawCard(body: HTMLElement, labels: Record<string, string>): void {
    const card = current(state);
    if (!card || state.finalized) {
      body.innerHTML = `<div class="card"><p>All answers are finalized. Thank you!</p>
        <button id="more-pairs">Request another batch</button></div>`;
      body.querySelector('#more-pairs')!.addEventListener('click', async () => {
        await api.requestBatch();
        const refreshed = await api.assignments();
        update(initWizard(refreshed.assignments, refreshed.progress));
      });
      return;
    }
    body.innerHTML = `
      <div class="pair-cards">
        ${pairCard(card.a)}
        ${pairCard(card.b)}
      </div>
      <div class="scale" role="radiogroup">
        ${SCALE_ORDER.map((value) => {
          const label = labels[String(value)] ?? '';
          const pretty = label.charAt(0).toUpperCase() + label.slice(1);
          const active = state.score === value ? ' active' : '';
          return `<button class="scale-point${active}" data-score="${value}">
            <span class="scale-value">${value > 0 ? `+${value}` : value}</span>
            <span class="scale-label">${pretty}</span></button>`;
        }).join('')}
      </div>
      <label class="comment">Key Interactions Comments/Additional Notes
        <textarea id="comment" rows="3">${state.comment}</textarea></label>
      <p id="card-error" class="error" ${state.error ? '' : 'hidden'}>${state.error ?? ''}</p>
      <div class="actions">
        <button id="skip">Skip</button>
        <button id="submit" class="primary">Submit</button>
      </div>`;

    for (const button of body.querySelectorAll<HTMLButtonElement>('.scale-point')) {
      button.addEventListener('click', () => {
        update({ ...state, score: Number(button.dataset.score), error: null });
      });
    }
    const commentBox = body.querySelector('#comment') as HTMLTextAreaElement;
    commentBox.addEventListener('input', () => {
      state = { ...state, comment: commentBox.value };
    });
    body.querySelector('#skip')!.addEventListener('click', async () => {
      update(await skipCurrent(state, api));
    });
    body.querySelector('#submit')!.addEventListener('click', async () => {
      const outcome = await submitCurrent(state, api);
      update(outcome.state);
    });
  }

  function pairCard(targetId: string): string {
    const goal = Number(targetId.split('.')[0]);
    return `<div class="card target-card" style="border-top: 6px solid ${store.goalColor(goal)}">
      <h4>${store.goalName(goal)}</h4>
      <div class="target-id">${targetId}</div>
      <p>${store.targetDescription(targetId)}</p>
    </div>`;
  }

  function drawReview(body: HTMLElement, labels: Record<string, string>): void {
    const rows = state.assignments
      .map((a, i) => {
        const label = a.score === null ? '' : (labels[String(a.score)] ?? '');
        return `<tr data-index="${i}" class="state-${a.state}">
          <td>${a.a} &ndash; ${a.b}</td>
          <td>${a.state}</td>
          <td>${a.score ?? ''} ${label}</td>
          <td>${a.explanation}</td>
          <td>${state.finalized ? '' : `<button class="edit" data-index="${i}">${a.state === 'unanswered' || a.state === 'skipped' ? 'Answer' : 'Edit'}</button>`}</td>
        </tr>`;
      })
      .join('');
    body.innerHTML = `
      <table class="review">
        <thead><tr><th>Pair</th><th>State</th><th>Score</th><th>Comment</th><th></th></tr></thead>
        <tbody>${rows}</tbody>
      </table>
      <p id="finalize-error" class="error" ${state.error ? '' : 'hidden'}>${state.error ?? ''}</p>
      <button id="finalize" class="primary" ${canFinalize(state) ? '' : 'disabled'}>
        Submit final answers</button>
      <p class="hint">Finalized scores are immutable and immediately reflected in the
        public results.</p>`;
    for (const button of body.querySelectorAll<HTMLButtonElement>('button.edit')) {
      button.addEventListener('click', () => update(jumpTo(state, Number(button.dataset.index))));
    }
    body.querySelector('#finalize')!.addEventListener('click', async () => {
      update(await finalizeAll(state, api));
    });
  }

  draw();
}
