import { ApiError } from '../api';
import type { AppStore } from '../store';

export function renderGoalSelection(root: HTMLElement, store: AppStore, onDone: () => void): void {
  const state = store.get();
  const minimum = state.config?.goal_min ?? 2;
  const goals = state.catalog?.goals ?? [];
  root.innerHTML = `
    <h2>Add Goals</h2>
    <p>Select the SDGs best aligned with your expertise
      (minimum of ${minimum} goal${minimum === 1 ? '' : 's'}).</p>
    <div class="goal-grid">
      ${goals
        .map(
          (g) => `
        <label class="goal-card" style="background:${g.color}">
          <input type="checkbox" value="${g.number}">
          <span class="goal-number">${g.number}</span>
          <span class="goal-name">${g.name}</span>
        </label>`,
        )
        .join('')}
    </div>
    <p id="goal-error" class="error" hidden></p>
    <p>Selected: <span id="goal-count">0</span></p>
    <button id="goal-submit">Save selection</button>`;

  const errorBox = root.querySelector('#goal-error') as HTMLElement;
  const counter = root.querySelector('#goal-count') as HTMLElement;
  const boxes = [...root.querySelectorAll<HTMLInputElement>('input[type=checkbox]')];
  for (const box of boxes) {
    box.addEventListener('change', () => {
      counter.textContent = String(boxes.filter((b) => b.checked).length);
    });
  }
  root.querySelector('#goal-submit')!.addEventListener('click', async () => {
    const selected = boxes.filter((b) => b.checked).map((b) => Number(b.value));
    if (selected.length < minimum) {
      errorBox.hidden = false;
      errorBox.textContent = `Please select at least ${minimum} goal${minimum === 1 ? '' : 's'}.`;
      return;
    }
    try {
      const result = await store.api.selectGoals(selected);
      store.set({ selectedGoals: result.goals });
      onDone();
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError ? err.message : String(err);
    }
  });
}
