import { ApiError } from '../api';
import { renderGraphSvg } from '../graph';
import { edgeLabel } from '../styling';
import type { AppStore } from '../store';
import type { GraphDoc } from '../types';

export function renderGraphExplorer(root: HTMLElement, store: AppStore): void {
  const goals = store.get().catalog?.goals ?? [];
  const options = goals
    .map((g) => `<option value="${g.number}">${g.number}. ${g.name}</option>`)
    .join('');
  root.innerHTML = `
    <h2>Graph Query</h2>
    <p>Select two SDGs to generate the interaction graph between their targets.
      Nodes use the official goal colors; edge colors follow the evaluation
      (blue positive/synergy, red negative/trade-off, black zero/nonclassified,
      gray unevaluated).</p>
    <form id="graph-form" class="toolbar">
      <label>Method
        <select id="graph-method">
          <option value="expert">Expert evaluation</option>
          <option value="indicator">Indicator data</option>
        </select></label>
      <label>First SDG <select id="graph-a">${options}</select></label>
      <label>Second SDG <select id="graph-b">${options}</select></label>
      <button type="submit" class="primary">Show graph</button>
      <button type="button" id="graph-reset">Reset Graph</button>
    </form>
    <p id="graph-error" class="error" hidden></p>
    <div id="graph-canvas"></div>
    <div id="graph-detail" class="card" hidden></div>`;

  const canvas = root.querySelector('#graph-canvas') as HTMLElement;
  const detail = root.querySelector('#graph-detail') as HTMLElement;
  const errorBox = root.querySelector('#graph-error') as HTMLElement;
  const form = root.querySelector('#graph-form') as HTMLFormElement;
  let lastDoc: GraphDoc | null = null;

  async function show(): Promise<void> {
    const method = (root.querySelector('#graph-method') as HTMLSelectElement).value;
    const a = Number((root.querySelector('#graph-a') as HTMLSelectElement).value);
    const b = Number((root.querySelector('#graph-b') as HTMLSelectElement).value);
    errorBox.hidden = true;
    try {
      lastDoc = await store.api.graph(method, a, b);
      canvas.innerHTML = renderGraphSvg(lastDoc);
      wire();
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError ? err.message : String(err);
    }
  }

  function wire(): void {
    detail.hidden = true;
    const labels = store.get().config?.scale_labels ?? {};
    for (const line of canvas.querySelectorAll<SVGLineElement>('line.edge')) {
      line.addEventListener('click', () => {
        const a = line.dataset.a!;
        const b = line.dataset.b!;
        const edge = lastDoc?.edges.find((e) => e.a === a && e.b === b);
        if (!edge) return;
        detail.hidden = false;
        detail.innerHTML = `<h4>${a} &ndash; ${b}</h4>
          <p>${store.targetDescription(a)}<br>${store.targetDescription(b)}</p>
          <p>Evaluation: <strong>${edgeLabel(edge, labels)}</strong></p>`;
      });
    }
    for (const node of canvas.querySelectorAll<SVGGElement>('g.node')) {
      node.addEventListener('click', () => {
        const id = node.dataset.id!;
        detail.hidden = false;
        detail.innerHTML = `<h4>${id}</h4><p>${store.targetDescription(id)}</p>`;
      });
    }
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void show();
  });
  root.querySelector('#graph-reset')!.addEventListener('click', () => {
    canvas.innerHTML = '';
    detail.hidden = true;
    lastDoc = null;
  });
}
