import type { AppStore } from '../store';

const BUCKET_STYLE: Record<string, string> = {
  blue: 'verdict-beautiful',
  red: 'verdict-ugly',
  black: 'verdict-unevaluated',
};

export async function renderResults(root: HTMLElement, store: AppStore, method: string): Promise<void> {
  const api = store.api;
  const [stats, verdicts, positive, negative] = await Promise.all([
    api.stats(method),
    api.resultsTargets(method),
    api.resultsPairs(method, 'positive'),
    api.resultsPairs(method, 'negative'),
  ]);

  const statRows = Object.entries(stats)
    .filter(([key]) => key !== 'method')
    .map(([key, value]) => `<tr><td>${key.replace(/_/g, ' ')}</td><td>${value}</td></tr>`)
    .join('');

  root.innerHTML = `
    <h2>Results &mdash; ${method === 'expert' ? 'Expert evaluation' : 'Indicator data'}</h2>
    <section class="card">
      <h3>Progress</h3>
      <table class="stats">${statRows}</table>
    </section>
    <section class="card">
      <h3>Targets (${verdicts.counts.beautiful} beautiful / ${verdicts.counts.ugly} ugly /
        ${verdicts.counts.unevaluated} unevaluated)</h3>
      <p class="hint">Beautiful targets are colored blue, ugly targets red, targets
        without any evaluation black.</p>
      <ul class="target-list">
        ${verdicts.targets
          .map(
            (t) => `<li class="${BUCKET_STYLE[t.color]}" title="-${t.negatives} / +${t.positives}">
              <strong>${t.target}</strong> ${t.description}</li>`,
          )
          .join('')}
      </ul>
    </section>
    <section class="card">
      <h3>${method === 'expert' ? 'Negative interactions' : 'Trade-offs'} (${negative.count})</h3>
      <ul>${negative.pairs
        .map(
          (p) =>
            `<li><strong>${p.a} &ndash; ${p.b}</strong> (${p.value})${p.explanation ? `: <em>${p.explanation}</em>` : ''}</li>`,
        )
        .join('')}</ul>
    </section>
    <section class="card">
      <h3>${method === 'expert' ? 'Positive interactions' : 'Synergies'} (${positive.count})</h3>
      <ul class="pair-columns">${positive.pairs
        .map((p) => `<li>${p.a} &ndash; ${p.b} (${p.value})</li>`)
        .join('')}</ul>
    </section>`;
}

export async function renderSynthesis(root: HTMLElement, store: AppStore): Promise<void> {
  const doc = await store.api.synthesis();
  const pairList = (pairs: Array<{ a: string; b: string }>) =>
    pairs.map((p) => `<li>${p.a} &ndash; ${p.b}</li>`).join('') || '<li>none yet</li>';
  const targetList = (targets: string[]) =>
    targets.map((t) => `<li>${t} ${store.targetDescription(t)}</li>`).join('') || '<li>none yet</li>';

  root.innerHTML = `
    <h2>Two-method synthesis</h2>
    <section class="card negative">
      <h3>Negative answer &mdash; resolve these</h3>
      <p>Goals with negative intra-goal interactions under both methods:
        ${doc.negative.common_goals.map((g) => store.goalName(g)).join('; ') || 'none yet'}</p>
      <h4>Commonly involved targets</h4>
      <ul>${targetList(doc.negative.focus_targets)}</ul>
      <h4>Ugly targets common to both methods</h4>
      <ul>${targetList(doc.negative.common_ugly_targets)}</ul>
    </section>
    <section class="card positive">
      <h3>Positive answer &mdash; prioritize these</h3>
      <h4>Target pairs positive under both methods</h4>
      <ul>${pairList(doc.positive.common_pairs)}</ul>
      <h4>Targets to prioritize</h4>
      <ul>${targetList(doc.positive.prioritized_targets)}</ul>
      <h4>Beautiful targets common to both methods</h4>
      <ul>${targetList(doc.positive.common_beautiful_targets)}</ul>
      ${
        doc.positive.excluded_pairs.length
          ? `<p class="hint">Excluded: ${doc.positive.excluded_pairs
              .map((e) => `${e.a}&ndash;${e.b} (${e.reason})`)
              .join('; ')}</p>`
          : ''
      }
    </section>`;
}
