/**
 * Hash-routed single-page client for the SDG interaction study.
 * Public pages (graphs, results, synthesis) need no account; the survey
 * flow requires login and approval; the curator dashboard requires the
 * administrator role.
 */

import { ApiClient } from './api';
import { AppStore } from './store';
import { renderAdmin } from './pages/admin';
import { renderGoalSelection } from './pages/goals';
import { renderGraphExplorer } from './pages/graphs';
import { renderResults, renderSynthesis } from './pages/results';
import { renderLogin, renderSignup } from './pages/signup';
import { renderSurvey } from './pages/survey-page';

const store = new AppStore(new ApiClient(''));

function nav(): string {
  const user = store.get().user;
  const links = [
    ['#/graphs', 'Graphs'],
    ['#/results/expert', 'Results: Expert'],
    ['#/results/indicator', 'Results: Indicator'],
    ['#/synthesis', 'Synthesis'],
  ];
  if (!user) {
    links.push(['#/login', 'Log in'], ['#/signup', 'Sign up']);
  } else {
    links.push(['#/goals', 'Select Goals'], ['#/survey', 'Survey']);
    if (user.is_admin) links.push(['#/admin', 'Dashboard']);
  }
  return links
    .map(([href, label]) => `<a href="${href}" class="${location.hash.startsWith(href) ? 'active' : ''}">${label}</a>`)
    .join('');
}

async function route(): Promise<void> {
  const header = document.getElementById('nav')!;
  const main = document.getElementById('app')!;
  header.innerHTML = nav();
  const user = store.get().user;
  const hash = location.hash || '#/graphs';
  try {
    if (hash.startsWith('#/signup')) renderSignup(main, store);
    else if (hash.startsWith('#/login')) {
      renderLogin(main, store, () => {
        location.hash = store.get().user?.is_admin ? '#/admin' : '#/goals';
      });
    } else if (hash.startsWith('#/goals')) {
      if (!user) location.hash = '#/login';
      else renderGoalSelection(main, store, () => (location.hash = '#/survey'));
    } else if (hash.startsWith('#/survey')) {
      if (!user) location.hash = '#/login';
      else await renderSurvey(main, store);
    } else if (hash.startsWith('#/admin')) {
      if (!user) location.hash = '#/login';
      else await renderAdmin(main, store);
    } else if (hash.startsWith('#/results/')) {
      await renderResults(main, store, hash.split('/')[2] ?? 'expert');
    } else if (hash.startsWith('#/synthesis')) {
      await renderSynthesis(main, store);
    } else {
      renderGraphExplorer(main, store);
    }
  } catch (err) {
    main.innerHTML = `<p class="error">${String(err)}</p>`;
  }
}

window.addEventListener('hashchange', () => void route());
store.subscribe(() => {
  document.getElementById('nav')!.innerHTML = nav();
});

void store
  .loadStatics()
  .catch(() => undefined)
  .then(() => route());
