import { ApiError } from '../api';
import type { AppStore } from '../store';

const EDUCATION = [
  ['bachelor', "Bachelor's Degree"],
  ['master', "Master's or Professional Degree"],
  ['phd', 'PhD Degree'],
];

const EXPERIENCE = [
  ['5-10', 'Between 5 to 10 years'],
  ['>10', 'More than 10 years'],
];

export function renderSignup(root: HTMLElement, store: AppStore): void {
  root.innerHTML = `
    <h2>Signup</h2>
    <form id="signup-form" class="card form">
      <h3>Personal Information</h3>
      <label>Name <input name="name" required placeholder="Juan dela Cruz"></label>
      <label>Email <input name="email" type="email" required></label>
      <label>Password <input name="password" type="password" required minlength="6"></label>
      <label>Primary Affiliation (usually an office)
        <input name="primary_affiliation" required></label>
      <label>Secondary Affiliation (usually a school)
        <input name="secondary_affiliation"></label>
      <label class="inline"><input type="checkbox" name="acknowledge">
        I would like to be acknowledged in the study (only name and primary
        affiliation will be shown)</label>
      <fieldset>
        <legend>Highest Educational Attainment</legend>
        ${EDUCATION.map(
          ([value, label]) =>
            `<label class="inline"><input type="radio" name="education" value="${value}" required> ${label}</label>`,
        ).join('')}
      </fieldset>
      <fieldset>
        <legend>How long have you been in sustainability/development studies or practice?</legend>
        ${EXPERIENCE.map(
          ([value, label]) =>
            `<label class="inline"><input type="radio" name="experience" value="${value}" required> ${label}</label>`,
        ).join('')}
      </fieldset>
      <label>Professor/Contact Person <input name="curator" required placeholder="curator email or name"></label>
      <p id="signup-error" class="error" hidden></p>
      <button type="submit">Sign up</button>
    </form>`;

  const form = root.querySelector('#signup-form') as HTMLFormElement;
  const errorBox = root.querySelector('#signup-error') as HTMLElement;
  form.addEventListener('submit', async (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const profile = Object.fromEntries(data.entries()) as Record<string, unknown>;
    profile.acknowledge = data.get('acknowledge') === 'on';
    try {
      await store.api.signup(profile);
      root.innerHTML = `<div class="card"><h3>Account requested</h3>
        <p>Your account is pending approval. Your contact person has been
        notified and you will be able to log in once approved.</p></div>`;
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError ? err.message : String(err);
    }
  });
}

export function renderLogin(root: HTMLElement, store: AppStore, onLogin: () => void): void {
  root.innerHTML = `
    <h2>Log in</h2>
    <form id="login-form" class="card form">
      <label>Email <input name="email" type="email" required></label>
      <label>Password <input name="password" type="password" required></label>
      <p id="login-error" class="error" hidden></p>
      <button type="submit">Log in</button>
    </form>`;
  const form = root.querySelector('#login-form') as HTMLFormElement;
  const errorBox = root.querySelector('#login-error') as HTMLElement;
  form.addEventListener('submit', async (event) => {
    event.preventDefault();
    const data = new FormData(form);
    try {
      const user = await store.api.login(String(data.get('email')), String(data.get('password')));
      store.set({ user });
      onLogin();
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError ? err.message : String(err);
    }
  });
}
