import { ApiError } from '../api';
import type { AppStore } from '../store';

export async function renderAdmin(root: HTMLElement, store: AppStore): Promise<void> {
  const api = store.api;

  async function draw(): Promise<void> {
    try {
      const [pending, notes] = await Promise.all([api.pendingUsers(), api.notifications()]);
      root.innerHTML = `
        <h2>Curator dashboard</h2>
        <section class="card">
          <h3>Pending approvals (${pending.users.length})</h3>
          <table class="review">
            <thead><tr><th>Name</th><th>Email</th><th>Affiliation</th><th>Experience</th><th></th></tr></thead>
            <tbody>
              ${pending.users
                .map(
                  (u) => `<tr>
                    <td>${u.name}</td><td>${u.email}</td>
                    <td>${u.primary_affiliation}</td><td>${u.experience}</td>
                    <td><button class="approve primary" data-id="${u.id}">Approve</button></td>
                  </tr>`,
                )
                .join('')}
            </tbody>
          </table>
        </section>
        <section class="card">
          <h3>Notifications</h3>
          <ul>${notes.notifications
            .map((n) => `<li>[${n.created_at}] ${n.kind}: ${JSON.stringify(n.payload)}</li>`)
            .join('')}</ul>
        </section>
        <p id="admin-error" class="error" hidden></p>`;
      for (const button of root.querySelectorAll<HTMLButtonElement>('button.approve')) {
        button.addEventListener('click', async () => {
          const errorBox = root.querySelector('#admin-error') as HTMLElement;
          try {
            await api.approve(Number(button.dataset.id));
            await draw();
          } catch (err) {
            errorBox.hidden = false;
            errorBox.textContent = err instanceof ApiError ? err.message : String(err);
          }
        });
      }
    } catch (err) {
      root.innerHTML = `<p class="error">${err instanceof ApiError ? err.message : String(err)}</p>`;
    }
  }

  await draw();
}
