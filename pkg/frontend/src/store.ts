/** Minimal observable app state shared across pages. */

import { ApiClient } from './api';
import type { CatalogDoc, PublicConfig, User } from './types';

export interface AppState {
  user: User | null;
  config: PublicConfig | null;
  catalog: CatalogDoc | null;
  selectedGoals: number[];
}

type Listener = (state: AppState) => void;

export class AppStore {
  readonly api: ApiClient;
  private state: AppState = { user: null, config: null, catalog: null, selectedGoals: [] };
  private listeners: Listener[] = [];

  constructor(api: ApiClient) {
    this.api = api;
  }

  get(): AppState {
    return this.state;
  }

  set(patch: Partial<AppState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  async loadStatics(): Promise<void> {
    const [config, catalog] = await Promise.all([this.api.config(), this.api.catalog()]);
    this.set({ config, catalog });
  }

  targetDescription(id: string): string {
    const target = this.state.catalog?.targets.find((t) => t.id === id);
    return target?.description ?? '';
  }

  goalName(num: number): string {
    const goal = this.state.catalog?.goals.find((g) => g.number === num);
    return goal ? `${goal.number}. ${goal.name}` : String(num);
  }

  goalColor(num: number): string {
    return this.state.catalog?.goals.find((g) => g.number === num)?.color ?? '#999';
  }
}
