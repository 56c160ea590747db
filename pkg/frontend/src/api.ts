/**
 * Typed client for the service API. Every non-2xx response is raised as
 * an ApiError wrapping the server's problem detail {code, message,
 * detail}, so pages can branch on stable codes instead of status text.
 */

import type {
  AssignmentsDoc,
  Assignment,
  CatalogDoc,
  GraphDoc,
  PairsDoc,
  ProblemDetail,
  PublicConfig,
  StatsDoc,
  SynthesisDoc,
  User,
  VerdictsDoc,
} from './types';

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail: Record<string, unknown>;

  constructor(status: number, problem: ProblemDetail) {
    super(problem.message);
    this.status = status;
    this.code = problem.code;
    this.detail = problem.detail ?? {};
  }
}

export class ApiClient {
  private base: string;
  token: string | null = null;

  constructor(base = '') {
    this.base = base.replace(/\/$/, '');
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers['Content-Type'] = 'application/json';
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`;
    const response = await fetch(this.base + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    let parsed: unknown = null;
    if (text) {
      try {
        parsed = JSON.parse(text);
      } catch {
        parsed = null;
      }
    }
    if (!response.ok) {
      const problem = (parsed ?? {
        code: 'http_error',
        message: `HTTP ${response.status}`,
        detail: {},
      }) as ProblemDetail;
      throw new ApiError(response.status, problem);
    }
    return parsed as T;
  }

  private get<T>(path: string): Promise<T> {
    return this.request<T>('GET', path);
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>('POST', path, body);
  }

  // public reads
  config(): Promise<PublicConfig> {
    return this.get('/api/config');
  }

  catalog(): Promise<CatalogDoc> {
    return this.get('/api/catalog');
  }

  graph(method: string, a: number, b: number): Promise<GraphDoc> {
    return this.get(`/api/graph?method=${method}&a=${a}&b=${b}`);
  }

  stats(method: string): Promise<StatsDoc> {
    return this.get(`/api/stats?method=${method}`);
  }

  resultsPairs(method: string, kind: 'positive' | 'negative'): Promise<PairsDoc> {
    return this.get(`/api/results/${kind}?method=${method}`);
  }

  resultsTargets(method: string): Promise<VerdictsDoc> {
    return this.get(`/api/results/targets?method=${method}`);
  }

  synthesis(): Promise<SynthesisDoc> {
    return this.get('/api/results/synthesis');
  }

  // account
  signup(profile: Record<string, unknown>): Promise<{ user: User }> {
    return this.post('/api/signup', profile);
  }

  async login(email: string, password: string): Promise<User> {
    const result = await this.post<{ token: string; user: User }>('/api/login', {
      email,
      password,
    });
    this.token = result.token;
    return result.user;
  }

  // survey
  selectGoals(goals: number[]): Promise<{ goals: number[] }> {
    return this.post('/api/goals/select', { goals });
  }

  requestBatch(size?: number): Promise<{ assignments: Assignment[]; exhausted: boolean }> {
    return this.post('/api/batch', size === undefined ? {} : { size });
  }

  assignments(): Promise<AssignmentsDoc> {
    return this.get('/api/assignments');
  }

  submitAnswer(a: string, b: string, score: number, explanation: string): Promise<{ assignment: Assignment }> {
    return this.post('/api/answers', { a, b, score, explanation });
  }

  skip(a: string, b: string): Promise<{ assignment: Assignment }> {
    return this.post('/api/answers/skip', { a, b });
  }

  finalize(): Promise<{ finalized: number }> {
    return this.post('/api/answers/finalize');
  }

  // admin
  pendingUsers(): Promise<{ users: User[] }> {
    return this.get('/api/users/pending');
  }

  approve(userId: number): Promise<{ user: User }> {
    return this.post(`/api/users/${userId}/approve`);
  }

  notifications(): Promise<{ notifications: Array<Record<string, unknown>> }> {
    return this.get('/api/notifications');
  }
}
