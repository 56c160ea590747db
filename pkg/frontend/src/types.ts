/** Wire types for the HTTP API. Field names mirror the server documents. */

export interface User {
  id: number;
  name: string;
  email: string;
  primary_affiliation: string;
  secondary_affiliation: string;
  education: string;
  experience: string;
  acknowledge: boolean;
  is_admin: boolean;
  status: 'pending' | 'approved';
}

export interface ProblemDetail {
  code: string;
  message: string;
  detail: Record<string, unknown>;
}

export interface PublicConfig {
  goal_min: number;
  batch_size: number;
  scale_labels: Record<string, string>;
}

export interface CatalogGoal {
  number: number;
  name: string;
  color: string;
}

export interface CatalogTarget {
  id: string;
  goal: number;
  description: string;
}

export interface CatalogDoc {
  goals: CatalogGoal[];
  targets: CatalogTarget[];
}

export type AssignmentStateName = 'unanswered' | 'skipped' | 'answered' | 'finalized';

export interface Assignment {
  a: string;
  b: string;
  state: AssignmentStateName;
  score: number | null;
  explanation: string;
}

export interface Progress {
  total: number;
  answered: number;
  states: Record<AssignmentStateName, number>;
}

export interface AssignmentsDoc {
  assignments: Assignment[];
  progress: Progress;
}

export type Hue = 'blue' | 'red' | 'black' | 'gray';

export interface GraphNode {
  id: string;
  label: string;
  color: string;
}

export interface GraphEdge {
  a: string;
  b: string;
  hue: Hue;
  shade: 1 | 2 | 3 | null;
  value: number | string | null;
  status: 'evaluated' | 'unevaluated';
}

export interface GraphDoc {
  method: 'expert' | 'indicator';
  goal_a: number;
  goal_b: number;
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface VerdictEntry {
  target: string;
  description: string;
  bucket: 'beautiful' | 'ugly' | 'unevaluated';
  color: 'blue' | 'red' | 'black';
  negatives: number;
  positives: number;
  zeros: number;
}

export interface VerdictsDoc {
  method: string;
  counts: { beautiful: number; ugly: number; unevaluated: number };
  targets: VerdictEntry[];
  ugliest: Array<{ target: string; negatives: number }>;
  most_beautiful: Array<{ target: string; positives: number }>;
}

export interface PairRow {
  a: string;
  b: string;
  value: number | string;
  explanation?: string;
}

export interface PairsDoc {
  method: string;
  kind: 'positive' | 'negative';
  count: number;
  pairs: PairRow[];
}

export interface StatsDoc {
  method: string;
  total_pairs: number;
  evaluated: number;
  evaluated_pct: number;
  [key: string]: number | string;
}

export interface SynthesisDoc {
  negative: {
    common_goals: number[];
    focus_targets: string[];
    common_ugly_targets: string[];
    targets: string[];
  };
  positive: {
    common_pairs: Array<{ a: string; b: string }>;
    prioritized_targets: string[];
    common_beautiful_targets: string[];
    excluded_pairs: Array<{ a: string; b: string; blocked_by: string; reason: string }>;
  };
}
