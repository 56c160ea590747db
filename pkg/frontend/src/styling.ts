/**
 * Visual mapping for server-delivered edge styles. The hue and shade
 * come from the API graph document and are never recomputed here; this
 * module only turns them into concrete stroke colors and widths.
 */

import type { GraphEdge, Hue } from './types';

const SHADE_COLORS: Record<'blue' | 'red', Record<1 | 2 | 3, string>> = {
  blue: { 1: '#9ecbff', 2: '#4d94e8', 3: '#0b57b5' },
  red: { 1: '#ffb0a8', 2: '#f06a5e', 3: '#c22114' },
};

const FLAT_COLORS: Record<Hue, string> = {
  blue: '#2f7bd9',
  red: '#d9442f',
  black: '#222222',
  gray: '#c8c8c8',
};

export function edgeColor(edge: Pick<GraphEdge, 'hue' | 'shade'>): string {
  if ((edge.hue === 'blue' || edge.hue === 'red') && edge.shade !== null) {
    return SHADE_COLORS[edge.hue][edge.shade];
  }
  return FLAT_COLORS[edge.hue];
}

export function edgeWidth(edge: Pick<GraphEdge, 'hue' | 'shade'>): number {
  if (edge.hue === 'gray') return 1;
  return edge.shade === null ? 2 : 1 + edge.shade;
}

export function edgeLabel(edge: GraphEdge, scaleLabels: Record<string, string>): string {
  if (edge.status === 'unevaluated') return 'unevaluated';
  if (typeof edge.value === 'number') {
    const label = scaleLabels[String(edge.value)] ?? '';
    return label ? `${edge.value} (${label})` : String(edge.value);
  }
  return String(edge.value);
}
