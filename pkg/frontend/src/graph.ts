/**
 * Force-directed layout and SVG rendering for graph documents.
 *
 * The layout is a small spring simulation (repulsion between all nodes,
 * attraction along edges, goal-cluster anchoring) run to a fixed tick
 * budget; positions are presentation-only and not part of any contract.
 * All node colors and edge strokes come straight from the document via
 * the styling module.
 */

import { edgeColor, edgeWidth } from './styling';
import type { GraphDoc, GraphEdge, GraphNode } from './types';

export interface LayoutPoint {
  id: string;
  x: number;
  y: number;
}

export interface LayoutOptions {
  width?: number;
  height?: number;
  ticks?: number;
  seed?: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layout(doc: GraphDoc, options: LayoutOptions = {}): LayoutPoint[] {
  const width = options.width ?? 720;
  const height = options.height ?? 520;
  const ticks = options.ticks ?? 150;
  const rand = mulberry32(options.seed ?? Date.now());

  const goals = [...new Set(doc.nodes.map((n) => goalOf(n.id)))];
  const anchors = new Map<string, { x: number; y: number }>();
  goals.forEach((goal, i) => {
    const angle = (2 * Math.PI * i) / Math.max(goals.length, 1);
    anchors.set(goal, {
      x: width / 2 + (goals.length > 1 ? Math.cos(angle) * width * 0.22 : 0),
      y: height / 2 + (goals.length > 1 ? Math.sin(angle) * height * 0.22 : 0),
    });
  });

  const points = doc.nodes.map((n) => {
    const anchor = anchors.get(goalOf(n.id))!;
    return {
      id: n.id,
      x: anchor.x + (rand() - 0.5) * 120,
      y: anchor.y + (rand() - 0.5) * 120,
      vx: 0,
      vy: 0,
    };
  });
  const index = new Map(points.map((p) => [p.id, p]));

  for (let tick = 0; tick < ticks; tick++) {
    const cooling = 1 - tick / ticks;
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const p = points[i];
        const q = points[j];
        let dx = p.x - q.x;
        let dy = p.y - q.y;
        const dist2 = Math.max(dx * dx + dy * dy, 25);
        const push = (2600 / dist2) * cooling;
        const dist = Math.sqrt(dist2);
        dx /= dist;
        dy /= dist;
        p.vx += dx * push;
        p.vy += dy * push;
        q.vx -= dx * push;
        q.vy -= dy * push;
      }
    }
    for (const edge of doc.edges) {
      if (edge.status === 'unevaluated') continue; // gray mesh should not dominate
      const p = index.get(edge.a);
      const q = index.get(edge.b);
      if (!p || !q) continue;
      const dx = q.x - p.x;
      const dy = q.y - p.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = ((dist - 90) / dist) * 0.02 * cooling;
      p.vx += dx * pull;
      p.vy += dy * pull;
      q.vx -= dx * pull;
      q.vy -= dy * pull;
    }
    for (const p of points) {
      const anchor = anchors.get(goalOf(p.id))!;
      p.vx += (anchor.x - p.x) * 0.01 * cooling;
      p.vy += (anchor.y - p.y) * 0.01 * cooling;
      p.x = Math.min(width - 24, Math.max(24, p.x + p.vx));
      p.y = Math.min(height - 24, Math.max(24, p.y + p.vy));
      p.vx *= 0.55;
      p.vy *= 0.55;
    }
  }
  return points.map(({ id, x, y }) => ({ id, x, y }));
}

function goalOf(targetId: string): string {
  return targetId.split('.')[0];
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export interface RenderOptions extends LayoutOptions {
  positions?: LayoutPoint[];
}

/**
 * Render a graph document to an SVG string. Every edge carries
 * data-a/data-b/data-hue/data-shade attributes (verbatim from the
 * document) so click handlers and tests can recover the wire values.
 */
export function renderGraphSvg(doc: GraphDoc, options: RenderOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 520;
  const positions = options.positions ?? layout(doc, options);
  const at = new Map(positions.map((p) => [p.id, p]));

  const edgeMarkup = doc.edges
    .map((edge) => edgeSvg(edge, at))
    .filter((s) => s !== '')
    .join('\n  ');
  const nodeMarkup = doc.nodes
    .map((node) => nodeSvg(node, at))
    .filter((s) => s !== '')
    .join('\n  ');

  return `<svg class="interaction-graph" viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" data-method="${doc.method}" data-goal-a="${doc.goal_a}" data-goal-b="${doc.goal_b}">
  ${edgeMarkup}
  ${nodeMarkup}
</svg>`;

  function edgeSvg(edge: GraphEdge, pts: Map<string, LayoutPoint>): string {
    const p = pts.get(edge.a);
    const q = pts.get(edge.b);
    if (!p || !q) return '';
    const color = edgeColor(edge);
    const widthAttr = edgeWidth(edge);
    const shade = edge.shade === null ? '' : ` data-shade="${edge.shade}"`;
    const value = edge.value === null ? '' : ` data-value="${escapeXml(String(edge.value))}"`;
    return (
      `<line class="edge edge-${edge.status}" x1="${p.x.toFixed(1)}" y1="${p.y.toFixed(1)}"` +
      ` x2="${q.x.toFixed(1)}" y2="${q.y.toFixed(1)}" stroke="${color}"` +
      ` stroke-width="${widthAttr}" data-a="${edge.a}" data-b="${edge.b}"` +
      ` data-hue="${edge.hue}"${shade}${value}></line>`
    );
  }

  function nodeSvg(node: GraphNode, pts: Map<string, LayoutPoint>): string {
    const p = pts.get(node.id);
    if (!p) return '';
    const label = escapeXml(node.label);
    return (
      `<g class="node" data-id="${node.id}">` +
      `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="11" fill="${node.color}"></circle>` +
      `<text x="${p.x.toFixed(1)}" y="${(p.y + 24).toFixed(1)}" text-anchor="middle">${label}</text>` +
      `</g>`
    );
  }
}
