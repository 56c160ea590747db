import { readFileSync } from 'node:fs';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import { layout, renderGraphSvg } from '../src/graph';
import { edgeColor, edgeWidth } from '../src/styling';
import type { GraphDoc } from '../src/types';

const doc: GraphDoc = JSON.parse(
  readFileSync(join(__dirname, 'fixtures', 'graph_expert_3_6.json'), 'utf-8'),
);

function edgeLines(svg: string): Map<string, Record<string, string>> {
  const out = new Map<string, Record<string, string>>();
  for (const match of svg.matchAll(/<line class="edge[^>]*><\/line>/g)) {
    const attrs: Record<string, string> = {};
    for (const attr of match[0].matchAll(/([\w-]+)="([^"]*)"/g)) {
      attrs[attr[1]] = attr[2];
    }
    out.set(`${attrs['data-a']}|${attrs['data-b']}`, attrs);
  }
  return out;
}

describe('graph rendering from the (3,6) fixture document', () => {
  const svg = renderGraphSvg(doc, { seed: 1 });
  const lines = edgeLines(svg);

  it('renders every edge and node in the document', () => {
    expect(lines.size).toBe(doc.edges.length);
    expect(doc.edges.length).toBe(13 * 8);
    for (const node of doc.nodes) {
      expect(svg).toContain(`data-id="${node.id}"`);
      expect(svg).toContain(`fill="${node.color}"`);
    }
  });

  it('carries hue and shade verbatim from the API document', () => {
    for (const edge of doc.edges) {
      const attrs = lines.get(`${edge.a}|${edge.b}`)!;
      expect(attrs['data-hue']).toBe(edge.hue);
      if (edge.shade === null) {
        expect(attrs['data-shade']).toBeUndefined();
      } else {
        expect(attrs['data-shade']).toBe(String(edge.shade));
      }
    }
  });

  it('derives stroke styling only from the delivered hue/shade', () => {
    for (const edge of doc.edges) {
      const attrs = lines.get(`${edge.a}|${edge.b}`)!;
      expect(attrs['stroke']).toBe(edgeColor(edge));
      expect(attrs['stroke-width']).toBe(String(edgeWidth(edge)));
    }
  });

  it('distinguishes the nine evaluated edges of the fixture', () => {
    const evaluated = doc.edges.filter((e) => e.status === 'evaluated');
    expect(evaluated.length).toBe(9);
    for (const edge of evaluated) {
      const attrs = lines.get(`${edge.a}|${edge.b}`)!;
      expect(attrs['class']).toContain('edge-evaluated');
      expect(attrs['data-value']).toBe(String(edge.value));
    }
    const gray = doc.edges.filter((e) => e.status === 'unevaluated');
    for (const edge of gray.slice(0, 5)) {
      const attrs = lines.get(`${edge.a}|${edge.b}`)!;
      expect(attrs['stroke']).toBe('#c8c8c8');
      expect(attrs['data-value']).toBeUndefined();
    }
  });
});

describe('layout', () => {
  it('keeps every node inside the viewport', () => {
    const points = layout(doc, { seed: 7, width: 720, height: 520 });
    expect(points.length).toBe(doc.nodes.length);
    for (const p of points) {
      expect(p.x).toBeGreaterThanOrEqual(24);
      expect(p.x).toBeLessThanOrEqual(720 - 24);
      expect(p.y).toBeGreaterThanOrEqual(24);
      expect(p.y).toBeLessThanOrEqual(520 - 24);
    }
  });

  it('is reproducible for a fixed seed (positions are not a contract)', () => {
    const a = layout(doc, { seed: 3 });
    const b = layout(doc, { seed: 3 });
    expect(a).toEqual(b);
  });
});
