import { z } from "zod";

export type XY = [number, number];

const xy = z.tuple([z.number(), z.number()]);

export const TypeSchema = z.object({
  n: z.number().int().min(2),
  steiner: z.number().int().min(0),
  edges: z.array(z.tuple([z.number().int(), z.number().int()])),
  cyclic: z.record(z.string(), z.array(z.number().int())),
});

export const TreeSchema = z.object({
  type: TypeSchema,
  positions: z.record(z.string(), xy),
  length: z.number().finite(),
  directions: z.record(z.string(), z.array(xy)).optional(),
});

export const SolveResponseSchema = z.object({
  n: z.number().int().min(2),
  ambiguous: z.boolean(),
  tie_tolerance: z.number(),
  candidates: z.array(TreeSchema),
  minimal: z.array(TreeSchema).min(1),
  runner_up_gap: z.number().nullable(),
});

export const WallHitSchema = z.object({
  t_star: z.number().min(0).max(1),
  config: z.array(xy).min(2),
  types: z.array(TypeSchema).length(2),
  lengths: z.tuple([z.number(), z.number()]),
  gap: z.number().min(0),
});

export const WallResponseSchema = z.union([
  z.object({ noWall: z.literal(true), detail: z.string().optional() }),
  WallHitSchema,
]);

export type SolveResponse = z.infer<typeof SolveResponseSchema>;
export type Tree = z.infer<typeof TreeSchema>;
export type WallHit = z.infer<typeof WallHitSchema>;
export type WallResponse = z.infer<typeof WallResponseSchema>;

/** Stable identity of the winning type (terminal-labeled tree with orders). */
export function winnerKey(solve: SolveResponse): string {
  const t = solve.minimal[0].type;
  const cyclic = Object.keys(t.cyclic)
    .sort((a, b) => Number(a) - Number(b))
    .map((k) => `${k}:${t.cyclic[k].join(",")}`)
    .join(";");
  return `${t.n}|${cyclic}`;
}
