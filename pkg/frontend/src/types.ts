/** Exact rational carried as decimal strings plus a float convenience value. */
export interface Rational {
  num: string;
  den: string;
  float: number;
}

export interface DimensionRow {
  d: number;
  simplices: number;
  almost: number;
  completed: number;
  rejected_pairs: number;
  p: Rational | null;
  p_hat: Rational | null;
  p_hat2: Rational | null;
  cap_adjacent: boolean;
  beyond_top: boolean;
}

export interface BaselineRow {
  d: number;
  simplices_mean: Rational;
  simplices_std: number | null;
  p_mean: Rational | null;
  p_std: number | null;
  p_defined: number;
  p_hat_mean: Rational | null;
  p_hat_std: number | null;
  p_hat_defined: number;
}

export interface BaselineBlock {
  replicates: number;
  master_seed: number;
  seeds: number[];
  dimensions: BaselineRow[];
}

export interface MotifCounts {
  total: number;
  completed: number;
  ratio: Rational | null;
  strict_total: number;
  strict_completed: number;
  strict_ratio: Rational | null;
}

export interface MotifBlock {
  strict: boolean;
  divergent: MotifCounts;
  chain: MotifCounts;
  convergent: MotifCounts;
  edge_density: Rational | null;
  chance_level: Rational | null;
}

export interface AnalysisReport {
  schema: string;
  tool: { name: string; version: string };
  input: { path: string | null; vertices: number; edges: number };
  truncated: boolean;
  max_dimension: number;
  dimensions: DimensionRow[];
  baseline: BaselineBlock | null;
  motifs: MotifBlock | null;
  wall_time_ms: number | null;
}

export interface SynthVerification {
  schema: string;
  target: Rational[];
  measured: Rational[];
  match: boolean;
  vertices: number;
  edges: number;
  output: string | null;
}

/** Edges as [u, v] pairs or as a flat [u0, v0, u1, v1, ...] buffer. */
export type EdgeInput = ReadonlyArray<readonly [number, number]> | ReadonlyArray<number>;

export interface AnalyzeOptions {
  /** Explicit vertex count; defaults to max vertex id + 1. */
  n?: number;
  maxDim?: number;
  baseline?: number;
  motifs?: boolean;
  strict?: boolean;
  seed?: number;
  threads?: number;
}
