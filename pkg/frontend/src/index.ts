/**
 * Bindings over the simplicia core.
 *
 * The core is consumed strictly through its external surfaces: the CLI, the
 * edge-list file format, and the versioned JSON report schema.  No counting
 * logic lives on this side; every result is the core's own output, kept
 * byte-for-byte (the parsed report and the raw JSON text are both returned).
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import type {
  AnalysisReport,
  AnalyzeOptions,
  EdgeInput,
  SynthVerification,
} from "./types.js";

export * from "./types.js";

const pythonBin = process.env.SIMPLICIA_PYTHON ?? "python3";

export class CoreError extends Error {
  constructor(message: string, public readonly exitCode: number | null) {
    super(message);
    this.name = "CoreError";
  }
}

function runCore(args: string[]): string {
  try {
    return execFileSync(pythonBin, ["-m", "simplicia", ...args], {
      encoding: "utf-8",
      maxBuffer: 1 << 28,
    });
  } catch (err) {
    const failure = err as { status?: number | null; stderr?: string | Buffer };
    const detail = failure.stderr?.toString().trim() || String(err);
    throw new CoreError(detail, failure.status ?? null);
  }
}

function normalizeEdges(edges: EdgeInput): Array<[number, number]> {
  if (edges.length === 0) return [];
  if (typeof edges[0] === "number") {
    const flat = edges as ReadonlyArray<number>;
    if (flat.length % 2 !== 0) {
      throw new CoreError("flat edge buffer must have even length", null);
    }
    const out: Array<[number, number]> = [];
    for (let i = 0; i < flat.length; i += 2) out.push([flat[i], flat[i + 1]]);
    return out;
  }
  return (edges as ReadonlyArray<readonly [number, number]>).map(([u, v]) => [u, v]);
}

/** Serialize edges in the core's canonical edge-list format. */
export function toEdgeList(edges: EdgeInput, n?: number): string {
  const pairs = normalizeEdges(edges);
  const count =
    n ?? (pairs.length ? Math.max(...pairs.flat()) + 1 : 0);
  const body = pairs
    .slice()
    .sort((a, b) => a[0] - b[0] || a[1] - b[1])
    .map(([u, v]) => `${u} ${v}`)
    .join("\n");
  return `V ${count}\nE\n` + (body ? body + "\n" : "");
}

function withTempFile<T>(content: string, fn: (path: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "simplicia-"));
  const path = join(dir, "graph.edges");
  try {
    writeFileSync(path, content, "utf-8");
    return fn(path);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

export interface AnalyzeResult {
  report: AnalysisReport;
  /** The core's JSON output, byte-for-byte. */
  raw: string;
}

function analyzeFile(path: string, options: AnalyzeOptions): AnalyzeResult {
  const args = ["analyze", path];
  if (options.maxDim !== undefined) args.push("--max-dim", String(options.maxDim));
  if (options.baseline) args.push("--baseline", String(options.baseline));
  if (options.motifs) args.push("--motifs");
  if (options.strict) args.push("--strict");
  if (options.seed !== undefined) args.push("--seed", String(options.seed));
  if (options.threads !== undefined) args.push("--threads", String(options.threads));
  const raw = runCore(args);
  return { report: JSON.parse(raw) as AnalysisReport, raw };
}

/** Analyze an edge list (pairs or flat buffer) or an existing edge-list file. */
export function analyze(
  input: EdgeInput | string,
  options: AnalyzeOptions = {},
): AnalyzeResult {
  if (typeof input === "string") {
    return analyzeFile(input, options);
  }
  return withTempFile(toEdgeList(input, options.n), (path) => analyzeFile(path, options));
}

/** Simplex counts [N_0, N_1, ...] up to the top non-empty dimension; empty
 * graph yields []. */
export function countSimplices(input: EdgeInput | string, n?: number): number[] {
  const { report } = analyze(input, { n });
  const counts = [report.input.vertices];
  for (const row of report.dimensions) counts.push(row.simplices);
  while (counts.length > 0 && counts[counts.length - 1] === 0) counts.pop();
  return counts;
}

/** Almost-simplex census [[N^A_d, completed_d], ...] for d = 1.. */
export function countAds(input: EdgeInput | string, n?: number): Array<[number, number]> {
  const { report } = analyze(input, { n });
  const rows: Array<[number, number]> = report.dimensions.map((row) => [
    row.almost,
    row.completed,
  ]);
  while (rows.length > 0 && rows[rows.length - 1][0] === 0) rows.pop();
  return rows;
}

/** Seeded random digraph with exactly m edges, in edge-list text form. */
export function generateEr(n: number, m: number, seed = 0): string {
  return runCore(["gen-er", "--n", String(n), "--m", String(m), "--seed", String(seed)]);
}

export interface SynthesisResult {
  graph: string;
  verification: SynthVerification;
}

/** Construct a graph matching the prescribed p signature, e.g. "1/3,1/5". */
export function synthesize(target: string, bound?: number): SynthesisResult {
  const dir = mkdtempSync(join(tmpdir(), "simplicia-"));
  const out = join(dir, "synth.edges");
  try {
    const args = ["synth", "--target", target, "--out", out];
    if (bound !== undefined) args.push("--bound", String(bound));
    const raw = runCore(args);
    return {
      graph: readFileSync(out, "utf-8"),
      verification: JSON.parse(raw) as SynthVerification,
    };
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/** The native core's version string. */
export function coreVersion(): string {
  return runCore(["--version"]).trim().replace(/^simplicia\s+/, "");
}
