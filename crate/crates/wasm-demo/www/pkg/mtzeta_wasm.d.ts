/* tslint:disable */
/* eslint-disable */

/**
 * `omega_p(k1, k2, k3)` mod `p` for primes `5 <= p <= primes_up_to`, with
 * the residue pattern for non-positive indices.
 */
export function finite_residues(k1: number, k2: number, k3: number, primes_up_to: number): string;

/**
 * Directed limit of omega_U at `(-m1, -m2, -m3)` along `direction`
 * (three comma-separated reals), sampled at `deltas`.
 */
export function limit_sweep(m1: number, m2: number, m3: number, direction: string, deltas: string, tol: number): string;

/**
 * `|zeta_MT|` along the normal approach to the hyperplane `s1 + s3 = 1`
 * at `(a, s2, 1 - a)`: the point at distance `d` is
 * `(a - d/2, s2, 1 - a - d/2)`. A simple pole shows as `d * |zeta_MT|`
 * settling to a constant.
 */
export function pole_scan(a: number, s2: number, steps: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly finite_residues: (a: number, b: number, c: number, d: number) => [number, number];
    readonly limit_sweep: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly pole_scan: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
