/* tslint:disable */
/* eslint-disable */

/**
 * Pólya partial products `P(T)` matching [`cycle_return_series`];
 * `P(steps)` is the fractional-recurrence number at that horizon.
 */
export function cycle_polya_partials(n: number, theta_deg: number, steps: number): Float64Array;

/**
 * Origin-return series `p0(t)`, `t = 0..=steps`, on the n-cycle with the
 * symmetric initial spin.
 */
export function cycle_return_series(n: number, theta_deg: number, steps: number): Float64Array;

/**
 * Time-averaged distribution over `horizon` steps on the n-cycle.
 */
export function cycle_time_average(n: number, theta_deg: number, horizon: number): Float64Array;

/**
 * Distance of that time average to the uniform distribution.
 */
export function cycle_tv_distance(n: number, theta_deg: number, horizon: number): number;

/**
 * Position distribution of a line walk after `steps` steps, over the window
 * `−steps ..= +steps` (length `2·steps + 1`).
 */
export function line_distribution(theta_deg: number, xi_deg: number, zeta_deg: number, delta_deg: number, eta_deg: number, steps: number): Float64Array;

/**
 * `σ²/t²` of the same walk — compare against `1 − sin θ`.
 */
export function line_variance_ratio(theta_deg: number, xi_deg: number, zeta_deg: number, delta_deg: number, eta_deg: number, steps: number): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cycle_polya_partials: (a: number, b: number, c: number) => [number, number, number, number];
    readonly cycle_return_series: (a: number, b: number, c: number) => [number, number, number, number];
    readonly cycle_time_average: (a: number, b: number, c: number) => [number, number, number, number];
    readonly cycle_tv_distance: (a: number, b: number, c: number) => [number, number, number];
    readonly line_distribution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly line_variance_ratio: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
