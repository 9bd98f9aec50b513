/* tslint:disable */
/* eslint-disable */

/**
 * Axioms, Hasse diagram, witness states and diagonal representation of an
 * algebra file.
 */
export function analyze_algebra(algebra_json: string, goal: string): string;

/**
 * The two-projection example on `C^2`.
 */
export function demo_excd(): string;

/**
 * Compares two positive 2x2 matrices given as `[a11, a22, re a12, im a12]`.
 */
export function effect_witness(a: Float64Array, b: Float64Array): string;

/**
 * A seeded random GEA on `n` elements, as an algebra file.
 */
export function random_gea(n: number, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_algebra: (a: number, b: number, c: number, d: number) => [number, number];
    readonly demo_excd: () => [number, number];
    readonly effect_witness: (a: number, b: number, c: number, d: number) => [number, number];
    readonly random_gea: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
