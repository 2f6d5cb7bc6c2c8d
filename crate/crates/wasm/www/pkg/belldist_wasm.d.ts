/* tslint:disable */
/* eslint-disable */

/**
 * What a violation `v` certifies for `n` qubits.
 */
export function classify_violation(v: number, n: number): string;

/**
 * Optimized MBK value of `p |GHZ><GHZ| + (1-p) I/2^n`, with its
 * classification and GHZ overlap.
 */
export function explore_noisy_ghz(n: number, p: number, restarts: number, seed: number): string;

/**
 * Partial-transpose minimum eigenvalue across every bipartition of a named
 * state: `ghz`, `noisy-ghz` (uses `p`), `ghz-padded` or `dur`.
 */
export function scan_state(kind: string, n: number, p: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classify_violation: (a: number, b: number) => [number, number, number, number];
    readonly explore_noisy_ghz: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly scan_state: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
