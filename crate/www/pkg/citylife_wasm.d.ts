/* tslint:disable */
/* eslint-disable */

/**
 * An interactive simulation: either a uniformly seeded grid or the
 * ring-seeded city model.
 */
export class Demo {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    alive_fraction(): number;
    converged(): boolean;
    /**
     * RGBA pixels, one per cell, row major.
     */
    frame(): Uint8Array;
    height(): number;
    /**
     * Per-ring alive fractions; empty for uniform grids.
     */
    ring_fractions(): Float64Array;
    /**
     * The ring city model: 11x11 blocks of 10x10 cells, seeded with the
     * default center-heavy gradient.
     */
    static rings(seed: bigint): Demo;
    /**
     * Advances up to `n` generations, stopping early at a fixed point.
     * Returns the number of steps actually taken.
     */
    step(n: number): number;
    t(): number;
    /**
     * Flips one cell; editing resumes a converged run.
     */
    toggle(row: number, col: number): void;
    /**
     * Uniform Bernoulli(p) seeding on a width x height grid.
     */
    static uniform(width: number, height: number, p: number, seed: bigint): Demo;
    width(): number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly demo_alive_fraction: (a: number) => number;
    readonly demo_converged: (a: number) => number;
    readonly demo_frame: (a: number) => [number, number];
    readonly demo_height: (a: number) => number;
    readonly demo_ring_fractions: (a: number) => [number, number];
    readonly demo_rings: (a: bigint) => [number, number, number];
    readonly demo_step: (a: number, b: number) => number;
    readonly demo_t: (a: number) => number;
    readonly demo_toggle: (a: number, b: number, c: number) => void;
    readonly demo_uniform: (a: number, b: number, c: number, d: bigint) => [number, number, number];
    readonly demo_width: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
