/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demo_free: (a: number, b: number) => void;
export const demo_alive_fraction: (a: number) => number;
export const demo_converged: (a: number) => number;
export const demo_frame: (a: number) => [number, number];
export const demo_height: (a: number) => number;
export const demo_ring_fractions: (a: number) => [number, number];
export const demo_rings: (a: bigint) => [number, number, number];
export const demo_step: (a: number, b: number) => number;
export const demo_t: (a: number) => number;
export const demo_toggle: (a: number, b: number, c: number) => void;
export const demo_uniform: (a: number, b: number, c: number, d: bigint) => [number, number, number];
export const demo_width: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
