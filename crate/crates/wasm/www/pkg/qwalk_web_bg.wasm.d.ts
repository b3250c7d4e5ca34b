/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const cycle_polya_partials: (a: number, b: number, c: number) => [number, number, number, number];
export const cycle_return_series: (a: number, b: number, c: number) => [number, number, number, number];
export const cycle_time_average: (a: number, b: number, c: number) => [number, number, number, number];
export const cycle_tv_distance: (a: number, b: number, c: number) => [number, number, number];
export const line_distribution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const line_variance_ratio: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
