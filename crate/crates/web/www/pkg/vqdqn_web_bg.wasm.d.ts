/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_agent_free: (a: number, b: number) => void;
export const agent_actionMargin: (a: number, b: number) => [number, number, number, number];
export const agent_new: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const agent_rollout: (a: number, b: number) => [number, number, number, number];
export const agent_solvedAt: (a: number) => number;
export const agent_validationCurve: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
