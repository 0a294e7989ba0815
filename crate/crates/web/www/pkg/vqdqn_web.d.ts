/* tslint:disable */
/* eslint-disable */

/**
 * A trained Q-function plus the validation curve that produced it.
 */
export class Agent {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `Q(right) − Q(left)` on an `n × n` grid, row-major. Columns sweep the
     * pole angle over the failure range, rows sweep angular velocity from
     * `+OMEGA_RANGE` down to `−OMEGA_RANGE`; the cart sits at rest.
     */
    actionMargin(n: number): Float64Array;
    /**
     * Runs a full training run (up to 50 000 steps, stopping early once
     * solved). `model` is `classical` or `vqc`; `encoding` is `C`, `SC` or
     * `SD` and only matters for `vqc`.
     */
    constructor(model: string, encoding: string, eta_start: number, epsilon_duration: number, gamma: number, seed: number);
    /**
     * Greedy episode from rest with the pole tilted by `theta0`; returns
     * the flattened states `[x, ẋ, θ, θ̇]` including the initial one.
     */
    rollout(theta0: number): Float64Array;
    /**
     * Sampling step at which training stopped as solved, or -1.
     */
    solvedAt(): number;
    /**
     * Greedy validation return every 100 sampling steps.
     */
    validationCurve(): Float64Array;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_agent_free: (a: number, b: number) => void;
    readonly agent_actionMargin: (a: number, b: number) => [number, number, number, number];
    readonly agent_new: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly agent_rollout: (a: number, b: number) => [number, number, number, number];
    readonly agent_solvedAt: (a: number) => number;
    readonly agent_validationCurve: (a: number) => [number, number];
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
