// Pure board model: heap heights plus a level coloring become token stacks.
// Kept free of DOM code so it can be unit tested directly.

import type { TokenColor } from "./types.js";

export interface Token {
    level: number;
    color: TokenColor;
    /** True when a pending selection would remove this token. */
    pendingRemoval: boolean;
}

export type Stack = Token[];

/**
 * Color of the given level (1-based) under a coloring string where
 * character i is the color of level i + 1.
 */
export function levelColor(colors: string, level: number): TokenColor {
    if (!Number.isInteger(level) || level < 1 || level > colors.length) {
        throw new RangeError(`level ${level} outside the colored range 1..${colors.length}`);
    }
    const letter = colors[level - 1];
    if (letter !== "R" && letter !== "G") {
        throw new RangeError(`unexpected color letter ${JSON.stringify(letter)} at level ${level}`);
    }
    return letter;
}

/**
 * Token stacks for every heap, bottom to top. `pending` gives the
 * tentative target height per heap; pass null entries for untouched heaps.
 */
export function buildStacks(
    heaps: number[],
    colors: string,
    pending?: (number | null)[],
): Stack[] {
    return heaps.map((height, heap) => {
        const target = pending?.[heap] ?? null;
        const stack: Stack = [];
        for (let level = 1; level <= height; level++) {
            stack.push({
                level,
                color: levelColor(colors, level),
                pendingRemoval: target !== null && level > target,
            });
        }
        return stack;
    });
}

/** Stack colors as strings, bottom to top, e.g. (4,2) under GRGG -> ["GRGG", "GR"]. */
export function stackLetters(stacks: Stack[]): string[] {
    return stacks.map((stack) => stack.map((token) => token.color).join(""));
}

/** Resolve a per-heap pending selection into a full target vector. */
export function pendingTargets(heaps: number[], pending: (number | null)[]): number[] {
    return heaps.map((height, heap) => pending[heap] ?? height);
}

/** Number of tokens a pending selection would remove. */
export function pendingRemovalCount(heaps: number[], pending: (number | null)[]): number {
    const targets = pendingTargets(heaps, pending);
    return heaps.reduce((total, height, heap) => total + height - (targets[heap] ?? height), 0);
}

/** Heaps whose pending target is strictly below the current height. */
export function touchedHeaps(heaps: number[], pending: (number | null)[]): number[] {
    const touched: number[] = [];
    pending.forEach((target, heap) => {
        if (target !== null && target < (heaps[heap] ?? 0)) {
            touched.push(heap);
        }
    });
    return touched;
}
