// Client-side mirror of the engine's move shape rules. The server stays
// authoritative; this only keeps the UI from submitting a move the engine
// would bounce, per the service contract.

import type { Move } from "./types.js";
import { isGreenMove, isNimMove } from "./types.js";
import { pendingTargets, touchedHeaps } from "./board.js";

export interface Rejection {
    code: string;
    message: string;
}

/** Null when the move is acceptable, otherwise the engine's reason code. */
export function checkMove(heaps: number[], greenPosition: boolean, move: Move): Rejection | null {
    if (isNimMove(move)) {
        const { heap, to } = move.nim;
        if (!Number.isInteger(heap) || heap < 0 || heap >= heaps.length) {
            return { code: "bad-heap", message: `no heap ${heap} in a ${heaps.length}-heap position` };
        }
        const height = heaps[heap] ?? 0;
        if (!Number.isInteger(to) || to < 0 || to >= height) {
            return {
                code: "not-lower",
                message: `heap ${heap} has height ${height}; target must be in 0..${height - 1}`,
            };
        }
        return null;
    }
    if (isGreenMove(move)) {
        const target = move.green.to;
        if (target.length !== heaps.length || target.some((t) => !Number.isInteger(t) || t < 0)) {
            return { code: "bad-shape", message: "target must list one non-negative height per heap" };
        }
        if (target.some((t, heap) => t > (heaps[heap] ?? 0))) {
            return { code: "not-dominated", message: "every target height must be at most the current one" };
        }
        if (target.every((t, heap) => t === heaps[heap])) {
            return { code: "no-removal", message: "a move must remove at least one token" };
        }
        if (!greenPosition) {
            return { code: "not-green", message: "green moves need every heap height on a green level" };
        }
        return null;
    }
    return { code: "bad-move", message: "unrecognized move" };
}

export function isLegal(heaps: number[], greenPosition: boolean, move: Move): boolean {
    return checkMove(heaps, greenPosition, move) === null;
}

/**
 * Turn the board's pending selection into a submittable move, or a
 * rejection explaining why the selection is not one.
 *
 * One touched heap is always a Nim move. Several touched heaps encode a
 * green move, which the engine only accepts on a green position.
 */
export function moveFromSelection(
    heaps: number[],
    greenPosition: boolean,
    pending: (number | null)[],
): { move: Move | null; rejection: Rejection | null } {
    const touched = touchedHeaps(heaps, pending);
    if (touched.length === 0) {
        return {
            move: null,
            rejection: { code: "no-removal", message: "a move must remove at least one token" },
        };
    }
    let move: Move;
    if (touched.length === 1) {
        const heap = touched[0]!;
        move = { nim: { heap, to: pending[heap] ?? 0 } };
    } else {
        move = { green: { to: pendingTargets(heaps, pending) } };
    }
    const rejection = checkMove(heaps, greenPosition, move);
    return rejection ? { move: null, rejection } : { move, rejection: null };
}
