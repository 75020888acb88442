// DOM rendering. Pure model building lives in board.ts; this file only
// turns models into elements and reports clicks back through callbacks.

import type { Stack } from "./board.js";
import type { GameState, HistoryEntry, Move } from "./types.js";
import { isNimMove } from "./types.js";

/** Human-readable move text; heaps are shown 1-based like the CLI. */
export function describeMove(move: Move): string {
    if (isNimMove(move)) {
        return `heap ${move.nim.heap + 1} → ${move.nim.to}`;
    }
    return `green → (${move.green.to.join(", ")})`;
}

export type TokenClickHandler = (heap: number, level: number) => void;

export function renderBoard(container: HTMLElement, stacks: Stack[], onToken: TokenClickHandler): void {
    container.textContent = "";
    stacks.forEach((stack, heap) => {
        const column = document.createElement("div");
        column.className = "heap";
        column.dataset.heap = String(heap);

        const label = document.createElement("div");
        label.className = "heap-label";
        label.textContent = `heap ${heap + 1} (${stack.length})`;

        const tokens = document.createElement("div");
        tokens.className = "tokens";
        // Flex column-reverse keeps level 1 at the bottom.
        for (const token of stack) {
            const cell = document.createElement("button");
            cell.type = "button";
            cell.className = `token ${token.color === "R" ? "token-red" : "token-green"}`;
            if (token.pendingRemoval) {
                cell.classList.add("token-pending");
            }
            cell.dataset.level = String(token.level);
            cell.title = `level ${token.level}`;
            cell.addEventListener("click", () => onToken(heap, token.level));
            tokens.appendChild(cell);
        }

        column.appendChild(tokens);
        column.appendChild(label);
        container.appendChild(column);
    });
}

export function renderStatus(container: HTMLElement, state: GameState): void {
    container.textContent = "";
    const line = document.createElement("div");
    line.className = "status-line";
    if (state.finished) {
        line.classList.add("status-over");
        line.textContent = state.winner === "human" ? "Game over: you win" : "Game over: engine wins";
    } else if (state.turn === "human") {
        line.textContent = "Your move";
    } else {
        line.textContent = "Engine is thinking";
    }
    container.appendChild(line);

    if (!state.finished && state.green_position) {
        const badge = document.createElement("div");
        badge.className = "green-badge";
        badge.textContent = "Green position: take from any heaps at once";
        container.appendChild(badge);
    }
}

export function renderHistory(container: HTMLElement, history: HistoryEntry[]): void {
    container.textContent = "";
    history.forEach((entry, index) => {
        const item = document.createElement("li");
        item.textContent = `${index + 1}. ${entry.mover}: ${describeMove(entry.move)}`;
        container.appendChild(item);
    });
}

export function setMessage(container: HTMLElement, text: string, kind: "info" | "error" = "info"): void {
    container.textContent = text;
    container.className = kind === "error" ? "message message-error" : "message";
}
