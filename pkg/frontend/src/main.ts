// Entry point: wires the scheme picker, board, and service client together.
// The server is authoritative; every state change round-trips it.

import { ApiClient, ApiError, defaultBaseUrl } from "./api.js";
import { buildStacks } from "./board.js";
import { moveFromSelection } from "./legality.js";
import { formValues, PRESETS, SCHEME_FIELDS, SCHEME_KINDS, schemeFromForm } from "./schemes.js";
import type { GameState, Scheme, SchemeKind } from "./types.js";
import { describeMove, renderBoard, renderHistory, renderStatus, setMessage } from "./ui.js";

function element<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) {
        throw new Error(`missing element #${id}`);
    }
    return node as T;
}

const baseUrlInput = element<HTMLInputElement>("base-url");
const kindSelect = element<HTMLSelectElement>("scheme-kind");
const fieldsDiv = element<HTMLElement>("scheme-fields");
const presetSelect = element<HTMLSelectElement>("preset");
const heapsInput = element<HTMLInputElement>("heaps");
const sideSelect = element<HTMLSelectElement>("engine-side");
const startButton = element<HTMLButtonElement>("start");
const boardDiv = element<HTMLElement>("board");
const statusDiv = element<HTMLElement>("status");
const messageDiv = element<HTMLElement>("message");
const submitButton = element<HTMLButtonElement>("submit-move");
const clearButton = element<HTMLButtonElement>("clear-selection");
const hintButton = element<HTMLButtonElement>("hint");
const historyList = element<HTMLElement>("history");

let client = new ApiClient(defaultBaseUrl(window.location));
let game: GameState | null = null;
let colors = "";
let pending: (number | null)[] = [];

baseUrlInput.value = client.baseUrl;
baseUrlInput.addEventListener("change", () => {
    client = new ApiClient(baseUrlInput.value || defaultBaseUrl(window.location));
    baseUrlInput.value = client.baseUrl;
});

function renderSchemeFields(kind: SchemeKind, values: Record<string, string> = {}): void {
    fieldsDiv.textContent = "";
    for (const field of SCHEME_FIELDS[kind]) {
        const label = document.createElement("label");
        label.textContent = field.label;
        const input = document.createElement("input");
        input.name = field.name;
        input.placeholder = field.placeholder;
        input.value = values[field.name] ?? "";
        label.appendChild(input);
        fieldsDiv.appendChild(label);
    }
}

for (const kind of SCHEME_KINDS) {
    const option = document.createElement("option");
    option.value = kind;
    option.textContent = kind;
    kindSelect.appendChild(option);
}
kindSelect.addEventListener("change", () => {
    renderSchemeFields(kindSelect.value as SchemeKind);
});

PRESETS.forEach((preset, index) => {
    const option = document.createElement("option");
    option.value = String(index);
    option.textContent = preset.label;
    presetSelect.appendChild(option);
});
presetSelect.addEventListener("change", () => {
    const preset = PRESETS[Number(presetSelect.value)];
    if (preset) {
        kindSelect.value = preset.scheme.kind;
        renderSchemeFields(preset.scheme.kind, formValues(preset.scheme));
    }
});

function currentScheme(): Scheme {
    const values: Record<string, string> = {};
    fieldsDiv.querySelectorAll("input").forEach((input) => {
        values[input.name] = input.value;
    });
    return schemeFromForm(kindSelect.value as SchemeKind, values);
}

function parseHeaps(text: string): number[] {
    const parts = text.split(",").map((part) => part.trim()).filter((part) => part !== "");
    if (parts.length === 0) {
        throw new Error("give at least one heap height, e.g. 4,2");
    }
    return parts.map((part) => {
        if (!/^\d+$/.test(part)) {
            throw new Error(`heap heights are non-negative integers, got ${JSON.stringify(part)}`);
        }
        return parseInt(part, 10);
    });
}

function clearSelection(): void {
    pending = game ? game.position.heaps.map(() => null) : [];
}

function redraw(): void {
    if (!game) {
        return;
    }
    const heaps = game.position.heaps;
    renderStatus(statusDiv, game);
    renderBoard(boardDiv, buildStacks(heaps, colors, pending), onTokenClick);
    renderHistory(historyList, game.history);
    const humanTurn = !game.finished && game.turn === "human";
    const { move } = moveFromSelection(heaps, game.green_position, pending);
    submitButton.disabled = !humanTurn || move === null;
    clearButton.disabled = !humanTurn;
    hintButton.disabled = game.finished;
}

function onTokenClick(heap: number, level: number): void {
    if (!game || game.finished || game.turn !== "human") {
        return;
    }
    const target = level - 1;
    if (pending[heap] === target) {
        pending[heap] = null;
    } else {
        // One heap at a time unless the server marked the position green.
        if (!game.green_position) {
            pending = game.position.heaps.map(() => null);
        }
        pending[heap] = target;
    }
    redraw();
}

async function refreshColors(): Promise<void> {
    if (!game) {
        return;
    }
    const needed = Math.max(0, ...game.position.heaps);
    if (colors.length >= needed) {
        return;
    }
    const response = await client.getColoring(game.scheme, needed);
    colors = response.colors;
}

function showError(error: unknown): void {
    if (error instanceof ApiError) {
        setMessage(messageDiv, `rejected (${error.status}): ${error.message}`, "error");
    } else {
        setMessage(messageDiv, String(error instanceof Error ? error.message : error), "error");
    }
}

startButton.addEventListener("click", async () => {
    try {
        const scheme = currentScheme();
        const heaps = parseHeaps(heapsInput.value);
        const side = sideSelect.value === "first" ? "first" : "second";
        game = await client.createGame(scheme, heaps, side);
        colors = "";
        await refreshColors();
        clearSelection();
        setMessage(messageDiv, `game ${game.id} started`);
        redraw();
    } catch (error) {
        showError(error);
    }
});

submitButton.addEventListener("click", async () => {
    if (!game) {
        return;
    }
    const { move, rejection } = moveFromSelection(game.position.heaps, game.green_position, pending);
    if (!move) {
        setMessage(messageDiv, rejection ? rejection.message : "nothing selected", "error");
        return;
    }
    try {
        game = await client.postMove(game.id, move);
        clearSelection();
        const reply = game.history[game.history.length - 1];
        if (reply && reply.mover === "engine") {
            setMessage(messageDiv, `engine replied: ${describeMove(reply.move)}`);
        } else {
            setMessage(messageDiv, "move accepted");
        }
        redraw();
    } catch (error) {
        showError(error);
        if (error instanceof ApiError && game) {
            // Selection may be stale; resync with the server state.
            try {
                game = await client.getGame(game.id);
                clearSelection();
                redraw();
            } catch {
                // Leave the last rendered state in place.
            }
        }
    }
});

clearButton.addEventListener("click", () => {
    clearSelection();
    redraw();
});

hintButton.addEventListener("click", async () => {
    if (!game) {
        return;
    }
    try {
        const hint = await client.getHint(game.id);
        if (hint.status === "P") {
            const fallback = hint.move ? ` Holding move: ${describeMove(hint.move)}.` : "";
            setMessage(messageDiv, `No winning move exists.${fallback}`);
        } else if (hint.move) {
            setMessage(messageDiv, `Winning move: ${describeMove(hint.move)} (${hint.backend})`);
        }
    } catch (error) {
        showError(error);
    }
});

const firstPreset = PRESETS[0]!;
kindSelect.value = firstPreset.scheme.kind;
renderSchemeFields(firstPreset.scheme.kind, formValues(firstPreset.scheme));
setMessage(messageDiv, "pick a scheme and start a game");
