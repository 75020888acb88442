// Wire types for the chromatic Nim HTTP service.

export type TokenColor = "R" | "G";

export interface BeattyScheme {
    kind: "beatty";
    p: number;
    q: number;
    d: number;
    r: number;
}

export interface IntegerScheme {
    kind: "integer";
    beta: number;
}

export interface RationalScheme {
    kind: "rational";
    p: number;
    q: number;
}

export interface EvilScheme {
    kind: "evil";
}

export interface ExplicitScheme {
    kind: "explicit";
    prefix: string;
    period: string;
}

export type Scheme =
    | BeattyScheme
    | IntegerScheme
    | RationalScheme
    | EvilScheme
    | ExplicitScheme;

export type SchemeKind = Scheme["kind"];

export interface NimMove {
    nim: { heap: number; to: number };
}

export interface GreenMove {
    green: { to: number[] };
}

export type Move = NimMove | GreenMove;

export type Player = "human" | "engine";

export interface HistoryEntry {
    mover: Player;
    move: Move;
}

export interface GameState {
    id: string;
    scheme: Scheme;
    position: { heaps: number[] };
    engine_side: "first" | "second";
    turn: Player | null;
    winner: Player | null;
    finished: boolean;
    green_position: boolean;
    history: HistoryEntry[];
}

export interface Hint {
    status: "N" | "P";
    backend: string;
    move: Move | null;
}

export interface ColoringResponse {
    scheme: Scheme;
    upto: number;
    colors: string;
}

export interface PPositionsResponse {
    scheme: Scheme;
    strategy: string;
    pairs: [number, number][];
}

export function isNimMove(move: Move): move is NimMove {
    return "nim" in move;
}

export function isGreenMove(move: Move): move is GreenMove {
    return "green" in move;
}
