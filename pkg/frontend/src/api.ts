// Thin fetch client for the service endpoints.

import type {
    ColoringResponse,
    GameState,
    Hint,
    Move,
    PPositionsResponse,
    Scheme,
} from "./types.js";

export class ApiError extends Error {
    status: number;
    detail: unknown;

    constructor(status: number, detail: unknown) {
        super(typeof detail === "string" ? detail : JSON.stringify(detail));
        this.name = "ApiError";
        this.status = status;
        this.detail = detail;
    }

    /** Reason code for structured 422 rejections, empty otherwise. */
    get code(): string {
        if (this.detail && typeof this.detail === "object" && "code" in this.detail) {
            return String((this.detail as { code: unknown }).code);
        }
        return "";
    }
}

export class ApiClient {
    baseUrl: string;

    constructor(baseUrl: string) {
        this.baseUrl = baseUrl.replace(/\/+$/, "");
    }

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await fetch(this.baseUrl + path, init);
        let body: unknown = null;
        const text = await response.text();
        if (text) {
            try {
                body = JSON.parse(text);
            } catch {
                body = text;
            }
        }
        if (!response.ok) {
            const detail =
                body && typeof body === "object" && "detail" in body
                    ? (body as { detail: unknown }).detail
                    : body;
            throw new ApiError(response.status, detail);
        }
        return body as T;
    }

    private post<T>(path: string, payload: unknown): Promise<T> {
        return this.request<T>(path, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(payload),
        });
    }

    createGame(scheme: Scheme, heaps: number[], engineSide: "first" | "second"): Promise<GameState> {
        return this.post<GameState>("/games", {
            scheme,
            heaps,
            engine_side: engineSide,
        });
    }

    getGame(id: string): Promise<GameState> {
        return this.request<GameState>(`/games/${id}`);
    }

    postMove(id: string, move: Move): Promise<GameState> {
        return this.post<GameState>(`/games/${id}/moves`, { move });
    }

    getHint(id: string): Promise<Hint> {
        return this.request<Hint>(`/games/${id}/hint`);
    }

    getColoring(scheme: Scheme, upto: number): Promise<ColoringResponse> {
        const params = new URLSearchParams({
            scheme: JSON.stringify(scheme),
            upto: String(upto),
        });
        return this.request<ColoringResponse>(`/coloring?${params}`);
    }

    getPPositions(
        scheme: Scheme,
        options: { strategy?: string; count?: number; height?: number } = {},
    ): Promise<PPositionsResponse> {
        const params = new URLSearchParams({ scheme: JSON.stringify(scheme) });
        if (options.strategy) params.set("strategy", options.strategy);
        if (options.count !== undefined) params.set("count", String(options.count));
        if (options.height !== undefined) params.set("height", String(options.height));
        return this.request<PPositionsResponse>(`/ppositions?${params}`);
    }
}

/** Same origin when the page is served from the service's /ui mount. */
export function defaultBaseUrl(loc: { origin: string; pathname: string }): string {
    if (loc.pathname.startsWith("/ui")) {
        return loc.origin;
    }
    return "http://127.0.0.1:8000";
}
