// Scheme picker model: the five scheme kinds, their form fields, and a
// few ready-made presets. Validation here is a convenience; the server
// rejects anything it does not like with a 400.

import type { Scheme, SchemeKind } from "./types.js";

export interface FormField {
    name: string;
    label: string;
    /** "int" fields are parsed with parseInt; "letters" keeps the string. */
    type: "int" | "letters";
    placeholder: string;
}

export const SCHEME_FIELDS: Record<SchemeKind, FormField[]> = {
    beatty: [
        { name: "p", label: "p", type: "int", placeholder: "3" },
        { name: "q", label: "q", type: "int", placeholder: "1" },
        { name: "d", label: "d", type: "int", placeholder: "5" },
        { name: "r", label: "r", type: "int", placeholder: "2" },
    ],
    integer: [{ name: "beta", label: "beta", type: "int", placeholder: "2" }],
    rational: [
        { name: "p", label: "p", type: "int", placeholder: "3" },
        { name: "q", label: "q", type: "int", placeholder: "2" },
    ],
    evil: [],
    explicit: [
        { name: "prefix", label: "prefix", type: "letters", placeholder: "" },
        { name: "period", label: "period", type: "letters", placeholder: "RG" },
    ],
};

export const SCHEME_KINDS = Object.keys(SCHEME_FIELDS) as SchemeKind[];

export interface Preset {
    label: string;
    scheme: Scheme;
}

// Beatty slopes are encoded as (p + q*sqrt(d)) / r.
export const PRESETS: Preset[] = [
    { label: "Golden ratio squared", scheme: { kind: "beatty", p: 3, q: 1, d: 5, r: 2 } },
    { label: "2 + sqrt(2)", scheme: { kind: "beatty", p: 2, q: 1, d: 2, r: 1 } },
    { label: "(5 + sqrt(3)) / 2", scheme: { kind: "beatty", p: 5, q: 1, d: 3, r: 2 } },
    { label: "Integer slope 2", scheme: { kind: "integer", beta: 2 } },
    { label: "Integer slope 3", scheme: { kind: "integer", beta: 3 } },
    { label: "Rational 3/2", scheme: { kind: "rational", p: 3, q: 2 } },
    { label: "Evil numbers", scheme: { kind: "evil" } },
    { label: "Alternating RG", scheme: { kind: "explicit", prefix: "", period: "RG" } },
];

/** Build a scheme dict from raw form values; throws on malformed input. */
export function schemeFromForm(kind: SchemeKind, values: Record<string, string>): Scheme {
    const fields = SCHEME_FIELDS[kind];
    const parsed: Record<string, number | string> = {};
    for (const field of fields) {
        const raw = (values[field.name] ?? "").trim();
        if (field.type === "int") {
            if (!/^-?\d+$/.test(raw)) {
                throw new Error(`field ${field.label} needs an integer, got ${JSON.stringify(raw)}`);
            }
            parsed[field.name] = parseInt(raw, 10);
        } else {
            if (!/^[RG]*$/.test(raw)) {
                throw new Error(`field ${field.label} accepts only the letters R and G`);
            }
            parsed[field.name] = raw;
        }
    }
    return { kind, ...parsed } as Scheme;
}

/** Form values that reproduce the given scheme, for preset loading. */
export function formValues(scheme: Scheme): Record<string, string> {
    const values: Record<string, string> = {};
    for (const field of SCHEME_FIELDS[scheme.kind]) {
        const value = (scheme as unknown as Record<string, number | string>)[field.name];
        values[field.name] = String(value ?? "");
    }
    return values;
}

export function describeScheme(scheme: Scheme): string {
    switch (scheme.kind) {
        case "beatty": {
            const root = `${scheme.q === 1 ? "" : scheme.q}√${scheme.d}`;
            const top = scheme.p === 0 ? root : `${scheme.p} + ${root}`;
            return scheme.r === 1 ? `slope ${top}` : `slope (${top}) / ${scheme.r}`;
        }
        case "integer":
            return `slope ${scheme.beta}`;
        case "rational":
            return `slope ${scheme.p}/${scheme.q}`;
        case "evil":
            return "evil levels red";
        case "explicit":
            return scheme.prefix
                ? `coloring ${scheme.prefix} then ${scheme.period} repeating`
                : `coloring ${scheme.period} repeating`;
    }
}
