import { describe, expect, it } from "vitest";

import { describeScheme, formValues, PRESETS, SCHEME_FIELDS, SCHEME_KINDS, schemeFromForm } from "../src/schemes.js";

describe("scheme form model", () => {
    it("covers exactly the five scheme kinds", () => {
        expect(SCHEME_KINDS.sort()).toEqual(["beatty", "evil", "explicit", "integer", "rational"]);
    });

    it("builds a beatty scheme from form values", () => {
        const scheme = schemeFromForm("beatty", { p: "3", q: "1", d: "5", r: "2" });
        expect(scheme).toEqual({ kind: "beatty", p: 3, q: 1, d: 5, r: 2 });
    });

    it("builds the parameterless evil scheme", () => {
        expect(schemeFromForm("evil", {})).toEqual({ kind: "evil" });
    });

    it("keeps explicit letter strings as given", () => {
        const scheme = schemeFromForm("explicit", { prefix: "RR", period: "GR" });
        expect(scheme).toEqual({ kind: "explicit", prefix: "RR", period: "GR" });
    });

    it("rejects non-integer numeric fields", () => {
        expect(() => schemeFromForm("integer", { beta: "two" })).toThrow(/integer/);
        expect(() => schemeFromForm("rational", { p: "3.5", q: "2" })).toThrow(/integer/);
        expect(() => schemeFromForm("beatty", { p: "", q: "1", d: "5", r: "2" })).toThrow(/integer/);
    });

    it("rejects letters outside R and G", () => {
        expect(() => schemeFromForm("explicit", { prefix: "", period: "RB" })).toThrow(/letters/);
    });

    it("round-trips every preset through its form values", () => {
        for (const preset of PRESETS) {
            const values = formValues(preset.scheme);
            expect(schemeFromForm(preset.scheme.kind, values)).toEqual(preset.scheme);
        }
    });

    it("has form fields for every preset field", () => {
        for (const preset of PRESETS) {
            const names = SCHEME_FIELDS[preset.scheme.kind].map((f) => f.name).sort();
            const keys = Object.keys(preset.scheme).filter((k) => k !== "kind").sort();
            expect(names).toEqual(keys);
        }
    });

    it("describes schemes readably", () => {
        expect(describeScheme({ kind: "beatty", p: 3, q: 1, d: 5, r: 2 })).toBe("slope (3 + √5) / 2");
        expect(describeScheme({ kind: "beatty", p: 2, q: 1, d: 2, r: 1 })).toBe("slope 2 + √2");
        expect(describeScheme({ kind: "integer", beta: 4 })).toBe("slope 4");
        expect(describeScheme({ kind: "rational", p: 3, q: 2 })).toBe("slope 3/2");
        expect(describeScheme({ kind: "evil" })).toBe("evil levels red");
        expect(describeScheme({ kind: "explicit", prefix: "", period: "RG" })).toBe("coloring RG repeating");
    });
});
