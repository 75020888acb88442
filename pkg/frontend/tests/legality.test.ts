import { describe, expect, it } from "vitest";

import { checkMove, isLegal, moveFromSelection } from "../src/legality.js";

describe("checkMove", () => {
    it("accepts a plain Nim lowering", () => {
        expect(checkMove([4, 2], false, { nim: { heap: 0, to: 1 } })).toBeNull();
        expect(checkMove([4, 2], false, { nim: { heap: 1, to: 0 } })).toBeNull();
    });

    it("rejects out-of-range heaps and non-lowering targets", () => {
        expect(checkMove([4, 2], false, { nim: { heap: 2, to: 0 } })?.code).toBe("bad-heap");
        expect(checkMove([4, 2], false, { nim: { heap: -1, to: 0 } })?.code).toBe("bad-heap");
        expect(checkMove([4, 2], false, { nim: { heap: 0, to: 4 } })?.code).toBe("not-lower");
        expect(checkMove([4, 2], false, { nim: { heap: 0, to: 7 } })?.code).toBe("not-lower");
        expect(checkMove([4, 2], false, { nim: { heap: 0, to: -1 } })?.code).toBe("not-lower");
        expect(checkMove([0, 2], false, { nim: { heap: 0, to: 0 } })?.code).toBe("not-lower");
    });

    it("accepts a dominated green target on a green position", () => {
        expect(checkMove([4, 3], true, { green: { to: [0, 0] } })).toBeNull();
        expect(checkMove([4, 3], true, { green: { to: [4, 2] } })).toBeNull();
        expect(checkMove([4, 3], true, { green: { to: [1, 1] } })).toBeNull();
    });

    it("rejects malformed green targets", () => {
        expect(checkMove([4, 3], true, { green: { to: [1] } })?.code).toBe("bad-shape");
        expect(checkMove([4, 3], true, { green: { to: [1, 2, 3] } })?.code).toBe("bad-shape");
        expect(checkMove([4, 3], true, { green: { to: [1, -1] } })?.code).toBe("bad-shape");
        expect(checkMove([4, 3], true, { green: { to: [1, 1.5] } })?.code).toBe("bad-shape");
    });

    it("rejects raising, standing pat, and green moves off green positions", () => {
        expect(checkMove([4, 3], true, { green: { to: [5, 0] } })?.code).toBe("not-dominated");
        expect(checkMove([4, 3], true, { green: { to: [4, 3] } })?.code).toBe("no-removal");
        expect(checkMove([4, 3], false, { green: { to: [0, 0] } })?.code).toBe("not-green");
    });

    it("isLegal is the boolean view", () => {
        expect(isLegal([4, 2], false, { nim: { heap: 0, to: 1 } })).toBe(true);
        expect(isLegal([4, 2], false, { green: { to: [0, 0] } })).toBe(false);
    });
});

describe("moveFromSelection", () => {
    it("turns a single touched heap into a Nim move", () => {
        const { move, rejection } = moveFromSelection([4, 2], false, [1, null]);
        expect(rejection).toBeNull();
        expect(move).toEqual({ nim: { heap: 0, to: 1 } });
    });

    it("turns several touched heaps into a green move", () => {
        const { move, rejection } = moveFromSelection([4, 3], true, [0, 1]);
        expect(rejection).toBeNull();
        expect(move).toEqual({ green: { to: [0, 1] } });
    });

    it("keeps untouched heaps at their height inside a green target", () => {
        const { move } = moveFromSelection([4, 3, 2], true, [0, null, 1]);
        expect(move).toEqual({ green: { to: [0, 3, 1] } });
    });

    it("refuses an empty selection", () => {
        const { move, rejection } = moveFromSelection([4, 2], false, [null, null]);
        expect(move).toBeNull();
        expect(rejection?.code).toBe("no-removal");
    });

    it("refuses a multi-heap selection off a green position", () => {
        const { move, rejection } = moveFromSelection([4, 3], false, [0, 1]);
        expect(move).toBeNull();
        expect(rejection?.code).toBe("not-green");
    });

    it("ignores selections at or above the current height", () => {
        const { move } = moveFromSelection([4, 2], false, [4, 1]);
        expect(move).toEqual({ nim: { heap: 1, to: 1 } });
    });
});
