"""Nim on colored heaps: red levels play plain Nim, all-green positions may
drop to any componentwise smaller target in one move.

The names to start with: `scheme_from_json` builds a coloring, `Oracle` solves
small positions outright, `advice` and `p_pairs` use closed forms when the
coloring is dominated, and `create_app` serves the whole thing over HTTP.
"""

from .colorings import (
    BeattyScheme,
    Color,
    ColoringScheme,
    Dominance,
    DominationClass,
    EvilScheme,
    ExplicitScheme,
    IntegerScheme,
    RationalScheme,
    beatty_membership,
    domination,
    scheme_from_dict,
    scheme_from_json,
    scheme_to_dict,
    scheme_to_json,
)
from .engine import (
    DEFAULT_MAX_HEIGHT,
    GreenMove,
    Move,
    NimMove,
    Position,
    apply_move,
    as_position,
    is_green_position,
    iter_green_targets,
    legal_moves,
    move_from_dict,
    move_to_dict,
)
from .errors import (
    ChromaticNimError,
    ColorUnavailable,
    HeightLimitExceeded,
    IllegalMove,
    NotApplicable,
)
from .numbers import (
    chi,
    is_dopey,
    is_evil,
    is_odious,
    is_vile,
    mex,
    nth_evil,
    nth_odious,
    tau,
    tau_values,
)
from .oracle import GameStatus, Oracle, oracle_for, pairs_to_csv
from .quadratic import QuadraticIrrational, complement_slope, floor_mul
from .solvers import STRATEGY_NAMES, engine_reply, p_pairs, solve
from .strategies import (
    PPositionPair,
    StrategyAdvice,
    advice,
    beatty_is_p,
    beatty_nth,
    beatty_pairs_upto,
    evil_nth_closed,
    evil_nth_mex,
    evil_pairs_upto,
    green_dominated_advice,
    green_dominated_nth,
    green_dominated_pairs_upto,
    integer_is_p,
    integer_nth,
    integer_pair,
    integer_pairs_upto,
    lgd_probe,
    red_dominated_advice,
    red_dominated_p_positions,
)
from .verify import VerificationReport, fuzz_dominated, verify

__version__ = "0.1.0"

__all__ = [
    "BeattyScheme",
    "Color",
    "ColoringScheme",
    "ChromaticNimError",
    "ColorUnavailable",
    "DEFAULT_MAX_HEIGHT",
    "Dominance",
    "DominationClass",
    "EvilScheme",
    "ExplicitScheme",
    "GameStatus",
    "GreenMove",
    "HeightLimitExceeded",
    "IllegalMove",
    "IntegerScheme",
    "Move",
    "NimMove",
    "NotApplicable",
    "Oracle",
    "PPositionPair",
    "Position",
    "QuadraticIrrational",
    "RationalScheme",
    "STRATEGY_NAMES",
    "StrategyAdvice",
    "VerificationReport",
    "advice",
    "apply_move",
    "as_position",
    "beatty_is_p",
    "beatty_membership",
    "beatty_nth",
    "beatty_pairs_upto",
    "chi",
    "complement_slope",
    "domination",
    "engine_reply",
    "evil_nth_closed",
    "evil_nth_mex",
    "evil_pairs_upto",
    "floor_mul",
    "fuzz_dominated",
    "green_dominated_advice",
    "green_dominated_nth",
    "green_dominated_pairs_upto",
    "integer_is_p",
    "integer_nth",
    "integer_pair",
    "integer_pairs_upto",
    "is_dopey",
    "is_evil",
    "is_green_position",
    "is_odious",
    "is_vile",
    "iter_green_targets",
    "legal_moves",
    "lgd_probe",
    "mex",
    "move_from_dict",
    "move_to_dict",
    "nth_evil",
    "nth_odious",
    "oracle_for",
    "p_pairs",
    "pairs_to_csv",
    "red_dominated_advice",
    "red_dominated_p_positions",
    "scheme_from_dict",
    "scheme_from_json",
    "scheme_to_dict",
    "scheme_to_json",
    "solve",
    "tau",
    "tau_values",
    "verify",
]
