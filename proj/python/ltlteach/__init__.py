"""Teaching sets and transfinite evaluation for LTL fragments.

Thin wrapper over the C++ core; every function speaks the same textual
formats as the `ltlteach` command line tool (formulas like "sF p & q",
words like "{p}.{q}", word expressions like "{q}^w.{p}", and the
line-oriented sample format).
"""

from ._ltlteach import (
    BudgetError,
    EvalError,
    FragmentError,
    ParseError,
    adversary,
    canonical_set,
    characterize,
    characterize_schematic,
    classify,
    dual,
    eval_expr,
    eval_word,
    fits,
    learn,
    oracle,
    size_report,
    teach,
    verify_unique,
)

__all__ = [
    "BudgetError",
    "EvalError",
    "FragmentError",
    "ParseError",
    "adversary",
    "canonical_set",
    "characterize",
    "characterize_schematic",
    "classify",
    "dual",
    "eval_expr",
    "eval_word",
    "fits",
    "learn",
    "oracle",
    "size_report",
    "teach",
    "verify_unique",
]
