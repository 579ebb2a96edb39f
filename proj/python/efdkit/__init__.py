"""Python bindings for efdkit.

Functions returning structured data decode the library's JSON into dicts.
"""

import json

from . import _efdkit
from ._efdkit import (
    DEFAULT_CAP,
    DEFAULT_SEED,
    CapExceeded,
    DimensionMismatch,
    EfdkitError,
    FamilyMismatch,
    FragmentError,
    InvalidArgument,
    OverflowError,
    ParseError,
    SignatureError,
    UniverseError,
    delta,
    epsilon,
    eval,
    print_term,
    reduce,
    star_term,
    suite_names,
)

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_SEED",
    "CapExceeded",
    "DimensionMismatch",
    "EfdkitError",
    "FamilyMismatch",
    "FragmentError",
    "InvalidArgument",
    "OverflowError",
    "ParseError",
    "SignatureError",
    "UniverseError",
    "canon",
    "check",
    "check_in_two",
    "classify",
    "delta",
    "epsilon",
    "eval",
    "fulldim",
    "parse_sentence",
    "parse_term",
    "print_term",
    "reduce",
    "run_cli",
    "selftest",
    "star_term",
    "suite_names",
]


def run_cli(*args):
    """Run the command line in-process; returns (exit_code, stdout, stderr)."""
    return _efdkit.run_cli([str(a) for a in args])


def parse_term(text, sig="group"):
    return json.loads(_efdkit.parse_term(text, sig))


def parse_sentence(text, sig="group"):
    return json.loads(_efdkit.parse_sentence(text, sig))


def canon(term, cap=DEFAULT_CAP, n=0):
    return json.loads(_efdkit.canon(term, cap, n))


def classify(sentences, sig="group", cap=DEFAULT_CAP):
    if isinstance(sentences, str):
        sentences = [sentences]
    return json.loads(_efdkit.classify(list(sentences), sig, cap))


def check_in_two(sentence):
    return json.loads(_efdkit.check_in_two(sentence))


def fulldim(rows, n=None):
    rows = [list(r) for r in rows]
    if n is None:
        if not rows:
            raise InvalidArgument("n is required for an empty system")
        n = len(rows[0])
    return json.loads(_efdkit.fulldim(rows, n))


def check(model, sentence, budget=500, seed=DEFAULT_SEED, sig=""):
    return json.loads(_efdkit.check(model, sentence, budget, seed, sig))


def selftest(suite, seed=DEFAULT_SEED, budget=0):
    return json.loads(_efdkit.selftest(suite, seed, budget))
