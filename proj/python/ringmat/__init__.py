"""Exact determinants, adjoints and characteristic polynomials over commutative rings.

Ring elements are passed as strings (or ints) in the text syntax of their ring;
matrices are lists of rows.
"""

from . import _ringmat
from ._ringmat import ParseError, PreconditionError, Ring, compose, enumerate_permutations, parity, run_cli

__all__ = [
    "ParseError",
    "PreconditionError",
    "Ring",
    "adjoint",
    "charpoly",
    "check",
    "compose",
    "det",
    "enumerate_permutations",
    "expand_col",
    "expand_row",
    "multiply",
    "parity",
    "run_cli",
]


def _ring(ring):
    return ring if isinstance(ring, Ring) else Ring(ring)


def _rows(rows):
    return [[str(x) for x in row] for row in rows]


def det(ring, rows, algorithm="cofactor", cap=8):
    return _ringmat.det(_ring(ring), _rows(rows), algorithm, cap)


def expand_row(ring, rows, i):
    return _ringmat.expand_row(_ring(ring), _rows(rows), i)


def expand_col(ring, rows, j):
    return _ringmat.expand_col(_ring(ring), _rows(rows), j)


def adjoint(ring, rows):
    return _ringmat.adjoint(_ring(ring), _rows(rows))


def multiply(ring, a, b):
    return _ringmat.multiply(_ring(ring), _rows(a), _rows(b))


def charpoly(ring, rows, cap=8):
    return _ringmat.charpoly(_ring(ring), _rows(rows), cap)


def check(ring, rows, seed=20260318):
    return dict(_ringmat.check(_ring(ring), _rows(rows), seed))
