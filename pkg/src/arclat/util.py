"""Small shared helpers for point ranges and vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]


def between(a: int, b: int) -> tuple[int, ...]:
    """Integers strictly between a and b, excluding 0.

    Point labels are nonzero integers; 0 is reserved for the origin/orbifold
    point, which is never a passed point.
    """
    lo, hi = (a, b) if a < b else (b, a)
    return tuple(v for v in range(lo + 1, hi) if v != 0)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def unit(n: int, i: int, sign: int = 1) -> tuple:
    """Signed standard basis vector e_i (1-based) in R^n."""
    return tuple(sign if k == i - 1 else 0 for k in range(n))


def canonical_normal(v: Sequence[int]) -> tuple:
    """Scale an integer vector so its first nonzero coordinate is positive."""
    for a in v:
        if a != 0:
            return tuple(x for x in v) if a > 0 else tuple(-x for x in v)
    raise ValueError("zero vector has no canonical form")


def first_duplicate(items: Iterable):
    seen = set()
    for x in items:
        if x in seen:
            return x
        seen.add(x)
    return None
