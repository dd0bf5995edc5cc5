"""Exact rational feasibility of small linear systems.

Fourier-Motzkin elimination over ``Fraction`` coefficients, with strict and
weak inequalities and linear equalities.  Systems here are tiny (at most a
few dozen constraints in dimension <= 4), so no effort is spent on
redundancy control.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

Row = Tuple[Tuple[Fraction, ...], bool]  # (coefficients a, strict): a.x > 0 or a.x >= 0


def _frac_row(coeffs: Sequence) -> tuple:
    return tuple(Fraction(c) for c in coeffs)


class LinearSystem:
    """Homogeneous constraints a.x = 0, a.x > 0, a.x >= 0 on R^dim."""

    def __init__(self, dim: int):
        self.dim = dim
        self.equalities: list[tuple] = []
        self.inequalities: list[Row] = []  # (coeffs, strict)

    def eq(self, coeffs: Sequence) -> "LinearSystem":
        self.equalities.append(_frac_row(coeffs))
        return self

    def ge(self, coeffs: Sequence) -> "LinearSystem":
        self.inequalities.append((_frac_row(coeffs), False))
        return self

    def gt(self, coeffs: Sequence) -> "LinearSystem":
        self.inequalities.append((_frac_row(coeffs), True))
        return self

    def feasible(self) -> bool:
        return self.witness() is not None

    def witness(self) -> Optional[tuple]:
        """A rational solution, or None if the system is infeasible."""
        # Eliminate equalities by Gaussian substitution.
        eqs = [list(e) for e in self.equalities]
        ineqs = [(list(a), s) for a, s in self.inequalities]
        n = self.dim
        pivots: list[tuple[int, list]] = []  # (var index, row solved for that var)
        for row in eqs:
            row = self._reduce(row, pivots)
            piv = next((j for j, c in enumerate(row) if c != 0), None)
            if piv is None:
                continue
            inv = Fraction(1) / row[piv]
            row = [c * inv for c in row]
            pivots.append((piv, row))
        free = [j for j in range(n) if all(j != p for p, _ in pivots)]
        proj = []
        for a, strict in ineqs:
            a = self._reduce(a, pivots)
            proj.append(([a[j] for j in free], strict))
        sol_free = _fm_solve(proj, len(free))
        if sol_free is None:
            return None
        x = [Fraction(0)] * n
        for j, v in zip(free, sol_free):
            x[j] = v
        for piv, row in reversed(pivots):
            x[piv] = -sum(row[j] * x[j] for j in range(n) if j != piv)
        return tuple(x)

    @staticmethod
    def _reduce(row: list, pivots: list) -> list:
        row = list(row)
        for piv, prow in pivots:
            if row[piv] != 0:
                c = row[piv]
                row = [r - c * p for r, p in zip(row, prow)]
        return row


def _fm_solve(rows: list, dim: int) -> Optional[list]:
    """Witness for a.x (>|>=) 0 systems by Fourier-Motzkin, None if infeasible."""
    if dim == 0:
        for a, strict in rows:
            # constant constraint 0 > 0 or 0 >= 0
            if strict:
                return None
        return []
    # eliminate the last variable
    k = dim - 1
    zero, pos, neg = [], [], []
    for a, strict in rows:
        if a[k] == 0:
            zero.append((a[:k], strict))
        elif a[k] > 0:
            pos.append((a, strict))  # x_k > -rest/a_k  (lower bounds)
        else:
            neg.append((a, strict))  # x_k < -rest/a_k  (upper bounds)
    combined = list(zero)
    for al, sl in pos:
        for au, su in neg:
            # al.x>0, au.x<0-side: eliminate x_k
            coeffs = [al[j] * (-au[k]) + au[j] * al[k] for j in range(k)]
            combined.append((coeffs, sl or su))
    rest = _fm_solve(combined, k)
    if rest is None:
        return None
    lo, lo_strict = None, False
    hi, hi_strict = None, False
    for a, strict in pos:
        b = -sum(c * v for c, v in zip(a[:k], rest)) / a[k]
        if lo is None or b > lo or (b == lo and strict):
            lo, lo_strict = b, strict
    for a, strict in neg:
        b = -sum(c * v for c, v in zip(a[:k], rest)) / a[k]
        if hi is None or b < hi or (b == hi and strict):
            hi, hi_strict = b, strict
    if lo is None and hi is None:
        val = Fraction(0)
    elif lo is None:
        val = hi - 1
    elif hi is None:
        val = lo + 1
    else:
        if lo > hi or (lo == hi and (lo_strict or hi_strict)):
            return None  # can happen only through rounding of strictness; guard
        val = (lo + hi) / 2
    return rest + [val]
