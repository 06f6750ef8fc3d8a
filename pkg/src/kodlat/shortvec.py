"""Fincke-Pohst enumeration of vectors of given norm in a negative-definite lattice.

The form ``-gram`` is decomposed exactly as

    Q(x) = sum_i q_ii * (x_i + sum_{j>i} q_ij x_j)^2

with rational ``q``; coordinates are fixed from the last one down and each
level's admissible integer interval is cut from the remaining budget using
integer square roots, so no floating point is involved.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, isqrt

from .lattice import GramLattice, LatticeError, signature

WORKERS_ENV = "KODLAT_WORKERS"


@dataclass(frozen=True)
class NormQuery:
    lattice: GramLattice
    target_norm: int

    def __post_init__(self):
        if self.target_norm >= 0:
            raise LatticeError(f"target norm must be negative, got {self.target_norm}")
        sig = signature(self.lattice)
        if sig != (0, self.lattice.rank):
            raise LatticeError(f"lattice is not negative definite: signature {sig}")


def _fincke_pohst_form(gram):
    n = len(gram)
    q = [[Fraction(-x) for x in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _interval(center: Fraction, budget: Fraction, weight: Fraction):
    """Integers x with weight * (x - center)^2 <= budget."""
    if budget < 0:
        return range(0)
    b = budget / weight
    r = isqrt(b.numerator * b.denominator) // b.denominator
    lo, hi = floor(center) - r - 1, ceil(center) + r + 1
    while weight * (lo - center) ** 2 > budget:
        lo += 1
        if lo > hi:
            return range(0)
    while weight * (hi - center) ** 2 > budget:
        hi -= 1
    return range(lo, hi + 1)


def _search(q, bound, last=None):
    """All nonzero x with Q(x) <= bound, as (Q(x), x) pairs (unsorted)."""
    n = len(q)
    out = []
    x = [0] * n

    def level(i, used):
        # center for x_i is -sum_{j>i} q_ij x_j
        c = -sum((q[i][j] * x[j] for j in range(i + 1, n) if x[j]), Fraction(0))
        choices = _interval(c, bound - used, q[i][i])
        if i == n - 1 and last is not None:
            choices = [last] if last in choices else []
        for v in choices:
            x[i] = v
            t = used + q[i][i] * (v - c) ** 2
            if i == 0:
                if any(x):
                    out.append((int(t), tuple(x)))
            else:
                level(i - 1, t)
        x[i] = 0

    if n:
        level(n - 1, Fraction(0))
    return out


def _search_branch(args):
    q, bound, last = args
    return _search(q, bound, last)


def _workers(workers):
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def enumerate_short_vectors(lat: GramLattice, max_abs_norm: int, workers=None) -> list:
    """All nonzero ``v`` with ``0 < -(v, v) <= max_abs_norm``.

    Returns ``(norm, v)`` pairs with ``norm = (v, v)`` (negative), sorted by
    ``(-norm, v)``. With ``workers > 1`` the last coordinate's branches run in
    separate processes; the merged output is identical to a serial run.
    """
    sig = signature(lat)
    if sig != (0, lat.rank):
        raise LatticeError(f"lattice is not negative definite: signature {sig}")
    if lat.rank == 0 or max_abs_norm <= 0:
        return []
    q = _fincke_pohst_form(lat.gram)
    bound = Fraction(max_abs_norm)
    workers = _workers(workers)
    if workers == 1:
        found = _search(q, bound)
    else:
        top = list(_interval(Fraction(0), bound, q[-1][-1]))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_search_branch, [(q, bound, v) for v in top])
            found = [item for part in parts for item in part]
    return sorted(((-t, v) for t, v in found), key=lambda p: (-p[0], p[1]))


def enumerate_norm_vectors(query: NormQuery, workers=None) -> list:
    """All vectors of norm exactly ``query.target_norm``, both signs, sorted."""
    target = query.target_norm
    vecs = enumerate_short_vectors(query.lattice, -target, workers=workers)
    return [v for norm, v in vecs if norm == target]


def count_roots(lat: GramLattice, workers=None) -> int:
    """Number of (-2)-vectors; zero for the rank-0 lattice."""
    if lat.rank == 0:
        return 0
    return len(enumerate_norm_vectors(NormQuery(lat, -2), workers=workers))
