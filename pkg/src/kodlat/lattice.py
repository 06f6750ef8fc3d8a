"""Integral lattices given by Gram matrices.

A lattice is a value object: two ``GramLattice`` instances are equal iff their
Gram matrices are equal. Vectors are tuples of ints holding coefficients in
the lattice basis. All arithmetic is exact (ints and Fractions).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import intmat

LatticeVector = tuple  # tuple[int, ...] of basis coefficients


class LatticeError(ValueError):
    """Raised on invalid lattice input or an unsatisfiable request."""


@dataclass(frozen=True)
class GramLattice:
    gram: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise LatticeError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise LatticeError(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", g)
        if intmat.det([list(r) for r in g]) == 0:
            raise LatticeError("Gram matrix is degenerate (det = 0)")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return intmat.det(self.matrix())

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.gram]

    def pair(self, v: Sequence[int], w: Sequence[int]) -> int:
        g = self.gram
        return sum(v[i] * g[i][j] * w[j]
                   for i in range(len(v)) if v[i]
                   for j in range(len(w)) if w[j])

    def norm(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def to_json(self) -> dict:
        d = {"gram": self.matrix()}
        if self.name:
            d = {"name": self.name, **d}
        return d

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"GramLattice({label}rank={self.rank}, det={self.det})"


@dataclass(frozen=True)
class DiscriminantGroup:
    elementary_divisors: tuple
    order: int

    def __str__(self):
        if not self.elementary_divisors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.elementary_divisors)


# -- named lattices --------------------------------------------------------

def _a_gram(k):
    return [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(k)]
            for i in range(k)]


def _d_gram(l):
    # chain 1-2-...-(l-1) with node l attached to node l-2
    g = _a_gram(l - 1)
    for row in g:
        row.append(0)
    g.append([0] * l)
    g[l - 1][l - 1] = -2
    g[l - 1][l - 3] = g[l - 3][l - 1] = 1
    return g


def _e_gram(m):
    from .e8 import E8_GRAM
    # simple roots are ordered so that E6 and E7 are leading principal blocks
    return [list(row[:m]) for row in E8_GRAM[:m]]


_SYMBOL = re.compile(r"^\s*(?:(U)|([ADE])_?(\d+)|<\s*(-?\d+)\s*>|⟨\s*(-?\d+)\s*⟩)\s*$")


def named_lattice(name: str) -> GramLattice:
    """Standard Gram matrix for ``U``, ``A_k``, ``D_l``, ``E_m`` or ``<m>``.

    Root lattices use the negative-definite convention.

    >>> named_lattice("A_2").gram
    ((-2, 1), (1, -2))
    """
    m = _SYMBOL.match(name)
    if not m:
        raise LatticeError(f"unsupported lattice symbol: {name!r}")
    u, kind, idx, scal, scal2 = m.groups()
    if u:
        return GramLattice(((0, 1), (1, 0)), name="U")
    if kind:
        n = int(idx)
        if kind == "A" and n >= 1:
            return GramLattice(_a_gram(n), name=f"A_{n}")
        if kind == "D" and n >= 3:
            return GramLattice(_d_gram(n), name=f"D_{n}")
        if kind == "E" and n in (6, 7, 8):
            return GramLattice(_e_gram(n), name=f"E_{n}")
        raise LatticeError(f"unsupported parameter in lattice symbol: {name!r}")
    val = int(scal if scal is not None else scal2)
    if val == 0:
        raise LatticeError(f"unsupported parameter in lattice symbol: {name!r}")
    return GramLattice(((val,),), name=f"<{val}>")


def lattice_from_expression(expr: str) -> GramLattice:
    """Parse sums like ``2U+2E8+A2`` or ``E8 + <-2>`` into a direct sum."""
    terms = [t.strip() for t in expr.split("+") if t.strip()]
    if not terms:
        raise LatticeError(f"empty lattice expression: {expr!r}")
    parts = []
    for term in terms:
        m = re.match(r"^(\d+)\s*(?=[UADE<⟨])(.*)$", term)
        count, sym = (int(m.group(1)), m.group(2)) if m else (1, term)
        if count < 1:
            raise LatticeError(f"bad multiplicity in {term!r}")
        parts.extend([named_lattice(sym)] * count)
    out = parts[0]
    for p in parts[1:]:
        out = direct_sum(out, p)
    return GramLattice(out.gram, name=expr.replace(" ", ""))


# -- constructions ---------------------------------------------------------

def direct_sum(a: GramLattice, b: GramLattice) -> GramLattice:
    n, m = a.rank, b.rank
    g = [list(row) + [0] * m for row in a.gram]
    g += [[0] * n + list(row) for row in b.gram]
    name = f"{a.name}+{b.name}" if a.name and b.name else None
    return GramLattice(g, name=name)


def rescale(lat: GramLattice, m: int) -> GramLattice:
    if m == 0:
        raise LatticeError("rescaling factor must be nonzero")
    return GramLattice([[m * x for x in row] for row in lat.gram],
                       name=f"{lat.name}({m})" if lat.name else None)


def diagonalize(lat: GramLattice) -> list[Fraction]:
    """Diagonal entries of an exact rational congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in lat.gram]
    n = len(a)
    out = []
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise LatticeError("degenerate form")
                # e_k -> e_k + e_j makes the pivot 2 a_kj
                a[k] = [x + y for x, y in zip(a[k], a[j])]
                for row in a:
                    row[k] += row[j]
        p = a[k][k]
        out.append(p)
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                for row in a:
                    row[i] -= f * row[k]
    return out


def signature(lat: GramLattice) -> tuple[int, int]:
    """``(p, q)``: numbers of positive and negative squares, by Sylvester."""
    d = diagonalize(lat)
    return sum(1 for x in d if x > 0), sum(1 for x in d if x < 0)


def is_even(lat: GramLattice) -> bool:
    return all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def is_negative_definite(lat: GramLattice) -> bool:
    return signature(lat) == (0, lat.rank)


def discriminant_group(lat: GramLattice) -> DiscriminantGroup:
    divisors = tuple(d for d in intmat.smith_diagonal(lat.matrix()) if d > 1)
    order = 1
    for d in divisors:
        order *= d
    return DiscriminantGroup(divisors, order)


# -- sublattices -----------------------------------------------------------

def _check_vectors(lat, vectors):
    vecs = [tuple(int(x) for x in v) for v in vectors]
    for v in vecs:
        if len(v) != lat.rank:
            raise LatticeError(f"vector {v} has length {len(v)}, lattice rank is {lat.rank}")
    if vecs and intmat.rank([list(v) for v in vecs]) < len(vecs):
        raise LatticeError(f"vectors are linearly dependent: {vecs}")
    return vecs


def sublattice_gram(lat: GramLattice, basis: Sequence[Sequence[int]]) -> GramLattice:
    vecs = _check_vectors(lat, basis)
    return GramLattice([[lat.pair(v, w) for w in vecs] for v in vecs])


def orthogonal_complement(lat: GramLattice, vectors: Sequence[Sequence[int]]) -> list[LatticeVector]:
    """Hermite-reduced basis of ``{v in L : (v, s) = 0 for all s}``.

    The result is read off a unimodular transform, so it is saturated.
    """
    vecs = _check_vectors(lat, vectors)
    if not vecs:
        return [tuple(r) for r in intmat.identity(lat.rank)]
    g = lat.matrix()
    # pairing matrix P = G S^T; the complement is the left kernel of P
    p = intmat.matmul(g, intmat.transpose([list(v) for v in vecs]))
    return [tuple(r) for r in intmat.left_kernel(p)]


def saturate(lat: GramLattice, vectors: Sequence[Sequence[int]]) -> tuple[list[LatticeVector], int]:
    """Basis of ``span_Q(S) ∩ L`` and the index of ``span_Z(S)`` in it."""
    vecs = _check_vectors(lat, vectors)
    if not vecs:
        return [], 1
    n = lat.rank
    s = [list(v) for v in vecs]
    null = intmat.right_kernel(s)
    if null:
        sat = intmat.right_kernel(null)
    else:
        sat = intmat.identity(n)
    # S = C * T with C integral; the index is |det C|
    coeffs = []
    for v in s:
        x = intmat.solve_rational(sat, v)
        coeffs.append([int(c) for c in x])
    return [tuple(r) for r in sat], abs(intmat.det(coeffs))


def orthogonal_sum_index(lat: GramLattice, s_basis, complement_basis) -> int:
    """Index ``[L : S + S^perp]`` for full-rank ``S + S^perp``."""
    m = [list(v) for v in s_basis] + [list(v) for v in complement_basis]
    if len(m) != lat.rank:
        raise LatticeError("S and its complement do not span a full-rank sublattice")
    return abs(intmat.det(m))


# -- JSON ------------------------------------------------------------------

def lattice_from_json(data) -> GramLattice:
    """Build a lattice from ``{"name": ..., "gram": [[...], ...]}`` (or its text)."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict) or "gram" not in data:
        raise LatticeError('lattice JSON must be an object with a "gram" key')
    gram = data["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise LatticeError('"gram" must be a list of lists of integers')
    for row in gram:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise LatticeError(f'"gram" entries must be integers, got {x!r}')
    return GramLattice(gram, name=data.get("name"))
