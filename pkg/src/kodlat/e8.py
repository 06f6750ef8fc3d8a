"""The coordinate model of E8 and its bridge to the simple-root basis.

E8 is the set of x in Q^8 whose coordinates are all integers or all
half-integers, with x_1 + ... + x_8 even, under the negative of the standard
dot product. Vectors are stored as ``doubled = 2x`` so that everything stays
integral.

The Gram basis used by ``named_lattice("E_8")`` is the list of simple roots
``SIMPLE_ROOTS_DOUBLED`` below (Bourbaki order, so E6 and E7 sit in the
leading 6x6 and 7x7 blocks):

    a1 = (1/2)(1,-1,-1,-1,-1,-1,-1,1)   a2 = e1 + e2
    a3 = e2 - e1   a4 = e3 - e2   a5 = e4 - e3
    a6 = e5 - e4   a7 = e6 - e5   a8 = e7 - e6

A model vector with doubled coordinates d has basis coordinates
``d * E8_INVERSE_TIMES_4 / 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .lattice import LatticeError

SIMPLE_ROOTS_DOUBLED = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)

# 4 * inverse of SIMPLE_ROOTS_DOUBLED (rows indexed by model coordinate)
E8_INVERSE_TIMES_4 = (
    (0, 1, -1, 0, 0, 0, 0, 0),
    (0, 1, 1, 0, 0, 0, 0, 0),
    (0, 1, 1, 2, 0, 0, 0, 0),
    (0, 1, 1, 2, 2, 0, 0, 0),
    (0, 1, 1, 2, 2, 2, 0, 0),
    (0, 1, 1, 2, 2, 2, 2, 0),
    (0, 1, 1, 2, 2, 2, 2, 2),
    (4, 5, 7, 10, 8, 6, 4, 2),
)


@dataclass(frozen=True, order=True)
class E8Vector:
    doubled: tuple

    def __post_init__(self):
        d = tuple(int(x) for x in self.doubled)
        if len(d) != 8:
            raise LatticeError(f"E8 vector needs 8 doubled coordinates, got {len(d)}")
        if len({x % 2 for x in d}) > 1:
            raise LatticeError(f"mixed integral and half-integral coordinates: {d}")
        if sum(d) % 4:
            raise LatticeError(f"coordinate sum is not even: {d}")
        object.__setattr__(self, "doubled", d)

    @classmethod
    def from_coords(cls, coords) -> E8Vector:
        """Build from model coordinates (ints, Fractions or strings like '1/2')."""
        doubled = []
        for x in coords:
            y = 2 * Fraction(x)
            if y.denominator != 1:
                raise LatticeError(f"coordinate {x} is not in (1/2)Z")
            doubled.append(int(y))
        return cls(tuple(doubled))

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __neg__(self):
        return E8Vector(tuple(-x for x in self.doubled))

    def __add__(self, other):
        return E8Vector(tuple(x + y for x, y in zip(self.doubled, other.doubled)))

    def __sub__(self, other):
        return self + (-other)

    def to_json(self) -> dict:
        return {"doubled": True, "vector": list(self.doubled)}

    @classmethod
    def from_json(cls, data) -> E8Vector:
        if not isinstance(data, dict) or data.get("doubled") is not True:
            raise LatticeError('E8 vector JSON needs "doubled": true')
        return cls(tuple(data["vector"]))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def e8_norm(v: E8Vector, w: E8Vector) -> int:
    """Pairing under the negative standard form."""
    s = sum(x * y for x, y in zip(v.doubled, w.doubled))
    if s % 4:
        raise LatticeError("pairing is not integral")
    return -(s // 4)


def delta_root(j: int, k: int, sign_j: int, sign_k: int) -> E8Vector:
    """Root with ``x_j = sign_j``, ``x_k = sign_k`` (1-based), zero elsewhere."""
    if j == k:
        raise LatticeError("delta_root needs two distinct indices")
    if not (1 <= j <= 8 and 1 <= k <= 8):
        raise LatticeError(f"indices out of range: {j}, {k}")
    if sign_j not in (1, -1) or sign_k not in (1, -1):
        raise LatticeError("signs must be +1 or -1")
    d = [0] * 8
    d[j - 1] = 2 * sign_j
    d[k - 1] = 2 * sign_k
    return E8Vector(tuple(d))


def delta_prime_root(subset) -> E8Vector:
    """Half-integral root: ``+1/2`` on ``subset`` (1-based), ``-1/2`` elsewhere."""
    s = set(subset)
    if not s <= set(range(1, 9)):
        raise LatticeError(f"subset must lie in 1..8: {sorted(s)}")
    if len(s) % 2:
        raise LatticeError(f"subset must have even size, got {len(s)}")
    return E8Vector(tuple(1 if i in s else -1 for i in range(1, 9)))


def is_delta_type(v: E8Vector) -> bool:
    return all(x % 2 == 0 for x in v.doubled)


def delta_indices(v: E8Vector) -> tuple:
    """1-based support of an integral vector."""
    return tuple(i + 1 for i, x in enumerate(v.doubled) if x)


def delta_prime_subset(v: E8Vector) -> frozenset:
    """The set S with ``v = delta'_S`` for a half-integral root."""
    return frozenset(i + 1 for i, x in enumerate(v.doubled) if x > 0)


@lru_cache(maxsize=None)
def delta_roots() -> tuple:
    out = {delta_root(j, k, a, b)
           for j, k in combinations(range(1, 9), 2)
           for a in (1, -1) for b in (1, -1)}
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def delta_prime_roots() -> tuple:
    out = {delta_prime_root(s)
           for size in range(0, 9, 2)
           for s in combinations(range(1, 9), size)}
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_roots() -> tuple:
    """The 240 roots, sorted by doubled coordinates."""
    return tuple(sorted(delta_roots() + delta_prime_roots()))


def to_basis_coords(v: E8Vector) -> tuple:
    out = []
    for j in range(8):
        s = sum(v.doubled[i] * E8_INVERSE_TIMES_4[i][j] for i in range(8))
        if s % 4:
            raise LatticeError(f"{v} is not in E8")
        out.append(s // 4)
    return tuple(out)


def from_basis_coords(c) -> E8Vector:
    if len(c) != 8:
        raise LatticeError("E8 basis coordinates need length 8")
    return E8Vector(tuple(sum(c[i] * SIMPLE_ROOTS_DOUBLED[i][j] for i in range(8))
                          for j in range(8)))


def _gram():
    return tuple(tuple(e8_norm(E8Vector(a), E8Vector(b)) for b in SIMPLE_ROOTS_DOUBLED)
                 for a in SIMPLE_ROOTS_DOUBLED)


E8_GRAM = _gram()
