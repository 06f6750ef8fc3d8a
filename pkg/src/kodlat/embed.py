"""Embeddings of even negative-definite rank-2 forms into E8.

For an embedding ``K -> E8`` the complement ``N = K^perp`` determines the
quasi-pullback of the Borcherds form to ``2U + 2E8 + K``: it has weight
``12 + r(N)/2`` where ``r(N)`` counts the (-2)-vectors of ``N``, and it is a
cusp form as soon as ``r(N) > 0``.

The search pins the first image to the root ``(1, -1, 0, ..., 0)`` by default.
This relies on the Weyl group of E8 acting transitively on roots; the
``exhaustive`` mode drops the assumption and serves as its check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import e8
from .e8 import E8Vector, e8_norm
from .lattice import (GramLattice, LatticeError, named_lattice, orthogonal_complement,
                      orthogonal_sum_index, saturate, sublattice_gram)
from .shortvec import count_roots, enumerate_short_vectors

FIRST_ROOT = e8.delta_root(1, 2, 1, -1)
MODES = ("first_root_fixed", "exhaustive")


class QuasiPullbackWeight(NamedTuple):
    weight: int
    is_cusp: bool


def quasi_pullback_weight(root_count: int) -> QuasiPullbackWeight:
    if root_count < 0 or root_count % 2:
        raise LatticeError(f"root count must be even and nonnegative, got {root_count}")
    return QuasiPullbackWeight(12 + root_count // 2, root_count > 0)


@dataclass(frozen=True)
class RankTwoForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a >= 0 or self.c >= 0 or self.a % 2 or self.c % 2:
            raise LatticeError(f"diagonal entries must be even and negative: {self.gram}")
        if self.a * self.c - self.b ** 2 <= 0:
            raise LatticeError(f"form is not negative definite: {self.gram}")

    @classmethod
    def from_gram(cls, gram) -> RankTwoForm:
        if len(gram) != 2 or any(len(r) != 2 for r in gram) or gram[0][1] != gram[1][0]:
            raise LatticeError(f"expected a symmetric 2x2 Gram matrix, got {gram}")
        return cls(gram[0][0], gram[0][1], gram[1][1])

    @property
    def gram(self):
        return [[self.a, self.b], [self.b, self.c]]

    @property
    def det(self) -> int:
        return self.a * self.c - self.b ** 2


@dataclass(frozen=True)
class EmbeddingResult:
    form: RankTwoForm
    v1: E8Vector
    v2: E8Vector
    image_index: int
    complement_basis: tuple
    complement_gram: GramLattice
    root_count: int
    weight: int
    is_cusp: bool
    sum_index: int
    pair_count: int = field(default=1, compare=False)

    @property
    def primitive(self) -> bool:
        return self.image_index == 1

    def to_json(self) -> dict:
        return {
            "form": self.form.gram,
            "v1": self.v1.to_json(),
            "v2": self.v2.to_json(),
            "image_index": self.image_index,
            "primitive": self.primitive,
            "complement_gram": self.complement_gram.matrix(),
            "root_count": self.root_count,
            "weight": self.weight,
            "is_cusp": self.is_cusp,
            "sum_index": self.sum_index,
            "pair_count": self.pair_count,
        }


def orthogonal_roots(*vectors: E8Vector) -> list:
    """Roots of E8 orthogonal to every given vector, in sorted order."""
    return [r for r in e8.all_roots() if all(e8_norm(r, v) == 0 for v in vectors)]


def embedding_result(form: RankTwoForm, v1: E8Vector, v2: E8Vector, pair_count=1) -> EmbeddingResult:
    """Recompute image index, complement and root count for one image pair."""
    got = [[e8_norm(v1, v1), e8_norm(v1, v2)], [e8_norm(v2, v1), e8_norm(v2, v2)]]
    if got != form.gram:
        raise LatticeError(f"images have Gram {got}, expected {form.gram}")
    lat = named_lattice("E_8")
    s = [e8.to_basis_coords(v1), e8.to_basis_coords(v2)]
    _, index = saturate(lat, s)
    comp = orthogonal_complement(lat, s)
    comp_gram = sublattice_gram(lat, comp)
    r = count_roots(comp_gram)
    qp = quasi_pullback_weight(r)
    return EmbeddingResult(form, v1, v2, index, tuple(comp), comp_gram, r,
                           qp.weight, qp.is_cusp, orthogonal_sum_index(lat, s, comp),
                           pair_count)


@lru_cache(maxsize=None)
def e8_shell(norm: int) -> tuple:
    """All E8 vectors of the given (negative) norm, sorted by doubled coordinates."""
    if norm >= 0 or norm % 2:
        return ()
    vecs = enumerate_short_vectors(named_lattice("E_8"), -norm)
    return tuple(sorted(e8.from_basis_coords(v) for n, v in vecs if n == norm))


def _index_minors(c1, cands):
    """gcd of the 2x2 minors of ``[c1; c]`` for each row ``c`` of ``cands``."""
    g = np.zeros(len(cands), dtype=np.int64)
    for i in range(8):
        for j in range(i + 1, 8):
            g = np.gcd(g, c1[i] * cands[:, j] - c1[j] * cands[:, i])
    return g


def find_embeddings(form: RankTwoForm, mode: str = "first_root_fixed") -> list:
    """Search image pairs for ``form`` and group them by (root_count, image_index).

    Each group is represented by its lexicographically first pair; the
    group's size is kept in ``pair_count``. Non-primitive groups are kept
    and flagged by ``image_index > 1``. An infeasible form gives ``[]``.
    """
    if mode not in MODES:
        raise LatticeError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "first_root_fixed":
        if form.a != -2:
            raise LatticeError("first_root_fixed mode needs a = -2")
        firsts = [FIRST_ROOT]
    else:
        firsts = list(e8_shell(form.a))
    shell = e8_shell(form.c)
    if not firsts or not shell:
        return []
    roots = np.array([r.doubled for r in e8.all_roots()], dtype=np.int64)
    shell_d = np.array([v.doubled for v in shell], dtype=np.int64)
    shell_b = np.array([e8.to_basis_coords(v) for v in shell], dtype=np.int64)

    groups = {}
    for v1 in firsts:
        d1 = np.array(v1.doubled, dtype=np.int64)
        mask = shell_d @ d1 == -4 * form.b
        if not mask.any():
            continue
        cand_d = shell_d[mask]
        cand_idx = np.nonzero(mask)[0]
        perp = roots[roots @ d1 == 0]
        counts = (perp @ cand_d.T == 0).sum(axis=0)
        index = _index_minors(e8.to_basis_coords(v1), shell_b[mask])
        for pos, r, ix in zip(cand_idx, counts, index):
            key = (int(r), int(ix))
            if key in groups:
                groups[key][2] += 1
            else:
                groups[key] = [v1, shell[pos], 1]
    results = [embedding_result(form, v1, v2, pair_count=n)
               for _, (v1, v2, n) in sorted(groups.items())]
    return results


def attained_root_counts(form: RankTwoForm, mode: str = "first_root_fixed") -> list:
    return sorted({res.root_count for res in find_embeddings(form, mode)})


# explicit embeddings (images of the two basis vectors of K)
PAPER_EMBEDDINGS = {
    "DV": ((-2, 1, -6), (1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 1, 2, 0, 0, 0, 0)),
    "IR": ((-2, 1, -10), (1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 3, 0, 0, 0, 0, 0)),
    "IR_alt1": ((-2, 1, -10), (1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 1, 2, 2, 0, 0, 0)),
    "IR_alt2": ((-2, 1, -10), (1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 1, 1, 1, 1, 1, 2)),
    # A_2 and 2A_1: any natural choice of roots
    "cub": ((-2, 1, -2), (1, -1, 0, 0, 0, 0, 0, 0), (0, 1, -1, 0, 0, 0, 0, 0)),
    "EPW": ((-2, 0, -2), (1, -1, 0, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0, 0)),
}


def verify_paper_embedding(name: str) -> EmbeddingResult:
    try:
        abc, x1, x2 = PAPER_EMBEDDINGS[name]
    except KeyError:
        raise LatticeError(f"unknown embedding {name!r}; expected one of "
                           f"{sorted(PAPER_EMBEDDINGS)}") from None
    return embedding_result(RankTwoForm(*abc), E8Vector.from_coords(x1),
                            E8Vector.from_coords(x2))
