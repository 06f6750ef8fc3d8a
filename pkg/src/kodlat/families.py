"""Polarized Beauville lattices and the six families of polarized symplectic varieties.

For a primitive class h of norm 2D in ``L_2t = 3U + 2E8 + <-2t>`` with
``gcd(t, D) = 1``, the complement ``h^perp`` is

* split type:     ``2U + 2E8 + <-2t> + <-2D>``
* non-split type: ``2U + 2E8 + [[-2t, t], [t, -(D+t)/2]]``  (block det ``tD``)

Dimensions of the vector-valued modular form spaces ``M_k(rho_L)`` are the
closed forms known for each lattice, evaluated for odd ``k > 2``. The general
dimension formula is not implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lattice import GramLattice, LatticeError, direct_sum, lattice_from_expression

MODULI_DIM = 20  # b: every family here has a 20-dimensional period domain

_BASE = "2U+2E8"


@dataclass(frozen=True)
class PolarizationData:
    t: int
    D: int
    split: bool

    def __post_init__(self):
        if self.t < 1 or self.D < 1:
            raise LatticeError(f"t and D must be positive, got t={self.t}, D={self.D}")


def polarization_block(p: PolarizationData) -> GramLattice:
    """The rank-2 summand of ``h^perp`` beyond ``2U + 2E8``."""
    if p.split:
        return GramLattice([[-2 * p.t, 0], [0, -2 * p.D]])
    if (p.D + p.t) % 2:
        raise LatticeError(f"non-split type needs D + t even, got t={p.t}, D={p.D}")
    return GramLattice([[-2 * p.t, p.t], [p.t, -(p.D + p.t) // 2]])


def polarized_lattice(p: PolarizationData) -> GramLattice:
    """``h^perp`` for the given polarization data.

    Non-split data with ``D + t = 2 mod 4`` is accepted, but the result is
    odd there; such classes do not occur inside an even lattice.
    """
    if gcd(p.t, p.D) != 1:
        raise LatticeError(f"gcd(t, D) = {gcd(p.t, p.D)}; the lattice model assumes "
                           "t and D coprime")
    block = polarization_block(p)
    kind = "split" if p.split else "non-split"
    return GramLattice(direct_sum(lattice_from_expression(_BASE), block).gram,
                       name=f"h_perp(t={p.t},D={p.D},{kind})")


# -- closed-form dimensions of M_k(rho_L), k odd > 2 -------------------------

DIM_FORMULAS = {
    "cub": ("[(k+3)/6]", lambda k: (k + 3) // 6),
    "DV": ("(k-1)/2", lambda k: (k - 1) // 2),
    "IR": ("[(5k-3)/6]", lambda k: (5 * k - 3) // 6),
    "EPW": ("[k/3]", lambda k: k // 3),
}
# iota-invariant part for L_EPW (iota swaps the two A_1 summands)
EPW_INVARIANT = ("[(k+2)/4]", lambda k: (k + 2) // 4)

INVARIANCE_MODES = ("tilde_plain", "parity", "anti_invariant")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    d: int
    lattice: GramLattice
    w0: int
    invariance_mode: str
    dim_formula: str
    embedding: str
    unirational_bound: int
    polarization: PolarizationData | None = None
    alt_embeddings: tuple = ()
    b: int = MODULI_DIM

    def to_json(self) -> dict:
        from .lattice import discriminant_group, signature
        disc = discriminant_group(self.lattice)
        pol = self.polarization
        return {
            "name": self.name,
            "d": self.d,
            "b": self.b,
            "lattice": self.lattice.to_json(),
            "signature": list(signature(self.lattice)),
            "discriminant_group": {"elementary_divisors": list(disc.elementary_divisors),
                                   "order": disc.order},
            "w0": self.w0,
            "invariance_mode": self.invariance_mode,
            "dim_formula": self.dim_formula,
            "dim_formula_expr": DIM_FORMULAS[self.dim_formula][0],
            "embedding": self.embedding,
            "polarization": None if pol is None else
            {"t": pol.t, "D": pol.D, "split": pol.split},
            "unirational_bound": self.unirational_bound,
            "unirational_bound_source": "stored",
        }


def _pol(t, D, split, name):
    p = PolarizationData(t, D, split)
    return p, GramLattice(polarized_lattice(p).gram, name=name)


def _build(name):
    if name == "BD":
        p, lat = _pol(1, 3, False, "L_cub")
        return FamilySpec("BD", 2, lat, 48, "tilde_plain", "cub", "cub", 13, p)
    if name == "DV":
        p, lat = _pol(1, 11, False, "L_DV")
        return FamilySpec("DV", 2, lat, 32, "tilde_plain", "DV", "DV", 5, p)
    if name == "LLSS":
        # K3^[4] type, norm 2 non-split; the block [[-6,3],[3,-2]] is
        # isometric to A_2, so the lattice is taken to be the BD lattice
        bd = builtin_family("BD")
        return FamilySpec("LLSS", 4, bd.lattice, 48, "parity", "cub", "cub", 5,
                          PolarizationData(3, 1, False))
    if name == "IR":
        p, lat = _pol(1, 19, False, "L_IR")
        return FamilySpec("IR", 2, lat, 32, "tilde_plain", "IR", "IR", 1, p,
                          alt_embeddings=("IR_alt1", "IR_alt2"))
    if name == "OG":
        p, lat = _pol(1, 1, True, "L_EPW")
        return FamilySpec("OG", 2, lat, 42, "tilde_plain", "EPW", "EPW", 0, p)
    if name == "IKKR":
        # (t, D) = (2, 2) is not coprime, so the lattice is set directly
        lat = GramLattice(lattice_from_expression(_BASE + "+2A1").gram, name="L_EPW")
        return FamilySpec("IKKR", 3, lat, 42, "anti_invariant", "EPW", "EPW", 0,
                          PolarizationData(2, 2, False))
    raise LatticeError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")


FAMILY_NAMES = ("BD", "DV", "LLSS", "IR", "OG", "IKKR")
_CACHE: dict = {}


def builtin_family(name: str) -> FamilySpec:
    if name not in _CACHE:
        _CACHE[name] = _build(name)
    return _CACHE[name]


def _check_k(k):
    if isinstance(k, bool) or not isinstance(k, int):
        raise LatticeError(f"k must be an integer, got {k!r}")
    if k % 2 == 0 or k <= 2:
        raise LatticeError(f"k must be odd and > 2, got {k}")


def dim_weil_forms(f: FamilySpec, k: int) -> int:
    """``dim M_k(rho_L)`` for the family's lattice."""
    _check_k(k)
    return DIM_FORMULAS[f.dim_formula][1](k)


def dim_weil_forms_anti(f: FamilySpec, k: int) -> int:
    """Dimension of the iota-anti-invariant part of ``M_k(rho_L)``."""
    if f.invariance_mode != "anti_invariant":
        raise LatticeError(f"family {f.name} has invariance mode {f.invariance_mode!r}, "
                           "not anti_invariant")
    _check_k(k)
    return DIM_FORMULAS[f.dim_formula][1](k) - EPW_INVARIANT[1](k)


def gritsenko_weight(k: int) -> int:
    """Weight of the Gritsenko lift of ``M_k(rho_L)`` when b = 20."""
    if k % 2 == 0:
        raise LatticeError(f"k must be odd, got {k}")
    return k + MODULI_DIM // 2 - 1
