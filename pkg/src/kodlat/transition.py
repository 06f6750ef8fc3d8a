"""Kodaira-dimension transition bounds from cusp-form weights.

A cusp form of weight ``b + d*n`` and character det for the family's
arithmetic group gives a canonical form on the n-fold fiber product, so

* one such form             => kappa(F_n) >= 0
* a 2-dimensional space     => kappa(F_n) > 0

The forms available are the quasi-pullback ``Phi`` (weight ``w0``) and the
products ``Phi * Lift(f)`` for ``f`` in ``M_k(rho_L)``, of weight
``w0 + k + 9``; the product space has dimension at least ``dim M_k(rho_L)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embed import quasi_pullback_weight, verify_paper_embedding
from .families import (FAMILY_NAMES, FamilySpec, builtin_family, dim_weil_forms,
                       dim_weil_forms_anti, gritsenko_weight)
from .lattice import LatticeError

PAPER_TABLE = {
    "unirational": (13, 5, 5, 1, 0, 0),
    "kappa_nonneg": (14, 6, 7, 6, 11, 16),
    "kappa_pos": (23, 13, 12, 12, 19, 20),
}
K_START = 15
K_CEILING = 1023


@dataclass(frozen=True)
class WeightCandidate:
    weight: int
    multiplicity_lb: int
    source: str  # "quasi_pullback" or "product(k)"
    k: int | None = None

    def sort_key(self):
        return float("-inf") if self.k is None else self.k

    def to_json(self) -> dict:
        return {"weight": self.weight, "multiplicity_lb": self.multiplicity_lb,
                "source": self.source}


@dataclass(frozen=True)
class Rejection:
    weight: int
    source: str
    reason: str

    def to_json(self) -> dict:
        return {"weight": self.weight, "source": self.source, "reason": self.reason}


@dataclass(frozen=True)
class TransitionReport:
    family: str
    d: int
    b: int
    n_nonneg: int | None
    n_pos: int | None
    witness_nonneg: WeightCandidate | None
    witness_pos: WeightCandidate | None
    unirational_bound: int
    k_max: int
    status: str
    near_misses: tuple = field(default=())
    stabilizes_to: int = 20

    def to_json(self) -> dict:
        w = lambda c: None if c is None else c.to_json()
        return {
            "family": self.family,
            "d": self.d,
            "b": self.b,
            "unirational": self.unirational_bound,
            "unirational_source": "stored",
            "kappa_nonneg": self.n_nonneg,
            "kappa_pos": self.n_pos,
            "witness_nonneg": w(self.witness_nonneg),
            "witness_pos": w(self.witness_pos),
            "k_max": self.k_max,
            "status": self.status,
            "near_misses": [m.to_json() for m in self.near_misses],
            "stabilizes_to": self.stabilizes_to,
            "stabilization_n": None,
        }


def _raw_candidates(f: FamilySpec, k_max: int):
    if f.invariance_mode != "anti_invariant":
        qp = quasi_pullback_weight(2 * (f.w0 - 12))
        if qp.is_cusp:
            yield WeightCandidate(f.w0, 1, "quasi_pullback")
    for k in range(3, k_max + 1, 2):
        if f.invariance_mode == "anti_invariant":
            dim = dim_weil_forms_anti(f, k)
        else:
            dim = dim_weil_forms(f, k)
        if dim >= 1:
            yield WeightCandidate(f.w0 + gritsenko_weight(k), dim, f"product({k})", k)


def _reject_reason(f: FamilySpec, weight: int) -> str | None:
    if weight <= f.b or (weight - f.b) % f.d:
        return f"weight - {f.b} is not a positive multiple of d = {f.d}"
    if f.invariance_mode == "parity" and (weight - f.b) % 2:
        return f"weight is not congruent to b = {f.b} mod 2 (killed by -id)"
    return None


def _sift(f, k_max):
    kept, rejected = [], []
    for c in _raw_candidates(f, k_max):
        reason = _reject_reason(f, c.weight)
        if reason is None:
            kept.append(c)
        else:
            rejected.append(Rejection(c.weight, c.source, reason))
    return kept, rejected


def admissible_candidates(f: FamilySpec, k_max: int) -> list:
    """Cusp-form weights usable for ``f`` with lift sources up to ``k_max``.

    In anti_invariant mode the bare quasi-pullback is skipped: it is
    anti-invariant under the extra involution, and only its products with
    anti-invariant lifts are invariant.
    """
    if k_max < 3:
        raise LatticeError(f"k_max must be at least 3, got {k_max}")
    return _sift(f, k_max)[0]


def _best(f, cands, min_mult):
    pool = [c for c in cands if c.multiplicity_lb >= min_mult]
    if not pool:
        return None, None
    best = min(pool, key=lambda c: ((c.weight - f.b) // f.d, c.sort_key()))
    return (best.weight - f.b) // f.d, best


def _near_misses(f, rejected, ceiling_weight):
    out = [r for r in rejected if ceiling_weight is None or r.weight <= ceiling_weight]
    for name in f.alt_embeddings:
        res = verify_paper_embedding(name)
        reason = _reject_reason(f, res.weight)
        if reason is not None:
            out.append(Rejection(res.weight, f"quasi_pullback[{name}]", reason))
    return tuple(out)


def kodaira_bounds(f: FamilySpec, k_start: int = K_START, k_ceiling: int = K_CEILING) -> TransitionReport:
    """Smallest n with kappa >= 0 and kappa > 0 certified by the weight ledger.

    ``k_max`` is doubled until two consecutive sweeps give the same bounds.
    """
    k_max = k_start if k_start % 2 else k_start + 1
    prev = None
    while True:
        cands, rejected = _sift(f, k_max)
        n0, w0 = _best(f, cands, 1)
        n1, w1 = _best(f, cands, 2)
        cur = (n0, n1)
        if None not in cur and cur == prev:
            ceiling = w1.weight
            return TransitionReport(f.name, f.d, f.b, n0, n1, w0, w1, f.unirational_bound,
                                    k_max, "ok", _near_misses(f, rejected, ceiling))
        nxt = 2 * k_max + 1
        if nxt > k_ceiling:
            if None not in cur:
                return TransitionReport(f.name, f.d, f.b, n0, n1, w0, w1,
                                        f.unirational_bound, k_max, "ok",
                                        _near_misses(f, rejected, w1.weight))
            missing = [lbl for lbl, n in (("kappa >= 0", n0), ("kappa > 0", n1)) if n is None]
            return TransitionReport(f.name, f.d, f.b, n0, n1, w0, w1, f.unirational_bound,
                                    k_max, f"not found below k_max={k_max}: " + ", ".join(missing),
                                    _near_misses(f, rejected, None))
        prev = cur
        k_max = nxt


def theorem_table() -> list:
    return [kodaira_bounds(builtin_family(name)) for name in FAMILY_NAMES]


def check_table(reports) -> list:
    """Disagreements between computed rows and the stored published table."""
    bad = []
    for i, rep in enumerate(reports):
        for row, got in (("kappa_nonneg", rep.n_nonneg), ("kappa_pos", rep.n_pos),
                         ("unirational", rep.unirational_bound)):
            want = PAPER_TABLE[row][i]
            if got != want:
                bad.append(f"{rep.family} {row}: computed {got}, published {want}")
    return bad


def _witness_text(rep, c, n):
    if c is None:
        return "none found"
    src = "quasi-pullback" if c.k is None else f"product with lift of M_{c.k} (dim >= {c.multiplicity_lb})"
    return f"weight {c.weight} = {rep.b} + {rep.d}*{n}, {src}"


def render_table(reports, fmt: str = "md") -> str:
    names = [r.family for r in reports]
    rows = [
        ("unirational (stored)", [r.unirational_bound for r in reports]),
        ("kappa >= 0", [r.n_nonneg for r in reports]),
        ("kappa > 0", [r.n_pos for r in reports]),
    ]
    cell = lambda x: "-" if x is None else str(x)
    if fmt == "csv":
        lines = ["row," + ",".join(names)]
        lines += [f"{label}," + ",".join(cell(x) for x in vals) for label, vals in rows]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = ["| | " + " | ".join(names) + " |",
                 "|---|" + "---|" * len(names)]
        lines += [f"| {label} | " + " | ".join(cell(x) for x in vals) + " |"
                  for label, vals in rows]
        lines.append("")
        for r in reports:
            lines.append(f"- {r.family} (d={r.d}): kappa >= 0 via "
                         f"{_witness_text(r, r.witness_nonneg, r.n_nonneg)}; kappa > 0 via "
                         f"{_witness_text(r, r.witness_pos, r.n_pos)}")
            for m in r.near_misses:
                if m.source.startswith("quasi_pullback["):
                    lines.append(f"  - near miss: weight {m.weight} from {m.source}: {m.reason}")
            if r.status != "ok":
                lines.append(f"  - {r.status}")
        lines.append("")
        lines.append(f"kappa = {reports[0].stabilizes_to if reports else 20} for n large "
                     "(qualitative; no numeric threshold)")
        return "\n".join(lines) + "\n"
    raise LatticeError(f"unknown format {fmt!r}")
