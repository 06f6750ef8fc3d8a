import pytest
import sympy
from hypothesis import given, settings, strategies as st

from corpus import NEG_DEF_CORPUS, brute_force_vectors
from kodlat.lattice import GramLattice, LatticeError, lattice_from_expression, named_lattice
from kodlat.shortvec import NormQuery, count_roots, enumerate_norm_vectors, enumerate_short_vectors


def test_examples():
    assert enumerate_norm_vectors(NormQuery(GramLattice([[-2]]), -2)) == [(-1,), (1,)]
    assert len(enumerate_norm_vectors(NormQuery(named_lattice("E8"), -2))) == 240


def test_a2_against_box():
    a2 = named_lattice("A2")
    box = sorted((x, y) for x in range(-3, 4) for y in range(-3, 4) if a2.norm((x, y)) == -2)
    assert len(box) == 6
    assert enumerate_norm_vectors(NormQuery(a2, -2)) == box


@pytest.mark.parametrize("sym,count", [("E6", 72), ("D6", 60), ("E7", 126), ("A1", 2)])
def test_count_roots(sym, count):
    assert count_roots(named_lattice(sym)) == count


def test_rank_zero():
    assert count_roots(GramLattice(())) == 0


def test_a1_sum():
    assert count_roots(lattice_from_expression("A1+A1")) == 4


@pytest.mark.parametrize("gram", [[[0, 1], [1, 0]], [[2]], [[-2, 0], [0, 2]]])
def test_rejects_indefinite(gram):
    with pytest.raises(LatticeError, match="signature"):
        NormQuery(GramLattice(gram), -2)
    with pytest.raises(LatticeError, match="signature"):
        count_roots(GramLattice(gram))


def test_rejects_nonnegative_target():
    with pytest.raises(LatticeError, match="negative"):
        NormQuery(named_lattice("A2"), 0)


@pytest.mark.parametrize("name", sorted(NEG_DEF_CORPUS))
def test_corpus_against_brute_force(name):
    lat = NEG_DEF_CORPUS[name]
    for norm in range(-1, -9, -1):
        assert enumerate_norm_vectors(NormQuery(lat, norm)) == brute_force_vectors(lat, norm)


@st.composite
def neg_def(draw):
    n = draw(st.integers(1, 3))
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    b = sympy.Matrix(rows)
    if b.det() == 0:
        b = b + sympy.eye(n) * 3
        if b.det() == 0:
            b = sympy.eye(n)
    return GramLattice((-(b * b.T)).tolist())


@settings(max_examples=40, deadline=None)
@given(neg_def(), st.integers(1, 8))
def test_random_against_brute_force(lat, n):
    assert enumerate_norm_vectors(NormQuery(lat, -n)) == brute_force_vectors(lat, -n)


@pytest.mark.parametrize("name", ["D4", "A4", "skew3", "K_DV"])
def test_combined_pass_equals_separate(name):
    lat = NEG_DEF_CORPUS[name]
    both = enumerate_short_vectors(lat, 4)
    for norm in (-2, -4):
        assert [v for n, v in both if n == norm] == enumerate_norm_vectors(NormQuery(lat, norm))


@pytest.mark.parametrize("name", sorted(NEG_DEF_CORPUS))
def test_closed_under_negation(name):
    vecs = enumerate_norm_vectors(NormQuery(NEG_DEF_CORPUS[name], -2))
    assert len(vecs) % 2 == 0
    assert sorted(tuple(-x for x in v) for v in vecs) == vecs


def test_parallel_matches_serial():
    e8 = named_lattice("E8")
    assert enumerate_short_vectors(e8, 4, workers=3) == enumerate_short_vectors(e8, 4, workers=1)


def test_workers_from_env(monkeypatch):
    monkeypatch.setenv("KODLAT_WORKERS", "2")
    assert count_roots(named_lattice("D5")) == 40
