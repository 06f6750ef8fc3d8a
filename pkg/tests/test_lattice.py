import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kodlat.e8 import E8Vector, to_basis_coords
from kodlat.lattice import (DiscriminantGroup, GramLattice, LatticeError, direct_sum,
                            discriminant_group, is_even, lattice_from_expression,
                            lattice_from_json, named_lattice, orthogonal_complement,
                            orthogonal_sum_index, rescale, saturate, signature,
                            sublattice_gram)
from kodlat.shortvec import count_roots

E8 = named_lattice("E8")
DV_IMAGES = [to_basis_coords(E8Vector.from_coords(x)) for x in
             [(1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 1, 2, 0, 0, 0, 0)]]
IR_IMAGES = [to_basis_coords(E8Vector.from_coords(x)) for x in
             [(1, -1, 0, 0, 0, 0, 0, 0), (0, 1, 3, 0, 0, 0, 0, 0)]]


def test_named_basic():
    assert named_lattice("U").gram == ((0, 1), (1, 0))
    assert named_lattice("A_2").gram == ((-2, 1), (1, -2))
    assert named_lattice("<-2>").gram == ((-2,),)


def test_e8_gram_from_coordinate_model():
    # independent route: Gram of the simple roots in model coordinates, via sympy
    from kodlat.e8 import SIMPLE_ROOTS_DOUBLED
    b = sympy.Matrix(SIMPLE_ROOTS_DOUBLED)
    g = -(b * b.T) / 4
    assert E8.matrix() == g.tolist()
    assert abs(sympy.Matrix(E8.matrix()).det()) == 1
    assert E8.det == 1


@pytest.mark.parametrize("sym", ["X3", "A0", "D2", "E9", "<0>", "E_5"])
def test_named_rejects(sym):
    with pytest.raises(LatticeError, match="lattice symbol"):
        named_lattice(sym)


@pytest.mark.parametrize("sym,rank,det", [
    ("A1", 1, -2), ("A3", 3, -4), ("D4", 4, 4), ("D5", 5, -4), ("E6", 6, 3), ("E7", 7, -2),
])
def test_named_dets(sym, rank, det):
    lat = named_lattice(sym)
    assert lat.rank == rank and lat.det == det


def test_gram_invariants_enforced():
    with pytest.raises(LatticeError, match="symmetric"):
        GramLattice([[0, 1], [2, 0]])
    with pytest.raises(LatticeError, match="degenerate"):
        GramLattice([[1, 1], [1, 1]])
    with pytest.raises(LatticeError, match="square"):
        GramLattice([[1, 1]])


def test_direct_sum_examples():
    uu = direct_sum(named_lattice("U"), named_lattice("U"))
    assert uu.rank == 4 and uu.det == 1
    big = lattice_from_expression("2U+2E8+A2")
    assert big.rank == 22
    assert abs(sympy.Matrix(big.matrix()).det()) == 3
    aa = direct_sum(named_lattice("A1"), named_lattice("A1"))
    assert aa.gram == ((-2, 0), (0, -2)) and aa.det == 4


def test_rescale():
    assert rescale(named_lattice("U"), -1).gram == ((0, -1), (-1, 0))
    assert rescale(GramLattice([[-2]]), 3).gram == ((-6,),)
    assert rescale(named_lattice("A2"), -1).gram == ((2, -1), (-1, 2))
    with pytest.raises(LatticeError):
        rescale(named_lattice("U"), 0)


def test_signature_examples():
    assert signature(named_lattice("U")) == (1, 1)
    assert signature(E8) == (0, 8)
    assert signature(lattice_from_expression("2U+2E8+A2")) == (2, 20)
    # zero diagonal throughout forces the off-diagonal pivot branch
    assert signature(GramLattice([[0, 1, 0], [1, 0, 0], [0, 0, -1]])) == (1, 2)


def test_is_even():
    assert is_even(E8)
    assert not is_even(GramLattice([[-1]]))
    assert is_even(GramLattice([[-2, 1], [1, -6]]))


def test_discriminant_examples():
    assert discriminant_group(E8) == DiscriminantGroup((), 1)
    assert discriminant_group(named_lattice("A2")) == DiscriminantGroup((3,), 3)
    assert discriminant_group(GramLattice([[-2, 1], [1, -6]])) == DiscriminantGroup((11,), 11)
    assert discriminant_group(named_lattice("D4")).elementary_divisors == (2, 2)


def test_orthogonal_complement_examples():
    u = named_lattice("U")
    comp = orthogonal_complement(u, [(1, 1)])
    assert len(comp) == 1
    assert sublattice_gram(u, comp).gram == ((-2,),)

    big = lattice_from_expression("2U+2E8+A2")
    a2 = [tuple(int(i == j) for i in range(22)) for j in (20, 21)]
    comp = orthogonal_complement(big, a2)
    assert sublattice_gram(big, comp) == lattice_from_expression("2U+2E8")

    comp = orthogonal_complement(E8, DV_IMAGES)
    n = sublattice_gram(E8, comp)
    assert n.rank == 6 and count_roots(n) == 40


def test_complement_rejects_dependent():
    with pytest.raises(LatticeError, match="dependent"):
        orthogonal_complement(E8, [DV_IMAGES[0], tuple(2 * x for x in DV_IMAGES[0])])


def test_saturate_examples():
    basis, index = saturate(named_lattice("U"), [(2, 0)])
    assert basis == [(1, 0)] and index == 2
    assert saturate(E8, DV_IMAGES)[1] == 1
    big = lattice_from_expression("2U+2E8+A2")
    a2 = [tuple(int(i == j) for i in range(22)) for j in (20, 21)]
    assert saturate(big, a2)[1] == 1
    with pytest.raises(LatticeError):
        saturate(E8, [DV_IMAGES[0], DV_IMAGES[0]])


def test_saturate_index_vs_minors():
    # index = gcd of the maximal minors of the coordinate matrix
    from itertools import combinations
    from math import gcd
    s = [(2, 0, 0, 4, 0, 0, 0, 0), (0, 3, 3, 0, 0, 6, 0, 0)]
    m = sympy.Matrix(s)
    g = 0
    for cols in combinations(range(8), 2):
        g = gcd(g, int(m[:, list(cols)].det()))
    assert saturate(E8, s)[1] == g == 6


def test_sublattice_gram_examples():
    assert sublattice_gram(E8, [tuple(int(i == j) for i in range(8)) for j in range(8)]) == E8
    assert sublattice_gram(E8, DV_IMAGES).gram == ((-2, 1), (1, -6))
    assert sublattice_gram(E8, IR_IMAGES).gram == ((-2, 1), (1, -10))
    with pytest.raises(LatticeError, match="dependent"):
        sublattice_gram(E8, [DV_IMAGES[0], DV_IMAGES[0]])


@pytest.mark.parametrize("images", [DV_IMAGES, IR_IMAGES])
def test_index_identity(images):
    comp = orthogonal_complement(E8, images)
    s = sublattice_gram(E8, images)
    n = sublattice_gram(E8, comp)
    idx = orthogonal_sum_index(E8, images, comp)
    assert abs(s.det) * abs(n.det) == idx ** 2 * abs(E8.det)


# -- properties -------------------------------------------------------------

@st.composite
def even_lattices(draw, max_rank=4):
    n = draw(st.integers(1, max_rank))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * draw(st.integers(-4, 4))
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = draw(st.integers(-3, 3))
    if sympy.Matrix(g).det() == 0:
        g[0][0] += 2
        if sympy.Matrix(g).det() == 0:
            g = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    return GramLattice(g)


@st.composite
def unimodular(draw, n):
    u = sympy.eye(n)
    for _ in range(draw(st.integers(0, 8))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i != j:
            e = sympy.eye(n)
            e[i, j] = draw(st.integers(-2, 2))
            u = e * u
    if draw(st.booleans()):
        u[0, :] = -u[0, :]
    return u


@given(even_lattices(), even_lattices())
def test_direct_sum_properties(a, b):
    s = direct_sum(a, b)
    assert s.det == a.det * b.det
    sa, sb = signature(a), signature(b)
    assert signature(s) == (sa[0] + sb[0], sa[1] + sb[1])


@given(even_lattices())
def test_discriminant_order_is_det(a):
    assert discriminant_group(a).order == abs(a.det)


@given(st.data())
def test_signature_basis_invariant(data):
    a = data.draw(even_lattices())
    u = data.draw(unimodular(a.rank))
    g2 = GramLattice((u * sympy.Matrix(a.matrix()) * u.T).tolist())
    assert signature(g2) == signature(a)


@settings(max_examples=40)
@given(st.data())
def test_complement_properties(data):
    lat = lattice_from_expression("U+A2+A1")
    k = data.draw(st.integers(1, 2))
    vecs = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5),
                              min_size=k, max_size=k))
    if sympy.Matrix(vecs).rank() < k:
        with pytest.raises(LatticeError):
            orthogonal_complement(lat, vecs)
        return
    comp = orthogonal_complement(lat, vecs)
    assert len(comp) == 5 - k
    for c in comp:
        assert all(lat.pair(c, v) == 0 for v in vecs)
    assert saturate(lat, comp)[1] == 1


def test_lattice_json_roundtrip():
    lat = lattice_from_expression("2U+A2")
    again = lattice_from_json(json.dumps(lat.to_json()))
    assert again == lat and again.name == lat.name
    with pytest.raises(LatticeError):
        lattice_from_json({"gram": [[1.5]]})
    with pytest.raises(LatticeError):
        lattice_from_json({"matrix": [[1]]})
