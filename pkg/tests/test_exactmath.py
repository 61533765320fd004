"""Field arithmetic, RREF canonicity, subspace lattice basics."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from engelkit import exactmath as xm
from engelkit.errors import (
    AmbientMismatch,
    BudgetExceeded,
    DivisionByZero,
    InfiniteField,
    NonPrimeModulus,
    ReducibleModulusPolynomial,
)

GF2 = xm.gf(2)
GF3 = xm.gf(3)
GF4 = xm.gf(4)
GF5 = xm.gf(5)
QQ = xm.rationals()

SMALL_FIELDS = [GF2, GF3, GF4, GF5, xm.gf(8), xm.gf(9), xm.gf(25)]


def test_field_make_basics():
    assert GF5.inv(2) == 3  # 2*3 = 6 = 1 mod 5
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    t = GF4.from_coeffs([0, 1])
    assert GF4.coeffs(GF4.mul(t, t)) == (1, 1)  # t^2 = t + 1 mod t^2+t+1


def test_field_make_rejects_bad_specs():
    with pytest.raises(NonPrimeModulus):
        xm.field_make(xm.FieldSpec.prime(6))
    # t^2 + 1 = (t+1)^2 over GF(2)
    with pytest.raises(ReducibleModulusPolynomial):
        xm.field_make(xm.FieldSpec.prime_power(2, 2, (1, 0, 1)))
    with pytest.raises(DivisionByZero):
        GF5.inv(0)
    with pytest.raises(DivisionByZero):
        GF4.inv(0)
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


@pytest.mark.parametrize("field", SMALL_FIELDS, ids=lambda f: f.name)
def test_field_axioms_exhaustive(field):
    elems = list(field.elements())
    assert len(elems) == field.size()
    add, mul = field.add, field.mul
    for a, b in itertools.product(elems, repeat=2):
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
        assert add(a, field.zero) == a
        assert mul(a, field.one) == a
        assert add(a, field.neg(a)) == field.zero
        if b:
            assert mul(b, field.inv(b)) == field.one
    # associativity + distributivity on a full triple sweep for the tiny fields
    if len(elems) <= 9:
        for a, b, c in itertools.product(elems, repeat=3):
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(
    a=st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4),
    b=st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4),
    c=st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4),
)
def test_rational_axioms_sampled(a, b, c):
    F = QQ
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    r = F.add(a, b)
    assert r.denominator > 0  # Fraction keeps lowest terms, positive denominator


def _random_matrix(field, draw_rows, draw_cols, data):
    elems = list(field.elements())
    rows = [[elems[data.draw(st.integers(0, len(elems) - 1))] for _ in range(draw_cols)] for _ in range(draw_rows)]
    return xm.matrix(field, rows)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_rref_canonical_and_rank_nullity(data):
    field = data.draw(st.sampled_from([GF2, GF3, GF4, GF5]))
    nrows = data.draw(st.integers(1, 4))
    ncols = data.draw(st.integers(1, 4))
    m = _random_matrix(field, nrows, ncols, data)
    r1, rank, pivots = xm.rref(m)
    r2, rank2, _ = xm.rref(r1)
    assert r1 == r2 and rank == rank2  # idempotent
    assert len(pivots) == rank
    ker = xm.kernel(m)
    assert ker.dim + rank == ncols
    img = xm.image(m)
    assert img.dim == rank
    for row in ker.basis:
        prod = xm.mat_mul(m, xm.transpose(xm.matrix(field, [row])))
        assert not any(x for col in prod.entries for x in col)


def test_rref_frozen_examples():
    ident = xm.identity_matrix(GF5, 3)
    r, rank, _ = xm.rref(ident)
    assert r == ident and rank == 3
    z = xm.matrix(GF3, [[0, 0], [0, 0]])
    r, rank, _ = xm.rref(z)
    assert r == z and rank == 0
    m = xm.matrix(GF5, [[1, 2], [2, 4]])
    r, rank, _ = xm.rref(m)
    assert r.entries == ((1, 2), (0, 0)) and rank == 1


def test_kernel_image_frozen_examples():
    assert xm.kernel(xm.identity_matrix(GF3, 2)).dim == 0
    assert xm.kernel(xm.matrix(GF3, [[0, 0], [0, 0]])).dim == 2
    m = xm.matrix(GF3, [[0, 1], [0, 0]])
    assert xm.kernel(m).basis == ((1, 0),)
    assert xm.image(m).basis == ((0, 1),)


def test_subspace_lattice_frozen_examples():
    a = xm.subspace_from_vectors(GF2, 3, [(1, 0, 0)])
    b = xm.subspace_from_vectors(GF2, 3, [(0, 1, 0)])
    zero = xm.zero_subspace(GF2, 3)
    assert xm.subspace_sum(a, zero) == a
    assert xm.subspace_intersect(a, a) == a
    assert xm.subspace_sum(a, b).dim == 2
    assert xm.subspace_intersect(a, b).dim == 0
    assert xm.subspace_leq(a, xm.subspace_sum(a, b))
    assert not xm.subspace_leq(xm.subspace_sum(a, b), a)
    with pytest.raises(AmbientMismatch):
        xm.subspace_sum(a, xm.zero_subspace(GF2, 4))


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_subspace_dimension_formula(data):
    field = data.draw(st.sampled_from([GF2, GF3, GF5]))
    n = data.draw(st.integers(1, 4))
    elems = list(field.elements())
    vecs = lambda k: [
        tuple(elems[data.draw(st.integers(0, len(elems) - 1))] for _ in range(n)) for _ in range(k)
    ]
    a = xm.subspace_from_vectors(field, n, vecs(data.draw(st.integers(0, 3))))
    b = xm.subspace_from_vectors(field, n, vecs(data.draw(st.integers(0, 3))))
    s = xm.subspace_sum(a, b)
    i = xm.subspace_intersect(a, b)
    assert s.dim + i.dim == a.dim + b.dim
    assert xm.subspace_leq(i, a) and xm.subspace_leq(i, b)
    assert xm.subspace_leq(a, s) and xm.subspace_leq(b, s)
    # canonical form: re-deriving the subspace from any spanning set is identity
    assert xm.subspace_from_vectors(field, n, a.basis) == a


def test_enumerate_vectors():
    assert len(list(xm.enumerate_vectors(GF2, 2))) == 4
    assert list(xm.enumerate_vectors(GF3, 1)) == [(0,), (1,), (2,)]
    vecs = list(xm.enumerate_vectors(GF5, 3))
    assert len(vecs) == 125 and len(set(vecs)) == 125
    with pytest.raises(InfiniteField):
        list(xm.enumerate_vectors(QQ, 1))
    with pytest.raises(BudgetExceeded):
        list(xm.enumerate_vectors(GF5, 3, max_elements=100))


@pytest.mark.parametrize("field,n", [(GF2, 3), (GF3, 2), (GF5, 2), (GF4, 2)])
def test_enumerate_line_reps(field, n):
    reps = list(xm.enumerate_line_reps(field, n))
    q = field.size()
    assert len(reps) == (q**n - 1) // (q - 1)
    # each nonzero vector is a scalar multiple of exactly one representative
    seen = set()
    for rep in reps:
        for c in field.elements():
            if c:
                seen.add(xm.vec_scale(field, c, rep))
    assert len(seen) == q**n - 1


def test_is_square():
    assert xm.is_square(GF5, 4)
    assert not xm.is_square(GF5, 2)  # squares mod 5 are {0, 1, 4}
    assert all(xm.is_square(GF4, s) for s in GF4.elements())
    assert xm.is_square(GF3, 0)
    with pytest.raises(InfiniteField):
        xm.is_square(QQ, Fraction(4))


def test_scalar_json_round_trip():
    for field, values in [(GF5, [0, 3]), (GF4, list(GF4.elements())), (QQ, [Fraction(3), Fraction(-7, 2)])]:
        for v in values:
            assert field.scalar_from_json(field.scalar_to_json(v)) == v


def test_field_spec_json_round_trip():
    for field in [GF2, GF4, GF5, QQ]:
        assert xm.FieldSpec.from_json(field.spec.to_json()) == field.spec
        assert xm.field_make(field.spec) is field
