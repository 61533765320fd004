"""Shared fixtures: small fields and hand-built reference algebras."""

import pytest

from engelkit import exactmath as xm
from engelkit.liealg import algebra_make


@pytest.fixture(scope="session")
def gf2():
    return xm.gf(2)


@pytest.fixture(scope="session")
def gf3():
    return xm.gf(3)


@pytest.fixture(scope="session")
def gf4():
    return xm.gf(4)


@pytest.fixture(scope="session")
def gf5():
    return xm.gf(5)


@pytest.fixture(scope="session")
def rationals():
    return xm.rationals()


def make_abelian(field, n):
    return algebra_make(field, n, {}, labels=[f"a{t}" for t in range(n)])


def make_heisenberg(field):
    # [e1, e2] = e3
    return algebra_make(field, 3, {(0, 1): (0, 0, 1)}, labels=["e1", "e2", "e3"])


def make_affine(field):
    # [x, y] = y
    return algebra_make(field, 2, {(0, 1): (0, 1)}, labels=["x", "y"])


def make_sl2_table(field, gamma0=0):
    # [u-1, u0] = u-1 + gamma0*u1,  [u-1, u1] = u0,  [u0, u1] = u1
    g = field.coerce(gamma0)
    return algebra_make(
        field,
        3,
        {(0, 1): (field.one, field.zero, g), (0, 2): (0, 1, 0), (1, 2): (0, 0, 1)},
        labels=["u-1", "u0", "u1"],
    )
