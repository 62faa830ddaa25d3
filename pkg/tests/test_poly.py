from hypothesis import given, strategies as st

from freefusion.poly import IntPoly

N = IntPoly.var()

polys = st.lists(st.integers(min_value=-20, max_value=20), max_size=6).map(IntPoly)


def test_construction_trims_trailing_zeros():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly(()).coeffs == ()
    assert not IntPoly((0, 0))
    assert IntPoly((0, 0)).degree == -1


def test_basic_arithmetic():
    assert N + 1 == IntPoly((1, 1))
    assert N - 1 == IntPoly((-1, 1))
    assert N * N == IntPoly((0, 0, 1))
    assert (N - 1) * (N + 1) == N ** 2 - 1
    assert 2 * N == IntPoly((0, 2))
    assert 1 - N == IntPoly((1, -1))
    assert N ** 0 == 1


def test_equality_with_ints():
    assert IntPoly((5,)) == 5
    assert IntPoly(()) == 0
    assert IntPoly((0, 1)) != 1


def test_evaluation():
    p = N ** 2 - N
    assert p(4) == 12
    assert p(1) == 0
    assert IntPoly()(7) == 0


def test_render():
    assert str(N ** 2 - N) == "n^2 - n"
    assert str(N - 1) == "n - 1"
    assert str(IntPoly((1,))) == "1"
    assert str(IntPoly(())) == "0"
    assert str(2 * N + 3) == "2*n + 3"
    assert str(-N) == "-n"
    assert str(-2 * N ** 3 - 1) == "-2*n^3 - 1"
    assert (N  - 1).render("m") == "m - 1"


@given(polys, polys, st.integers(min_value=-10, max_value=10))
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(polys, polys)
def test_ring_laws(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == 0
