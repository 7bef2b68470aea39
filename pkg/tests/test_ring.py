import itertools

import numpy as np
import pytest

from tracecodes import (
    Field,
    ParameterError,
    RingClass,
    RingElem,
    big_trace,
    classify,
    frobenius,
    gray,
    gray_inverse,
    is_unit,
    lee_weight,
    ring_inv,
)
from tracecodes import ring
from tracecodes.ring import gray_word, lee_weight_word, random_element, scale


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

def test_basis_products(f9):
    u, v, uv = ring.u(f9), ring.v(f9), ring.uv(f9)
    assert u * v == uv
    assert v * u == uv
    assert u * u == ring.zero(f9)
    assert v * v == ring.zero(f9)
    assert uv * uv == ring.zero(f9)
    assert u * uv == ring.zero(f9)


def test_one_plus_u_times_one_minus_u(f9):
    one, u = ring.one(f9), ring.u(f9)
    assert (one + u) * (one - u) == one


def test_product_expansion_matches_reference(f9):
    # rx = r0x0 + (r0x1 + r1x0)u + (r0x2 + r2x0)v
    #      + (r0x3 + r1x2 + r2x1 + r3x0)uv
    rng = np.random.default_rng(5)
    mul, add = f9.mul, f9.add
    for _ in range(100):
        r = random_element(f9, rng)
        x = random_element(f9, rng)
        prod = r * x
        assert prod.a == mul(r.a, x.a)
        assert prod.b == add(mul(r.a, x.b), mul(r.b, x.a))
        assert prod.c == add(mul(r.a, x.c), mul(r.c, x.a))
        expect_d = add(add(mul(r.a, x.d), mul(r.b, x.c)),
                       add(mul(r.c, x.b), mul(r.d, x.a)))
        assert prod.d == expect_d


def test_mismatched_fields_rejected(f9, f27):
    with pytest.raises(ParameterError):
        ring.one(f9) * ring.one(f27)


def test_commutative_and_associative(f9):
    rng = np.random.default_rng(6)
    for _ in range(50):
        x, y, z = (random_element(f9, rng) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


# ---------------------------------------------------------------------------
# Frobenius
# ---------------------------------------------------------------------------

def test_frobenius_order_m(f9):
    rng = np.random.default_rng(7)
    for _ in range(500):
        r = random_element(f9, rng)
        out = r
        for _ in range(f9.m):
            out = frobenius(out)
        assert out == r


def test_frobenius_fixes_prime_coordinates(f9):
    for coords in itertools.product(range(3), repeat=4):
        r = RingElem(f9, *coords)
        assert frobenius(r) == r


def test_frobenius_is_multiplicative(f9):
    rng = np.random.default_rng(8)
    for _ in range(100):
        r, s = random_element(f9, rng), random_element(f9, rng)
        assert frobenius(r * s) == frobenius(r) * frobenius(s)
        assert frobenius(r + s) == frobenius(r) + frobenius(s)


# ---------------------------------------------------------------------------
# trace down to the base ring
# ---------------------------------------------------------------------------

def test_big_trace_zero(f9):
    assert not big_trace(ring.zero(f9))


def test_big_trace_coordinatewise(f9):
    r = RingElem(f9, 1, f9.xi, 0, 0)
    out = big_trace(r)
    assert out.coords() == (2, f9.trace(f9.xi), 0, 0)
    assert out.coords() == (2, 2, 0, 0)


def test_big_trace_frobenius_invariant(f9):
    rng = np.random.default_rng(9)
    for _ in range(200):
        r = random_element(f9, rng)
        assert big_trace(frobenius(r)) == big_trace(r)


def test_big_trace_nondegenerate_exhaustive(f9):
    # for every nonzero x some r has Tr(rx) != 0; by linearity it is enough
    # to probe the module generators xi^i * {1, u, v, uv}
    probes = []
    for i in range(f9.m):
        xi_i = f9.exp_code(i)
        probes.extend([
            RingElem(f9, xi_i, 0, 0, 0),
            RingElem(f9, 0, xi_i, 0, 0),
            RingElem(f9, 0, 0, xi_i, 0),
            RingElem(f9, 0, 0, 0, xi_i),
        ])
    for coords in itertools.product(range(9), repeat=4):
        x = RingElem(f9, *coords)
        if not x:
            continue
        assert any(big_trace(r * x) for r in probes), f"degenerate at {x}"


def test_big_trace_base_ring_linear_exhaustive(f9):
    # Tr(lambda * z) = lambda * Tr(z) for every lambda with prime-field
    # coordinates and every z; vectorized over z
    q = f9.q
    flat = np.arange(q**4, dtype=np.int64)
    za, rest = np.divmod(flat, q**3)
    zb, rest = np.divmod(rest, q**2)
    zc, zd = np.divmod(rest, q)
    mul = f9.mul_table
    tr = f9.trace_table.astype(np.int64)
    base = f9.prime_subfield()
    for lam_coords in itertools.product(range(3), repeat=4):
        la, lb, lc, ld = lam_coords
        pa = mul[la, za]
        pb = f9.add_codes(mul[la, zb], mul[lb, za])
        pc = f9.add_codes(mul[la, zc], mul[lc, za])
        pd = f9.add_codes(f9.add_codes(mul[la, zd], mul[lb, zc]),
                          f9.add_codes(mul[lc, zb], mul[ld, za]))
        lhs = np.stack([tr[pa], tr[pb], tr[pc], tr[pd]])
        ta, tb, tc, td = tr[za], tr[zb], tr[zc], tr[zd]
        rhs = np.stack([
            (la * ta) % 3,
            (la * tb + lb * ta) % 3,
            (la * tc + lc * ta) % 3,
            (la * td + lb * tc + lc * tb + ld * ta) % 3,
        ])
        assert (lhs == rhs).all(), f"linearity failed for lambda={lam_coords}"
    assert base.p == 3


# ---------------------------------------------------------------------------
# classification and inverses
# ---------------------------------------------------------------------------

def test_classify_tags(f9):
    assert classify(ring.uv(f9)) is RingClass.UV_LINE
    assert classify(ring.u(f9)) is RingClass.OTHER_MAXIMAL
    assert classify(RingElem(f9, 1, 1, 1, 1)) is RingClass.UNIT
    assert classify(ring.zero(f9)) is RingClass.ZERO
    assert is_unit(RingElem(f9, 1, 1, 1, 1))
    assert not is_unit(ring.u(f9))


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (3, 3)])
def test_classes_partition_and_unit_count(p, m):
    f = Field(p, m)
    q = f.q
    counts = {tag: 0 for tag in RingClass}
    for coords in itertools.product(range(q), repeat=4):
        counts[classify(RingElem(f, *coords))] += 1
    assert counts[RingClass.ZERO] == 1
    assert counts[RingClass.UV_LINE] == q - 1
    assert counts[RingClass.OTHER_MAXIMAL] == q**3 - q
    assert counts[RingClass.UNIT] == (q - 1) * q**3


def test_inverse_of_units(f9):
    rng = np.random.default_rng(10)
    one = ring.one(f9)
    for _ in range(200):
        r = ring.random_unit(f9, rng)
        assert r * ring_inv(r) == one


def test_inverse_rejects_non_units(f9):
    with pytest.raises(ValueError):
        ring_inv(ring.uv(f9))


# ---------------------------------------------------------------------------
# Gray map and Lee weight
# ---------------------------------------------------------------------------

def test_gray_of_zero(f3):
    assert gray(ring.zero(f3)) == (0, 0, 0, 0)


def test_gray_of_all_ones(f3):
    assert gray(RingElem(f3, 1, 1, 1, 1)) == (1, 2, 2, 1)


def test_gray_of_uv_multiples(f3):
    for gamma in (1, 2):
        assert gray(RingElem(f3, 0, 0, 0, gamma)) == (gamma,) * 4


def test_gray_rejects_extension_elements(f9):
    with pytest.raises(ValueError):
        gray(ring.one(f9))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_gray_is_a_bijection(p):
    f = Field(p, 1)
    images = set()
    for coords in itertools.product(range(p), repeat=4):
        r = RingElem(f, *coords)
        img = gray(r)
        images.add(img)
        assert gray_inverse(f, img) == r
    assert len(images) == p**4


def test_gray_is_linear(f3):
    for x_coords in itertools.product(range(3), repeat=4):
        x = RingElem(f3, *x_coords)
        gx = gray(x)
        for y_coords in itertools.product(range(3), repeat=4):
            y = RingElem(f3, *y_coords)
            gy = gray(y)
            expect = tuple((a + b) % 3 for a, b in zip(gx, gy))
            assert gray(x + y) == expect


def test_lee_weight_examples(f3):
    assert lee_weight(ring.zero(f3)) == 0
    assert lee_weight(ring.uv(f3)) == 4
    assert lee_weight(RingElem(f3, 1, 2, 2, 1)) == 1  # 1 - u - v + uv


def test_lee_isometry_on_vectors(f3):
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(1, 20))
        xs = [random_element(f3, rng) for _ in range(n)]
        ys = [random_element(f3, rng) for _ in range(n)]
        diff = [x - y for x, y in zip(xs, ys)]
        hamming = int(np.count_nonzero(gray_word(xs) != gray_word(ys)))
        assert lee_weight_word(diff) == hamming


def test_scale_matches_embedded_product(f9):
    rng = np.random.default_rng(12)
    for _ in range(50):
        r = random_element(f9, rng)
        tau = int(rng.integers(0, 3))
        embedded = RingElem(f9, tau, 0, 0, 0)
        assert scale(r, tau) == embedded * r


def test_str_renders_coefficient_tuples(f9):
    text = str(RingElem(f9, 1, f9.xi, 0, 2))
    assert "u" in text and "uv" in text
    assert str(f9.coeffs(f9.xi)) in text
