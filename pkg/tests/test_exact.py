import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotomo.exact import (
    CycNum,
    Sign,
    compare_real,
    cyc_add,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    embed_order,
    euler_phi,
    galois_apply,
    in_subfield,
    is_real,
    minimal_order,
    restrict_order,
    sign_of_real,
    simplify,
    to_complex_float,
    zeta,
)

from conftest import cycnums, nonzero_cycnums


@pytest.mark.parametrize(
    "n, poly",
    [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (12, (1, 0, -1, 0, 1)), (8, (1, 0, 0, 0, 1))],
)
def test_cyclotomic_polynomials(n, poly):
    assert cyclotomic_polynomial(n) == poly


def test_cyclotomic_degree_is_phi():
    for n in range(1, 70):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_i_squared():
    i = zeta(4)
    assert cyc_mul(i, i) == -1


def test_inverse_of_one_minus_zeta3():
    a = 1 - zeta(3)
    inv = cyc_inv(a)
    assert inv == (2 + zeta(3)) / 3
    assert cyc_mul(a, inv) == 1


def test_inverse_with_denominator():
    a = CycNum(12, [0, 2, 0, -1], 3)
    assert a * a.inverse() == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CycNum(5, [0]).inverse()


def test_embed_zeta3_into_12():
    assert embed_order(zeta(3), 12) == zeta(12, 4)
    assert embed_order(zeta(3), 12).num == zeta(12, 4).num


def test_embed_rational():
    for M in (1, 3, 7, 24):
        assert embed_order(CycNum.rational(1), M) == 1


def test_embed_requires_multiple():
    with pytest.raises(ValueError):
        embed_order(zeta(3), 8)


def test_conjugation_examples():
    assert cyc_conj(zeta(4)) == -zeta(4)
    assert cyc_conj(CycNum.rational(Fraction(3, 7), 12)) == Fraction(3, 7)


def test_galois_examples():
    a = CycNum(8, [1, 2, -1, 3])
    assert galois_apply(a, 1) == a
    assert galois_apply(zeta(8), 3) == zeta(8, 3)
    with pytest.raises(ValueError):
        galois_apply(a, 2)


def test_realness_and_subfields():
    assert is_real(zeta(12) + zeta(12, 11))
    assert in_subfield(embed_order(zeta(4), 24), 4)
    assert not in_subfield(zeta(24), 4)
    assert not is_real(zeta(5))


def test_restrict_and_minimal_order():
    a = embed_order(1 + 2 * zeta(4), 24)
    assert minimal_order(a) == 4
    r = restrict_order(a, 4)
    assert r.order == 4 and r == 1 + 2 * zeta(4)
    assert simplify(a).order == 4
    with pytest.raises(ValueError):
        restrict_order(zeta(24), 4)


def test_sign_examples():
    assert sign_of_real(CycNum.rational(0)) is Sign.ZERO
    assert sign_of_real(zeta(12) + zeta(12, 11)) is Sign.POSITIVE
    sqrt5 = zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)
    assert sign_of_real(sqrt5) is Sign.POSITIVE
    assert sqrt5 * sqrt5 == 5
    assert sign_of_real(-sqrt5) is Sign.NEGATIVE
    with pytest.raises(ValueError):
        sign_of_real(zeta(4))


def test_sign_of_tiny_difference():
    # (1 + sqrt5)/2 against a close rational convergent of the golden ratio
    sqrt5 = zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)
    phi = (1 + sqrt5) / 2
    f = [1, 1]
    for _ in range(60):
        f.append(f[-1] + f[-2])
    q = Fraction(f[-1], f[-2])
    assert abs(float(phi) - float(q)) < 1e-20
    # convergents alternate: f[L-1]/f[L-2] lies below phi for even L
    s = sign_of_real(phi - q)
    assert s is (Sign.POSITIVE if len(f) % 2 == 0 else Sign.NEGATIVE)
    assert compare_real(phi, q) == int(s)


def test_complex_float_examples():
    e = to_complex_float(CycNum.rational(1))
    assert e.center == 1 and e.radius == 0
    z = to_complex_float(zeta(4)).center
    assert abs(z - 1j) < 1e-15
    assert abs(abs(to_complex_float(zeta(8)).center) - 1) < 1e-12
    with pytest.raises(ValueError):
        to_complex_float(zeta(4), 20)


def test_json_round_trip_big():
    a = CycNum(12, [10**40 + 1, -3, 7, 2**70], 11**9)
    data = json.loads(json.dumps(a.to_json()))
    b = CycNum.from_json(data)
    assert b.num == a.num and b.den == a.den and b.order == a.order


def test_json_rejects_wrong_length():
    with pytest.raises(ValueError):
        CycNum.from_json({"order": 5, "coeffs": [["1", "1"]]})


def test_canonical_form():
    a = CycNum(4, [2, 4], 6)
    assert a.num == (1, 2) and a.den == 3
    b = CycNum(4, [0, 0], 5)
    assert b.den == 1 and b.is_zero()
    c = CycNum(4, [-1, 1], -2)
    assert c.den == 2 and c.num == (1, -1)


def test_long_coefficient_lists_are_reduced():
    # 1 + z + z^2 = 0 in Q(zeta_3)
    assert CycNum(3, [1, 1, 1]).is_zero()
    assert CycNum.from_coeffs(6, [0] * 7 + [1]) == zeta(6)


def test_hash_across_orders():
    a = 1 + zeta(4)
    b = embed_order(a, 24)
    assert a == b and hash(a) == hash(b)
    assert hash(CycNum.rational(Fraction(3, 2), 12)) == hash(Fraction(3, 2))
    assert {a: 1}[b] == 1


# properties


@given(cycnums(), cycnums(), cycnums())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert cyc_add(a, cyc_neg(a)) == 0


@given(nonzero_cycnums())
def test_inverse_property(a):
    assert a * a.inverse() == 1


@given(cycnums(), cycnums())
def test_conjugation_is_involutive_homomorphism(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert is_real(a * a.conjugate())


@given(cycnums(order=24), st.sampled_from([1, 5, 7, 11, 13, 17, 19, 23]), st.sampled_from([1, 5, 7, 11, 13]))
def test_galois_composition(a, s, t):
    assert galois_apply(galois_apply(a, s), t) == galois_apply(a, (s * t) % 24)


@given(cycnums())
def test_sign_matches_high_precision(a):
    r = a + a.conjugate()
    e = to_complex_float(r, 256)
    s = sign_of_real(r)
    if e.real.a > 0:
        assert s is Sign.POSITIVE
    elif e.real.b < 0:
        assert s is Sign.NEGATIVE
    if r.is_zero():
        assert s is Sign.ZERO


@given(cycnums(), st.sampled_from([2, 3, 5]))
def test_embedding_preserves_value(a, k):
    b = embed_order(a, a.order * k)
    assert a == b
    ea, eb = to_complex_float(a, 128), to_complex_float(b, 128)
    tol = 1e-30 + ea.radius + eb.radius
    assert abs(ea.center - eb.center) <= tol + 1e-12


@given(cycnums(order=4))
def test_subfield_round_trip(a):
    b = embed_order(a, 24)
    assert in_subfield(b, 4)
    assert restrict_order(b, 4) == a


@given(cycnums(order=12), cycnums(order=12))
def test_equality_iff_difference_zero(a, b):
    assert ((a - b).is_zero()) == (a.num == b.num and a.den == b.den)


@given(cycnums())
def test_float_enclosure_contains_fast_value(a):
    e = to_complex_float(a, 256)
    c = complex(a)
    assert abs(c - e.center) <= 1e-9 * (1 + abs(c))


@given(cycnums())
def test_json_round_trip(a):
    assert CycNum.from_json(json.loads(json.dumps(a.to_json()))) == a


@given(cycnums(), cycnums())
def test_compare_real_is_antisymmetric(a, b):
    x, y = a + a.conjugate(), b + b.conjugate()
    assert compare_real(x, y) == -compare_real(y, x)
    fx, fy = float(x), float(y)
    if abs(fx - fy) > 1e-9:
        assert compare_real(x, y) == (1 if fx > fy else -1)


def test_zeta_order():
    for n in (3, 5, 8, 12):
        assert zeta(n) ** n == 1
        assert zeta(n) ** (n // 2 if n % 2 == 0 else n) != 0
    assert math.isclose(float(zeta(12) + zeta(12, 11)), math.sqrt(3))
