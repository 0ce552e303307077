"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N) reduced modulo the N-th cyclotomic polynomial, as an integer
numerator vector over a common positive denominator.  This form is
canonical, so equality of two elements of the same order is a tuple
comparison.  Rational scalars are plain ``fractions.Fraction`` objects
and embed as elements of order 1.

Operands of different orders are embedded into the lcm of the orders
before any arithmetic takes place.

    >>> z = zeta(4)
    >>> z * z == -1
    True
    >>> (1 - zeta(3)).inverse() == (2 + zeta(3)) / 3
    True
"""

from __future__ import annotations

import enum
import math
import threading
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from mpmath.ctx_iv import MPIntervalContext

__all__ = [
    "CycNum",
    "Sign",
    "Enclosure",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "cyc_add",
    "cyc_mul",
    "cyc_neg",
    "cyc_inv",
    "embed_order",
    "restrict_order",
    "cyc_conj",
    "galois_apply",
    "is_real",
    "in_subfield",
    "minimal_order",
    "simplify",
    "sign_of_real",
    "to_complex_float",
    "compare_real",
]


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def euler_phi(n):
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n):
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


_cyclo_lock = threading.Lock()
_cyclo_memo: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Return the integer coefficients of Phi_n, lowest degree first.

    Computed by exact division of x^n - 1 by Phi_d for every proper
    divisor d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    with _cyclo_lock:
        cached = _cyclo_memo.get(n)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div_monic(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    with _cyclo_lock:
        _cyclo_memo[n] = result
    return result


def _exact_div_monic(num, den):
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("division is not exact")
    return quot


def _snap(x):
    # exact table values for 0, +-1/2, +-1 avoid residues such as cos(pi/2) = 6e-17
    h = round(2 * x) / 2
    return h if abs(x - h) < 1e-15 else x


class _Field:
    """Per-order tables shared by all elements of Q(zeta_N)."""

    def __init__(self, order):
        self.order = order
        self.phi = phi = euler_phi(order)
        self.poly = cyclotomic_polynomial(order)
        # powers[k] = x^k mod Phi_N, integer because Phi_N is monic
        powers = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(order):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * self.poly[j]
        self.powers = powers
        self.units = [s for s in range(1, order + 1) if math.gcd(s, order) == 1]
        ang = [2 * math.pi * k / order for k in range(phi)]
        self.cos = [_snap(math.cos(a)) for a in ang]
        self.sin = [_snap(math.sin(a)) for a in ang]
        # Ramanujan sums: trace of zeta^k down to Q
        self.trace = []
        for k in range(order):
            g = math.gcd(k, order)
            q = order // g
            self.trace.append(_mobius(q) * phi // euler_phi(q))


@lru_cache(maxsize=None)
def _field(order) -> _Field:
    return _Field(order)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CycNum:
    """An exact element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "num", "den", "_hash", "_approx")

    def __init__(self, order: int, num, den: int = 1, *, _normalized=False):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        F = _field(order)
        if _normalized:
            self.num, self.den = num, den
        else:
            num = list(num)
            if len(num) > F.phi:
                red = [0] * F.phi
                for k, c in enumerate(num):
                    if c:
                        for j, e in enumerate(F.powers[k % order]):
                            if e:
                                red[j] += c * e
                num = red
            elif len(num) < F.phi:
                num = num + [0] * (F.phi - len(num))
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            self.num, self.den = _normalize(num, den)
        self.order = order
        self._hash = None
        self._approx = None

    # constructors

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> "CycNum":
        """Build sum(coeffs[k] * zeta_order^k) from rational coefficients.

        ``coeffs`` may be longer than phi(order); it is reduced.
        """
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return cls(order, [0])
        den = math.lcm(*(f.denominator for f in fr))
        return cls(order, [f.numerator * (den // f.denominator) for f in fr], den)

    @classmethod
    def rational(cls, q, order: int = 1) -> "CycNum":
        q = Fraction(q)
        return cls(order, [q.numerator], q.denominator)

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    @property
    def phi(self) -> int:
        return len(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # coercion helpers

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Rational)):
            return CycNum.rational(other)
        return NotImplemented

    def _common(self, other):
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return embed_order(self, m), embed_order(other, m)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        if a.den == b.den:
            return CycNum(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycNum(
            a.order, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        F = _field(a.order)
        phi = F.phi
        if b.is_rational():
            c = b.num[0]
            return CycNum(a.order, [x * c for x in a.num], a.den * b.den)
        if a.is_rational():
            c = a.num[0]
            return CycNum(a.order, [x * c for x in b.num], a.den * b.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        res = prod[:phi]
        powers = F.powers
        order = a.order
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                for j, e in enumerate(powers[k % order]):
                    if e:
                        res[j] += c * e
        return CycNum(order, res, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse by the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum(self.order, [self.den], self.num[0])
        poly = [Fraction(c) for c in _field(self.order).poly]
        a = _strip([Fraction(c) for c in self.num])
        # invariant: r_i = s_i * a  (mod Phi)
        r0, r1 = poly, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _strip(_poly_sub(s0, _poly_mul(q, s1)))
        c = r1[0]
        inv = [x * self.den / c for x in s1]
        return CycNum.from_coeffs(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CycNum":
        return galois_apply(self, self.order - 1) if self.order > 2 else self

    # comparison and hashing

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.order == other.order:
            return self.num == other.num and self.den == other.den
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        # normalized traces of a and a*conj(a) are invariant under embedding
        if self._hash is None:
            F = _field(self.order)
            tr = F.trace
            n = self.order
            t1 = Fraction(sum(c * tr[j] for j, c in enumerate(self.num) if c), self.den * F.phi)
            nz = [(j, c) for j, c in enumerate(self.num) if c]
            t2 = 0
            for j, cj in nz:
                for k, ck in nz:
                    t2 += cj * ck * tr[(j - k) % n]
            t2 = Fraction(t2, self.den * self.den * F.phi)
            if self.is_rational():
                self._hash = hash(t1)
            else:
                self._hash = hash((t1, t2))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # floating point views

    def _float_parts(self):
        if self._approx is None:
            F = _field(self.order)
            try:
                re = sum(c * F.cos[j] for j, c in enumerate(self.num) if c) / self.den
                im = sum(c * F.sin[j] for j, c in enumerate(self.num) if c) / self.den
                mag = sum(abs(c) for c in self.num) / self.den
            except OverflowError:
                enc = to_complex_float(self, 106)
                center = enc.center
                re, im = center.real, center.imag
                mag = float(sum(abs(c) for c in self.num) / Fraction(self.den))
            self._approx = (re, im, mag * 1e-13)
        return self._approx

    def __complex__(self):
        re, im, _ = self._float_parts()
        return complex(re, im)

    def __float__(self):
        if not is_real(self):
            raise ValueError("float() of a non-real cyclotomic number")
        return self._float_parts()[0]

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"({c})*z{self.order}^{j}")
        return "CycNum(" + (" + ".join(terms) if terms else "0") + f"; order={self.order})"

    # serialization

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "CycNum":
        order = int(data["order"])
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != euler_phi(order):
            raise ValueError(
                f"order {order} needs {euler_phi(order)} coefficients, got {len(coeffs)}"
            )
        return cls.from_coeffs(order, coeffs)


# polynomial helpers over Fraction, lowest degree first


def _strip(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], _strip(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return _strip(q), _strip(a[:db] if db else [Fraction(0)])


# functional API


def zeta(order: int, k: int = 1) -> CycNum:
    """zeta_order^k with zeta_order = exp(2 pi i / order)."""
    F = _field(order)
    return CycNum(order, F.powers[k % order], 1, _normalized=True)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def embed_order(a: CycNum, m: int) -> CycNum:
    """Represent ``a`` in Q(zeta_m); requires order(a) | m."""
    if m % a.order:
        raise ValueError(f"cannot embed order {a.order} into order {m}")
    if m == a.order:
        return a
    F = _field(m)
    step = m // a.order
    res = [0] * F.phi
    for j, c in enumerate(a.num):
        if c:
            for i, e in enumerate(F.powers[(j * step) % m]):
                if e:
                    res[i] += c * e
    return CycNum(m, res, a.den)


def galois_apply(a: CycNum, s: int) -> CycNum:
    """Apply the automorphism zeta_N -> zeta_N^s (gcd(s, N) = 1)."""
    n = a.order
    if math.gcd(s, n) != 1:
        raise ValueError(f"exponent {s} is not coprime to order {n}")
    s %= n
    if s == 1 % n:
        return a
    F = _field(n)
    res = [0] * F.phi
    for j, c in enumerate(a.num):
        if c:
            for i, e in enumerate(F.powers[(j * s) % n]):
                if e:
                    res[i] += c * e
    return CycNum(n, res, a.den)


def cyc_conj(a: CycNum) -> CycNum:
    return a.conjugate()


def is_real(a: CycNum) -> bool:
    return a.conjugate() == a


def in_subfield(a: CycNum, n: int) -> bool:
    """True iff ``a`` lies in Q(zeta_n), n dividing the order of ``a``.

    Tests fixedness under the Galois group of Q(zeta_N)/Q(zeta_n),
    i.e. all zeta_N -> zeta_N^s with s = 1 mod n.
    """
    N = a.order
    if N % n:
        raise ValueError(f"subfield order {n} does not divide {N}")
    for s in _field(N).units:
        if s % n == 1 % n and s != 1 and galois_apply(a, s) != a:
            return False
    return True


def restrict_order(a: CycNum, n: int) -> CycNum:
    """Rewrite ``a`` as an element of order ``n`` (n | order(a)).

    Raises ValueError when ``a`` does not lie in Q(zeta_n).
    """
    N = a.order
    if N % n:
        raise ValueError(f"subfield order {n} does not divide {N}")
    if n == N:
        return a
    if a.is_rational():
        return CycNum(n, [a.num[0]], a.den)
    FN = _field(N)
    pn = euler_phi(n)
    step = N // n
    # columns: basis zeta_n^j embedded into Q(zeta_N)
    cols = [FN.powers[(j * step) % N] for j in range(pn)]
    rows = [[Fraction(cols[j][i]) for j in range(pn)] + [Fraction(a.num[i])] for i in range(FN.phi)]
    sol = _solve(rows, pn)
    if sol is None:
        raise ValueError(f"{a!r} does not lie in Q(zeta_{n})")
    out = CycNum.from_coeffs(n, [x / a.den for x in sol])
    if embed_order(out, N) != a:
        raise ValueError(f"{a!r} does not lie in Q(zeta_{n})")
    return out


def _solve(rows, ncols):
    """Gaussian elimination on an augmented consistent system; None if inconsistent."""
    rows = [r[:] for r in rows]
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][ncols]
    return sol


def minimal_order(a: CycNum) -> int:
    """Smallest m | order(a) with ``a`` in Q(zeta_m)."""
    if a.is_rational():
        return 1
    for d in _divisors(a.order):
        if in_subfield(a, d):
            return d
    return a.order


def simplify(a: CycNum) -> CycNum:
    """The same value written at its minimal order."""
    return restrict_order(a, minimal_order(a))


# signs and enclosures


class Enclosure:
    """Rigorous enclosure of a complex value by real and imaginary intervals."""

    def __init__(self, real, imag):
        self.real = real
        self.imag = imag

    @property
    def center(self) -> complex:
        return complex(float(self.real.mid), float(self.imag.mid))

    @property
    def radius(self) -> float:
        return float(max(self.real.delta, self.imag.delta)) / 2

    def __repr__(self):
        return f"Enclosure({self.center!r} +- {self.radius:.3g})"


def _interval_sum(a: CycNum, prec: int, want_imag: bool):
    ctx = MPIntervalContext()
    ctx.prec = prec
    two_pi = 2 * ctx.pi
    re = ctx.mpf(0)
    im = ctx.mpf(0)
    for j, c in enumerate(a.num):
        if c:
            t = two_pi * j / a.order
            re += c * ctx.cos(t)
            if want_imag:
                im += c * ctx.sin(t)
    return ctx, re / a.den, im / a.den


def to_complex_float(a: CycNum, precision: int = 53) -> Enclosure:
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    _, re, im = _interval_sum(a, precision, True)
    return Enclosure(re, im)


_SIGN_MAX_PREC = 1 << 16


def sign_of_real(a: CycNum) -> Sign:
    """Exact sign of a real cyclotomic number.

    Zero is decided on the canonical form; otherwise the value is
    evaluated in doubling precision until its enclosure excludes zero.
    """
    a = CycNum._coerce(a)
    if a is NotImplemented:
        raise TypeError("sign_of_real needs a cyclotomic or rational number")
    if a.is_zero():
        return Sign.ZERO
    if a.is_rational():
        return Sign.POSITIVE if a.num[0] > 0 else Sign.NEGATIVE
    if not is_real(a):
        raise ValueError(f"sign of non-real number {a!r}")
    re, _, err = a._float_parts()
    if abs(re) > err:
        return Sign.POSITIVE if re > 0 else Sign.NEGATIVE
    prec = 128
    while prec <= _SIGN_MAX_PREC:
        _, iv_re, _ = _interval_sum(a, prec, False)
        if iv_re.a > 0:
            return Sign.POSITIVE
        if iv_re.b < 0:
            return Sign.NEGATIVE
        prec *= 2
    raise ArithmeticError("sign determination did not converge")  # pragma: no cover


def compare_real(a, b) -> int:
    """-1, 0 or 1 comparing two real cyclotomic numbers (or rationals)."""
    return int(sign_of_real(CycNum._coerce(a) - CycNum._coerce(b)))
