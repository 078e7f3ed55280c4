"""Exact and rigorously enclosed real arithmetic.

Three number kinds are supported:

* ``Fraction`` (aliased ``Rational``) -- exact rationals,
* ``AlgebraicReal`` -- an integer polynomial together with a rational
  isolating interval containing exactly one of its real roots,
* ``SeriesReal`` -- a lazily generated digit series ``sum d_i * r^i`` whose
  value is only ever reported as a rational interval (partial sum plus a
  geometric tail bound).

Comparisons between any two of these either return a certified sign or an
explicit ``Comparison.UNDECIDED`` at the requested precision.  The module
also provides arithmetic in the number field Q(alpha) for alpha rational or
algebraic (``QAlphaElement``), which backs every exact test in the expansion
algorithms.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence, Union

Rational = Fraction

DEFAULT_PRECISION = Fraction(1, 2**128)
_BISECTION_CAP = 100_000
_SIGN_CAP = 256  # halvings of the base enclosure before giving up


class ExactnumError(Exception):
    pass


class IterationLimit(ExactnumError):
    """A refinement loop exceeded its configured cap."""


class UnsupportedBase(ExactnumError):
    """Q(alpha) arithmetic requested for a base that does not support it."""


class NonIsolatingInterval(ExactnumError):
    """The given interval does not isolate exactly one real root."""


class UndecidedComparison(ExactnumError):
    """An algorithm needed a sign that could not be certified."""


class Comparison(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNDECIDED = "undecided"


# ---------------------------------------------------------------------------
# polynomial helpers (coefficients listed low degree first)
# ---------------------------------------------------------------------------

def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def poly_degree(coeffs) -> int:
    return len(poly_trim(coeffs)) - 1


def poly_derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def poly_divmod(num, den):
    """Quotient and remainder of two polynomials over the rationals."""
    num = [Fraction(c) for c in poly_trim(num)]
    den = [Fraction(c) for c in poly_trim(den)]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    rem = num[:]
    dlead = den[-1]
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        q = rem[-1] / dlead
        quot[shift] = q
        for i, c in enumerate(den):
            rem[shift + i] -= q * c
        rem = poly_trim(rem)
        if not rem:
            break
    return poly_trim(quot), rem


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_normalize(coeffs):
    """Integer-primitive form with positive leading coefficient.

    Used as the canonical key when deciding whether two algebraic reals
    carry the same defining polynomial.
    """
    coeffs = poly_trim(coeffs)
    if not coeffs:
        return ()
    fracs = [Fraction(c) for c in coeffs]
    denom = 1
    for c in fracs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fracs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_gcd(a, b):
    """Monic gcd of two polynomials over the rationals."""
    a = poly_trim([Fraction(c) for c in a])
    b = poly_trim([Fraction(c) for c in b])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_squarefree_part(coeffs):
    """coeffs / gcd(coeffs, coeffs'): same roots, all simple."""
    coeffs = poly_trim([Fraction(c) for c in coeffs])
    d = poly_trim(poly_derivative(coeffs))
    if not d:
        return coeffs
    g = poly_gcd(coeffs, d)
    if poly_degree(g) == 0:
        return coeffs
    q, r = poly_divmod(coeffs, g)
    if r:
        raise ExactnumError("squarefree reduction failed")
    return q


def sturm_chain(coeffs):
    chain = [poly_trim([Fraction(c) for c in coeffs])]
    d = poly_derivative(chain[0])
    if poly_trim(d):
        chain.append(poly_trim(d))
        while poly_degree(chain[-1]) > 0:
            _, rem = poly_divmod(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def sturm_root_count(coeffs, lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if hi <= lo:
        return 0
    if chain is None:
        chain = sturm_chain(coeffs)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def isolate_largest_root(coeffs, lo: Fraction, hi: Fraction) -> "AlgebraicReal":
    """Isolate the largest real root of ``coeffs`` inside (lo, hi].

    Raises ``NonIsolatingInterval`` if the interval holds no root.  The
    endpoints must not themselves be roots.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    chain = sturm_chain(coeffs)
    if poly_eval(coeffs, lo) == 0 or poly_eval(coeffs, hi) == 0:
        raise NonIsolatingInterval("endpoint is a root; shift the interval")
    total = sturm_root_count(coeffs, lo, hi, chain)
    if total == 0:
        raise NonIsolatingInterval("no real root in the given interval")
    while total > 1:
        mid = (lo + hi) / 2
        if poly_eval(coeffs, mid) == 0:
            # nudge the split point off the root
            mid = (lo + 2 * hi) / 3
            if poly_eval(coeffs, mid) == 0:
                raise NonIsolatingInterval("could not separate roots")
        upper = sturm_root_count(coeffs, mid, hi, chain)
        if upper >= 1:
            lo = mid
            total = upper
        else:
            hi = mid
            total = sturm_root_count(coeffs, lo, hi, chain)
    return AlgebraicReal(coeffs, lo, hi)


# ---------------------------------------------------------------------------
# interval helpers over rational endpoints
# ---------------------------------------------------------------------------

def interval_mul(a, b):
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(p), max(p))


def interval_poly_eval(coeffs: Sequence[Fraction], iv):
    """Horner evaluation of a polynomial over a rational interval."""
    lo = hi = Fraction(0)
    for c in reversed(list(coeffs)):
        lo, hi = interval_mul((lo, hi), iv)
        lo, hi = lo + c, hi + c
    return (lo, hi)


class AlgebraicReal:
    """A real algebraic number: integer polynomial + isolating interval.

    The interval must contain exactly one real root of the polynomial
    (verified with a Sturm chain at construction).  Refinement bisects the
    interval using exact sign evaluations; the cached interval only ever
    shrinks, so the denoted root never changes.
    """

    __slots__ = ("coeffs", "_lo", "_hi", "_chain")

    def __init__(self, coeffs, lo, hi):
        self.coeffs = poly_normalize(coeffs)
        if len(self.coeffs) < 2:
            raise NonIsolatingInterval("polynomial must be nonconstant")
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise NonIsolatingInterval("empty interval")
        if poly_eval(self.coeffs, lo) == 0 or poly_eval(self.coeffs, hi) == 0:
            raise NonIsolatingInterval(
                "interval endpoint is itself a root; use the rational directly")
        self._chain = sturm_chain(self.coeffs)
        n = sturm_root_count(self.coeffs, lo, hi, self._chain)
        if n != 1:
            raise NonIsolatingInterval(
                f"interval ({lo}, {hi}) contains {n} roots, need exactly 1")
        if poly_eval(self.coeffs, lo) * poly_eval(self.coeffs, hi) > 0:
            raise NonIsolatingInterval(
                "no sign change over the interval (even multiplicity?); "
                "pass the squarefree part of the polynomial")
        self._lo, self._hi = lo, hi

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def interval(self):
        return (self._lo, self._hi)

    def refine(self, width: Fraction):
        """Shrink the isolating interval to the requested width."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        lo, hi = self._lo, self._hi
        if hi - lo <= width:
            return (lo, hi)
        sign_lo = 1 if poly_eval(self.coeffs, lo) > 0 else -1
        steps = 0
        while hi - lo > width:
            steps += 1
            if steps > _BISECTION_CAP:
                raise IterationLimit("algebraic refinement exceeded cap")
            mid = (lo + hi) / 2
            v = poly_eval(self.coeffs, mid)
            if v == 0:
                lo = hi = mid
                break
            if (v > 0) == (sign_lo > 0):
                lo = mid
            else:
                hi = mid
        self._lo, self._hi = lo, hi
        return (lo, hi)

    def __float__(self):
        lo, hi = self.refine(Fraction(1, 10**17) * max(Fraction(1), abs(self._hi)))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"AlgebraicReal({list(self.coeffs)}, {self._lo}, {self._hi})"

    def __eq__(self, other):
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        return compare(self, other) is Comparison.EQUAL

    def __hash__(self):
        raise TypeError("AlgebraicReal is not hashable; compare explicitly")


class SeriesReal:
    """Value of ``sum_{i>=1} d_i * ratio^i`` for a lazy digit stream.

    ``digits(i)`` must be a pure, total function of ``i >= 1`` with values in
    ``[digit_low, digit_high]``.  Enclosures are partial sums plus the exact
    geometric bound on the remaining tail, so every returned interval
    rigorously contains the value.
    """

    __slots__ = ("digits", "ratio", "digit_low", "digit_high", "description",
                 "_n", "_partial", "_pow")

    def __init__(self, digits: Callable[[int], int], ratio, digit_low: int,
                 digit_high: int, description: str = ""):
        self.digits = digits
        self.ratio = Fraction(ratio)
        if not 0 < self.ratio < 1:
            raise ValueError("ratio must lie in (0, 1)")
        if digit_low > digit_high:
            raise ValueError("digit bounds out of order")
        self.digit_low = digit_low
        self.digit_high = digit_high
        self.description = description
        self._n = 0
        self._partial = Fraction(0)
        self._pow = Fraction(1)  # ratio ** _n

    def _tail_bounds(self):
        geo = self._pow * self.ratio / (1 - self.ratio)
        return (self.digit_low * geo, self.digit_high * geo)

    def enclosure(self, width: Fraction):
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        span = self.digit_high - self.digit_low
        steps = 0
        while True:
            t_lo, t_hi = self._tail_bounds()
            if span == 0 or t_hi - t_lo <= width:
                return (self._partial + t_lo, self._partial + t_hi)
            steps += 1
            if steps > _BISECTION_CAP:
                raise IterationLimit("series refinement exceeded cap")
            self._n += 1
            self._pow *= self.ratio
            self._partial += self.digits(self._n) * self._pow

    def __float__(self):
        lo, hi = self.enclosure(Fraction(1, 10**17))
        return float((lo + hi) / 2)

    def __repr__(self):
        name = self.description or "series"
        return f"SeriesReal<{name}>"


def binary_digit_source(refine_fn: Callable[[Fraction], tuple],
                        cap: int = 4096) -> Callable[[int], int]:
    """Turn a rigorous enclosure function into a binary digit stream.

    ``refine_fn(width)`` must return nested rational enclosures of a value in
    (0, 1) that is not a dyadic rational.  The returned callable yields the
    value's binary digits, so ``SeriesReal(digits, 1/2, 0, 1)`` re-encloses
    the same number through the standard partial-sum machinery.
    """
    bits: list[int] = []

    def digit(i: int) -> int:
        while len(bits) < i:
            k = max(8, 2 * (len(bits) + 1))
            while True:
                if k > cap:
                    raise IterationLimit("binary digit extraction stalled")
                lo, hi = refine_fn(Fraction(1, 2**k))
                n = len(bits) + 1
                if (lo * 2**n).__floor__() == (hi * 2**n).__floor__():
                    break
                k *= 2
            scaled = (lo * 2**n).__floor__()
            del bits[:]
            bits.extend(int(b) for b in bin(scaled)[2:].zfill(n)[-n:])
        return bits[i - 1]

    return digit


RealNumber = Union[Fraction, AlgebraicReal, SeriesReal]


def enclosure(x: RealNumber, width) -> tuple:
    """Uniform rational enclosure for any ``RealNumber``."""
    width = Fraction(width)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return (x, x)
    if isinstance(x, AlgebraicReal):
        return x.refine(width)
    if isinstance(x, SeriesReal):
        return x.enclosure(width)
    raise TypeError(f"not a RealNumber: {x!r}")


def refine(x, width) -> tuple:
    """Alias for :func:`enclosure`."""
    return enclosure(x, width)


def to_float(x: RealNumber) -> float:
    if isinstance(x, (int, Fraction)):
        return float(x)
    return float(x)


def compare(a: RealNumber, b: RealNumber,
            precision: Fraction = DEFAULT_PRECISION) -> Comparison:
    """Certified three-way comparison, or UNDECIDED below ``precision``.

    LESS/EQUAL/GREATER are always correct.  EQUAL is only produced when it
    can be proved: identical rationals, or two algebraic reals sharing a
    defining polynomial whose isolating intervals overlap on a stretch
    containing a single root.  Rational-vs-rational and rational-vs-algebraic
    are always decided.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if a is b:
        return Comparison.EQUAL
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(b, int):
        b = Fraction(b)

    if isinstance(a, Fraction) and isinstance(b, Fraction):
        if a < b:
            return Comparison.LESS
        if a > b:
            return Comparison.GREATER
        return Comparison.EQUAL

    if isinstance(a, Fraction) and isinstance(b, AlgebraicReal):
        inv = _compare_rat_alg(a, b)
        return inv
    if isinstance(a, AlgebraicReal) and isinstance(b, Fraction):
        return _flip(_compare_rat_alg(b, a))

    if isinstance(a, AlgebraicReal) and isinstance(b, AlgebraicReal):
        if a.coeffs == b.coeffs:
            lo = min(a.interval()[0], b.interval()[0])
            hi = max(a.interval()[1], b.interval()[1])
            if a.interval()[1] > b.interval()[0] and b.interval()[1] > a.interval()[0]:
                if sturm_root_count(a.coeffs, lo, hi) == 1:
                    return Comparison.EQUAL
        # fall through to interval separation

    return _compare_by_enclosure(a, b, precision)


def _flip(c: Comparison) -> Comparison:
    if c is Comparison.LESS:
        return Comparison.GREATER
    if c is Comparison.GREATER:
        return Comparison.LESS
    return c


def _compare_rat_alg(q: Fraction, x: AlgebraicReal) -> Comparison:
    lo, hi = x.interval()
    if lo < hi:
        v = poly_eval(x.coeffs, q)
        if v == 0 and lo < q < hi:
            return Comparison.EQUAL
        # q is not the denoted root, so bisection must separate them
        steps = 0
        while lo <= q <= hi and lo < hi:
            steps += 1
            if steps > _BISECTION_CAP:
                raise IterationLimit("rational/algebraic comparison stalled")
            lo, hi = x.refine((hi - lo) / 4)
    if lo == hi:  # interval collapsed onto a rational root
        if q == lo:
            return Comparison.EQUAL
        return Comparison.LESS if q < lo else Comparison.GREATER
    return Comparison.LESS if q < lo else Comparison.GREATER


def _compare_by_enclosure(a, b, precision) -> Comparison:
    width = Fraction(1, 16)
    while True:
        alo, ahi = enclosure(a, width)
        blo, bhi = enclosure(b, width)
        if ahi < blo:
            return Comparison.LESS
        if bhi < alo:
            return Comparison.GREATER
        if width <= precision / 4:
            return Comparison.UNDECIDED
        width = width / 16


# ---------------------------------------------------------------------------
# Q(alpha) arithmetic
# ---------------------------------------------------------------------------

class QAlphaContext:
    """The field Q(alpha) for alpha rational or algebraic.

    Elements are canonical coefficient vectors of length ``degree`` (degree 1
    for rational alpha, so elements collapse to plain rationals).  Products
    are reduced modulo the defining polynomial, which must be irreducible for
    sign certification to terminate; every base shipped with this package
    satisfies that.
    """

    def __init__(self, alpha: RealNumber):
        if isinstance(alpha, int):
            alpha = Fraction(alpha)
        if isinstance(alpha, Fraction):
            self.alpha = alpha
            self.degree = 1
            self.key = ("rat", alpha)
        elif isinstance(alpha, AlgebraicReal):
            self.alpha = alpha
            self.degree = alpha.degree
            self.key = ("alg", alpha.coeffs)
            lead = Fraction(alpha.coeffs[-1])
            monic = [Fraction(c) / lead for c in alpha.coeffs]
            # reduction table: alpha^d .. alpha^(2d-2) as canonical vectors
            d = self.degree
            self._red = []
            vec = [-c for c in monic[:-1]]  # alpha^d
            self._red.append(tuple(vec))
            for _ in range(d - 2):
                vec = self._shift_reduce(vec)
                self._red.append(tuple(vec))
            self._monic = tuple(monic)
        else:
            raise UnsupportedBase(
                "Q(alpha) arithmetic requires a rational or algebraic base")

    def _shift_reduce(self, vec):
        d = self.degree
        out = [Fraction(0)] * d
        top = vec[-1]
        for i in range(d - 1):
            out[i + 1] = vec[i]
        if top:
            red0 = self._red[0]
            for i in range(d):
                out[i] += top * red0[i]
        return out

    def element(self, coeffs) -> "QAlphaElement":
        coeffs = [Fraction(c) for c in coeffs]
        if self.degree == 1:
            return QAlphaElement(self, (poly_eval(coeffs, self.alpha),))
        if len(coeffs) > self.degree:
            coeffs = self._reduce(coeffs)
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return QAlphaElement(self, tuple(coeffs))

    def embed(self, value) -> "QAlphaElement":
        return self.element([Fraction(value)] + [0] * (self.degree - 1))

    @property
    def zero(self):
        return self.embed(0)

    @property
    def one(self):
        return self.embed(1)

    @property
    def alpha_element(self):
        if self.degree == 1:
            return self.embed(self.alpha)
        return self.element([0, 1])

    def _reduce(self, coeffs):
        d = self.degree
        out = [Fraction(c) for c in coeffs[:d]]
        out += [Fraction(0)] * (d - len(out))
        for j in range(d, len(coeffs)):
            c = coeffs[j]
            if c == 0:
                continue
            red = self._red[j - d]
            for i in range(d):
                out[i] += c * red[i]
        return out

    def mul(self, a, b):
        if self.degree == 1:
            return (a[0] * b[0],)
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                prod[i + j] += ca * cb
        return tuple(self._reduce(prod))

    def inverse(self, coeffs):
        if self.degree == 1:
            if coeffs[0] == 0:
                raise ZeroDivisionError("division by zero in Q(alpha)")
            return (1 / coeffs[0],)
        if all(c == 0 for c in coeffs):
            raise ZeroDivisionError("division by zero in Q(alpha)")
        # extended Euclid: u * f + v * minpoly = gcd = constant
        f = poly_trim(list(coeffs))
        g = list(self._monic)
        s0, s1 = [Fraction(1)], []
        while poly_trim(g):
            q, r = poly_divmod(f, g)
            f, g = g, r
            s0, s1 = s1, _poly_sub(s0, poly_mul(q, s1))
        if poly_degree(f) != 0:
            raise UnsupportedBase(
                "defining polynomial is not irreducible over Q")
        c = f[0]
        inv = [x / c for x in s0]
        return tuple(self._reduce(inv))

    def alpha_enclosure(self, width):
        return enclosure(self.alpha, width)

    def __repr__(self):
        return f"QAlphaContext({self.alpha!r})"


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return poly_trim([x - y for x, y in zip(a, b)])


class QAlphaElement:
    """Canonical element of Q(alpha); immutable and hashable.

    Supports field arithmetic with other elements of the same context and
    with rationals.  ``sign()`` is exact: nonzero elements separate from zero
    after finitely many refinements of the base enclosure because the
    defining polynomial is irreducible.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: QAlphaContext, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, QAlphaElement):
            if other.ctx.key != self.ctx.key:
                raise ValueError("elements from different Q(alpha) contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.embed(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QAlphaElement(self.ctx,
                             tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QAlphaElement(self.ctx,
                             tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QAlphaElement(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QAlphaElement(self.ctx, self.ctx.mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * QAlphaElement(self.ctx, self.ctx.inverse(o.coeffs))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.ctx.degree == 1:
            v = self.coeffs[0]
            return 1 if v > 0 else -1
        width = Fraction(1, 16)
        for _ in range(_SIGN_CAP):
            iv = self.ctx.alpha_enclosure(width)
            lo, hi = interval_poly_eval(self.coeffs, iv)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            width /= 16
        raise UndecidedComparison(
            "sign of Q(alpha) element not certified (is the base polynomial "
            "irreducible?)")

    def value_enclosure(self, width):
        width = Fraction(width)
        if self.ctx.degree == 1:
            v = self.coeffs[0]
            return (v, v)
        aw = Fraction(1, 16)
        for _ in range(_BISECTION_CAP):
            iv = self.ctx.alpha_enclosure(aw)
            lo, hi = interval_poly_eval(self.coeffs, iv)
            if hi - lo <= width:
                return (lo, hi)
            aw /= 16
        raise IterationLimit("Q(alpha) enclosure did not converge")

    def to_fraction(self) -> Fraction:
        if self.ctx.degree == 1:
            return self.coeffs[0]
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        raise ValueError("element is not rational")

    # exact comparisons
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ctx.key, self.coeffs))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __float__(self):
        lo, hi = self.value_enclosure(Fraction(1, 10**17))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"QAlpha{list(self.coeffs)}"


def eval_poly_in_alpha(coeffs: Sequence, alpha: RealNumber) -> QAlphaElement:
    """Canonical Q(alpha) element for ``sum coeffs[i] * alpha^i``.

    For rational alpha the result collapses to a single rational coefficient.
    Raises ``UnsupportedBase`` for series-valued alpha.
    """
    ctx = QAlphaContext(alpha)
    return ctx.element([Fraction(c) for c in coeffs])


# ---------------------------------------------------------------------------
# text formats:  rat:p/q   alg:c0,c1,...,ck@[lo,hi]   plus named constants
# ---------------------------------------------------------------------------

_NAMED_CONSTANTS: dict[str, Callable[[], RealNumber]] = {}


def register_constant(name: str, factory: Callable[[], RealNumber]):
    _NAMED_CONSTANTS[name] = factory


_ALG_RE = re.compile(r"^alg:(?P<coeffs>[^@]+)@\[(?P<lo>[^,\]]+),(?P<hi>[^,\]]+)\]$")


def parse_real(text: str) -> RealNumber:
    """Parse ``rat:p/q``, ``alg:c0,...,ck@[lo,hi]`` or a registered name."""
    text = text.strip()
    if text in _NAMED_CONSTANTS:
        return _NAMED_CONSTANTS[text]()
    if text.startswith("rat:"):
        return Fraction(text[4:])
    m = _ALG_RE.match(text)
    if m:
        coeffs = [int(c) for c in m.group("coeffs").split(",")]
        lo = Fraction(m.group("lo"))
        hi = Fraction(m.group("hi"))
        return AlgebraicReal(coeffs, lo, hi)  # raises NonIsolatingInterval
    # bare rational literal as a convenience
    try:
        return Fraction(text)
    except ValueError:
        raise ExactnumError(f"cannot parse real number {text!r}") from None


def format_real(x: RealNumber) -> str:
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return f"rat:{x.numerator}/{x.denominator}"
    if isinstance(x, AlgebraicReal):
        lo, hi = x.interval()
        cs = ",".join(str(c) for c in x.coeffs)
        return f"alg:{cs}@[{lo},{hi}]"
    if isinstance(x, SeriesReal):
        return x.description or "series"
    raise TypeError(f"not a RealNumber: {x!r}")


def decimal_string(x, digits: int = 12) -> str:
    """Decimal rendering backed by a certified enclosure.

    The string is the shortest float repr of the enclosure midpoint; the
    enclosure is tightened until it is narrower than one unit in the last
    requested digit, so the rendering never feeds back into computation.
    """
    if isinstance(x, QAlphaElement):
        lo, hi = x.value_enclosure(Fraction(1, 10**(digits + 2)))
    else:
        lo, hi = enclosure(x, Fraction(1, 10**(digits + 2)))
    return repr(round(float((lo + hi) / 2), digits))
