"""Exact scalar arithmetic: univariate polynomials over the rationals and
canonical rational functions.

A polynomial is a tuple of exact coefficients; ``coeffs[j]`` holds the
coefficient of s**j.  The zero polynomial is the empty tuple, otherwise the
last coefficient is nonzero.  Coefficients are Python ints or
`fractions.Fraction` (never floats).

A rational function is a reduced pair of polynomials in a canonical form
chosen so that equality is structural: the pair has integer coefficients,
the joint content of numerator and denominator is 1, gcd(num, den) = 1 as
polynomials, and the denominator's leading coefficient is positive.  Zero
is 0/1.  Canonical form makes golden-fixture comparisons bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm

from .errors import PoleError


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


def _coerce_coeff(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class Poly:
    """Dense univariate polynomial with exact coefficients.

    Construction normalizes: coefficients are coerced to int/Fraction and
    trailing zeros are dropped, so an all-zero input yields the zero
    polynomial (empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_trim([_coerce_coeff(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        # trusted: already coerced and trimmed
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c):
        if isinstance(c, float):
            raise TypeError("exact coefficient expected, got float")
        c = _coerce_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls._raw((c,)) if c else ZERO_POLY

    @classmethod
    def variable(cls):
        return S_POLY

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        """Coefficient of s**j, 0 for j beyond the degree."""
        if isinstance(j, slice):
            raise TypeError("polynomials do not support slicing")
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    @staticmethod
    def _want(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        q = Poly._want(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return Poly._raw(tuple(_trim(out)))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        q = Poly._want(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = Poly._want(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = Poly._want(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(tuple(_trim(out)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Polynomial long division over the rationals."""
        q = Poly._want(other)
        if q is None:
            return NotImplemented
        if q.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq, lq = q.degree, q.coeffs[-1]
        quo = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq]
            if not c:
                continue
            f = Fraction(c) / lq
            f = f.numerator if f.denominator == 1 else f
            quo[k] = f
            for j, cj in enumerate(q.coeffs):
                rem[k + j] -= f * cj
        return Poly(quo), Poly(rem)

    def exact_div(self, other):
        """Quotient of an exact division; raises when there is a remainder."""
        quo, rem = divmod(self, other)
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        return quo

    def __call__(self, x):
        """Evaluate at x by Horner's rule; exact Fraction result."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def primitive(self):
        """Split into (content, primitive part).

        The content is a positive Fraction, the primitive part has coprime
        integer coefficients and carries the sign, and
        ``content * primitive == self``.  The zero polynomial splits into
        (0, zero).
        """
        if not self.coeffs:
            return Fraction(0), ZERO_POLY
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = _int_lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = _int_gcd(g, c)
        return Fraction(g, den), Poly._raw(tuple(c // g for c in ints))


ZERO_POLY = Poly._raw(())
ONE_POLY = Poly._raw((1,))
S_POLY = Poly._raw((0, 1))


def _int_content(ints):
    g = 0
    for c in ints:
        g = _int_gcd(g, c)
        if g == 1:
            return 1
    return g


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer coefficient lists (b nonzero)."""
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        k = len(r) - 1 - db
        rl = r[-1]
        r = [lb * c for c in r]
        for j, bj in enumerate(b):
            r[k + j] -= rl * bj
        del r[-1]
        while r and not r[-1]:
            del r[-1]
    return r


def _primitive_ints(ints):
    g = _int_content(ints)
    if g in (0, 1):
        return list(ints)
    return [c // g for c in ints]


def _root_bound(ints):
    # Cauchy bound: every complex root has |r| <= 1 + max|c_i|/|lc|
    lc = abs(ints[-1])
    top = max(abs(c) for c in ints)
    return 1 + (top + lc - 1) // lc


def poly_gcd(p, q):
    """Greatest common divisor, normalized to coprime integer coefficients
    with a positive leading coefficient.  gcd(p, 0) is the normalization of
    p; both arguments zero is an error."""
    p, q = Poly._want(p), Poly._want(q)
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a = _primitive_ints([int(c) for c in p.primitive()[1].coeffs])
    b = _primitive_ints([int(c) for c in q.primitive()[1].coeffs])
    if not a:
        a, b = b, a
    if not b:
        if a[-1] < 0:
            a = [-c for c in a]
        return Poly._raw(tuple(a))
    if len(a) == 1 or len(b) == 1:
        return ONE_POLY  # a nonzero constant is coprime to everything
    # One-sided certificate: evaluate past both Cauchy root bounds.  Any
    # common factor g of degree >= 1 has |g(x0)| >= 2 there, so integer
    # gcd 1 at x0 proves the polynomial gcd is constant.
    x0 = max(_root_bound(a), _root_bound(b)) + 2
    va = 0
    for c in reversed(a):
        va = va * x0 + c
    vb = 0
    for c in reversed(b):
        vb = vb * x0 + c
    if _int_gcd(va, vb) == 1:
        return ONE_POLY
    # primitive pseudo-remainder sequence
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive_ints(r)
    if a[-1] < 0:
        a = [-c for c in a]
    return Poly._raw(tuple(a))


def joint_reduce(nums, den):
    """Reduce a family of numerator polynomials over one denominator.

    Divides gcd(den, all numerators) out, clears all coefficients to
    integers, divides the joint integer content, and makes the leading
    denominator coefficient positive.  The family's values num[k]/den are
    unchanged.  Returns (new_nums, new_den).
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    live = [p for p in nums if p]
    if not live:
        return [ZERO_POLY] * len(nums), ONE_POLY
    g = den
    for p in live:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    if g.degree > 0:
        den = den.exact_div(g)
        nums = [p.exact_div(g) if p else p for p in nums]
    # joint integer normalization
    scale = 1
    for p in nums:
        for c in p.coeffs:
            if isinstance(c, Fraction):
                scale = _int_lcm(scale, c.denominator)
    for c in den.coeffs:
        if isinstance(c, Fraction):
            scale = _int_lcm(scale, c.denominator)
    num_ints = [[int(c * scale) for c in p.coeffs] for p in nums]
    den_ints = [int(c * scale) for c in den.coeffs]
    content = _int_content(den_ints)
    for row in num_ints:
        content = _int_gcd(content, _int_content(row))
    if den_ints[-1] < 0:
        content = -content
    if content != 1:
        num_ints = [[c // content for c in row] for row in num_ints]
        den_ints = [c // content for c in den_ints]
    return (
        [Poly._raw(tuple(row)) for row in num_ints],
        Poly._raw(tuple(den_ints)),
    )


class RatFun:
    """Rational function in canonical reduced form (see module docstring).

    The constructor accepts polynomials or exact scalars and canonicalizes.
    All field operations return canonical values, so `==` is exact value
    equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly._want(num)
        den = Poly._want(den)
        if num is None or den is None:
            raise TypeError("polynomial or exact scalar expected")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        (self.num,), self.den = joint_reduce([num], den)

    @classmethod
    def _reduced(cls, num, den):
        # trusted: num, den already polynomial-coprime; only integer
        # normalization is needed
        if num.is_zero:
            return ZERO
        (num,), den = _normalize_pair(num, den)
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def const(cls, c):
        if isinstance(c, float):
            raise TypeError("exact value expected, got float")
        c = Fraction(c)
        f = object.__new__(cls)
        f.num = Poly.const(c.numerator)
        f.den = Poly.const(c.denominator) if c else ONE_POLY
        return f

    @classmethod
    def variable(cls):
        return S

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        other = RatFun._want(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFun({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self):
        return format_ratfun(self)

    @staticmethod
    def _want(x):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFun.const(x)
        if isinstance(x, Poly):
            return RatFun(x)
        return None

    def __add__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        f = self
        if f.is_zero:
            return g
        if g.is_zero:
            return f
        if f.den == g.den:
            num = f.num + g.num
            if num.is_zero:
                return ZERO
            if f.den.degree == 0:
                return RatFun._reduced(num, f.den)
            return RatFun(num, f.den)
        # Knuth 4.5.1: with both operands reduced, cancелlation can only
        # come from d1 = gcd of the denominators
        d1 = poly_gcd(f.den, g.den)
        if d1.degree == 0:
            return RatFun._reduced(f.num * g.den + g.num * f.den, f.den * g.den)
        fb = f.den.exact_div(d1)
        gb = g.den.exact_div(d1)
        t = f.num * gb + g.num * fb
        if t.is_zero:
            return ZERO
        d2 = poly_gcd(t, d1)
        if d2.degree > 0:
            t = t.exact_div(d2)
            den = fb * g.den.exact_div(d2)
        else:
            den = fb * g.den
        return RatFun._reduced(t, den)

    __radd__ = __add__

    def __neg__(self):
        f = object.__new__(RatFun)
        f.num, f.den = -self.num, self.den
        return f

    def __sub__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        f = self
        if f.is_zero or g.is_zero:
            return ZERO
        # cross-cancellation keeps the gcd calls on small operands and
        # yields a reduced product directly
        fn, gd = f.num, g.den
        if fn.degree > 0 and gd.degree > 0:
            d1 = poly_gcd(fn, gd)
            if d1.degree > 0:
                fn, gd = fn.exact_div(d1), gd.exact_div(d1)
        gn, fd = g.num, f.den
        if gn.degree > 0 and fd.degree > 0:
            d2 = poly_gcd(gn, fd)
            if d2.degree > 0:
                gn, fd = gn.exact_div(d2), fd.exact_div(d2)
        return RatFun._reduced(fn * gn, fd * gd)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of the zero rational function")
        f = object.__new__(RatFun)
        if self.num.coeffs[-1] < 0:
            f.num, f.den = -self.den, -self.num
        else:
            f.num, f.den = self.den, self.num
        return f

    def __truediv__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        return self * g.reciprocal()

    def __rtruediv__(self, other):
        g = RatFun._want(other)
        if g is None:
            return NotImplemented
        return g * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, x):
        """Exact value at x; PoleError when the denominator vanishes."""
        x = Fraction(x)
        d = self.den(x)
        if not d:
            raise PoleError(f"pole at s = {x}")
        return self.num(x) / d


def _normalize_pair(num, den):
    """Integer-normalize a polynomial-coprime pair (no gcd computation)."""
    scale = 1
    for c in num.coeffs:
        if isinstance(c, Fraction):
            scale = _int_lcm(scale, c.denominator)
    for c in den.coeffs:
        if isinstance(c, Fraction):
            scale = _int_lcm(scale, c.denominator)
    n_ints = [int(c * scale) for c in num.coeffs]
    d_ints = [int(c * scale) for c in den.coeffs]
    content = _int_gcd(_int_content(n_ints), _int_content(d_ints))
    if d_ints[-1] < 0:
        content = -content
    if content != 1:
        n_ints = [c // content for c in n_ints]
        d_ints = [c // content for c in d_ints]
    return [Poly._raw(tuple(n_ints))], Poly._raw(tuple(d_ints))


ZERO = object.__new__(RatFun)
ZERO.num, ZERO.den = ZERO_POLY, ONE_POLY
ONE = object.__new__(RatFun)
ONE.num, ONE.den = ONE_POLY, ONE_POLY
S = object.__new__(RatFun)
S.num, S.den = S_POLY, ONE_POLY


def _coeff_str(c):
    return str(c)


def format_poly(p):
    """Ascending-power expression string, e.g. ``12+32*s+33*s^2+14*s^3``.

    The output re-parses under the entry grammar to the same polynomial.
    """
    if p.is_zero:
        return "0"
    parts = []
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        if j == 0:
            term = _coeff_str(c)
        else:
            base = "s" if j == 1 else f"s^{j}"
            if c == 1:
                term = base
            elif c == -1:
                term = "-" + base
            else:
                term = f"{_coeff_str(c)}*{base}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def _term_count(p):
    return sum(1 for c in p.coeffs if c)


def _is_atom(p):
    # a bare token under the grammar: an unsigned integer or s / s^k
    if _term_count(p) != 1:
        return False
    if p.degree == 0:
        c = p.coeffs[0]
        return isinstance(c, int) and c > 0
    return p.coeffs[-1] == 1


def format_ratfun(f):
    """Canonical expression string that re-parses to the same value."""
    if f.den == ONE_POLY:
        return format_poly(f.num)
    num_s = format_poly(f.num)
    if _term_count(f.num) > 1:
        num_s = f"({num_s})"
    den_s = format_poly(f.den)
    if not _is_atom(f.den):
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"
