"""Exact coefficient rings for spider calculations.

Three rings are provided:

* :class:`LaurentPoly` -- Laurent polynomials Z[q, q^-1] with integer
  coefficients, stored sparsely as exponent -> coefficient maps.
* :class:`RationalFunc` -- the fraction field Q(q), kept in a canonical
  form (content removed over the rationals, denominator a polynomial with
  positive lowest coefficient) so that equality is plain structural
  comparison.
* :class:`TruncatedSeries` -- bounded-below power series Z[q^-1, q]]
  truncated at an explicit order; arithmetic tracks the order through
  which coefficients remain exact.

Quantum integers [n] = (q^n - q^-n)/(q - q^-1), quantum factorials and the
clasp expansion coefficients live here as well.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class LaurentPoly:
    """An integer Laurent polynomial in q.

    >>> (LaurentPoly.q() + LaurentPoly.q(-1)) * LaurentPoly.q(2)
    LaurentPoly({3: 1, 1: 1})
    >>> qint(2) ** 2 == qint(3) + LaurentPoly.one()
    True
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self.c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q(cls, exp=1, coeff=1):
        """The monomial coeff * q^exp."""
        return cls({exp: coeff})

    @classmethod
    def from_int(cls, n):
        return cls({0: n})

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == {0: 1}

    def is_unit(self):
        """True for +-q^k, the units of Z[q, q^-1]."""
        return len(self.c) == 1 and abs(next(iter(self.c.values()))) == 1

    def min_degree(self):
        if not self.c:
            raise ValueError("zero polynomial has no degree")
        return min(self.c)

    def max_degree(self):
        if not self.c:
            raise ValueError("zero polynomial has no degree")
        return max(self.c)

    def coeff(self, exp):
        return self.c.get(exp, 0)

    def is_homogeneous(self, deg):
        """Zero, or a single monomial of the given degree."""
        return not self.c or (len(self.c) == 1 and deg in self.c)

    def __add__(self, other):
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = c
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = {e: -v for e, v in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            e, v = next(iter(self.c.items()))
            return LaurentPoly({e * n: 1 if (v == 1 or n % 2 == 0) else -1})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = {e + k: v for e, v in self.c.items()}
        return out

    def mirror(self):
        """Substitute q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.c = {-e: v for e, v in self.c.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def key(self):
        return tuple(sorted(self.c.items()))

    def __repr__(self):
        return "LaurentPoly(%r)" % ({e: v for e, v in sorted(self.c.items(), reverse=True)},)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                term = str(abs(v))
            else:
                mag = "" if abs(v) == 1 else str(abs(v)) + "*"
                term = "%sq^%d" % (mag, e) if e != 1 else mag + "q"
            if not parts:
                parts.append(("-" if v < 0 else "") + term)
            else:
                parts.append(("- " if v < 0 else "+ ") + term)
        return " ".join(parts)

    def to_json(self):
        return {str(e): v for e, v in sorted(self.c.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): v for e, v in data.items()})


def qint(n):
    """The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    >>> str(qint(2))
    'q + q^-1'
    >>> qint(0).is_zero()
    True
    """
    if n < 0:
        raise ValueError("qint requires n >= 0")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def qfact(n):
    """The quantum factorial [n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("qfact requires n >= 0")
    if n == 0:
        return LaurentPoly.one()
    return qfact(n - 1) * qint(n)


# -- dense polynomial helpers over Q, used only for canonicalization -------

def _dense(p):
    """LaurentPoly with min degree 0 -> list of Fraction coefficients."""
    top = p.max_degree()
    return [Fraction(p.coeff(i)) for i in range(top + 1)]


def _trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] / b[-1]
        if f:
            q[i] = f
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
    return _trim(q), _trim(a)

def _poly_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _from_dense(v, shift=0):
    return LaurentPoly({i + shift: int(x) for i, x in enumerate(v) if x})


class RationalFunc:
    """An element of Q(q) in canonical form.

    The denominator is a genuine polynomial with nonzero, positive lowest
    coefficient; numerator and denominator are integer polynomials (up to a
    power of q on the numerator) with no common polynomial factor and
    content 1.  Structural equality on canonical forms decides equality of
    fractions, and cross-multiplication agrees with it.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly.from_int(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, int):
            den = LaurentPoly.from_int(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q)")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @classmethod
    def from_laurent(cls, p):
        return cls(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __add__(self, other):
        other = _coerce(other)
        return RationalFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunc.__new__(RationalFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RationalFunc.one() / self

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunc(other)
        return (isinstance(other, RationalFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num.key(), self.den.key()))

    def __repr__(self):
        return "RationalFunc(%r, %r)" % (self.num, self.den)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _coerce(x):
    if isinstance(x, RationalFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunc(x)
    if isinstance(x, int):
        return RationalFunc(LaurentPoly.from_int(x))
    raise TypeError("cannot coerce %r into Q(q)" % (x,))


def _canonical(num, den):
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()
    # Normalize q-powers: denominator becomes a polynomial with nonzero
    # constant term, numerator keeps the relative shift.
    dshift = den.min_degree()
    nshift = num.min_degree()
    den = den.shift(-dshift)
    num = num.shift(-nshift)
    qpow = nshift - dshift
    dn, dd = _dense(num), _dense(den)
    g = _poly_gcd(dn, dd)
    if len(g) > 1:
        dn = _poly_divmod(dn, g)[0]
        dd = _poly_divmod(dd, g)[0]
    # Clear rational content, making both primitive integer polynomials.
    from math import gcd, lcm
    denoms = [x.denominator for x in dn + dd]
    m = 1
    for d in denoms:
        m = lcm(m, d)
    dn = [x * m for x in dn]
    dd = [x * m for x in dd]
    cn = 0
    for x in dn:
        cn = gcd(cn, int(x))
    cd = 0
    for x in dd:
        cd = gcd(cd, int(x))
    c = gcd(cn, cd)
    dn = [int(x) // c for x in dn]
    dd = [int(x) // c for x in dd]
    low = next(x for x in dd if x)
    if low < 0:
        dn = [-x for x in dn]
        dd = [-x for x in dd]
    return _from_dense(dn, qpow), _from_dense(dd)


def proj_coeff(m, n, k):
    """Coefficient of the k-th turnback term in the (m, n) clasp expansion.

    The value is (-1)^k [m]! [n]! [m+n-k+1]! / ([m-k]! [n-k]! [m+n+1]! [k]!).

    >>> proj_coeff(1, 1, 1) == -RationalFunc(1, qint(3))
    True
    >>> proj_coeff(5, 3, 0).is_one()
    True
    """
    if not (0 <= k <= min(m, n)):
        raise ValueError("need 0 <= k <= min(m, n)")
    num = qfact(m) * qfact(n) * qfact(m + n - k + 1)
    den = qfact(m - k) * qfact(n - k) * qfact(m + n + 1) * qfact(k)
    r = RationalFunc(num, den)
    return -r if k % 2 else r


class TruncatedSeries:
    """A bounded-below integer series, exact below ``order``.

    ``min_degree`` is a guaranteed lower bound for the support; stored
    coefficients all lie in [min_degree, order).  Arithmetic propagates the
    truncation order so that no reported coefficient is ever uncertain.
    """

    __slots__ = ("min_degree", "c", "order")

    def __init__(self, min_degree, coeffs, order):
        if any(e >= order or e < min_degree for e in coeffs):
            raise ValueError("series coefficients outside [min_degree, order)")
        self.min_degree = min_degree
        self.c = {e: int(v) for e, v in coeffs.items() if v}
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls(0, {}, order)

    @classmethod
    def one(cls, order):
        return cls(0, {0: 1}, order)

    @classmethod
    def from_laurent(cls, p, order):
        if p.is_zero():
            return cls.zero(order)
        lo = p.min_degree()
        return cls(lo, {e: v for e, v in p.c.items() if e < order}, order)

    def is_zero(self):
        return not self.c

    def coeff(self, e):
        return self.c.get(e, 0)

    def __add__(self, other):
        order = min(self.order, other.order)
        lo = min(self.min_degree, other.min_degree)
        c = {}
        for e in set(self.c) | set(other.c):
            if e < order:
                v = self.c.get(e, 0) + other.c.get(e, 0)
                if v:
                    c[e] = v
        return TruncatedSeries(lo, c, order)

    def __neg__(self):
        return TruncatedSeries(self.min_degree, {e: -v for e, v in self.c.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.min_degree,
                                   {e: v * other for e, v in self.c.items()},
                                   self.order)
        # Error terms: O(q^Na) * b starts at Na + min(b), and symmetrically.
        order = min(self.order + other.min_degree, other.order + self.min_degree)
        lo = self.min_degree + other.min_degree
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                if e < order:
                    c[e] = c.get(e, 0) + v1 * v2
        return TruncatedSeries(lo, {e: v for e, v in c.items() if v}, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.c == other.c
                and self.order == other.order)

    def __hash__(self):
        return hash((self.order, tuple(sorted(self.c.items()))))

    def agreement_degree(self, other):
        """Largest exponent e such that the two series agree on all
        coefficients <= e; capped at one below the common order."""
        cap = min(self.order, other.order) - 1
        for e in sorted(set(self.c) | set(other.c)):
            if self.c.get(e, 0) != other.c.get(e, 0):
                return e - 1
        return cap

    def __repr__(self):
        return "TruncatedSeries(%d, %r, %d)" % (
            self.min_degree, {e: v for e, v in sorted(self.c.items())}, self.order)

    def __str__(self):
        body = str(LaurentPoly(self.c)) if self.c else "0"
        return "%s + O(q^%d)" % (body, self.order)

    def to_json(self):
        out = {str(e): v for e, v in sorted(self.c.items())}
        out["truncation"] = self.order
        return out


def expand(f, order):
    """Laurent-expand a rational function around q = 0, exactly below ``order``.

    >>> s = expand(RationalFunc(1, qint(2)), 9)
    >>> [s.coeff(e) for e in (1, 3, 5, 7)]
    [1, -1, 1, -1]
    """
    f = _coerce(f)
    if f.num.is_zero():
        return TruncatedSeries.zero(order)
    shift = f.num.min_degree()
    num = _dense(f.num.shift(-shift))
    den = _dense(f.den)
    # f.den is canonical: a polynomial with nonzero constant term.
    c0 = den[0]
    n_terms = order - shift
    out = {}
    g = []
    for k in range(max(0, n_terms)):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(max(0, k - len(den) + 1), k):
            acc -= g[j] * den[k - j]
        gk = acc / c0
        g.append(gk)
        if gk:
            if gk.denominator != 1:
                raise ValueError("expansion has a non-integer coefficient "
                                 "at q^%d" % (k + shift))
            out[k + shift] = int(gk)
    return TruncatedSeries(shift, out, order)
