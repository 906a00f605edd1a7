"""Exact coefficient arithmetic.

Everything symbolic in this package happens over the field Q(v) of rational
functions in a single formal variable v, with the deformation parameter
entering through q = v^4.  Storing v rather than q keeps the fractional
powers q^{1/2} = v^2 and q^{1/4} = v that show up in action tables and
ground fields polynomial, so one exact field covers the whole code base.

The module also provides truncated power series in a formal parameter t
over that field (`TSeries`), a generic one-variable rational-function
extension (`Ext`, used for the formal parameters s = q^{4*alpha} and
u = q^{2*lambda}), and controlled numeric evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomial helpers; a polynomial is a tuple of coefficients over a
# field, constant term first, no trailing zeros (the zero polynomial is ())
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pscale(a, c):
    if not c:
        return ()
    return _trim(tuple(x * c for x in a))


def _pdivmod(a, b, zero):
    """Euclidean division over a coefficient field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [zero] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1] if isinstance(b[-1], Fraction) else b[-1].inverse()
    db = len(b) - 1
    while len(r) >= len(b):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] * inv_lead
        k = len(r) - 1 - db
        q[k] = c
        for i in range(len(b)):
            r[k + i] = r[k + i] - c * b[i]
        r.pop()
    return _trim(q), _trim(r)


def _pgcd(a, b, zero):
    while b:
        _, r = _pdivmod(a, b, zero)
        a, b = b, r
    if a:
        lead = a[-1]
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        a = _pscale(a, inv)
    return a


def _peval(a, x):
    acc = 0.0 if not isinstance(x, complex) else 0.0 + 0.0j
    for c in reversed(a):
        acc = acc * x + float(c)
    return acc


class Scalar:
    """An element of Q(v), canonical as a reduced integer fraction.

    Canonical form: numerator and denominator have coprime integer
    coefficients with no common polynomial factor, and the denominator has
    a positive leading coefficient.  Equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(_F1,), _canonical=False):
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canon(num, den)
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(x) -> "Scalar":
        x = Fraction(x)
        return Scalar((x,) if x else ())

    @staticmethod
    def v_power(k: int) -> "Scalar":
        """v^k for any integer k (q^{k/4})."""
        if k >= 0:
            return Scalar((_F0,) * k + (_F1,))
        return Scalar((_F1,), (_F0,) * (-k) + (_F1,))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (_F1,) and self.den == (_F1,)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den, _F0),
                    _pmul(other.num, self.den, _F0))
        return Scalar(num, _pmul(self.den, other.den, _F0))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(_pmul(self.num, other.num, _F0),
                      _pmul(self.den, other.den, _F0))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        res = self.__eq__(other)
        return NotImplemented if res is NotImplemented else not res

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- evaluation and display -----------------------------------------

    def eval(self, q0: float) -> float:
        """Evaluate at q = q0 (so v = q0^{1/4}); raises on a pole."""
        v0 = q0 ** 0.25
        den = _peval(self.den, v0)
        if abs(den) < 1e-300:
            raise ZeroDivisionError("scalar has a pole at q0=%r" % (q0,))
        return _peval(self.num, v0) / den

    def eval_complex(self, q0: float) -> complex:
        return complex(self.eval(q0))

    def __repr__(self):
        return "Scalar(%s)" % (render_scalar(self),)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    return NotImplemented


def _canon(num, den):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (_F1,)
    g = _pgcd(num, den, _F0)
    if len(g) > 1:
        num, _ = _pdivmod(num, g, _F0)
        den, _ = _pdivmod(den, g, _F0)
    # clear rational content: make both integer, coprime, den lead > 0
    mult = 1
    for c in num + den:
        mult = mult * c.denominator // _int_gcd(mult, c.denominator)
    ints = [int(c * mult) for c in num] + [int(c * mult) for c in den]
    content = 0
    for c in ints:
        content = _int_gcd(content, c)
    if content == 0:
        content = 1
    if ints[-1] < 0:
        content = -content
    num = tuple(Fraction(int(c * mult) // content) for c in num)
    den = tuple(Fraction(int(c * mult) // content) for c in den)
    return num, den


def canonicalize(num, den) -> Scalar:
    """Build a Scalar from raw v-coefficient sequences (constant term first)."""
    return Scalar(tuple(Fraction(c) for c in num), tuple(Fraction(c) for c in den))


ZERO = Scalar.from_fraction(0)
ONE = Scalar.from_fraction(1)
Q = Scalar.v_power(4)
QH = Scalar.v_power(2)          # q^{1/2}
QQ = Scalar.v_power(1)          # q^{1/4}


def integer(n: int) -> Scalar:
    return Scalar.from_fraction(n)


def qpow(j) -> Scalar:
    """q^j for j integer or a Fraction with denominator dividing 4."""
    j4 = Fraction(j) * 4
    if j4.denominator != 1:
        raise ValueError("q-exponent must be a multiple of 1/4: %r" % (j,))
    return Scalar.v_power(int(j4))


def eval_numeric(s: Scalar, q0: float) -> float:
    return s.eval(q0)


# ---------------------------------------------------------------------------
# rendering / parsing of scalars in the q-grammar used by the CLI
# ---------------------------------------------------------------------------

def _fmt_qpower(k: int) -> str:
    # k counts powers of v = q^{1/4}
    if k % 4 == 0:
        e = k // 4
        return "q" if e == 1 else "q^%d" % e if e >= 0 else "q^(%d)" % e
    num, den = k, 4
    g = _int_gcd(abs(num), den)
    num, den = num // g, den // g
    return "q^(%d/%d)" % (num, den)


def _fmt_poly(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        elif mag == 1:
            term = _fmt_qpower(k)
        else:
            term = "%s*%s" % (mag, _fmt_qpower(k))
        parts.append(("-" if c < 0 else "+", term))
    sign0, t0 = parts[0]
    out = ("-" if sign0 == "-" else "") + t0
    for sign, t in parts[1:]:
        out += sign + t
    return out


def render_scalar(s: Scalar) -> str:
    num = _fmt_poly(s.num)
    if s.den == (_F1,):
        return num
    den = _fmt_poly(s.den)
    ns = num if ("+" not in num[1:] and "-" not in num[1:]) else "(%s)" % num
    ds = den if ("+" not in den[1:] and "-" not in den[1:]) else "(%s)" % den
    return "%s/%s" % (ns, ds)


# ---------------------------------------------------------------------------
# truncated formal power series in t over Scalar
# ---------------------------------------------------------------------------

class TSeries:
    """A polynomial-in-t truncation: coefficients c_0..c_N modulo t^{N+1}."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [c if isinstance(c, Scalar) else Scalar.from_fraction(c)
                  for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def constant(s, order: int) -> "TSeries":
        return TSeries([s], order)

    @staticmethod
    def t(order: int) -> "TSeries":
        return TSeries([ZERO, ONE], order)

    def truncate(self, order: int) -> "TSeries":
        return TSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = other if isinstance(other, Scalar) else Scalar.from_fraction(other)
            return TSeries([c * s for c in self.coeffs], self.order)
        other = self._coerce(other)
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            ci = self.coeffs[i]
            if ci.is_zero():
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return TSeries(out, n)

    __rmul__ = __mul__

    def invert(self) -> "TSeries":
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ZeroDivisionError("series has no invertible constant term")
        inv0 = c0.inverse()
        out = [inv0] + [ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out[k] = -(inv0 * acc)
        return TSeries(out, self.order)

    def compose(self, inner: "TSeries") -> "TSeries":
        if not inner.coeffs[0].is_zero():
            raise ValueError("composition needs inner series with zero constant term")
        n = min(self.order, inner.order)
        acc = TSeries.constant(self.coeffs[0], n)
        power = TSeries.constant(ONE, n)
        for k in range(1, n + 1):
            power = power * inner
            acc = acc + power * self.coeffs[k]
        return acc

    def _coerce(self, other):
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return TSeries.constant(
                other if isinstance(other, Scalar) else Scalar.from_fraction(other),
                self.order)
        raise TypeError(type(other))

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return "TSeries([%s])" % ", ".join(render_scalar(c) for c in self.coeffs)


def tseries_op(a: TSeries, b, op: str) -> TSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert":
        return a.invert()
    if op == "compose":
        return a.compose(b)
    raise ValueError("unknown op %r" % (op,))


# ---------------------------------------------------------------------------
# one formal variable on top of Q(v): elements of Q(v)(X)
# ---------------------------------------------------------------------------

class Ext:
    """Rational functions in one extra formal variable over Scalar.

    Used wherever the paper introduces an independent formal parameter:
    s = q^{4*alpha} in the Bargmann-type norms and u = q^{2*lambda} in the
    Faraut-Koranyi coefficients and kernels.  Canonical form: denominator
    monic, numerator and denominator coprime.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(ONE,), _canonical=False):
        num = _trim(tuple(num))
        den = _trim(tuple(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
            return
        if not num:
            self.num, self.den = (), (ONE,)
            return
        g = _pgcd(num, den, ZERO)
        if len(g) > 1:
            num, _ = _pdivmod(num, g, ZERO)
            den, _ = _pdivmod(den, g, ZERO)
        lead = den[-1]
        if not lead.is_one():
            inv = lead.inverse()
            num = _pscale(num, inv)
            den = _pscale(den, inv)
        self.num, self.den = num, den

    @staticmethod
    def var() -> "Ext":
        return Ext((ZERO, ONE))

    @staticmethod
    def lift(s) -> "Ext":
        if isinstance(s, Ext):
            return s
        if isinstance(s, (int, Fraction)):
            s = Scalar.from_fraction(s)
        return Ext((s,))

    def is_zero(self):
        return not self.num

    def __add__(self, other):
        other = Ext.lift(other)
        num = _padd(_pmul(self.num, other.den, ZERO),
                    _pmul(other.num, self.den, ZERO))
        return Ext(num, _pmul(self.den, other.den, ZERO))

    __radd__ = __add__

    def __neg__(self):
        return Ext(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-Ext.lift(other))

    def __rsub__(self, other):
        return Ext.lift(other) - self

    def __mul__(self, other):
        other = Ext.lift(other)
        return Ext(_pmul(self.num, other.num, ZERO),
                   _pmul(self.den, other.den, ZERO))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return Ext(self.den, self.num)

    def __truediv__(self, other):
        return self * Ext.lift(other).inverse()

    def __rtruediv__(self, other):
        return Ext.lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Ext.lift(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Ext.lift(other)
        if not isinstance(other, Ext):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        def side(p):
            return "[" + ", ".join(render_scalar(c) for c in p) + "]"
        return "Ext(%s / %s)" % (side(self.num), side(self.den))
