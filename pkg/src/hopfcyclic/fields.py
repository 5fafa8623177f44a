"""Exact ground fields: the rationals and cyclotomic extensions Q(zeta_m).

Rational scalars are plain ``fractions.Fraction`` (already canonical).
Cyclotomic scalars are polynomials in zeta_m of degree < phi(m), reduced
modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(Exception):
    """Raised when scalars from incompatible ground fields are combined."""


class ScalarFormatError(ValueError):
    """Raised when a scalar string cannot be parsed."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficient list of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("order must be >= 1")
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_exact_div(num, den):
    """Exact division of integer polynomials, lowest degree first."""
    num = list(num)
    den = list(den)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    assert all(c == 0 for c in num), "nonexact polynomial division"
    return out


def _poly_trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


class Cyclotomic:
    """Element of Q(zeta_m): polynomial in zeta_m reduced modulo Phi_m.

    Immutable; equality and hashing use the canonical reduced form.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = order
        phi = cyclotomic_polynomial(order)
        deg = len(phi) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce_mod(cs, phi)
        cs = _poly_trim(cs)
        self.coeffs = tuple(cs)

    def is_zero(self):
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise FieldMismatchError(
                    f"cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [Fraction(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(o.coeffs) + [Fraction(0)] * (n - len(o.coeffs))
        return Cyclotomic(self.order, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Cyclotomic(self.order, [])
        prod = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return Cyclotomic(self.order, prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        g, u = _poly_xgcd(list(self.coeffs), phi)
        assert len(g) == 1  # Phi_m is irreducible over Q
        c = g[0]
        return Cyclotomic(self.order, [x / c for x in u])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic(self.order, [1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        return format_scalar(self)


def _reduce_mod(coeffs, phi):
    """Reduce a Fraction coefficient list modulo the integer polynomial phi."""
    cs = list(coeffs)
    deg = len(phi) - 1
    lead = phi[-1]  # = 1 for cyclotomic polynomials
    for k in range(len(cs) - 1, deg - 1, -1):
        c = cs[k] / lead
        if c:
            for i in range(len(phi)):
                cs[k - deg + i] -= c * phi[i]
    return cs[:deg]


def _poly_xgcd(a, b):
    """Return (g, u) with u*a = g modulo b, over Q[x]; lists lowest-first."""
    r0, r1 = _poly_trim(a), _poly_trim(b)
    u0, u1 = [Fraction(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
    return r0, u0


def _poly_divmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1] / b[-1]
        out[k] = c
        for i, d in enumerate(b):
            a[k + i] -= c * d
    return _poly_trim(out), _poly_trim(a)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def scalar_inv(a):
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    if isinstance(a, Cyclotomic):
        return a.inverse()
    if a == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    return Fraction(1) / Fraction(a)


class RationalField:
    kind = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        return parse_rational(text)

    def format(self, a):
        return format_scalar(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"

    def to_spec(self):
        return {"kind": "rational"}


class CyclotomicField:
    kind = "cyclotomic"

    def __init__(self, order):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order

    def zero(self):
        return Cyclotomic(self.order, [])

    def one(self):
        return Cyclotomic(self.order, [1])

    def from_int(self, n):
        return Cyclotomic(self.order, [n])

    def zeta(self):
        return Cyclotomic(self.order, [0, 1])

    def parse(self, text):
        return parse_cyclotomic(text, self.order)

    def format(self, a):
        return format_scalar(a)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def to_spec(self):
        return {"kind": "cyclotomic", "order": self.order}


def field_from_spec(spec):
    kind = spec.get("kind")
    if kind == "rational":
        return RationalField()
    if kind == "cyclotomic":
        return CyclotomicField(int(spec["order"]))
    raise ScalarFormatError(f"unknown field kind: {kind!r}")


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarFormatError(f"bad rational {text!r}") from exc


def parse_cyclotomic(text, order):
    """Parse 'c0 + c1*z + c2*z^2 + ...' (rational coefficients) in Q(zeta_m)."""
    text = text.strip()
    deg = len(cyclotomic_polynomial(order)) - 1
    coeffs = [Fraction(0)] * max(deg, 1)
    s = text.replace("-", "+-")
    for term in s.split("+"):
        term = term.strip()
        if not term:
            continue
        if "z" in term:
            head, _, tail = term.partition("z")
            head = head.strip().rstrip("*").strip()
            if head in ("", "-"):
                head += "1"
            tail = tail.strip()
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail == "":
                power = 1
            else:
                raise ScalarFormatError(f"bad cyclotomic term {term!r}")
            if power >= len(coeffs):
                coeffs.extend([Fraction(0)] * (power + 1 - len(coeffs)))
            coeffs[power] += parse_rational(head)
        else:
            coeffs[0] += parse_rational(term)
    return Cyclotomic(order, coeffs)


def format_scalar(a):
    if isinstance(a, Cyclotomic):
        if not a.coeffs:
            return "0"
        parts = []
        for power, c in enumerate(a.coeffs):
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            else:
                z = "z" if power == 1 else f"z^{power}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out
    return str(Fraction(a))
