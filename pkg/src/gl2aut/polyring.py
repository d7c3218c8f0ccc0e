"""Polynomials F_q[t] and the rational function field F_q(t).

Poly keeps its coefficients as integer codes of the base field (constant
term first, trailing zeros stripped) and does arithmetic through the
FieldSpec int hooks, which keeps matrix work over F_2[t] / F_3[t] cheap.
"""

from __future__ import annotations

import re

from .ffield import FieldElem, FieldSpec

_TERM_RE = re.compile(r"^(?:\((?P<vec>[0-9]+(?:,[0-9]+)*)\)|(?P<scalar>[0-9]+))?"
                      r"(?P<var>t(?:\^(?P<pow>[0-9]+))?)?$")


class Poly:
    """Element of F_q[t]; degree of the zero polynomial is -1."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "PolyRing", coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_code(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def constant_term(self) -> FieldElem:
        return self.ring.field.el(self.constant_code())

    def constant_value(self) -> FieldElem:
        """The value in F_q, requiring the polynomial to be constant."""
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.constant_term()

    def lead_code(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff_code(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        return self.ring._make([*self._padded_zip(other, self.ring.field.add_i)])

    def __sub__(self, other):
        f = self.ring.field
        return self.ring._make([*self._padded_zip(other, lambda a, b: f.add_i(a, f.neg_i(b)))])

    def _padded_zip(self, other, op):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        for i in range(n):
            yield op(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)

    def __neg__(self):
        neg = self.ring.field.neg_i
        return Poly(self.ring, tuple(neg(c) for c in self.coeffs))

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero
        f = self.ring.field
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = f.add_i(out[i + j], f.mul_i(ai, bj))
        return self.ring._make(out)

    def scale(self, code: int) -> "Poly":
        mul = self.ring.field.mul_i
        return self.ring._make([mul(code, c) for c in self.coeffs])

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.ring.field
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv_lead = f.inv_i(other.coeffs[-1])
        quo = [0] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            c = f.mul_i(rem[-1], inv_lead)
            shift = len(rem) - 1 - dq
            quo[shift] = c
            for i, oc in enumerate(other.coeffs):
                rem[shift + i] = f.add_i(rem[shift + i], f.neg_i(f.mul_i(c, oc)))
            while rem and rem[-1] == 0:
                rem.pop()
        return self.ring._make(quo), self.ring._make(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv_i(self.coeffs[-1]))

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return Poly(self.ring, (0,) * k + self.coeffs)

    def evaluate(self, x: FieldElem) -> FieldElem:
        f = self.ring.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add_i(f.mul_i(acc, x.code), c)
        return f.el(acc)

    def encode(self) -> int:
        """Integer code, base q, constant coefficient least significant."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.ring.field.q + c
        return code

    def text(self) -> str:
        return self.ring.element_str(self)

    def __repr__(self):
        return f"Poly({self.text()})"


class PolyRing:
    """F_q[t] for a given FieldSpec."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.zero = Poly(self, ())
        self.one = Poly(self, (1,))
        self.t = Poly(self, (0, 1))

    def _make(self, coeffs) -> Poly:
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Poly(self, tuple(coeffs))

    def poly(self, coeff_codes) -> Poly:
        q = self.field.q
        for c in coeff_codes:
            if not 0 <= c < q:
                raise ValueError(f"coefficient code {c} out of range for F_{q}")
        return self._make(coeff_codes)

    def const(self, code: int) -> Poly:
        return self._make([code])

    def from_code(self, code: int) -> Poly:
        q = self.field.q
        coeffs = []
        while code:
            coeffs.append(code % q)
            code //= q
        return Poly(self, tuple(coeffs))

    def monomial(self, code: int, power: int) -> Poly:
        if code == 0:
            return self.zero
        return Poly(self, (0,) * power + (code,))

    def gcd(self, a: Poly, b: Poly) -> Poly:
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def polys_of_degree_at_most(self, n: int):
        """All polynomials of degree <= n, in integer-code order."""
        for code in range(self.field.q ** (n + 1)):
            yield self.from_code(code)

    def invert_unit(self, x: Poly) -> Poly:
        if not x.is_constant() or x.is_zero():
            raise ValueError(f"{x!r} is not a unit in F_q[t]")
        return self.const(self.field.inv_i(x.coeffs[0]))

    def coerce(self, x) -> Poly:
        if isinstance(x, Poly) and x.ring is self:
            return x
        if isinstance(x, FieldElem) and x.spec is self.field:
            return self.const(x.code)
        raise TypeError(f"cannot coerce {x!r} into F_{self.field.q}[t]")

    def element_str(self, x: Poly) -> str:
        if x.is_zero():
            return "0"
        field = self.field
        terms = []
        for i in range(x.deg, -1, -1):
            c = x.coeff_code(i)
            if c == 0:
                continue
            if field.n == 1:
                head = "" if (c == 1 and i > 0) else str(c)
            else:
                head = "" if (c == 1 and i > 0) else "(" + ",".join(
                    str(d) for d in field.el(c).coeffs) + ")"
            if i == 0:
                body = head if head else "1"
            elif i == 1:
                body = head + "t"
            else:
                body = f"{head}t^{i}"
            terms.append(body)
        return "+".join(terms)

    def parse_element(self, s: str) -> Poly:
        s = s.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return self.zero
        acc = self.zero
        for term in s.split("+"):
            m = _TERM_RE.match(term)
            if not m or (m.group("vec") is None and m.group("scalar") is None
                         and m.group("var") is None):
                raise ValueError(f"bad polynomial term {term!r}")
            if m.group("vec") is not None:
                coeff = self.field.from_coeffs([int(d) for d in m.group("vec").split(",")])
            elif m.group("scalar") is not None:
                if self.field.n > 1:
                    raise ValueError(
                        f"scalar coefficient {term!r} is ambiguous over F_{self.field.q}; "
                        "use a coefficient vector")
                coeff = self.field.el(int(m.group("scalar")) % self.field.p)
            else:
                coeff = self.field.one
            power = 0
            if m.group("var"):
                power = int(m.group("pow")) if m.group("pow") else 1
            acc = acc + self.monomial(coeff.code, power)
        return acc

    def __repr__(self):
        return f"PolyRing(F_{self.field.q}[t])"


_RING_CACHE: dict[int, PolyRing] = {}
_FRAC_CACHE: dict[int, "FracField"] = {}


def poly_ring(field: FieldSpec) -> PolyRing:
    if id(field) not in _RING_CACHE:
        _RING_CACHE[id(field)] = PolyRing(field)
    return _RING_CACHE[id(field)]


class RatFunc:
    """num/den in F_q(t), stored reduced with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: "FracField", num: Poly, den: Poly):
        self.field = field
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.deg == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def __add__(self, other):
        return self.field.make(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __sub__(self, other):
        return self.field.make(self.num * other.den - other.num * self.den,
                               self.den * other.den)

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __mul__(self, other):
        return self.field.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self.field.make(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.field is other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((id(self.field), self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def text(self) -> str:
        return self.field.element_str(self)

    def __repr__(self):
        return f"RatFunc({self.text()})"


class FracField:
    """The fraction field F_q(t) of a PolyRing."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.zero = RatFunc(self, ring.zero, ring.one)
        self.one = RatFunc(self, ring.one, ring.one)
        self.t = RatFunc(self, ring.t, ring.one)

    def make(self, num: Poly, den: Poly) -> RatFunc:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RatFunc(self, self.ring.zero, self.ring.one)
        g = self.ring.gcd(num, den)
        num, den = num // g, den // g
        inv_lead = self.ring.field.inv_i(den.lead_code())
        return RatFunc(self, num.scale(inv_lead), den.scale(inv_lead))

    def invert_unit(self, x: RatFunc) -> RatFunc:
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self.make(x.den, x.num)

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc) and x.field is self:
            return x
        if isinstance(x, Poly) and x.ring is self.ring:
            return RatFunc(self, x, self.ring.one)
        if isinstance(x, FieldElem) and x.spec is self.ring.field:
            return RatFunc(self, self.ring.const(x.code), self.ring.one)
        raise TypeError(f"cannot coerce {x!r} into F_{self.ring.field.q}(t)")

    def element_str(self, x: RatFunc) -> str:
        if x.is_polynomial():
            return self.ring.element_str(x.num)
        num = self.ring.element_str(x.num)
        den = self.ring.element_str(x.den)
        if "+" in num:
            num = f"({num})"
        if "+" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def parse_element(self, s: str) -> RatFunc:
        s = s.replace(" ", "")
        if "/" in s:
            top, _, bot = s.partition("/")
            return self.make(self.ring.parse_element(top.strip("()")),
                             self.ring.parse_element(bot.strip("()")))
        return self.coerce(self.ring.parse_element(s))

    def __repr__(self):
        return f"FracField(F_{self.ring.field.q}(t))"


def frac_field(ring: PolyRing) -> FracField:
    if id(ring) not in _FRAC_CACHE:
        _FRAC_CACHE[id(ring)] = FracField(ring)
    return _FRAC_CACHE[id(ring)]
