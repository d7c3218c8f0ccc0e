"""2x2 matrices over exact rings, Moebius actions on projective lines,
and point-stabilizer parametrizations in GL2 of a polynomial ring.

A matrix fixing a point s = f/g of P^1(F_q(t)) is written through the
conjugation X = M_s * [[beta, c], [0, alpha]] * M_s^{-1} with
M_s = [[s, 1], [1, 0]]; expanding gives

    X = [[alpha + c*s, s*(beta - alpha) - c*s^2], [c, beta - c*s]]

so X is pinned down by (alpha, beta, c) with alpha, beta in F_q* and
c the lower-left entry.  At s = infinity the stabilizer is the upper
triangular group and c is taken to be the upper-right entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffield import FieldElem, FieldSpec, QuadExt, QuadExtElem
from .polyring import FracField, Poly, PolyRing, frac_field, poly_ring


class Mat2:
    """A 2x2 matrix over a tagged coefficient ring."""

    __slots__ = ("ring", "a", "b", "c", "d")

    def __init__(self, ring, a, b, c, d):
        self.ring = ring
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls, ring) -> "Mat2":
        return cls(ring, ring.one, ring.zero, ring.zero, ring.one)

    @classmethod
    def from_rows(cls, ring, rows) -> "Mat2":
        (a, b), (c, d) = rows

        def lift(x):
            return ring.parse_element(x) if isinstance(x, str) else ring.coerce(x)

        return cls(ring, lift(a), lift(b), lift(c), lift(d))

    def __mul__(self, other: "Mat2") -> "Mat2":
        if self.ring is not other.ring:
            raise TypeError("matrix rings differ")
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mat2(self.ring, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse(self) -> "Mat2":
        inv_det = self.ring.invert_unit(self.det())
        return Mat2(self.ring, self.d * inv_det, -self.b * inv_det,
                    -self.c * inv_det, self.a * inv_det)

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat2.identity(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.ring is other.ring
                and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((id(self.ring), self.a, self.b, self.c, self.d))

    def is_identity(self) -> bool:
        return self == Mat2.identity(self.ring)

    def is_upper_triangular(self) -> bool:
        return self.c == self.ring.zero

    def is_scalar(self) -> bool:
        return self.b == self.ring.zero and self.c == self.ring.zero and self.a == self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def text(self) -> str:
        es = self.ring.element_str
        return f"[[{es(self.a)},{es(self.b)}],[{es(self.c)},{es(self.d)}]]"

    def __repr__(self):
        return f"Mat2({self.text()})"


def mat_parse(ring, s: str) -> Mat2:
    """Parse "[[a,b],[c,d]]" with ring-element entry syntax."""
    s = s.replace(" ", "")
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ValueError(f"bad matrix literal {s!r}")
    rows = s[2:-2].split("],[")
    if len(rows) != 2:
        raise ValueError(f"bad matrix literal {s!r}")
    entries = []
    for row in rows:
        cells = _split_top_level(row)
        if len(cells) != 2:
            raise ValueError(f"bad matrix row {row!r}")
        entries.extend(ring.parse_element(cell) for cell in cells)
    return Mat2(ring, *entries)


def _split_top_level(s: str) -> list[str]:
    # split on commas not nested inside parentheses
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


class ProjPoint:
    """A point of P^1 over a coefficient field, stored as (x : 1) or (1 : 0)."""

    __slots__ = ("field", "x", "infinite")

    def __init__(self, field, x, infinite: bool):
        self.field = field
        self.x = x
        self.infinite = infinite

    @classmethod
    def of(cls, field, x) -> "ProjPoint":
        return cls(field, field.coerce(x), False)

    @classmethod
    def infinity(cls, field) -> "ProjPoint":
        return cls(field, field.one, True)

    @classmethod
    def make(cls, field, x, y) -> "ProjPoint":
        x, y = field.coerce(x), field.coerce(y)
        if not bool(y):
            if not bool(x):
                raise ValueError("(0 : 0) is not projective")
            return cls.infinity(field)
        return cls(field, x * field.invert_unit(y), False)

    def __eq__(self, other):
        return (isinstance(other, ProjPoint) and self.field is other.field
                and self.infinite == other.infinite
                and (self.infinite or self.x == other.x))

    def __hash__(self):
        return hash((id(self.field), self.infinite, None if self.infinite else self.x))

    def text(self) -> str:
        return "inf" if self.infinite else self.field.element_str(self.x)

    def __repr__(self):
        return f"ProjPoint({self.text()})"


class AllPoints:
    """Sentinel: a scalar matrix fixes every point of the projective line."""

    def __repr__(self):
        return "ALL_POINTS"


ALL_POINTS = AllPoints()


def mobius(m: Mat2, pt: ProjPoint) -> ProjPoint:
    """Fractional linear action (a x + b y : c x + d y), entries coerced to pt's field."""
    fld = pt.field
    a, b, c, d = (fld.coerce(e) for e in m.entries())
    x = pt.x if not pt.infinite else fld.one
    y = fld.zero if pt.infinite else fld.one
    num = a * x + b * y
    den = c * x + d * y
    if not bool(num) and not bool(den):
        raise ValueError("matrix is singular at this point")
    return ProjPoint.make(fld, num, den)


def fixed_points(m: Mat2, field):
    """All fixed points of m on P^1(field) for an enumerable field.

    Returns ALL_POINTS when m acts as a scalar, otherwise a list of at
    most two points sorted by element code (infinity last).
    """
    if not isinstance(field, (FieldSpec, QuadExt)):
        raise TypeError("fixed point scan needs a finite coefficient field")
    a, b, c, d = (field.coerce(e) for e in m.entries())
    if not bool(b) and not bool(c) and a == d:
        return ALL_POINTS
    found = []
    for x in field.elements():
        # x fixed iff c x^2 + (d - a) x - b = 0
        if not bool(c * x * x + (d - a) * x - b):
            found.append(ProjPoint.of(field, x))
    found.sort(key=lambda pt: _elem_code(field, pt.x))
    if not bool(c):
        found.append(ProjPoint.infinity(field))
    return found


def _elem_code(field, x) -> int:
    if isinstance(x, FieldElem):
        return x.code
    if isinstance(x, QuadExtElem):
        return x.a.code + field.q * x.b.code
    raise TypeError(f"no code order for {x!r}")


@dataclass(frozen=True)
class StabParam:
    """(alpha, beta, c) pinning down a matrix fixing the point s."""

    alpha: FieldElem
    beta: FieldElem
    c: Poly


def conjugator_to_upper(s: ProjPoint) -> Mat2:
    """M_s = [[s, 1], [1, 0]] over F_q(t), sending infinity to s (finite s only)."""
    if s.infinite:
        raise ValueError("s = infinity needs no conjugation")
    frac = s.field
    return Mat2(frac, s.x, frac.one, frac.one, frac.zero)


def stab_membership(m: Mat2, s: ProjPoint):
    """StabParam for m in the stabilizer of s, or None.

    m must lie over F_q[t] with unit determinant; s is a point of
    P^1(F_q(t)).  Reconstruction via stab_reconstruct is exact.
    """
    ring: PolyRing = m.ring
    if not isinstance(ring, PolyRing):
        raise TypeError("stabilizer parametrization expects a matrix over F_q[t]")
    det = m.det()
    if not det.is_constant() or det.is_zero():
        raise ValueError("matrix is not invertible over F_q[t]")
    field = ring.field
    if s.infinite:
        if not m.c.is_zero():
            return None
        return StabParam(m.a.constant_value(), m.d.constant_value(), m.b)
    frac: FracField = s.field
    sx = s.x
    cf = frac.coerce(m.c)
    alpha_f = frac.coerce(m.a) - cf * sx
    beta_f = frac.coerce(m.d) + cf * sx
    if not (alpha_f.is_polynomial() and alpha_f.as_poly().is_constant()
            and beta_f.is_polynomial() and beta_f.as_poly().is_constant()):
        return None
    if alpha_f.is_zero() or beta_f.is_zero():
        return None
    if frac.coerce(m.b) != sx * (beta_f - alpha_f) - cf * sx * sx:
        return None
    return StabParam(alpha_f.as_poly().constant_value(),
                     beta_f.as_poly().constant_value(), m.c)


def stab_reconstruct(ring: PolyRing, param: StabParam, s: ProjPoint) -> Mat2:
    """Rebuild the matrix from (alpha, beta, c); exact inverse of stab_membership."""
    alpha = ring.const(param.alpha.code)
    beta = ring.const(param.beta.code)
    if s.infinite:
        return Mat2(ring, alpha, param.c, ring.zero, beta)
    frac = s.field
    sx = s.x
    cf = frac.coerce(param.c)
    a = frac.coerce(alpha) + cf * sx
    b = sx * (frac.coerce(beta) - frac.coerce(alpha)) - cf * sx * sx
    d = frac.coerce(beta) - cf * sx
    for entry in (a, b, d):
        if not entry.is_polynomial():
            raise ValueError("parameters do not give a matrix over F_q[t]")
    return Mat2(ring, a.as_poly(), b.as_poly(), param.c, d.as_poly())


def unipotent_stab(ring: PolyRing, s: ProjPoint, c: Poly) -> Mat2:
    """The unipotent element with parameters (1, 1, c) fixing s.

    Needs c*s and c*s^2 polynomial, i.e. c in the conductor ideal of s.
    """
    return stab_reconstruct(ring, StabParam(ring.field.one, ring.field.one, c), s)


@dataclass(frozen=True)
class IdealQs:
    """Polynomials c with c*s and c*s^2 integral, listed up to a degree bound."""

    s_text: str
    bound: int
    generator: Poly | None
    members: tuple


def qs_basis(s: ProjPoint, bound: int, ring: PolyRing) -> IdealQs:
    """Brute-force scan of {c : deg c <= bound, c*s, c*s^2 in F_q[t]}.

    The members always form an ideal; the generator is the least-degree
    monic nonzero member (None when only 0 shows up within the bound).
    """
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    members = []
    if s.infinite:
        members = list(ring.polys_of_degree_at_most(bound))
    else:
        frac = s.field
        sx = s.x
        sx2 = sx * sx
        for c in ring.polys_of_degree_at_most(bound):
            cf = frac.coerce(c)
            if (cf * sx).is_polynomial() and (cf * sx2).is_polynomial():
                members.append(c)
    gen = None
    for c in members:
        if not c.is_zero() and (gen is None or c.deg < gen.deg):
            gen = c
    if gen is not None:
        gen = gen.monic()
    return IdealQs(s.text(), bound, gen, tuple(members))


@dataclass(frozen=True)
class EllipticStab:
    """Generators of the stabilizer of a quadratic point eps and its conjugate."""

    g: Mat2
    g_swap: Mat2
    lam: FieldElem
    mu: FieldElem


def elliptic_stab(field: FieldSpec, eps: QuadExtElem) -> EllipticStab:
    """Order q^2-1 cyclic stabilizer generator g of {eps, eps^q} plus the swap g'.

    eps must generate F_{q^2}*; with lam = eps^(q+1) and mu = eps + eps^q,

        g = [[0, lam], [-1, mu]],   g' = [[0, lam], [1, 0]].

    g fixes eps and its conjugate; g' exchanges them; g' g g'^{-1} = g^q.
    """
    ext = eps.ext
    if ext.base is not field:
        raise ValueError("eps must live in the quadratic extension of the given field")
    if ext.order_of(eps) != field.q ** 2 - 1:
        raise ValueError("eps must generate the unit group of F_{q^2}")
    lam = ext.norm(eps)
    mu = ext.trace(eps)
    g = Mat2(field, field.zero, lam, -field.one, mu)
    g_swap = Mat2(field, field.zero, lam, field.one, field.zero)
    return EllipticStab(g, g_swap, lam, mu)


def matrix_order(m: Mat2, limit: int = 1 << 20) -> int:
    ident = Mat2.identity(m.ring)
    acc = m
    k = 1
    while acc != ident:
        acc = acc * m
        k += 1
        if k > limit:
            raise ValueError("order exceeds limit")
    return k


def gl2_elements(field: FieldSpec):
    """All of GL2(F_q), ordered by entry codes."""
    elems = list(field.elements())
    for a in elems:
        for b in elems:
            for c in elems:
                for d in elems:
                    if bool(a * d - b * c):
                        yield Mat2(field, a, b, c, d)


def proj_point_from_text(frac: FracField, s: str) -> ProjPoint:
    s = s.strip()
    if s in ("inf", "infty", "infinity", "oo"):
        return ProjPoint.infinity(frac)
    return ProjPoint.of(frac, frac.parse_element(s))
