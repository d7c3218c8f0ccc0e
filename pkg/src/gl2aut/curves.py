"""Weierstrass curves over small F_q: point enumeration, group law,
counting polynomials, and the derived class-number data.

For a nonsingular curve with N rational points the numerator of the zeta
function is L(u) = 1 + (N - q - 1) u + q u^2; then L(1) = N recovers the
point count, and L(-1) counts the quadratic points used to split the
class group contributions: L(-1) = cl2 + 2 r with cl2 the number of
2-torsion points (identity included).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ffield import FieldElem, FieldSpec, aut_rel_count


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElem
    y: FieldElem

    def text(self) -> str:
        return f"({self.x.text()},{self.y.text()})"


class _Infinity:
    def __repr__(self):
        return "INF"

    def text(self) -> str:
        return "inf"


INFINITY = _Infinity()


class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a FieldSpec."""

    def __init__(self, field: FieldSpec, a1, a2, a3, a4, a6):
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = (
            field.coerce(a) for a in (a1, a2, a3, a4, a6))

    def discriminant(self) -> FieldElem:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        two = self.field.one + self.field.one
        three = two + self.field.one
        four = two + two
        b2 = a1 * a1 + four * a2
        b4 = two * a4 + a1 * a3
        b6 = a3 * a3 + four * a6
        b8 = a1 * a1 * a6 + four * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        nine = three * three
        eight = four + four
        twenty_seven = nine * three
        return (-b2 * b2 * b8 - eight * b4 * b4 * b4
                - twenty_seven * b6 * b6 + nine * b2 * b4 * b6)

    def is_nonsingular(self) -> bool:
        return bool(self.discriminant())

    def contains(self, pt) -> bool:
        if pt is INFINITY:
            return True
        x, y = pt.x, pt.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def coeff_text(self) -> dict:
        return {"q": self.field.q,
                "a1": self.a1.text(), "a2": self.a2.text(), "a3": self.a3.text(),
                "a4": self.a4.text(), "a6": self.a6.text()}

    def __repr__(self):
        c = self.coeff_text()
        return ("Curve(q={q}; a1={a1} a2={a2} a3={a3} a4={a4} a6={a6})".format(**c))


def enumerate_points(curve: WeierstrassCurve) -> list:
    """All rational points, infinity first, affine points in code order."""
    pts = [INFINITY]
    for x in curve.field.elements():
        for y in curve.field.elements():
            p = AffinePoint(x, y)
            if curve.contains(p):
                pts.append(p)
    return pts


def point_neg(curve: WeierstrassCurve, pt):
    if pt is INFINITY:
        return INFINITY
    return AffinePoint(pt.x, -pt.y - curve.a1 * pt.x - curve.a3)


def point_add(curve: WeierstrassCurve, p, r):
    """Chord-tangent addition in the full Weierstrass form."""
    if p is INFINITY:
        return r
    if r is INFINITY:
        return p
    a1, a2, a3, a4 = curve.a1, curve.a2, curve.a3, curve.a4
    x1, y1 = p.x, p.y
    x2, y2 = r.x, r.y
    if x1 == x2 and r == point_neg(curve, p):
        return INFINITY
    if p == r:
        two = curve.field.one + curve.field.one
        three = two + curve.field.one
        denom = two * y1 + a1 * x1 + a3
        lam = (three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1) / denom
        nu = (-x1 * x1 * x1 + a4 * x1 + two * curve.a6 - a3 * y1) / denom
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return AffinePoint(x3, y3)


def point_mul(curve: WeierstrassCurve, k: int, pt):
    if k < 0:
        return point_mul(curve, -k, point_neg(curve, pt))
    acc = INFINITY
    base = pt
    while k:
        if k & 1:
            acc = point_add(curve, acc, base)
        base = point_add(curve, base, base)
        k >>= 1
    return acc


def point_order(curve: WeierstrassCurve, pt) -> int:
    k = 1
    acc = pt
    while acc is not INFINITY:
        acc = point_add(curve, acc, pt)
        k += 1
    return k


def group_structure(curve: WeierstrassCurve, points=None) -> list[int]:
    """Invariant factors [d1, ..., dk] with d1 | d2 | ... (empty for trivial).

    Determined from the counts of p^k-torsion points, which fix the
    partition of exponents for each prime dividing the group order.
    """
    if points is None:
        points = enumerate_points(curve)
    n = len(points)
    if n == 1:
        return []
    by_prime: dict[int, list[int]] = {}
    for p in _prime_factors(n):
        # m_k = log_p #{x : p^k x = 0}; parts-with-size >= k = m_k - m_{k-1}
        prev = 0
        parts = []
        k = 1
        while True:
            cnt = sum(1 for pt in points if point_mul(curve, p ** k, pt) is INFINITY)
            mk = round(math.log(cnt, p))
            assert p ** mk == cnt, "torsion count is not a prime power"
            width = mk - prev
            if width == 0:
                break
            parts.append(width)
            prev = mk
            k += 1
        # parts[k-1] = number of cyclic factors of order >= p^k
        exps = []
        for i, w in enumerate(parts):
            exps.extend([i + 1] * (w - (parts[i + 1] if i + 1 < len(parts) else 0)))
        exps.sort(reverse=True)
        by_prime[p] = exps
    width = max(len(v) for v in by_prime.values())
    factors = []
    for i in range(width):
        d = 1
        for p, exps in by_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    factors.sort()
    assert math.prod(factors) == n
    return factors


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def two_torsion_count(curve: WeierstrassCurve, points=None) -> int:
    """Number of points with 2P = infinity, the identity included."""
    if points is None:
        points = enumerate_points(curve)
    return sum(1 for pt in points if point_mul(curve, 2, pt) is INFINITY)


@dataclass(frozen=True)
class LPoly:
    """Zeta numerator with coefficient tuple (1, ...), degree 2*genus."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("L-polynomial must have constant coefficient 1")

    @property
    def genus(self) -> int:
        if len(self.coeffs) % 2 == 0:
            raise ValueError("L-polynomial must have even degree")
        return (len(self.coeffs) - 1) // 2

    def __call__(self, u: int) -> int:
        return sum(c * u ** i for i, c in enumerate(self.coeffs))


def lpoly_from_count(n_points: int, q: int) -> LPoly:
    """L(u) = 1 + (N - q - 1) u + q u^2 for an elliptic count N, Hasse-checked."""
    a = n_points - q - 1
    if a * a > 4 * q:
        raise ValueError(f"point count {n_points} violates the Hasse bound for q={q}")
    return LPoly((1, a, q))


def ell_count(lpoly: LPoly) -> int:
    """L(-1): the number of quadratic (conjugate-pair or rational-pair) classes."""
    v = lpoly(-1)
    if v <= 0:
        raise ValueError("L(-1) must be positive")
    return v


@dataclass(frozen=True)
class ClassData:
    """Counting data attached to a curve: h = L(1), cl2 two-torsion size,
    r conjugate pairs, and the split of L(-1) = ell_eq + ell_neq."""

    h: int
    cl2: int
    r: int
    ell_eq: int
    ell_neq: int


def class_data(lpoly: LPoly, curve: WeierstrassCurve = None, points=None) -> ClassData:
    """Derive (h, cl2, r) from L and the rational point group; genus <= 1 only."""
    if lpoly.genus > 1:
        raise ValueError("class data supported for genus <= 1 only")
    if lpoly.genus == 0:
        return ClassData(h=1, cl2=1, r=0, ell_eq=1, ell_neq=0)
    if curve is None:
        raise ValueError("genus-1 class data needs the curve")
    if points is None:
        points = enumerate_points(curve)
    h = lpoly(1)
    if h != len(points):
        raise ValueError("L(1) does not match the rational point count")
    cl2 = two_torsion_count(curve, points)
    total = ell_count(lpoly)
    if total < cl2 or (total - cl2) % 2:
        raise ValueError("L(-1) - cl2 must be an even nonnegative integer")
    r = (total - cl2) // 2
    return ClassData(h=h, cl2=cl2, r=r, ell_eq=cl2, ell_neq=2 * r)


def cs_order(r: int, q: int) -> int:
    """r! * a^r with a = aut_rel_count(q): the order of the wreath group
    permuting r interchangeable quadratic classes."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return math.factorial(r) * aut_rel_count(q) ** r


def curve_from_text(spec: str) -> WeierstrassCurve:
    """Parse "q=<prime power>;y2+a1xy+a3y=x3+a2x2+a4x+a6".

    Terms may be omitted when their coefficient vanishes; coefficients are
    bare integers over prime fields and (c0,c1,...) vectors otherwise.
    """
    from .ffield import field_of_order

    spec = spec.replace(" ", "")
    parts = spec.split(";")
    if len(parts) != 2 or not parts[0].startswith("q="):
        raise ValueError(f"bad curve spec {spec!r}")
    try:
        q = int(parts[0][2:])
    except ValueError:
        raise ValueError(f"bad field size in {spec!r}")
    field = field_of_order(q)
    lhs, eq, rhs = parts[1].partition("=")
    if not eq:
        raise ValueError(f"curve spec needs an equation: {spec!r}")
    coeffs = {"a1": field.zero, "a2": field.zero, "a3": field.zero,
              "a4": field.zero, "a6": field.zero}

    def parse_coeff(text: str) -> FieldElem:
        if text == "":
            return field.one
        if text.startswith("(") and text.endswith(")"):
            return field.from_coeffs([int(d) for d in text[1:-1].split(",")])
        if field.n > 1:
            raise ValueError(f"coefficient {text!r} is ambiguous over F_{q}; "
                             "use a (c0,c1,...) vector")
        return field.el(int(text) % field.p)

    lhs_terms = lhs.split("+")
    if not lhs_terms or lhs_terms[0] != "y2":
        raise ValueError(f"left side must start with y2: {spec!r}")
    for term in lhs_terms[1:]:
        if term.endswith("xy"):
            coeffs["a1"] = parse_coeff(term[:-2])
        elif term.endswith("y"):
            coeffs["a3"] = parse_coeff(term[:-1])
        else:
            raise ValueError(f"unexpected left-side term {term!r}")
    rhs_terms = rhs.split("+")
    if not rhs_terms or rhs_terms[0] != "x3":
        raise ValueError(f"right side must start with x3: {spec!r}")
    for term in rhs_terms[1:]:
        if term.endswith("x2"):
            coeffs["a2"] = parse_coeff(term[:-2])
        elif term.endswith("x"):
            coeffs["a4"] = parse_coeff(term[:-1])
        else:
            coeffs["a6"] = parse_coeff(term)
    curve = WeierstrassCurve(field, coeffs["a1"], coeffs["a2"], coeffs["a3"],
                             coeffs["a4"], coeffs["a6"])
    if not curve.is_nonsingular():
        raise ValueError(f"curve {spec!r} is singular")
    return curve


def curve_to_json(curve: WeierstrassCurve) -> dict:
    return {"p": curve.field.p, "n": curve.field.n, **{
        k: v for k, v in curve.coeff_text().items() if k != "q"}}


def curve_from_json(data: dict) -> WeierstrassCurve:
    from .ffield import field_make

    field = field_make(int(data["p"]), int(data["n"]))
    return WeierstrassCurve(field, *(field.parse_element(data[k])
                                     for k in ("a1", "a2", "a3", "a4", "a6")))
