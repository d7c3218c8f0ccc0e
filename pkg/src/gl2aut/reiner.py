"""Automorphisms of GL2(F_q[t]) induced by F_q-linear substitutions.

An invertible F_q-linear map phi of t*F_q[t] that moves only finitely
many monomials extends to a group automorphism: constant matrices are
fixed, and an upper triangular [[alpha, a], [0, beta]] maps to
[[alpha, a0 + phi(a - a0)], [0, beta]] where a0 is the constant term of
a.  General elements go through the amalgam normal form letterwise.
"""

from __future__ import annotations

import json

from .matgroup import Mat2
from .nagao import B_SIDE, Letter, decompose, evaluate
from .polyring import Poly, PolyRing


class LinearAutoSpec:
    """Finite-support invertible F_q-linear map on span{t, t^2, ...}.

    map_images[i] is the image of t^i (a Poly with zero constant term);
    monomials outside the support are fixed.  The inverse is stored and
    the two compositions are checked to be the identity on every
    monomial up to the joint degree bound.
    """

    def __init__(self, ring: PolyRing, map_images: dict[int, Poly],
                 inverse_images: dict[int, Poly]):
        self.ring = ring
        self.map_images = {int(i): p for i, p in map_images.items()}
        self.inverse_images = {int(i): p for i, p in inverse_images.items()}
        self._validate()

    def _validate(self):
        for images in (self.map_images, self.inverse_images):
            for i, p in images.items():
                if i < 1:
                    raise ValueError("support indices must be >= 1")
                if p.ring is not self.ring:
                    raise ValueError("image polynomial over the wrong ring")
                if p.is_zero() or p.constant_code() != 0:
                    raise ValueError(f"image of t^{i} must be nonzero with zero "
                                     "constant term")
        bound = 1
        for images in (self.map_images, self.inverse_images):
            for i, p in images.items():
                bound = max(bound, i, p.deg)
        for i in range(1, bound + 1):
            mono = self.ring.monomial(1, i)
            if self.apply_tail(self.inverse_tail(mono)) != mono \
                    or self.inverse_tail(self.apply_tail(mono)) != mono:
                raise ValueError("stored inverse does not invert the map on "
                                 f"t^{i}")

    def _apply(self, images: dict[int, Poly], tail: Poly) -> Poly:
        out = self.ring.zero
        for i in range(1, tail.deg + 1):
            c = tail.coeff_code(i)
            if c == 0:
                continue
            img = images.get(i)
            if img is None:
                out = out + self.ring.monomial(c, i)
            else:
                out = out + img.scale(c)
        return out

    def apply_tail(self, tail: Poly) -> Poly:
        """phi on a polynomial with zero constant term."""
        if tail.constant_code() != 0:
            raise ValueError("apply_tail expects a zero constant term")
        return self._apply(self.map_images, tail)

    def inverse_tail(self, tail: Poly) -> Poly:
        if tail.constant_code() != 0:
            raise ValueError("inverse_tail expects a zero constant term")
        return self._apply(self.inverse_images, tail)

    def apply_poly(self, a: Poly) -> Poly:
        """a0 + phi(a - a0): the substitution applied off the constant term."""
        a0 = self.ring.const(a.constant_code())
        return a0 + self.apply_tail(a - a0)

    def inverted(self) -> "LinearAutoSpec":
        return LinearAutoSpec(self.ring, self.inverse_images, self.map_images)

    def to_json(self) -> dict:
        def dump(images):
            return {str(i): [p.coeff_code(k) for k in range(p.deg + 1)]
                    for i, p in sorted(images.items())}

        return {"map": dump(self.map_images), "inverse": dump(self.inverse_images)}

    @classmethod
    def from_json(cls, ring: PolyRing, data: dict) -> "LinearAutoSpec":
        def load(images):
            return {int(i): ring.poly(coeffs) for i, coeffs in images.items()}

        try:
            return cls(ring, load(data["map"]), load(data["inverse"]))
        except KeyError as exc:
            raise ValueError(f"spec JSON missing key {exc}")

    @classmethod
    def from_pairs(cls, ring: PolyRing, pairs: dict[int, str],
                   inverse_pairs: dict[int, str]) -> "LinearAutoSpec":
        return cls(ring,
                   {i: ring.parse_element(s) for i, s in pairs.items()},
                   {i: ring.parse_element(s) for i, s in inverse_pairs.items()})

    def __eq__(self, other):
        return (isinstance(other, LinearAutoSpec) and self.ring is other.ring
                and self.map_images == other.map_images
                and self.inverse_images == other.inverse_images)

    def __repr__(self):
        return f"LinearAutoSpec({json.dumps(self.to_json()['map'])})"


def identity_spec(ring: PolyRing) -> LinearAutoSpec:
    return LinearAutoSpec(ring, {}, {})


def reiner_on_cuspstab(spec: LinearAutoSpec, m: Mat2) -> Mat2:
    """The automorphism on an upper triangular matrix over F_q[t]."""
    ring = spec.ring
    if m.ring is not ring:
        raise ValueError("matrix ring does not match the spec ring")
    if not m.c.is_zero():
        raise ValueError("reiner_on_cuspstab expects an upper triangular matrix")
    if not (m.a.is_constant() and m.d.is_constant()):
        raise ValueError("diagonal entries must be units of F_q")
    return Mat2(ring, m.a, spec.apply_poly(m.b), ring.zero, m.d)


def reiner_apply(spec: LinearAutoSpec, m: Mat2) -> Mat2:
    """Extend the substitution automorphism to all of GL2(F_q[t]) through the
    amalgam normal form: constant letters are fixed, triangular letters map
    by reiner_on_cuspstab."""
    word = decompose(m)
    image = []
    for lt in word:
        if lt.side == B_SIDE:
            image.append(Letter(B_SIDE, reiner_on_cuspstab(spec, lt.mat)))
        else:
            image.append(lt)
    return evaluate(spec.ring, image)


def reiner_inverse(spec: LinearAutoSpec, m: Mat2) -> Mat2:
    return reiner_apply(spec.inverted(), m)


def unipotent_upper(ring: PolyRing, a: Poly) -> Mat2:
    """T(a) = [[1, a], [0, 1]]."""
    return Mat2(ring, ring.one, a, ring.zero, ring.one)


def congruence_member(m: Mat2, modulus: Poly) -> bool:
    """Principal congruence test: det = 1 and m = I mod the modulus."""
    ring = m.ring
    if modulus.is_zero() or modulus.deg < 1:
        raise ValueError("modulus must have degree >= 1")
    if m.det() != ring.one:
        return False
    ident = Mat2.identity(ring)
    return all((x - y) % modulus == ring.zero for x, y in
               zip(m.entries(), ident.entries()))


def unipotent_fiber(spec: LinearAutoSpec, modulus: Poly, bound: int,
                    check: bool = True) -> list[Poly]:
    """All a with deg a <= bound whose unipotent T(a) is carried into the
    principal congruence subgroup of the modulus by the inverse substitution.

    Computed two ways and cross-checked when check=True: through the full
    reiner_apply machinery, and by the closed-form membership
    a0 + phi^{-1}(a - a0) = 0 mod modulus.  The result is an F_q-subspace.
    """
    ring = spec.ring
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    out = []
    for a in ring.polys_of_degree_at_most(bound):
        a0 = ring.const(a.constant_code())
        closed = (a0 + spec.inverse_tail(a - a0)) % modulus == ring.zero
        if check:
            direct = congruence_member(reiner_apply(spec.inverted(),
                                                    unipotent_upper(ring, a)),
                                       modulus)
            if direct != closed:
                raise AssertionError(
                    f"fiber routes disagree at a = {a.text()}")
        if closed:
            out.append(a)
    return out
