"""Cusp counts through finite quotients of GL2(F_q[t]).

Reducing mod a polynomial modulus m sends GL2(F_q[t]) onto the subgroup
of GL2(F_q[t]/m) whose determinant lies in F_q* (a proper subgroup once
the residue ring has extra units: order 48 inside the order 96 group for
q = 2, m = t^2).  The number of cusps of a finite-index subgroup given
by its reduction Hbar is the number of double cosets

    Hbar \\ Gbar / Bbar

with Bbar the image of the infinity-cusp stabilizer, summed over a set
of cusp representatives (a single representative here: base ring F_q[t]
has class number one, so one orbit of points at the boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .matgroup import Mat2
from .polyring import Poly, PolyRing

_TABLE_LIMIT = 2048


class QuotRing:
    """F_q[t]/(m) with residues encoded as ints (base-q coefficient codes)."""

    def __init__(self, ring: PolyRing, modulus: Poly):
        if modulus.deg < 1:
            raise ValueError("modulus must have degree >= 1")
        self.ring = ring
        self.field = ring.field
        self.modulus = modulus.monic()
        self.deg = modulus.deg
        self.size = ring.field.q ** self.deg
        q = ring.field.q
        self._residues = [ring.from_code(c) for c in range(self.size)]
        self._unit = [self._coprime(p) for p in self._residues]
        self.one = 1
        self.zero = 0
        if self.size <= 256:
            self._mul_tab = [[self._mul_slow(a, b) for b in range(self.size)]
                             for a in range(self.size)]
            self._add_tab = [[self._add_slow(a, b) for b in range(self.size)]
                             for a in range(self.size)]
        else:
            self._mul_tab = None
            self._add_tab = None
        self._inv = {}
        for a in range(self.size):
            if self._unit[a]:
                for b in range(self.size):
                    if self.mul(a, b) == 1:
                        self._inv[a] = b
                        break

    def _coprime(self, p: Poly) -> bool:
        return self.ring.gcd(p, self.modulus).deg == 0 if not p.is_zero() else False

    def reduce_poly(self, p: Poly) -> int:
        return (p % self.modulus).encode()

    def _add_slow(self, a: int, b: int) -> int:
        return (self._residues[a] + self._residues[b]).encode()

    def _mul_slow(self, a: int, b: int) -> int:
        return self.reduce_poly(self._residues[a] * self._residues[b])

    def add(self, a: int, b: int) -> int:
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._add_slow(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_tab is not None:
            return self._mul_tab[a][b]
        return self._mul_slow(a, b)

    def neg(self, a: int) -> int:
        return (-self._residues[a] % self.modulus).encode()

    def is_unit(self, a: int) -> bool:
        return self._unit[a]

    def inv(self, a: int) -> int:
        if a not in self._inv:
            raise ZeroDivisionError(f"residue {self._residues[a].text()} is not a unit")
        return self._inv[a]

    def is_field_scalar(self, a: int) -> bool:
        return a < self.field.q

    def residue_text(self, a: int) -> str:
        return self._residues[a].text()

    def __repr__(self):
        return f"QuotRing(F_{self.field.q}[t]/({self.modulus.text()}))"


def mat_mul_r(R: QuotRing, x: tuple, y: tuple) -> tuple:
    a, b, c, d = x
    e, f, g, h = y
    return (R.add(R.mul(a, e), R.mul(b, g)), R.add(R.mul(a, f), R.mul(b, h)),
            R.add(R.mul(c, e), R.mul(d, g)), R.add(R.mul(c, f), R.mul(d, h)))


def mat_det_r(R: QuotRing, x: tuple) -> int:
    a, b, c, d = x
    return R.add(R.mul(a, d), R.neg(R.mul(b, c)))


def mat_inv_r(R: QuotRing, x: tuple) -> tuple:
    a, b, c, d = x
    di = R.inv(mat_det_r(R, x))
    return (R.mul(d, di), R.neg(R.mul(b, di)), R.neg(R.mul(c, di)), R.mul(a, di))


def reduce_mat(R: QuotRing, m: Mat2) -> tuple:
    """Reduce a unit-determinant matrix over F_q[t] mod the modulus."""
    det = m.det()
    if not det.is_constant() or det.is_zero():
        raise ValueError(f"{m.text()} is not invertible over F_q[t]")
    return tuple(R.reduce_poly(e) for e in m.entries())


class FiniteGroup:
    """A finite matrix group over a QuotRing, elements as sorted 4-tuples."""

    def __init__(self, R: QuotRing, elems: list):
        self.R = R
        self.elems = sorted(elems)
        self.index = {e: i for i, e in enumerate(self.elems)}
        ident = (1, 0, 0, 1)
        if ident not in self.index:
            raise ValueError("group does not contain the identity")
        self.identity_idx = self.index[ident]
        n = len(self.elems)
        if n <= _TABLE_LIMIT:
            self._table = [
                [self.index[mat_mul_r(R, x, y)] for y in self.elems]
                for x in self.elems]
        else:
            self._table = None
        self._inv_idx = [self.index[mat_inv_r(R, x)] for x in self.elems]

    def __len__(self):
        return len(self.elems)

    def mul_idx(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[mat_mul_r(self.R, self.elems[i], self.elems[j])]

    def inv_idx(self, i: int) -> int:
        return self._inv_idx[i]

    def conj_idx(self, g: int, h: int) -> int:
        return self.mul_idx(self.mul_idx(g, h), self.inv_idx(g))

    @classmethod
    def generated(cls, R: QuotRing, gen_tuples) -> "FiniteGroup":
        gens = list(dict.fromkeys(gen_tuples))
        for g in gens:
            if not R.is_unit(mat_det_r(R, g)):
                raise ValueError("generator is not invertible in the quotient")
        seen = {(1, 0, 0, 1)}
        frontier = [(1, 0, 0, 1)]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = mat_mul_r(R, x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return cls(R, list(seen))

    def closure_idx(self, gen_idx) -> frozenset:
        """Subgroup of this group generated by the given element indices."""
        seen = {self.identity_idx}
        frontier = [self.identity_idx]
        gen_idx = list(dict.fromkeys(gen_idx))
        while frontier:
            x = frontier.pop()
            for g in gen_idx:
                y = self.mul_idx(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)


def full_gl2(R: QuotRing) -> FiniteGroup:
    """All of GL2(F_q[t]/m), by scanning entry tuples (small moduli only)."""
    elems = []
    n = R.size
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if R.is_unit(mat_det_r(R, (a, b, c, d))):
                        elems.append((a, b, c, d))
    return FiniteGroup(R, elems)


def reduction_image(R: QuotRing) -> FiniteGroup:
    """The image of GL2(F_q[t]) in GL2(F_q[t]/m): generated by reduced
    elementary matrices and the diagonal F_q*-units."""
    q = R.field.q
    gens = []
    for i in range(R.deg):
        for c in range(1, q):
            mono = R.reduce_poly(R.ring.monomial(c, i))
            gens.append((1, mono, 0, 1))
            gens.append((1, 0, mono, 1))
    for alpha in range(2, q):
        gens.append((alpha, 0, 0, 1))
        gens.append((1, 0, 0, alpha))
    return FiniteGroup.generated(R, gens)


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup of a FiniteGroup: generator indices plus the closed set."""

    group: FiniteGroup
    gens: tuple
    members: frozenset = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "members", self.group.closure_idx(self.gens))

    @property
    def order(self) -> int:
        return len(self.members)

    @classmethod
    def from_matrices(cls, group: FiniteGroup, R: QuotRing, mats) -> "SubgroupSpec":
        idxs = []
        for m in mats:
            tup = reduce_mat(R, m) if isinstance(m, Mat2) else tuple(m)
            if tup not in group.index:
                raise ValueError(f"generator {tup} lies outside the ambient group")
            idxs.append(group.index[tup])
        return cls(group, tuple(idxs))

    def conjugate(self, g: int) -> "SubgroupSpec":
        return SubgroupSpec(self.group, tuple(self.group.conj_idx(g, h)
                                              for h in self.gens))


def image_cusp_stab(group: FiniteGroup, R: QuotRing) -> SubgroupSpec:
    """The reduction of the infinity-cusp stabilizer: upper triangular
    matrices with F_q* diagonal and arbitrary residue upper entry."""
    q = R.field.q
    gens = []
    for alpha in range(2, q):
        gens.append((alpha, 0, 0, 1))
        gens.append((1, 0, 0, alpha))
    for i in range(R.deg):
        for c in range(1, q):
            gens.append((1, R.reduce_poly(R.ring.monomial(c, i)), 0, 1))
    return SubgroupSpec.from_matrices(group, R, gens)


def double_coset_count(G: FiniteGroup, H: SubgroupSpec, K: SubgroupSpec) -> int:
    """|H \\ G / K| by orbit sweeping; the class sizes always sum to |G|."""
    if H.group is not G or K.group is not G:
        raise ValueError("subgroups must live in the ambient group")
    hgens = [g for g in H.gens] + [G.inv_idx(g) for g in H.gens]
    kgens = [g for g in K.gens] + [G.inv_idx(g) for g in K.gens]
    visited = bytearray(len(G))
    classes = 0
    total = 0
    for start in range(len(G)):
        if visited[start]:
            continue
        classes += 1
        stack = [start]
        visited[start] = 1
        size = 0
        while stack:
            x = stack.pop()
            size += 1
            for h in hgens:
                y = G.mul_idx(h, x)
                if not visited[y]:
                    visited[y] = 1
                    stack.append(y)
            for k in kgens:
                y = G.mul_idx(x, k)
                if not visited[y]:
                    visited[y] = 1
                    stack.append(y)
        total += size
    assert total == len(G)
    return classes


@dataclass
class QuotientContext:
    """Ambient data for cusp counting mod a fixed modulus."""

    R: QuotRing
    group: FiniteGroup
    cusp_stab: SubgroupSpec


_CTX_CACHE: dict[tuple, QuotientContext] = {}


def quotient_context(ring: PolyRing, modulus: Poly) -> QuotientContext:
    key = (id(ring), modulus.monic().coeffs)
    if key not in _CTX_CACHE:
        R = QuotRing(ring, modulus)
        group = reduction_image(R)
        _CTX_CACHE[key] = QuotientContext(R, group, image_cusp_stab(group, R))
    return _CTX_CACHE[key]


def cusp_count(ctx: QuotientContext, hbar: SubgroupSpec) -> int:
    """Number of cusps of the subgroup with reduction hbar: the double coset
    count against the boundary stabilizer image."""
    return double_coset_count(ctx.group, hbar, ctx.cusp_stab)


def cusp_count_from_matrices(ring: PolyRing, modulus: Poly, mats) -> int:
    ctx = quotient_context(ring, modulus)
    return cusp_count(ctx, SubgroupSpec.from_matrices(ctx.group, ctx.R, mats))


def conj_invariance_check(ctx: QuotientContext, hbar: SubgroupSpec) -> bool:
    """Cusp counts agree for every conjugate of hbar inside the ambient group."""
    base = cusp_count(ctx, hbar)
    seen_members = {hbar.members}
    for g in range(len(ctx.group)):
        conj = hbar.conjugate(g)
        if conj.members in seen_members:
            continue
        seen_members.add(conj.members)
        if cusp_count(ctx, conj) != base:
            return False
    return True


def all_subgroups(G: FiniteGroup) -> list[frozenset]:
    """Every subgroup of G (as member-index frozensets), found by closing
    each known subgroup with one extra element until the lattice stabilizes."""
    trivial = frozenset({G.identity_idx})
    gens_of = {trivial: ()}
    work = [trivial]
    while work:
        S = work.pop()
        for g in range(len(G)):
            if g in S:
                continue
            T = G.closure_idx(gens_of[S] + (g,))
            if T not in gens_of:
                gens_of[T] = gens_of[S] + (g,)
                work.append(T)
    return sorted(gens_of, key=lambda s: (len(s), sorted(s)))


def subgroup_from_members(G: FiniteGroup, members: frozenset) -> SubgroupSpec:
    return SubgroupSpec(G, tuple(sorted(members)))
