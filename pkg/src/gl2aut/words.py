"""Reduced words in free products and their generator automorphisms.

A declaration lists free factors of three kinds: finite cyclic groups,
matrix-backed groups (invertible 2x2 matrices over a fixed ring) and
countably based vector groups over a small field.  Elements of the product
are reduced words: sequences of (factor index, nonidentity element) letters
with adjacent letters in distinct factors.

Automorphisms are generated by three record kinds, the standard generating
set for automorphism groups of free products:

  * ``Type1``       an automorphism of one factor, extended by the identity;
  * ``PartialConj`` conjugation of exactly one factor by a fixed element of
    another factor;
  * ``Swap``        exchange of two isomorphic factors through a chosen
    identification, applied forward one way and backward the other, so every
    swap generator is an involution.

On top of these the module builds the cyclic-spike machinery (power and swap
generators for order q^2-1 cyclic factors with exponents drawn from the
admissible unit classes), a wreath-product closure check for the group those
generators generate, an infinite dihedral subgroup-index demonstration, and
the free-product declarations for the two one-curve examples over F_2.

A declaration may also carry a finite central subgroup (order plus a
generator image inside each factor).  Word arithmetic is implemented for the
trivial-centre case only; the examples exercised here all have trivial
centre because the scalar matrices over F_2 are trivial.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .ffield import FieldSpec, aut_rel_enumerate, field_make
from .matgroup import Mat2, mat_parse
from .polyring import Poly, PolyRing, poly_ring
from .reiner import LinearAutoSpec, reiner_apply

# ---------------------------------------------------------------------------
# factor kinds


@dataclass(frozen=True)
class FiniteCyclic:
    """Cyclic factor of finite order; elements are exponents 0..order-1."""

    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("cyclic factor order must be at least 2")

    def identity(self):
        return 0

    def is_identity(self, e) -> bool:
        return e == 0

    def is_member(self, e) -> bool:
        return isinstance(e, int) and 0 <= e < self.order

    def mul(self, x, y):
        return (x + y) % self.order

    def inv(self, x):
        return (-x) % self.order

    def elem_text(self, e) -> str:
        return str(e)

    def parse_elem(self, s: str):
        try:
            k = int(str(s).strip())
        except ValueError:
            raise ValueError(f"bad cyclic element {s!r}")
        if not 0 <= k < self.order:
            raise ValueError(f"cyclic exponent {k} out of range 0..{self.order - 1}")
        return k

    def iso_key(self):
        return ("cyclic", self.order)


@dataclass(frozen=True)
class MatrixBacked:
    """Factor whose elements are invertible 2x2 matrices over a fixed ring.

    The ring is a polynomial ring (matrices with unit, i.e. constant nonzero,
    determinant) or a finite field (the constant matrix group).
    """

    ring: object

    def identity(self):
        return Mat2.identity(self.ring)

    def is_identity(self, e) -> bool:
        return isinstance(e, Mat2) and e.is_identity()

    def is_member(self, e) -> bool:
        if not (isinstance(e, Mat2) and e.ring is self.ring):
            return False
        try:
            self.ring.invert_unit(e.det())
        except (ValueError, ZeroDivisionError, TypeError):
            return False
        return True

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return x.inverse()

    def elem_text(self, e) -> str:
        return e.text()

    def parse_elem(self, s: str):
        m = mat_parse(self.ring, str(s))
        if not self.is_member(m):
            raise ValueError(f"matrix {s!r} is not invertible over the factor ring")
        return m

    def iso_key(self):
        if isinstance(self.ring, PolyRing):
            return ("matrix-poly", self.ring.field.q)
        return ("matrix-const", self.ring.q)


@dataclass(frozen=True)
class VectorFactor:
    """Vector group over F_q on a countable basis.

    Elements are finite-support coefficient tuples (basis-1 coefficient
    first, trailing zeros stripped, entries are field element codes).
    """

    field: FieldSpec

    def identity(self):
        return ()

    def is_identity(self, e) -> bool:
        return e == ()

    def is_member(self, e) -> bool:
        return (isinstance(e, tuple)
                and all(isinstance(c, int) and 0 <= c < self.field.q for c in e)
                and (not e or e[-1] != 0))

    def mul(self, x, y):
        add = self.field.add_i
        out = [add(x[i] if i < len(x) else 0, y[i] if i < len(y) else 0)
               for i in range(max(len(x), len(y)))]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def inv(self, x):
        neg = self.field.neg_i
        return tuple(neg(c) for c in x)

    def elem_text(self, e) -> str:
        return "(" + ",".join(str(c) for c in e) + ")"

    def parse_elem(self, s: str):
        text = str(s).strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"bad vector element {s!r}")
        body = text[1:-1].strip()
        codes = []
        if body:
            try:
                codes = [int(c) for c in body.split(",")]
            except ValueError:
                raise ValueError(f"bad vector element {s!r}")
        for c in codes:
            if not 0 <= c < self.field.q:
                raise ValueError(f"coefficient {c} out of range for F_{self.field.q}")
        while codes and codes[-1] == 0:
            codes.pop()
        return tuple(codes)

    def iso_key(self):
        return ("vector", self.field.q)


# ---------------------------------------------------------------------------
# declarations and words


@dataclass(frozen=True)
class FactorDecl:
    """One free factor: its position index plus its element arithmetic."""

    index: int
    kind: object


@dataclass(frozen=True)
class CentralAmalgamDecl:
    """Free product of declared factors, optionally amalgamated along a
    finite central subgroup.

    ``cusps`` records which factor carries the stabilizer of each labelled
    boundary point, for the orbit report.  Word arithmetic requires a
    trivial centre; a nontrivial centre is declared by its order together
    with one generator image per factor and is carried as data only.
    """

    factors: tuple
    center_order: int = 1
    center_images: tuple = ()
    cusps: tuple = ()

    def __post_init__(self):
        for pos, fac in enumerate(self.factors):
            if not isinstance(fac, FactorDecl) or fac.index != pos:
                raise ValueError("factor indices must run 0..k-1 in order")
        if self.center_order < 1:
            raise ValueError("centre order must be positive")
        if self.center_order > 1:
            if len(self.center_images) != len(self.factors):
                raise ValueError("a nontrivial centre needs one image per factor")
            for fac, z in zip(self.factors, self.center_images):
                if not fac.kind.is_member(z):
                    raise ValueError("centre image lies outside its factor")
        for _label, idx in self.cusps:
            self.factor(idx)

    def factor(self, i: int) -> FactorDecl:
        if not (isinstance(i, int) and 0 <= i < len(self.factors)):
            raise ValueError(f"no factor with index {i!r}")
        return self.factors[i]

    def require_plain(self):
        if self.center_order != 1:
            raise NotImplementedError(
                "word arithmetic is implemented for the trivial-centre case only")


@dataclass(frozen=True)
class FreeWord:
    """Reduced word: (factor index, nonidentity element) letters, adjacent
    letters in distinct factors.  Build through word_reduce."""

    letters: tuple = ()

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters


EMPTY_WORD = FreeWord()
LETTER_SEP = "·"


def word_reduce(decl: CentralAmalgamDecl, letters) -> FreeWord:
    """Reduce a letter sequence: drop identities, merge same-factor runs."""
    decl.require_plain()
    stack = []
    for idx, elem in letters:
        kind = decl.factor(idx).kind
        if not kind.is_member(elem):
            raise ValueError(f"element {elem!r} is not in factor {idx}")
        if kind.is_identity(elem):
            continue
        if stack and stack[-1][0] == idx:
            merged = kind.mul(stack.pop()[1], elem)
            if not kind.is_identity(merged):
                stack.append((idx, merged))
        else:
            stack.append((idx, elem))
    return FreeWord(tuple(stack))


def word_mul(decl: CentralAmalgamDecl, u: FreeWord, v: FreeWord) -> FreeWord:
    return word_reduce(decl, u.letters + v.letters)


def word_inv(decl: CentralAmalgamDecl, w: FreeWord) -> FreeWord:
    return word_reduce(decl, [(idx, decl.factor(idx).kind.inv(elem))
                              for idx, elem in reversed(w.letters)])


def word_pow(decl: CentralAmalgamDecl, w: FreeWord, k: int) -> FreeWord:
    if k < 0:
        return word_pow(decl, word_inv(decl, w), -k)
    acc = FreeWord()
    for _ in range(k):
        acc = word_mul(decl, acc, w)
    return acc


def word_text(decl: CentralAmalgamDecl, w: FreeWord) -> str:
    """Letters as "f<i>:<element>" joined by a middle dot; empty word is "e"."""
    if not w.letters:
        return "e"
    return LETTER_SEP.join(f"f{idx}:{decl.factor(idx).kind.elem_text(elem)}"
                           for idx, elem in w.letters)


_LETTER_RE = re.compile(r"^f(\d+):(.+)$")


def word_parse(decl: CentralAmalgamDecl, s: str) -> FreeWord:
    """Inverse of word_text; "." is accepted as an ASCII letter separator."""
    text = s.strip()
    if text in ("", "e"):
        return FreeWord()
    sep = LETTER_SEP if LETTER_SEP in text else "."
    letters = []
    for part in text.split(sep):
        m = _LETTER_RE.match(part.strip())
        if not m:
            raise ValueError(f"bad word letter {part!r}")
        idx = int(m.group(1))
        letters.append((idx, decl.factor(idx).kind.parse_elem(m.group(2))))
    return word_reduce(decl, letters)


def word_eval_matrix(decl: CentralAmalgamDecl, w: FreeWord, factor_index: int) -> Mat2:
    """Matrix product of a word all of whose letters lie in one matrix factor."""
    kind = decl.factor(factor_index).kind
    if not isinstance(kind, MatrixBacked):
        raise ValueError(f"factor {factor_index} is not matrix backed")
    acc = kind.identity()
    for idx, elem in w.letters:
        if idx != factor_index:
            raise ValueError("word has letters outside the requested factor")
        acc = acc * elem
    return acc


# ---------------------------------------------------------------------------
# generator automorphisms


@dataclass(frozen=True)
class ExponentMap:
    """Power automorphism descriptor for a finite cyclic factor."""

    exponent: int


@dataclass(frozen=True)
class ConjugateBy:
    """Inner automorphism descriptor for a matrix-backed factor."""

    mat: Mat2


@dataclass(frozen=True)
class LinearTwist:
    """Linear-map descriptor: a Reiner twist of a matrix factor over F_q[t],
    or an invertible coefficient map of a vector factor."""

    spec: LinearAutoSpec


@dataclass(frozen=True)
class Type1:
    """Automorphism of one factor, extended by the identity elsewhere."""

    factor: int
    descriptor: object


@dataclass(frozen=True)
class PartialConj:
    """Conjugate every letter of the target factor by a fixed element of the
    source factor; all other letters are fixed."""

    source: int
    target: int
    conjugator: object


@dataclass(frozen=True)
class Swap:
    """Exchange two isomorphic factors.  Going left to right applies the
    identification (exponent map on cyclic factors), going right to left its
    inverse, so a swap is always an involution."""

    left: int
    right: int
    exponent: int = 1


def validate_gen(decl: CentralAmalgamDecl, gen) -> None:
    if isinstance(gen, Type1):
        kind = decl.factor(gen.factor).kind
        d = gen.descriptor
        if isinstance(kind, FiniteCyclic):
            if not isinstance(d, ExponentMap):
                raise ValueError("cyclic factors take exponent descriptors")
            if math.gcd(d.exponent, kind.order) != 1:
                raise ValueError(f"exponent {d.exponent} not invertible mod {kind.order}")
        elif isinstance(kind, MatrixBacked):
            if isinstance(d, ConjugateBy):
                if not kind.is_member(d.mat):
                    raise ValueError("conjugator is not invertible over the factor ring")
            elif isinstance(d, LinearTwist):
                if not isinstance(kind.ring, PolyRing) or d.spec.ring is not kind.ring:
                    raise ValueError("linear twist ring does not match the matrix factor")
            else:
                raise ValueError("matrix factors take conjugation or linear-twist descriptors")
        elif isinstance(kind, VectorFactor):
            if not isinstance(d, LinearTwist) or d.spec.ring.field is not kind.field:
                raise ValueError("vector factors take linear twists over the same field")
        else:
            raise ValueError(f"unknown factor kind {kind!r}")
    elif isinstance(gen, PartialConj):
        if gen.source == gen.target:
            raise ValueError("partial conjugation needs distinct source and target")
        decl.factor(gen.target)
        if not decl.factor(gen.source).kind.is_member(gen.conjugator):
            raise ValueError("conjugator is not an element of the source factor")
    elif isinstance(gen, Swap):
        if gen.left == gen.right:
            raise ValueError("swap needs two distinct factors")
        kl = decl.factor(gen.left).kind
        kr = decl.factor(gen.right).kind
        if kl.iso_key() != kr.iso_key():
            raise ValueError("swap requires isomorphic factors")
        if isinstance(kl, FiniteCyclic):
            if math.gcd(gen.exponent, kl.order) != 1:
                raise ValueError(f"exponent {gen.exponent} not invertible mod {kl.order}")
        elif gen.exponent != 1:
            raise ValueError("only the exponent-1 identification exists for this kind")
    else:
        raise ValueError(f"unknown generator {gen!r}")


def _vector_twist(kind: VectorFactor, spec: LinearAutoSpec, elem: tuple) -> tuple:
    # coefficient tuples correspond to polynomials with zero constant term
    tail = spec.ring.poly((0,) + elem)
    return tuple(spec.apply_tail(tail).coeffs[1:])


def apply_gen(decl: CentralAmalgamDecl, gen, w: FreeWord) -> FreeWord:
    """Letterwise image of a reduced word under one generator, re-reduced."""
    decl.require_plain()
    validate_gen(decl, gen)
    out = []
    if isinstance(gen, Type1):
        kind = decl.factor(gen.factor).kind
        d = gen.descriptor
        conj_inv = d.mat.inverse() if isinstance(d, ConjugateBy) else None
        for idx, elem in w.letters:
            if idx != gen.factor:
                out.append((idx, elem))
            elif isinstance(d, ExponentMap):
                out.append((idx, (elem * d.exponent) % kind.order))
            elif conj_inv is not None:
                out.append((idx, d.mat * elem * conj_inv))
            elif isinstance(kind, MatrixBacked):
                out.append((idx, reiner_apply(d.spec, elem)))
            else:
                out.append((idx, _vector_twist(kind, d.spec, elem)))
    elif isinstance(gen, PartialConj):
        inv = decl.factor(gen.source).kind.inv(gen.conjugator)
        for idx, elem in w.letters:
            if idx == gen.target:
                out.extend([(gen.source, gen.conjugator), (idx, elem), (gen.source, inv)])
            else:
                out.append((idx, elem))
    else:
        kind = decl.factor(gen.left).kind
        n = kind.order if isinstance(kind, FiniteCyclic) else None
        back = pow(gen.exponent, -1, n) if n is not None else None
        for idx, elem in w.letters:
            if idx == gen.left:
                out.append((gen.right, (elem * gen.exponent) % n if n else elem))
            elif idx == gen.right:
                out.append((gen.left, (elem * back) % n if n else elem))
            else:
                out.append((idx, elem))
    return word_reduce(decl, out)


def gen_inverse(decl: CentralAmalgamDecl, gen):
    validate_gen(decl, gen)
    if isinstance(gen, Type1):
        d = gen.descriptor
        if isinstance(d, ExponentMap):
            n = decl.factor(gen.factor).kind.order
            return Type1(gen.factor, ExponentMap(pow(d.exponent, -1, n)))
        if isinstance(d, ConjugateBy):
            return Type1(gen.factor, ConjugateBy(d.mat.inverse()))
        return Type1(gen.factor, LinearTwist(d.spec.inverted()))
    if isinstance(gen, PartialConj):
        src = decl.factor(gen.source).kind
        return PartialConj(gen.source, gen.target, src.inv(gen.conjugator))
    return gen


@dataclass(frozen=True)
class ComposedAuto:
    """Composite of generator automorphisms, applied left to right."""

    decl: CentralAmalgamDecl
    gens: tuple = ()

    def apply(self, w: FreeWord) -> FreeWord:
        for g in self.gens:
            w = apply_gen(self.decl, g, w)
        return w

    def __call__(self, w: FreeWord) -> FreeWord:
        return self.apply(w)

    def inverse(self) -> "ComposedAuto":
        return ComposedAuto(self.decl, tuple(gen_inverse(self.decl, g)
                                             for g in reversed(self.gens)))


def compose_autos(decl: CentralAmalgamDecl, gens) -> ComposedAuto:
    gens = tuple(gens)
    for g in gens:
        validate_gen(decl, g)
    return ComposedAuto(decl, gens)


def inner_auto(decl: CentralAmalgamDecl, factor_index: int, h) -> ComposedAuto:
    """Global conjugation by a factor element, assembled from generators:
    partial conjugations into every other factor plus (for a nonabelian
    factor) the inner automorphism of the element's own factor."""
    kind = decl.factor(factor_index).kind
    if not kind.is_member(h):
        raise ValueError("conjugating element lies outside the chosen factor")
    gens = [PartialConj(factor_index, j, h)
            for j in range(len(decl.factors)) if j != factor_index]
    if isinstance(kind, MatrixBacked):
        gens.append(Type1(factor_index, ConjugateBy(h)))
    return compose_autos(decl, gens)


# ---------------------------------------------------------------------------
# cyclic-spike generators and the wreath closure


def spike_power(decl: CentralAmalgamDecl, i: int, exponent: int, q: int) -> Type1:
    """Power generator of an order q^2-1 cyclic factor; the exponent must be
    an admissible unit class (invertible mod q^2-1 and trivial mod q-1)."""
    n = q * q - 1
    kind = decl.factor(i).kind
    if not (isinstance(kind, FiniteCyclic) and kind.order == n):
        raise ValueError(f"factor {i} is not cyclic of order q^2-1 = {n}")
    if exponent % n not in aut_rel_enumerate(q):
        raise ValueError(f"exponent {exponent} is not an admissible unit class mod {n}")
    return Type1(i, ExponentMap(exponent % n))


def spike_swap(decl: CentralAmalgamDecl, i: int, j: int, exponent: int, q: int) -> Swap:
    """Swap of two order q^2-1 cyclic factors through an admissible exponent."""
    n = q * q - 1
    for k in (i, j):
        kind = decl.factor(k).kind
        if not (isinstance(kind, FiniteCyclic) and kind.order == n):
            raise ValueError(f"factor {k} is not cyclic of order q^2-1 = {n}")
    if exponent % n not in aut_rel_enumerate(q):
        raise ValueError(f"exponent {exponent} is not an admissible unit class mod {n}")
    return Swap(i, j, exponent % n)


@dataclass(frozen=True)
class WreathReport:
    """Closure data for the group generated by all spike generators on r
    order q^2-1 factors: it should be the wreath product of the admissible
    unit-class group by the symmetric group on the factors."""

    r: int
    q: int
    exponent_classes: tuple
    order: int
    expected_order: int
    permutations_full: bool
    ok: bool


def cs_wreath_check(r: int, q: int) -> WreathReport:
    """Generate all power and swap spike generators on r factors and close
    them as decorated permutations (factor permutation plus one exponent per
    source factor); check the order is r! * |classes|^r and that the
    permutation projection is all of the symmetric group."""
    if not 1 <= r <= 4:
        raise ValueError("spike count r must be between 1 and 4")
    if q not in (2, 3, 4, 5):
        raise ValueError("q must be one of 2, 3, 4, 5")
    n = q * q - 1
    classes = tuple(aut_rel_enumerate(q))
    ident_perm = tuple(range(r))
    gens = []
    for a in classes:
        for i in range(r):
            exps = [1] * r
            exps[i] = a
            gens.append((ident_perm, tuple(exps)))
        back = pow(a, -1, n)
        for i in range(r):
            for j in range(i + 1, r):
                perm = list(ident_perm)
                perm[i], perm[j] = j, i
                exps = [1] * r
                exps[i], exps[j] = a, back
                gens.append((tuple(perm), tuple(exps)))

    def mul(g, f):
        # g after f: source i goes to f's target with f's exponent, then on
        pg, eg = g
        pf, ef = f
        return (tuple(pg[pf[i]] for i in range(r)),
                tuple(eg[pf[i]] * ef[i] % n for i in range(r)))

    identity = (ident_perm, (1,) * r)
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    expected = math.factorial(r) * len(classes) ** r
    full = len({p for p, _ in seen}) == math.factorial(r)
    return WreathReport(r, q, classes, len(seen), expected, full,
                        len(seen) == expected and full)


# ---------------------------------------------------------------------------
# infinite dihedral demonstration

DIHEDRAL_A = (-1, 0)
DIHEDRAL_B = (-1, 1)


def isom_mul(x, y):
    """Compose integer isometries (sign, offset): k maps to sign*k + offset."""
    return (x[0] * y[0], x[0] * y[1] + x[1])


def isom_inv(x):
    return (x[0], -x[0] * x[1])


def dihedral_decl() -> CentralAmalgamDecl:
    """Free product of two order-2 cyclic factors (infinite dihedral)."""
    return CentralAmalgamDecl((FactorDecl(0, FiniteCyclic(2)),
                               FactorDecl(1, FiniteCyclic(2))))


def dihedral_isom(w: FreeWord):
    """Faithful integer-isometry image: factor 0 reflects at 0, factor 1 at 1/2."""
    acc = (1, 0)
    for idx, _elem in w.letters:
        acc = isom_mul(acc, DIHEDRAL_A if idx == 0 else DIHEDRAL_B)
    return acc


class _DihedralSubgroup:
    """Normal form for a subgroup of the integer-isometry group given by
    generators: a translation step plus an optional reflection residue."""

    def __init__(self, gens):
        trans = [o for s, o in gens if s == 1 and o != 0]
        refl = [o for s, o in gens if s == -1]
        self.refl_residue = refl[0] if refl else None
        diffs = list(trans)
        if refl:
            diffs.extend(o - refl[0] for o in refl[1:])
        step = 0
        for d in diffs:
            step = math.gcd(step, d)
        self.step = step

    def contains(self, g) -> bool:
        s, o = g
        if s == 1:
            return o % self.step == 0 if self.step else o == 0
        if self.refl_residue is None:
            return False
        delta = o - self.refl_residue
        return delta % self.step == 0 if self.step else delta == 0

    def coset_key(self, g):
        s, o = g

        def norm(v):
            return v % self.step if self.step else v

        cands = [(s, norm(o))]
        if self.refl_residue is not None:
            cands.append((-s, norm(self.refl_residue - o)))
        return min(cands)


def dihedral_coset_index(gen_isoms, cap: int = 10000) -> int:
    """Index of the subgroup generated by the given isometries, by coset
    search; raises if no finite index is detected below the node cap."""
    sub = _DihedralSubgroup(list(gen_isoms))
    start = (1, 0)
    seen = {sub.coset_key(start)}
    frontier = [start]
    while frontier:
        fresh = []
        for g in frontier:
            for step in (DIHEDRAL_A, DIHEDRAL_B):
                h = isom_mul(g, step)
                key = sub.coset_key(h)
                if key not in seen:
                    seen.add(key)
                    fresh.append(h)
                    if len(seen) > cap:
                        raise RuntimeError("no finite index found below the node cap")
        frontier = fresh
    return len(seen)


def apply_substitution(decl: CentralAmalgamDecl, images: dict, w: FreeWord) -> FreeWord:
    """Extend generator images (one word per cyclic factor) to a word map."""
    acc = FreeWord()
    for idx, elem in w.letters:
        kind = decl.factor(idx).kind
        if not isinstance(kind, FiniteCyclic):
            raise ValueError("substitutions are defined for cyclic factors only")
        acc = word_mul(decl, acc, word_pow(decl, images[idx], elem))
    return acc


def _alternating_words(max_len: int):
    words = [FreeWord()]
    for start in (0, 1):
        for length in range(1, max_len + 1):
            words.append(FreeWord(tuple(((start + k) % 2, 1) for k in range(length))))
    return words


@dataclass(frozen=True)
class DihedralReport:
    """Indices from the infinite dihedral demonstration: conjugating one
    order-2 factor by the translation gives a proper isomorphic copy."""

    index: int
    injective_up_to: int
    inner_index: int
    single_factor_index: int


def dihedral_cohopf_demo(max_len: int = 12, cap: int = 10000) -> DihedralReport:
    """Map one reflection generator to its conjugate by the basic translation
    and keep the other fixed; the image is a proper subgroup of finite index
    even though the map is injective.  Conjugating both generators (an inner
    automorphism) or conjugating by the other reflection stays surjective."""
    decl = dihedral_decl()
    a = FreeWord(((0, 1),))
    b = FreeWord(((1, 1),))
    ab = word_mul(decl, a, b)
    conj_a = word_mul(decl, word_mul(decl, ab, a), word_inv(decl, ab))
    images = {0: conj_a, 1: b}

    words = _alternating_words(max_len)
    image_words = [apply_substitution(decl, images, w) for w in words]
    if len({w.letters for w in image_words}) != len(words):
        raise AssertionError("substitution images collide at small word length")

    index = dihedral_coset_index([dihedral_isom(conj_a), dihedral_isom(b)], cap)

    conj_b = word_mul(decl, word_mul(decl, ab, b), word_inv(decl, ab))
    inner_index = dihedral_coset_index(
        [dihedral_isom(conj_a), dihedral_isom(conj_b)], cap)

    bab = word_mul(decl, word_mul(decl, b, a), b)
    single = dihedral_coset_index([dihedral_isom(bab), dihedral_isom(b)], cap)

    return DihedralReport(index, max_len, inner_index, single)


# ---------------------------------------------------------------------------
# the two elliptic example declarations over F_2


def build_ex1cusp() -> CentralAmalgamDecl:
    """Splitting for the one-cusp elliptic coordinate ring over F_2 (the
    curve y^2 + y = x^3 + x + 1): a matrix-backed amalgam factor isomorphic
    to the full 2x2 group over F_2[t] plus two order-3 spike factors."""
    ring = poly_ring(field_make(2))
    factors = (FactorDecl(0, MatrixBacked(ring)),
               FactorDecl(1, FiniteCyclic(3)),
               FactorDecl(2, FiniteCyclic(3)))
    return CentralAmalgamDecl(factors, cusps=(("inf", 0),))


def build_ex3cusps() -> CentralAmalgamDecl:
    """Splitting for the three-cusp elliptic coordinate ring over F_2 (the
    curve y^2 + y = x^3): a matrix-backed amalgam factor carrying the cusp at
    infinity, one order-3 spike factor, and two countably based F_2-vector
    factors carrying the stabilizers of the affine cusps."""
    ring = poly_ring(field_make(2))
    base = field_make(2)
    factors = (FactorDecl(0, MatrixBacked(ring)),
               FactorDecl(1, FiniteCyclic(3)),
               FactorDecl(2, VectorFactor(base)),
               FactorDecl(3, VectorFactor(base)))
    return CentralAmalgamDecl(factors, cusps=(("inf", 0), ("(0,0)", 2), ("(0,1)", 3)))


@dataclass(frozen=True)
class OrbitReport:
    """Partition of the declared cusps under the generator automorphisms."""

    orbits: tuple


def aut_cusp_orbit_report(decl: CentralAmalgamDecl) -> OrbitReport:
    """Partition the cusps by the isomorphism class of the factor carrying
    each cusp stabilizer: swaps realize any exchange between isomorphic
    factors, while no generator moves a cusp between non-isomorphic factor
    classes."""
    if not decl.cusps:
        raise ValueError("declaration has no cusp assignments")
    groups: dict = {}
    order = []
    for label, idx in decl.cusps:
        key = decl.factor(idx).kind.iso_key()
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(label)
    return OrbitReport(tuple(tuple(groups[k]) for k in order))


# ---------------------------------------------------------------------------
# JSON generator records for scripts


def gen_to_json(decl: CentralAmalgamDecl, gen) -> dict:
    validate_gen(decl, gen)
    if isinstance(gen, Type1):
        d = gen.descriptor
        if isinstance(d, ExponentMap):
            return {"type": "type1", "factor": gen.factor, "exponent": d.exponent}
        if isinstance(d, ConjugateBy):
            return {"type": "type1", "factor": gen.factor, "conjugate_by": d.mat.text()}
        return {"type": "type1", "factor": gen.factor, "linear": d.spec.to_json()}
    if isinstance(gen, PartialConj):
        kind = decl.factor(gen.source).kind
        return {"type": "partial_conj", "source": gen.source, "target": gen.target,
                "conjugator": kind.elem_text(gen.conjugator)}
    return {"type": "swap", "left": gen.left, "right": gen.right,
            "exponent": gen.exponent}


def gen_from_json(decl: CentralAmalgamDecl, record: dict):
    if not isinstance(record, dict) or "type" not in record:
        raise ValueError("generator record needs a 'type' field")
    name = record["type"]
    try:
        if name == "type1":
            i = int(record["factor"])
            kind = decl.factor(i).kind
            if "exponent" in record:
                gen = Type1(i, ExponentMap(int(record["exponent"])))
            elif "conjugate_by" in record:
                if not isinstance(kind, MatrixBacked):
                    raise ValueError("conjugate_by needs a matrix-backed factor")
                gen = Type1(i, ConjugateBy(kind.parse_elem(record["conjugate_by"])))
            elif "linear" in record:
                if isinstance(kind, MatrixBacked):
                    ring = kind.ring
                elif isinstance(kind, VectorFactor):
                    ring = poly_ring(kind.field)
                else:
                    raise ValueError("linear twists need a matrix or vector factor")
                gen = Type1(i, LinearTwist(LinearAutoSpec.from_json(ring, record["linear"])))
            else:
                raise ValueError("type1 record needs exponent, conjugate_by, or linear")
        elif name == "partial_conj":
            i = int(record["source"])
            gen = PartialConj(i, int(record["target"]),
                              decl.factor(i).kind.parse_elem(record["conjugator"]))
        elif name == "swap":
            gen = Swap(int(record["left"]), int(record["right"]),
                       int(record.get("exponent", 1)))
        elif name == "spike":
            gen = spike_power(decl, int(record["factor"]), int(record["exponent"]),
                              int(record["q"]))
        elif name == "spike_swap":
            gen = spike_swap(decl, int(record["left"]), int(record["right"]),
                             int(record["exponent"]), int(record["q"]))
        else:
            raise ValueError(f"unknown generator type {name!r}")
    except KeyError as missing:
        raise ValueError(f"generator record is missing field {missing}")
    validate_gen(decl, gen)
    return gen


def gens_from_json(decl: CentralAmalgamDecl, records) -> ComposedAuto:
    if not isinstance(records, list):
        raise ValueError("a generator script is a JSON array of records")
    return compose_autos(decl, [gen_from_json(decl, r) for r in records])


def decl_by_name(name: str) -> CentralAmalgamDecl:
    builders = {"ex1cusp": build_ex1cusp, "ex3cusps": build_ex3cusps,
                "dihedral": dihedral_decl}
    if name not in builders:
        raise ValueError(f"unknown declaration {name!r} (choose from {sorted(builders)})")
    return builders[name]()
