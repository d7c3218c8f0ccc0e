"""Shared random generators for the test suite.

Everything takes an explicit random.Random so each test controls its seed
and stays reproducible.
"""

from gl2aut.ffield import field_of_order
from gl2aut.matgroup import Mat2, mat_parse
from gl2aut.polyring import PolyRing, poly_ring
from gl2aut.words import FiniteCyclic, MatrixBacked, VectorFactor, word_reduce
from gl2aut import nagao

_RINGS: dict[int, PolyRing] = {}


def ring_of(q: int) -> PolyRing:
    """Cached polynomial ring over the field with q elements."""
    if q not in _RINGS:
        _RINGS[q] = poly_ring(field_of_order(q))
    return _RINGS[q]


def rand_poly(ring, rng, max_deg, nonzero=False):
    while True:
        coeffs = tuple(rng.randrange(ring.field.q) for _ in range(max_deg + 1))
        p = ring.poly(coeffs)
        if not nonzero or not p.is_zero():
            return p


def rand_unit_code(field, rng) -> int:
    return rng.randrange(1, field.q)


def rand_gl2_const(ring, rng) -> Mat2:
    """Invertible matrix with constant entries over the polynomial ring."""
    q = ring.field.q
    while True:
        m = Mat2(ring, *(ring.const(rng.randrange(q)) for _ in range(4)))
        if not m.det().is_zero():
            return m


def rand_gl2_poly(ring, rng, max_total_deg=8) -> Mat2:
    """Unit-determinant matrix over F_q[t] with entry degrees <= max_total_deg.

    Built as a product of upper unipotents, the flip [[0,1],[1,0]] and
    invertible constants; entry degrees of such a product are bounded by
    the sum of the unipotent degrees, which is kept within the budget.
    """
    flip = mat_parse(ring, "[[0,1],[1,0]]")
    m = rand_gl2_const(ring, rng)
    budget = max_total_deg
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(0, budget)
        budget -= d
        p = rand_poly(ring, rng, d)
        m = m * Mat2(ring, ring.one, p, ring.zero, ring.one)
        if rng.random() < 0.7:
            m = m * flip
    if rng.random() < 0.5:
        m = m * rand_gl2_const(ring, rng)
    assert max(e.deg for e in m.entries()) <= max_total_deg
    return m


def rand_upper_triangular(ring, rng, max_deg=4) -> Mat2:
    """Invertible upper triangular matrix over F_q[t]."""
    a = ring.const(rand_unit_code(ring.field, rng))
    d = ring.const(rand_unit_code(ring.field, rng))
    b = rand_poly(ring, rng, max_deg)
    return Mat2(ring, a, b, ring.zero, d)


def rand_nagao_letters(ring, rng, max_len=6, max_deg=3):
    """Random (not necessarily reduced) letter sequence for the amalgam."""
    letters = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.5:
            letters.append(nagao.letter("G", rand_gl2_const(ring, rng)))
        else:
            letters.append(nagao.letter("B", rand_upper_triangular(ring, rng, max_deg)))
    return letters


def rand_elem(kind, rng, mat_deg=2):
    """Random nonidentity element of a free-factor kind."""
    if isinstance(kind, FiniteCyclic):
        return rng.randrange(1, kind.order)
    if isinstance(kind, MatrixBacked):
        while True:
            m = rand_gl2_poly(kind.ring, rng, mat_deg)
            if not m.is_identity():
                return m
    if isinstance(kind, VectorFactor):
        while True:
            tup = tuple(rng.randrange(kind.field.q)
                        for _ in range(rng.randint(1, 3)))
            while tup and tup[-1] == 0:
                tup = tup[:-1]
            if tup:
                return tup
    raise TypeError(f"no random element for {kind!r}")


def rand_word(decl, rng, max_len=8, mat_deg=2):
    """Random reduced word in the declared free product."""
    letters = []
    for _ in range(rng.randint(0, max_len)):
        i = rng.randrange(len(decl.factors))
        letters.append((i, rand_elem(decl.factors[i].kind, rng, mat_deg)))
    return word_reduce(decl, letters)
