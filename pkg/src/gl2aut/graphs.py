"""Quotient graphs of the tree action, with stabilizer descriptors.

The quotient of the Bruhat-Tits tree by the unit group of an elliptic
coordinate ring is a finite core with one infinite valency-2 ray per cusp.
This module models such graphs with vertices, edges and ray markers (one
marker per cusp recording where the infinite ray was truncated), provides
hardcoded builders for the two F_2 elliptic examples, checks the
core-plus-rays structure, and exports DOT and JSON.

Stabilizers are recorded as abstract descriptors, not matrix groups: the
quotient graph only knows each stabilizer up to conjugacy, so the order and
shape (full matrix group over the constants, cyclic of order q^2-1, vector
group of a given dimension, triangular of a given unipotent dimension, or
trivial) is all the graph can carry.

Dimension convention on the infinity ray of the three-cusp example: the
vertex c(inf,1) carries a one-dimensional stabilizer (a single unipotent
generator) while c(inf,n) for n >= 2 carries the polynomials of degree at
most n, a space of dimension n+1.  The dimension sequence along the ray is
therefore 1, 3, 4, 5, ... with a jump at the start; the builders follow the
itemized stabilizer list for the example literally rather than smoothing
the sequence.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .ffield import prime_power

# ---------------------------------------------------------------------------
# stabilizer descriptors

_STAB_KINDS = ("trivial", "gl2", "cyclic", "unipotent", "btype")


@dataclass(frozen=True)
class StabDescriptor:
    """Conjugacy-class label for a vertex or edge stabilizer.

    kinds: "trivial" (order 1); "gl2" (all invertible constant matrices,
    order (q^2-1)(q^2-q)); "cyclic" (order q^2-1, the unit group of the
    quadratic extension); "unipotent" (vector group of dimension dim over
    F_q, order q^dim); "btype" (triangular with unit diagonal pair and a
    dim-dimensional unipotent part, order (q-1)^2 * q^dim).
    """

    kind: str
    q: int = 0
    dim: int = 0

    def __post_init__(self):
        if self.kind not in _STAB_KINDS:
            raise ValueError(f"unknown stabilizer kind {self.kind!r}")
        if self.kind == "trivial":
            if self.q != 0 or self.dim != 0:
                raise ValueError("the trivial descriptor takes no parameters")
            return
        prime_power(self.q)
        if self.kind in ("unipotent", "btype"):
            if self.dim < 1:
                raise ValueError("dimension must be at least 1")
        elif self.dim != 0:
            raise ValueError(f"{self.kind} takes no dimension")

    def order(self) -> int:
        q = self.q
        if self.kind == "trivial":
            return 1
        if self.kind == "gl2":
            return (q * q - 1) * (q * q - q)
        if self.kind == "cyclic":
            return q * q - 1
        if self.kind == "unipotent":
            return q ** self.dim
        return (q - 1) ** 2 * q ** self.dim

    def text(self) -> str:
        if self.kind == "trivial":
            return "Trivial"
        names = {"gl2": "GL2", "cyclic": "CyclicQsqMinus1",
                 "unipotent": "UnipotentDim", "btype": "BType"}
        if self.kind in ("unipotent", "btype"):
            return f"{names[self.kind]}(q={self.q},n={self.dim})"
        return f"{names[self.kind]}(q={self.q})"


def stab_trivial() -> StabDescriptor:
    return StabDescriptor("trivial")


def stab_gl2(q: int) -> StabDescriptor:
    return StabDescriptor("gl2", q)


def stab_cyclic(q: int) -> StabDescriptor:
    return StabDescriptor("cyclic", q)


def stab_unipotent(q: int, dim: int) -> StabDescriptor:
    return StabDescriptor("unipotent", q, dim)


def stab_btype(q: int, dim: int) -> StabDescriptor:
    return StabDescriptor("btype", q, dim)


_STAB_RE = re.compile(r"^(\w+)(?:\(q=(\d+)(?:,n=(\d+))?\))?$")
_STAB_NAMES = {"Trivial": "trivial", "GL2": "gl2", "CyclicQsqMinus1": "cyclic",
               "UnipotentDim": "unipotent", "BType": "btype"}


def stab_parse(s: str) -> StabDescriptor:
    m = _STAB_RE.match(s.strip())
    if not m or m.group(1) not in _STAB_NAMES:
        raise ValueError(f"bad stabilizer descriptor {s!r}")
    kind = _STAB_NAMES[m.group(1)]
    q = int(m.group(2)) if m.group(2) else 0
    dim = int(m.group(3)) if m.group(3) else 0
    return StabDescriptor(kind, q, dim)


# ---------------------------------------------------------------------------
# graph data model


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str
    stab: StabDescriptor


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    stab: StabDescriptor


@dataclass(frozen=True)
class RayMarker:
    """Truncation record for one infinite cusp ray: its label, how many ray
    vertices were kept, and the vertex where the graph was cut."""

    cusp: str
    depth: int
    at: int


@dataclass(frozen=True)
class QuotientGraph:
    vertices: tuple = ()
    edges: tuple = ()
    rays: tuple = ()

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise ValueError(f"no vertex with id {vid}")

    def adjacency(self) -> dict:
        adj: dict = {v.id: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj

    def degree(self, vid: int) -> int:
        return len(self.adjacency()[vid])


def validate_graph(g: QuotientGraph) -> None:
    """Structural checks: unique ids, real endpoints, edge stabilizer order
    dividing both endpoint orders, connectivity, markers at real vertices."""
    ids = [v.id for v in g.vertices]
    if len(set(ids)) != len(ids):
        raise ValueError("vertex ids are not unique")
    by_id = {v.id: v for v in g.vertices}
    for e in g.edges:
        if e.u not in by_id or e.v not in by_id:
            raise ValueError(f"edge {e} references a missing vertex")
        if e.u == e.v:
            raise ValueError(f"edge {e} is a loop")
        for end in (e.u, e.v):
            if by_id[end].stab.order() % e.stab.order() != 0:
                raise ValueError(
                    f"edge stabilizer {e.stab.text()} does not divide the "
                    f"stabilizer of vertex {end}")
    if g.vertices:
        adj = g.adjacency()
        seen = {ids[0]}
        frontier = [ids[0]]
        while frontier:
            frontier = [nb for cur in frontier for nb in adj[cur]
                        if nb not in seen and not seen.add(nb)]
        if len(seen) != len(ids):
            raise ValueError("graph is not connected")
    cusps = [r.cusp for r in g.rays]
    if len(set(cusps)) != len(cusps):
        raise ValueError("duplicate ray markers")
    for r in g.rays:
        if r.at not in by_id:
            raise ValueError(f"ray marker {r.cusp!r} sits at a missing vertex")
        if r.depth < 1:
            raise ValueError("ray depth must be at least 1")


@dataclass(frozen=True)
class SerreParts:
    """Finite core plus one truncated valency-2 tail per cusp ray."""

    core: tuple
    rays: tuple  # (cusp label, tuple of tail vertex ids from the cut inward)


def validate_serre(g: QuotientGraph) -> SerreParts:
    """Split the graph into a finite core and the truncated cusp rays.

    Each ray tail is the maximal chain walking inward from the marker vertex
    while vertices have valency at most 2; a marker vertex of valency >= 3,
    or two rays sharing a vertex, mean the graph has no valid decomposition.
    """
    validate_graph(g)
    adj = g.adjacency()
    tails = []
    claimed: dict = {}
    for marker in g.rays:
        chain = []
        cur, prev = marker.at, None
        if len(adj[cur]) > 2:
            raise ValueError(f"ray marker {marker.cusp!r} sits on a branch vertex")
        while len(adj[cur]) <= 2:
            chain.append(cur)
            nxt = [nb for nb in adj[cur] if nb != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            if len(adj[cur]) > 2:
                break
        # a flush cut leaves no tail: the marker vertex itself branches the core
        if chain and len(adj[chain[0]]) == 2 and len(chain) == 1:
            chain = []
        for vid in chain:
            if vid in claimed:
                raise ValueError(
                    f"rays {claimed[vid]!r} and {marker.cusp!r} overlap at vertex {vid}")
            claimed[vid] = marker.cusp
        tails.append((marker.cusp, tuple(chain)))
    tail_ids = set(claimed)
    core = tuple(sorted(v.id for v in g.vertices if v.id not in tail_ids))
    return SerreParts(core, tuple(tails))


def isolated_cyclic(g: QuotientGraph) -> tuple:
    """Terminal core vertices whose stabilizer is cyclic of order q^2-1.

    These are the spike vertices: each contributes one conjugacy class of
    maximal-finite cyclic subgroups, so their number matches the elliptic
    point count r of the underlying curve.
    """
    parts = validate_serre(g)
    tail_ids = {vid for _cusp, tail in parts.rays for vid in tail}
    adj = g.adjacency()
    return tuple(v for v in g.vertices
                 if v.id not in tail_ids
                 and len(adj[v.id]) == 1
                 and v.stab.kind == "cyclic")


# ---------------------------------------------------------------------------
# hardcoded builders for the two F_2 elliptic examples


def _ray_chain(add_vertex, add_edge, cusp: str, base_label: str, depth: int,
               dim_of, q: int):
    """Attach c(cusp,1..depth) to the base vertex with nested stabilizers."""
    prev = base_label
    for n in range(1, depth + 1):
        label = f"c({cusp},{n})"
        add_vertex(label, stab_unipotent(q, dim_of(n)))
        if n == 1:
            add_edge(prev, label, stab_trivial())
        else:
            add_edge(prev, label, stab_unipotent(q, dim_of(n - 1)))
        prev = label
    return prev


def build_graph_ex3(depth: int = 3) -> QuotientGraph:
    """Quotient graph for the curve y^2 + y = x^3 over F_2 (three cusps).

    Vertex stabilizers: e(inf) is the full constant matrix group; c(inf,1)
    and v(inf) are one-dimensional unipotent; c(inf,n) for n >= 2 has
    dimension n+1 (polynomials of degree at most n); o and v(0) are trivial;
    v(1) is cyclic of order 3; c((0,0),n) and c((0,1),n) have dimension n.
    Edges touching c(inf,1) carry its one-dimensional stabilizer; edges
    touching o or v(0) are trivial; consecutive ray edges carry the smaller
    endpoint stabilizer.  Each of the three rays is truncated at the given
    depth with a marker.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    q = 2
    vertices, edges, ids = [], [], {}

    def add_vertex(label, stab):
        ids[label] = len(vertices) + 1
        vertices.append(Vertex(ids[label], label, stab))

    def add_edge(a, b, stab):
        edges.append(Edge(ids[a], ids[b], stab))

    u1 = stab_unipotent(q, 1)
    add_vertex("e(inf)", stab_gl2(q))
    add_vertex("c(inf,1)", u1)
    add_edge("e(inf)", "c(inf,1)", u1)
    prev = "c(inf,1)"
    for n in range(2, depth + 1):
        label = f"c(inf,{n})"
        add_vertex(label, stab_unipotent(q, n + 1))
        add_edge(prev, label, u1 if n == 2 else stab_unipotent(q, n))
        prev = label
    add_vertex("v(inf)", u1)
    add_edge("c(inf,1)", "v(inf)", u1)
    add_vertex("o", stab_trivial())
    add_edge("v(inf)", "o", stab_trivial())
    add_vertex("v(1)", stab_cyclic(q))
    add_edge("o", "v(1)", stab_trivial())
    add_vertex("v(0)", stab_trivial())
    add_edge("o", "v(0)", stab_trivial())
    end0 = _ray_chain(add_vertex, add_edge, "(0,0)", "v(0)", depth, lambda n: n, q)
    end1 = _ray_chain(add_vertex, add_edge, "(0,1)", "v(0)", depth, lambda n: n, q)
    rays = (RayMarker("inf", depth, ids[prev]),
            RayMarker("(0,0)", depth, ids[end0]),
            RayMarker("(0,1)", depth, ids[end1]))
    g = QuotientGraph(tuple(vertices), tuple(edges), rays)
    validate_graph(g)
    return g


def build_graph_ex1(depth: int = 3) -> QuotientGraph:
    """Quotient graph for the curve y^2 + y = x^3 + x + 1 over F_2 (one cusp).

    Same shape as the three-cusp graph with both affine cusps removed: v(0)
    becomes a terminal vertex with cyclic stabilizer of order 3, so the
    graph has two spike vertices, v(1) and v(0), and a single ray.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    q = 2
    vertices, edges, ids = [], [], {}

    def add_vertex(label, stab):
        ids[label] = len(vertices) + 1
        vertices.append(Vertex(ids[label], label, stab))

    def add_edge(a, b, stab):
        edges.append(Edge(ids[a], ids[b], stab))

    u1 = stab_unipotent(q, 1)
    add_vertex("e(inf)", stab_gl2(q))
    add_vertex("c(inf,1)", u1)
    add_edge("e(inf)", "c(inf,1)", u1)
    prev = "c(inf,1)"
    for n in range(2, depth + 1):
        label = f"c(inf,{n})"
        add_vertex(label, stab_unipotent(q, n + 1))
        add_edge(prev, label, u1 if n == 2 else stab_unipotent(q, n))
        prev = label
    add_vertex("v(inf)", u1)
    add_edge("c(inf,1)", "v(inf)", u1)
    add_vertex("o", stab_trivial())
    add_edge("v(inf)", "o", stab_trivial())
    add_vertex("v(1)", stab_cyclic(q))
    add_edge("o", "v(1)", stab_trivial())
    add_vertex("v(0)", stab_cyclic(q))
    add_edge("o", "v(0)", stab_trivial())
    rays = (RayMarker("inf", depth, ids[prev]),)
    g = QuotientGraph(tuple(vertices), tuple(edges), rays)
    validate_graph(g)
    return g


def graph_by_name(name: str, depth: int = 3) -> QuotientGraph:
    builders = {"ex1": build_graph_ex1, "ex3": build_graph_ex3}
    if name not in builders:
        raise ValueError(f"unknown graph {name!r} (choose from {sorted(builders)})")
    return builders[name](depth)


# ---------------------------------------------------------------------------
# export and parse


def export_json(g: QuotientGraph) -> str:
    doc = {
        "vertices": [{"id": v.id, "label": v.label, "stab": v.stab.text()}
                     for v in sorted(g.vertices, key=lambda v: v.id)],
        "edges": [{"u": e.u, "v": e.v, "stab": e.stab.text()} for e in g.edges],
        "rays": [{"cusp": r.cusp, "depth": r.depth, "at": r.at} for r in g.rays],
    }
    return json.dumps(doc, indent=2)


def parse_json(text: str) -> QuotientGraph:
    try:
        doc = json.loads(text)
        vertices = tuple(Vertex(int(v["id"]), str(v["label"]), stab_parse(v["stab"]))
                         for v in doc["vertices"])
        edges = tuple(Edge(int(e["u"]), int(e["v"]), stab_parse(e["stab"]))
                      for e in doc["edges"])
        rays = tuple(RayMarker(str(r["cusp"]), int(r["depth"]), int(r["at"]))
                     for r in doc["rays"])
    except (KeyError, TypeError, json.JSONDecodeError) as err:
        raise ValueError(f"bad graph document: {err}")
    g = QuotientGraph(vertices, edges, rays)
    validate_graph(g)
    return g


def export_dot(g: QuotientGraph) -> str:
    lines = ["graph quotient {"]
    for v in sorted(g.vertices, key=lambda v: v.id):
        lines.append(f'  v{v.id} [label="{v.label} | {v.stab.text()}"];')
    for e in g.edges:
        lines.append(f'  v{e.u} -- v{e.v} [label="{e.stab.text()}"];')
    for r in g.rays:
        marker = f"ray_{r.cusp}"
        marker = re.sub(r"[^0-9A-Za-z_]", "_", marker)
        lines.append(f'  {marker} [shape=none, label="... toward {r.cusp}"];')
        lines.append(f"  v{r.at} -- {marker} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
