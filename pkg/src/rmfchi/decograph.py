"""Decorated bipartite graphs encoding degenerate real functions.

A point of the compactified component boundary is a function on a nodal
curve; its combinatorics is a connected bipartite multigraph.  White and
black vertexes are the surface pieces on the two sides of the real
contour, edges are the contours themselves, an edge weight is the sheet
number over that contour, a vertex weight is the genus of the piece, and
degree-one root vertexes mark the pieces containing the distinguished
poles.  For non-separating types the graph additionally carries a
color-swapping symmetry gamma, recorded as a vertex permutation.

The checkers validate a graph against a topological type clause by
clause, and :func:`canonical_key` gives a complete isomorphism invariant
used for deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .topotype import TopType, Variant, require_exists


class Color(str, Enum):
    WHITE = "w"
    BLACK = "b"


class ZeroIndexError(ValueError):
    """The graph model is undefined for types with a zero index."""


@dataclass(frozen=True)
class Vertex:
    """A surface piece: its side of the contour, genus, and root flag."""

    color: Color
    weight: int = 0
    root: bool = False

    def __post_init__(self):
        if not isinstance(self.color, Color):
            raise ValueError("color must be a Color")
        if not isinstance(self.weight, int) or self.weight < 0:
            raise ValueError("vertex weight must be an integer >= 0")


@dataclass(frozen=True)
class Edge:
    """A real contour between pieces u and v covered with `weight` sheets."""

    u: int
    v: int
    weight: int

    def __post_init__(self):
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError("edge weight must be an integer >= 1")


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str


@dataclass(frozen=True)
class ViolationList:
    items: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.items

    @property
    def clauses(self) -> tuple[str, ...]:
        return tuple(v.clause for v in self.items)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DecoratedGraph:
    """Vertexes are identified with their positions in ``vertices``.

    ``gamma`` is either None or a vertex permutation given as a tuple
    with gamma[v] the image of v.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    gamma: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.vertices)
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise ValueError(f"edge {e} has an endpoint out of range")
            if self.vertices[e.u].color is self.vertices[e.v].color:
                raise ValueError(f"edge {e} joins two same-colored vertexes")
        if self.gamma is not None:
            if sorted(self.gamma) != list(range(n)):
                raise ValueError("gamma must be a permutation of the vertexes")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in (e.u, e.v))

    def degrees(self) -> list[int]:
        out = [0] * len(self.vertices)
        for e in self.edges:
            out[e.u] += 1
            out[e.v] += 1
        return out

    def cells(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map (u, v) with u < v to the sorted weights of parallel edges."""
        grouped: dict[tuple[int, int], list[int]] = {}
        for e in self.edges:
            pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
            grouped.setdefault(pair, []).append(e.weight)
        return {pair: tuple(sorted(ws)) for pair, ws in grouped.items()}

    def ids_of(self, color: Color) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.color is color]

    def root_ids(self, color: Color) -> list[int]:
        return [i for i, v in enumerate(self.vertices)
                if v.color is color and v.root]

    def is_connected(self) -> bool:
        n = len(self.vertices)
        if n == 0:
            return False
        seen = {0}
        frontier = [0]
        adj: dict[int, set[int]] = {i: set() for i in range(n)}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        while frontier:
            v = frontier.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == n

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"id": i, "color": v.color.value, "weight": v.weight,
                 "root": v.root}
                for i, v in enumerate(self.vertices)
            ],
            "edges": [
                {"id": j, "u": e.u, "v": e.v, "weight": e.weight}
                for j, e in enumerate(self.edges)
            ],
            "gamma": list(self.gamma) if self.gamma is not None else None,
        }

    @staticmethod
    def from_json_dict(data: dict) -> DecoratedGraph:
        vertices = []
        for i, item in enumerate(data["vertices"]):
            if item["id"] != i:
                raise ValueError("vertex ids must be 0..n-1 in order")
            vertices.append(Vertex(Color(item["color"]), item["weight"],
                                   bool(item["root"])))
        edges = [Edge(item["u"], item["v"], item["weight"])
                 for item in data["edges"]]
        gamma = data.get("gamma")
        return DecoratedGraph(tuple(vertices), tuple(edges),
                              tuple(gamma) if gamma is not None else None)

    def to_dot(self, name: str = "g") -> str:
        lines = [f"graph {name} {{"]
        if self.gamma is not None:
            lines.append(f"  // gamma = {list(self.gamma)}")
        for i, v in enumerate(self.vertices):
            shape = "doublecircle" if v.root else "circle"
            style = ("style=filled,fillcolor=black,fontcolor=white"
                     if v.color is Color.BLACK else "style=solid")
            lines.append(
                f'  v{i} [label="{v.weight}" shape={shape} {style}];'
            )
        for e in self.edges:
            lines.append(f'  v{e.u} -- v{e.v} [label="{e.weight}"];')
        lines.append("}")
        return "\n".join(lines)


def strip_gamma(g: DecoratedGraph) -> DecoratedGraph:
    return replace(g, gamma=None) if g.gamma is not None else g


def relabel(g: DecoratedGraph, perm) -> DecoratedGraph:
    """Apply a vertex relabeling, perm[old] = new."""
    n = len(g.vertices)
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the vertexes")
    vertices = [None] * n
    for old, vert in enumerate(g.vertices):
        vertices[perm[old]] = vert
    edges = tuple(Edge(perm[e.u], perm[e.v], e.weight) for e in g.edges)
    gamma = None
    if g.gamma is not None:
        gamma = [0] * n
        for old in range(n):
            gamma[perm[old]] = perm[g.gamma[old]]
        gamma = tuple(gamma)
    return DecoratedGraph(tuple(vertices), edges, gamma)


# ---------------------------------------------------------------------------
# gamma: color-swapping symmetries


def _parity_ok(weights: tuple[int, ...], involution: bool) -> bool:
    # Edges of a self-paired parallel class can avoid being fixed by the
    # symmetry only in pairs, so each odd weight must occur evenly (for
    # an involution) or at least not exactly once (general symmetry).
    counts: dict[int, int] = {}
    for w in weights:
        if w % 2 == 1:
            counts[w] = counts.get(w, 0) + 1
    if involution:
        return all(c % 2 == 0 for c in counts.values())
    return all(c != 1 for c in counts.values())


def gamma_violations(g: DecoratedGraph, gamma: tuple[int, ...],
                     involution: bool = True) -> list[Violation]:
    """Clause-by-clause test that gamma is an admissible symmetry."""
    n = len(g.vertices)
    out = []
    if sorted(gamma) != list(range(n)):
        return [Violation("gamma-permutation",
                          "gamma is not a permutation of the vertexes")]
    if involution:
        bad = [v for v in range(n) if gamma[gamma[v]] != v]
        if bad:
            out.append(Violation("gamma-involution",
                                 f"gamma^2 moves vertexes {bad}"))
    bad = [v for v in range(n)
           if g.vertices[v].color is g.vertices[gamma[v]].color]
    if bad:
        out.append(Violation("gamma-color-swap",
                             f"gamma preserves the color of {bad}"))
    bad = [v for v in range(n)
           if (g.vertices[v].weight, g.vertices[v].root)
           != (g.vertices[gamma[v]].weight, g.vertices[gamma[v]].root)]
    if bad:
        out.append(Violation("gamma-vertex-data",
                             f"gamma changes weight or root flag of {bad}"))
    cells = g.cells()
    for (u, v), weights in sorted(cells.items()):
        iu, iv = gamma[u], gamma[v]
        image = (iu, iv) if iu < iv else (iv, iu)
        if cells.get(image, ()) != weights:
            out.append(Violation(
                "gamma-edge-weights",
                f"edge weights between {u},{v} and their images differ"))
        elif image == (u, v) and gamma[u] != u:
            # Pair swapped onto itself: the induced edge map lives inside
            # this parallel class, so odd weights must pair up.
            if not _parity_ok(weights, involution):
                out.append(Violation(
                    "gamma-parity",
                    f"odd edge weights between {u},{v} cannot avoid "
                    "a fixed edge"))
    return out


def find_gammas(g: DecoratedGraph,
                involution: bool = True) -> list[tuple[int, ...]]:
    """All admissible color-swapping symmetries, sorted.

    With ``involution`` (the default) only order-two symmetries built
    from one side-swapping bijection are returned; otherwise the two
    directions are chosen independently.
    """
    whites = g.ids_of(Color.WHITE)
    blacks = g.ids_of(Color.BLACK)
    if len(whites) != len(blacks):
        return []
    cells = g.cells()
    degs = g.degrees()

    def pair_weights(a: int, b: int) -> tuple[int, ...]:
        return cells.get((a, b) if a < b else (b, a), ())

    def attrs(v: int):
        vert = g.vertices[v]
        incident = sorted(w for pair, ws in cells.items() if v in pair
                          for w in ws)
        return (vert.weight, vert.root, degs[v], tuple(incident))

    cand = {w: [b for b in blacks if attrs(b) == attrs(w)] for w in whites}
    results = []

    if involution:
        sigma: dict[int, int] = {}
        used: set[int] = set()

        def rec(i: int):
            if i == len(whites):
                perm = list(range(len(g.vertices)))
                for w, b in sigma.items():
                    perm[w], perm[b] = b, w
                results.append(tuple(perm))
                return
            w = whites[i]
            for b in cand[w]:
                if b in used:
                    continue
                ok = all(pair_weights(w, b2) == pair_weights(w2, b)
                         for w2, b2 in sigma.items())
                if ok and not _parity_ok(pair_weights(w, b), True):
                    ok = False
                if ok:
                    sigma[w] = b
                    used.add(b)
                    rec(i + 1)
                    del sigma[w]
                    used.discard(b)

        rec(0)
    else:
        cand_tau = {b: [w for w in whites if attrs(w) == attrs(b)]
                    for b in blacks}
        sigma: dict[int, int] = {}
        used_b: set[int] = set()

        def rec_tau(j: int, tau: dict[int, int], used_w: set[int]):
            if j == len(blacks):
                perm = list(range(len(g.vertices)))
                for w in whites:
                    perm[w] = sigma[w]
                for b in blacks:
                    perm[b] = tau[b]
                results.append(tuple(perm))
                return
            b = blacks[j]
            for w2 in cand_tau[b]:
                if w2 in used_w:
                    continue
                ok = True
                for w in whites:
                    if pair_weights(w, b) != pair_weights(w2, sigma[w]):
                        ok = False
                        break
                    if sigma[w] == b and w2 == w:
                        if not _parity_ok(pair_weights(w, b), False):
                            ok = False
                            break
                if ok:
                    tau[b] = w2
                    rec_tau(j + 1, tau, used_w | {w2})
                    del tau[b]

        def rec_sigma(i: int):
            if i == len(whites):
                rec_tau(0, {}, set())
                return
            w = whites[i]
            for b in cand[w]:
                if b in used_b:
                    continue
                sigma[w] = b
                used_b.add(b)
                rec_sigma(i + 1)
                del sigma[w]
                used_b.discard(b)

        rec_sigma(0)

    assert all(not gamma_violations(g, perm, involution) for perm in results)
    return sorted(results)


# ---------------------------------------------------------------------------
# checkers


def _common_root_violations(g: DecoratedGraph, degs: list[int]
                            ) -> list[Violation]:
    out = []
    bad = [v for v in range(len(g.vertices))
           if g.vertices[v].root and degs[v] != 1]
    if bad:
        out.append(Violation("root-degree-one",
                             f"root vertexes {bad} do not have degree 1"))
    bad = [v for v in range(len(g.vertices))
           if g.vertices[v].root and g.vertices[v].weight != 0]
    if bad:
        out.append(Violation("root-zero-weight",
                             f"root vertexes {bad} carry nonzero genus"))
    return out


def _root_edge_weight(g: DecoratedGraph, v: int) -> int:
    for e in g.edges:
        if v in (e.u, e.v):
            return e.weight
    raise AssertionError("degree-1 vertex with no edge")


_EXISTING_CACHE: set[TopType] = set()


def _require_exists_cached(t: TopType):
    # The checkers run once per enumeration candidate; skip re-deriving
    # the existence report for a type already seen.
    if t not in _EXISTING_CACHE:
        require_exists(t)
        _EXISTING_CACHE.add(t)


def check_nonsep(g: DecoratedGraph, t: TopType,
                 involution: bool = True) -> ViolationList:
    """Validate a graph against a non-separating type, clause by clause.

    Requires an existing type with every index at least 1 (the graph
    model says nothing about zero indices).
    """
    if t.variant is not Variant.NONSEP:
        raise ValueError("check_nonsep needs a non-separating type")
    _require_exists_cached(t)
    if any(i == 0 for i in t.indices):
        raise ZeroIndexError(f"graph model undefined for {t.indices}")

    degs = g.degrees()
    out = []
    if not g.is_connected():
        out.append(Violation("connected", "the graph is not connected"))
    whites = g.ids_of(Color.WHITE)
    blacks = g.ids_of(Color.BLACK)
    if len(whites) != len(blacks):
        out.append(Violation(
            "color-balance",
            f"{len(whites)} white vs {len(blacks)} black vertexes"))
    out.extend(_common_root_violations(g, degs))

    want = tuple(sorted(t.indices))
    for color, clause in ((Color.WHITE, "white"), (Color.BLACK, "black")):
        roots = g.root_ids(color)
        if len(roots) != t.k:
            out.append(Violation(
                f"root-count-{clause}",
                f"expected {t.k} {clause} roots, found {len(roots)}"))
        elif all(degs[v] == 1 for v in roots):
            got = tuple(sorted(_root_edge_weight(g, v) for v in roots))
            if got != want:
                out.append(Violation(
                    f"root-weights-{clause}",
                    f"root edge weights {got} != indices {want}"))

    total_vw = sum(v.weight for v in g.vertices)
    genus = t.k + len(g.edges) - len(g.vertices) + 1 + total_vw
    if genus != t.g:
        out.append(Violation("genus-equation",
                             f"k + #E - #V + 1 + sum(zeta_V) = {genus} != g"))
    sheets = sum(e.weight for e in g.edges) - sum(t.indices)
    if sheets != t.n:
        out.append(Violation("degree-equation",
                             f"sum(zeta_E) - sum(i) = {sheets} != n"))

    if g.gamma is None:
        out.append(Violation("gamma-missing",
                             "non-separating graphs need a symmetry gamma"))
    else:
        out.extend(gamma_violations(g, g.gamma, involution))
    return ViolationList(tuple(out))


def check_sep(g: DecoratedGraph, t: TopType) -> ViolationList:
    """Validate a graph against a separating type, clause by clause.

    Requires an existing type with every degree nonzero.  Root degrees
    are signed: a white root represents -zeta_E of its edge, a black
    root +zeta_E.
    """
    if t.variant is not Variant.SEP:
        raise ValueError("check_sep needs a separating type")
    _require_exists_cached(t)
    if any(i == 0 for i in t.indices):
        raise ZeroIndexError(f"graph model undefined for {t.indices}")

    degs = g.degrees()
    out = []
    if not g.is_connected():
        out.append(Violation("connected", "the graph is not connected"))
    out.extend(_common_root_violations(g, degs))

    n_neg = sum(1 for i in t.indices if i < 0)
    n_pos = sum(1 for i in t.indices if i > 0)
    white_roots = g.root_ids(Color.WHITE)
    black_roots = g.root_ids(Color.BLACK)
    if len(white_roots) != n_neg:
        out.append(Violation(
            "root-count-white",
            f"expected {n_neg} white roots, found {len(white_roots)}"))
    if len(black_roots) != n_pos:
        out.append(Violation(
            "root-count-black",
            f"expected {n_pos} black roots, found {len(black_roots)}"))
    counts_ok = len(white_roots) == n_neg and len(black_roots) == n_pos
    if counts_ok and all(degs[v] == 1
                         for v in white_roots + black_roots):
        got = sorted([-_root_edge_weight(g, v) for v in white_roots]
                     + [_root_edge_weight(g, v) for v in black_roots])
        if tuple(got) != tuple(sorted(t.indices)):
            out.append(Violation(
                "root-weights-signed",
                f"signed root weights {got} != degrees "
                f"{sorted(t.indices)}"))

    total_vw = sum(v.weight for v in g.vertices)
    genus = (t.k - 1) + 2 * (len(g.edges) - len(g.vertices) + 1
                             + total_vw)
    if genus != t.g:
        out.append(Violation(
            "genus-equation",
            f"(k-1) + 2(#E - #V + 1 + sum(zeta_V)) = {genus} != g"))
    sheets = 2 * sum(e.weight for e in g.edges) - sum(abs(i)
                                                      for i in t.indices)
    if sheets != t.n:
        out.append(Violation("degree-equation",
                             f"2 sum(zeta_E) - sum|i| = {sheets} != n"))

    if g.gamma is not None:
        out.append(Violation("gamma-forbidden",
                             "separating graphs carry no symmetry"))
    return ViolationList(tuple(out))


# ---------------------------------------------------------------------------
# canonical form


def _refined_classes(g: DecoratedGraph):
    """Partition vertexes into ordered classes by iterated refinement.

    The class order is derived from structural keys only, so it is
    identical for isomorphic graphs.  Returns (classes, class_keys)
    where class_keys[i] is the shared attribute key of classes[i].
    """
    n = len(g.vertices)
    cells = g.cells()
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), weights in cells.items():
        for w in weights:
            incident[u].append((v, w))
            incident[v].append((u, w))

    def initial(v: int):
        vert = g.vertices[v]
        ws = tuple(sorted(w for _, w in incident[v]))
        return (vert.color.value, int(vert.root), vert.weight,
                len(incident[v]), ws)

    init = [initial(v) for v in range(n)]
    order = sorted(set(init))
    rank = [order.index(key) for key in init]
    while True:
        keys = [(rank[v], tuple(sorted((w, rank[u])
                                       for u, w in incident[v])))
                for v in range(n)]
        distinct = sorted(set(keys))
        if len(distinct) == len(set(rank)):
            break
        rank = [distinct.index(key) for key in keys]

    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(rank[v], []).append(v)
    ordered = [sorted(classes[r]) for r in sorted(classes)]
    keys = [init[cls[0]] for cls in ordered]
    return ordered, keys


def canonical_key(g: DecoratedGraph) -> bytes:
    """Complete isomorphism invariant of a decorated graph.

    Equal keys exactly characterize isomorphism: a color-, weight-,
    root- and gamma-preserving relabeling (gamma conjugates).  The key
    is the minimal serialized encoding over all admissible vertex
    orders, with gamma folded in as a tie-break after the adjacency.
    """
    classes, class_keys = _refined_classes(g)
    header = tuple((key, len(cls)) for key, cls in zip(class_keys, classes))
    cells = g.cells()

    def pair_weights(a: int, b: int) -> tuple[int, ...]:
        return cells.get((a, b) if a < b else (b, a), ())

    slots = [list(cls) for cls in classes]
    order: list[int] = []
    rows: list[tuple] = []
    best: list[tuple] | None = None
    best_orders: list[tuple[int, ...]] = []

    def rec(ci: int):
        nonlocal best, best_orders
        if ci == len(slots) or not slots[ci]:
            if ci == len(slots):
                if best is None or rows < best:
                    best = list(rows)
                    best_orders = [tuple(order)]
                elif rows == best:
                    best_orders.append(tuple(order))
                return
            rec(ci + 1)
            return
        remaining = list(slots[ci])
        for v in remaining:
            row = tuple(pair_weights(v, u) for u in order)
            if best is not None:
                p = len(order)
                prefix = rows + [row]
                if prefix > best[: p + 1]:
                    continue
            slots[ci].remove(v)
            order.append(v)
            rows.append(row)
            rec(ci if slots[ci] else ci + 1)
            rows.pop()
            order.pop()
            slots[ci].append(v)
            slots[ci].sort()

    if not g.vertices:
        return repr((header, (), None)).encode()
    rec(0)

    gamma_part = None
    if g.gamma is not None:
        images = []
        for cand in best_orders:
            pos = {v: i for i, v in enumerate(cand)}
            images.append(tuple(pos[g.gamma[v]] for v in cand))
        gamma_part = min(images)
    return repr((header, tuple(best), gamma_part)).encode()


def are_isomorphic(a: DecoratedGraph, b: DecoratedGraph) -> bool:
    """Isomorphism with matching decorations and conjugate gamma."""
    if (a.gamma is None) != (b.gamma is None):
        return False
    return canonical_key(a) == canonical_key(b)
