"""Simple undirected graphs with dense integer ids.

Vertices are ``0..n-1`` and edges ``0..m-1``.  Each edge is stored as a pair
``(u, v)`` with ``u < v``.  Graphs are immutable; every operation that removes
something returns a new graph together with the id maps back to the old one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Invalid graph construction or invalid id."""


class GraphParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class MalformedLineError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class Graph:
    """Immutable simple graph.

    ``edges[i]`` is the edge with id ``i``.  The constructor keeps the order
    it is given; use :meth:`canonical` for the sorted-edge form.
    """

    __slots__ = ("n", "edges", "_index", "_incident", "_adj", "max_degree")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        self.n = n
        norm = []
        index = {}
        incident: list[list[int]] = [[] for _ in range(n)]
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise GraphError(f"parallel edge ({u}, {v})")
            eid = len(norm)
            index[(u, v)] = eid
            norm.append((u, v))
            incident[u].append(eid)
            incident[v].append(eid)
            adj[u].append(v)
            adj[v].append(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._index = index
        self._incident = tuple(tuple(sorted(lst)) for lst in incident)
        self._adj = tuple(tuple(sorted(lst)) for lst in adj)
        self.max_degree = max((len(a) for a in self._adj), default=0)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids incident with ``v`` (delta(v) in the LP constraints)."""
        return self._incident[v]

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def check_edge(self, e: int) -> None:
        if not (isinstance(e, int) and 0 <= e < len(self.edges)):
            raise GraphError(f"invalid edge id {e!r}")

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    def closed_neighborhood(self, vertices: Iterable[int]) -> set[int]:
        out = set()
        for v in vertices:
            out.add(v)
            out.update(self._adj[v])
        return out

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by lowest id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def canonical(self) -> "Graph":
        return Graph(self.n, sorted(self.edges))

    def is_canonical(self) -> bool:
        return list(self.edges) == sorted(self.edges)


class Reduction(NamedTuple):
    """A graph derived from a parent, with maps from new ids to parent ids."""

    graph: Graph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


@dataclass(frozen=True)
class InducedMatching:
    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def certify(cls, g: Graph, edges: Iterable[int]) -> "InducedMatching":
        """Build a matching after checking it is induced in ``g``."""
        es = tuple(sorted(set(edges)))
        if not is_induced_matching(g, es):
            raise GraphError(f"edges {list(es)} do not form an induced matching")
        return cls(es)


def edge_closed_neighborhood(g: Graph, e: int) -> set[int]:
    """All edges sharing an endpoint with ``e``, including ``e``."""
    g.check_edge(e)
    u, v = g.edges[e]
    return set(g.incident(u)) | set(g.incident(v))


def conflict_set(g: Graph, e: int) -> set[int]:
    """Edges with an endpoint in ``N[u] | N[v]`` for ``e = uv``."""
    g.check_edge(e)
    out: set[int] = set()
    for w in g.closed_neighborhood(g.edges[e]):
        out.update(g.incident(w))
    return out


def _check_ids(g: Graph, edges: Iterable[int]) -> list[int]:
    es = list(edges)
    for e in es:
        g.check_edge(e)
    return es


def is_induced_matching(g: Graph, edges: Iterable[int]) -> bool:
    """Every edge of ``g`` sees at most one chosen edge in its neighborhood."""
    chosen = set(_check_ids(g, edges))
    for e in range(g.m):
        u, v = g.edges[e]
        hits = chosen.intersection(g.incident(u)) | chosen.intersection(g.incident(v))
        if len(hits) > 1:
            return False
    return True


def is_induced_matching_pairwise(g: Graph, edges: Iterable[int]) -> bool:
    """Same predicate via pairwise conflict sets."""
    es = sorted(set(_check_ids(g, edges)))
    for i, e in enumerate(es):
        conf = conflict_set(g, e)
        if any(f in conf for f in es[i + 1:]):
            return False
    return True


def is_matching(g: Graph, edges: Iterable[int]) -> bool:
    used: set[int] = set()
    for e in _check_ids(g, edges):
        u, v = g.edges[e]
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def remove_edges(g: Graph, drop: Iterable[int]) -> Reduction:
    drop = set(drop)
    keep = [e for e in range(g.m) if e not in drop]
    return Reduction(Graph(g.n, (g.edges[e] for e in keep)), tuple(range(g.n)), tuple(keep))


def remove_conflict_edges(g: Graph, e: int) -> Reduction:
    """``G - C_G(e)``: delete the conflict set of ``e``, keep every vertex."""
    return remove_edges(g, conflict_set(g, e))


def delete_vertices(g: Graph, s: Iterable[int]) -> Reduction:
    """Induced subgraph on the vertices not in ``s``; survivors keep their order."""
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"invalid vertex {v}")
    vmap = tuple(v for v in range(g.n) if v not in s)
    new_id = {old: new for new, old in enumerate(vmap)}
    keep = [e for e, (u, v) in enumerate(g.edges) if u in new_id and v in new_id]
    sub = Graph(len(vmap), ((new_id[g.edges[e][0]], new_id[g.edges[e][1]]) for e in keep))
    return Reduction(sub, vmap, tuple(keep))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Reduction:
    vs = set(vertices)
    return delete_vertices(g, (v for v in range(g.n) if v not in vs))


# -- text format -------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Read the edge-list format: optional ``p <n> <m>`` header, then ``u v`` lines.

    ``#`` starts a comment.  Without a header, ``n`` is one more than the
    largest vertex index seen.
    """
    header = None
    pairs: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or pairs:
                raise MalformedLineError(lineno, "header must come first and only once")
            if len(parts) != 3:
                raise MalformedLineError(lineno, f"bad header {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise MalformedLineError(lineno, f"bad header {raw!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise MalformedLineError(lineno, "negative header value")
            continue
        if len(parts) != 2:
            raise MalformedLineError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(lineno, f"non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0 or (header is not None and (u >= header[0] or v >= header[0])):
            raise VertexRangeError(lineno, f"vertex out of range in {raw!r}")
        if u == v:
            raise SelfLoopError(lineno, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(lineno, f"duplicate edge {key}")
        seen.add(key)
        pairs.append((lineno, u, v))
    if header is None:
        n = 1 + max((max(u, v) for _, u, v in pairs), default=-1)
    else:
        n = header[0]
        if header[1] != len(pairs):
            raise MalformedLineError(0, f"header declares {header[1]} edges, found {len(pairs)}")
    return Graph(n, ((u, v) for _, u, v in pairs))


def serialize_graph(g: Graph) -> str:
    """Canonical text: header, sorted ``u v`` lines with ``u < v``, LF endings."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(g))
