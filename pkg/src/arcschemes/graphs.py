"""Finite simple graphs and the constructions the package is built on.

Vertices are dense integers ``0..n-1``.  Adjacency is stored as one integer
bitmask per vertex, which makes the neighborhood algebra used everywhere
else (twins, common-neighbor counts, automorphism pruning) a couple of
machine operations.  Every value is immutable after construction and safe
to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def circular_distance(i: int, j: int, n: int) -> int:
    """Distance between i and j on the n-cycle."""
    d = (j - i) % n
    return min(d, n - d)


class Graph:
    """Undirected graph without loops or multiple edges."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Trusted constructor; use from_edges() and the generators below
        # for validated input.
        self.n = n
        self._adj = adj

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self._adj[v]
        return tuple(u for u in range(self.n) if m >> u & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def closed_neighbor_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def common_neighbor_count(self, u: int, v: int) -> int:
        return (self._adj[u] & self._adj[v]).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def is_regular(self) -> bool:
        return len({self.degree(v) for v in range(self.n)}) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def from_edges(n: int, edges) -> Graph:
    """Build a graph on n vertices from an edge list.

    Loops, out-of-range endpoints and duplicate edges are rejected so
    malformed input surfaces immediately instead of being repaired.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def elementary_caw(n: int, k: int) -> Graph:
    """Circulant on Z_n with connection set {+-1, ..., +-k}; needs 2k+1 < n.

    k = 0 gives the empty graph, k = 1 the n-cycle.  The result is
    2k-regular and has no twins.
    """
    if k < 0 or 2 * k + 1 >= n:
        raise ValueError(f"elementary circular-arc graph needs 0 <= 2k+1 < n, got n={n}, k={k}")
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if 1 <= circular_distance(i, j, n) <= k
    ]
    return from_edges(n, edges)


def lex_product(outer: Graph, inner: Graph) -> Graph:
    """Lexicographic product: blow each outer vertex up into a copy of inner.

    Vertex (a, b) is encoded as a * inner.n + b.  (a, b) ~ (c, d) iff
    a ~ c in the outer graph, or a = c and b ~ d in the inner graph.
    """
    ni = inner.n
    n = outer.n * ni
    edges = []
    for a in range(outer.n):
        for c in range(a, outer.n):
            if a == c:
                for b, d in inner.edges():
                    edges.append((a * ni + b, a * ni + d))
            elif outer.adjacent(a, c):
                for b in range(ni):
                    for d in range(ni):
                        edges.append((a * ni + b, c * ni + d))
    return from_edges(n, edges)


def disjoint_cliques(m: int, r: int) -> Graph:
    """m disjoint copies of K_r."""
    return lex_product(empty_graph(m), complete(r))


@dataclass(frozen=True)
class VertexPartition:
    """Partition of 0..n-1 into disjoint nonempty classes."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @staticmethod
    def from_classes(n: int, classes) -> "VertexPartition":
        norm = tuple(tuple(sorted(c)) for c in classes)
        class_of = [-1] * n
        for i, cls in enumerate(norm):
            if not cls:
                raise ValueError("empty partition class")
            for v in cls:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if class_of[v] != -1:
                    raise ValueError(f"vertex {v} in two classes")
                class_of[v] = i
        if -1 in class_of:
            raise ValueError("partition does not cover all vertices")
        return VertexPartition(norm, tuple(class_of))

    @staticmethod
    def singletons(n: int) -> "VertexPartition":
        return VertexPartition(tuple((v,) for v in range(n)), tuple(range(n)))


def twin_relation(g: Graph) -> VertexPartition:
    """Partition into classes of pairwise twins (adjacent, equal closed
    neighborhoods); vertices without a twin end up in singleton classes.

    Grouping by closed-neighborhood bitmask is equivalent to the pairwise
    definition: u ~twin~ v forces u and v adjacent, hence N[u] = N[v].
    Classes are ordered by their smallest vertex.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_neighbor_mask(v), []).append(v)
    classes = sorted(groups.values(), key=lambda c: c[0])
    return VertexPartition.from_classes(g.n, classes)


def quotient_graph(g: Graph, p: VertexPartition) -> Graph:
    """Graph on the classes of p; X ~ Y iff some x in X is adjacent to some y in Y."""
    if p.n != g.n:
        raise ValueError("partition does not match graph")
    k = len(p.classes)
    edges = set()
    for u, v in g.edges():
        cu, cv = p.class_of[u], p.class_of[v]
        if cu != cv:
            edges.add((min(cu, cv), max(cu, cv)))
    return from_edges(k, sorted(edges))


def edge_level_partition(g: Graph) -> dict[int, frozenset[tuple[int, int]]]:
    """Split the (ordered) edge relation by number of common neighbors.

    Level k holds all ordered pairs (u, v) with u ~ v and |N(u) & N(v)| = k.
    The levels are disjoint, each is symmetric, and their union is the
    full edge relation.
    """
    levels: dict[int, set[tuple[int, int]]] = {}
    for u, v in g.edges():
        k = g.common_neighbor_count(u, v)
        levels.setdefault(k, set()).update([(u, v), (v, u)])
    return {k: frozenset(pairs) for k, pairs in levels.items()}


def count_automorphisms(g: Graph, limit: int = 12) -> int:
    """Exact order of the automorphism group.

    Uses the orbit-stabilizer chain: the orbit of a pivot vertex is found
    by one backtracking existence search per candidate image, then the
    pivot is individualized and the stabilizer is counted recursively.
    This counts huge groups (e.g. 12! for the empty graph on 12 vertices)
    without enumerating their elements.
    """
    n = g.n
    if n > limit:
        raise ValueError(f"graph has {n} vertices, automorphism limit is {limit}")
    if n <= 1:
        return 1
    adj = g._adj

    def exists_automorphism(colors: list[int], src: int, dst: int) -> bool:
        # Any color-preserving automorphism mapping src to dst?
        if colors[src] != colors[dst]:
            return False
        order = [src] + [v for v in range(n) if v != src]
        perm = [-1] * n
        used = [False] * n
        perm[src] = dst
        used[dst] = True

        def backtrack(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for w in range(n):
                if used[w] or colors[w] != colors[v]:
                    continue
                ok = True
                for j in range(i):
                    u = order[j]
                    if (adj[v] >> u & 1) != (adj[w] >> perm[u] & 1):
                        ok = False
                        break
                if ok:
                    perm[v] = w
                    used[w] = True
                    if backtrack(i + 1):
                        return True
                    used[w] = False
                    perm[v] = -1
            return False

        return backtrack(1)

    def group_order(colors: list[int], fresh: int) -> int:
        pivot = -1
        for v in range(n):
            if colors.count(colors[v]) > 1:
                pivot = v
                break
        if pivot == -1:
            return 1  # all classes singletons: only the identity survives
        orbit = 0
        for w in range(n):
            if colors[w] == colors[pivot] and (
                w == pivot or exists_automorphism(colors, pivot, w)
            ):
                orbit += 1
        stab_colors = list(colors)
        stab_colors[pivot] = fresh
        return orbit * group_order(stab_colors, fresh + 1)

    degrees = [g.degree(v) for v in range(n)]
    return group_order(degrees, n + 1)


# ---------------------------------------------------------------------------
# Edge-list text format: "n e" header, then e lines "u v", '#' comments.


def graph_to_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            header = (a, b, lineno)
        else:
            edges.append((a, b, lineno))
    if header is None:
        raise ValueError("empty graph file (missing 'n e' header)")
    n, e, hline = header
    if n < 0 or e < 0:
        raise ValueError(f"line {hline}: negative count in header")
    if len(edges) != e:
        raise ValueError(f"header declares {e} edges but file has {len(edges)}")
    seen = set()
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range in edge ({u}, {v})")
        if u == v:
            raise ValueError(f"line {lineno}: loop edge ({u}, {v}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
    return from_edges(n, [(u, v) for u, v, _ in edges])


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_text(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(g))
