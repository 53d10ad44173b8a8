"""Simple graphs with a significant edge ordering.

Vertices are 1..n and edges e_1..e_s are an ordered sequence of unordered
pairs; the ordering is part of the value (the ternary theory singles out the
"last" edge).  Edge subsets are frozensets of 1-based edge indices.

Graph text format (shared with the CLI): a header line "n s", then s lines
"u v" (edge order = file order); blank lines and lines starting with "#" are
ignored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .errors import CapExceeded, InvalidParams, NotADecomposition, NotNested, NotOpen

EdgeSubset = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParams("vertex count must be positive")
        if len(self.edges) < 1:
            raise InvalidParams("at least one edge is required")
        seen = set()
        norm = []
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidParams(f"edge ({u},{v}) has endpoints outside 1..{self.n}")
            if u == v:
                raise InvalidParams(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidParams(f"duplicate edge ({u},{v})")
            seen.add(key)
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def s(self):
        return len(self.edges)

    def adjacency(self):
        """vertex -> list of (neighbor, edge index)."""
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, (u, v) in enumerate(self.edges, start=1):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj

    def reorder_edges(self, perm):
        """New graph with edge ordering permuted; perm is a 1-based
        permutation, new edge i = old edge perm[i-1]."""
        if sorted(perm) != list(range(1, self.s + 1)):
            raise InvalidParams("seed-order is not a permutation of 1..s")
        return Graph(self.n, tuple(self.edges[p - 1] for p in perm))


@dataclass(frozen=True)
class GraphSummary:
    n: int
    s: int
    b0: int
    bipartite: bool
    gamma: int


@dataclass(frozen=True)
class EarDecomposition:
    ears: tuple
    epsilon: int


def summarize(G):
    """Connected components, per-component 2-colorability, gamma."""
    color = {}
    b0 = 0
    gamma = 0
    adj = G.adjacency()
    for start in range(1, G.n + 1):
        if start in color:
            continue
        b0 += 1
        odd = False
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    odd = True
        if odd:
            gamma += 1
    return GraphSummary(n=G.n, s=G.s, b0=b0, bipartite=(gamma == 0), gamma=gamma)


def bipartition(G):
    """2-coloring as (part0, part1) vertex sets, or None if non-bipartite."""
    summary = summarize(G)
    if not summary.bipartite:
        return None
    color = {}
    adj = G.adjacency()
    for start in range(1, G.n + 1):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
    part0 = frozenset(v for v, c in color.items() if c == 0)
    part1 = frozenset(v for v, c in color.items() if c == 1)
    return part0, part1


def cycle_space_basis(G):
    """Fundamental cycles of a spanning forest, one per non-tree edge,
    as edge-index subsets.  Length is always s - n + b0."""
    adj = G.adjacency()
    parent_edge = {}
    depth = {}
    tree_edges = set()
    for start in range(1, G.n + 1):
        if start in depth:
            continue
        depth[start] = 0
        parent_edge[start] = None
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, ei in adj[u]:
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent_edge[v] = (u, ei)
                    tree_edges.add(ei)
                    queue.append(v)

    def path_to_root(v):
        out = set()
        while parent_edge[v] is not None:
            u, ei = parent_edge[v]
            out.add(ei)
            v = u
        return out

    basis = []
    for i, (u, v) in enumerate(G.edges, start=1):
        if i in tree_edges:
            continue
        cyc = path_to_root(u) ^ path_to_root(v)
        cyc.add(i)
        basis.append(frozenset(cyc))
    return basis


def subset_mask(subset):
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


def mask_subset(mask):
    out = set()
    i = 1
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def enumerate_eulerian(G, even_edge_count_only=False, cap=1 << 20):
    """All nonempty elements of the cycle space, as edge subsets, sorted by
    subset encoding.  Every emitted subset induces even degree everywhere."""
    basis = [subset_mask(c) for c in cycle_space_basis(G)]
    total = 1 << len(basis)
    if total > cap:
        raise CapExceeded(
            f"cycle space has {total} elements, cap is {cap}", required=total
        )
    out = []
    for combo in range(1, total):
        mask = 0
        c = combo
        i = 0
        while c:
            if c & 1:
                mask ^= basis[i]
            c >>= 1
            i += 1
        if even_edge_count_only and mask.bit_count() % 2:
            continue
        out.append(mask)
    out = sorted(set(out))
    return [mask_subset(m) for m in out]


# Family constructors.  Vertex numbering and edge ordering are fixed:
#   path(k):       vertices 1..k+1, edges (i, i+1) for i = 1..k.
#   cycle(l):      vertices 1..l, edges (1,2), ..., (l-1,l), (l,1).
#   complete(n):   edges (u,v), u < v, in lexicographic order.
#   complete_bipartite(a, b): parts {1..a} and {a+1..a+b}; edges (i, a+j)
#       ordered by i, then j.
#   complete_multipartite(a_1..a_r): parts are consecutive vertex blocks;
#       edges (u,v), u < v with u,v in different parts, lexicographic.
#   parallel_composition(k_1..k_r): hubs are vertices 1 and 2; path i of
#       length k_i gets fresh internal vertices in argument order and its
#       edges are listed hub-1 to hub-2, path by path.


def build_family(family, params):
    params = list(params)
    if any(p < 1 for p in params):
        raise InvalidParams("family parameters must be positive")
    if family == "path":
        (k,) = params
        return Graph(k + 1, tuple((i, i + 1) for i in range(1, k + 1)))
    if family == "cycle":
        (l,) = params
        if l < 3:
            raise InvalidParams("cycle length must be at least 3")
        edges = [(i, i + 1) for i in range(1, l)] + [(l, 1)]
        return Graph(l, tuple(edges))
    if family == "complete":
        (n,) = params
        if n < 2:
            raise InvalidParams("complete graph needs at least 2 vertices")
        return Graph(n, tuple((u, v) for u in range(1, n) for v in range(u + 1, n + 1)))
    if family == "complete_bipartite":
        a, b = params
        return Graph(
            a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1))
        )
    if family == "complete_multipartite":
        if len(params) < 2:
            raise InvalidParams("at least two parts are required")
        n = sum(params)
        part = {}
        v = 1
        for idx, a in enumerate(params):
            for _ in range(a):
                part[v] = idx
                v += 1
        edges = tuple(
            (u, w)
            for u in range(1, n)
            for w in range(u + 1, n + 1)
            if part[u] != part[w]
        )
        if not edges:
            raise InvalidParams("graph would have no edges")
        return Graph(n, edges)
    if family == "parallel_composition":
        ks = params
        if len(ks) < 2:
            raise InvalidParams("parallel composition needs at least two paths")
        if sum(1 for k in ks if k == 1) > 1:
            raise InvalidParams("two paths of length 1 would create a multi-edge")
        edges = []
        next_v = 3
        for k in ks:
            if k == 1:
                edges.append((1, 2))
                continue
            chain = [1] + list(range(next_v, next_v + k - 1)) + [2]
            next_v += k - 1
            edges.extend((chain[i], chain[i + 1]) for i in range(k))
        return Graph(next_v - 1, tuple(edges))
    raise InvalidParams(f"unknown family {family!r}")


def _ear_edges(G, path):
    """Edge indices along a vertex path; raises NotADecomposition on a
    pair that is not an edge of G."""
    index = {}
    for i, (u, v) in enumerate(G.edges, start=1):
        index[(u, v)] = i
        index[(v, u)] = i
    out = []
    for a, b in zip(path, path[1:]):
        ei = index.get((a, b))
        if ei is None:
            raise NotADecomposition(f"({a},{b}) is not an edge of the graph")
        out.append(ei)
    return out


def validate_ear_decomposition(G, ears):
    """Check a nested open ear decomposition given as vertex paths.

    The first ear must be a closed cycle; every later ear is a path whose
    distinct endpoints lie on earlier ears and whose internal vertices are
    new.  Each later ear must determine a nest interval on a single earlier
    ear, and intervals on a common ear must be pairwise disjoint or nested
    (on the cycle ear either arc may serve as the interval; all choices are
    searched).  Returns the decomposition with its count of even ears.
    """
    ears = [list(e) for e in ears]
    if not ears:
        raise NotADecomposition("no ears given")

    first = ears[0]
    if len(first) < 4 or first[0] != first[-1]:
        raise NotADecomposition("first ear must be a closed cycle")
    if len(set(first[:-1])) != len(first) - 1:
        raise NotADecomposition("first ear revisits a vertex")

    ear_edges = [_ear_edges(G, e) for e in ears]
    used = [ei for edges in ear_edges for ei in edges]
    if len(used) != len(set(used)) or set(used) != set(range(1, G.s + 1)):
        raise NotADecomposition("ears do not partition the edge set")

    seen_vertices = set(first)
    for idx in range(1, len(ears)):
        path = ears[idx]
        if len(path) < 2 or path[0] == path[-1]:
            raise NotOpen(f"ear {idx + 1} must be an open path with distinct endpoints")
        if len(set(path)) != len(path):
            raise NotOpen(f"ear {idx + 1} revisits a vertex")
        if path[0] not in seen_vertices or path[-1] not in seen_vertices:
            raise NotOpen(f"ear {idx + 1} endpoints must lie on earlier ears")
        internal = path[1:-1]
        if any(v in seen_vertices for v in internal):
            raise NotOpen(f"ear {idx + 1} reuses an internal vertex")
        seen_vertices.update(path)

    # Candidate nest intervals, as (host ear index, frozenset of edge slots).
    candidates = []
    for idx in range(1, len(ears)):
        a, b = ears[idx][0], ears[idx][-1]
        opts = []
        for j in range(idx):
            host = ears[j]
            verts = host[:-1] if j == 0 else host
            if a not in verts or b not in verts:
                continue
            pa, pb = verts.index(a), verts.index(b)
            if j == 0:
                L = len(verts)
                lo, hi = min(pa, pb), max(pa, pb)
                arc1 = frozenset(range(lo, hi))
                arc2 = frozenset(range(hi, L)) | frozenset(range(0, lo))
                opts.append((j, arc1))
                opts.append((j, arc2))
            else:
                lo, hi = min(pa, pb), max(pa, pb)
                opts.append((j, frozenset(range(lo, hi))))
        if not opts:
            raise NotNested(f"ear {idx + 1} determines no nest interval")
        candidates.append(opts)

    def compatible(choice):
        by_host = {}
        for j, interval in choice:
            by_host.setdefault(j, []).append(interval)
        for intervals in by_host.values():
            for x in range(len(intervals)):
                for y in range(x + 1, len(intervals)):
                    A, B = intervals[x], intervals[y]
                    if A & B and not (A <= B or B <= A):
                        return False
        return True

    if not any(compatible(choice) for choice in product(*candidates)):
        raise NotNested("nest intervals on a common ear are neither disjoint nor nested")

    epsilon = sum(1 for edges in ear_edges if len(edges) % 2 == 0)
    return EarDecomposition(ears=tuple(tuple(e) for e in ears), epsilon=epsilon)


def parse_graph(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InvalidParams("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise InvalidParams('header must be "n s"')
    n, s = int(header[0]), int(header[1])
    if len(lines) - 1 != s:
        raise InvalidParams(f"expected {s} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParams(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, tuple(edges))


def format_graph(G):
    out = [f"{G.n} {G.s}"]
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


# Structure recognizers used by the verification harness.


def is_even_cycle(G):
    summary = summarize(G)
    if summary.b0 != 1 or G.s != G.n or G.s % 2:
        return None
    degrees = {v: 0 for v in range(1, G.n + 1)}
    for u, v in G.edges:
        degrees[u] += 1
        degrees[v] += 1
    if any(d != 2 for d in degrees.values()):
        return None
    return G.s // 2  # half-length


def is_complete(G):
    if G.s == G.n * (G.n - 1) // 2 and G.n >= 2:
        return G.n
    return None


def is_complete_bipartite(G):
    parts = bipartition(G)
    if parts is None:
        return None
    a, b = len(parts[0]), len(parts[1])
    if summarize(G).b0 == 1 and G.s == a * b:
        return tuple(sorted((a, b)))
    return None


def is_complete_multipartite(G):
    """Part sizes if G is complete multipartite with r > 2 parts, else None.

    Holds iff the complement is a disjoint union of cliques."""
    present = {frozenset(e) for e in G.edges}
    comp_adj = {v: set() for v in range(1, G.n + 1)}
    for u in range(1, G.n):
        for v in range(u + 1, G.n + 1):
            if frozenset((u, v)) not in present:
                comp_adj[u].add(v)
                comp_adj[v].add(u)
    seen = set()
    parts = []
    for start in range(1, G.n + 1):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in comp_adj[u]:
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        for u in comp:
            if comp_adj[u] != comp - {u}:
                return None
        seen |= comp
        parts.append(len(comp))
    if len(parts) <= 2:
        return None
    return tuple(sorted(parts))
