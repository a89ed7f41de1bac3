"""Deterministic generators for the graph families used throughout the package.

Spec strings have the form ``family:key=val,key=val`` (``path:n=5``,
``c1:r=2,t=4``).  List values use ``+`` as separator
(``k1_plus_cliques:sizes=2+3``, ``tree:edges=0-1+1-2+1-3``).

Labelings:

* ``path n``: ``0 - 1 - ... - n-1``.
* ``cycle n``: ``i ~ i+1 (mod n)``.
* ``complete_bipartite r s``: sides ``0..r-1`` and ``r..r+s-1``.
* ``star r``: center ``0``, leaves ``1..r``.
* ``hypercube k``: vertices are ``k``-bit words, adjacent when they differ in one bit.
* ``grid m n``: ``P_m □ P_n`` with ``(a, b) -> a*n + b``.
* ``wheel r`` / ``fan r``: center ``0``, rim ``1..r`` (cycle / path order).
* ``comet n r``: clique on ``0..r-1``; path ``0 - r - r+1 - ... - n-1``.
* ``c1 r t``: cycle ``0..t-1``; pendant vertices ``t..t+r-1`` all on ``0``.
* ``sphere k r``: poles ``0`` and ``1``; path ``i`` has inner vertices
  ``2 + i(k-1) .. 1 + (i+1)(k-1)`` running from pole ``0`` to pole ``1``.
* ``kn_minus_e n``: ``K_n`` without the edge ``0 1``.
* ``k1_plus_cliques sizes``: center ``0``, cliques on consecutive blocks after it.
* ``realization_A r n`` / ``realization_B r t n``: a ``c1`` graph whose pendant
  edge ``0 - t`` is subdivided by new vertices appended at the end, listed
  from ``0`` towards the leaf.
* ``tree``, ``block_random``, ``unicyclic_random``: seeded, see the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

import numpy as np

from .boundary import end_vertices
from .errors import GraphError
from .graph import (
    Graph,
    all_pairs_distances,
    cartesian_product,
    is_connected,
    cut_vertices,
    join,
)

FAMILIES = (
    "path", "cycle", "complete", "complete_bipartite", "star", "tree", "hypercube",
    "grid", "wheel", "fan", "comet", "c1", "sphere", "kn_minus_e", "k1_plus_cliques",
    "realization_A", "realization_B", "block_random", "unicyclic_random",
)

SPEC_GRAMMAR = """\
family spec:  FAMILY[:KEY=VALUE[,KEY=VALUE...]]
  path:n  cycle:n  complete:n  complete_bipartite:r,s  star:r  hypercube:k
  grid:m,n  wheel:r  fan:r  comet:n,r  c1:r,t  sphere:k,r  kn_minus_e:n
  k1_plus_cliques:sizes=A+B+...  realization_A:r,n  realization_B:r,t,n
  tree:n,seed  or  tree:edges=U-V+U-V+...
  block_random:blocks,min_size,max_size,seed
  unicyclic_random:n,seed[,t_min,t_max,all_majors]"""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        if not self.params:
            return self.family
        parts = []
        for k, v in self.params.items():
            if isinstance(v, (list, tuple)):
                if v and isinstance(v[0], tuple):
                    v = "+".join(f"{a}-{b}" for a, b in v)
                else:
                    v = "+".join(str(x) for x in v)
            parts.append(f"{k}={v}")
        return f"{self.family}:{','.join(parts)}"

    def __hash__(self):
        return hash(str(self))


def parse_spec(text: str) -> FamilySpec:
    family, _, rest = text.strip().partition(":")
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    params: dict = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip()
            if not eq or not key:
                raise GraphError(f"malformed parameter {item!r} in {text!r}")
            try:
                if key == "edges":
                    params[key] = tuple(
                        tuple(int(x) for x in e.split("-")) for e in value.split("+")
                    )
                elif key == "sizes":
                    params[key] = tuple(int(x) for x in value.split("+"))
                else:
                    params[key] = int(value)
            except ValueError:
                raise GraphError(f"bad value for {key!r} in {text!r}") from None
    return FamilySpec(family, params)


def _need(cond: bool, spec: FamilySpec, constraint: str):
    if not cond:
        raise GraphError(f"{spec}: requires {constraint}")


def _get(spec: FamilySpec, *keys):
    missing = [k for k in keys if k not in spec.params]
    if missing:
        raise GraphError(f"{spec}: missing parameter(s) {', '.join(missing)}")
    return [spec.params[k] for k in keys]


# ---------------------------------------------------------------------------
# plain constructors


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(r: int, s: int) -> Graph:
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def hypercube_graph(k: int) -> Graph:
    n = 1 << k
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)])


def c1_graph(r: int, t: int) -> Graph:
    edges = [(i, (i + 1) % t) for i in range(t)] + [(0, t + j) for j in range(r)]
    return Graph.from_edges(t + r, edges)


def subdivide(g: Graph, u: int, v: int, k: int) -> Graph:
    """Replace edge ``u v`` by a path through ``k`` new vertices (appended, from ``u``)."""
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u} {v} to subdivide")
    if k == 0:
        return g
    edges = [e for e in g.edges() if set(e) != {u, v}]
    chain = [u] + list(range(g.n, g.n + k)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + k, edges)


def tree_from_pruefer(seq) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return path_graph(2)
    rng = np.random.default_rng(seed)
    return tree_from_pruefer([int(x) for x in rng.integers(0, n, size=n - 2)])


def random_block_graph(blocks: int, min_size: int, max_size: int, seed: int) -> Graph:
    """Tree of cliques: a random Pruefer tree decides which clique hangs off which.

    Each child clique shares one random vertex with its parent clique.
    """
    rng = np.random.default_rng(seed)
    sizes = [int(x) for x in rng.integers(min_size, max_size + 1, size=blocks)]
    if blocks == 1:
        shape_adj = [[]]
    elif blocks == 2:
        shape_adj = [[1], [0]]
    else:
        shape = tree_from_pruefer([int(x) for x in rng.integers(0, blocks, size=blocks - 2)])
        shape_adj = [sorted(s) for s in shape.adj]
    members: list[list[int]] = [[] for _ in range(blocks)]
    members[0] = list(range(sizes[0]))
    n = sizes[0]
    edges = []
    seen = {0}
    queue = [0]
    while queue:
        b = queue.pop(0)
        for c in shape_adj[b]:
            if c in seen:
                continue
            seen.add(c)
            shared = members[b][int(rng.integers(0, len(members[b])))]
            members[c] = [shared] + list(range(n, n + sizes[c] - 1))
            n += sizes[c] - 1
            queue.append(c)
    for mem in members:
        edges += [(a, b) for i, a in enumerate(mem) for b in mem[i + 1:]]
    return Graph.from_edges(n, edges)


def random_unicyclic(n: int, seed: int, t_min: int = 3, t_max: int | None = None,
                     all_majors: bool = False) -> Graph:
    """Cycle ``0..t-1`` plus a random forest; vertex ``v >= t`` attaches to a random earlier vertex.

    With ``all_majors`` the first ``t`` added vertices are pendants on each
    cycle vertex in turn, so every cycle vertex is major.
    """
    rng = np.random.default_rng(seed)
    t_max = n if t_max is None else min(t_max, n)
    if all_majors:
        t_max = min(t_max, n // 2)
    if t_max < t_min:
        raise GraphError(f"unicyclic_random: no cycle length in [{t_min}, {t_max}] for n={n}")
    t = int(rng.integers(t_min, t_max + 1))
    edges = [(i, (i + 1) % t) for i in range(t)]
    start = t
    if all_majors:
        edges += [(i, t + i) for i in range(t)]
        start = 2 * t
    for v in range(start, n):
        edges.append((int(rng.integers(0, v)), v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# dispatch


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f = spec.family
    if f == "path":
        (n,) = _get(spec, "n")
        _need(n >= 1, spec, "n >= 1")
        return path_graph(n)
    if f == "cycle":
        (n,) = _get(spec, "n")
        _need(n >= 3, spec, "n >= 3")
        return cycle_graph(n)
    if f == "complete":
        (n,) = _get(spec, "n")
        _need(n >= 1, spec, "n >= 1")
        return complete_graph(n)
    if f == "complete_bipartite":
        r, s = _get(spec, "r", "s")
        _need(r >= 1 and s >= 1, spec, "r, s >= 1")
        return complete_bipartite_graph(r, s)
    if f == "star":
        (r,) = _get(spec, "r")
        _need(r >= 1, spec, "r >= 1")
        return complete_bipartite_graph(1, r)
    if f == "tree":
        if "edges" in spec.params:
            edges = spec.params["edges"]
            n = spec.params.get("n", 1 + max(max(e) for e in edges))
            g = Graph.from_edges(n, edges)
            _need(g.m == n - 1 and is_connected(g), spec, "a tree edge list")
            return g
        n, seed = _get(spec, "n", "seed")
        _need(n >= 1, spec, "n >= 1")
        return random_tree(n, seed)
    if f == "hypercube":
        (k,) = _get(spec, "k")
        _need(k >= 1, spec, "k >= 1")
        return hypercube_graph(k)
    if f == "grid":
        m, n = _get(spec, "m", "n")
        _need(m >= 2 and n >= 2, spec, "m, n >= 2")
        return cartesian_product(path_graph(m), path_graph(n))
    if f == "wheel":
        (r,) = _get(spec, "r")
        _need(r >= 3, spec, "r >= 3")
        return join(complete_graph(1), cycle_graph(r))
    if f == "fan":
        (r,) = _get(spec, "r")
        _need(r >= 2, spec, "r >= 2")
        return join(complete_graph(1), path_graph(r))
    if f == "comet":
        n, r = _get(spec, "n", "r")
        _need(2 <= r < n, spec, "2 <= r < n")
        edges = complete_graph(r).edges()
        chain = [0] + list(range(r, n))
        edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(n, edges)
    if f == "c1":
        r, t = _get(spec, "r", "t")
        _need(r >= 2 and t >= 4, spec, "r >= 2 and t >= 4")
        return c1_graph(r, t)
    if f == "sphere":
        k, r = _get(spec, "k", "r")
        _need(k >= 2 and r >= 2, spec, "k, r >= 2")
        edges = []
        nxt = 2
        for _ in range(r):
            chain = [0] + list(range(nxt, nxt + k - 1)) + [1]
            nxt += k - 1
            edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(nxt, edges)
    if f == "kn_minus_e":
        (n,) = _get(spec, "n")
        _need(n >= 3, spec, "n >= 3")
        return Graph.from_edges(n, [e for e in complete_graph(n).edges() if e != (0, 1)])
    if f == "k1_plus_cliques":
        (sizes,) = _get(spec, "sizes")
        _need(len(sizes) >= 2 and min(sizes) >= 1, spec, "at least 2 cliques of size >= 1")
        edges, start = [], 1
        for s in sizes:
            block = list(range(start, start + s))
            edges += [(0, v) for v in block]
            edges += [(a, b) for i, a in enumerate(block) for b in block[i + 1:]]
            start += s
        return Graph.from_edges(start, edges)
    if f == "realization_A":
        r, n = _get(spec, "r", "n")
        _need(3 <= r <= n - 3, spec, "3 <= r <= n - 3")
        return subdivide(c1_graph(r - 1, 4), 0, 4, n - r - 3)
    if f == "realization_B":
        r, t, n = _get(spec, "r", "t", "n")
        _need(3 <= r < t and 2 * t <= n + r - 2, spec, "3 <= r < t <= (n + r - 2) / 2")
        cyc = 2 * (t - r + 1) + 1
        return subdivide(c1_graph(r - 1, cyc), 0, cyc, n - 2 * t + r - 2)
    if f == "block_random":
        blocks, lo, hi, seed = _get(spec, "blocks", "min_size", "max_size", "seed")
        _need(blocks >= 1 and 2 <= lo <= hi, spec, "blocks >= 1 and 2 <= min_size <= max_size")
        return random_block_graph(blocks, lo, hi, seed)
    if f == "unicyclic_random":
        n, seed = _get(spec, "n", "seed")
        _need(n >= 3, spec, "n >= 3")
        return random_unicyclic(
            n, seed,
            t_min=spec.params.get("t_min", 3),
            t_max=spec.params.get("t_max"),
            all_majors=bool(spec.params.get("all_majors", 0)),
        )
    raise GraphError(f"unknown family {f!r}")


def expected_pds(spec: FamilySpec | str) -> int | None:
    """Closed-form strong partition dimension where one is known, else ``None``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, p = spec.family, spec.params
    g = generate(spec)
    if g.n < 2:
        return None
    if f == "path":
        return 2
    if f == "cycle":
        return 3
    if f == "complete":
        return p["n"]
    if f in ("star", "tree"):
        return len(end_vertices(g))
    if f == "grid":
        return 3
    if f == "wheel":
        r = p["r"]
        return 4 if r == 3 else 3 if r == 4 else ceil(r / 2)
    if f == "fan":
        r = p["r"]
        return 3 if r <= 4 else ceil(r / 2)
    if f == "comet":
        return p["r"]
    if f == "c1":
        return p["r"] + 1
    if f == "sphere":
        return 3 if p["r"] == 2 else None
    if f in ("kn_minus_e", "k1_plus_cliques"):
        return g.n - 1
    if f in ("realization_A", "realization_B"):
        return p["r"]
    if f == "block_random":
        return g.n - len(cut_vertices(g))
    if f == "unicyclic_random":
        return _unicyclic_expected(g)
    return None


def _unicyclic_expected(g: Graph) -> int | None:
    from .heuristics import unicyclic_analysis

    s = unicyclic_analysis(g, all_pairs_distances(g))
    if s.tau == 0:
        return 3
    if s.tau == 1:
        return 3
    if len(s.majors) == s.t:
        return s.tau
    if s.t == 3 and len(s.majors) == 1:
        return s.tau + 2
    return None


def expected_dims(spec: FamilySpec | str) -> int | None:
    """Closed-form strong metric dimension where one is known, else ``None``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, p = spec.family, spec.params
    if f == "path" and p.get("n", 0) >= 2:
        return 1
    if f == "complete" and p.get("n", 0) >= 2:
        return p["n"] - 1
    if f == "c1":
        r, t = p["r"], p["t"]
        return r + (t - 1) // 2 if t % 2 else r + (t - 2) // 2
    if f == "comet":
        return p["r"] - 1
    if f == "realization_A":
        return p["r"]
    if f == "realization_B":
        return p["t"]
    return None
