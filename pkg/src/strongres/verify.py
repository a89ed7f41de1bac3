"""Verification suites: closed formulas, characterizations and bounds checked on corpora.

Each suite returns a :class:`SuiteReport` with one :class:`Check` per claim
(pass/fail counts plus the first few counterexamples).  Strong partition
dimensions are computed with the bound-free exhaustive search and the
bounded solver is cross-checked against it, so no claim is verified by a
search that already assumes it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .boundary import boundary, end_vertices, is_two_antipodal, simplicial_vertices, strong_resolving_graph
from .errors import DomainError
from .families import (
    complete_graph,
    cycle_graph,
    generate,
    hypercube_graph,
    random_block_graph,
    random_tree,
    expected_dims,
    expected_pds,
    parse_spec,
)
from .graph import (
    Graph,
    all_pairs_distances,
    are_isomorphic,
    cut_vertices,
    diameter,
    disjoint_union,
    induced_subgraph,
    is_complete,
    is_connected,
    is_path,
)
from .heuristics import p1_partition, p2_partition, unicyclic_analysis, unicyclic_partition
from .kernels import clique_number, vertex_cover_number
from .resolving import is_strong_resolving_partition
from .solvers import (
    brute_force_strong_metric_dimension,
    exhaustive_strong_partition_dimension,
    strong_metric_dimension,
    strong_partition_dimension,
)

MAX_FAILURES_KEPT = 5


@dataclass
class Check:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


@dataclass
class SuiteReport:
    suite: str
    checks: dict[str, Check] = field(default_factory=dict)

    def check(self, name: str, cond: bool, detail: str = ""):
        c = self.checks.setdefault(name, Check(name))
        if cond:
            c.passed += 1
        else:
            c.failed += 1
            if len(c.failures) < MAX_FAILURES_KEPT:
                c.failures.append(detail)

    def merge(self, other: "SuiteReport"):
        for name, c in other.checks.items():
            mine = self.checks.setdefault(name, Check(name))
            mine.passed += c.passed
            mine.failed += c.failed
            mine.failures.extend(c.failures[: MAX_FAILURES_KEPT - len(mine.failures)])
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def lines(self) -> list[str]:
        out = []
        for c in self.checks.values():
            status = "PASS" if c.ok else "FAIL"
            out.append(f"[{status}] {self.suite}: {c.name}: {c.passed} passed, {c.failed} failed")
            out.extend(f"        counterexample: {f}" for f in c.failures)
        return out


# ---------------------------------------------------------------------------
# corpora


def connected_labeled_graphs(n: int):
    """Every connected labeled graph on ``n`` vertices (no isomorphism reduction)."""
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        adj = [0] * n
        edges = []
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                edges.append((u, v))
        seen = frontier = 1
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen == full:
            yield Graph.from_edges(n, edges)


def random_connected_graph(rng: np.random.Generator, n: int) -> Graph:
    p = float(rng.uniform(0.25, 0.75))
    while True:
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def random_corpus(samples: int, seed: int, n_lo: int, n_hi: int) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, int(rng.integers(n_lo, n_hi + 1))) for _ in range(samples)]


def _label(g: Graph) -> str:
    return f"n={g.n} edges={g.edges()}"


def _pd_checked(report: SuiteReport, g: Graph, d) -> int:
    """Exhaustive pd_s, with the bounded solver cross-checked against it."""
    exact = exhaustive_strong_partition_dimension(g, d)
    solved = strong_partition_dimension(g, d)
    report.check("bounded solver agrees with exhaustive search", solved.value == exact.value,
                 f"{_label(g)}: solver {solved.value}, exhaustive {exact.value}")
    return exact.value


# ---------------------------------------------------------------------------
# structural predicates for the pd_s = n - 1 characterization


def _is_c4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and all(len(a) == 2 for a in g.adj)


def _is_kn_minus_e(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n * (g.n - 1) // 2 - 1


def _is_disjoint_cliques(g: Graph, verts: list[int]) -> int:
    """Number of components if ``verts`` induces a disjoint union of cliques, else 0."""
    remaining = set(verts)
    count = 0
    while remaining:
        v = min(remaining)
        comp = {v} | (g.adj[v] & remaining)
        for a in comp:
            if (g.adj[a] & remaining) | {a} != comp:
                return 0
        remaining -= comp
        count += 1
    return count


def _is_k1_plus_cliques(g: Graph) -> bool:
    for v in range(g.n):
        if len(g.adj[v]) == g.n - 1:
            rest = [u for u in range(g.n) if u != v]
            if _is_disjoint_cliques(g, rest) >= 2:
                return True
    return False


def in_pd_n_minus_1_family(g: Graph) -> bool:
    is_p3 = g.n == 3 and is_path(g)
    return is_p3 or _is_c4(g) or _is_kn_minus_e(g) or _is_k1_plus_cliques(g)


_C5 = cycle_graph(5)
_S23 = generate("sphere:k=2,r=3")
_W4 = generate("wheel:r=4")


def has_special_induced_subgraph(g: Graph) -> bool:
    """Induced C_5, S_{2,3} or K_1 + C_4."""
    for five in combinations(range(g.n), 5):
        h = induced_subgraph(g, five)
        if h.m not in (5, 6, 8):
            continue
        if are_isomorphic(h, _C5) or are_isomorphic(h, _S23) or are_isomorphic(h, _W4):
            return True
    return False


# ---------------------------------------------------------------------------
# suites


def verify_oracle(max_n: int = 6) -> SuiteReport:
    """dim_s by subset enumeration equals the vertex cover number of G_SR."""
    report = SuiteReport("oracle")
    for n in range(2, max_n + 1):
        for g in connected_labeled_graphs(n):
            d = all_pairs_distances(g)
            brute = brute_force_strong_metric_dimension(g, d).value
            alpha = vertex_cover_number(strong_resolving_graph(g, d).graph).value
            report.check(f"dim_s = alpha(G_SR), n={n}", brute == alpha,
                         f"{_label(g)}: brute {brute}, alpha {alpha}")
    return report


def verify_characterizations(max_n: int = 6) -> SuiteReport:
    report = SuiteReport("characterizations")
    for n in range(2, max_n + 1):
        for g in connected_labeled_graphs(n):
            d = all_pairs_distances(g)
            pd = _pd_checked(report, g, d)
            report.check("pd_s = 2 iff path", (pd == 2) == is_path(g), f"{_label(g)}: pd_s={pd}")
            report.check("pd_s = n iff complete", (pd == n) == is_complete(g), f"{_label(g)}: pd_s={pd}")
            if n >= 3:
                report.check(
                    "pd_s = n-1 iff P_3, C_4, K_n-e or K_1 + union of >= 2 cliques",
                    (pd == n - 1) == in_pd_n_minus_1_family(g),
                    f"{_label(g)}: pd_s={pd}",
                )
    return report


def _family_pd(report: SuiteReport, name: str, spec: str, want: int | None = None):
    g = generate(spec)
    d = all_pairs_distances(g)
    pd = _pd_checked(report, g, d)
    want = expected_pds(spec) if want is None else want
    report.check(name, pd == want, f"{spec}: pd_s={pd}, expected {want}")
    return g, d, pd


def verify_closed_formulas(seed: int = 2024) -> SuiteReport:
    report = SuiteReport("formulas")
    for n in range(2, 13):
        _family_pd(report, "pd_s(P_n) = 2", f"path:n={n}", 2)
    for n in range(3, 13):
        _family_pd(report, "pd_s(C_n) = 3", f"cycle:n={n}", 3)
    for n in range(2, 9):
        _family_pd(report, "pd_s(K_n) = n", f"complete:n={n}", n)
    rng = np.random.default_rng(seed)
    for _ in range(20):
        n = int(rng.integers(3, 13))
        s = int(rng.integers(0, 2**31))
        g = random_tree(n, s)
        _family_pd(report, "pd_s(T) = number of leaves", f"tree:n={n},seed={s}", len(end_vertices(g)))
    made = 0
    while made < 10:
        blocks, hi, s = int(rng.integers(2, 6)), int(rng.integers(2, 5)), int(rng.integers(0, 2**31))
        g = random_block_graph(blocks, 2, hi, s)
        if g.n > 12:
            continue
        made += 1
        _family_pd(report, "pd_s(block graph) = n - c",
                   f"block_random:blocks={blocks},min_size=2,max_size={hi},seed={s}",
                   g.n - len(cut_vertices(g)))
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            _family_pd(report, "pd_s(P_m x P_n) = 3", f"grid:m={m},n={n}", 3)
    _family_pd(report, "pd_s(W_1,4) = 3", "wheel:r=4", 3)
    for r in range(5, 10):
        _family_pd(report, "pd_s(W_1,r) = ceil(r/2), r >= 5", f"wheel:r={r}", (r + 1) // 2)
    _family_pd(report, "pd_s(F_1,3) = pd_s(F_1,4) = 3", "fan:r=3", 3)
    _family_pd(report, "pd_s(F_1,3) = pd_s(F_1,4) = 3", "fan:r=4", 3)
    for r in range(5, 10):
        _family_pd(report, "pd_s(F_1,r) = ceil(r/2), r >= 5", f"fan:r={r}", (r + 1) // 2)
    return report


def _components(g: Graph) -> list[list[int]]:
    seen, comps = set(), []
    for v in range(g.n):
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def clique_component_profile(g: Graph) -> list[int] | None:
    """Sorted component orders if every component is complete, else ``None``."""
    sizes = []
    for comp in _components(g):
        if not is_complete(induced_subgraph(g, comp)):
            return None
        sizes.append(len(comp))
    return sorted(sizes)


def verify_c1_family() -> SuiteReport:
    report = SuiteReport("c1-family")
    for r in (2, 3):
        for t in range(4, 8):
            spec = f"c1:r={r},t={t}"
            g, d, pd = _family_pd(report, "pd_s(G(r,t)) = r + 1", spec, r + 1)
            dims = strong_metric_dimension(g, d).value
            brute = brute_force_strong_metric_dimension(g, d).value
            want = expected_dims(spec)
            report.check("dim_s(G(r,t)) = r + floor((t-1)/2)", dims == want == brute,
                         f"{spec}: dim_s={dims} (brute {brute}), expected {want}")
            sr = strong_resolving_graph(g, d).graph
            if t % 2 == 0:
                profile = clique_component_profile(sr)
                want_profile = sorted([r + 1] + [2] * ((t - 2) // 2))
                name = "G_SR(G(r,4)) = K_{r+1} + K_2" if t == 4 else "G_SR(G(r,t even)) = K_{r+1} + (t-2)/2 K_2"
                report.check(name, profile == want_profile,
                             f"{spec}: profile {profile}, expected {want_profile}")
    return report


def verify_realizability() -> SuiteReport:
    report = SuiteReport("realizability")
    cases = []
    for n in range(3, 10):
        for r in range(2, n):
            cases.append(("comet(n,r): pd_s = r, dim_s = r - 1", f"comet:n={n},r={r}"))
    for r in (3, 4):
        for n in range(r + 3, 12):
            cases.append(("realization_A(r,n): pd_s = dim_s = r", f"realization_A:r={r},n={n}"))
    for r, t, n in ((3, 4, 10), (3, 5, 12), (4, 5, 12)):
        cases.append(("realization_B(r,t,n): pd_s = r, dim_s = t", f"realization_B:r={r},t={t},n={n}"))
    for name, spec in cases:
        g = generate(spec)
        d = all_pairs_distances(g)
        pd = _pd_checked(report, g, d)
        dims = strong_metric_dimension(g, d).value
        report.check("generated order matches", g.n == parse_spec(spec).params["n"], spec)
        report.check(name, (pd, dims) == (expected_pds(spec), expected_dims(spec)),
                     f"{spec}: pd_s={pd}, dim_s={dims}")
    return report


def verify_srg_shapes(seed: int = 7) -> SuiteReport:
    report = SuiteReport("srg-shapes")

    def sr(g):
        return strong_resolving_graph(g, all_pairs_distances(g)).graph

    def union_k2(k):
        g = complete_graph(2)
        for _ in range(k - 1):
            g = disjoint_union(g, complete_graph(2))
        return g

    for n in range(2, 7):
        report.check("(K_n)_SR = K_n", are_isomorphic(sr(complete_graph(n)), complete_graph(n)), f"n={n}")
    rng = np.random.default_rng(seed)
    for _ in range(10):
        n = int(rng.integers(3, 11))
        t = random_tree(n, int(rng.integers(0, 2**31)))
        leaves = len(end_vertices(t))
        report.check("(T)_SR = K_l(T)", are_isomorphic(sr(t), complete_graph(leaves)), _label(t))
    for k in range(2, 5):
        report.check("(C_2k)_SR = k K_2", are_isomorphic(sr(cycle_graph(2 * k)), union_k2(k)), f"k={k}")
    for k in range(1, 5):
        c = cycle_graph(2 * k + 1)
        report.check("(C_2k+1)_SR = C_2k+1", are_isomorphic(sr(c), c), f"k={k}")
    q3 = hypercube_graph(3)
    report.check("(Q_3)_SR = 4 K_2", are_isomorphic(sr(q3), union_k2(4)), "Q_3")
    report.check("Q_3 is 2-antipodal", is_two_antipodal(q3, all_pairs_distances(q3)), "Q_3")
    for s in range(10):
        g = random_block_graph(int(rng.integers(2, 5)), 2, 4, int(rng.integers(0, 2**31)))
        if g.n > 10:
            continue
        c = len(cut_vertices(g))
        report.check("(block graph)_SR = K_{n-c}", are_isomorphic(sr(g), complete_graph(g.n - c)), _label(g))
    return report


def unicyclic_corpora(seed: int = 11, samples: int = 50) -> dict[str, list[str]]:
    """Seeded unicyclic instances grouped by terminal structure.

    An instance may sit in several groups (every all-majors instance also has
    ``|tau| >= 2``).
    """
    rng = np.random.default_rng(seed)
    want = {"tau>=2": samples, "tau=1": 20, "all-majors": 15, "t=3 single major": 10}
    groups: dict[str, list[str]] = {k: [] for k in want}
    shapes = ("", ",t_min={lo}", ",all_majors=1", ",t_min=3,t_max=3")
    tries = 0
    while any(len(groups[k]) < want[k] for k in want) and tries < 100000:
        n = int(rng.integers(5, 13))
        s = int(rng.integers(0, 2**31))
        spec = f"unicyclic_random:n={n},seed={s}" + shapes[tries % 4].format(lo=max(3, n - 4))
        tries += 1
        try:
            g = generate(spec)
        except ValueError:
            continue
        st = unicyclic_analysis(g, all_pairs_distances(g))
        keys = []
        if st.tau == 1:
            keys.append("tau=1")
        if st.tau >= 2:
            keys.append("tau>=2")
            if len(st.majors) == st.t:
                keys.append("all-majors")
            if st.t == 3 and len(st.majors) == 1:
                keys.append("t=3 single major")
        for key in keys:
            if len(groups[key]) < want[key]:
                groups[key].append(spec)
    return groups


def verify_unicyclic(seed: int = 11, samples: int = 50) -> SuiteReport:
    report = SuiteReport("unicyclic")
    groups = unicyclic_corpora(seed, samples)
    for key, specs in groups.items():
        report.check(f"corpus size ({key})", len(specs) > 0, key)
        for spec in specs:
            g = generate(spec)
            d = all_pairs_distances(g)
            st = unicyclic_analysis(g, d)
            pd = _pd_checked(report, g, d)
            part = unicyclic_partition(g, d)
            verified = is_strong_resolving_partition(g, d, part)
            if key == "tau>=2":
                report.check("|tau| <= pd_s <= |tau| + 2", st.tau <= pd <= st.tau + 2,
                             f"{spec}: tau={st.tau}, pd_s={pd}")
                report.check("unicyclic partition verified, size <= |tau| + 2",
                             verified and len(part) <= st.tau + 2,
                             f"{spec}: tau={st.tau}, size={len(part)}")
            elif key == "tau=1":
                report.check("|tau| = 1 implies pd_s = 3", pd == 3, f"{spec}: pd_s={pd}")
                report.check("unicyclic partition verified, size 3", verified and len(part) == 3,
                             f"{spec}: size={len(part)}")
            elif key == "all-majors":
                report.check("all cycle vertices major implies pd_s = |tau|", pd == st.tau,
                             f"{spec}: tau={st.tau}, pd_s={pd}")
            else:
                report.check("t = 3, one major vertex implies pd_s = |tau| + 2", pd == st.tau + 2,
                             f"{spec}: tau={st.tau}, pd_s={pd}")
            report.check("expected_pds agrees where defined",
                         expected_pds(spec) in (None, pd), f"{spec}: pd_s={pd}")
    return report


def verify_bounds(samples: int = 300, seed: int = 5, n_lo: int = 4, n_hi: int = 9) -> SuiteReport:
    report = SuiteReport("bounds")
    for g in random_corpus(samples, seed, n_lo, n_hi):
        d = all_pairs_distances(g)
        pd = _pd_checked(report, g, d)
        sr = strong_resolving_graph(g, d).graph
        omega = clique_number(sr).value
        dims = strong_metric_dimension(g, d).value
        diam = diameter(g, d)
        label = f"{_label(g)}: omega={omega} pd_s={pd} dim_s={dims} D={diam}"
        report.check("omega(G_SR) <= pd_s", omega <= pd, label)
        report.check("pd_s <= dim_s + 1", pd <= dims + 1, label)
        report.check("pd_s <= n - D + 1", pd <= g.n - diam + 1, label)
        if omega == 2 and not is_path(g):
            report.check("non-path with omega(G_SR) = 2 has pd_s >= 3", pd >= 3, label)
        if g.n >= 5 and has_special_induced_subgraph(g):
            report.check("induced C_5, S_2,3 or K_1+C_4 implies pd_s <= n - 2", pd <= g.n - 2, label)
        report.check("simplicial vertices lie in the boundary",
                     set(simplicial_vertices(g)) <= set(boundary(g, d)), label)
    return report


def verify_heuristics(seed: int = 5, samples: int = 300) -> SuiteReport:
    """Every heuristic partition verifies and upper-bounds the exact value."""
    report = SuiteReport("heuristics")
    graphs = [(None, g) for g in random_corpus(samples, seed, 4, 9)]
    family_specs = (
        [f"path:n={n}" for n in range(2, 13)] + [f"cycle:n={n}" for n in range(3, 13)]
        + [f"complete:n={n}" for n in range(2, 9)]
        + [f"grid:m={m},n={n}" for m in (2, 3, 4) for n in (2, 3, 4)]
        + [f"wheel:r={r}" for r in range(4, 10)] + [f"fan:r={r}" for r in range(3, 10)]
        + [f"c1:r={r},t={t}" for r in (2, 3) for t in range(4, 8)]
        + [f"sphere:k={k},r={r}" for k in (2, 3) for r in (2, 3)]
    )
    graphs += [(s, generate(s)) for s in family_specs]
    for specs in unicyclic_corpora().values():
        graphs += [(s, generate(s)) for s in specs]
    for spec, g in graphs:
        d = all_pairs_distances(g)
        label = spec or _label(g)
        pd = exhaustive_strong_partition_dimension(g, d).value
        emitted = [("p1_partition", p1_partition(g, d)), ("p2_partition", p2_partition(g, d))]
        try:
            emitted.append(("unicyclic_partition", unicyclic_partition(g, d)))
        except DomainError:
            pass
        for name, part in emitted:
            if part is None:
                continue
            report.check(f"{name} verifies", is_strong_resolving_partition(g, d, part), label)
            report.check(f"{name} size >= pd_s", len(part) >= pd, f"{label}: size {len(part)}, pd_s {pd}")
    return report


SUITES = {
    "oracle": verify_oracle,
    "characterizations": verify_characterizations,
    "formulas": lambda: verify_closed_formulas().merge(verify_c1_family()).merge(verify_realizability()),
    "bounds": verify_bounds,
    "srg-shapes": verify_srg_shapes,
    "unicyclic": verify_unicyclic,
    "heuristics": verify_heuristics,
}
