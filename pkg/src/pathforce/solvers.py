"""Exact path and cycle solvers with explicit witnesses.

Every search here is exhaustive: a None result is a refutation, not a
timeout. Running out of budget raises SearchBudgetExceeded instead, so the
three outcomes (witness, refuted, inconclusive) can never be confused.

Searches are deterministic. Vertices are tried in ascending index unless a
documented heuristic order applies, and the first witness found is returned.
Witnesses are re-validated against the host graph before being returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .canonical import certificate_adj
from .graph import (
    BipartitionView,
    CycleWitness,
    Graph,
    PathWitness,
    biconnected_components,
    bits,
    build_graph,
    connected_components,
    high_degree_vertices,
    induced_subgraph,
    is_connected,
    mask_of,
)

SUBSET_DP_CAP = 24
_AUTO_DP_MAX = 18
_COMPONENT_DEDUP_MAX = 32


class SearchBudgetExceeded(Exception):
    """Search hit its node or time limit before reaching a conclusion."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class HypothesisViolation(ValueError):
    """Input fails the size or connectivity hypothesis the caller requested."""


class LemmaViolationError(RuntimeError):
    """An exhaustive search refuted a guarantee that holds unconditionally
    under checked hypotheses. Firing means a solver bug, not a math fact."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a single solver call. None means unlimited."""

    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class _Meter:
    """Mutable per-call counter enforcing a SearchBudget."""

    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, budget: SearchBudget | None):
        self.nodes = 0
        self.node_limit = budget.node_limit if budget else None
        self.deadline = None
        if budget is not None and budget.time_limit is not None:
            self.deadline = time.monotonic() + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchBudgetExceeded(
                f"node limit {self.node_limit} exhausted", self.nodes)
        # time checked every 1024 nodes to keep the hot loop cheap
        if self.deadline is not None and self.nodes & 1023 == 0:
            if time.monotonic() > self.deadline:
                raise SearchBudgetExceeded(
                    f"time limit exhausted after {self.nodes} nodes", self.nodes)


@dataclass(frozen=True)
class LongestPathResult:
    length: int
    witness: PathWitness | None
    optimal: bool


@dataclass(frozen=True)
class PathCover:
    """Pairwise vertex-disjoint paths, typically covering a required set."""

    paths: tuple[PathWitness, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))

    def vertex_mask(self) -> int:
        out = 0
        for p in self.paths:
            out |= mask_of(p.vertices)
        return out

    def validate(self, g: Graph, required: int = 0) -> None:
        seen = 0
        for p in self.paths:
            p.validate(g)
            pm = mask_of(p.vertices)
            if pm & seen:
                raise ValueError("cover paths are not pairwise disjoint")
            seen |= pm
        if required & ~seen:
            missing = next(bits(required & ~seen))
            raise ValueError(f"cover misses required vertex {missing}")


def _reach_mask(adj: tuple[int, ...], seeds: int, allowed: int) -> int:
    """Vertices of `allowed` reachable from `seeds` inside `allowed`."""
    reach = seeds & allowed
    frontier = reach
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~reach
        reach |= frontier
    return reach


def _path_search_component(g: Graph, comp: int, m: int, meter: _Meter) -> list[int] | None:
    """Exact search for a path on m vertices inside one component.

    Branches once per twin class at each node: vertices with equal open
    neighborhoods, or equal closed neighborhoods, are swapped by an
    automorphism fixing everything else, so trying one suffices.
    """
    adj = g.adj
    stack: list[int] = []

    def dfs(v: int, visited: int) -> bool:
        meter.tick()
        stack.append(v)
        if len(stack) == m:
            return True
        visited |= 1 << v
        cand = adj[v] & comp & ~visited
        need = m - len(stack)
        if need > 2:
            reach = _reach_mask(adj, cand, comp & ~visited)
            if reach.bit_count() < need:
                stack.pop()
                return False
        tried_open: set[int] = set()
        tried_closed: set[int] = set()
        for u in bits(cand):
            ko = adj[u]
            kc = ko | 1 << u
            if ko in tried_open or kc in tried_closed:
                continue
            tried_open.add(ko)
            tried_closed.add(kc)
            if dfs(u, visited):
                return True
        stack.pop()
        return False

    tried_open: set[int] = set()
    tried_closed: set[int] = set()
    for s in bits(comp):
        ko = adj[s]
        kc = ko | 1 << s
        if ko in tried_open or kc in tried_closed:
            continue
        tried_open.add(ko)
        tried_closed.add(kc)
        if dfs(s, 0):
            return stack
    return None


def contains_path(g: Graph, m: int, budget: SearchBudget | None = None) -> PathWitness | None:
    """Witness for a path on exactly m vertices, or None after exhaustion."""
    if m < 1:
        raise ValueError("target path vertex count must be >= 1")
    if m > g.n:
        return None
    if m == 1:
        wit = PathWitness((0,))
        wit.validate(g)
        return wit
    meter = _Meter(budget)
    comps = [c for c in connected_components(g) if c.bit_count() >= m]
    comps.sort(key=lambda c: c & -c)
    # isomorphic components hold the same paths; search one per class
    dedup = len(comps) > 1 and all(c.bit_count() <= _COMPONENT_DEDUP_MAX for c in comps)
    seen: set[tuple[int, int]] = set()
    for comp in comps:
        if dedup:
            sub, _ = induced_subgraph(g, comp)
            key = (sub.n, certificate_adj(sub.n, sub.adj))
            if key in seen:
                continue
            seen.add(key)
        found = _path_search_component(g, comp, m, meter)
        if found is not None:
            wit = PathWitness(tuple(found))
            wit.validate(g)
            assert len(wit.vertices) == m
            return wit
    return None


def _dp_component(sub: Graph) -> tuple[int, list[int]]:
    """Exact longest path in a connected graph by subset dynamic programming.

    State: for each vertex subset, the bitmask of endpoints of paths covering
    exactly that subset. Layered by subset size, full table kept for
    reconstruction.
    """
    n = sub.n
    adj = sub.adj
    table: dict[int, int] = {1 << v: 1 << v for v in range(n)}
    layer = dict(table)
    last_layer = layer
    while layer:
        grown: dict[int, int] = {}
        for mask, ends in layer.items():
            for e in bits(ends):
                for u in bits(adj[e] & ~mask):
                    key = mask | 1 << u
                    grown[key] = grown.get(key, 0) | 1 << u
        if grown:
            table.update(grown)
            last_layer = grown
        layer = grown
    final_mask = min(last_layer)
    end = last_layer[final_mask] & -last_layer[final_mask]
    e = end.bit_length() - 1
    path = [e]
    mask = final_mask
    while mask.bit_count() > 1:
        prev = mask ^ 1 << e
        prev_ends = table[prev] & adj[e]
        e = (prev_ends & -prev_ends).bit_length() - 1
        path.append(e)
        mask = prev
    path.reverse()
    return len(path), path


def _longest_path_dp(g: Graph) -> tuple[int, list[int]]:
    best_len = 0
    best_path: list[int] = []
    comps = sorted(connected_components(g), key=lambda c: c & -c)
    for comp in comps:
        if comp.bit_count() <= best_len:
            continue
        sub, ids = induced_subgraph(g, comp)
        length, local = _dp_component(sub)
        if length > best_len:
            best_len = length
            best_path = [ids[v] for v in local]
    return best_len, best_path


def longest_path(g: Graph, budget: SearchBudget | None = None,
                 engine: str = "auto") -> LongestPathResult:
    """Maximum path vertex count with witness.

    Engines: "dp" is exact subset DP (n capped at SUBSET_DP_CAP); "dfs" is
    iterative deepening over contains_path, exact when the budget allows and
    marked non-optimal otherwise; "auto" picks DP for small graphs.
    """
    if engine not in ("auto", "dp", "dfs"):
        raise ValueError(f"unknown engine: {engine}")
    if g.n == 0:
        return LongestPathResult(0, None, True)
    if engine == "dp" or (engine == "auto" and g.n <= _AUTO_DP_MAX):
        if g.n > SUBSET_DP_CAP:
            raise ValueError(f"dp engine limited to n <= {SUBSET_DP_CAP}")
        length, verts = _longest_path_dp(g)
        wit = PathWitness(tuple(verts))
        wit.validate(g)
        return LongestPathResult(length, wit, True)
    meter = _Meter(budget)
    best: PathWitness | None = None
    length = 0
    try:
        for m in range(1, g.n + 1):
            comps = [c for c in connected_components(g) if c.bit_count() >= m]
            comps.sort(key=lambda c: c & -c)
            found = None
            for comp in comps:
                found = _path_search_component(g, comp, m, meter)
                if found is not None:
                    break
            if found is None:
                return LongestPathResult(length, best, True)
            best = PathWitness(tuple(found))
            best.validate(g)
            length = m
        return LongestPathResult(length, best, True)
    except SearchBudgetExceeded:
        return LongestPathResult(length, best, False)


def _block_longest_cycle(sub: Graph, meter: _Meter, floor: int) -> tuple[int, list[int] | None]:
    """Longest cycle in a 2-connected block, if longer than floor."""
    n = sub.n
    adj = sub.adj
    best_len = floor
    best: list[int] | None = None
    stack: list[int] = []

    def dfs(v: int, visited: int, allowed: int, s: int) -> None:
        nonlocal best_len, best
        meter.tick()
        if len(stack) + (allowed & ~visited).bit_count() <= best_len:
            return
        for u in bits(adj[v] & allowed & ~visited):
            stack.append(u)
            if len(stack) >= 3 and adj[u] >> s & 1 and stack[1] < stack[-1] \
                    and len(stack) > best_len:
                best_len = len(stack)
                best = stack.copy()
            dfs(u, visited | 1 << u, allowed, s)
            stack.pop()

    full = (1 << n) - 1
    for s in range(n):
        if n - s <= best_len:
            break
        allowed = full & ~((1 << s) - 1)
        stack.append(s)
        dfs(s, 1 << s, allowed, s)
        stack.pop()
    return best_len, best


def longest_cycle(g: Graph, budget: SearchBudget | None = None) -> tuple[int, CycleWitness | None]:
    """Exact circumference with witness; (0, None) for forests.

    Every cycle lives inside one biconnected block, so blocks are searched
    independently.
    """
    meter = _Meter(budget)
    best_len = 0
    best: CycleWitness | None = None
    blocks = [b for b in biconnected_components(g) if b.bit_count() >= 3]
    blocks.sort(key=lambda b: b & -b)
    for bmask in blocks:
        if bmask.bit_count() <= best_len:
            continue
        sub, ids = induced_subgraph(g, bmask)
        length, local = _block_longest_cycle(sub, meter, best_len)
        if local is not None and length > best_len:
            best_len = length
            best = CycleWitness(tuple(ids[v] for v in local))
    if best is not None:
        best.validate(g)
    return best_len, best


def find_cycle_through_X(b: BipartitionView, budget: SearchBudget | None = None) -> CycleWitness | None:
    """Cycle containing every X-vertex, or None after exhaustive refutation.

    Bipartite cycles alternate sides, so a cycle through all of X has exactly
    |X| vertices per side: an X-ordering interleaved with distinct Y
    connectors. X is branched in ascending-degree order (most constrained
    first); connectors in ascending index.
    """
    g = b.graph
    adj = g.adj
    xs = sorted(bits(b.x_mask), key=lambda v: (g.degree(v), v))
    if len(xs) < 2:
        raise ValueError("X must contain at least 2 vertices")
    meter = _Meter(budget)
    x0 = xs[0]
    y_all = b.y_mask
    seq: list[int] = [x0]

    def dfs(cur: int, rem: int, used_y: int) -> bool:
        meter.tick()
        avail = y_all & ~used_y
        if rem == 0:
            close = adj[cur] & adj[x0] & avail
            if close:
                seq.append((close & -close).bit_length() - 1)
                return True
            return False
        union = adj[cur] | adj[x0]
        for r in bits(rem):
            if (adj[r] & avail).bit_count() < 2:
                return False
            union |= adj[r]
        if (union & avail).bit_count() < rem.bit_count() + 1:
            return False
        if not adj[cur] & avail or not adj[x0] & avail:
            return False
        for nx in xs:
            if not rem >> nx & 1:
                continue
            for y in bits(adj[cur] & adj[nx] & avail):
                seq.append(y)
                seq.append(nx)
                if dfs(nx, rem ^ 1 << nx, used_y | 1 << y):
                    return True
                seq.pop()
                seq.pop()
        return False

    if dfs(x0, mask_of(xs[1:]), 0):
        wit = CycleWitness(tuple(seq))
        wit.validate(g, bipartite=True)
        assert b.x_mask & ~mask_of(seq) == 0
        return wit
    return None


def find_path_through_X(b: BipartitionView, mode: str,
                        budget: SearchBudget | None = None,
                        require_hypothesis: bool = True) -> PathWitness | None:
    """Path containing every X-vertex, by apex reduction to a cycle search.

    Modes name the hypothesis profile that guarantees existence:
      jackson    |X| <= d+1 and |Y| <= 2d-1
      essential  connected and |X| <= d and |Y| <= 3d-3
    with d the minimum X-degree. Under a satisfied profile an exhaustive miss
    raises LemmaViolationError. With require_hypothesis=False a violating
    instance is searched anyway and may honestly return None.
    """
    if mode not in ("jackson", "essential"):
        raise ValueError(f"unknown mode: {mode}")
    g = b.graph
    xs = list(bits(b.x_mask))
    if not xs:
        raise ValueError("X must be non-empty")
    d = b.min_x_degree()
    nx = len(xs)
    ny = b.y_mask.bit_count()
    if mode == "jackson":
        ok = nx <= d + 1 and ny <= 2 * d - 1
    else:
        ok = is_connected(g) and nx <= d and ny <= 3 * d - 3
    if not ok and require_hypothesis:
        raise HypothesisViolation(
            f"{mode} hypothesis violated: |X|={nx}, |Y|={ny}, min X-degree {d}"
            + ("" if mode == "jackson" or is_connected(g) else ", graph disconnected"))
    if nx == 1:
        wit = PathWitness((xs[0],))
        wit.validate(g)
        return wit
    apex = g.n
    aug = build_graph(g.n + 1, g.edges() + [(x, apex) for x in xs])
    baug = BipartitionView(aug, b.x_mask, b.y_mask | 1 << apex)
    cyc = find_cycle_through_X(baug, budget)
    if cyc is None:
        if ok:
            raise LemmaViolationError(
                f"{mode} path guarantee failed on a hypothesis-satisfying "
                "instance (exhaustive search)")
        return None
    verts = list(cyc.vertices)
    if apex in verts:
        i = verts.index(apex)
        path = verts[i + 1:] + verts[:i]
    else:
        # the cycle avoids the apex and lives in g; cut its closing edge
        path = verts
    wit = PathWitness(tuple(path))
    wit.validate(g)
    assert b.x_mask & ~mask_of(path) == 0
    return wit


def path_cover_of_X(b: BipartitionView, t: int,
                    budget: SearchBudget | None = None,
                    require_hypothesis: bool = True) -> PathCover | None:
    """At most t+1 disjoint paths jointly containing X.

    Hypothesis (guaranteeing existence): |X| <= d+t and |Y| <= 3d+2t-3 with d
    the minimum X-degree. Isolated Y-vertices are deleted, t apex vertices
    joined to all of X are added, a single path through X is found there, and
    removing the apexes splits it into the cover.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    g = b.graph
    if not b.x_mask:
        raise ValueError("X must be non-empty")
    d = b.min_x_degree()
    nx = b.x_mask.bit_count()
    ny = b.y_mask.bit_count()
    ok = nx <= d + t and ny <= 3 * d + 2 * t - 3
    if not ok and require_hypothesis:
        raise HypothesisViolation(
            f"path cover hypothesis violated: |X|={nx} vs d+t={d + t}, "
            f"|Y|={ny} vs 3d+2t-3={3 * d + 2 * t - 3}")
    iso = 0
    for y in bits(b.y_mask):
        if not g.adj[y]:
            iso |= 1 << y
    sub, ids = induced_subgraph(g, g.vertex_mask() & ~iso)
    x_local = mask_of(i for i, orig in enumerate(ids) if b.x_mask >> orig & 1)
    apexes = range(sub.n, sub.n + t)
    aug = build_graph(sub.n + t,
                      sub.edges() + [(x, a) for a in apexes for x in bits(x_local)])
    y_local = aug.vertex_mask() & ~x_local
    baug = BipartitionView(aug, x_local, y_local)
    inner = find_path_through_X(baug, "essential", budget, require_hypothesis=ok)
    if inner is None:
        return None
    segments: list[list[int]] = [[]]
    for v in inner.vertices:
        if v >= sub.n:
            if segments[-1]:
                segments.append([])
        else:
            segments[-1].append(ids[v])
    if not segments[-1]:
        segments.pop()
    paths = []
    for seg in segments:
        # trim to X end-vertices; every segment contains an X-vertex
        while not b.x_mask >> seg[0] & 1:
            seg.pop(0)
        while not b.x_mask >> seg[-1] & 1:
            seg.pop()
        paths.append(PathWitness(tuple(seg)))
    cover = PathCover(tuple(paths))
    cover.validate(g, required=b.x_mask)
    assert len(cover.paths) <= t + 1
    return cover


def merge_high_end_paths(g: Graph, d: int, family: PathCover,
                         budget: SearchBudget | None = None) -> PathWitness:
    """Single path with high-degree ends containing every family vertex.

    Requires |V(g)| <= 2d+1 and a non-empty family of disjoint paths whose
    end-vertices all have degree >= d. Existence is unconditional under these
    hypotheses, so exhaustive failure raises LemmaViolationError.
    """
    if g.n > 2 * d + 1:
        raise HypothesisViolation(f"graph has {g.n} > 2d+1 = {2 * d + 1} vertices")
    if not family.paths:
        raise ValueError("family must contain at least one path")
    high = high_degree_vertices(g, d)
    required = 0
    for p in family.paths:
        p.validate(g)
        pm = mask_of(p.vertices)
        if pm & required:
            raise ValueError("family paths are not pairwise disjoint")
        required |= pm
        for e in (p.vertices[0], p.vertices[-1]):
            if not high >> e & 1:
                raise HypothesisViolation(
                    f"path end {e} has degree {g.degree(e)} < d={d}")
    meter = _Meter(budget)
    adj = g.adj
    full = g.vertex_mask()
    stack: list[int] = []

    def dfs(v: int, visited: int) -> bool:
        meter.tick()
        stack.append(v)
        visited |= 1 << v
        rem = required & ~visited
        if not rem and high >> v & 1:
            return True
        reach = _reach_mask(adj, adj[v] & ~visited, full & ~visited)
        if rem & ~reach or (not rem and not reach & high):
            stack.pop()
            return False
        for u in bits(adj[v] & ~visited):
            if dfs(u, visited):
                return True
        stack.pop()
        return False

    for s in bits(high):
        if dfs(s, 0):
            wit = PathWitness(tuple(stack))
            wit.validate(g)
            assert required & ~mask_of(stack) == 0
            assert high >> stack[0] & 1 and high >> stack[-1] & 1
            return wit
    raise LemmaViolationError(
        "high-end merge guarantee failed (exhaustive search)")
