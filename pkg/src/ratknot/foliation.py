"""Combinatorial characteristic foliations and elliptic/hyperbolic cancellation.

A :class:`FoliationGraph` records the signed singular points of a generic
characteristic foliation on a rational Seifert surface together with the
flow lines joining them. Positive elliptic points are sources, negative
elliptic points are sinks, every hyperbolic point has two incoming (stable)
and two outgoing (unstable) separatrices, and the flow leaves the surface
through its boundary, modelled as the virtual sink ``BOUNDARY``.

Graphs are immutable; every rewrite returns a new graph.

Text format, one record per line::

    N <id> <e|h> <+|->
    E <from> <to>

Blank lines and ``#`` comments are ignored. Edge ids are the 0-based
positions of the ``E`` lines.
"""
from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .invariants import SingularityCounts, sl_from_counts

BOUNDARY = "∂"

ELLIPTIC = "e"
HYPERBOLIC = "h"


class FoliationError(ValueError):
    pass


class CancellationError(FoliationError):
    """A rewrite whose displaced flow lines have nowhere valid to go."""


@dataclass(frozen=True)
class Node:
    id: str
    kind: str
    sign: str

    def __post_init__(self):
        if self.kind not in (ELLIPTIC, HYPERBOLIC):
            raise FoliationError(f"node {self.id}: kind must be 'e' or 'h', got {self.kind!r}")
        if self.sign not in ("+", "-"):
            raise FoliationError(f"node {self.id}: sign must be '+' or '-', got {self.sign!r}")
        if not self.id or self.id == BOUNDARY or any(ch.isspace() for ch in self.id):
            raise FoliationError(f"invalid node id {self.id!r}")


@dataclass(frozen=True)
class FoliationGraph:
    nodes: tuple[Node, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        validate(self)

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise FoliationError(f"no node {node_id!r}")

    def node_map(self) -> dict[str, Node]:
        return {n.id: n for n in self.nodes}

    def successors(self, node_id: str) -> list[str]:
        return [v for u, v in self.edges if u == node_id]

    def predecessors(self, node_id: str) -> list[str]:
        return [u for u, v in self.edges if v == node_id]


def validate(g: FoliationGraph) -> None:
    ids = [n.id for n in g.nodes]
    dup = [i for i, k in Counter(ids).items() if k > 1]
    if dup:
        raise FoliationError(f"duplicate node ids: {dup}")
    nodes = {n.id: n for n in g.nodes}
    out_deg: Counter = Counter()
    in_deg: Counter = Counter()
    for u, v in g.edges:
        for end in (u, v):
            if end != BOUNDARY and end not in nodes:
                raise FoliationError(f"edge {u}->{v} references unknown node {end!r}")
        if u == BOUNDARY:
            raise FoliationError("the boundary only receives flow")
        if u == v and nodes[u].kind != HYPERBOLIC:
            raise FoliationError(f"self-loop on elliptic node {u}")
        out_deg[u] += 1
        in_deg[v] += 1
    for n in g.nodes:
        if n.kind == HYPERBOLIC:
            if in_deg[n.id] != 2 or out_deg[n.id] != 2:
                raise FoliationError(
                    f"hyperbolic node {n.id} has {in_deg[n.id]} in / {out_deg[n.id]} out separatrices, need 2/2"
                )
        elif n.sign == "+" and in_deg[n.id]:
            raise FoliationError(f"positive elliptic node {n.id} is a source but has inbound flow")
        elif n.sign == "-" and out_deg[n.id]:
            raise FoliationError(f"negative elliptic node {n.id} is a sink but has outbound flow")


def counts(g: FoliationGraph) -> SingularityCounts:
    tally = Counter((n.kind, n.sign) for n in g.nodes)
    return SingularityCounts(
        e_plus=tally[ELLIPTIC, "+"],
        e_minus=tally[ELLIPTIC, "-"],
        h_plus=tally[HYPERBOLIC, "+"],
        h_minus=tally[HYPERBOLIC, "-"],
    )


# Rewrites are written once, in "oriented" coordinates where the elliptic
# point being cancelled or created is a sink. For negative pairs that is the
# real flow; for positive pairs every edge is reversed. In oriented
# coordinates the boundary is a universal sink going forward (negative
# case) or a universal source (positive case).


class _Oriented:
    def __init__(self, g: FoliationGraph, sign: str):
        self.nodes = g.node_map()
        self.forward = sign == "-"
        self.edges = [self.flip(e) for e in g.edges]

    def flip(self, edge: tuple[str, str]) -> tuple[str, str]:
        return edge if self.forward else (edge[1], edge[0])

    def is_hyperbolic(self, x: str) -> bool:
        return x != BOUNDARY and self.nodes[x].kind == HYPERBOLIC

    def is_terminal(self, x: str) -> bool:
        """Oriented sink: may absorb any number of extra flow lines."""
        if x == BOUNDARY:
            return self.forward
        n = self.nodes[x]
        return n.kind == ELLIPTIC and n.sign == ("-" if self.forward else "+")

    def is_origin(self, x: str) -> bool:
        """Oriented source: may emit any number of extra flow lines."""
        if x == BOUNDARY:
            return not self.forward
        n = self.nodes[x]
        return n.kind == ELLIPTIC and n.sign == ("+" if self.forward else "-")

    def search(self, edges, starts: Iterable[str], along: bool, accept) -> Optional[str]:
        """BFS through hyperbolic nodes, along or against the oriented flow."""
        queue = deque(starts)
        seen = set()
        while queue:
            x = queue.popleft()
            if x in seen:
                continue
            seen.add(x)
            if accept(x):
                return x
            if x == BOUNDARY or not self.is_hyperbolic(x):
                continue
            for u, v in edges:
                if along and u == x:
                    queue.append(v)
                elif not along and v == x:
                    queue.append(u)
        return None

    def _any(self, accept, removed) -> Optional[str]:
        # flow trapped on saddle cycles (implicit periodic orbits) is fed
        # from, or drained into, the first surviving elliptic point of the
        # right sign
        for x in self.nodes:
            if x not in removed and accept(x):
                return x
        return None

    def find_terminal(self, edges, starts, removed=frozenset()) -> str:
        t = self.search(edges, starts, True, self.is_terminal)
        if t is None:
            t = BOUNDARY if self.forward else self._any(self.is_terminal, removed)
        if t is None:
            raise CancellationError("no source left to feed the displaced separatrices")
        return t

    def find_origin(self, edges, starts, removed=frozenset()) -> str:
        s = self.search(edges, starts, False, self.is_origin)
        if s is None:
            s = BOUNDARY if not self.forward else self._any(self.is_origin, removed)
        if s is None:
            raise CancellationError("no source to feed the new hyperbolic point")
        return s

    def graph(self, nodes, edges) -> FoliationGraph:
        return FoliationGraph(tuple(nodes), tuple(self.flip(e) for e in edges))


def cancel_pair(g: FoliationGraph, e: str, h: str) -> FoliationGraph:
    """Cancel an elliptic point against a hyperbolic point of the same sign.

    The two must be joined by a direct edge. Both nodes disappear; the
    remaining stable separatrix of h is spliced onto its remaining unstable
    one, and any other flow line that ended (or started) at e or h is
    re-routed to the nearest sink (or source) downstream (upstream).

    Cancelling a negative pair always succeeds. Cancelling the last source
    of a graph whose saddles still need feeding raises CancellationError.
    """
    ne, nh = g.node(e), g.node(h)
    if ne.kind != ELLIPTIC or nh.kind != HYPERBOLIC:
        raise FoliationError(f"cancel_pair needs an elliptic and a hyperbolic node, got {ne.kind}/{nh.kind}")
    if ne.sign != nh.sign:
        raise FoliationError(f"cannot cancel {e}({ne.sign}) against {h}({nh.sign}): signs differ")
    o = _Oriented(g, ne.sign)
    try:
        leaf = o.edges.index((h, e))
    except ValueError:
        raise FoliationError(f"{e} and {h} are not joined by a leaf") from None
    rest = o.edges[:leaf] + o.edges[leaf + 1:]
    removed = {e, h}
    d = next(v for u, v in rest if u == h)
    stable = [u for u, v in rest if v == h and u not in removed]

    new = [(u, v) for u, v in rest if u not in removed and v not in removed]
    need_out = [u for u, v in rest if v in removed and u not in removed and o.is_hyperbolic(u)]
    need_in = [v for u, v in rest if u in removed and v not in removed and o.is_hyperbolic(v)]

    if d not in removed and stable:
        a = stable[0]
        new.append((a, d))
        if a in need_out:
            need_out.remove(a)
        if d in need_in:
            need_in.remove(d)
    for v in need_in:
        new.append((o.find_origin(new, [v], removed), v))
    for u in need_out:
        starts = [d] if d not in removed else []
        starts += [v for x, v in new if x == u]
        new.append((u, o.find_terminal(new, starts, removed)))

    nodes = [n for n in g.nodes if n.id not in removed]
    return o.graph(nodes, new)


def _fresh_id(taken: set[str], prefix: str) -> str:
    i = 0
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def add_canceling_pair(
    g: FoliationGraph,
    sign: str,
    attach: int,
    ids: Optional[tuple[str, str]] = None,
) -> FoliationGraph:
    """Insert an elliptic/hyperbolic pair of the given sign on edge ``attach``.

    The new hyperbolic point sits on the flow line, joined to the new
    elliptic point by a leaf. Its fourth separatrix runs to the nearest
    sink downstream (positive pair) or comes from the nearest source
    upstream (negative pair).
    """
    if sign not in ("+", "-"):
        raise FoliationError(f"sign must be '+' or '-', got {sign!r}")
    if not 0 <= attach < len(g.edges):
        raise FoliationError(f"no edge with id {attach}")
    taken = {n.id for n in g.nodes}
    if ids is None:
        e_id = _fresh_id(taken, "e")
        h_id = _fresh_id(taken | {e_id}, "h")
    else:
        e_id, h_id = ids
        if e_id in taken or h_id in taken or e_id == h_id:
            raise FoliationError(f"ids {ids} clash with existing nodes")
    o = _Oriented(g, sign)
    edges = list(o.edges)
    u, v = edges.pop(attach)
    s = o.find_origin(edges, [u])
    edges += [(u, h_id), (h_id, v), (h_id, e_id), (s, h_id)]
    nodes = list(g.nodes) + [Node(e_id, ELLIPTIC, sign), Node(h_id, HYPERBOLIC, sign)]
    return o.graph(nodes, edges)


@dataclass(frozen=True)
class Certificate:
    """A negative elliptic sink whose frontier has no negative hyperbolic point."""

    sink: str
    frontier: frozenset[str]


@dataclass(frozen=True)
class NormalizeResult:
    graph: FoliationGraph
    certificate: Optional[Certificate] = None
    cancellations: int = 0

    @property
    def overtwisted(self) -> bool:
        return self.certificate is not None


def basin_frontier(g: FoliationGraph, p: str) -> frozenset[str]:
    """Singular points whose flow lines run straight into the sink p."""
    return frozenset(u for u in g.predecessors(p))


def normalize(g: FoliationGraph, r: int = 1) -> NormalizeResult:
    """Cancel negative elliptic points against negative hyperbolic neighbours.

    Stops either with no negative elliptic point left, or at the first sink
    whose frontier carries only positive singularities, which is returned as
    an overtwisted certificate. ``r`` is only checked; the rewrite itself
    does not depend on it.
    """
    if r < 1:
        raise FoliationError(f"order must be >= 1, got {r}")
    done = 0
    while True:
        nodes = g.node_map()
        sinks = [n.id for n in g.nodes if n.kind == ELLIPTIC and n.sign == "-"]
        if not sinks:
            return NormalizeResult(g, None, done)
        p = sinks[0]
        frontier = basin_frontier(g, p)
        partners = sorted(x for x in frontier if nodes[x].kind == HYPERBOLIC and nodes[x].sign == "-")
        if not partners:
            return NormalizeResult(g, Certificate(p, frontier), done)
        g = cancel_pair(g, p, partners[0])
        done += 1


def graph_sl(g: FoliationGraph, r: int):
    return sl_from_counts(r, counts(g))


def parse_graph(text: str) -> FoliationGraph:
    nodes = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "N" and len(parts) == 4:
                nodes.append(Node(parts[1], parts[2], parts[3]))
            elif parts[0] == "E" and len(parts) == 3:
                edges.append((parts[1], parts[2]))
            else:
                raise FoliationError(f"cannot parse {raw!r}")
        except FoliationError as exc:
            raise FoliationError(f"line {lineno}: {exc}") from None
    return FoliationGraph(tuple(nodes), tuple(edges))


def dump_graph(g: FoliationGraph) -> str:
    lines = [f"N {n.id} {n.kind} {n.sign}" for n in g.nodes]
    lines += [f"E {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def random_graph(
    rng: random.Random,
    n_sources: int = 3,
    n_sinks: int = 2,
    n_saddles: int = 4,
    p_connection: float = 0.3,
    n_flows: int = 1,
) -> FoliationGraph:
    """A random valid graph, for property testing.

    Saddle stubs are paired into saddle connections with probability
    ``p_connection``; leftover stable stubs are fed from random sources and
    leftover unstable stubs drain into random sinks or the boundary.
    """
    n_sources = max(n_sources, 1)
    sources = [f"a{i}" for i in range(n_sources)]
    sinks = [f"b{i}" for i in range(n_sinks)]
    saddles = [f"h{i}" for i in range(n_saddles)]
    nodes = [Node(x, ELLIPTIC, "+") for x in sources]
    nodes += [Node(x, ELLIPTIC, "-") for x in sinks]
    nodes += [Node(x, HYPERBOLIC, rng.choice("+-")) for x in saddles]

    outs = [x for x in saddles for _ in range(2)]
    ins = [x for x in saddles for _ in range(2)]
    rng.shuffle(outs)
    rng.shuffle(ins)
    edges = []
    free_out, free_in = [], list(ins)
    for u in outs:
        candidates = [v for v in free_in if v != u]
        if candidates and rng.random() < p_connection:
            v = rng.choice(candidates)
            free_in.remove(v)
            edges.append((u, v))
        else:
            free_out.append(u)
    drains = sinks + [BOUNDARY]
    edges += [(u, rng.choice(drains)) for u in free_out]
    edges += [(rng.choice(sources), v) for v in free_in]
    edges += [(rng.choice(sources), rng.choice(drains)) for _ in range(n_flows)]
    rng.shuffle(edges)
    return FoliationGraph(tuple(nodes), tuple(edges))
