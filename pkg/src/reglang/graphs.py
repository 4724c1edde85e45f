"""Structural analysis of labeled graphs: strongly connected components,
cyclic periods, primitivity, and the global residue period used when
estimating limits along arithmetic progressions of word lengths.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .automata import LabeledGraph
from .errors import TrivialComponentError


@dataclass(frozen=True)
class ComponentReport:
    """SCC decomposition of a labeled graph.

    Components partition the vertex set.  A component is trivial when it
    is a single vertex without a self-loop (no cycle at all); trivial
    components carry period 1 by convention and are excluded from the
    residue-period lcm.
    """

    components: tuple  # of frozenset of vertices
    periods: tuple  # of int, aligned with components
    trivial: tuple  # of bool, aligned with components
    residue_period: int


def _tarjan(vertices, successors) -> list:
    """Iterative Tarjan; components returned as frozensets."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    out = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors(root)))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    pushed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                out.append(frozenset(component))
    return out


def _has_self_loop(graph: LabeledGraph, vertex) -> bool:
    return any(src == vertex and dst == vertex for src, _s, dst in graph.edges)


def _is_trivial(graph: LabeledGraph, component) -> bool:
    return len(component) == 1 and not _has_self_loop(graph, next(iter(component)))


def component_period(graph: LabeledGraph, component) -> int:
    """gcd of cycle lengths inside a strongly connected component.

    Computed as the gcd of (level[u] + 1 - level[v]) over internal edges
    u -> v, with levels from a BFS inside the component.  Undefined for
    trivial components.
    """
    comp = set(component)
    if _is_trivial(graph, comp):
        raise TrivialComponentError(
            f"component {sorted(comp)} has no cycle; period undefined"
        )
    internal = [(s, d) for s, _sym, d in graph.edges if s in comp and d in comp]
    root = min(comp)
    level = {root: 0}
    frontier = [root]
    adjacency = {}
    for s, d in internal:
        adjacency.setdefault(s, set()).add(d)
    while frontier:
        nxt = []
        for u in frontier:
            for v in adjacency.get(u, ()):
                if v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    period = 0
    for u, v in internal:
        period = gcd(period, level[u] + 1 - level[v])
    return period


def is_primitive(graph: LabeledGraph, component) -> bool:
    """True iff the component is aperiodic (period 1)."""
    return component_period(graph, component) == 1


def scc_decompose(graph: LabeledGraph) -> ComponentReport:
    """Maximal strongly connected components, ordered by smallest vertex,
    with per-component period and the global residue period."""
    succ = graph.successors
    components = _tarjan(graph.vertices, lambda v: succ.get(v, ()))
    components.sort(key=min)
    trivial = tuple(_is_trivial(graph, c) for c in components)
    periods = tuple(
        1 if t else component_period(graph, c) for c, t in zip(components, trivial)
    )
    report = ComponentReport(tuple(components), periods, trivial, 1)
    q = residue_period(report)
    return ComponentReport(tuple(components), periods, trivial, q)


def residue_period(report: ComponentReport) -> int:
    """lcm of the periods of the nontrivial components (1 if none).

    Word counts taken along any arithmetic progression with this modulus
    have convergent normalized behaviour, which is all the limit
    estimation downstream needs.
    """
    q = 1
    for period, trivial in zip(report.periods, report.trivial):
        if not trivial:
            q = lcm(q, period)
    return q
