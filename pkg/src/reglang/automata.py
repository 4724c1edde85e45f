"""Complete deterministic automata and the boolean algebra over them.

Every DFA here is total: each state has a transition on every symbol of
its alphabet, with a trash state absorbing dead inputs where needed.
Completeness makes complement a flip of the accepting set and keeps the
product constructions closed.  Trimming then discards the states that
cannot lie on an accepting path (the trash state among them) and yields
the labeled graph consumed by the counting and spectral layers.

All operations are pure; the returned automata and graphs are immutable
and safe to share across threads.
"""

import json
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import AlphabetError, StateLimitError

DEFAULT_MAX_STATES = 1_000_000


def state_cap() -> int:
    """Construction size limit; the REGLANG_MAX_STATES env var overrides."""
    raw = os.environ.get("REGLANG_MAX_STATES")
    if not raw:
        return DEFAULT_MAX_STATES
    try:
        cap = int(raw)
    except ValueError as exc:
        raise StateLimitError(f"REGLANG_MAX_STATES is not an integer: {raw!r}") from exc
    if cap <= 0:
        raise StateLimitError("REGLANG_MAX_STATES must be positive")
    return cap


@dataclass
class Nfa:
    """Nondeterministic automaton with epsilon moves.

    Built by the regex compiler and consumed by `determinize`; treated as
    immutable after construction.
    """

    alphabet: tuple[str, ...]
    n_states: int
    transitions: dict  # (state, symbol) -> frozenset of states
    epsilon: dict  # state -> frozenset of states
    initial: int
    accepting: frozenset

    def closure(self, states) -> frozenset:
        seen = set(states)
        todo = list(states)
        while todo:
            s = todo.pop()
            for t in self.epsilon.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return frozenset(seen)

    def accepts(self, word: str) -> bool:
        current = self.closure({self.initial})
        for symbol in word:
            if symbol not in self.alphabet:
                return False
            step = set()
            for s in current:
                step.update(self.transitions.get((s, symbol), ()))
            if not step:
                return False
            current = self.closure(step)
        return bool(current & self.accepting)


@dataclass(frozen=True)
class Dfa:
    """Complete DFA: alphabet, total transition table, accepting set.

    `transitions[state][k]` is the successor on the k-th symbol of the
    (sorted) alphabet.  The alphabet must be non-empty and the table total,
    so membership is a straight walk with no partiality.
    """

    alphabet: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]
    accepting: frozenset
    initial: int = 0

    def __post_init__(self):
        if not self.alphabet:
            raise AlphabetError("DFA alphabet must be non-empty")
        if tuple(sorted(set(self.alphabet))) != self.alphabet:
            raise AlphabetError("DFA alphabet must be sorted and duplicate-free")
        n = len(self.transitions)
        if not (0 <= self.initial < n):
            raise ValueError("initial state out of range")
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row width must match alphabet size")
            for t in row:
                if not (0 <= t < n):
                    raise ValueError("transition target out of range")
        if not all(0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")

    @cached_property
    def symbol_index(self) -> dict:
        return {s: k for k, s in enumerate(self.alphabet)}

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def accepts(self, word: str) -> bool:
        """Membership test.  Symbols outside the alphabet reject (a string
        using foreign symbols is simply not in the language)."""
        idx = self.symbol_index
        state = self.initial
        for symbol in word:
            k = idx.get(symbol)
            if k is None:
                return False
            state = self.transitions[state][k]
        return state in self.accepting

    def to_json(self) -> str:
        return json.dumps(
            {
                "alphabet": list(self.alphabet),
                "states": self.n_states,
                "initial": self.initial,
                "accepting": sorted(self.accepting),
                "delta": [list(row) for row in self.transitions],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        obj = json.loads(text)
        return cls(
            alphabet=tuple(obj["alphabet"]),
            transitions=tuple(tuple(row) for row in obj["delta"]),
            accepting=frozenset(obj["accepting"]),
            initial=obj["initial"],
        )


@dataclass(frozen=True)
class LabeledGraph:
    """Symbol-labeled directed multigraph over surviving DFA states.

    Vertices keep their original state ids.  `role` records whether the
    graph is merely trimmed or also essential (every vertex has at least
    one incoming and one outgoing edge).  The adjacency matrix counts
    parallel edges, so entries are bounded by the alphabet size per row.
    """

    vertices: tuple[int, ...]
    edges: tuple  # of (src, symbol, dst)
    role: str  # "trim" | "essential"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def matrix(self) -> tuple:
        """Adjacency matrix with multiplicities, row/column order = vertices."""
        idx = self.vertex_index
        n = len(self.vertices)
        rows = [[0] * n for _ in range(n)]
        for src, _symbol, dst in self.edges:
            rows[idx[src]][idx[dst]] += 1
        return tuple(tuple(r) for r in rows)

    @cached_property
    def successors(self) -> dict:
        """vertex -> sorted tuple of distinct successor vertices."""
        out = {v: set() for v in self.vertices}
        for src, _symbol, dst in self.edges:
            out[src].add(dst)
        return {v: tuple(sorted(ts)) for v, ts in out.items()}


def determinize(nfa: Nfa, max_states: int | None = None) -> Dfa:
    """Subset construction.  Always yields a complete DFA; the empty
    subset plays the trash state when it is reachable."""
    cap = max_states if max_states is not None else state_cap()
    alphabet = tuple(sorted(set(nfa.alphabet)))
    if not alphabet:
        raise AlphabetError("cannot determinize over an empty alphabet")

    start = nfa.closure({nfa.initial})
    ids = {start: 0}
    order = [start]
    rows = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for symbol in alphabet:
            step = set()
            for s in subset:
                step.update(nfa.transitions.get((s, symbol), ()))
            target = nfa.closure(step) if step else frozenset()
            if target not in ids:
                if len(ids) >= cap:
                    raise StateLimitError(
                        f"subset construction exceeded {cap} states"
                    )
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        rows.append(row)
    accepting = frozenset(i for i, subset in enumerate(order) if subset & nfa.accepting)
    return Dfa(
        alphabet=alphabet,
        transitions=tuple(tuple(r) for r in rows),
        accepting=accepting,
        initial=0,
    )


def _reachable(dfa: Dfa) -> set:
    seen = {dfa.initial}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for t in dfa.transitions[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def _canonical(dfa: Dfa) -> Dfa:
    """Renumber states in BFS order from the initial state (symbol order),
    making equal-language minimal DFAs structurally identical."""
    order = {dfa.initial: 0}
    sequence = [dfa.initial]
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for t in dfa.transitions[q]:
            if t not in order:
                order[t] = len(sequence)
                sequence.append(t)
                queue.append(t)
    rows = [
        tuple(order[t] for t in dfa.transitions[q])
        for q in sequence
    ]
    accepting = frozenset(order[q] for q in dfa.accepting if q in order)
    return Dfa(dfa.alphabet, tuple(rows), accepting, 0)


def minimize(dfa: Dfa) -> Dfa:
    """Hopcroft partition refinement; returns the unique minimal complete
    DFA in canonical state order."""
    reach = sorted(_reachable(dfa))
    finals = frozenset(q for q in reach if q in dfa.accepting)
    others = frozenset(q for q in reach if q not in dfa.accepting)

    partition = [s for s in (finals, others) if s]
    worklist = list(partition)

    preimage = {symbol: {} for symbol in dfa.alphabet}
    for q in reach:
        for symbol, t in zip(dfa.alphabet, dfa.transitions[q]):
            preimage[symbol].setdefault(t, set()).add(q)

    while worklist:
        splitter = worklist.pop()
        for symbol in dfa.alphabet:
            pre = preimage[symbol]
            x = set()
            for q in splitter:
                x.update(pre.get(q, ()))
            if not x:
                continue
            next_partition = []
            for block in partition:
                inside = block & x
                outside = block - x
                if inside and outside:
                    inside = frozenset(inside)
                    outside = frozenset(outside)
                    next_partition.extend((inside, outside))
                    if block in worklist:
                        worklist.remove(block)
                        worklist.extend((inside, outside))
                    else:
                        worklist.append(min(inside, outside, key=len))
                else:
                    next_partition.append(block)
            partition = next_partition

    block_of = {}
    for i, block in enumerate(partition):
        for q in block:
            block_of[q] = i
    representative = {i: min(block) for i, block in enumerate(partition)}
    rows = []
    for i in range(len(partition)):
        q = representative[i]
        rows.append(tuple(block_of[t] for t in dfa.transitions[q]))
    accepting = frozenset(i for i, block in enumerate(partition) if block & dfa.accepting)
    merged = Dfa(dfa.alphabet, tuple(rows), accepting, block_of[dfa.initial])
    return _canonical(merged)


def harmonize(d1: Dfa, d2: Dfa) -> tuple[Dfa, Dfa]:
    """Re-express both automata over the union alphabet.

    Languages are unchanged as string sets; automata gain a trash state
    for the symbols they did not previously know.  Inputs already sharing
    an alphabet are returned as-is.
    """
    if d1.alphabet == d2.alphabet:
        return d1, d2
    union = tuple(sorted(set(d1.alphabet) | set(d2.alphabet)))
    return _with_alphabet(d1, union), _with_alphabet(d2, union)


def harmonize_all(dfas) -> list[Dfa]:
    """Re-express a family of automata over their union alphabet."""
    union = tuple(sorted(set().union(*(set(d.alphabet) for d in dfas))))
    return [_with_alphabet(d, union) for d in dfas]


def _with_alphabet(dfa: Dfa, alphabet: tuple[str, ...]) -> Dfa:
    if alphabet == dfa.alphabet:
        return dfa
    if not set(dfa.alphabet) <= set(alphabet):
        raise AlphabetError("target alphabet must contain the DFA's alphabet")
    trash = dfa.n_states
    rows = []
    for q in range(dfa.n_states):
        row = []
        for symbol in alphabet:
            k = dfa.symbol_index.get(symbol)
            row.append(dfa.transitions[q][k] if k is not None else trash)
        rows.append(tuple(row))
    rows.append(tuple(trash for _ in alphabet))
    return Dfa(alphabet, tuple(rows), dfa.accepting, dfa.initial)


_COMBINE = {
    "intersect": lambda a, b: a and b,
    "union": lambda a, b: a or b,
    "symdiff": lambda a, b: a != b,
    "minus": lambda a, b: a and not b,
}


def combine(d1: Dfa, d2: Dfa, op: str, max_states: int | None = None) -> Dfa:
    """Product automaton for a boolean set combination of two languages.

    Requires harmonized alphabets (see `harmonize`); only the reachable
    part of the product is built.
    """
    if op not in _COMBINE:
        raise ValueError(f"unknown combination {op!r}")
    if d1.alphabet != d2.alphabet:
        raise AlphabetError("combine requires harmonized alphabets")
    keep = _COMBINE[op]
    cap = max_states if max_states is not None else state_cap()

    start = (d1.initial, d2.initial)
    ids = {start: 0}
    order = [start]
    rows = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row = []
        for k in range(len(d1.alphabet)):
            target = (d1.transitions[p][k], d2.transitions[q][k])
            if target not in ids:
                if len(ids) >= cap:
                    raise StateLimitError(f"product construction exceeded {cap} states")
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        rows.append(tuple(row))
    accepting = frozenset(
        i
        for i, (p, q) in enumerate(order)
        if keep(p in d1.accepting, q in d2.accepting)
    )
    return Dfa(d1.alphabet, tuple(rows), accepting, 0)


def complement(dfa: Dfa) -> Dfa:
    """Flip the accepting set.  Sound because every DFA here is complete."""
    full = frozenset(range(dfa.n_states))
    return Dfa(dfa.alphabet, dfa.transitions, full - dfa.accepting, dfa.initial)


def trim(dfa: Dfa) -> LabeledGraph:
    """Restrict to states lying on some accepting path.

    The result can be empty (empty language); that is a flagged graph,
    not an error, because the distance definitions assign 0 to empty
    denominators downstream.
    """
    forward = _reachable(dfa)

    reverse = {q: set() for q in range(dfa.n_states)}
    for q in range(dfa.n_states):
        for t in dfa.transitions[q]:
            reverse[t].add(q)
    backward = set(dfa.accepting)
    queue = deque(backward)
    while queue:
        q = queue.popleft()
        for p in reverse[q]:
            if p not in backward:
                backward.add(p)
                queue.append(p)

    keep = sorted(forward & backward)
    keep_set = set(keep)
    edges = []
    for q in keep:
        for symbol, t in zip(dfa.alphabet, dfa.transitions[q]):
            if t in keep_set:
                edges.append((q, symbol, t))
    return LabeledGraph(tuple(keep), tuple(edges), "trim")


def essential(graph: LabeledGraph) -> LabeledGraph:
    """Iteratively drop vertices lacking an incoming or outgoing edge.

    Idempotent; finite languages end up with the empty graph.
    """
    vertices = set(graph.vertices)
    edges = list(graph.edges)
    while True:
        has_out = {src for src, _s, _d in edges}
        has_in = {dst for _s, _sym, dst in edges}
        alive = {v for v in vertices if v in has_out and v in has_in}
        if alive == vertices:
            break
        vertices = alive
        edges = [e for e in edges if e[0] in vertices and e[2] in vertices]
    return LabeledGraph(tuple(sorted(vertices)), tuple(edges), "essential")


def is_empty(dfa: Dfa) -> bool:
    return not (_reachable(dfa) & dfa.accepting)


def shortest_accepted(dfa: Dfa) -> int | None:
    """Length of a shortest accepted word, or None for the empty language."""
    if dfa.initial in dfa.accepting:
        return 0
    seen = {dfa.initial}
    frontier = [dfa.initial]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for q in frontier:
            for t in dfa.transitions[q]:
                if t in seen:
                    continue
                if t in dfa.accepting:
                    return depth
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    return None


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality as string sets, via symmetric-difference emptiness."""
    a, b = harmonize(d1, d2)
    return is_empty(combine(a, b, "symdiff"))
