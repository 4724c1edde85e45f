from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reglang as rl
from reglang.counting import CountVectors, length_counts, matrix_power
from reglang.errors import TrivialComponentError
from reglang.spectral import graph_from_matrix


def figure_graph():
    dfa = rl.minimize(rl.dfa_from_regex("((a|b){2})*"))
    return rl.essential(rl.trim(dfa))


# --- scc decomposition -------------------------------------------------------


def test_scc_of_period_two_graph_is_one_component():
    report = rl.scc_decompose(figure_graph())
    assert len(report.components) == 1
    assert len(report.components[0]) == 2
    assert report.periods == (2,)
    assert report.residue_period == 2


def test_scc_of_trimmed_tail_matrix():
    graph = graph_from_matrix([[0, 2, 2], [0, 2, 0], [0, 0, 2]])
    report = rl.scc_decompose(graph)
    assert [sorted(c) for c in report.components] == [[0], [1], [2]]
    assert report.trivial == (True, False, False)
    assert report.periods == (1, 1, 1)
    assert report.residue_period == 1


def test_scc_of_dag_is_all_trivial():
    graph = graph_from_matrix([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    report = rl.scc_decompose(graph)
    assert all(report.trivial)
    assert report.residue_period == 1


# --- periods -----------------------------------------------------------------


def test_period_of_figure_graph_is_two():
    graph = figure_graph()
    (component,) = rl.scc_decompose(graph).components
    assert rl.component_period(graph, component) == 2


def test_period_of_self_loop_is_one():
    graph = graph_from_matrix([[1]])
    assert rl.component_period(graph, {0}) == 1


def test_period_of_three_cycle():
    dfa = rl.minimize(rl.dfa_from_regex("(aaa)*"))
    graph = rl.trim(dfa)
    (component,) = rl.scc_decompose(graph).components
    assert rl.component_period(graph, component) == 3


def test_period_undefined_for_trivial_component():
    graph = graph_from_matrix([[0, 1], [0, 1]])
    with pytest.raises(TrivialComponentError):
        rl.component_period(graph, {0})


# --- primitivity -------------------------------------------------------------


def test_figure_component_is_not_primitive():
    graph = figure_graph()
    (component,) = rl.scc_decompose(graph).components
    assert not rl.is_primitive(graph, component)


def test_self_loop_is_primitive():
    graph = graph_from_matrix([[2]])
    assert rl.is_primitive(graph, {0})


def test_two_cycle_with_extra_self_loop_is_primitive():
    graph = graph_from_matrix([[1, 1], [1, 0]])
    assert rl.is_primitive(graph, {0, 1})
    cube = matrix_power(graph.matrix, 3)
    assert all(entry > 0 for row in cube for entry in row)


# --- residue period ----------------------------------------------------------


def test_residue_period_single_period_two():
    report = rl.scc_decompose(figure_graph())
    assert rl.residue_period(report) == 2


def test_residue_period_all_aperiodic_is_one():
    report = rl.scc_decompose(graph_from_matrix([[1, 1], [1, 1]]))
    assert rl.residue_period(report) == 1


def test_residue_period_mixes_two_and_three():
    # disjoint 2-cycle and 3-cycle
    graph = graph_from_matrix(
        [
            [0, 1, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0],
        ]
    )
    assert rl.scc_decompose(graph).residue_period == 6


# --- brute-force cross-checks -------------------------------------------------


def simple_cycle_lengths(graph, component):
    comp = set(component)
    succ = {v: [d for d in graph.successors.get(v, ()) if d in comp] for v in comp}
    lengths = set()

    def walk(start, current, depth, seen):
        for nxt in succ[current]:
            if nxt == start:
                lengths.add(depth + 1)
            elif nxt not in seen:
                walk(start, nxt, depth + 1, seen | {nxt})

    for v in comp:
        walk(v, v, 0, {v})
    return lengths


_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=0, max_value=2), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@settings(max_examples=150, deadline=None)
@given(rows=_matrices)
def test_bfs_period_matches_cycle_enumeration(rows):
    graph = graph_from_matrix(rows)
    report = rl.scc_decompose(graph)
    for component, trivial in zip(report.components, report.trivial):
        if trivial:
            continue
        lengths = simple_cycle_lengths(graph, component)
        expected = 0
        for length in lengths:
            expected = gcd(expected, length)
        assert rl.component_period(graph, component) == expected


@settings(max_examples=150, deadline=None)
@given(rows=_matrices)
def test_primitivity_matches_power_positivity(rows):
    graph = graph_from_matrix(rows)
    report = rl.scc_decompose(graph)
    idx = graph.vertex_index
    for component, trivial in zip(report.components, report.trivial):
        if trivial:
            continue
        keep = sorted(idx[v] for v in component)
        sub = tuple(tuple(graph.matrix[i][j] for j in keep) for i in keep)
        k = len(keep)
        bound = (k - 1) ** 2 + 1
        positive = False
        for exponent in range(1, bound + 1):
            power = matrix_power(sub, exponent)
            if all(entry > 0 for row in power for entry in row):
                positive = True
                break
        assert rl.is_primitive(graph, component) == positive


# --- aperiodicity as a convergence detector -----------------------------------


def jprime_sequence(d1, d2, n_max):
    a, b = rl.harmonize(d1, d2)
    sym = length_counts(CountVectors.from_dfa(rl.combine(a, b, "symdiff")))
    uni = length_counts(CountVectors.from_dfa(rl.combine(a, b, "union")))
    values = []
    for _ in range(n_max + 1):
        num = next(sym)
        den = next(uni)
        values.append(num / den if den else 0.0)
    return values


def test_all_aperiodic_pairs_have_settled_jprime_tails(corpus):
    checked = 0
    for i, left in enumerate(corpus):
        for right in corpus[i + 1 :]:
            a, b = rl.harmonize(left.dfa, right.dfa)
            reports = [
                rl.scc_decompose(rl.trim(rl.combine(a, b, op)))
                for op in ("symdiff", "union")
            ]
            if any(
                not trivial and period != 1
                for rep in reports
                for period, trivial in zip(rep.periods, rep.trivial)
            ):
                continue
            values = jprime_sequence(left.dfa, right.dfa, 60)
            tail = values[-11:]
            oscillation = max(
                abs(y - x) for x, y in zip(tail, tail[1:])
            )
            assert oscillation < 1e-3, (left.name, right.name, oscillation)
            checked += 1
    assert checked >= 20
