import math

import numpy as np
import pytest

import reglang as rl
from reglang.counting import CountVectors, count_len, count_upto
from reglang.spectral import (
    ENTROPY_EPS,
    classify_radius,
    component_spectrum,
    graph_from_matrix,
    matrix_spectral_radius,
)
from corpus import SHOWCASE_MATRIX


# --- spectral radii ------------------------------------------------------------


def test_radius_of_period_two_matrix():
    assert abs(matrix_spectral_radius([[0, 2], [2, 0]]) - 2.0) < 1e-9


def test_radius_of_showcase_matrix():
    assert abs(matrix_spectral_radius(SHOWCASE_MATRIX) - 3.0) < 1e-9


def test_radius_of_trimmed_tail_matrix():
    assert abs(matrix_spectral_radius([[0, 2, 2], [0, 2, 0], [0, 0, 2]]) - 2.0) < 1e-9


def test_radius_of_golden_matrix():
    value = matrix_spectral_radius([[1, 1], [1, 0]])
    assert abs(value - (1 + math.sqrt(5)) / 2) < 1e-9


def test_radius_of_nilpotent_matrix_is_zero():
    assert matrix_spectral_radius([[0, 1], [0, 0]]) == 0.0


def test_component_radius_reports_diagnostics():
    graph = graph_from_matrix([[1, 1], [1, 0]])
    spectrum = component_spectrum(graph, {0, 1})
    assert spectrum.period == 1
    assert spectrum.iterations >= 1
    assert spectrum.residual <= 1e-12 * max(1.0, spectrum.radius)


def test_radius_independent_of_start_vector():
    graph = graph_from_matrix([[1, 1], [1, 0]])
    uniform = component_spectrum(graph, {0, 1}).radius
    rng = np.random.default_rng(7)
    seeded = component_spectrum(graph, {0, 1}, start=rng.uniform(0.5, 1.5, 2)).radius
    assert rl.entropies_equal(uniform, seeded)


# --- language entropy -----------------------------------------------------------


def test_entropy_of_full_binary_language():
    report = rl.language_entropy(rl.dfa_from_regex("(a|b)*"))
    assert report.entropy_bits == pytest.approx(1.0, abs=1e-12)
    assert report.lambda_class == "expanding"


def test_entropy_of_full_ternary_language():
    report = rl.language_entropy(rl.dfa_from_regex("(a|b|c)*"))
    assert report.entropy_bits == pytest.approx(math.log2(3), abs=1e-12)


def test_entropy_of_finite_language_is_zero():
    report = rl.language_entropy(rl.dfa_from_regex("a|aa|aaa"))
    assert report.entropy_bits == 0.0
    assert report.lambda_class == "finite"
    assert report.spectral_radius == 0.0


def test_entropy_of_empty_language_is_zero():
    report = rl.language_entropy(rl.dfa_from_regex("#"))
    assert report.entropy_bits == 0.0
    assert report.lambda_class == "finite"


def test_entropy_of_unary_star_is_exactly_zero():
    report = rl.language_entropy(rl.dfa_from_regex("a*"))
    assert report.lambda_class == "unit"
    assert report.entropy_bits == 0.0


def test_entropy_is_independent_of_minimization(corpus):
    for lang in corpus:
        raw = rl.language_entropy(lang.dfa).entropy_bits
        small = rl.language_entropy(rl.minimize(lang.dfa)).entropy_bits
        assert rl.entropies_equal(raw, small), lang.name


def test_lambda_classes_partition(corpus):
    for lang in corpus:
        report = rl.language_entropy(lang.dfa)
        assert report.lambda_class in ("finite", "unit", "expanding")
        if report.lambda_class == "finite":
            assert report.spectral_radius == 0.0
        else:
            assert report.spectral_radius >= 1.0 - 1e-9
        assert report.spectral_radius <= len(lang.alphabet) + 1e-9


def test_classify_radius_boundaries():
    assert classify_radius(0.0) == "finite"
    assert classify_radius(1.0) == "unit"
    assert classify_radius(1.0 + 1e-12) == "unit"
    assert classify_radius(2.0) == "expanding"


# --- topological entropy ---------------------------------------------------------


def test_topological_entropy_of_period_two_graph():
    graph = rl.essential(rl.trim(rl.minimize(rl.dfa_from_regex("((a|b){2})*"))))
    assert rl.topological_entropy(graph) == pytest.approx(1.0, abs=1e-12)


def test_topological_entropy_of_showcase_union():
    graph = graph_from_matrix(SHOWCASE_MATRIX)
    assert rl.topological_entropy(graph) == pytest.approx(math.log2(3), abs=1e-12)


def test_topological_entropy_of_empty_graph():
    graph = rl.essential(rl.trim(rl.dfa_from_regex("#")))
    assert rl.topological_entropy(graph) == 0.0


# --- equality helper --------------------------------------------------------------


def test_entropies_equal_tolerance():
    assert rl.entropies_equal(1.0, 1.0)
    assert rl.entropies_equal(1.0, 1.0 + ENTROPY_EPS / 2)
    assert not rl.entropies_equal(math.log2(3), 1.0)


# --- growth-rate checks at moderate horizon ---------------------------------------


def test_cumulative_rate_near_entropy(corpus, entropy_of, infinite_names):
    for lang in corpus:
        if lang.name not in infinite_names:
            continue
        cv = CountVectors.from_dfa(lang.dfa)
        rate = math.log2(count_upto(cv, 200)) / 200
        assert abs(rate - entropy_of[lang.name]) < 0.1, lang.name


def test_exact_length_rate_on_a_nearby_subsequence(corpus, entropy_of, infinite_names):
    # the exact-count rate approaches the entropy along a subsequence with
    # gaps at most twice the state count, so a window of that width below
    # n = 400 must contain a good length
    for lang in corpus:
        if lang.name not in infinite_names:
            continue
        cv = CountVectors.from_dfa(lang.dfa)
        width = 2 * lang.dfa.n_states
        target = 400
        best = None
        for n in range(max(1, target - width), target + 1):
            count = count_len(cv, n)
            if count > 0:
                gap = abs(math.log2(count) / n - entropy_of[lang.name])
                best = gap if best is None else min(best, gap)
        assert best is not None and best < 0.05, lang.name
