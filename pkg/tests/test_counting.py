import math

import pytest

import reglang as rl
from reglang.counting import (
    CountVectors,
    block_count,
    count_len,
    count_upto,
    cumulative_counts,
    length_counts,
    matrix_power,
    residue_language,
    trim_system,
)
from reglang.oracle import acceptance_by_length
from reglang.spectral import graph_from_matrix
from corpus import (
    SHOWCASE_FINAL_UNION,
    SHOWCASE_INITIAL,
    SHOWCASE_MATRIX,
    showcase_machine,
)


def system(pattern, alphabet=None):
    return CountVectors.from_dfa(rl.dfa_from_regex(pattern, alphabet))


# --- exact length counts -----------------------------------------------------


def test_count_len_full_binary():
    assert count_len(system("(a|b)*"), 3) == 8


def test_count_len_showcase_union_at_one():
    cv = CountVectors(SHOWCASE_MATRIX, SHOWCASE_INITIAL, SHOWCASE_FINAL_UNION)
    assert count_len(cv, 1) == 4  # the four one-letter tail words


def test_count_len_even_language_odd_length():
    assert count_len(system("(aa)*"), 5) == 0


def test_count_upto_unary_star():
    assert count_upto(system("a*"), 3) == 4


def test_count_upto_full_binary():
    assert count_upto(system("(a|b)*"), 4) == 31


def test_counts_match_enumeration_for_showcase_sym():
    dfa = showcase_machine({3, 4})
    cv = CountVectors.from_dfa(dfa)
    levels = acceptance_by_length(dfa, 7)
    total = 0
    gen = length_counts(cv)
    for n in range(8):
        exact = int(levels[n].sum())
        total += exact
        assert next(gen) == exact, n
    assert count_upto(cv, 7) == total


def test_counts_match_enumeration_for_corpus_sample(corpus):
    for lang in corpus:
        if len(lang.alphabet) > 2:
            continue
        cv = CountVectors.from_dfa(lang.dfa)
        levels = acceptance_by_length(lang.dfa, 8)
        for n, level in enumerate(levels):
            assert count_len(cv, n) == int(level.sum()), (lang.name, n)


def test_count_upto_monotone(corpus):
    for lang in corpus:
        cv = CountVectors.from_dfa(lang.dfa)
        values = []
        gen = cumulative_counts(cv)
        for _ in range(12):
            values.append(next(gen))
        assert values == sorted(values), lang.name


def test_trimming_leaves_counts_unchanged(corpus):
    for lang in corpus:
        trimmed = CountVectors.from_dfa(lang.dfa, trimmed=True)
        full = CountVectors.from_dfa(lang.dfa, trimmed=False)
        for n in range(13):
            assert count_len(trimmed, n) == count_len(full, n), (lang.name, n)


# --- admissible-block path counts ---------------------------------------------


def brute_paths_and_blocks(graph, n):
    edges_from = {}
    for src, symbol, dst in graph.edges:
        edges_from.setdefault(src, []).append((symbol, dst))
    paths = 0
    blocks = set()
    stack = [(v, "") for v in graph.vertices]
    while stack:
        vertex, label = stack.pop()
        if len(label) == n:
            paths += 1
            blocks.add(label)
            continue
        for symbol, dst in edges_from.get(vertex, ()):
            stack.append((dst, label + symbol))
    return paths, blocks


def test_block_count_on_period_two_graph():
    graph = rl.essential(rl.trim(rl.minimize(rl.dfa_from_regex("((a|b){2})*"))))
    assert block_count(graph, 3) == 16
    paths, blocks = brute_paths_and_blocks(graph, 3)
    assert paths == 16
    assert len(blocks) == 8
    # right-resolving sandwich: paths / |V| <= distinct blocks <= paths
    assert paths / graph.n_vertices <= len(blocks) <= paths


def test_block_count_empty_graph():
    graph = rl.essential(rl.trim(rl.dfa_from_regex("#")))
    for n in range(1, 5):
        assert block_count(graph, n) == 0


def test_block_count_single_self_loop():
    graph = graph_from_matrix([[1]])
    assert block_count(graph, 5) == 1


# --- residue-class systems -----------------------------------------------------


def test_residue_system_of_showcase_matrix():
    cv = CountVectors(SHOWCASE_MATRIX, SHOWCASE_INITIAL, SHOWCASE_FINAL_UNION)
    res = residue_language(cv, 2, 1)
    assert res.matrix == matrix_power(SHOWCASE_MATRIX, 2)
    assert res.final == (4, 3, 0, 2, 2)
    trimmed = trim_system(res)
    assert trimmed.matrix == ((0, 4, 4), (0, 4, 0), (0, 0, 4))
    assert trimmed.initial == (1, 0, 0)
    assert trimmed.final == (4, 2, 2)
    for n in range(6):
        assert count_len(trimmed, n) == count_len(cv, 2 * n + 1)


def test_residue_identity_keeps_counts():
    cv = system("(a|bb)*")
    res = residue_language(cv, 1, 0)
    for n in range(10):
        assert count_len(res, n) == count_len(cv, n)


@pytest.mark.parametrize("pattern", ["(a|b)*", "((a|b){2})*", "(a|bb)*", "(ab)*"])
def test_residue_even_class_skips_odd_lengths(pattern):
    cv = system(pattern)
    res = residue_language(cv, 2, 0)
    assert count_len(res, 3) == count_len(cv, 6)
    assert count_len(res, 4) == count_len(cv, 8)


def test_residue_rejects_bad_arguments():
    cv = system("a*")
    with pytest.raises(ValueError):
        residue_language(cv, 0, 0)
    with pytest.raises(ValueError):
        residue_language(cv, 2, 2)


# --- asymptotic growth ----------------------------------------------------------


def test_growth_rate_tracks_entropy(corpus, entropy_of, infinite_names):
    for lang in corpus:
        if lang.name not in infinite_names:
            continue
        cv = CountVectors.from_dfa(lang.dfa)
        total = count_upto(cv, 200)
        rate = math.log2(total) / 200
        assert abs(rate - entropy_of[lang.name]) < 0.1, lang.name
