"""The five distance functions between regular languages.

Finite-horizon Jaccard distances (at a fixed length, or cumulative up to
a length) are exact rationals.  The Cesaro Jaccard distance, the limit
of running averages of the cumulative distances, is computed in stages:

1. Analytic shortcut.  If the symmetric difference grows strictly slower
   than the union the limit is 0; if the intersection does, it is 1.
   Both follow from comparing entropies, no iteration needed.
2. Per-residue estimation.  Otherwise word counts along each residue
   class modulo the combined graph period converge, so each class limit
   is estimated until successive values stabilize and the answer is the
   mean of the class limits.
3. Empirical fallback.  If a class refuses to settle within the cap
   (slow polynomial regimes do exist), partial Cesaro averages are
   reported with a trend diagnostic, or a ConvergenceError is raised
   when even those still drift.

The entropy distance and the entropy-sum distance are ratios and sums of
spectral entropies of boolean combinations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .automata import (
    Dfa,
    combine,
    harmonize,
    harmonize_all,
    minimize,
    shortest_accepted,
    trim,
)
from .counting import CountVectors, length_counts
from .errors import ConvergenceError, DuplicateLanguageError
from .graphs import scc_decompose
from .spectral import ENTROPY_EPS, language_entropy

METRIC_NAMES = ("jn_exact", "jn_cum", "cesaro", "entropy", "entropy_sum")


@dataclass(frozen=True)
class CesaroConfig:
    """Knobs for the staged Cesaro computation.

    `sequence` selects which Jaccard sequence is averaged: "cum" uses the
    cumulative distances (the default and the recommended definition),
    "exact" averages the fixed-length distances instead, which is useful
    as a diagnostic because the two can disagree.  The analytic shortcut
    only applies to the cumulative sequence.
    """

    tol: float = 1e-9
    consecutive: int = 3
    residue_m_cap: int = 5000
    empirical_n_max: int = 2000
    empirical_tol: float = 0.02
    mode: str = "auto"  # "auto" | "analytic" | "empirical"
    sequence: str = "cum"  # "cum" | "exact"


@dataclass
class DistanceResult:
    metric: str
    value: float
    mode: str  # "exact" | "analytic-shortcut" | "per-residue" | "empirical"
    diagnostics: dict = field(default_factory=dict)


def _pair_dfas(d1: Dfa, d2: Dfa):
    a, b = harmonize(d1, d2)
    return a, b, combine(a, b, "symdiff"), combine(a, b, "union")


def jaccard_exact_n(d1: Dfa, d2: Dfa, n: int) -> Fraction:
    """Jaccard distance restricted to words of length exactly n,
    |W_n(sym diff)| / |W_n(union)|, and 0 when the denominator is 0."""
    _a, _b, sym, uni = _pair_dfas(d1, d2)
    num = _count_at(sym, n, cumulative=False)
    den = _count_at(uni, n, cumulative=False)
    return Fraction(num, den) if den else Fraction(0)


def jaccard_cum_n(d1: Dfa, d2: Dfa, n: int) -> Fraction:
    """Jaccard distance over words of length at most n."""
    _a, _b, sym, uni = _pair_dfas(d1, d2)
    num = _count_at(sym, n, cumulative=True)
    den = _count_at(uni, n, cumulative=True)
    return Fraction(num, den) if den else Fraction(0)


def _count_at(dfa: Dfa, n: int, cumulative: bool) -> int:
    gen = length_counts(CountVectors.from_dfa(dfa))
    total = 0
    value = 0
    for _ in range(n + 1):
        value = next(gen)
        total += value
    return total if cumulative else value


def cesaro_jaccard(d1: Dfa, d2: Dfa, config: CesaroConfig | None = None) -> DistanceResult:
    config = config or CesaroConfig()
    if config.mode not in ("auto", "analytic", "empirical"):
        raise ValueError(f"unknown mode {config.mode!r}")
    if config.sequence not in ("cum", "exact"):
        raise ValueError(f"unknown sequence {config.sequence!r}")
    if config.mode == "analytic" and config.sequence != "cum":
        raise ValueError("analytic mode requires the cumulative sequence")
    a, b, sym, uni = _pair_dfas(d1, d2)
    metric = "cesaro"
    diagnostics = {"sequence": config.sequence}

    shortcut_allowed = config.sequence == "cum" and config.mode in ("auto", "analytic")
    if shortcut_allowed:
        h_sym = language_entropy(sym).entropy_bits
        h_uni = language_entropy(uni).entropy_bits
        h_int = language_entropy(combine(a, b, "intersect")).entropy_bits
        diagnostics.update(
            entropy_sym_diff=h_sym, entropy_union=h_uni, entropy_intersection=h_int
        )
        if h_uni - h_sym > 10 * ENTROPY_EPS:
            return DistanceResult(metric, 0.0, "analytic-shortcut", diagnostics)
        if h_uni - h_int > 10 * ENTROPY_EPS:
            return DistanceResult(metric, 1.0, "analytic-shortcut", diagnostics)
        if config.mode == "analytic":
            raise ConvergenceError(
                "no analytic shortcut applies: symmetric difference, "
                "intersection and union all have the same entropy",
                diagnostics=diagnostics,
            )

    sym_cv = CountVectors.from_dfa(sym)
    uni_cv = CountVectors.from_dfa(uni)
    cumulative = config.sequence == "cum"

    if config.mode != "empirical":
        q = lcm(
            scc_decompose(trim(sym)).residue_period,
            scc_decompose(trim(uni)).residue_period,
        )
        limits, deltas, terms = _per_residue_limits(
            sym_cv, uni_cv, q, config, cumulative
        )
        if limits is not None:
            diagnostics.update(
                residue_period=q,
                residue_limits=limits,
                residue_deltas=deltas,
                terms_used=terms,
            )
            return DistanceResult(
                metric, sum(limits) / q, "per-residue", diagnostics
            )
        diagnostics.update(residue_period=q, residue_cap_terms=terms)

    value, trend, half = _empirical_average(sym_cv, uni_cv, config, cumulative)
    diagnostics.update(n_used=config.empirical_n_max, trend=trend, partial_half=half)
    if trend >= config.empirical_tol:
        raise ConvergenceError(
            f"running averages still drift by {trend:.3g} after "
            f"{config.empirical_n_max} terms",
            partial=value,
            diagnostics=diagnostics,
        )
    return DistanceResult(metric, value, "empirical", diagnostics)


def _ratio_stream(sym_cv: CountVectors, uni_cv: CountVectors, cumulative: bool):
    """Yield the Jaccard sequence J_1, J_2, ... as floats.

    Counts are exact integers throughout; each term is converted by one
    correctly rounded big-integer division at the end.
    """
    sym_gen = length_counts(sym_cv)
    uni_gen = length_counts(uni_cv)
    total_sym = next(sym_gen)
    total_uni = next(uni_gen)
    while True:
        w_sym = next(sym_gen)
        w_uni = next(uni_gen)
        total_sym += w_sym
        total_uni += w_uni
        num, den = (total_sym, total_uni) if cumulative else (w_sym, w_uni)
        yield (num / den) if den else 0.0


def _per_residue_limits(sym_cv, uni_cv, q, config: CesaroConfig, cumulative):
    """Estimate lim J_{q m + k} for each residue class k.

    A class counts as settled once `consecutive` successive values agree
    within `tol`.  Returns (limits, last_deltas, terms), with limits None
    if any class is still moving after m has reached the cap.
    """
    last = [None] * q
    delta = [None] * q
    streak = [0] * q
    settled = [False] * q
    cap_terms = q * config.residue_m_cap
    stream = _ratio_stream(sym_cv, uni_cv, cumulative)
    i = 0
    for value in stream:
        i += 1
        k = i % q
        previous = last[k]
        if previous is not None:
            delta[k] = abs(value - previous)
        if previous is not None and delta[k] < config.tol:
            streak[k] += 1
            if streak[k] >= config.consecutive:
                settled[k] = True
        else:
            streak[k] = 0
            settled[k] = False
        last[k] = value
        if all(settled):
            return [last[k] for k in range(q)], [delta[k] for k in range(q)], i
        if i >= cap_terms:
            return None, delta, i
    return None, delta, i


def _empirical_average(sym_cv, uni_cv, config: CesaroConfig, cumulative):
    """Partial Cesaro average of the first `empirical_n_max` terms, plus
    the drift since the halfway point as a trend diagnostic."""
    n_max = config.empirical_n_max
    half_at = max(1, n_max // 2)
    running = 0.0
    half_mean = None
    stream = _ratio_stream(sym_cv, uni_cv, cumulative)
    for i in range(1, n_max + 1):
        running += next(stream)
        if i == half_at:
            half_mean = running / i
    mean = running / n_max
    return mean, abs(mean - half_mean), half_mean


def entropy_distance(d1: Dfa, d2: Dfa) -> DistanceResult:
    """Ratio of entropies h(sym diff) / h(union); 0 when the union has
    entropy 0.  Always lands in [0, 1]."""
    _a, _b, sym, uni = _pair_dfas(d1, d2)
    h_sym = language_entropy(sym).entropy_bits
    h_uni = language_entropy(uni).entropy_bits
    value = 0.0 if h_uni == 0.0 else min(1.0, h_sym / h_uni)
    return DistanceResult(
        "entropy",
        value,
        "exact",
        {"entropy_sym_diff": h_sym, "entropy_union": h_uni},
    )


def entropy_sum(d1: Dfa, d2: Dfa) -> DistanceResult:
    """Sum of the two one-sided entropies h(L1 minus L2) + h(L2 minus L1).

    Reported unnormalized, so the range is [0, 2 log2 |alphabet|].
    """
    a, b, _sym, _uni = _pair_dfas(d1, d2)
    left = language_entropy(combine(a, b, "minus")).entropy_bits
    right = language_entropy(combine(b, a, "minus")).entropy_bits
    return DistanceResult(
        "entropy_sum",
        left + right,
        "exact",
        {"entropy_left_only": left, "entropy_right_only": right},
    )


def separating_bound(dfas) -> int:
    """(s_i + 1)(s_j + 1) - 1 maximized over pairs, where s is the state
    count of the minimal DFA over the common alphabet."""
    if len(dfas) < 2:
        return 0
    sizes = [minimize(d).n_states for d in harmonize_all(dfas)]
    return max(
        (si + 1) * (sj + 1) - 1
        for x, si in enumerate(sizes)
        for sj in sizes[x + 1 :]
    )


def separating_n(dfas) -> int:
    """Smallest n at which the cumulative Jaccard distance is positive for
    every pair of the given languages, i.e. the horizon beyond which the
    pseudo-metric separates the whole set.

    Equals the longest among the shortest witnesses of pairwise symmetric
    differences; never exceeds `separating_bound` for distinct inputs.
    """
    if len(dfas) < 2:
        return 0
    common = harmonize_all(dfas)
    worst = 0
    for i in range(len(common)):
        for j in range(i + 1, len(common)):
            witness = shortest_accepted(combine(common[i], common[j], "symdiff"))
            if witness is None:
                raise DuplicateLanguageError(
                    f"languages {i} and {j} are equal; separation is impossible"
                )
            worst = max(worst, witness)
    assert worst <= separating_bound(dfas)
    return worst


@dataclass
class AxiomReport:
    kind: str
    n_languages: int
    n_pairs: int
    n_triples: int
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations


_NAMED_METRICS = {
    "cesaro": lambda a, b: cesaro_jaccard(a, b).value,
    "entropy": lambda a, b: entropy_distance(a, b).value,
    "entropy_sum": lambda a, b: entropy_sum(a, b).value,
}


def check_metric_axioms(metric, dfas, kind: str = "pseudo", tol: float = 1e-9) -> AxiomReport:
    """Verify symmetry, zero diagonal, and the triangle (pseudo) or max
    (ultra-pseudo) inequality over every triple of the given languages.

    `metric` is a callable (dfa, dfa) -> float or one of the names
    "cesaro", "entropy", "entropy_sum".  Violations are report content,
    not exceptions.
    """
    if kind not in ("pseudo", "ultra-pseudo"):
        raise ValueError(f"unknown kind {kind!r}")
    if len(dfas) < 3:
        raise ValueError("axiom checking needs at least three languages")
    fn = _NAMED_METRICS[metric] if isinstance(metric, str) else metric

    n = len(dfas)
    table = [[0.0] * n for _ in range(n)]
    violations = []
    for i in range(n):
        value = fn(dfas[i], dfas[i])
        if abs(value) > tol:
            violations.append(("diagonal", i, value))
    for i in range(n):
        for j in range(i + 1, n):
            forward = fn(dfas[i], dfas[j])
            backward = fn(dfas[j], dfas[i])
            if abs(forward - backward) > tol:
                violations.append(("symmetry", i, j, forward, backward))
            if forward < -tol:
                violations.append(("negative", i, j, forward))
            table[i][j] = table[j][i] = forward

    n_triples = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                n_triples += 1
                for x, y, z in ((i, j, k), (j, i, k), (i, k, j)):
                    lhs = table[x][z]
                    if kind == "ultra-pseudo":
                        rhs = max(table[x][y], table[y][z])
                    else:
                        rhs = table[x][y] + table[y][z]
                    if lhs > rhs + tol:
                        violations.append(("inequality", x, y, z, lhs, rhs))
    return AxiomReport(kind, n, n * (n - 1) // 2, n_triples, violations)


def distance_result(
    metric: str,
    d1: Dfa,
    d2: Dfa,
    n: int | None = None,
    config: CesaroConfig | None = None,
) -> DistanceResult:
    """Uniform entry point used by the command-line surface."""
    if metric == "jn_exact" or metric == "jn_cum":
        if n is None:
            raise ValueError(f"metric {metric!r} needs a horizon n")
        fraction = (
            jaccard_exact_n(d1, d2, n)
            if metric == "jn_exact"
            else jaccard_cum_n(d1, d2, n)
        )
        return DistanceResult(
            metric,
            float(fraction),
            "exact",
            {
                "n": n,
                "numerator": fraction.numerator,
                "denominator": fraction.denominator,
            },
        )
    if metric == "cesaro":
        return cesaro_jaccard(d1, d2, config)
    if metric == "entropy":
        return entropy_distance(d1, d2)
    if metric == "entropy_sum":
        return entropy_sum(d1, d2)
    raise ValueError(f"unknown metric {metric!r}")
