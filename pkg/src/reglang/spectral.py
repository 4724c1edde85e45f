"""Spectral radii of automaton graphs and the entropy of a language.

The growth rate of a regular language, in bits per symbol, is the log
base 2 of the largest spectral radius among the strongly connected
components of its essential graph.  Radii are computed by power
iteration on the component submatrix raised to its period, which makes
the iterated matrix aperiodic and the min/max ratio bounds converge
geometrically from both sides.
"""

import math
from dataclasses import dataclass

import numpy as np

from .automata import Dfa, LabeledGraph, essential, trim
from .counting import matrix_power
from .errors import ConvergenceError
from .graphs import component_period, scc_decompose

ENTROPY_EPS = 1e-9
POWER_TOL = 1e-12
POWER_MAX_ITER = 100_000


@dataclass(frozen=True)
class ComponentSpectrum:
    vertices: tuple
    period: int
    radius: float
    iterations: int
    residual: float


@dataclass(frozen=True)
class SpectralReport:
    """Per-component radii plus the language-level summary.

    `lambda_class` is one of "finite" (nilpotent matrix, finite
    language), "unit" (radius 1, polynomial growth), "expanding"
    (radius above 1, exponential growth).  `entropy_bits` is zero for
    the first two classes and log2(radius) otherwise.
    """

    components: tuple  # of ComponentSpectrum, nontrivial components only
    spectral_radius: float
    entropy_bits: float
    lambda_class: str


def classify_radius(radius: float) -> str:
    # Integer matrices admit no radius strictly between 0 and 1.
    if radius < 0.5:
        return "finite"
    if abs(radius - 1.0) < ENTROPY_EPS:
        return "unit"
    return "expanding"


def _perron_root(block: np.ndarray, tol: float, max_iter: int, start=None):
    """Largest eigenvalue of a non-negative matrix whose diagonal blocks
    are primitive with a common dominant eigenvalue.

    Uses power iteration with two-sided ratio bounds: for a positive
    vector v, min_i (Bv)_i / v_i and max_i (Bv)_i / v_i bracket the
    dominant eigenvalue, and the bracket collapses geometrically.
    """
    n = block.shape[0]
    if start is None:
        v = np.ones(n)
    else:
        v = np.asarray(start, dtype=float)
        if v.shape != (n,) or (v <= 0).any():
            raise ValueError("start vector must be strictly positive")
    for iteration in range(1, max_iter + 1):
        w = block @ v
        ratios = w / v
        low = float(ratios.min())
        high = float(ratios.max())
        width = high - low
        if width <= tol * max(1.0, high):
            return 0.5 * (low + high), iteration, width
        v = w / w.max()
    raise ConvergenceError(
        f"power iteration missed tolerance {tol} after {max_iter} steps",
        partial=0.5 * (low + high),
        diagnostics={"residual": width, "iterations": max_iter},
    )


def component_spectrum(
    graph: LabeledGraph,
    component,
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
    start=None,
) -> ComponentSpectrum:
    """Perron root of one strongly connected component, with diagnostics."""
    vertices = tuple(sorted(component))
    period = component_period(graph, component)
    idx = graph.vertex_index
    positions = [idx[v] for v in vertices]
    matrix = graph.matrix
    sub = tuple(tuple(matrix[i][j] for j in positions) for i in positions)
    block = np.asarray(matrix_power(sub, period), dtype=float)
    root, iterations, residual = _perron_root(block, tol, max_iter, start=start)
    radius = root ** (1.0 / period) if period > 1 else root
    return ComponentSpectrum(vertices, period, radius, iterations, residual)


def component_radius(graph: LabeledGraph, component, tol: float = POWER_TOL) -> float:
    return component_spectrum(graph, component, tol=tol).radius


def analyze_graph(graph: LabeledGraph, tol: float = POWER_TOL) -> SpectralReport:
    """Spectral report over the nontrivial components of a graph."""
    report = scc_decompose(graph)
    spectra = []
    for comp, trivial in zip(report.components, report.trivial):
        if trivial:
            continue
        spectra.append(component_spectrum(graph, comp, tol=tol))
    radius = max((s.radius for s in spectra), default=0.0)
    label = classify_radius(radius)
    entropy = max(0.0, math.log2(radius)) if label == "expanding" else 0.0
    return SpectralReport(tuple(spectra), radius, entropy, label)


def topological_entropy(graph: LabeledGraph, tol: float = POWER_TOL) -> float:
    """Growth rate of admissible blocks of an essential graph: the max of
    log2(radius) over components, 0 for the empty graph."""
    return analyze_graph(graph, tol=tol).entropy_bits


def language_entropy(dfa: Dfa, tol: float = POWER_TOL) -> SpectralReport:
    """Entropy of a DFA's language in bits per symbol.

    Empty and finite languages report entropy 0; otherwise the value is
    log2 of the dominant component radius of the essential graph.
    """
    return analyze_graph(essential(trim(dfa)), tol=tol)


def graph_from_matrix(rows, role: str = "trim") -> LabeledGraph:
    """Labeled graph with synthetic edge labels realizing an adjacency
    matrix with multiplicities; handy for working directly on matrices."""
    n = len(rows)
    edges = []
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError("adjacency matrix must be square")
        tag = 0
        for j in range(n):
            count = rows[i][j]
            if count < 0:
                raise ValueError("adjacency entries must be non-negative")
            for _ in range(count):
                edges.append((i, f"e{tag}", j))
                tag += 1
    return LabeledGraph(tuple(range(n)), tuple(edges), role)


def matrix_spectral_radius(rows, tol: float = POWER_TOL) -> float:
    """Spectral radius of a non-negative integer matrix: the maximum of
    the component radii of the induced graph (0 for nilpotent)."""
    return analyze_graph(graph_from_matrix(rows), tol=tol).spectral_radius


def entropies_equal(h1: float, h2: float, eps: float = ENTROPY_EPS) -> bool:
    return abs(h1 - h2) < eps
