"""Edge-probability models for inhomogeneous random graphs.

A model assigns an inclusion probability to every vertex pair and each
pair is sampled independently. Uniform draws happen in ascending (u, v)
order, so a fixed seed always reproduces the same graph.

Alpha statistics (the min / max per-vertex average probability and the
overall pair average) are computed in exact rational arithmetic and only
rounded on the way out; this keeps guaranteed identities like
alpha_up == a for the example family bit-exact.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from .graph import Graph

__all__ = [
    "ModelError",
    "EdgeProbabilityModel",
    "HomogeneousModel",
    "ExplicitModel",
    "ExampleFamilyModel",
    "AlphaStats",
    "alpha_stats",
    "ConditionCheck",
    "check_condition",
    "sample_graph",
    "parse_model_spec",
    "load_model_spec",
    "read_lower_triangular",
]


class ModelError(ValueError):
    """Invalid model parameters or model spec input."""


class EdgeProbabilityModel:
    """Base class: a symmetric pair-probability assignment on n vertices."""

    kind = "base"

    def __init__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool):
            raise ModelError(f"vertex count must be an int, got {n!r}")
        if n < 2:
            raise ModelError("a model needs at least two vertices")
        self.n = n
        self._pair_probs = None
        self._alpha = None

    def probability(self, u: int, v: int) -> float:
        raise NotImplementedError

    def probability_row(self, u: int) -> np.ndarray:
        """Length-n vector of p(u, v) with 0.0 in the diagonal slot."""
        raise NotImplementedError

    def row_value_counts(self, u: int) -> list[tuple[float, int]]:
        """Distinct probability values of row u with multiplicities.

        The diagonal slot is excluded; counts sum to n - 1. Subclasses with
        O(1) structure may override, the default tallies the actual row.
        """
        row = self.probability_row(u)
        values, counts = np.unique(row, return_counts=True)
        out = []
        for value, count in zip(values.tolist(), counts.tolist()):
            if value == 0.0:
                count -= 1  # drop the diagonal slot
            if count:
                out.append((value, count))
        return out

    def pair_probabilities(self) -> np.ndarray:
        """Probabilities for all pairs u < v in lexicographic order (cached)."""
        if self._pair_probs is None:
            n = self.n
            out = np.empty(n * (n - 1) // 2)
            pos = 0
            for u in range(n - 1):
                row = self.probability_row(u)
                out[pos:pos + n - 1 - u] = row[u + 1:]
                pos += n - 1 - u
            self._pair_probs = out
        return self._pair_probs

    def _check_pair(self, u: int, v: int):
        for w in (u, v):
            if not isinstance(w, int) or isinstance(w, bool):
                raise ModelError(f"vertex must be an int, got {w!r}")
            if not 0 <= w < self.n:
                raise ModelError(f"vertex {w} out of range for n={self.n}")
        if u == v:
            raise ModelError("pair probability is undefined on the diagonal")


class HomogeneousModel(EdgeProbabilityModel):
    """Every pair has the same probability p."""

    kind = "homogeneous"

    def __init__(self, n: int, p: float):
        super().__init__(n)
        p = float(p)
        if not 0.0 <= p <= 1.0 or math.isnan(p):
            raise ModelError(f"probability must lie in [0, 1], got {p}")
        self.p = p

    def probability(self, u, v):
        self._check_pair(u, v)
        return self.p

    def probability_row(self, u):
        self._check_pair(0 if u else 1, u)
        row = np.full(self.n, self.p)
        row[u] = 0.0
        return row

    def row_value_counts(self, u):
        return [(self.p, self.n - 1)]

    def __repr__(self):
        return f"HomogeneousModel(n={self.n}, p={self.p})"


class ExplicitModel(EdgeProbabilityModel):
    """Probabilities given as a full symmetric matrix (diagonal ignored)."""

    kind = "matrix"

    def __init__(self, n: int, matrix):
        super().__init__(n)
        mat = np.array(matrix, dtype=float)
        if mat.shape != (n, n):
            raise ModelError(f"matrix shape {mat.shape} does not match n={n}")
        if not np.array_equal(mat, mat.T):
            raise ModelError("probability matrix must be symmetric")
        np.fill_diagonal(mat, 0.0)
        if np.isnan(mat).any() or (mat < 0).any() or (mat > 1).any():
            raise ModelError("matrix entries must lie in [0, 1]")
        self.matrix = mat

    def probability(self, u, v):
        self._check_pair(u, v)
        return float(self.matrix[u, v])

    def probability_row(self, u):
        self._check_pair(0 if u else 1, u)
        return self.matrix[u].copy()

    def __repr__(self):
        return f"ExplicitModel(n={self.n})"


class ExampleFamilyModel(EdgeProbabilityModel):
    """Structured two-parameter family with forced blocks and a cycle.

    With k = floor(n / ln n): pairs inside the first block {0..k-1} are
    forced on, pairs inside the second block {k..2k'-1} are forced off,
    consecutive pairs on the cycle (0, 1, ..., n-1, 0) are forced on, and
    every pair touching the last vertex carries probability a exactly (this
    rule also wins on the last vertex's two cycle edges, which is what
    makes the maximum per-vertex average equal a on the nose). Everything
    else defaults to b.
    """

    kind = "example_family"

    def __init__(self, n: int, a: float, b: float):
        super().__init__(n)
        if n < 16:
            raise ModelError("example family needs n >= 16 for nontrivial blocks")
        a, b = float(a), float(b)
        if not 0.0 < b < a < 1.0:
            raise ModelError(f"need 0 < b < a < 1, got a={a}, b={b}")
        self.a = a
        self.b = b
        self.first_block_end = int(n / math.log(n))        # k, exclusive
        self.second_block_end = int(2 * n / math.log(n))   # exclusive

    def probability(self, u, v):
        self._check_pair(u, v)
        if u > v:
            u, v = v, u
        n = self.n
        if v == n - 1:
            return self.a
        if v - u == 1:
            return 1.0  # cycle edge; the (0, n-1) wrap is the case above
        if v < self.first_block_end:
            return 1.0
        if u >= self.first_block_end and v < self.second_block_end:
            return 0.0
        return self.b

    def probability_row(self, u):
        self._check_pair(0 if u else 1, u)
        n, k, k2 = self.n, self.first_block_end, self.second_block_end
        row = np.full(n, self.b)
        if u < k:
            row[:k] = 1.0
        elif u < k2:
            row[k:k2] = 0.0
        # the cycle overrides the zero block
        row[(u + 1) % n] = 1.0
        row[(u - 1) % n] = 1.0
        # the last vertex's rule overrides everything, the cycle included
        if u == n - 1:
            row[:] = self.a
        else:
            row[n - 1] = self.a
        row[u] = 0.0
        return row

    def __repr__(self):
        return f"ExampleFamilyModel(n={self.n}, a={self.a}, b={self.b})"


# -- alpha statistics --------------------------------------------------------


@dataclass(frozen=True)
class AlphaStats:
    """Per-vertex average probabilities and their min / max / overall mean."""

    alpha_low: float
    alpha_up: float
    alpha_e: float
    per_vertex_avg: tuple[float, ...]


def alpha_stats(model: EdgeProbabilityModel) -> AlphaStats:
    """Exact alpha statistics of a model.

    alpha_low / alpha_up are the min / max over vertices of the average
    probability towards the other n-1 vertices; alpha_e is the average over
    all pairs. Computed with Fractions so that e.g. a homogeneous model
    reports (p, p, p) exactly. Results are cached on the model.
    """
    if model._alpha is not None:
        return model._alpha
    n = model.n
    seen: dict[float, Fraction] = {}
    sums = []
    for u in range(n):
        s = Fraction(0)
        for value, count in model.row_value_counts(u):
            frac = seen.get(value)
            if frac is None:
                frac = seen[value] = Fraction(value)
            s += frac * count
        sums.append(s)
    averages = [s / (n - 1) for s in sums]
    low = min(averages)
    up = max(averages)
    # sum over rows counts each pair twice
    overall = sum(sums) / (n * (n - 1))
    stats = AlphaStats(
        alpha_low=float(low),
        alpha_up=float(up),
        alpha_e=float(overall),
        per_vertex_avg=tuple(float(x) for x in averages),
    )
    model._alpha = stats
    return stats


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of the two-sided density window test."""

    holds: bool
    margin: float
    lower_slack: float
    upper_slack: float


def check_condition(stats: AlphaStats, n: int, beta: float, gamma: float) -> ConditionCheck:
    """Test the finite-size density window on alpha statistics.

    Lower side: alpha_low must be at least n^-beta. Upper side: alpha_up
    must not exceed max(1/2, 1 - sqrt(alpha_e / 2)) - n^-gamma. The margin
    is the smaller slack, negative when violated.
    """
    _check_exponents(beta, gamma)
    if n < 2:
        raise ValueError("condition check needs n >= 2")
    lower_slack = stats.alpha_low - n ** (-beta)
    cap = max(0.5, 1.0 - math.sqrt(stats.alpha_e / 2.0)) - n ** (-gamma)
    upper_slack = cap - stats.alpha_up
    margin = min(lower_slack, upper_slack)
    return ConditionCheck(
        holds=lower_slack >= 0.0 and upper_slack >= 0.0,
        margin=margin,
        lower_slack=lower_slack,
        upper_slack=upper_slack,
    )


def _check_exponents(beta: float, gamma: float):
    if not 0.0 < beta < 0.5:
        raise ValueError(f"beta must lie in (0, 1/2), got {beta}")
    if not 0.0 < gamma < 0.5 - beta:
        raise ValueError(f"gamma must lie in (0, 1/2 - beta), got gamma={gamma}, beta={beta}")


# -- sampling ----------------------------------------------------------------


@lru_cache(maxsize=32)
def _pair_indices(n: int):
    iu, iv = np.triu_indices(n, k=1)
    return iu.astype(np.int32), iv.astype(np.int32)


def sample_graph(model: EdgeProbabilityModel, rng) -> Graph:
    """Draw one graph: each pair u < v appears independently with p(u, v).

    One uniform is consumed per pair in lexicographic order, so the result
    is a deterministic function of the rng state.
    """
    n = model.n
    pvec = model.pair_probabilities()
    draws = rng.random(pvec.shape[0])
    included = draws < pvec
    iu, iv = _pair_indices(n)
    adj = np.zeros((n, n), dtype=bool)
    su, sv = iu[included], iv[included]
    adj[su, sv] = True
    adj[sv, su] = True
    return Graph.from_bool_adjacency(adj)


# -- model spec files --------------------------------------------------------
#
# key: value lines, "#" comments and blank lines ignored, e.g.
#
#   type: example_family
#   n: 300
#   a: 0.4
#   b: 0.2
#
# "type: homogeneous" takes "p:"; "type: matrix" takes "matrix_file:" whose
# file holds n-1 whitespace-separated lower-triangular rows (row i lists
# p(i,0) .. p(i,i-1)).


def parse_model_spec(text: str, base_dir=".") -> EdgeProbabilityModel:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ModelError(f"malformed model spec line: {line!r}")
        fields[key.strip()] = value.strip()

    kind = fields.get("type")
    if kind is None:
        raise ModelError("model spec is missing 'type'")
    n = _spec_int(fields, "n")
    if kind == "homogeneous":
        return HomogeneousModel(n, _spec_float(fields, "p"))
    if kind == "example_family":
        return ExampleFamilyModel(n, _spec_float(fields, "a"), _spec_float(fields, "b"))
    if kind == "matrix":
        name = fields.get("matrix_file")
        if not name:
            raise ModelError("matrix model spec is missing 'matrix_file'")
        path = Path(base_dir) / name
        matrix = read_lower_triangular(path, n)
        return ExplicitModel(n, matrix)
    raise ModelError(f"unknown model type {kind!r}")


def load_model_spec(path) -> EdgeProbabilityModel:
    path = Path(path)
    return parse_model_spec(path.read_text(encoding="utf-8"), base_dir=path.parent)


def _spec_int(fields, key) -> int:
    if key not in fields:
        raise ModelError(f"model spec is missing {key!r}")
    try:
        return int(fields[key])
    except ValueError:
        raise ModelError(f"model spec field {key!r} must be an integer, got {fields[key]!r}") from None


def _spec_float(fields, key) -> float:
    if key not in fields:
        raise ModelError(f"model spec is missing {key!r}")
    try:
        return float(fields[key])
    except ValueError:
        raise ModelError(f"model spec field {key!r} must be a number, got {fields[key]!r}") from None


def read_lower_triangular(path, n: int) -> np.ndarray:
    """Read a symmetric matrix given as n-1 whitespace-separated rows.

    Row i (1-based) lists the i entries p(i,0) .. p(i,i-1); the diagonal
    is zero. OS-level read failures propagate as OSError.
    """
    text = Path(path).read_text(encoding="utf-8")
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if len(rows) != n - 1:
        raise ModelError(f"expected {n - 1} lower-triangular rows, got {len(rows)}")
    mat = np.zeros((n, n))
    for i, parts in enumerate(rows, start=1):
        if len(parts) != i:
            raise ModelError(f"row {i} must have {i} entries, got {len(parts)}")
        for j, token in enumerate(parts):
            try:
                value = float(token)
            except ValueError:
                raise ModelError(f"bad matrix entry {token!r} in row {i}") from None
            mat[i, j] = value
            mat[j, i] = value
    return mat
