"""Three-phase engine that makes a connected graph Eulerian.

Only complement edges may be added. Phase one pairs up odd-degree
vertices that are not adjacent, in ascending order; whatever survives a
full pass is necessarily a clique of odd vertices. Phase two resolves
clique pairs with two-edge detours through outside vertices. Phase three
handles the remainder with three-edge detours, first by random probing
and then by exhaustive scan, so a failure there is a certificate that no
detour exists for that pair. A successful run adds at most three edges
per odd vertex pair.
"""

import math
from dataclasses import dataclass, field

from .graph import Graph

__all__ = [
    "PHASE_PAIRING",
    "PHASE_TWO_PATH",
    "PHASE_THREE_PATH",
    "FAIL_DISCONNECTED",
    "FAIL_NO_THREE_PATH",
    "FAIL_NOT_EXTENDABLE",
    "AddedEdge",
    "ExtensionResult",
    "ThreePathOutcome",
    "VerificationReport",
    "phase_pairing",
    "phase_clique_reduction",
    "phase_three_paths",
    "extend",
    "verify_extension",
]

PHASE_PAIRING = "pairing"
PHASE_TWO_PATH = "two_path"
PHASE_THREE_PATH = "three_path"

FAIL_DISCONNECTED = "disconnected_input"
FAIL_NO_THREE_PATH = "no_three_path"
# reserved for callers that prove a graph has no extension at all; the
# engine itself reports the phase-three pair it got stuck on instead
FAIL_NOT_EXTENDABLE = "not_extendable"


@dataclass(frozen=True)
class AddedEdge:
    """One complement edge added by the engine, tagged with its phase."""

    u: int
    v: int
    phase: str

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class ExtensionResult:
    success: bool
    t_input: int
    added_edges: tuple[AddedEdge, ...]
    failure_reason: str | None = None
    failing_pair: tuple[int, int] | None = None
    attempts_phase3: int = 0

    def phase_counts(self) -> dict[str, int]:
        counts = {PHASE_PAIRING: 0, PHASE_TWO_PATH: 0, PHASE_THREE_PATH: 0}
        for edge in self.added_edges:
            counts[edge.phase] += 1
        return counts

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [e.pair() for e in self.added_edges]


@dataclass(frozen=True)
class ThreePathOutcome:
    edges: tuple[AddedEdge, ...]
    attempts: int
    failing_pair: tuple[int, int] | None = None


def phase_pairing(g: Graph) -> tuple[list[AddedEdge], list[int]]:
    """Pair non-adjacent odd vertices greedily; mutates g.

    One ascending pass over the odd vertices, matching each unmatched one
    to its smallest unmatched non-neighbor further along. Any vertex left
    over was adjacent to everything left over, so the returned residual is
    a clique of odd-degree vertices.
    """
    odd = sorted(g.odd_vertices())
    matched: set[int] = set()
    added: list[AddedEdge] = []
    for i, u in enumerate(odd):
        if u in matched:
            continue
        for v in odd[i + 1:]:
            if v in matched or g.has_edge(u, v):
                continue
            g.add_edge(u, v)
            added.append(AddedEdge(u, v, PHASE_PAIRING))
            matched.add(u)
            matched.add(v)
            break
    residual = [u for u in odd if u not in matched]
    return added, residual


def phase_clique_reduction(g: Graph, residual: list[int]) -> tuple[list[AddedEdge], list[int]]:
    """Fix clique pairs with two-edge detours through outside vertices.

    For the smallest eligible pair (x, y) of pending vertices, pick the
    smallest z outside the *input* residual set with both (x, z) and
    (y, z) absent and add those two edges; repeat until no pair has such
    a detour. Mutates g; returns the added edges and the pending leftovers.
    """
    blocked = 0
    for u in residual:
        blocked |= 1 << u
    pending = list(residual)
    added: list[AddedEdge] = []
    while True:
        found = _find_reduction(g, pending, blocked)
        if found is None:
            break
        x, y, z = found
        for a, b in ((x, z), (y, z)):
            lo, hi = (a, b) if a < b else (b, a)
            g.add_edge(lo, hi)
            added.append(AddedEdge(lo, hi, PHASE_TWO_PATH))
        pending.remove(x)
        pending.remove(y)
    return added, pending


def _find_reduction(g: Graph, pending: list[int], blocked: int):
    for i, x in enumerate(pending):
        nx = g.non_neighbors_mask(x)
        for y in pending[i + 1:]:
            candidates = nx & g.non_neighbors_mask(y) & ~blocked
            if candidates:
                z = (candidates & -candidates).bit_length() - 1
                return x, y, z
    return None


def phase_three_paths(g: Graph, clique: list[int], rng, max_attempts_per_pair: int) -> ThreePathOutcome:
    """Resolve the leftover pairs with three-edge detours; mutates g.

    Pairs the pending vertices consecutively in ascending order. For each
    pair (u, v) it probes uniformly random (y, z) up to the attempt budget
    looking for a detour u-y-z-v (either orientation) made of three absent
    edges, then falls back to a full lexicographic scan. Only a pair with
    no detour at all stops the phase.
    """
    n = g.n
    pend = sorted(clique)
    if len(pend) % 2:
        raise AssertionError("odd-degree vertices always come in pairs")
    added: list[AddedEdge] = []
    attempts = 0
    for u, v in zip(pend[::2], pend[1::2]):
        triple = None
        if rng is not None:
            for _ in range(max_attempts_per_pair):
                attempts += 1
                y = int(rng.integers(n))
                z = int(rng.integers(n))
                triple = _valid_three_path(g, u, v, y, z)
                if triple is not None:
                    break
        if triple is None:
            triple = _scan_three_path(g, u, v)
        if triple is None:
            return ThreePathOutcome(tuple(added), attempts, failing_pair=(u, v))
        for lo, hi in triple:
            g.add_edge(lo, hi)
            added.append(AddedEdge(lo, hi, PHASE_THREE_PATH))
    return ThreePathOutcome(tuple(added), attempts, failing_pair=None)


def _valid_three_path(g: Graph, u: int, v: int, y: int, z: int):
    """Edges of a three-edge detour from u to v through y then z, or None."""
    if y == z or y == u or y == v or z == u or z == v:
        return None
    if g.has_edge(y, z):
        return None
    mid = (min(y, z), max(y, z))
    if not g.has_edge(u, y) and not g.has_edge(z, v):
        return ((min(u, y), max(u, y)), mid, (min(z, v), max(z, v)))
    if not g.has_edge(u, z) and not g.has_edge(y, v):
        return ((min(u, z), max(u, z)), mid, (min(y, v), max(y, v)))
    return None


def _scan_three_path(g: Graph, u: int, v: int):
    for y in range(g.n):
        for z in range(g.n):
            triple = _valid_three_path(g, u, v, y, z)
            if triple is not None:
                return triple
    return None


def extend(g: Graph, rng=None, max_random_attempts: int | None = None) -> ExtensionResult:
    """Add complement edges to make g Eulerian.

    The input graph is left untouched. With an rng, phase three probes
    random detours first (default budget 64 * ceil(ln n) per pair); with
    rng=None it goes straight to the deterministic exhaustive scan, so the
    whole run is reproducible without a seed.
    """
    t = g.t_value()
    if not g.is_connected():
        return ExtensionResult(False, t, (), failure_reason=FAIL_DISCONNECTED)
    if t == 0:
        return ExtensionResult(True, 0, ())
    if max_random_attempts is None:
        max_random_attempts = 64 * math.ceil(math.log(g.n)) if g.n > 1 else 64
    work = g.copy()
    added, residual = phase_pairing(work)
    two_path, pending = phase_clique_reduction(work, residual)
    added.extend(two_path)
    attempts = 0
    if pending:
        outcome = phase_three_paths(work, pending, rng, max_random_attempts)
        added.extend(outcome.edges)
        attempts = outcome.attempts
        if outcome.failing_pair is not None:
            return ExtensionResult(
                False,
                t,
                tuple(added),
                failure_reason=FAIL_NO_THREE_PATH,
                failing_pair=outcome.failing_pair,
                attempts_phase3=attempts,
            )
    return ExtensionResult(True, t, tuple(added), attempts_phase3=attempts)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def verify_extension(g: Graph, result: ExtensionResult) -> VerificationReport:
    """Independently check a successful extension against its input graph.

    Verifies that the added edges are distinct complement edges, that the
    union is connected with all degrees even, that an Euler circuit of the
    union actually exists and covers every edge once, and that the count
    stays within three edges per odd pair.
    """
    if not result.success:
        raise ValueError("only successful extensions can be verified")
    violations: list[str] = []
    seen: set[tuple[int, int]] = set()
    for edge in result.added_edges:
        u, v = edge.u, edge.v
        if not (isinstance(u, int) and isinstance(v, int)) or not (0 <= u < g.n and 0 <= v < g.n):
            violations.append(f"edge ({u}, {v}) is out of range")
            continue
        if u == v:
            violations.append(f"edge ({u}, {v}) is a self-loop")
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            violations.append(f"edge {key} was added twice")
            continue
        seen.add(key)
        if g.has_edge(u, v):
            violations.append(f"edge {key} is already in the input graph")
    if violations:
        return VerificationReport(False, tuple(violations))

    union = g.copy()
    for u, v in seen:
        union.add_edge(u, v)
    odd = union.odd_vertices()
    if odd:
        violations.append(f"{len(odd)} vertices still have odd degree")
    if not union.is_connected():
        violations.append("extended graph is not connected")
    if not violations:
        circuit = union.eulerian_circuit()
        walked: set[tuple[int, int]] = set()
        ok = True
        for a, b in zip(circuit.vertices, circuit.vertices[1:]):
            key = (min(a, b), max(a, b))
            if key in walked or not union.has_edge(a, b):
                ok = False
                break
            walked.add(key)
        if not ok or len(walked) != union.m:
            violations.append("circuit does not cover every edge exactly once")
    if len(result.added_edges) > 3 * g.t_value():
        violations.append(
            f"{len(result.added_edges)} edges added, above three per odd pair "
            f"(t={g.t_value()})"
        )
    return VerificationReport(not violations, tuple(violations))
