"""Exhaustive Steiner minimal tree solver plus an independent relaxation oracle.

`solve` enumerates every combinatorial type, expands all plane orientations,
realizes each candidate and ranks by length; everything realizable is kept so
ties (ambiguous configurations) surface explicitly. `smith_relax` is the
cross-check: a fixed-point sweep that moves every Steiner vertex to the
Fermat point of its three neighbors, which converges to the length minimum
of the topology (possibly a collapsed/degenerate limit) without touching the
Melzak construction.
"""

import math
import random
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateInput, NoConvergence, NotRealizable
from .geom import GEOM_TOL, Point, angle_at, orientation, third_equilateral_point
from .realization import Configuration, RealizedTree, make_configuration, realize
from .topology import (
    CombinatorialType,
    canonical_code,
    enumerate_types,
    full_components,
    orientation_variants,
)

OBTUSE = 2.0 * math.pi / 3.0


class Candidate(NamedTuple):
    type: CombinatorialType
    tree: RealizedTree
    length: float


@dataclass
class SolveResult:
    candidates: list[Candidate]  # ascending (length, canonical code)
    minimal: list[Candidate]  # within tie_tolerance of the best
    ambiguous: bool
    tie_tolerance: float

    @property
    def min_length(self) -> float:
        if not self.candidates:
            raise NotRealizable("no combinatorial type realizes this configuration")
        return self.candidates[0].length

    def runner_up_gap(self) -> float | None:
        """Length gap from the best tree to the first non-minimal candidate."""
        if len(self.candidates) <= len(self.minimal):
            return None
        return self.candidates[len(self.minimal)].length - self.min_length

    def to_json(self) -> dict:
        return {
            "candidates": [c.tree.to_json() for c in self.candidates],
            "minimal": [c.tree.to_json() for c in self.minimal],
            "ambiguous": self.ambiguous,
            "tie_tolerance": self.tie_tolerance,
        }


def fermat_point(a: Point, b: Point, c: Point) -> Point:
    """Geometric median of three points.

    Returns the vertex when its angle reaches 2*pi/3 (or when two inputs
    coincide); otherwise the interior isogonic point, found as the
    intersection of two Simpson segments.
    """
    if abs(a - b) < GEOM_TOL:
        return a
    if abs(a - c) < GEOM_TOL or abs(b - c) < GEOM_TOL:
        return c
    if angle_at(a, b, c) >= OBTUSE:
        return a
    if angle_at(b, a, c) >= OBTUSE:
        return b
    if angle_at(c, a, b) >= OBTUSE:
        return c
    e_ab = third_equilateral_point(a, b, "right" if orientation(a, b, c) > 0 else "left")
    e_bc = third_equilateral_point(b, c, "right" if orientation(b, c, a) > 0 else "left")
    d1 = c - e_ab
    d2 = a - e_bc
    denom = d1.real * d2.imag - d1.imag * d2.real
    if abs(denom) < GEOM_TOL:
        return (a + b + c) / 3.0  # near-degenerate sliver; any interior point works
    w = e_bc - e_ab
    t = (w.real * d2.imag - w.imag * d2.real) / denom
    return e_ab + t * d1


def _graph_distances(t: CombinatorialType) -> dict[int, dict[int, int]]:
    """Hop counts from every Steiner vertex (BFS; trees are tiny here)."""
    out: dict[int, dict[int, int]] = {}
    for src in t.steiner_ids:
        d = {src: 0}
        queue = [src]
        while queue:
            v = queue.pop(0)
            for w in t.adjacency[v]:
                if w not in d:
                    d[w] = d[v] + 1
                    queue.append(w)
        out[src] = d
    return out


def smith_relax(
    t: CombinatorialType,
    p: Configuration,
    max_iter: int = 10000,
    tol: float = 1e-10,
) -> RealizedTree:
    """Fixed-point relaxation of the Steiner points of a topology.

    Starts every Steiner vertex at a distance-weighted centroid of its full
    component's terminals and sweeps until the largest movement drops below
    tol. Pure fixed point (damping 1.0); drops to damping 0.5 when movements
    oscillate. The result is approximate and may be a collapsed limit where
    the exact construction reports NotRealizable.
    """
    cfg = make_configuration(p)
    n = t.n_terminals
    if len(cfg) != n:
        raise DegenerateInput(f"type has {n} terminals, configuration has {len(cfg)}")
    pos: dict[int, Point] = {i + 1: cfg[i] for i in range(n)}
    steiner = t.steiner_ids
    if steiner:
        # Weighted centroid of the component's terminals, weights 2^-d by graph
        # distance: a plain centroid would start every Steiner point of a
        # component at the same spot and the coincident-neighbor Fermat case
        # would freeze them there.
        dist = _graph_distances(t)
        for piece in full_components(t).components:
            for pid in piece.steiner_ids:
                wsum = 0.0
                acc = 0j
                for term in piece.terminal_ids:
                    w = 2.0 ** (-dist[pid][term])
                    wsum += w
                    acc += w * cfg[term - 1]
                pos[pid] = acc / wsum

    edges = t.edges()
    budget = [max_iter]

    def sweep_until_still() -> bool:
        damping = 1.0
        prev_move = math.inf
        rising = 0
        while budget[0] > 0:
            budget[0] -= 1
            move = 0.0
            for s in steiner:
                a, b, c = (pos[w] for w in t.adjacency[s])
                target = fermat_point(a, b, c)
                new = pos[s] + damping * (target - pos[s])
                move = max(move, abs(new - pos[s]))
                pos[s] = new
            if move < tol:
                return True
            if move > prev_move * (1.0 + 1e-12):
                rising += 1
                if rising >= 3:
                    damping = 0.5
            else:
                rising = 0
            prev_move = move
        return False

    def total_len() -> float:
        return sum(abs(pos[a] - pos[b]) for a, b in edges)

    def blob_locked() -> bool:
        """A Steiner vertex fused onto a neighbor: the absorbing vertex case."""
        diam = max(abs(a - b) for a in cfg for b in cfg)
        for s in steiner:
            for w in t.adjacency[s]:
                if abs(pos[s] - pos[w]) < 1e-6 * diam:
                    return True
        return False

    converged = sweep_until_still() if steiner else True
    if converged and steiner and blob_locked():
        # Coordinate descent cannot split a fused junction, and such locks can
        # be spurious for the starting geometry. Retry from seeded jittered
        # starts at several scales, keeping the shortest converged state;
        # genuine collapses (e.g. the tripod on an obtuse triangle) simply
        # re-collapse to the same value.
        best_pos = dict(pos)
        best_len = total_len()
        diam = max(abs(a - b) for a in cfg for b in cfg)
        for attempt in range(24):
            scale = diam * (0.5, 5e-2, 5e-3, 5e-4)[attempt % 4]
            rng = random.Random(0x5EED + 97 * attempt)
            for s in steiner:
                jig = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                pos[s] = best_pos[s] + scale * jig
            if sweep_until_still():
                if total_len() < best_len - 1e-13:
                    best_len = total_len()
                    best_pos = dict(pos)
                    if not blob_locked():
                        break
        pos.clear()
        pos.update(best_pos)
    if not converged:
        raise NoConvergence(f"relaxation still moving after {max_iter} sweeps")
    return RealizedTree(t, pos, edges, total_len())


def solve(
    p: Configuration, tie_tolerance: float = 1e-9, cap: int | None = None
) -> SolveResult:
    """All minimal Steiner trees of a configuration, ranked by length.

    Deterministic: candidates are sorted by (length, canonical code), so the
    output is identical no matter how the per-type work is scheduled.
    """
    cfg = make_configuration(p)
    n = len(cfg)
    found: list[Candidate] = []
    for t in enumerate_types(n, cap):
        for variant in orientation_variants(t):
            try:
                rt = realize(variant, cfg)
            except NotRealizable:
                continue
            found.append(Candidate(variant, rt, rt.total_length))
    found.sort(key=lambda cand: (cand.length, canonical_code(cand.type)))
    if found:
        best = found[0].length
        minimal = [c for c in found if c.length <= best + tie_tolerance]
    else:
        minimal = []
    return SolveResult(found, minimal, len(minimal) >= 2, tie_tolerance)


def minimal_types(p: Configuration, tol: float = 1e-9) -> list[CombinatorialType]:
    """Types attaining the minimum at p (projection of solve().minimal)."""
    return [c.type for c in solve(p, tol).minimal]
