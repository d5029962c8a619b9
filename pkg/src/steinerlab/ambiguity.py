"""Ambiguous configurations: equal-length walls between types and experiments.

A configuration is ambiguous when two distinct types attain the minimal
length simultaneously. The equal-length locus between two types is a
codimension->=1 wall in configuration space, so walls are found by bisection
along paths and generic perturbation escapes them almost surely.
"""

import cmath
import math
import random
from dataclasses import dataclass

from .errors import BracketLost, DegenerateInput, DegeneratePath, NotRealizable, NoWall
from .geom import GEOM_TOL, Point
from .length import length_function
from .realization import Configuration, RealizedTree, is_realizable, make_configuration, realize
from .solver import SolveResult, solve
from .topology import CombinatorialType, canonical_code, orientation_variants

CODIRECTION_TOL = 1e-7


@dataclass
class AmbiguityReport:
    ambiguous: bool
    witness: tuple[RealizedTree, RealizedTree] | None
    runner_up_gap: float | None
    result: SolveResult


@dataclass
class WallHit:
    t_star: float
    config_at_t: Configuration
    type_pair: tuple[CombinatorialType, CombinatorialType]
    lengths: tuple[float, float]
    gap: float

    def to_json(self) -> dict:
        return {
            "t_star": self.t_star,
            "config": [[p.real, p.imag] for p in self.config_at_t],
            "types": [t.to_json() for t in self.type_pair],
            "lengths": list(self.lengths),
            "gap": self.gap,
        }


@dataclass
class PathTrace:
    samples: list[tuple[float, bytes, float]]  # (t, winner code, min length)
    events: list[tuple[float, float]]  # intervals where the winner changes

    def to_json(self) -> dict:
        return {
            "samples": [
                {"t": t, "winner": code.decode("ascii"), "length": ln}
                for t, code, ln in self.samples
            ],
            "events": [list(ev) for ev in self.events],
        }


def is_ambiguous(p: Configuration, tol: float = 1e-9) -> AmbiguityReport:
    """Decide ambiguity at p; on True the report carries a witness tree pair."""
    res = solve(p, tie_tolerance=tol)
    if res.ambiguous:
        return AmbiguityReport(True, (res.minimal[0].tree, res.minimal[1].tree), None, res)
    return AmbiguityReport(False, None, res.runner_up_gap(), res)


def _lerp(p0: Configuration, p1: Configuration, t: float) -> tuple[Point, ...]:
    return tuple((1.0 - t) * a + t * b for a, b in zip(p0, p1))


def _config_on_path(p0: Configuration, p1: Configuration, t: float) -> Configuration:
    pts = _lerp(p0, p1, t)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= GEOM_TOL:
                raise DegeneratePath(f"points {i} and {j} collide at t={t}")
    return pts


def trace_path(p0: Configuration, p1: Configuration, samples: int = 256) -> PathTrace:
    """Sample the linear path, recording the winning type and change intervals."""
    a = make_configuration(p0)
    b = make_configuration(p1)
    if len(a) != len(b):
        raise DegenerateInput("path endpoints have different sizes")
    if samples < 2:
        raise DegenerateInput("need at least 2 samples")
    rows: list[tuple[float, bytes, float]] = []
    for k in range(samples):
        t = k / (samples - 1)
        cfg = _config_on_path(a, b, t)
        res = solve(cfg)
        best = res.minimal[0]
        rows.append((t, canonical_code(best.type), best.length))
    events = [
        (rows[k][0], rows[k + 1][0])
        for k in range(len(rows) - 1)
        if rows[k][1] != rows[k + 1][1]
    ]
    return PathTrace(rows, events)


def _resolve_hint(
    hint: CombinatorialType, cfg: Configuration
) -> RealizedTree | None:
    """Realize whichever plane orientation of the hinted type works at cfg."""
    for variant in orientation_variants(hint):
        try:
            return realize(variant, cfg)
        except NotRealizable:
            continue
    return None


def find_wall(
    p0: Configuration,
    p1: Configuration,
    type_pair_hint: tuple[CombinatorialType, CombinatorialType] | None = None,
    wall_tolerance: float = 1e-10,
    max_iter: int = 200,
) -> WallHit:
    """Locate the equal-length wall between the winning types of p0 and p1.

    Bisection runs on the sign of the Maxwell length difference wherever both
    types realize; where one side loses realizability the realizability
    boundary itself drives the bracket (that boundary is the wall for
    degenerating pairs such as tripod vs path). Raises NoWall when both
    endpoints are won by the same type, BracketLost when both types die
    inside the bracket.
    """
    a = make_configuration(p0)
    b = make_configuration(p1)
    if len(a) != len(b):
        raise DegenerateInput("path endpoints have different sizes")

    if type_pair_hint is not None:
        h0, h1 = type_pair_hint
        rt0 = _resolve_hint(h0, a)
        rt1 = _resolve_hint(h1, b)
        if rt0 is None or rt1 is None:
            raise DegenerateInput("hinted types do not realize at the path endpoints")
        t0, t1 = rt0.type_ref, rt1.type_ref
    else:
        res0 = solve(a)
        res1 = solve(b)
        t0 = res0.minimal[0].type
        rt0 = res0.minimal[0].tree
        t1 = res1.minimal[0].type
        rt1 = res1.minimal[0].tree
    if canonical_code(t0) == canonical_code(t1):
        raise NoWall("both endpoints are won by the same combinatorial type")

    def measure(t: float):
        """(g, F0, F1, cfg) at path parameter t; None entries where unrealizable."""
        cfg = _config_on_path(a, b, t)
        f0 = f1 = None
        try:
            f0 = length_function(realize(t0, cfg)).evaluate(cfg)
        except NotRealizable:
            pass
        try:
            f1 = length_function(realize(t1, cfg)).evaluate(cfg)
        except NotRealizable:
            pass
        return f0, f1, cfg

    lo, hi = 0.0, 1.0
    lf0 = length_function(rt0)
    lf1 = length_function(rt1)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f0, f1, cfg = measure(mid)
        if f0 is not None and f1 is not None:
            gap = f0 - f1
            if abs(gap) < wall_tolerance:
                return WallHit(mid, cfg, (t0, t1), (f0, f1), abs(gap))
            if gap < 0.0:
                lo = mid
            else:
                hi = mid
        elif f0 is not None:
            lo = mid
        elif f1 is not None:
            hi = mid
        else:
            raise BracketLost(lo, hi)
        if hi - lo < 1e-15:
            # realizability boundary wall: evaluate both Maxwell forms at the
            # boundary point using coefficients from the endpoint realizations
            mid = 0.5 * (lo + hi)
            cfg = _config_on_path(a, b, mid)
            f0 = lf0.evaluate(cfg)
            f1 = lf1.evaluate(cfg)
            gap = abs(f0 - f1)
            if gap < wall_tolerance:
                return WallHit(mid, cfg, (t0, t1), (f0, f1), gap)
            raise BracketLost(lo, hi, f"boundary gap {gap} above tolerance")
    raise BracketLost(lo, hi, f"no convergence in {max_iter} bisection steps")


@dataclass
class PerturbationReport:
    fraction_still_ambiguous: float
    rows: list[tuple[int, int, bool, float, float | None]]
    # rows: (trial, seed_offset, ambiguous, min_length, runner_up_gap)


def perturbation_experiment(
    p: Configuration, sigma: float, trials: int, seed: int
) -> PerturbationReport:
    """Gaussian-perturb an ambiguous configuration and count surviving ties.

    The ambiguous set has measure zero, so any sigma well above the tie
    tolerance should report a zero fraction.
    """
    cfg = make_configuration(p)
    base = is_ambiguous(cfg)
    if not base.ambiguous:
        raise DegenerateInput("perturbation experiment requires an ambiguous start")
    rows = []
    still = 0
    for trial in range(trials):
        rng = random.Random(seed + trial)
        pts = tuple(
            q + complex(rng.gauss(0.0, sigma), rng.gauss(0.0, sigma)) for q in cfg
        )
        rep = is_ambiguous(pts)
        if rep.ambiguous:
            still += 1
        rows.append(
            (
                trial,
                trial,
                rep.ambiguous,
                rep.result.min_length,
                rep.runner_up_gap,
            )
        )
    return PerturbationReport(still / trials if trials else 0.0, rows)


def codirection_check(
    p: Configuration, t1: CombinatorialType, t2: CombinatorialType
) -> bool:
    """True iff two full-type realizations leave every terminal in the same
    direction (within 1e-7 rad). Distinct types should never be codirected;
    any True from this check is a counterexample worth preserving.
    """
    if not (t1.is_full and t2.is_full):
        raise DegenerateInput("codirection check needs full types")
    if canonical_code(t1) == canonical_code(t2):
        raise DegenerateInput("codirection check needs two distinct types")
    cfg = make_configuration(p)
    r1 = realize(t1, cfg)
    r2 = realize(t2, cfg)
    d1 = r1.terminal_directions()
    d2 = r2.terminal_directions()
    for i in range(1, t1.n_terminals + 1):
        delta = abs(cmath.phase(d1[i][0] / d2[i][0]))
        if delta > CODIRECTION_TOL:
            return False
    return True


def codirection_harness(
    n: int, trials: int, seed: int
) -> tuple[int, list[tuple[Configuration, CombinatorialType, CombinatorialType]]]:
    """Run the codirection check over random configurations.

    Draws trials configurations uniformly from [0,1]^2n, realizes every full
    plane variant, and checks all jointly realizable pairs. Returns the count
    of checked pairs and the list of counterexamples (expected empty).
    """
    from .topology import enumerate_full_types

    rng = random.Random(seed)
    variants = [
        v for t in enumerate_full_types(n) for v in orientation_variants(t)
    ]
    checked = 0
    counterexamples = []
    for _ in range(trials):
        pts = tuple(complex(rng.random(), rng.random()) for _ in range(n))
        realized = []
        for v in variants:
            if is_realizable(v, pts):
                realized.append(v)
        for i in range(len(realized)):
            for j in range(i + 1, len(realized)):
                checked += 1
                if codirection_check(pts, realized[i], realized[j]):
                    counterexamples.append((pts, realized[i], realized[j]))
    return checked, counterexamples
