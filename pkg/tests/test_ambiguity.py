import math
import random

import pytest

from steinerlab.ambiguity import (
    codirection_check,
    codirection_harness,
    find_wall,
    is_ambiguous,
    perturbation_experiment,
    trace_path,
)
from steinerlab.errors import DegenerateInput, DegeneratePath, NoWall
from steinerlab.geom import angle_at
from steinerlab.length import length_function
from steinerlab.realization import is_realizable, realize
from steinerlab.errors import NotRealizable
from steinerlab.topology import (
    CombinatorialType,
    canonical_code,
    enumerate_full_types,
    orientation_variants,
)
from conftest import SQRT3, rect


OBTUSE_TRI = (0j, 1 + 0j, complex(0.5, 0.05))
EQ_TRI = (0j, 1 + 0j, complex(0.5, SQRT3 / 2))


class TestIsAmbiguous:
    def test_square_true_with_witness(self, unit_square):
        rep = is_ambiguous(unit_square)
        assert rep.ambiguous
        a, b = rep.witness
        assert abs(a.total_length - (1 + SQRT3)) < 1e-9
        assert abs(b.total_length - (1 + SQRT3)) < 1e-9
        assert canonical_code(a.type_ref) != canonical_code(b.type_ref)

    def test_rectangle_false_with_gap(self):
        rep = is_ambiguous(rect(1.1, 1.0))
        assert not rep.ambiguous
        assert rep.witness is None
        # oracle: spine Maxwell lengths (1 + 1.1*sqrt3) - (1.1 + sqrt3)
        assert abs(rep.runner_up_gap - 0.1 * (SQRT3 - 1)) < 1e-8

    def test_equilateral_false(self, equilateral):
        rep = is_ambiguous(equilateral)
        assert not rep.ambiguous


class TestTracePath:
    def test_rectangle_swap_has_one_event_around_half(self):
        tr = trace_path(rect(1.2, 1.0), rect(1.0, 1.2), samples=64)
        assert len(tr.events) == 1
        lo, hi = tr.events[0]
        assert lo < 0.5 < hi

    def test_constant_path_no_events(self, unit_square):
        # tie-broken deterministically, so the winner never flips
        tr = trace_path(unit_square, unit_square, samples=8)
        assert tr.events == []

    def test_equilateral_to_obtuse_tripod_hands_over(self):
        tr = trace_path(EQ_TRI, OBTUSE_TRI, samples=64)
        assert len(tr.events) == 1
        # oracle: tripod realizability flips inside the event interval
        tripod = enumerate_full_types(3)[0]
        lo, hi = tr.events[0]
        before = tuple((1 - lo) * a + lo * b for a, b in zip(EQ_TRI, OBTUSE_TRI))
        after = tuple((1 - hi) * a + hi * b for a, b in zip(EQ_TRI, OBTUSE_TRI))
        assert any(is_realizable(v, before) for v in orientation_variants(tripod))
        assert not any(is_realizable(v, after) for v in orientation_variants(tripod))

    def test_collision_rejected(self):
        # 17 samples puts t = 0.5 exactly on the swap path's collision
        with pytest.raises(DegeneratePath):
            trace_path((0j, 1 + 0j), (1 + 0j, 0j), samples=17)

    def test_json_shape(self):
        tr = trace_path(rect(1.2, 1.0), rect(1.0, 1.2), samples=8)
        doc = tr.to_json()
        assert len(doc["samples"]) == 8
        assert all({"t", "winner", "length"} <= set(s) for s in doc["samples"])


class TestFindWall:
    def test_rectangle_wall_at_half(self):
        hit = find_wall(rect(1.2, 1.0), rect(1.0, 1.2))
        assert abs(hit.t_star - 0.5) < 1e-8
        assert hit.gap < 1e-10
        # the wall configuration is the square up to scale
        xs = sorted(p.real for p in hit.config_at_t)
        ys = sorted(p.imag for p in hit.config_at_t)
        assert abs((xs[-1] - xs[0]) - (ys[-1] - ys[0])) < 1e-7

    def test_swapped_endpoints_mirror_t_star(self):
        h1 = find_wall(rect(1.2, 1.0), rect(1.0, 1.2))
        h2 = find_wall(rect(1.0, 1.2), rect(1.2, 1.0))
        assert abs(h2.t_star - (1 - h1.t_star)) < 1e-8

    def test_dominated_pair_no_wall(self):
        with pytest.raises(NoWall):
            find_wall(rect(2.0, 1.0), rect(1.5, 1.0))

    def test_tripod_path_wall_with_hint(self):
        tripod = enumerate_full_types(3)[0]
        path_mid_3 = CombinatorialType(3, {1: (3,), 3: (1, 2), 2: (3,)})
        hit = find_wall(EQ_TRI, OBTUSE_TRI, type_pair_hint=(tripod, path_mid_3))
        assert hit.gap < 1e-10
        # oracle: the degenerating terminal's angle reaches 2*pi/3 at the wall
        cfg = hit.config_at_t
        assert abs(angle_at(cfg[2], cfg[0], cfg[1]) - 2 * math.pi / 3) < 1e-7

    def test_wall_witnesses_valid_and_near_minimal(self):
        from test_realization import assert_tree_invariants
        hit = find_wall(rect(1.2, 1.0), rect(1.0, 1.2))
        for t in hit.type_pair:
            rt = realize(t, hit.config_at_t)
            assert_tree_invariants(rt)
            assert rt.total_length <= hit.lengths[0] + 1e-8

    def test_g_is_continuous_near_the_wall(self):
        # operational analyticity: sample the Maxwell difference at 1e-3
        # steps around the wall; increments must not jump
        a, b = rect(1.2, 1.0), rect(1.0, 1.2)
        hit = find_wall(a, b)
        t0, t1 = hit.t_star - 0.05, hit.t_star + 0.05

        def g(t):
            cfg = tuple((1 - t) * x + t * y for x, y in zip(a, b))
            vals = []
            for typ in hit.type_pair:
                vals.append(length_function(realize(typ, cfg)).evaluate(cfg))
            return vals[0] - vals[1]

        ts = [t0 + k * 1e-3 for k in range(int((t1 - t0) / 1e-3) + 1)]
        gs = [g(t) for t in ts]
        diffs = [abs(y - x) for x, y in zip(gs, gs[1:])]
        lipschitz = sorted(diffs)[len(diffs) // 2]  # median local slope
        assert max(diffs) <= 10 * max(lipschitz, 1e-12)


class TestPerturbation:
    def test_square_escapes(self, unit_square):
        rep = perturbation_experiment(unit_square, 1e-3, 50, 7)
        assert rep.fraction_still_ambiguous == 0.0
        assert len(rep.rows) == 50

    def test_sigma_zero_stays(self, unit_square):
        rep = perturbation_experiment(unit_square, 0.0, 10, 3)
        assert rep.fraction_still_ambiguous == 1.0

    def test_requires_ambiguous_start(self, equilateral):
        with pytest.raises(DegenerateInput):
            perturbation_experiment(equilateral, 1e-3, 5, 0)

    def test_deterministic_given_seed(self, unit_square):
        # tiny sigma: no assertion about the value, only reproducibility
        r1 = perturbation_experiment(unit_square, 1e-12, 10, 11)
        r2 = perturbation_experiment(unit_square, 1e-12, 10, 11)
        assert r1.rows == r2.rows


class TestCodirection:
    def test_square_spines_not_codirected(self, unit_square):
        realized = [
            v
            for t in enumerate_full_types(4)
            for v in orientation_variants(t)
            if is_realizable(v, unit_square)
        ]
        assert len(realized) == 2
        assert codirection_check(unit_square, realized[0], realized[1]) is False

    def test_same_type_rejected(self, unit_square):
        realized = [
            v
            for t in enumerate_full_types(4)
            for v in orientation_variants(t)
            if is_realizable(v, unit_square)
        ]
        with pytest.raises(DegenerateInput):
            codirection_check(unit_square, realized[0], realized[0])

    def test_unrealizable_passthrough(self, obtuse_triangle):
        vs = orientation_variants(enumerate_full_types(3)[0])
        with pytest.raises((NotRealizable, DegenerateInput)):
            codirection_check(obtuse_triangle, vs[0], vs[1])

    def test_harness_small(self):
        checked, ces = codirection_harness(4, 60, 13)
        assert checked > 0
        assert ces == []
