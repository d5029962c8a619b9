import cmath
import math
import random

import pytest

from steinerlab.errors import DegenerateInput, NotRealizable
from steinerlab.length import (
    length_function,
    length_gradient,
    maxwell_coefficients,
    maxwell_length,
)
from steinerlab.realization import realize, realize_full
from steinerlab.topology import CombinatorialType, enumerate_full_types, orientation_variants
from conftest import SQRT3, random_realizable_full


def realized_tripod(cfg):
    for v in orientation_variants(enumerate_full_types(3)[0]):
        try:
            return realize_full(v, cfg)
        except NotRealizable:
            continue
    raise AssertionError("tripod should realize here")


def fd_gradient(t, cfg, h=1e-6):
    """Independent oracle: central differences of the realized length."""
    out = []
    for i in range(len(cfg)):
        for axis in (1.0, 1j):
            plus = list(cfg)
            minus = list(cfg)
            plus[i] = cfg[i] + h * axis
            minus[i] = cfg[i] - h * axis
            lp = realize_full(t, tuple(plus)).total_length
            lm = realize_full(t, tuple(minus)).total_length
            out.append((lp - lm) / (2 * h))
    return out


class TestMaxwellCoefficients:
    def test_tripod_coefficients_sum_zero_and_angles(self, equilateral):
        rt = realized_tripod(equilateral)
        mc = maxwell_coefficients(rt)
        assert abs(sum(mc.c)) < 1e-9
        # oracle: conjugate directions computed straight from the embedding
        s = rt.positions[4]
        for i, ci in enumerate(mc.c):
            d = rt.positions[i + 1] - s
            assert abs(ci - (d / abs(d)).conjugate()) < 1e-12
        args = sorted(cmath.phase(ci) for ci in mc.c)
        gaps = {
            round((args[1] - args[0]) / (2 * math.pi / 3)),
            round((args[2] - args[1]) / (2 * math.pi / 3)),
        }
        assert gaps == {1}

    def test_unit_modulus(self):
        rng = random.Random(3)
        for n in (3, 4, 5):
            for _ in range(5):
                _, _, rt = random_realizable_full(rng, n)
                for ci in maxwell_coefficients(rt).c:
                    assert abs(abs(ci) - 1.0) < 1e-12

    def test_square_spine_value(self, unit_square):
        for t in enumerate_full_types(4):
            for v in orientation_variants(t):
                try:
                    rt = realize_full(v, unit_square)
                except NotRealizable:
                    continue
                mc = maxwell_coefficients(rt)
                assert abs(maxwell_length(mc, unit_square) - (1 + SQRT3)) < 1e-9

    def test_non_full_rejected(self):
        path = CombinatorialType(3, {1: (2,), 2: (1, 3), 3: (2,)})
        rt = realize(path, (0j, 1 + 0j, 2.5 + 0j))
        with pytest.raises(DegenerateInput):
            maxwell_coefficients(rt)


class TestMaxwellLength:
    def test_matches_realized_length(self, equilateral):
        rt = realized_tripod(equilateral)
        mc = maxwell_coefficients(rt)
        assert abs(maxwell_length(mc, equilateral) - SQRT3) < 1e-9

    def test_translation_invariance(self, equilateral):
        mc = maxwell_coefficients(realized_tripod(equilateral))
        shifted = tuple(p + complex(5, -7) for p in equilateral)
        assert abs(maxwell_length(mc, shifted) - SQRT3) < 1e-9

    def test_homogeneity(self, equilateral):
        mc = maxwell_coefficients(realized_tripod(equilateral))
        scaled = tuple(2 * p for p in equilateral)
        assert abs(maxwell_length(mc, scaled) - 2 * SQRT3) < 1e-9

    def test_identity_on_random_full_pairs(self):
        rng = random.Random(17)
        worst = 0.0
        for n in (3, 4, 5):
            for _ in range(30):
                _, cfg, rt = random_realizable_full(rng, n)
                mc = maxwell_coefficients(rt)
                worst = max(worst, abs(maxwell_length(mc, cfg) - rt.total_length))
                assert abs(sum(mc.c)) < 1e-9
        assert worst < 1e-9

    def test_coefficient_stability_along_realizable_segment(self):
        # same cell: slide the square's top-right corner a little; every
        # sampled intermediate must stay realizable for the same variant.
        # The direction pattern is rigid only up to one global rotation, so
        # stability means (a) frozen coefficients keep evaluating to the true
        # length and (b) pairwise coefficient ratios stay constant.
        start = (0j, 1 + 0j, 1 + 1j, 1j)
        end = (0j, 1 + 0j, complex(1.15, 1.05), 1j)
        variant = None
        for t in enumerate_full_types(4):
            for v in orientation_variants(t):
                try:
                    realize_full(v, start)
                    realize_full(v, end)
                    variant = v
                    break
                except NotRealizable:
                    continue
            if variant:
                break
        assert variant is not None
        frozen = maxwell_coefficients(realize_full(variant, start))
        base_ratios = [ci / frozen.c[0] for ci in frozen.c]
        for k in range(101):
            s = k / 100
            cfg = tuple((1 - s) * a + s * b for a, b in zip(start, end))
            rt = realize_full(variant, cfg)
            assert abs(maxwell_length(frozen, cfg) - rt.total_length) < 1e-9
            mc = maxwell_coefficients(rt)
            for r0, ci in zip(base_ratios, mc.c):
                assert abs(ci / mc.c[0] - r0) < 1e-7

    def test_rotation_equivariance_of_coefficients(self):
        rng = random.Random(29)
        v, cfg, rt = random_realizable_full(rng, 4)
        phi = 0.7
        rot = cmath.exp(1j * phi)
        rt2 = realize_full(v, tuple(p * rot for p in cfg))
        c1 = maxwell_coefficients(rt).c
        c2 = maxwell_coefficients(rt2).c
        for a, b in zip(c1, c2):
            assert abs(b - a * cmath.exp(-1j * phi)) < 1e-9
        assert abs(
            maxwell_length(maxwell_coefficients(rt2), tuple(p * rot for p in cfg))
            - rt.total_length
        ) < 1e-9


class TestLengthGradient:
    def test_unit_blocks_pointing_outward(self, equilateral):
        rt = realized_tripod(equilateral)
        mc = maxwell_coefficients(rt)
        g = length_gradient(mc, equilateral)
        s = rt.positions[4]
        for i in range(3):
            block = complex(g[2 * i], g[2 * i + 1])
            assert abs(abs(block) - 1.0) < 1e-9
            d = equilateral[i] - s
            assert abs(block - d / abs(d)) < 1e-9

    def test_gradient_blocks_sum_to_zero(self):
        rng = random.Random(41)
        for _ in range(10):
            _, cfg, rt = random_realizable_full(rng, 4)
            g = length_gradient(maxwell_coefficients(rt), cfg)
            sx = sum(g[0::2])
            sy = sum(g[1::2])
            assert abs(sx) < 1e-9 and abs(sy) < 1e-9

    def test_finite_difference_agreement(self):
        rng = random.Random(43)
        worst = 0.0
        for _ in range(25):
            v, cfg, rt = random_realizable_full(rng, 4)
            mc = maxwell_coefficients(rt)
            try:
                fd = fd_gradient(v, cfg)
            except NotRealizable:
                continue  # stepped over the cell boundary; skip this draw
            g = length_gradient(mc, cfg)
            worst = max(worst, max(abs(a - b) for a, b in zip(g, fd)))
        assert worst < 1e-5

    def test_degenerate_sum_rejected(self):
        t = CombinatorialType(2, {1: (2,), 2: (1,)})
        rt = realize(t, (0j, 1 + 0j))
        mc = length_function(rt).components[0][0]
        # antipodal coefficients cancel when both points coincide directionally
        with pytest.raises(DegenerateInput):
            length_gradient(mc, (0.5 + 0j, 0.5 + 1e-14j))


class TestLengthFunction:
    def test_path_components_evaluate_exactly(self):
        path = CombinatorialType(3, {1: (2,), 2: (1, 3), 3: (2,)})
        cfg = (0j, 1 + 0j, 2.5 + 0.4j)
        rt = realize(path, cfg)
        lf = length_function(rt)
        assert len(lf.components) == 2
        assert abs(lf.evaluate(cfg) - rt.total_length) < 1e-12
        other = (0j, 2 + 0j, 5 + 0j)
        assert abs(lf.evaluate(other) - 5.0) < 1e-12  # single edges stay exact

    def test_full_type_single_component(self, unit_square):
        for t in enumerate_full_types(4):
            for v in orientation_variants(t):
                try:
                    rt = realize_full(v, unit_square)
                except NotRealizable:
                    continue
                lf = length_function(rt)
                assert len(lf.components) == 1
                assert abs(lf.evaluate(unit_square) - rt.total_length) < 1e-12
