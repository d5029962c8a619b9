"""Shared fixtures: canonical configurations and random sampling helpers."""

import math
import random

import pytest

from steinerlab.errors import NotRealizable
from steinerlab.realization import realize_full
from steinerlab.topology import enumerate_full_types, orientation_variants

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def equilateral():
    return (0j, 1 + 0j, complex(0.5, SQRT3 / 2))


@pytest.fixture
def unit_square():
    return (0j, 1 + 0j, 1 + 1j, 1j)


@pytest.fixture
def obtuse_triangle():
    # angle at point 1 is acos(-0.8) ~ 143 degrees > 2*pi/3
    return (0j, 1 + 0j, complex(-0.8, 0.6))


def rect(w: float, h: float):
    return (0j, complex(w, 0), complex(w, h), complex(0, h))


def random_config(rng: random.Random, n: int, lo=0.0, hi=1.0):
    return tuple(complex(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(n))


def random_realizable_full(rng: random.Random, n: int, max_draws: int = 2000):
    """Draw (full oriented type, configuration, tree) with the type realizable.

    Rejection-samples uniform configurations and scans full plane variants.
    """
    variants = [v for t in enumerate_full_types(n) for v in orientation_variants(t)]
    for _ in range(max_draws):
        cfg = random_config(rng, n)
        rng.shuffle(variants)
        for v in variants:
            try:
                return v, cfg, realize_full(v, cfg)
            except NotRealizable:
                continue
    raise AssertionError(f"no realizable full type found in {max_draws} draws (n={n})")
