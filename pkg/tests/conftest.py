"""Shared fixtures: built-in models, hand-built reference models and mutants."""

from __future__ import annotations

import cmath
import itertools
import math

import numpy as np
import pytest

from anyonkit import AnyonModel, FusionRing, builtin

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

R_TAU_UNIT = cmath.exp(-4j * cmath.pi / 5.0)
R_TAU_TAU = cmath.exp(3j * cmath.pi / 5.0)
THETA_TAU = cmath.exp(4j * cmath.pi / 5.0)


def fib_oracle(k: int) -> int:
    """Fibonacci numbers with F(0) = 0, F(1) = 1, in exact integers."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@pytest.fixture(scope='session')
def fibonacci() -> AnyonModel:
    return builtin('fibonacci')


@pytest.fixture(scope='session')
def trivial() -> AnyonModel:
    return builtin('trivial')


def z2_ring(labels=('1', 'psi')) -> FusionRing:
    n = np.zeros((2, 2, 2), dtype=np.int64)
    n[0, 0, 0] = 1
    n[0, 1, 1] = 1
    n[1, 0, 1] = 1
    n[1, 1, 0] = 1
    return FusionRing(labels, (0, 1), n)


def make_fermion_model() -> AnyonModel:
    """psi x psi = 1 with trivial associator, R = -1, twist -1: degenerate S."""
    return AnyonModel.from_data(z2_ring(), {(1, 1, 1, 1, 0, 0): 1.0},
                                {(1, 1, 0): -1.0}, (1.0, -1.0))


def make_semion_model() -> AnyonModel:
    """psi x psi = 1 with F = -1, R = i, twist i: modular."""
    return AnyonModel.from_data(z2_ring(), {(1, 1, 1, 1, 0, 0): -1.0},
                                {(1, 1, 0): 1j}, (1.0, 1j))


def make_z3_model() -> AnyonModel:
    """Cyclic rank-3 model: trivial F, R[a,b] = w^(ab), twists w^(a^2)."""
    rank = 3
    n = np.zeros((rank, rank, rank), dtype=np.int64)
    for a, b in itertools.product(range(rank), repeat=2):
        n[a, b, (a + b) % rank] = 1
    ring = FusionRing(('1', 'w', 'wb'), (0, 2, 1), n)
    omega = cmath.exp(2j * cmath.pi / 3.0)
    f_entries = {}
    for key in itertools.product(range(rank), repeat=6):
        a, b, c, d, e, f = key
        if n[a, b, e] and n[e, c, d] and n[b, c, f] and n[a, f, d]:
            f_entries[key] = 1.0
    r_entries = {(a, b, (a + b) % rank): omega ** (a * b)
                 for a in range(rank) for b in range(rank)}
    theta = tuple(omega ** (a * a) for a in range(rank))
    return AnyonModel.from_data(ring, f_entries, r_entries, theta)


def fibonacci_mutant(flip_f=False, conj_r=False, theta_one=False,
                     scale_f=False) -> AnyonModel:
    """Rebuild the golden model with one targeted defect injected."""
    base = builtin('fibonacci')
    f_entries = dict(base.f.entries)
    r_entries = dict(base.r.entries)
    theta = list(base.theta)
    if flip_f:
        f_entries[(1, 1, 1, 1, 1, 1)] = -f_entries[(1, 1, 1, 1, 1, 1)]
    if conj_r:
        r_entries[(1, 1, 1)] = r_entries[(1, 1, 1)].conjugate()
    if theta_one:
        theta[1] = 1.0
    if scale_f:
        for key in list(f_entries):
            if key[:4] == (1, 1, 1, 1):
                f_entries[key] = 2.0 * f_entries[key]
    return AnyonModel.from_data(base.ring, f_entries, r_entries, tuple(theta))
