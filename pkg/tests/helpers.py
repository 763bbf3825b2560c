"""Shared test data and independent oracles.

The oracles here deliberately avoid the library's own fast paths: the
permutation sum expands the symmetrized product the factorial-cost way,
and complex multisets are matched by exhaustive assignment, so agreement
with the package is evidence rather than tautology.
"""

import itertools
import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from stellar import BlochPoint, Constellation, PureState, make_pure_state

RT3 = math.sqrt(3.0)

# Two-qubit reference states used throughout: an entangled pair whose
# Majorana points sit on the equator, and the balanced product state.
ENTANGLED_PAIR = (RT3, 1.0, 1.0, RT3)
BALANCED_PRODUCT = (1.0, 1.0, 1.0, 1.0)

EQUATORIAL_TRIPLE = (
    (np.pi / 2, np.pi),
    (np.pi / 2, np.pi / 2),
    (np.pi / 2, 3 * np.pi / 2),
)

QUARTER_TURN_Y = (0.0, np.pi / 2, 0.0)


def entangled_pair() -> PureState:
    return make_pure_state(2, ENTANGLED_PAIR)


def balanced_product() -> PureState:
    return make_pure_state(2, BALANCED_PRODUCT)


def make_constellation(pairs) -> Constellation:
    pts = tuple(BlochPoint(float(t), float(p)) for t, p in pairs)
    return Constellation(pts, len(pts))


def random_amplitudes(rng, dim: int) -> np.ndarray:
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


def random_state(rng, n_qubits: int) -> PureState:
    return make_pure_state(n_qubits, random_amplitudes(rng, 2**n_qubits))


def random_spin(rng, two_S: int):
    from stellar import SpinState

    return SpinState(two_S, random_amplitudes(rng, two_S + 1))


def bell_pair() -> PureState:
    return make_pure_state(2, [1.0, 0.0, 0.0, 1.0])


def ghz(n: int) -> PureState:
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1.0
    return PureState(n, amps)


def w_state(n: int) -> PureState:
    amps = np.zeros(2**n, dtype=complex)
    for j in range(n):
        amps[2**j] = 1.0
    return PureState(n, amps)


def max_complex_mismatch(found, expected) -> float:
    """Largest |found - expected| under the best one-to-one pairing."""
    found = np.asarray(found, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    assert found.shape == expected.shape
    cost = np.abs(found[:, None] - expected[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def permutation_sum_coefficients(spinors) -> np.ndarray:
    """Coefficients of prod_k (alpha_k x + beta_k) the factorial-cost way.

    For each power m, symmetrize the bit pattern 1^m 0^(n-m) over every
    ordering of the spinors (alpha picked where the bit is 1, beta where
    it is 0) and divide by the m!(n-m)! overcount.
    """
    n = len(spinors)
    out = np.zeros(n + 1, dtype=complex)
    for m in range(n + 1):
        bits = (1,) * m + (0,) * (n - m)
        total = 0.0 + 0.0j
        for sigma in itertools.permutations(range(n)):
            term = 1.0 + 0.0j
            for bit, k in zip(bits, sigma):
                a, b = spinors[k]
                term *= a if bit else b
            total += term
        out[m] = total / (math.factorial(m) * math.factorial(n - m))
    return out
