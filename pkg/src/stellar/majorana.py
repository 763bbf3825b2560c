"""Majorana encoding: spin states as point constellations on the sphere.

A spin-S state with amplitudes a_m (M = m - S ascending) is encoded as

    P(x) = sum_m sqrt(binom(2S, m)) a_m x^m,

whose 2S roots, sent through tan(theta/2) e^{i phi} = x, are the state's
points. A drop of l in the actual degree contributes l south-pole points.
The inverse direction builds a state from 2S spinors (alpha |+> + beta |->):
the coefficient of x^m in prod_k (alpha_k x + beta_k), divided by the square
root of the binomial weight, is the amplitude at M = m - S, up to one free
overall scale.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .geometry import BlochPoint, Constellation, points_from_roots
from .polyroots import ComplexPolynomial, RootResult, find_roots
from .states import PureState, SpinState, spin_from_qubits

__all__ = [
    "Spinor",
    "sqrt_binomials",
    "majorana_polynomial",
    "qubit_majorana_polynomial",
    "state_from_spinors",
    "spinor_for_point",
    "majorana_constellation",
    "state_from_constellation",
]


class Spinor(NamedTuple):
    """Single spin-1/2 component: alpha on |+>, beta on |->."""

    alpha: complex
    beta: complex


def sqrt_binomials(n: int) -> np.ndarray:
    """sqrt(binom(n, k)) for k = 0..n, by accumulated multiplication."""
    row = np.empty(n + 1)
    row[0] = 1.0
    for k in range(n):
        row[k + 1] = row[k] * (n - k) / (k + 1)
    return np.sqrt(row)


def majorana_polynomial(state: SpinState) -> ComplexPolynomial:
    """Coefficients sqrt(binom(2S, m)) * amplitudes[m], low order first."""
    return ComplexPolynomial(sqrt_binomials(state.two_S) * state.amplitudes)


def qubit_majorana_polynomial(state: PureState) -> ComplexPolynomial:
    """Majorana polynomial of the N-qubit state read as one spin 2S = 2^N - 1."""
    return majorana_polynomial(spin_from_qubits(state))


def state_from_spinors(spinors: list[Spinor], scale: complex = 1.0) -> SpinState:
    """Symmetrized state of 2S spinors, via the product polynomial.

    Expands prod_k (alpha_k x + beta_k) by iterated convolution, then strips
    the binomial weights. Any spinor with alpha = 0 (a south-pole direction)
    simply lowers the product degree; the all-zero spinor is rejected.
    """
    if not spinors:
        raise ValueError("need at least one spinor")
    coeffs = np.ones(1, dtype=complex)
    for sp in spinors:
        a, b = complex(sp.alpha), complex(sp.beta)
        if a == 0 and b == 0:
            raise ValueError("spinor (0, 0) does not define a direction")
        coeffs = np.convolve(coeffs, np.array([b, a]))
    two_s = len(spinors)
    padded = np.zeros(two_s + 1, dtype=complex)
    padded[: coeffs.shape[0]] = coeffs
    return SpinState(two_s, scale * padded / sqrt_binomials(two_s))


def spinor_for_point(point: BlochPoint) -> Spinor:
    """Spinor whose direction is the given point: (cos t/2, -sin t/2 e^{i phi})."""
    half = 0.5 * point.theta
    return Spinor(np.cos(half), -np.sin(half) * np.exp(1j * point.phi))


def majorana_constellation(
    state: SpinState, tol: float = 1e-12
) -> Constellation:
    """The 2S Majorana points of a spin state (multiset, south poles padded)."""
    result: RootResult = find_roots(majorana_polynomial(state), tol)
    return points_from_roots(result.roots, result.leading_deficiency, state.two_S)


def state_from_constellation(constellation: Constellation) -> SpinState:
    """Spin state whose Majorana points are the given constellation (scale 1)."""
    spinors = [spinor_for_point(p) for p in constellation.points]
    return state_from_spinors(spinors)
