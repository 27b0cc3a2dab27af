"""Qubit channels built from the walk operator sets, plus telegraph dephasing.

The maps here act on 2x2 density matrices: the single n-step walk channel,
the n-fold repetition of the one-step channel (not the same map once the
walk remembers its position register), closed-form validators for the first
three steps, and a random-telegraph-noise dephaser that can be chained after
the walk channel.

Basis convention: ``|0>`` is the upper coin state ``(1, 0)^T`` and carries
``sigma_z = +1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kraus import KrausSet, extract_kraus_direct
from .walk import canonical_angle

SIGMA_Z = np.diag([1.0, -1.0]).astype(np.complex128)

COMPLETENESS_TOL = 1e-8


# -- states -----------------------------------------------------------------

def coin_state(a: complex, b: complex) -> np.ndarray:
    """Normalized coin ket a|0> + b|1>."""
    vec = np.array([a, b], dtype=np.complex128)
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"coin amplitudes must be normalized, |.|^2 = {norm**2!r}")
    return vec


def coin_state_from_angle(delta: float) -> np.ndarray:
    """The one-parameter family cos(delta/2)|0> + sin(delta/2)|1>."""
    d = float(delta)
    return np.array([math.cos(d / 2), math.sin(d / 2)], dtype=np.complex128)


def density_matrix(ket: np.ndarray) -> np.ndarray:
    """Rank-one density matrix |ket><ket|."""
    vec = np.asarray(ket, dtype=np.complex128).reshape(-1)
    return np.outer(vec, vec.conj())


def hermitian_eigenvalues(matrix: np.ndarray) -> tuple[float, float]:
    """Closed-form eigenvalue pair (low, high) of a Hermitian 2x2 matrix."""
    m = np.asarray(matrix)
    mean = 0.5 * float(m[0, 0].real + m[1, 1].real)
    radius = math.hypot(0.5 * float(m[0, 0].real - m[1, 1].real), abs(m[0, 1]))
    return mean - radius, mean + radius


def is_density_matrix(rho: np.ndarray, tol: float = 1e-12) -> bool:
    """Hermitian within tol, unit trace within tol, eigenvalues >= -tol."""
    m = np.asarray(rho)
    if m.shape != (2, 2):
        return False
    if np.abs(m - m.conj().T).max() > tol:
        return False
    if abs(m[0, 0] + m[1, 1] - 1.0) > tol:
        return False
    low, _ = hermitian_eigenvalues(m)
    return low >= -tol


def assert_density_matrix(rho: np.ndarray, tol: float = 1e-12) -> None:
    if not is_density_matrix(rho, tol):
        raise ValueError("matrix is not a valid qubit state within tolerance")


# -- walk channels ------------------------------------------------------------

def _operator_list(kraus) -> list[np.ndarray]:
    if isinstance(kraus, KrausSet):
        return kraus.operators()
    return [np.asarray(k, dtype=np.complex128) for k in kraus]


def apply_kraus(kraus, rho: np.ndarray) -> np.ndarray:
    """Apply ``rho -> sum_mu K_mu rho K_mu^dag``.

    ``kraus`` may be a :class:`KrausSet` or any iterable of 2x2 operators.
    The set must satisfy completeness, which makes the map trace preserving.
    """
    operators = _operator_list(kraus)
    acc = np.zeros((2, 2), dtype=np.complex128)
    check = np.zeros((2, 2), dtype=np.complex128)
    rho = np.asarray(rho, dtype=np.complex128)
    for op in operators:
        acc += op @ rho @ op.conj().T
        check += op.conj().T @ op
    residual = np.abs(check - np.eye(2)).max()
    if residual > COMPLETENESS_TOL:
        raise ValueError(f"kraus set incomplete: residual {residual:.3e}")
    return acc


def n_step_map(theta: float, n: int, rho: np.ndarray) -> np.ndarray:
    """Single n-step walk channel (equals the position trace of the joint walk)."""
    return apply_kraus(extract_kraus_direct(theta, n), rho)


def concatenated_map(theta: float, n: int, rho: np.ndarray) -> np.ndarray:
    """The one-step channel applied n times in sequence.

    Distinct from :func:`n_step_map` for n >= 2: repetition discards the
    position correlations the walk builds up between steps.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"repetition count must be >= 1, got {n}")
    one_step = extract_kraus_direct(theta, 1)
    out = np.asarray(rho, dtype=np.complex128)
    for _ in range(n):
        out = apply_kraus(one_step, out)
    return out


# -- closed forms for the first steps ----------------------------------------

def closed_form_p(theta: float, t: int, a: complex, b: complex) -> float:
    """Upper-left entry p_t of the t-step output for input a|0> + b|1> (t <= 3)."""
    th = canonical_angle(theta)
    pa = abs(a) ** 2
    diff = pa - abs(b) ** 2
    kappa = a * np.conj(b) - np.conj(a) * b  # purely imaginary
    if t == 1:
        val = 0.5 * (1 + diff * math.cos(2 * th) + 1j * kappa * math.sin(2 * th))
    elif t == 2:
        val = 0.25 * (1 + 2 * pa + diff * math.cos(4 * th)
                      + 1j * kappa * math.sin(4 * th))
    elif t == 3:
        val = (6 + 4 * pa
               + 5 * diff * math.cos(2 * th)
               - 2 * diff * math.cos(4 * th)
               + 3 * diff * math.cos(6 * th)
               + 3j * kappa * math.sin(2 * th)
               - 2j * kappa * math.sin(4 * th)
               + 3j * kappa * math.sin(6 * th)) / 16
    else:
        raise ValueError(f"closed form available for t in (1, 2, 3), got {t}")
    return float(np.real(val))


def closed_form_q(theta: float, t: int, a: complex, b: complex) -> complex:
    """Upper-right coherence q_t of the t-step output (t <= 3); q_1 is 0."""
    th = canonical_angle(theta)
    c, s = math.cos(th), math.sin(th)
    diff = abs(a) ** 2 - abs(b) ** 2
    if t == 1:
        return 0.0 + 0.0j
    if t == 2:
        return complex(
            s ** 2 * (np.conj(a) * b * c ** 2 + a * np.conj(b) * s ** 2
                      - 1j * diff * s * c)
        )
    if t == 3:
        return complex(
            c * s ** 2 * ((np.conj(a) * b + a * np.conj(b)) * c
                          + (np.conj(a) * b - a * np.conj(b)) * math.cos(3 * th)
                          - 1j * diff * math.sin(3 * th))
        )
    raise ValueError(f"closed form available for t in (1, 2, 3), got {t}")


# -- random telegraph noise ---------------------------------------------------

@dataclass(frozen=True)
class RTNParams:
    """Telegraph-noise kernel parameters.

    ``a`` is the coupling amplitude, ``gamma`` the fluctuation rate (both in
    inverse time), and ``dt`` the physical duration assigned to one walk
    step.  The kernel is oscillatory (non-Markovian regime) when
    ``(a/gamma)^2 > 0.25`` and overdamped (Markovian regime) below.
    """

    a: float
    gamma: float
    dt: float = 1.0

    def __post_init__(self) -> None:
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if self.a < 0:
            raise ValueError(f"amplitude must be >= 0, got {self.a}")
        if not self.dt > 0:
            raise ValueError(f"step duration must be positive, got {self.dt}")

    @property
    def is_nonmarkovian(self) -> bool:
        return (self.a / self.gamma) ** 2 > 0.25


def rtn_lambda(params: RTNParams, elapsed: float) -> float:
    """Dephasing kernel value Lambda(elapsed), always in [-1, 1] with Lambda(0)=1.

    Underdamped regime (4 a^2/gamma^2 > 1):
        exp(-g t) [cos(w g t) + sin(w g t)/w],   w = sqrt(4 a^2/g^2 - 1).
    Overdamped regime the trig functions continue to their hyperbolic
    counterparts; that branch is evaluated in the overflow-safe form
        [(1 + 1/w) exp(-(1-w) g t) + (1 - 1/w) exp(-(1+w) g t)] / 2,
    which also returns exactly 1.0 when a = 0.  At the regime boundary the
    common limit exp(-g t)(1 + g t) is used.
    """
    elapsed = float(elapsed)
    if elapsed < 0:
        raise ValueError(f"elapsed time must be >= 0, got {elapsed}")
    gt = params.gamma * elapsed
    ratio = 4.0 * params.a ** 2 / params.gamma ** 2 - 1.0
    if abs(ratio) < 1e-12:
        value = math.exp(-gt) * (1.0 + gt)
    elif ratio > 0:
        w = math.sqrt(ratio)
        value = math.exp(-gt) * (math.cos(w * gt) + math.sin(w * gt) / w)
    else:
        w = math.sqrt(-ratio)
        value = 0.5 * ((1.0 + 1.0 / w) * math.exp(-(1.0 - w) * gt)
                       + (1.0 - 1.0 / w) * math.exp(-(1.0 + w) * gt))
    return min(1.0, max(-1.0, value))


def rtn_kraus(lambda_val: float) -> list[np.ndarray]:
    """Dephasing operator pair sqrt((1+L)/2) I and sqrt((1-L)/2) sigma_z.

    Completeness is exact for any |L| <= 1; the channel scales coherences
    by L and leaves populations untouched.
    """
    lam = float(lambda_val)
    if abs(lam) > 1.0:
        raise ValueError(f"kernel value must satisfy |L| <= 1, got {lam}")
    r1 = math.sqrt(max(0.0, (1.0 + lam) / 2.0)) * np.eye(2, dtype=np.complex128)
    r2 = math.sqrt(max(0.0, (1.0 - lam) / 2.0)) * SIGMA_Z
    return [r1, r2]


def composite_map(params: RTNParams, theta: float, n: int,
                  rho: np.ndarray) -> np.ndarray:
    """n-step walk channel followed by telegraph dephasing at time n * dt."""
    out = n_step_map(theta, n, rho)
    lam = rtn_lambda(params, int(n) * params.dt)
    return apply_kraus(rtn_kraus(lam), out)
