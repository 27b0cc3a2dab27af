"""Extraction of the reduced-coin operator sets of the walk channel.

Tracing the joint coin-position state of a t-step walk over position leaves
a channel on the coin alone, ``rho -> sum_mu K_mu rho K_mu^dag`` with one
2x2 operator per reachable site.  Two independent extraction routes are
provided:

* :func:`extract_kraus_direct` evolves both coin basis inputs and gathers
  the coin amplitudes site by site (ground truth), and
* :func:`extract_kraus_binomial` rebuilds the t-step joint operator from the
  ordered binomial expansion of ``(P + Q)^t`` plus commutator correction
  terms, then projects the same way (validator).

Label convention: ``mu = +t`` tags the branch on which the upper coin block
acts at every step, so ``K_{+t} = C_up^t`` and ``K_{-t} = C_down^t``.
Because the walk shifts the upper component to the *left*, ``mu`` is the
negated lattice coordinate of the site a block is gathered from.  This keeps
the sets aligned with the closed-form first term
(:func:`kraus_closed_form_first_term`) and gives the mirror symmetry
``K_{-mu} = minor_map(K_{+mu})``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .walk import (
    Lattice,
    build_shifts,
    canonical_angle,
    coin_projections,
    evolve,
    joint_state,
)

# amplitude below which a wrong-parity site is accepted as numerically empty
ZERO_SITE_TOL = 1e-14

STANDARD = "standard"
SPLIT_STEP = "split_step"


@dataclass(frozen=True)
class KrausSet:
    """Ordered reduced-coin operator set for a fixed angle and step count.

    ``entries`` is a tuple of ``(mu, matrix)`` pairs sorted by ascending
    label.  A standard set of ``t`` steps has ``t + 1`` labels in
    ``{-t..t}`` sharing the parity of ``t``; a split-step set of ``t``
    split steps has ``2t + 1`` labels covering every integer in ``{-t..t}``.
    """

    theta: float
    t: int
    entries: tuple = field(repr=False)
    kind: str = STANDARD

    def __post_init__(self) -> None:
        if self.kind not in (STANDARD, SPLIT_STEP):
            raise ValueError(f"unknown kraus set kind {self.kind!r}")
        if self.t < 1:
            raise ValueError(f"step count must be >= 1, got {self.t}")
        labels = [mu for mu, _ in self.entries]
        if labels != sorted(labels):
            raise ValueError("entries must be sorted by ascending label")
        if self.kind == STANDARD:
            expected = list(range(-self.t, self.t + 1, 2))
        else:
            expected = list(range(-self.t, self.t + 1))
        if labels != expected:
            raise ValueError(
                f"{self.kind} set of {self.t} steps needs labels {expected}, got {labels}"
            )
        for _, matrix in self.entries:
            if np.asarray(matrix).shape != (2, 2):
                raise ValueError("kraus operators must be 2x2 matrices")

    def labels(self) -> list[int]:
        return [mu for mu, _ in self.entries]

    def operators(self) -> list[np.ndarray]:
        return [matrix for _, matrix in self.entries]

    def operator(self, mu: int) -> np.ndarray:
        for label, matrix in self.entries:
            if label == mu:
                return matrix
        raise KeyError(f"no operator with label {mu}")

    def completeness_residual(self) -> float:
        """Max-entry deviation of sum K^dag K from the identity."""
        acc = np.zeros((2, 2), dtype=np.complex128)
        for _, matrix in self.entries:
            acc += matrix.conj().T @ matrix
        return float(np.abs(acc - np.eye(2)).max())

    # -- serialization (complex entries as [re, im] pairs) -----------------

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "theta": self.theta,
            "t": self.t,
            "entries": [
                {
                    "mu": mu,
                    "matrix": [
                        [[float(v.real), float(v.imag)] for v in row]
                        for row in matrix
                    ],
                }
                for mu, matrix in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "KrausSet":
        entries = tuple(
            (
                int(entry["mu"]),
                np.array(
                    [[complex(re, im) for re, im in row] for row in entry["matrix"]],
                    dtype=np.complex128,
                ),
            )
            for entry in payload["entries"]
        )
        return cls(
            theta=float(payload["theta"]),
            t=int(payload["t"]),
            entries=entries,
            kind=payload.get("kind", STANDARD),
        )

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "KrausSet":
        return cls.from_dict(json.loads(text))


def minor_map(matrix: np.ndarray) -> np.ndarray:
    """Flip a 2x2 matrix across both axes: [[a,b],[c,d]] -> [[d,c],[b,a]].

    An involution relating the two extreme operators of every extracted set.
    """
    m = np.asarray(matrix)
    if m.shape != (2, 2):
        raise ValueError(f"minor_map expects a 2x2 matrix, got shape {m.shape}")
    return m[::-1, ::-1].copy()


def _gather_entries(up_out: np.ndarray, down_out: np.ndarray, lattice: Lattice,
                    t: int) -> tuple:
    """Collect the per-site 2x2 blocks from the two basis-input outputs.

    Column ``s`` of the block at label ``mu`` holds the coin amplitudes that
    input ``e_s`` left on site ``x = -mu``.  Sites of the wrong parity must
    be empty and are dropped.
    """
    entries = []
    for x in range(-t, t + 1):
        j = lattice.index_of(x)
        block = np.array(
            [[up_out[0, j], down_out[0, j]], [up_out[1, j], down_out[1, j]]],
            dtype=np.complex128,
        )
        mu = -x
        if (mu - t) % 2 == 0:
            entries.append((mu, block))
        elif np.abs(block).max() >= ZERO_SITE_TOL:
            raise ValueError(
                f"site {x} of wrong parity carries amplitude "
                f"{np.abs(block).max():.3e}; extraction is inconsistent"
            )
    entries.sort(key=lambda item: item[0])
    return tuple(entries)


def extract_kraus_direct(theta: float, t: int) -> KrausSet:
    """Extract the t-step operator set by evolving both coin basis inputs.

    Each basis coin state is placed at the origin and walked ``t`` steps;
    the coin amplitudes gathered on each site form one column of that
    site's operator.  This is the ground-truth route: completeness follows
    from unitarity plus the full position trace.
    """
    t = int(t)
    if t < 1:
        raise ValueError(f"step count must be >= 1, got {t}")
    theta = canonical_angle(theta)
    lattice = Lattice.for_steps(t)
    outs = []
    for s in (0, 1):
        amps = np.zeros(2)
        amps[s] = 1.0
        psi = evolve(joint_state(lattice, amps), theta, t)
        outs.append(psi.reshape(2, lattice.size))
    entries = _gather_entries(outs[0], outs[1], lattice, t)
    return KrausSet(theta=theta, t=t, entries=entries)


def commutator_corrections(p: np.ndarray, q: np.ndarray, t: int) -> list[np.ndarray]:
    """Correction operators D_0..D_t for the ordered binomial expansion.

    ``D_0 = 0`` and ``D_{k+1} = [Q, P^k] + P D_k + [Q, D_k]``; in particular
    ``D_1 = 0`` because ``[Q, P^0]`` vanishes.  These restore the terms the
    ordered products ``P^k Q^{t-k}`` miss when P and Q do not commute.
    """
    dim = p.shape[0]
    p_pow = np.eye(dim, dtype=np.complex128)
    table = [np.zeros((dim, dim), dtype=np.complex128)]
    for _ in range(t):
        d_k = table[-1]
        d_next = (q @ p_pow - p_pow @ q) + p @ d_k + (q @ d_k - d_k @ q)
        table.append(d_next)
        p_pow = p_pow @ p
    return table


def extract_kraus_binomial(theta: float, t: int, t_max: int = 8) -> KrausSet:
    """Extract the t-step set through the expanded joint operator.

    Builds ``sum_k C(t,k) P^k Q^{t-k} + sum_k C(t,k) D_k Q^{t-k}`` as a
    dense joint-space matrix and projects it exactly like the direct route.
    Dense operator products grow fast, hence the step cap.
    """
    t = int(t)
    if t < 1:
        raise ValueError(f"step count must be >= 1, got {t}")
    if t > t_max:
        raise ValueError(f"binomial extraction capped at {t_max} steps, got {t}")
    theta = canonical_angle(theta)
    lattice = Lattice.for_steps(t)
    up, down = coin_projections(theta)
    s_left, s_right = build_shifts(lattice)
    p = np.kron(up, s_left)
    q = np.kron(down, s_right)

    dim = 2 * lattice.size
    p_pow = [np.eye(dim, dtype=np.complex128)]
    q_pow = [np.eye(dim, dtype=np.complex128)]
    for _ in range(t):
        p_pow.append(p_pow[-1] @ p)
        q_pow.append(q_pow[-1] @ q)
    corrections = commutator_corrections(p, q, t)

    joint = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(t + 1):
        weight = comb(t, k)
        joint += weight * (p_pow[k] @ q_pow[t - k])
        joint += weight * (corrections[k] @ q_pow[t - k])

    origin = lattice.origin_index
    up_out = joint[:, origin].reshape(2, lattice.size)
    down_out = joint[:, lattice.size + origin].reshape(2, lattice.size)
    entries = _gather_entries(up_out, down_out, lattice, t)
    return KrausSet(theta=theta, t=t, entries=entries)


def kraus_closed_form_first_term(theta: float, t: int, mu: int) -> np.ndarray:
    """Ordered-product term C(t,(t-mu)/2) C_up^{(t+mu)/2} C_down^{(t-mu)/2}.

    This is only the first-sum contribution to ``K_mu``.  It equals the full
    operator where no commutator correction can land: every label at t = 1,
    and the extreme labels ``mu = +-t`` for any t.
    """
    t = int(t)
    mu = int(mu)
    if t < 1:
        raise ValueError(f"step count must be >= 1, got {t}")
    if abs(mu) > t or (mu - t) % 2 != 0:
        raise ValueError(f"label {mu} invalid for {t} steps (parity/range)")
    up, down = coin_projections(theta)
    k_up = (t + mu) // 2
    k_down = (t - mu) // 2
    term = np.linalg.matrix_power(up, k_up) @ np.linalg.matrix_power(down, k_down)
    return comb(t, k_down) * term


def extract_kraus_split_step(theta: float, n: int) -> KrausSet:
    """Operator set of ``n`` split steps (one split step = two standard steps).

    The underlying ``2n``-step standard set is extracted directly and its
    labels are compressed onto ``{-n..n}`` in ascending order, one per site,
    covering both parities.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"split-step count must be >= 1, got {n}")
    base = extract_kraus_direct(theta, 2 * n)
    entries = tuple((mu // 2, matrix) for mu, matrix in base.entries)
    return KrausSet(theta=base.theta, t=n, entries=entries, kind=SPLIT_STEP)
