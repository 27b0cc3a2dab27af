import math

import numpy as np
import pytest

from qwchannel.walk import (
    Lattice,
    build_coin,
    build_shifts,
    build_split_step_unitary,
    build_walk_unitary,
    canonical_angle,
    coin_projections,
    evolve,
    joint_state,
    position_distribution,
)


def test_canonical_angle_wraps_into_range():
    assert canonical_angle(0.0) == 0.0
    assert canonical_angle(2 * math.pi) == 0.0
    assert canonical_angle(-1e-18) < 2 * math.pi
    assert abs(canonical_angle(5 * math.pi) - math.pi) < 1e-12
    with pytest.raises(ValueError):
        canonical_angle(float("nan"))
    with pytest.raises(ValueError):
        canonical_angle(float("inf"))


def test_coin_identity_at_zero():
    assert np.array_equal(build_coin(0.0), np.eye(2))


def test_coin_is_minus_i_sigma_x_at_half_pi():
    sigma_x = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.allclose(build_coin(math.pi / 2), -1j * sigma_x, atol=1e-15)


def test_coin_quarter_pi_entries():
    r = math.sqrt(2) / 2
    expected = np.array([[r, -1j * r], [-1j * r, r]])
    assert np.allclose(build_coin(math.pi / 4), expected, atol=1e-15)


def test_coin_unitary_on_grid():
    for theta in np.linspace(0, 2 * math.pi, 32, endpoint=False):
        coin = build_coin(theta)
        assert np.abs(coin.conj().T @ coin - np.eye(2)).max() <= 1e-14


def test_lattice_validation():
    with pytest.raises(ValueError):
        Lattice(4)
    with pytest.raises(ValueError):
        Lattice(1)
    lat = Lattice.for_steps(5)
    assert lat.size == 13
    assert lat.origin_index == 6
    assert lat.max_steps == 5
    assert lat.index_of(0) == 6
    assert lat.label_of(0) == -6


def test_shifts_move_basis_states():
    lat = Lattice(3)
    s_left, s_right = build_shifts(lat)
    e0 = np.zeros(3)
    e0[lat.index_of(0)] = 1.0
    moved = s_right @ e0
    assert moved[lat.index_of(1)] == 1.0
    assert np.array_equal(s_left @ s_right, np.eye(3))


def test_shift_power_delta_identity_exact():
    # <x_mu| S_L^k S_R^(t-k) |x_0> = delta(mu + k, t - k), pure permutation math
    for t in range(0, 11):
        lat = Lattice.for_steps(t)
        s_left, s_right = build_shifts(lat)
        origin = lat.origin_index
        for k in range(t + 1):
            power = (np.linalg.matrix_power(s_left, k)
                     @ np.linalg.matrix_power(s_right, t - k))
            for mu in range(-origin, origin + 1):
                expected = 1.0 if mu + k == t - k else 0.0
                assert power[origin + mu, origin].real == expected


def test_walk_theta_zero_is_conditional_shift():
    lat = Lattice(7)
    s_left, s_right = build_shifts(lat)
    up = np.diag([1.0, 0.0])
    down = np.diag([0.0, 1.0])
    expected = np.kron(up, s_left) + np.kron(down, s_right)
    assert np.allclose(build_walk_unitary(0.0, lat), expected, atol=1e-15)


def test_walk_unitarity_grid():
    for size in (5, 11, 41):
        lat = Lattice(size)
        for theta in np.linspace(0, 2 * math.pi, 32, endpoint=False):
            w = build_walk_unitary(theta, lat)
            assert np.abs(w.conj().T @ w - np.eye(2 * size)).max() <= 1e-12


def _coin_block(joint: np.ndarray, size: int) -> np.ndarray:
    return np.array([[joint[0, 0], joint[0, size]],
                     [joint[size, 0], joint[size, size]]])


def test_commutator_coin_block():
    # [Q, P] = (C_down C_up - C_up C_down) x 1; the shifts cancel exactly
    lat = Lattice(9)
    s_left, s_right = build_shifts(lat)
    for theta in (0.7, math.pi / 6, 2.0):
        up, down = coin_projections(theta)
        p = np.kron(up, s_left)
        q = np.kron(down, s_right)
        commutator = q @ p - p @ q
        c, s = math.cos(theta), math.sin(theta)
        expected = np.array([[s ** 2, 1j * s * c], [-1j * s * c, -s ** 2]])
        assert np.allclose(_coin_block(commutator, lat.size), expected, atol=1e-14)
        assert np.allclose(commutator, np.kron(expected, np.eye(lat.size)),
                           atol=1e-14)


def test_commutator_vanishes_only_at_integer_pi():
    lat = Lattice(5)
    s_left, s_right = build_shifts(lat)
    for theta in (0.0, math.pi):
        up, down = coin_projections(theta)
        p, q = np.kron(up, s_left), np.kron(down, s_right)
        assert np.abs(q @ p - p @ q).max() <= 1e-15
    for theta in (0.3, math.pi / 2, 2.5):
        up, down = coin_projections(theta)
        p, q = np.kron(up, s_left), np.kron(down, s_right)
        assert np.abs(q @ p - p @ q).max() > 1e-3


def test_split_step_is_two_chained_steps():
    lat = Lattice(9)
    for theta in (0.4, math.pi / 3):
        w = build_walk_unitary(theta, lat)
        ss = build_split_step_unitary(theta, lat)
        assert np.abs(ss - w @ w).max() <= 1e-14
        assert np.abs(ss.conj().T @ ss - np.eye(2 * lat.size)).max() <= 1e-12


def test_evolve_zero_steps_returns_input():
    lat = Lattice(7)
    psi = joint_state(lat, [1.0, 0.0])
    assert np.array_equal(evolve(psi, 0.9, 0), psi)


def test_evolve_half_pi_single_step():
    lat = Lattice(5)
    psi = evolve(joint_state(lat, [1.0, 0.0]), math.pi / 2, 1)
    block = psi.reshape(2, lat.size)
    # all weight sits on coin |1> at x = +1 with amplitude -i
    assert abs(block[1, lat.index_of(1)] + 1j) <= 1e-15
    total = np.abs(block) ** 2
    assert abs(total.sum() - 1.0) <= 1e-12
    assert total.sum() - total[1, lat.index_of(1)] <= 1e-28


def test_evolve_two_steps_quarter_pi_distribution():
    lat = Lattice.for_steps(2)
    psi = evolve(joint_state(lat, [1.0, 0.0]), math.pi / 4, 2)
    dist = position_distribution(psi)
    assert set(dist) == {-2, 0, 2}
    assert abs(dist[-2] - 0.25) <= 1e-14
    assert abs(dist[0] - 0.50) <= 1e-14
    assert abs(dist[2] - 0.25) <= 1e-14


def test_evolve_matches_dense_power_oracle():
    for theta, t in ((math.pi / 4, 2), (1.1, 5), (2.7, 8)):
        lat = Lattice.for_steps(t)
        psi0 = joint_state(lat, [0.6, 0.8j])
        stepped = evolve(psi0, theta, t)
        dense = np.linalg.matrix_power(build_walk_unitary(theta, lat), t) @ psi0
        assert np.abs(stepped - dense).max() <= 1e-12


def test_evolve_preserves_norm():
    rng = np.random.default_rng(5)
    for _ in range(10):
        ket = rng.normal(size=2) + 1j * rng.normal(size=2)
        ket /= np.linalg.norm(ket)
        t = int(rng.integers(1, 20))
        psi = evolve(joint_state(Lattice.for_steps(t), ket), rng.uniform(0, 7), t)
        assert abs(np.linalg.norm(psi) - 1.0) <= 1e-12


def test_evolve_guard_violation():
    lat = Lattice(5)
    psi = joint_state(lat, [1.0, 0.0])
    with pytest.raises(ValueError):
        evolve(psi, 0.3, 2)  # needs L >= 7


def test_no_wrap_boundary_sites_stay_empty():
    for size, theta in ((11, 0.8), (21, math.pi / 3)):
        lat = Lattice(size)
        psi = joint_state(lat, [1.0, 1.0j] / np.sqrt(2))
        psi = evolve(psi, theta, lat.max_steps)
        block = np.abs(psi.reshape(2, size)) ** 2
        assert block[:, 0].sum() == 0.0
        assert block[:, -1].sum() == 0.0


def test_position_distribution_initial_state():
    lat = Lattice(9)
    dist = position_distribution(joint_state(lat, [1.0, 0.0]))
    assert dist == {0: 1.0}


def test_position_distribution_support_and_parity():
    for t in (3, 6):
        lat = Lattice.for_steps(t)
        psi = evolve(joint_state(lat, [0.3, np.sqrt(1 - 0.09) * 1j]), 1.2, t)
        dist = position_distribution(psi)
        assert abs(sum(dist.values()) - 1.0) <= 1e-12
        for x in dist:
            assert abs(x) <= t
            assert (x - t) % 2 == 0
