import math

import numpy as np
import pytest

from qwchannel.channels import (
    RTNParams,
    apply_kraus,
    closed_form_p,
    closed_form_q,
    coin_state,
    coin_state_from_angle,
    composite_map,
    concatenated_map,
    density_matrix,
    hermitian_eigenvalues,
    is_density_matrix,
    n_step_map,
    rtn_kraus,
    rtn_lambda,
)
from qwchannel.kraus import extract_kraus_direct
from qwchannel.walk import Lattice, evolve, joint_state

RHO_UP = np.diag([1.0, 0.0]).astype(complex)
RHO_DOWN = np.diag([0.0, 1.0]).astype(complex)


def random_pure_state(rng):
    ket = rng.normal(size=2) + 1j * rng.normal(size=2)
    ket /= np.linalg.norm(ket)
    return ket


def test_state_helpers():
    plus = coin_state(1 / math.sqrt(2), 1 / math.sqrt(2))
    assert np.allclose(density_matrix(plus), np.full((2, 2), 0.5), atol=1e-15)
    with pytest.raises(ValueError):
        coin_state(1.0, 1.0)
    ket = coin_state_from_angle(math.pi / 2)
    assert np.allclose(ket, [math.cos(math.pi / 4), math.sin(math.pi / 4)])


def test_hermitian_eigenvalues_closed_form():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        m = m + m.conj().T
        low, high = hermitian_eigenvalues(m)
        ref = np.linalg.eigvalsh(m)
        assert abs(low - ref[0]) <= 1e-12
        assert abs(high - ref[1]) <= 1e-12


def test_density_matrix_validator():
    assert is_density_matrix(RHO_UP)
    assert is_density_matrix(np.eye(2, dtype=complex) / 2)
    assert not is_density_matrix(np.diag([1.5, -0.5]).astype(complex))
    assert not is_density_matrix(np.array([[0.5, 0.3], [0.1, 0.5]], dtype=complex))


def test_one_step_channel_on_basis_input():
    for theta in (0.3, 1.2, 2.8):
        out = n_step_map(theta, 1, RHO_UP)
        c2 = math.cos(theta) ** 2
        assert np.allclose(out, np.diag([c2, 1 - c2]), atol=1e-14)


def test_half_pi_two_step_channel_is_identity():
    rng = np.random.default_rng(11)
    for _ in range(5):
        rho = density_matrix(random_pure_state(rng))
        out = n_step_map(math.pi / 2, 2, rho)
        assert np.abs(out - rho).max() <= 1e-14


def test_theta_zero_channel_dephases_plus_state():
    plus = density_matrix(coin_state(1 / math.sqrt(2), 1 / math.sqrt(2)))
    out = n_step_map(0.0, 1, plus)
    assert np.abs(out - np.eye(2) / 2).max() <= 1e-14


def test_apply_kraus_rejects_incomplete_sets():
    kset = extract_kraus_direct(0.8, 2)
    broken = [op * 0.9 for op in kset.operators()]
    with pytest.raises(ValueError, match="incomplete"):
        apply_kraus(broken, RHO_UP)


def test_apply_kraus_accepts_plain_operator_lists():
    kset = extract_kraus_direct(0.8, 3)
    rho = density_matrix(coin_state_from_angle(0.4))
    assert np.allclose(apply_kraus(kset.operators(), rho),
                       apply_kraus(kset, rho), atol=1e-15)


def test_channel_ignores_operator_order():
    kset = extract_kraus_direct(1.4, 4)
    rho = density_matrix(coin_state_from_angle(1.0))
    shuffled = list(reversed(kset.operators()))
    assert np.allclose(apply_kraus(shuffled, rho), apply_kraus(kset, rho),
                       atol=1e-15)


def test_n_step_map_matches_closed_forms():
    rng = np.random.default_rng(42)
    for _ in range(30):
        ket = random_pure_state(rng)
        a, b = ket
        rho = density_matrix(ket)
        theta = rng.uniform(0, 2 * math.pi)
        for t in (1, 2, 3):
            out = n_step_map(theta, t, rho)
            assert abs(out[0, 0].real - closed_form_p(theta, t, a, b)) <= 1e-12
            assert abs(out[0, 1] - closed_form_q(theta, t, a, b)) <= 1e-12
            assert abs(out[1, 1].real - (1 - closed_form_p(theta, t, a, b))) <= 1e-12


def test_closed_form_p_basis_input():
    for theta in np.linspace(0, math.pi, 17):
        assert abs(closed_form_p(theta, 1, 1.0, 0.0) - math.cos(theta) ** 2) <= 1e-14
        assert closed_form_q(theta, 1, 1.0, 0.0) == 0.0
    # worked spot value: p_2 at theta = pi/4 for the upper basis input
    assert abs(closed_form_p(math.pi / 4, 2, 1.0, 0.0) - 0.5) <= 1e-14


def test_closed_form_p_three_steps_matches_channel_entry():
    out = n_step_map(math.pi / 6, 3, RHO_UP)
    assert abs(out[0, 0].real - closed_form_p(math.pi / 6, 3, 1.0, 0.0)) <= 1e-12


def test_closed_form_probability_in_unit_interval():
    rng = np.random.default_rng(8)
    for _ in range(50):
        a, b = random_pure_state(rng)
        theta = rng.uniform(0, 2 * math.pi)
        for t in (1, 2, 3):
            p = closed_form_p(theta, t, a, b)
            assert -1e-12 <= p <= 1 + 1e-12


def test_closed_form_step_range():
    with pytest.raises(ValueError):
        closed_form_p(0.5, 4, 1.0, 0.0)
    with pytest.raises(ValueError):
        closed_form_q(0.5, 0, 1.0, 0.0)


def test_n_step_map_equals_partial_trace_of_joint_walk():
    rng = np.random.default_rng(17)
    cases = [(1.1, 6, random_pure_state(rng))]
    cases += [(rng.uniform(0, 2 * math.pi), n, random_pure_state(rng))
              for n in range(1, 13)]
    for theta, n, ket in cases:
        lattice = Lattice.for_steps(n)
        psi = evolve(joint_state(lattice, ket), theta, n).reshape(2, lattice.size)
        traced = psi @ psi.conj().T
        assert np.abs(traced - n_step_map(theta, n, density_matrix(ket))).max() <= 1e-10


def test_concatenated_single_application_matches_n_step():
    rho = density_matrix(coin_state_from_angle(0.9))
    assert np.allclose(concatenated_map(0.7, 1, rho), n_step_map(0.7, 1, rho),
                       atol=1e-15)


def test_concatenated_map_keeps_diagonal_inputs_diagonal():
    rho = RHO_UP
    for n in range(1, 8):
        rho = concatenated_map(1.2, 1, rho)
        assert abs(rho[0, 1]) <= 1e-15


def test_concatenated_distance_decays_geometrically():
    theta = math.pi / 6
    top, bottom = RHO_UP, RHO_DOWN
    for n in range(1, 12):
        top = concatenated_map(theta, 1, top)
        bottom = concatenated_map(theta, 1, bottom)
        gap = top - bottom
        assert abs(gap[0, 0].real - math.cos(2 * theta) ** n) <= 1e-13


def test_rtn_params_validation():
    with pytest.raises(ValueError):
        RTNParams(a=-0.1, gamma=1.0)
    with pytest.raises(ValueError):
        RTNParams(a=0.1, gamma=0.0)
    with pytest.raises(ValueError):
        RTNParams(a=0.1, gamma=1.0, dt=0.0)
    assert RTNParams(a=2.0, gamma=1.0).is_nonmarkovian
    assert not RTNParams(a=0.4, gamma=1.0).is_nonmarkovian


def test_rtn_lambda_starts_at_unity_in_every_branch():
    for a in (0.0, 0.4, 0.5, 2.0):
        assert rtn_lambda(RTNParams(a=a, gamma=1.0), 0.0) == 1.0


def test_rtn_lambda_underdamped_spot_value():
    # a/gamma = 2, gamma t = 1
    root = math.sqrt(15.0)
    expected = math.exp(-1.0) * (math.cos(root) + math.sin(root) / root)
    assert abs(rtn_lambda(RTNParams(a=2.0, gamma=1.0), 1.0) - expected) <= 1e-15


def test_rtn_lambda_overdamped_monotone_positive():
    params = RTNParams(a=0.4, gamma=1.0)
    values = [rtn_lambda(params, t) for t in np.linspace(0.0, 10.0, 500)]
    assert all(v > 0 for v in values)
    assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))


def test_rtn_lambda_zero_amplitude_is_exactly_one():
    params = RTNParams(a=0.0, gamma=1.7)
    for t in (0.0, 0.5, 3.0, 42.0):
        assert rtn_lambda(params, t) == 1.0


def test_rtn_lambda_bounded_and_guarded():
    for ratio in (0.1, 0.5, 0.9, 2.0, 10.0):
        params = RTNParams(a=ratio, gamma=1.0)
        for t in np.linspace(0.0, 20.0, 801):
            assert abs(rtn_lambda(params, t)) <= 1.0
    with pytest.raises(ValueError):
        rtn_lambda(RTNParams(a=1.0, gamma=1.0), -0.1)


def test_rtn_kraus_limits():
    identity, zero = rtn_kraus(1.0)
    assert np.array_equal(identity, np.eye(2))
    assert np.abs(zero).max() == 0.0
    plus = density_matrix(coin_state(1 / math.sqrt(2), 1 / math.sqrt(2)))
    fully_dephased = apply_kraus(rtn_kraus(0.0), plus)
    assert np.abs(fully_dephased - np.eye(2) / 2).max() <= 1e-15
    half = apply_kraus(rtn_kraus(0.5), plus)
    assert abs(half[0, 1] - 0.25) <= 1e-15
    with pytest.raises(ValueError):
        rtn_kraus(1.0001)


def test_rtn_kraus_completeness_exact():
    for lam in (-1.0, -0.3, 0.0, 0.7, 1.0):
        ops = rtn_kraus(lam)
        total = sum(op.conj().T @ op for op in ops)
        assert np.abs(total - np.eye(2)).max() <= 1e-15


def test_composite_with_zero_amplitude_equals_walk_channel():
    params = RTNParams(a=0.0, gamma=1.0)
    rho = density_matrix(coin_state_from_angle(0.8))
    for n in (1, 3, 6):
        assert np.allclose(composite_map(params, 0.9, n, rho),
                           n_step_map(0.9, n, rho), atol=1e-15)


def test_composite_scales_coherence_only():
    rng = np.random.default_rng(23)
    params = RTNParams(a=0.7, gamma=1.1, dt=0.8)
    for _ in range(5):
        rho = density_matrix(random_pure_state(rng))
        theta = rng.uniform(0, math.pi)
        n = int(rng.integers(1, 8))
        base = n_step_map(theta, n, rho)
        lam = rtn_lambda(params, n * params.dt)
        out = composite_map(params, theta, n, rho)
        assert abs(out[0, 1] - lam * base[0, 1]) <= 1e-14
        assert abs(out[0, 0] - base[0, 0]) <= 1e-14


def test_composite_one_step_basis_input_unchanged_by_noise():
    # the one-step output of a basis input has no coherence to dephase
    params = RTNParams(a=1.5, gamma=1.0)
    for theta in (0.4, 1.0, 2.2):
        assert np.allclose(composite_map(params, theta, 1, RHO_UP),
                           n_step_map(theta, 1, RHO_UP), atol=1e-15)


def test_randomized_channel_outputs_are_valid_states():
    rng = np.random.default_rng(1234)
    for trial in range(300):
        theta = rng.uniform(0, 2 * math.pi)
        n = int(rng.integers(1, 16))
        ket = random_pure_state(rng)
        rho = density_matrix(ket)
        if trial % 2:  # mix it with the flat state
            weight = rng.uniform(0, 1)
            rho = weight * rho + (1 - weight) * np.eye(2) / 2
        out = n_step_map(theta, n, rho)
        assert is_density_matrix(out)
        assert abs(np.trace(out).real - 1.0) <= 1e-12


def test_channel_linearity():
    rng = np.random.default_rng(5)
    for _ in range(5):
        rho1 = density_matrix(random_pure_state(rng))
        rho2 = density_matrix(random_pure_state(rng))
        alpha = rng.uniform(0, 1)
        theta = rng.uniform(0, math.pi)
        n = int(rng.integers(1, 6))
        mixed = n_step_map(theta, n, alpha * rho1 + (1 - alpha) * rho2)
        split = (alpha * n_step_map(theta, n, rho1)
                 + (1 - alpha) * n_step_map(theta, n, rho2))
        assert np.abs(mixed - split).max() <= 1e-12
