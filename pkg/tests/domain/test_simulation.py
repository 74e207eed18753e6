# tests/domain/test_simulation.py
import numpy as np
import pytest

from domain.shaft.services import equilibrium, simulate_closed_loop
from domain.shaft.value_objects import ShaftParams
from core.exceptions import DegenerateInputError, DivergenceError, ValidationError


def test_stable_gains_regulate(stable_shaft):
    trajectory = simulate_closed_loop(stable_shaft, horizon=60, dt=0.01, sample_every=100)
    assert trajectory.regulation_error <= 1e-3
    assert trajectory.blowup_time is None
    assert trajectory.horizon == pytest.approx(60)
    assert trajectory.times[0] == 0


def test_unstable_gains_blow_up(unstable_shaft):
    trajectory = simulate_closed_loop(unstable_shaft, horizon=60, dt=0.01, sample_every=100)
    assert trajectory.blowup_time is not None and trajectory.blowup_time < 60
    assert trajectory.peak_norm > 1e6


def test_equilibrium_is_a_fixed_point():
    params = ShaftParams(k=1, omega=3, Omega=2, kp=-10, kI=-1)
    x1, x2, l_star = equilibrium(params)
    assert x1 == pytest.approx(1)
    assert x2 == pytest.approx(0)
    assert l_star == pytest.approx(-5)

    trajectory = simulate_closed_loop(params, x0=x1, v0=x2, l0=l_star, horizon=5, dt=0.01)
    assert np.allclose(trajectory.states, trajectory.states[0], atol=1e-9)


def test_zero_integral_gain_has_no_isolated_equilibrium():
    with pytest.raises(DegenerateInputError):
        equilibrium(ShaftParams(k=1, omega=2, Omega=2, kp=-10, kI=0))


def test_sampling(stable_shaft):
    trajectory = simulate_closed_loop(stable_shaft, horizon=1, dt=0.1, sample_every=3)
    # t = 0, 0.3, 0.6, 0.9 and the final step
    assert len(trajectory.times) == 5
    assert trajectory.times[-1] == pytest.approx(1)
    assert trajectory.states.shape == (5, 3)


def test_coarse_step_warns(stable_shaft, log_messages):
    simulate_closed_loop(stable_shaft, horizon=2, dt=1)
    assert any("RK4 may be unstable" in m for m in log_messages)


def test_overflow_raises_divergence(unstable_shaft):
    with pytest.raises(DivergenceError) as e:
        simulate_closed_loop(unstable_shaft, horizon=4000, dt=0.05, sample_every=1000)
    assert 0 < e.value.time < 4000


@pytest.mark.parametrize("horizon, dt", [(0, 0.1), (1, 0), (1, -0.1)])
def test_rejects_non_positive_steps(stable_shaft, horizon, dt):
    with pytest.raises(ValidationError):
        simulate_closed_loop(stable_shaft, horizon=horizon, dt=dt)
