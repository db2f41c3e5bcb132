from __future__ import annotations

import random

import pytest
from hypothesis import settings

from thermofit import Sample, Series, StepModelParams, builtin_series, gauss_newton, gradient_descent, model_eval

settings.register_profile("suite", deadline=None, max_examples=100)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def idle_series() -> Series:
    return builtin_series("idle")


@pytest.fixture(scope="session")
def full_series() -> Series:
    return builtin_series("full")


def synth_series(t0: float, tinf: float, tau: float, times=None) -> Series:
    """Noiseless data from the step model; the true parameters are known."""
    if times is None:
        times = [float(t) for t in range(0, 65, 5)]
    p = StepModelParams(t0, tinf, tau)
    return Series(
        label="synthetic",
        samples=tuple(Sample(t, model_eval(p, t)) for t in times),
    )


def make_nl_cases(n_cases: int = 20, seed: int = 20260801):
    """Fixed random suite: true params plus an init within +-50% of each."""
    rng = random.Random(seed)
    cases = []
    for _ in range(n_cases):
        t0 = rng.uniform(10.0, 30.0)
        tinf = rng.uniform(40.0, 90.0)
        tau = rng.uniform(5.0, 30.0)
        init = StepModelParams(
            t0 * rng.uniform(0.5, 1.5),
            tinf * rng.uniform(0.5, 1.5),
            tau * rng.uniform(0.5, 1.5),
        )
        cases.append(((t0, tinf, tau), init))
    return cases


@pytest.fixture(scope="session")
def nl_suite_results():
    """Both solvers run over the fixed 20-case suite; shared across tests."""
    results = []
    for truth, init in make_nl_cases():
        series = synth_series(*truth)
        gn = gauss_newton(series, init)
        gd = gradient_descent(series, init)
        results.append((truth, gn, gd))
    return results
