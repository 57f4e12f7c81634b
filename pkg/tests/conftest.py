import pytest

from fracseries import SeriesProblem, rk4_integrate, sir_model, solve


@pytest.fixture(scope="session")
def sir_spec():
    return sir_model()


@pytest.fixture(scope="session")
def sir_solution_deg9(sir_spec):
    """Degree-9 series at alpha = 1 for the benchmark SIR model."""
    problem = SeriesProblem(
        field=sir_spec.field(), y0=sir_spec.initial, alpha=1.0, t0=0.0, degree=9
    )
    return solve(problem)


@pytest.fixture(scope="session")
def sir_rk_trajectory(sir_spec):
    """Reference trajectory on [0, 1] with h = 1e-4, recorded every 0.1."""
    return rk4_integrate(
        sir_spec.field(), sir_spec.initial, 0.0, 1.0, 1e-4, record_every=1000
    )
