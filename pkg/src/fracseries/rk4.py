"""Classical fourth-order Runge-Kutta integration (integer-order baseline).

Only alpha = 1 semantics are supported: a monomial time power p contributes
(t - t0)^p.  This is the reference the series solutions are compared against
on integer-order problems.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PolynomialVectorField, evaluate_field


@dataclass(frozen=True)
class Trajectory:
    """States recorded on a uniform time grid."""

    times: tuple[float, ...]
    states: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.times) != len(self.states):
            raise ValueError("times and states must have equal length")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")


def rk4_integrate(
    field: PolynomialVectorField,
    y0: tuple[float, ...] | list[float],
    t0: float,
    t_end: float,
    h: float,
    record_every: int = 1,
) -> Trajectory:
    """Integrate y' = f(t, y) from t0 to t_end with fixed step h.

    Records the initial point and every record_every-th step.  h must divide
    t_end - t0 to within 1e-12 so the grid lands exactly on t_end.

    Raises:
        ValueError: for non-positive h or record_every, t_end <= t0, or a
            step that does not divide the interval.
    """
    if h <= 0.0:
        raise ValueError(f"step size must be positive, got {h}")
    if record_every <= 0:
        raise ValueError(f"record_every must be positive, got {record_every}")
    if t_end <= t0:
        raise ValueError(f"t_end={t_end} must exceed t0={t0}")
    span = t_end - t0
    n_steps = round(span / h)
    if n_steps == 0 or abs(n_steps * h - span) > 1e-12:
        raise ValueError(f"step {h} does not divide the interval length {span}")

    def f(t: float, y: list[float]) -> list[float]:
        return evaluate_field(field, t - t0, y)

    dim = field.dimension
    y = [float(v) for v in y0]
    times = [t0]
    states = [tuple(y)]
    for k in range(1, n_steps + 1):
        t = t0 + (k - 1) * h
        k1 = f(t, y)
        k2 = f(t + 0.5 * h, [y[j] + 0.5 * h * k1[j] for j in range(dim)])
        k3 = f(t + 0.5 * h, [y[j] + 0.5 * h * k2[j] for j in range(dim)])
        k4 = f(t + h, [y[j] + h * k3[j] for j in range(dim)])
        y = [y[j] + (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) for j in range(dim)]
        if k % record_every == 0:
            times.append(t0 + k * h)
            states.append(tuple(y))
    return Trajectory(times=tuple(times), states=tuple(states))
