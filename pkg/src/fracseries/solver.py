"""Series solver for Caputo systems D^alpha y = f(t, y), y(t0) = y0.

The solution ansatz is one fractional polynomial per state variable, all on
the same alpha-grid.  The defect of a candidate P,

    Def(t) = D^alpha P(t) - f(t, P(t)),

measures how far P is from satisfying the system.  Coefficients are fixed by
requiring that the limit at t0+ of the (i-1)-fold sequential Caputo
derivative of every defect component vanishes, for i = 1..n.

Because f is polynomial, the grid-slot-(i-1) coefficient of f(t, P) depends
only on series coefficients with index < i, which turns each of those limit
conditions into an explicit linear step:

    c_i[j] = Gamma((i-1)*alpha + 1) / Gamma(i*alpha + 1)
             * (slot i-1 coefficient of f(t, P) for equation j),

evaluated with the partial series through index i - 1.  `solve` runs this
recursion; `verify_defect_conditions` re-checks the result through the
literal repeated-derivative limits, with no shortcut shared between the two
paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PolynomialVectorField, compose_series
from .fracpoly import FractionalPolynomial, add_scaled
from .special import gamma


@dataclass(frozen=True)
class SeriesProblem:
    """An initial value problem together with the requested series degree."""

    field: PolynomialVectorField
    y0: tuple[float, ...]
    alpha: float
    t0: float
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "y0", tuple(float(v) for v in self.y0))
        if len(self.y0) != self.field.dimension:
            raise ValueError(
                f"{len(self.y0)} initial values for dimension {self.field.dimension}"
            )
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")


@dataclass(frozen=True)
class SeriesSolution:
    """Series per state variable plus the residual defect coefficients.

    `defect_coefficients[j]` holds grid slots 0..degree-1 of the defect of
    equation j evaluated on the final series; every entry should be zero up
    to rounding.
    """

    series: tuple[FractionalPolynomial, ...]
    defect_coefficients: tuple[tuple[float, ...], ...]


def build_defect(
    field: PolynomialVectorField,
    candidate: list[FractionalPolynomial] | tuple[FractionalPolynomial, ...],
    max_degree: int,
) -> list[FractionalPolynomial]:
    """Defect D^alpha P - f(t, P) per equation, truncated at max_degree."""
    composed = compose_series(field, candidate, max_degree)
    out = []
    for p, fp in zip(candidate, composed):
        d = add_scaled(p.caputo_derivative(), fp, 1.0, -1.0)
        out.append(d.truncated(max_degree))
    return out


def solve(problem: SeriesProblem) -> SeriesSolution:
    """Determine the series coefficients of degree `problem.degree`.

    The constant coefficients are the initial values; each further index is
    fixed by the explicit recursion described in the module docstring, all
    components advancing in lockstep.  Degree 0 returns the constant initial
    values with empty defect diagnostics (there is no condition to impose).
    """
    field = problem.field
    n = problem.degree
    partial = [
        FractionalPolynomial(problem.alpha, problem.t0, (v,)) for v in problem.y0
    ]
    a = problem.alpha
    for i in range(1, n + 1):
        ratio = gamma((i - 1) * a + 1.0) / gamma(i * a + 1.0)
        composed = compose_series(field, partial, i - 1)
        partial = [
            FractionalPolynomial(a, problem.t0, p.coeffs + (ratio * fp.coefficient(i - 1),))
            for p, fp in zip(partial, composed)
        ]
    if n == 0:
        diagnostics = tuple(() for _ in partial)
    else:
        defect = build_defect(field, partial, n - 1)
        diagnostics = tuple(
            tuple(d.coefficient(k) for k in range(n)) for d in defect
        )
    return SeriesSolution(series=tuple(partial), defect_coefficients=diagnostics)


def verify_defect_conditions(
    solution: SeriesSolution, problem: SeriesProblem
) -> list[float]:
    """Check the limit conditions the coefficients were derived from.

    For each i = 1..degree, applies the Caputo derivative literally i-1 times
    to every defect component and takes the limit at t0+ (the constant term),
    returning max over equations of the absolute limit value per index.  All
    entries are ~0 for a correct solution; this is the independent oracle for
    the recursion in `solve`.
    """
    n = problem.degree
    if n == 0:
        return []
    defect = build_defect(problem.field, list(solution.series), n - 1)
    out = []
    for i in range(1, n + 1):
        out.append(max(abs(d.sequential_caputo_limit(i - 1)) for d in defect))
    return out
