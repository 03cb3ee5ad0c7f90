"""Polar-polynomial constructions.

The central object is the linear operator that sends Q to the k-th
derivative of R*Q, where R is a fixed monic polynomial of degree k.  On
the monomial basis this operator is triangular with diagonal entries
(j+1)_k (rising factorials), so for every monic P of degree n >= 1
there is a unique monic Q of degree n with

    d^k/dz^k (R(z) * Q(z)) = (n+1)_k * P(z).

For the centered choice R = (z - xi)^k the solution has a closed form
in the shifted binomial basis, beta_j = (n+1)_k / (j+1)_k * alpha_j,
which is the same thing as the Grace convolution (Schur-Szego
composition) of the shifted P with the fixed polynomial
S(w) = sum_j C(n+k, j+k) w^j.  That identity is what turns zero
localization of Q into zero localization of S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegreeZeroError, FactorizationImpossible, NotMonicError
from .polynomial import (
    BinomialForm,
    Polynomial,
    _shift_coeffs,
    binomial_coeffs,
    derivative_k,
    from_binomial,
    max_coeff_diff,
    poly_from_roots,
    poly_mul,
    rising_factorial,
    sup_norm,
    taylor_shift,
)

# Relative threshold below which a binomial coefficient counts as zero
# when extracting a convolution factor.
VANISHING_RTOL = 1e-10

# A recovered factor must reproduce its target to this relative error.
RECONSTRUCTION_RTOL = 1e-10


@dataclass(frozen=True)
class PolarProblem:
    """The data (P, R) of the equation d^k/dz^k(R*Q) = (n+1)_k * P.

    ``xi`` is set exactly when R was requested as (z - xi)^k.
    """

    P: Polynomial
    R: Polynomial
    xi: complex | None = None

    def __post_init__(self):
        if self.P.degree < 1:
            raise DegreeZeroError("P must be non-constant")
        if not self.P.is_monic():
            raise NotMonicError(
                "P must be monic",
                leading=[self.P.leading.real, self.P.leading.imag],
            )
        if self.R.degree < 1:
            raise ValueError("R must have degree >= 1")
        if not self.R.is_monic():
            raise NotMonicError(
                "R must be monic",
                leading=[self.R.leading.real, self.R.leading.imag],
            )

    @classmethod
    def centered(cls, P: Polynomial, xi: complex, k: int) -> "PolarProblem":
        """Problem with R = (z - xi)^k."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        xi = complex(xi)
        return cls(P, poly_from_roots([xi] * k), xi=xi)

    @property
    def n(self) -> int:
        return self.P.degree

    @property
    def k(self) -> int:
        return self.R.degree


@dataclass(frozen=True)
class GraceFactorization:
    """A factor S_R with P(xi+w) convolved with S_R equal to Q(xi+w).

    ``c`` holds the binomial-basis ratios c_j; ``exact_match_error`` is
    the relative reconstruction residual of the convolution.
    """

    s_r: Polynomial
    c: BinomialForm
    exact_match_error: float


def apply_tr(R: Polynomial, Q: Polynomial) -> Polynomial:
    """k-th derivative of R*Q, with k the degree of R."""
    return derivative_k(poly_mul(R, Q), R.degree)


def operator_matrix(R: Polynomial, n: int) -> list[list[complex]]:
    """Matrix of Q -> d^k/dz^k(R*Q) on the monomial basis 1, z, .., z^n.

    Column j holds the image of z^j; entries above the diagonal vanish
    and the diagonal entry at j is (j+1)_k.
    """
    m = [[0j] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        image = apply_tr(R, Polynomial([0j] * j + [1.0]))
        for i, c in enumerate(image.coeffs):
            m[i][j] = c
    return m


def _back_substitute(m: list[list[complex]], rhs: list[complex]) -> list[complex]:
    n = len(rhs) - 1
    out = [0j] * (n + 1)
    for i in range(n, -1, -1):
        acc = rhs[i]
        for j in range(i + 1, n + 1):
            acc -= m[i][j] * out[j]
        out[i] = acc / m[i][i]
    return out


def _operator_residual(
    R: Polynomial, q: list[complex], P: Polynomial, rhs_scale: float
) -> list[complex]:
    # rhs_scale * P - T_R(q), padded to length deg P + 1.
    image = apply_tr(R, Polynomial._from_trusted(q))
    out = [rhs_scale * c for c in P.coeffs]
    for i, c in enumerate(image.coeffs):
        if i < len(out):
            out[i] -= c
    return out


def solve_polar(problem: PolarProblem) -> Polynomial:
    """Unique monic Q with apply_tr(R, Q) = (n+1)_k * P.

    Builds the triangular operator matrix column by column and
    substitutes from the top degree down; the top coefficient is forced
    to 1, which is what comparing leading coefficients dictates.  One
    residual-refinement pass keeps the backward error at the rounding
    level even when the shifted coefficients grow large.
    """
    P, R = problem.P, problem.R
    n, k = problem.n, problem.k
    m = operator_matrix(R, n)
    rhs_scale = float(rising_factorial(n + 1, k))
    b = [0j] * (n + 1)
    b[n] = 1.0
    for i in range(n - 1, -1, -1):
        acc = rhs_scale * P.coeffs[i]
        for j in range(i + 1, n + 1):
            acc -= m[i][j] * b[j]
        b[i] = acc / m[i][i]
    correction = _back_substitute(m, _operator_residual(R, b, P, rhs_scale))
    b = [bi + ci for bi, ci in zip(b, correction)]
    b[n] = 1.0
    return Polynomial._from_trusted(b)


def _centered_inverse(
    coeffs: list[complex], xi: complex, k: int
) -> list[complex]:
    # Applies the inverse of Q -> d^k/dz^k((z-xi)^k Q): in the shifted
    # variable the operator is diagonal with entries (j+1)_k.
    work = _shift_coeffs(coeffs, xi) if xi != 0 else list(coeffs)
    work = [
        c / float(rising_factorial(j + 1, k)) for j, c in enumerate(work)
    ]
    if xi != 0:
        work = _shift_coeffs(work, -xi)
    return work


def solve_polar_shifted(P: Polynomial, xi: complex, k: int) -> Polynomial:
    """Fast path of :func:`solve_polar` for R = (z - xi)^k.

    Shifts P to the w = z - xi variable, rescales coefficient j by the
    exact rational (n+1)_k / (j+1)_k and shifts back.  The binomial
    weights C(n, j) cancel, so the scaling acts on raw coefficients.
    One residual-refinement pass keeps the backward error at the
    rounding level even when the shifted coefficients grow large.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if P.degree < 1:
        raise DegreeZeroError("P must be non-constant")
    if not P.is_monic():
        raise NotMonicError(
            "P must be monic", leading=[P.leading.real, P.leading.imag]
        )
    xi = complex(xi)
    n = P.degree
    rhs_scale = float(rising_factorial(n + 1, k))
    b = _centered_inverse([rhs_scale * c for c in P.coeffs], xi, k)
    b[n] = 1.0
    if xi != 0:
        R = poly_from_roots([xi] * k)
        residual = _operator_residual(R, b, P, rhs_scale)
        correction = _centered_inverse(residual, xi, k)
        b = [bi + ci for bi, ci in zip(b, correction)]
        b[n] = 1.0
    return Polynomial._from_trusted(b)


def s_poly(n: int, k: int) -> Polynomial:
    """The degree-n polynomial with coefficients C(n+k, j+k).

    Its constant term C(n+k, k) never vanishes, and its zeros control
    the zeros of every centered polar polynomial via the convolution
    identity.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive integers")
    return Polynomial(
        float(math.comb(n + k, j + k)) for j in range(n + 1)
    )


def grace_convolve(p: Polynomial, q: Polynomial) -> Polynomial:
    """Coefficient-wise product in the binomial basis.

    The working size is n = max(deg p, deg q); output coefficient j is
    C(n, j) * alpha_j * beta_j.  The polynomial (1+w)^n is the identity
    element for this product.
    """
    n = max(p.degree, q.degree)
    alpha = binomial_coeffs(p, n).gamma
    beta = binomial_coeffs(q, n).gamma
    return Polynomial(
        float(math.comb(n, j)) * alpha[j] * beta[j] for j in range(n + 1)
    )


def grace_factorize(
    P: Polynomial,
    Q: Polynomial,
    xi: complex,
    tol: float = VANISHING_RTOL,
) -> GraceFactorization:
    """Extract S_R with P(xi+w) convolved with S_R equal to Q(xi+w).

    Shifts both inputs by xi, reads off their binomial coefficients
    alpha_j and beta_j and forms the ratios c_j = beta_j / alpha_j,
    with c_j = 0 where alpha_j vanishes.  A vanishing alpha_j is only
    admissible when beta_j vanishes too; otherwise no factor can
    reproduce that term and FactorizationImpossible is raised.

    Vanishing is judged relative to the largest coefficient of the
    respective polynomial (threshold ``tol``), which keeps the test
    independent of an overall scale.
    """
    if P.degree != Q.degree:
        raise ValueError("P and Q must have the same degree")
    n = P.degree
    xi = complex(xi)
    ps = taylor_shift(P, xi)
    qs = taylor_shift(Q, xi)
    alpha = binomial_coeffs(ps, n).gamma
    beta = binomial_coeffs(qs, n).gamma
    alpha_cut = tol * max(abs(a) for a in alpha)
    beta_cut = tol * max(abs(b) for b in beta)
    c = []
    for j in range(n + 1):
        if abs(alpha[j]) <= alpha_cut:
            if abs(beta[j]) > beta_cut:
                raise FactorizationImpossible(
                    f"coefficient {j} vanishes in P(xi+w) but not in Q(xi+w)",
                    index=j,
                    alpha=alpha[j],
                    beta=beta[j],
                )
            c.append(0j)
        else:
            c.append(beta[j] / alpha[j])
    form = BinomialForm(n, tuple(c))
    s_r = from_binomial(form)
    rebuilt = grace_convolve(ps, s_r)
    error = max_coeff_diff(rebuilt, qs) / sup_norm(qs)
    if error > RECONSTRUCTION_RTOL:
        def coeff(p: Polynomial, j: int) -> complex:
            return p.coeffs[j] if j <= p.degree else 0j

        diffs = [abs(coeff(rebuilt, j) - coeff(qs, j)) for j in range(n + 1)]
        worst = diffs.index(max(diffs))
        raise FactorizationImpossible(
            "recovered factor does not reproduce Q(xi+w)",
            index=worst,
            alpha=alpha[worst],
            beta=beta[worst],
        )
    return GraceFactorization(s_r=s_r, c=form, exact_match_error=error)
