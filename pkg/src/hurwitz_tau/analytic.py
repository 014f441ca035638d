"""Adapted basis series, operator identities, and determinant representations.

The basis element of index k is the Laurent-type series

    phi_k(x) = beta * x^(1-k) * sum_j rho_{j-k} (x/beta)^j / j!

at a fixed exact beta.  It satisfies a first-order recursion in k under the
Euler operator and an eigenvalue equation whose symbol is the weight
generating function; the generating series evaluated on trace invariants of
an n x n diagonal matrix is a ratio of determinants built from phi_1..phi_n.
Everything here is exact rational arithmetic; for rational weight functions
the positive rho ladder eventually walks into a pole of G, so checks report
the largest order they could reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import (
    SingularInputError,
    SingularParameterError,
    UsageError,
)
from .partitions import contents, enumerate_partitions, hook_product, z_of
from .characters import _character, _perm_sign
from .tau_series import rho
from .weights import WeightGen, eval_weight_gen


@dataclass(frozen=True)
class PhiSeries:
    """Truncated basis series: coeffs[j] multiplies x**(lead_exp + j)."""

    k: int
    beta: Fraction
    lead_exp: int
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j]

    def power_coeff(self, m: int) -> Fraction:
        j = m - self.lead_exp
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        if x == 0:
            raise SingularInputError(
                "cannot evaluate a series with a Laurent prefactor at x = 0"
            )
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.lead_exp

    def with_coeff(self, j: int, value: Fraction) -> "PhiSeries":
        """Copy with one coefficient replaced (negative-control helper)."""
        cs = list(self.coeffs)
        cs[j] = Fraction(value)
        return PhiSeries(self.k, self.beta, self.lead_exp, tuple(cs))


def phi_k(G: WeightGen, beta, k: int, J: int, M: int | None = None) -> PhiSeries:
    """Basis series of index k with coefficients through series order J.

    Coefficient j is beta^(1-j) rho_{j-k} / j!  attached to x^(1-k+j).
    Raises a singular-parameter error if any required rho value hits a
    vanishing G(-i beta) or a pole of G.
    """
    if k < 1:
        raise UsageError("basis index k must be >= 1", code="bad-index")
    if J < 0:
        raise UsageError("series order must be >= 0", code="bad-order")
    beta = Fraction(beta)
    coeffs = []
    for j in range(J + 1):
        r = rho(G, j - k, beta, M)
        coeffs.append(beta ** (1 - j) * r / factorial(j))
    return PhiSeries(k, beta, 1 - k, tuple(coeffs))


def max_regular_order(G: WeightGen, beta, k: int, J: int,
                      M: int | None = None) -> tuple[int, str | None]:
    """Largest series order <= J with all rho_{j-k} computable.

    Returns (order, reason); reason is None when the full window is regular.
    A singularity among the negative-index rho values (j < k) makes the
    series unconstructible and is re-raised.
    """
    beta = Fraction(beta)
    for j in range(J + 1):
        try:
            rho(G, j - k, beta, M)
        except SingularParameterError as exc:
            if j - k < 0:
                raise
            return j - 1, str(exc)
    return J, None


def euler_apply(p: PhiSeries) -> PhiSeries:
    """Euler operator x d/dx: multiply the x^m coefficient by m."""
    return PhiSeries(
        p.k,
        p.beta,
        p.lead_exp,
        tuple((p.lead_exp + j) * c for j, c in enumerate(p.coeffs)),
    )


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a termwise identity check on one basis series."""

    identity: str
    k: int
    beta: Fraction
    requested_order: int
    checked_order: int
    capped: bool
    cap_reason: str | None
    max_abs_residual: Fraction
    ode_checked: bool = False

    @property
    def ok(self) -> bool:
        return self.max_abs_residual == 0


def recursion_residuals(phi_km1: PhiSeries, phi_kk: PhiSeries) -> list[Fraction]:
    """Coefficients of beta (D + k - 1) phi_k - phi_{k-1} on shared powers."""
    k = phi_kk.k
    beta = phi_kk.beta
    lhs = euler_apply(phi_kk)
    out = []
    top = min(phi_kk.lead_exp + phi_kk.order, phi_km1.lead_exp + phi_km1.order)
    for m in range(phi_kk.lead_exp, top + 1):
        left = beta * (lhs.power_coeff(m) + (k - 1) * phi_kk.power_coeff(m))
        out.append(left - phi_km1.power_coeff(m))
    return out


def check_recursion(G: WeightGen, beta, k: int, J: int,
                    M: int | None = None) -> IdentityReport:
    """Verify beta (D + k - 1) phi_k = phi_{k-1} termwise.

    Checks every coefficient both truncated series can supply; when the rho
    ladder hits a singular value the comparison stops at the last regular
    order and the report says so.
    """
    if k < 2:
        raise UsageError("recursion check needs k >= 2 so both indices are >= 1",
                         code="bad-index")
    beta = Fraction(beta)
    jk, reason_k = max_regular_order(G, beta, k, J, M)
    jkm1, reason_km1 = max_regular_order(G, beta, k - 1, J, M)
    cur = phi_k(G, beta, k, jk, M)
    prev = phi_k(G, beta, k - 1, jkm1, M)
    residuals = recursion_residuals(prev, cur)
    checked = min(jk, jkm1 + 1)
    cap_reason = reason_k or reason_km1
    return IdentityReport(
        identity="recursion",
        k=k,
        beta=beta,
        requested_order=J,
        checked_order=checked,
        capped=checked < J,
        cap_reason=cap_reason if checked < J else None,
        max_abs_residual=max((abs(r) for r in residuals), default=Fraction(0)),
    )


def spectral_residuals(p: PhiSeries, G: WeightGen,
                       M: int | None = None) -> list[Fraction]:
    """Coefficients of (x G(beta D) - D - (k-1)) phi_k, one per power of x.

    The coefficient of x^s is a_{s-1} G(beta (s-1)) - (s + k - 1) a_s.
    Raises if G must be evaluated at one of its poles.
    """
    k, beta = p.k, p.beta
    out = []
    for j in range(p.order + 1):
        s = p.lead_exp + j
        val = -(s + k - 1) * p.coeff(j)
        if j > 0:
            val += p.coeff(j - 1) * eval_weight_gen(G, beta * (s - 1), M)
        out.append(val)
    return out


def _kappa(G: WeightGen, beta: Fraction) -> Fraction:
    val = Fraction(1)
    for cl in G.c:
        val *= beta * cl
    for dm in G.d:
        val /= beta * dm
    return -val if len(G.d) % 2 else val


def ode_residuals(p: PhiSeries, G: WeightGen) -> list[Fraction]:
    """Cleared-denominator form of the eigenvalue equation, termwise.

    -kappa x prod_l (D + 1/(beta c_l)) phi
      + (D + k - 1) prod_m (D - 1 - 1/(beta d_m)) phi  =  0,
    valid for ratio-type weight functions with nonzero c parameters; unlike
    the raw symbol form it never divides by a vanishing factor of G.
    """
    if G.kind not in ("trivial", "finite_product", "rational"):
        raise UsageError("cleared ODE form exists for ratio-type weight functions",
                         code="bad-weight-kind")
    if any(cl == 0 for cl in G.c):
        raise SingularParameterError(
            "cleared ODE form needs nonzero c parameters", code="singular-ode"
        )
    k, beta = p.k, p.beta
    kappa = _kappa(G, beta)
    out = []
    for j in range(p.order + 1):
        s = p.lead_exp + j
        second = (s + k - 1) * p.coeff(j)
        for dm in G.d:
            second *= s - 1 - 1 / (beta * dm)
        val = second
        if j > 0:
            first = -kappa * p.coeff(j - 1)
            for cl in G.c:
                first *= s - 1 + 1 / (beta * cl)
            val += first
        out.append(val)
    return out


def check_spectral(G: WeightGen, beta, k: int, J: int,
                   M: int | None = None) -> IdentityReport:
    """Verify (x G(beta D) - D) phi_k = (k-1) phi_k termwise.

    For ratio-type G with nonzero c parameters the cleared-denominator ODE
    form is verified as well on the same window.
    """
    if k < 1:
        raise UsageError("basis index k must be >= 1", code="bad-index")
    beta = Fraction(beta)
    jk, reason = max_regular_order(G, beta, k, J, M)
    p = phi_k(G, beta, k, jk, M)
    residuals = spectral_residuals(p, G, M)
    ode_checked = False
    if G.kind in ("trivial", "finite_product", "rational") and all(
        cl != 0 for cl in G.c
    ):
        residuals += ode_residuals(p, G)
        ode_checked = True
    return IdentityReport(
        identity="spectral",
        k=k,
        beta=beta,
        requested_order=J,
        checked_order=jk,
        capped=jk < J,
        cap_reason=reason if jk < J else None,
        max_abs_residual=max((abs(r) for r in residuals), default=Fraction(0)),
        ode_checked=ode_checked,
    )


# -- determinant representations -------------------------------------------

def vandermonde(xs) -> Fraction:
    """prod_{i<j} (x_i - x_j); zero signals coincident points."""
    xs = [Fraction(x) for x in xs]
    val = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            val *= xs[i] - xs[j]
    return val


def exact_det(matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination, exact."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise UsageError("determinant needs a square matrix", code="bad-matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for p in range(n - 1):
        if a[p][p] == 0:
            for i in range(p + 1, n):
                if a[i][p] != 0:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev
            a[i][p] = Fraction(0)
        prev = a[p][p]
    return sign * a[n - 1][n - 1]


def det_rep_calibration(n: int) -> int:
    """Beta exponent correcting the literal determinant prefactor, -1 per row.

    Determined once by exact polynomial comparison against the direct
    series (see calibrate_det_exponent): the literal ratio-of-determinants
    formula carries one surplus factor of beta per basis index, so the
    corrected prefactor divides by beta * rho_{-i} for i = 1..n.
    """
    return -n


def _wronskian_sign(n: int) -> int:
    # row reduction from phi_i to euler-derivatives of phi_n reverses the
    # row order; the reversal permutation has sign (-1)^(n(n-1)/2)
    return -1 if (n * (n - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class DetRepValue:
    value: Fraction
    beta_exponent: int


def _det_inputs(G, beta, X, J, M):
    xs = [Fraction(x) for x in X]
    n = len(xs)
    if n == 0:
        raise UsageError("need at least one evaluation point", code="bad-matrix")
    if len(set(xs)) != n:
        raise SingularInputError("evaluation points must be distinct")
    if any(x == 0 for x in xs):
        raise SingularInputError("evaluation points must be nonzero")
    if J < n:
        raise UsageError(f"series order {J} too small for n = {n}", code="bad-order")
    return xs, n


def tau_det_rep(G: WeightGen, beta, X, J: int, M: int | None = None) -> DetRepValue:
    """Ratio-of-determinants evaluation of the generating series at diag(X).

    Rows are phi_1 .. phi_n truncated to the shared top power 1 - n + J so
    the Wronskian form built from the same data matches exactly.  The
    calibrated beta exponent is applied and reported.
    """
    beta = Fraction(beta)
    xs, n = _det_inputs(G, beta, X, J, M)
    phis = [phi_k(G, beta, i, J - n + i, M) for i in range(1, n + 1)]
    mat = [[p.eval(x) for x in xs] for p in phis]
    det = exact_det(mat)
    pref = Fraction(1)
    for x in xs:
        pref *= x ** (n - 1)
    for i in range(1, n + 1):
        pref /= rho(G, -i, beta, M)
    e = det_rep_calibration(n)
    value = beta ** e * pref * det / vandermonde(xs)
    return DetRepValue(value, e)


def tau_wronskian(G: WeightGen, beta, X, J: int, M: int | None = None) -> DetRepValue:
    """Eulerian Wronskian evaluation; equals tau_det_rep exactly.

    Rows are D^(i-1) phi_n at the same truncation.  The prefactor carries
    (-beta)^(n(n-1)/2), the sign being forced by the row reversal in the
    reduction from phi_1..phi_n to Euler derivatives of phi_n.
    """
    beta = Fraction(beta)
    xs, n = _det_inputs(G, beta, X, J, M)
    rows = [phi_k(G, beta, n, J, M)]
    for _ in range(n - 1):
        rows.append(euler_apply(rows[-1]))
    mat = [[p.eval(x) for x in xs] for p in rows]
    det = exact_det(mat)
    gamma = Fraction(_wronskian_sign(n)) * beta ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        gamma /= rho(G, -i, beta, M)
    e = det_rep_calibration(n)
    pref = Fraction(1)
    for x in xs:
        pref *= x ** (n - 1)
    value = beta ** e * gamma * pref * det / vandermonde(xs)
    return DetRepValue(value, e)


# -- exact multivariate polynomial comparison ------------------------------
#
# For the dual-path acceptance check the evaluation points are kept formal:
# both routes produce polynomials in x_1..x_n with rational coefficients,
# compared coefficient by coefficient through the truncation-guaranteed
# total degree.

def _poly_iadd(acc: dict, term: dict):
    for key, val in term.items():
        nv = acc.get(key, Fraction(0)) + val
        if nv:
            acc[key] = nv
        else:
            acc.pop(key, None)


def _poly_mul_var(poly: dict, powers: dict[int, Fraction], var: int) -> dict:
    """Multiply by a univariate Laurent polynomial in variable ``var``."""
    out: dict = {}
    for key, val in poly.items():
        for p, c in powers.items():
            nk = key[:var] + (key[var] + p,) + key[var + 1:]
            nv = out.get(nk, Fraction(0)) + val * c
            if nv:
                out[nk] = nv
            else:
                out.pop(nk, None)
    return out


def _divide_diff(poly: dict, a: int, b: int) -> dict:
    """Exact division by (x_a - x_b); the input must be divisible."""
    q: dict = {}
    r = dict(poly)
    while r:
        key = max(r, key=lambda t: t[a])
        s = key[a]
        if s == 0:
            raise ArithmeticError("polynomial is not divisible by the difference")
        c = r.pop(key)
        qk = key[:a] + (s - 1,) + key[a + 1:]
        q[qk] = q.get(qk, Fraction(0)) + c
        rk = qk[:b] + (qk[b] + 1,) + qk[b + 1:]
        nv = r.get(rk, Fraction(0)) + c
        if nv:
            r[rk] = nv
        else:
            r.pop(rk, None)
    return {k: v for k, v in q.items() if v}


def tau_det_polynomial(G: WeightGen, beta, n: int, J: int,
                       M: int | None = None,
                       calibration: int | None = None) -> dict:
    """Determinant route with formal evaluation points.

    Returns {exponent tuple: coefficient}; coefficients of total degree
    <= 1 - n + J are exact.  ``calibration`` overrides the applied beta
    exponent (0 gives the literal formula).
    """
    beta = Fraction(beta)
    if n < 1:
        raise UsageError("need n >= 1", code="bad-matrix")
    if J < n:
        raise UsageError(f"series order {J} too small for n = {n}", code="bad-order")
    phis = [phi_k(G, beta, i, J - n + i, M) for i in range(1, n + 1)]
    powers = [
        {p.lead_exp + j: c for j, c in enumerate(p.coeffs) if c} for p in phis
    ]
    det: dict = {}
    for perm in permutations(range(n)):
        term = {(0,) * n: Fraction(_perm_sign(perm))}
        for i in range(n):
            term = _poly_mul_var(term, powers[i], perm[i])
        _poly_iadd(det, term)
    det = {tuple(e + n - 1 for e in key): v for key, v in det.items()}
    for a in range(n):
        for b in range(a + 1, n):
            det = _divide_diff(det, a, b)
    pref = beta ** (det_rep_calibration(n) if calibration is None else calibration)
    for i in range(1, n + 1):
        pref /= rho(G, -i, beta, M)
    return {k: v * pref for k, v in det.items() if v}


def tau_direct_polynomial(G: WeightGen, beta, n: int, max_deg: int) -> dict:
    """Schur-sum route with formal evaluation points, degrees <= max_deg."""
    beta = Fraction(beta)
    out: dict = {(0,) * n: Fraction(1)}
    for w in range(1, max_deg + 1):
        for lam in enumerate_partitions(w):
            r = Fraction(1)
            for c in contents(lam):
                r *= eval_weight_gen(G, c * beta)
            if r == 0:
                continue
            coeff = r / hook_product(lam)
            for mu in enumerate_partitions(w):
                term = {(0,) * n: coeff * Fraction(_character(lam, mu), z_of(mu))}
                for part in mu:
                    psum = {
                        (0,) * i + (part,) + (0,) * (n - i - 1): Fraction(1)
                        for i in range(n)
                    }
                    nxt: dict = {}
                    for key, val in term.items():
                        for pk, pv in psum.items():
                            nk = tuple(a + b for a, b in zip(key, pk))
                            nxt[nk] = nxt.get(nk, Fraction(0)) + val * pv
                    term = nxt
                _poly_iadd(out, term)
    return {k: v for k, v in out.items() if v}


def calibrate_det_exponent(G: WeightGen, beta, n: int, J: int,
                           compare_deg: int, M: int | None = None) -> int:
    """Beta exponent making the literal determinant formula match the series.

    Compares the two polynomial routes on every coefficient of total degree
    <= compare_deg and returns the unique exponent; raises if no pure power
    of beta reconciles them.
    """
    beta = Fraction(beta)
    if abs(beta) == 1:
        raise UsageError(
            "calibration cannot separate beta powers at |beta| = 1",
            code="bad-beta",
        )
    if compare_deg > 1 - n + J:
        raise UsageError(
            f"comparison degree {compare_deg} exceeds the guaranteed degree {1 - n + J}",
            code="bad-order",
        )
    literal = tau_det_polynomial(G, beta, n, J, M, calibration=0)
    direct = tau_direct_polynomial(G, beta, n, compare_deg)
    const = (0,) * n
    base = literal.get(const)
    if not base:
        raise SingularParameterError(
            "literal determinant formula has vanishing constant term",
            code="calibration-failed",
        )
    ratio = direct[const] / base
    exponent = None
    for e in range(-8 * n - 8, 8 * n + 9):
        if beta ** e == ratio:
            exponent = e
            break
    if exponent is None:
        raise SingularParameterError(
            f"no integer beta exponent matches the constant-term ratio {ratio}",
            code="calibration-failed",
        )
    scale = beta ** exponent
    keys = {k for k in literal if sum(k) <= compare_deg}
    keys |= {k for k in direct if sum(k) <= compare_deg}
    for key in keys:
        if scale * literal.get(key, Fraction(0)) != direct.get(key, Fraction(0)):
            raise SingularParameterError(
                f"calibration is not a pure beta power: mismatch at {key}",
                code="calibration-failed",
            )
    return exponent
