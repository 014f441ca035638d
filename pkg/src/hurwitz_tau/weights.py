"""Weight generating functions and weighted Hurwitz numbers.

A weight generating function assigns a rational weight to every tuple of
branch-point profiles.  Supported families: the trivial function G = 1,
finite products prod (1 + c_i z), ratios of such products, and the quantum
exponential prod_{i>=0} (1 - q^i z)^{-1}.  Weighted Hurwitz numbers combine
these weights with the classical character-sum counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import groupby, permutations
from math import factorial

from .algebra import BetaSeries
from .errors import SingularParameterError, UsageError
from .hurwitz import ProfileTuple, hurwitz_number
from .partitions import (
    Partition,
    as_partition,
    colength,
    enumerate_partitions,
    identity_cycle_type,
    weight,
)


@dataclass(frozen=True)
class WeightGen:
    """Descriptor for a weight generating function; parameters stored exactly."""

    kind: str
    c: tuple[Fraction, ...] = ()
    d: tuple[Fraction, ...] = ()
    q: Fraction | None = None

    @classmethod
    def trivial(cls) -> "WeightGen":
        return cls("trivial")

    @classmethod
    def finite_product(cls, c) -> "WeightGen":
        return cls("finite_product", c=tuple(Fraction(x) for x in c))

    @classmethod
    def rational(cls, c, d) -> "WeightGen":
        dd = tuple(Fraction(x) for x in d)
        if any(x == 0 for x in dd):
            raise UsageError("rational weight function needs nonzero d parameters",
                             code="bad-weight-params")
        return cls("rational", c=tuple(Fraction(x) for x in c), d=dd)

    @classmethod
    def quantum(cls, q) -> "WeightGen":
        qq = Fraction(q)
        if qq == 0 or abs(qq) >= 1:
            raise UsageError("quantum parameter must satisfy 0 < |q| < 1",
                             code="bad-weight-params")
        return cls("quantum", q=qq)

    def describe(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        if self.kind == "quantum":
            return f"quantum(q={self.q})"
        cs = ",".join(str(x) for x in self.c)
        ds = ",".join(str(x) for x in self.d)
        return f"{self.kind}(c=[{cs}], d=[{ds}])"


@cache
def g_coeffs(G: WeightGen, J: int) -> tuple[Fraction, ...]:
    """Taylor coefficients (g_0 = 1, g_1, ..., g_J) of the generating function."""
    if J < 0:
        raise UsageError("coefficient count must be >= 0", code="bad-order")
    if G.kind == "trivial":
        return (Fraction(1),) + (Fraction(0),) * J
    if G.kind in ("finite_product", "rational"):
        num = BetaSeries.one(J)
        for cl in G.c:
            num = num * BetaSeries([1, cl], order=J)
        if G.kind == "rational":
            den = BetaSeries.one(J)
            for dm in G.d:
                den = den * BetaSeries([1, -dm], order=J)
            num = num * den.inv()
        return num.coeffs
    # quantum: coefficients 1/(q;q)_n
    out = [Fraction(1)]
    poch = Fraction(1)
    qpow = Fraction(1)
    for n in range(1, J + 1):
        qpow *= G.q
        poch *= 1 - qpow
        if poch == 0:
            raise SingularParameterError(
                f"q-Pochhammer (q;q)_{n} vanishes at q={G.q}",
                code="singular-quantum",
            )
        out.append(Fraction(1) / poch)
    return tuple(out)


def eval_weight_gen(G: WeightGen, x: Fraction, M: int | None = None) -> Fraction:
    """Exact value G(x); the quantum product must be truncated at index ``M``."""
    x = Fraction(x)
    if G.kind == "trivial":
        return Fraction(1)
    if G.kind in ("finite_product", "rational"):
        val = Fraction(1)
        for cl in G.c:
            val *= 1 + cl * x
        for dm in G.d:
            den = 1 - dm * x
            if den == 0:
                raise SingularParameterError(
                    f"pole of weight generating function: 1 - ({dm})*({x}) = 0",
                    code="weight-gen-pole",
                )
            val /= den
        return val
    if M is None:
        raise UsageError(
            "quantum weight function needs a product truncation M for evaluation",
            code="quantum-needs-truncation",
        )
    val = Fraction(1)
    qpow = Fraction(1)
    for i in range(M + 1):
        den = 1 - qpow * x
        if den == 0:
            raise SingularParameterError(
                f"pole of quantum weight function: 1 - q^{i}*({x}) = 0",
                code="weight-gen-pole",
            )
        val /= den
        qpow *= G.q
    return val


def _ordered_index_sum(c: tuple[Fraction, ...], exps, strict: bool) -> Fraction:
    """Sum over index tuples i_1 R i_2 R ... R i_k of prod_t c[i_t]**exps[t].

    R is '<' when strict else '<='.  Computed with right-to-left suffix
    sums, O(k * len(c)) per exponent ordering.
    """
    m = len(c)
    suffix = [Fraction(1)] * (m + 1)
    for t in range(len(exps) - 1, -1, -1):
        e = exps[t]
        new = [Fraction(0)] * (m + 1)
        acc = Fraction(0)
        for i in range(m - 1, -1, -1):
            tail = suffix[i + 1] if strict else suffix[i]
            if tail:
                acc += c[i] ** e * tail
            new[i] = acc
        suffix = new
    return suffix[0]


def _colengths(profiles) -> list[int]:
    return [colength(as_partition(p)) for p in profiles]


def weight_factor(c, profiles) -> Fraction:
    """Symmetrized strictly-increasing index sum over the c parameters.

    (1/k!) sum over permutations and strict index chains of the monomial
    with exponents given by the profile colengths; vanishes when the
    parameter list is shorter than the number of profiles.
    """
    exps = _colengths(profiles)
    k = len(exps)
    if k < 1:
        raise UsageError("weight factor needs at least one profile",
                         code="empty-profiles")
    c = tuple(Fraction(x) for x in c)
    total = Fraction(0)
    for p in permutations(exps):
        total += _ordered_index_sum(c, p, strict=True)
    return total / factorial(k)


def weight_factor_tilde(c, profiles) -> Fraction:
    """Dual weight factor: non-strict index chains with the alternating sign."""
    exps = _colengths(profiles)
    k = len(exps)
    if k < 1:
        raise UsageError("weight factor needs at least one profile",
                         code="empty-profiles")
    c = tuple(Fraction(x) for x in c)
    total = Fraction(0)
    for p in permutations(exps):
        total += _ordered_index_sum(c, p, strict=False)
    sign = -1 if (sum(exps) + k) % 2 else 1
    return sign * total / factorial(k)


def quantum_weight_factor(q, profiles) -> Fraction:
    """Closed form of the dual weight factor for the quantum exponential.

    (-1)^(d-k)/k! sum over permutations of prod_j 1/(1 - q^(partial colength sum)).
    """
    exps = _colengths(profiles)
    k = len(exps)
    if k < 1:
        raise UsageError("weight factor needs at least one profile",
                         code="empty-profiles")
    q = Fraction(q)
    d = sum(exps)
    total = Fraction(0)
    for p in permutations(exps):
        term = Fraction(1)
        partial = 0
        for e in p:
            partial += e
            den = 1 - q ** partial
            if den == 0:
                raise SingularParameterError(
                    f"quantum weight factor: 1 - q^{partial} vanishes at q={q}",
                    code="singular-quantum",
                )
            term /= den
        total += term
    sign = -1 if (d - k) % 2 else 1
    return sign * total / factorial(k)


def rational_weight_factor(c, d, mu_profiles, nu_profiles) -> Fraction:
    """Weight of a split profile tuple for a ratio-type generating function.

    The c-parameters weight the first block through strict index chains,
    the d-parameters weight the second through non-strict chains with the
    alternating sign; either block may be empty (empty block = factor 1).
    """
    if len(mu_profiles) + len(nu_profiles) < 1:
        raise UsageError("rational weight factor needs at least one profile",
                         code="empty-profiles")
    first = weight_factor(c, mu_profiles) if mu_profiles else Fraction(1)
    second = weight_factor_tilde(d, nu_profiles) if nu_profiles else Fraction(1)
    return first * second


def _arrangements(multiset: tuple[Partition, ...]) -> int:
    """Distinct orderings of a weakly sorted tuple of partitions."""
    n = factorial(len(multiset))
    for _, grp in groupby(multiset):
        n //= factorial(len(tuple(grp)))
    return n


def profile_multisets(N: int, total_colength: int) -> list[tuple[tuple[Partition, ...], int]]:
    """Multisets of non-identity profiles of N with the given total colength.

    Returns (profiles, arrangements) pairs; summing ``arrangements`` copies
    of each multiset reproduces the sum over ordered profile tuples.
    """
    options = [p for p in enumerate_partitions(N) if colength(p) >= 1]
    out: list[tuple[tuple[Partition, ...], int]] = []

    def extend(idx: int, remaining: int, chosen: list[Partition]):
        if remaining == 0:
            if chosen:
                ms = tuple(chosen)
                out.append((ms, _arrangements(ms)))
            return
        for i in range(idx, len(options)):
            cl = colength(options[i])
            if cl <= remaining:
                chosen.append(options[i])
                extend(i, remaining - cl, chosen)
                chosen.pop()

    extend(0, total_colength, [])
    return out


@dataclass(frozen=True)
class WeightedTerm:
    """One multiset's contribution to a weighted Hurwitz number."""

    mu_block: tuple[Partition, ...]
    nu_block: tuple[Partition, ...]
    arrangements: int
    factor: Fraction
    base: Fraction

    @property
    def value(self) -> Fraction:
        return self.arrangements * self.factor * self.base


def weighted_hurwitz_terms(G: WeightGen, d: int, mu, nu) -> list[WeightedTerm]:
    """All contributing profile configurations for H^d_G(mu, nu)."""
    mu = as_partition(mu)
    nu = as_partition(nu)
    if weight(mu) != weight(nu):
        raise UsageError(
            f"weighted Hurwitz number needs |mu| == |nu|, got {weight(mu)} != {weight(nu)}",
            code="weight-mismatch",
        )
    if d < 0:
        raise UsageError("total weighted colength d must be >= 0", code="bad-degree")
    N = weight(mu)
    if d == 0:
        base = hurwitz_number(ProfileTuple(N, (mu, nu)))
        return [WeightedTerm((), (), 1, Fraction(1), base)]

    terms: list[WeightedTerm] = []
    if G.kind == "quantum":
        if nu != identity_cycle_type(N):
            raise UsageError(
                "quantum weighting defines single Hurwitz numbers only; "
                "nu must be the identity cycle type",
                code="quantum-single-only",
            )
        for profiles, arr in profile_multisets(N, d):
            w = quantum_weight_factor(G.q, profiles)
            if w:
                base = hurwitz_number(ProfileTuple(N, profiles + (mu, nu)))
                terms.append(WeightedTerm(profiles, (), arr, w, base))
        return terms

    if G.kind in ("trivial", "finite_product"):
        for profiles, arr in profile_multisets(N, d):
            w = weight_factor(G.c, profiles)
            if w:
                base = hurwitz_number(ProfileTuple(N, profiles + (mu, nu)))
                terms.append(WeightedTerm(profiles, (), arr, w, base))
        return terms

    # rational: independent ordered sums over the two blocks
    for dc in range(0, d + 1):
        mu_blocks = profile_multisets(N, dc) if dc else [((), 1)]
        nu_blocks = profile_multisets(N, d - dc) if d - dc else [((), 1)]
        for mu_block, arr_a in mu_blocks:
            for nu_block, arr_b in nu_blocks:
                if not mu_block and not nu_block:
                    continue
                w = rational_weight_factor(G.c, G.d, mu_block, nu_block)
                if w:
                    base = hurwitz_number(
                        ProfileTuple(N, mu_block + nu_block + (mu, nu))
                    )
                    terms.append(
                        WeightedTerm(mu_block, nu_block, arr_a * arr_b, w, base)
                    )
    return terms


def weighted_hurwitz(G: WeightGen, d: int, mu, nu) -> Fraction:
    """Weighted Hurwitz number H^d_G(mu, nu), exact.

    d = 0 degenerates to the unweighted two-point count delta_{mu,nu}/z_mu;
    for the quantum family only nu = (1^N) is defined.
    """
    return sum((t.value for t in weighted_hurwitz_terms(G, d, mu, nu)), Fraction(0))


@dataclass(frozen=True)
class WeightedCount:
    """A weighted double Hurwitz number together with its inputs."""

    d: int
    mu: Partition
    nu: Partition
    value: Fraction


def weighted_count(G: WeightGen, d: int, mu, nu) -> WeightedCount:
    mu = as_partition(mu)
    nu = as_partition(nu)
    return WeightedCount(d, mu, nu, weighted_hurwitz(G, d, mu, nu))
