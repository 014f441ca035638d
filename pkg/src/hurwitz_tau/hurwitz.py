"""Classical (possibly disconnected) Hurwitz numbers.

Two independent routes: the character-sum formula over irreducible
representations, and a brute-force count of permutation tuples whose
ordered product is the identity.  They must agree exactly, which is the
package's first acceptance gate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations, product
from math import factorial

from .characters import _character
from .errors import ScaleGuardError, UsageError
from .partitions import (
    Partition,
    as_partition,
    colength,
    enumerate_partitions,
    hook_product,
    weight,
    z_of,
)

_ORACLE_MAX_N = 5
_ORACLE_MAX_K = 4


@dataclass(frozen=True)
class ProfileTuple:
    """Sheet count N plus ramification profiles, each a partition of N."""

    N: int
    profiles: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "profiles", tuple(as_partition(p) for p in self.profiles)
        )
        for p in self.profiles:
            if weight(p) != self.N:
                raise UsageError(
                    f"profile {p} has weight {weight(p)}, expected {self.N}",
                    code="profile-weight-mismatch",
                )

    @property
    def d(self) -> int:
        """Total colength, the branching defect in Riemann-Hurwitz."""
        return sum(colength(p) for p in self.profiles)


def hurwitz_number(pt: ProfileTuple) -> Fraction:
    """Character-sum evaluation: sum_lam h(lam)^(k-2) prod_j chi/z.

    Counts all factorizations of the identity, i.e. possibly disconnected
    covers, exactly what the generating series produce.
    """
    k = len(pt.profiles)
    if k < 1:
        raise UsageError("need at least one ramification profile", code="empty-profiles")
    total = Fraction(0)
    for lam in enumerate_partitions(pt.N):
        term = Fraction(hook_product(lam)) ** (k - 2)
        for p in pt.profiles:
            term *= Fraction(_character(lam, p), z_of(p))
        total += term
    return total


def riemann_hurwitz(pt: ProfileTuple) -> tuple[int, Fraction]:
    """Euler characteristic 2N - d and genus (2 - chi)/2, exact.

    The genus may be a non-integer rational; that signals there is no
    connected cover with these profiles.
    """
    chi = 2 * pt.N - pt.d
    return chi, Fraction(2 - chi, 2)


# -- permutation machinery for the oracle ----------------------------------

def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def cycle_type(p: tuple[int, ...]) -> Partition:
    seen = [False] * len(p)
    sizes = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            size += 1
        sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


@cache
def conjugacy_classes(n: int) -> dict[Partition, tuple[tuple[int, ...], ...]]:
    """All of S_n bucketed by cycle type."""
    buckets: dict[Partition, list] = {}
    for p in permutations(range(n)):
        buckets.setdefault(cycle_type(p), []).append(p)
    return {ct: tuple(ps) for ct, ps in buckets.items()}


def hurwitz_oracle(pt: ProfileTuple) -> Fraction:
    """Count tuples (s_1, ..., s_k), s_i in class mu^(i), with product id, over N!.

    The last factor is forced to be the inverse of the partial product, so
    only the first k-1 classes are enumerated.  Refuses to run past N = 5
    or k = 4.
    """
    k = len(pt.profiles)
    if k < 1:
        raise UsageError("need at least one ramification profile", code="empty-profiles")
    if pt.N > _ORACLE_MAX_N or k > _ORACLE_MAX_K:
        raise ScaleGuardError(
            f"factorization oracle is capped at N <= {_ORACLE_MAX_N}, "
            f"k <= {_ORACLE_MAX_K}; got N={pt.N}, k={k}"
        )
    classes = conjugacy_classes(pt.N)
    lead = [classes.get(p, ()) for p in pt.profiles[:-1]]
    last = pt.profiles[-1]
    count = 0
    for choice in product(*lead):
        prod_perm = identity_perm(pt.N)
        for s in choice:
            prod_perm = compose(prod_perm, s)
        # s_k = inverse(product), and an inverse has the same cycle type
        if cycle_type(prod_perm) == last:
            count += 1
    return Fraction(count, factorial(pt.N))
