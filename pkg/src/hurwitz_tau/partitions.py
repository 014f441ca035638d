"""Integer partitions and the scalar invariants attached to them.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the partition of 0.  Enumeration order is reverse
lexicographic starting from the one-row partition, fixed so every table
in the package is byte-reproducible.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .errors import UsageError

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Canonicalize any iterable of positive ints into a sorted tuple."""
    mu = tuple(sorted((int(p) for p in parts), reverse=True))
    if mu and mu[-1] <= 0:
        raise UsageError("partition parts must be positive integers",
                         code="bad-partition")
    return mu


def weight(mu: Partition) -> int:
    return sum(mu)


def length(mu: Partition) -> int:
    return len(mu)


def colength(mu: Partition) -> int:
    """|mu| - l(mu), the defect a branch point with this profile contributes."""
    return sum(mu) - len(mu)


def identity_cycle_type(n: int) -> Partition:
    """Cycle type (1^n) of the identity permutation."""
    return (1,) * n


def multiplicities(mu: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for part in mu:
        m[part] = m.get(part, 0) + 1
    return m


def z_of(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``.

    z_mu = prod_i i^{m_i} m_i! where m_i is the multiplicity of part i;
    the conjugacy class has n!/z_mu elements.
    """
    z = 1
    for part, m in multiplicities(mu).items():
        z *= part ** m * factorial(m)
    return z


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of every cell, row by row."""
    conj = conjugate(lam)
    return [
        lam[i] - (j + 1) + conj[j] - (i + 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths; dim(lam) = n!/hook_product(lam)."""
    h = 1
    for x in hook_lengths(lam):
        h *= x
    return h


def contents(lam: Partition) -> list[int]:
    """Multiset {j - i} over cells (i, j) of the diagram, row by row."""
    return [j - i for i in range(len(lam)) for j in range(lam[i])]


@cache
def _partitions(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    cur = [n]
    while True:
        out.append(tuple(cur))
        k = len(cur) - 1
        while k >= 0 and cur[k] == 1:
            k -= 1
        if k < 0:
            break
        rem = len(cur) - k  # the trailing ones plus the unit shaved off cur[k]
        cur[k] -= 1
        cap = cur[k]
        del cur[k + 1:]
        while rem > 0:
            take = min(cap, rem)
            cur.append(take)
            rem -= take
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise UsageError("cannot enumerate partitions of a negative integer",
                         code="bad-partition")
    return list(_partitions(n))


def format_partition(mu: Partition) -> str:
    return "[" + ",".join(str(p) for p in mu) + "]"


def parse_partition(text: str) -> Partition:
    """Parse ``"[3,1,1]"`` (or ``"[]"``); errors point at the offending character."""

    def fail(pos: int, why: str):
        raise UsageError(
            f"bad partition {text!r}: {why} at position {pos}", code="bad-partition"
        )

    s = text.strip()
    if not s.startswith("["):
        fail(0, "expected '['")
    if not s.endswith("]"):
        fail(len(s), "expected ']'")
    body = s[1:-1].strip()
    if not body:
        return ()
    parts = []
    pos = 1
    for piece in body.split(","):
        item = piece.strip()
        if not item.isdigit() or int(item) <= 0:
            fail(pos, f"expected a positive integer, got {piece.strip()!r}")
        parts.append(int(item))
        pos += len(piece) + 1
    return as_partition(parts)
