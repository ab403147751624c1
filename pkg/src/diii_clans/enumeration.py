"""Exhaustive generation and exact counting of DIII (n,n)-clans.

All counting is done with Python's arbitrary-precision integers, so the
results are bit-exact at any size.  The generator builds each clan once,
from the data that determines it: number positions in the first half, a
pairing of those positions, a straddling/contained mode per pair, and a
sign pattern of even parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .clans import MINUS, PLUS, Clan, ClanError, DIIIClan, Symbol

#: Number of DIII (n,n)-clans for n = 1, 2, 3, ...
KNOWN_COUNTS = (1, 3, 10, 38, 156, 692, 3256)


def count_by_pairs(n: int, r: int) -> int:
    """Number of DIII (n,n)-clans with exactly 2r mate pairs.

    Equals 2^(n-2r-1) * C(n, 2r) * (2r)!/r!; for n = 2r the leading factor
    is 1/2 and the product is still an integer.
    """
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    if not 0 <= 2 * r <= n:
        raise ClanError(f"pair count r={r} out of range for n={n}")
    ways = comb(n, 2 * r) * (factorial(2 * r) // factorial(r))
    if n - 2 * r - 1 >= 0:
        return ways << (n - 2 * r - 1)
    # n == 2r with r >= 1: (2r)!/r! is even
    return ways >> 1


def count_formula(n: int) -> int:
    """Total count as the sum of per-pair-count terms."""
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    return sum(count_by_pairs(n, r) for r in range(n // 2 + 1))


def count_recurrence(n: int) -> int:
    """Total count via D(n) = 2 D(n-1) + (2n-2) D(n-2), seeded D(1)=1, D(2)=3.

    D(0) = 1 by convention.
    """
    if n < 0:
        raise ClanError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    prev, cur = 1, 1  # D(0), D(1)
    if n >= 2:
        prev, cur = cur, 3
    for k in range(3, n + 1):
        prev, cur = cur, 2 * cur + (2 * k - 2) * prev
    return cur


def assemble_clan(
    n: int,
    contained_pairs: Sequence[tuple[int, int]],
    straddling_pairs: Sequence[tuple[int, int]],
    signs: Mapping[int, str],
) -> DIIIClan:
    """Build a DIII clan from first-half data; the second half follows by
    skew-symmetry.

    ``contained_pairs`` are mate pairs (i, j) with i < j <= n; each also
    yields the mirror pair in the second half.  ``straddling_pairs`` (i, j)
    with i < j <= n put mates at (i, 2n+1-j) and (j, 2n+1-i).  ``signs``
    assigns ``+``/``-`` to the remaining first-half positions.
    """
    syms: list[Symbol | None] = [None] * (2 * n)
    label = 0

    def place(p: int, q: int, lab: int) -> None:
        for pos in (p, q):
            if syms[pos - 1] is not None:
                raise ClanError(f"position {pos} assigned twice")
            syms[pos - 1] = lab

    for i, j in contained_pairs:
        if not 1 <= i < j <= n:
            raise ClanError(f"contained pair {(i, j)} out of range")
        label += 1
        place(i, j, label)
        label += 1
        place(2 * n + 1 - j, 2 * n + 1 - i, label)
    for i, j in straddling_pairs:
        if not 1 <= i < j <= n:
            raise ClanError(f"straddling pair {(i, j)} out of range")
        label += 1
        place(i, 2 * n + 1 - j, label)
        label += 1
        place(j, 2 * n + 1 - i, label)
    for pos, sign in signs.items():
        if not 1 <= pos <= n:
            raise ClanError(f"sign position {pos} out of range")
        if sign not in (PLUS, MINUS):
            raise ClanError(f"bad sign {sign!r}")
        if syms[pos - 1] is not None:
            raise ClanError(f"position {pos} assigned twice")
        syms[pos - 1] = sign
        syms[2 * n - pos] = MINUS if sign == PLUS else PLUS
    if any(s is None for s in syms):
        missing = [p + 1 for p, s in enumerate(syms) if s is None]
        raise ClanError(f"positions {missing} left unassigned")
    return DIIIClan(syms)


def _matchings(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of an even-sized tuple into (smaller, larger) pairs."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for sub in _matchings(rest[:k] + rest[k + 1 :]):
            yield ((first, partner),) + sub


@dataclass(frozen=True)
class ClanSet:
    """The full set of DIII (n,n)-clans, sorted by spaced text."""

    n: int
    clans: tuple[DIIIClan, ...]

    def __len__(self) -> int:
        return len(self.clans)

    def __iter__(self) -> Iterator[DIIIClan]:
        return iter(self.clans)

    def __contains__(self, clan: object) -> bool:
        return clan in set(self.clans)


def generate_diii(n: int) -> Iterator[DIIIClan]:
    """Yield every DIII (n,n)-clan exactly once (unsorted)."""
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    positions = range(1, n + 1)
    for npairs2 in range(0, n + 1, 2):
        for chosen in combinations(positions, npairs2):
            sign_slots = [p for p in positions if p not in chosen]
            for matching in _matchings(chosen):
                r = len(matching)
                for modes in product((0, 1), repeat=r):
                    contained = [m for m, b in zip(matching, modes) if b]
                    straddling = [m for m, b in zip(matching, modes) if not b]
                    pair_parity = len(contained) % 2
                    if not sign_slots:
                        if pair_parity == 0:
                            yield assemble_clan(n, contained, straddling, {})
                        continue
                    for pattern in product((PLUS, MINUS), repeat=len(sign_slots)):
                        if (pattern.count(MINUS) + pair_parity) % 2 == 0:
                            signs = dict(zip(sign_slots, pattern))
                            yield assemble_clan(n, contained, straddling, signs)


@lru_cache(maxsize=None)
def enumerate_diii(n: int) -> ClanSet:
    """All DIII (n,n)-clans, deduplicated and sorted.

    Cached: the result is immutable and reused heavily by the poset and
    sect builders.
    """
    found = set(generate_diii(n))
    return ClanSet(n, tuple(sorted(found, key=Clan.spaced)))
