"""Sect decomposition: clans grouped by base clan, the subset encoding of
matchless clans, and the big-sect bijection with partial fixed-point-free
involutions."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .clans import MINUS, PLUS, Clan, ClanError, DIIIClan, Symbol
from .enumeration import enumerate_diii
from .weak_order import _length


@dataclass(frozen=True)
class SchubertSubset:
    """An n-element subset of {1..2n} avoiding antipodal position pairs and
    dropping an even number of first-half positions."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        n = self.n
        if len(self.members) != n:
            raise ClanError(f"subset must have exactly {n} elements")
        for i in self.members:
            if not 1 <= i <= 2 * n:
                raise ClanError(f"element {i} outside 1..{2 * n}")
            if 2 * n + 1 - i in self.members:
                raise ClanError(
                    f"antipodal elements {i} and {2 * n + 1 - i} both present"
                )
        dropped = sum(1 for i in range(1, n + 1) if i not in self.members)
        if dropped % 2 != 0:
            raise ClanError(
                f"odd number of first-half positions missing ({dropped})"
            )

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def subset_to_base_clan(subset: SchubertSubset) -> DIIIClan:
    """Plus at member positions, minus elsewhere."""
    return DIIIClan(
        PLUS if i in subset.members else MINUS
        for i in range(1, 2 * subset.n + 1)
    )


def base_clan_to_subset(base: DIIIClan) -> SchubertSubset:
    """Positions of the plus signs of a matchless DIII clan."""
    if not base.is_matchless():
        raise ClanError("expected a matchless clan")
    members = frozenset(
        i for i, s in enumerate(base.symbols, start=1) if s == PLUS
    )
    return SchubertSubset(base.n, members)


@dataclass(frozen=True)
class Sect:
    """All clans sharing one matchless base clan."""

    base: DIIIClan
    members: tuple[DIIIClan, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[DIIIClan]:
        return iter(self.members)

    def longest(self) -> DIIIClan:
        """The unique member of maximal length."""
        best = max(self.members, key=_length)
        top = _length(best)
        if sum(1 for c in self.members if _length(c) == top) != 1:
            raise AssertionError(f"sect of {self.base} has no unique longest clan")
        return best


def sects(n: int) -> list[Sect]:
    """Partition of all DIII (n,n)-clans by base clan, sorted by base."""
    groups: dict[DIIIClan, list[DIIIClan]] = {}
    for clan in enumerate_diii(n):
        groups.setdefault(clan.base_clan(), []).append(clan)
    return [
        Sect(base, tuple(sorted(groups[base], key=Clan.spaced)))
        for base in sorted(groups, key=Clan.spaced)
    ]


def big_sect_base(n: int) -> DIIIClan:
    """Base clan of the sect over the dense cell: all minus then all plus,
    with the two middle signs traded when n is odd."""
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    if n % 2 == 0:
        syms = [MINUS] * n + [PLUS] * n
    else:
        syms = [MINUS] * (n - 1) + [PLUS, MINUS] + [PLUS] * (n - 1)
    return DIIIClan(syms)


def big_sect(n: int) -> Sect:
    """The sect containing the unique maximal clan."""
    base = big_sect_base(n)
    members = tuple(
        sorted(
            (c for c in enumerate_diii(n) if c.base_clan() == base),
            key=Clan.spaced,
        )
    )
    return Sect(base, members)


def epsilon_count(n: int) -> int:
    """Size of the big sect: sum over r of n! / ((n-2r)! r! 2^r), the
    involution numbers."""
    if n < 0:
        raise ClanError(f"n must be nonnegative, got {n}")
    return sum(
        factorial(n) // (factorial(n - 2 * r) * factorial(r) * 2**r)
        for r in range(n // 2 + 1)
    )


def epsilon_recurrence(n: int) -> int:
    """Same count via e(n) = e(n-1) + (n-1) e(n-2), e(0) = e(1) = 1."""
    if n < 0:
        raise ClanError(f"n must be nonnegative, got {n}")
    prev, cur = 1, 1
    for k in range(2, n + 1):
        prev, cur = cur, cur + (k - 1) * prev
    return cur if n >= 1 else 1


@dataclass(frozen=True)
class PartialFPFInvolution:
    """A symmetric partial matching of {1..n} with no fixed points.

    ``values[i-1]`` is the partner of i, or 0 when i is unmatched.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        for i, v in enumerate(self.values, start=1):
            if not 0 <= v <= n:
                raise ClanError(f"value {v} outside 0..{n}")
            if v == i:
                raise ClanError(f"fixed point at {i}")
            if v != 0 and self.values[v - 1] != i:
                raise ClanError(f"not symmetric at ({i}, {v})")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def blocks(self) -> list[tuple[int, int]]:
        return [
            (i, v) for i, v in enumerate(self.values, start=1) if 0 < i < v
        ]

    def to_text(self) -> str:
        """Comma-joined ``i:j`` blocks; empty string for the empty matching."""
        return ",".join(f"{i}:{j}" for i, j in self.blocks())

    @classmethod
    def from_text(cls, text: str, n: int) -> "PartialFPFInvolution":
        values = [0] * n
        cleaned = text.strip()
        if cleaned:
            for chunk in cleaned.split(","):
                try:
                    a_s, b_s = chunk.split(":")
                    a, b = int(a_s), int(b_s)
                except ValueError:
                    raise ClanError(f"bad block {chunk!r}; expected i:j") from None
                if not (1 <= a <= n and 1 <= b <= n):
                    raise ClanError(f"block {chunk!r} outside 1..{n}")
                if values[a - 1] or values[b - 1]:
                    raise ClanError(f"element reused in block {chunk!r}")
                values[a - 1], values[b - 1] = b, a
        return cls(tuple(values))

    def __str__(self) -> str:
        return self.to_text()


def clan_to_pfpf(clan: DIIIClan) -> PartialFPFInvolution:
    """Encode a big-sect clan: straddling mates (i, j) link i with 2n+1-j,
    and a contained mate of position n links directly."""
    clan = clan.to_diii()
    n = clan.n
    if clan.base_clan() != big_sect_base(n):
        raise ClanError("clan does not belong to the big sect")
    values = [0] * n
    classified = clan.classify_pairs()
    for (i, j) in classified.pi0:
        if i <= n:
            partner = 2 * n + 1 - j
            values[i - 1] = partner
            values[partner - 1] = i
    for (i, j) in classified.pi1:
        if j == n:
            values[i - 1] = n
            values[n - 1] = i
    return PartialFPFInvolution(tuple(values))


def pfpf_to_clan(x: PartialFPFInvolution, n: int) -> DIIIClan:
    """Decode into the big sect; unmatched positions become minus signs
    except position n when n is odd, which is a plus."""
    if x.n != n:
        raise ClanError(f"involution is on {x.n} letters, expected {n}")
    syms: list[Symbol | None] = [None] * (2 * n)
    label = 0
    for (i, j) in x.blocks():
        label += 1
        a = label
        label += 1
        b = label
        if j == n and n % 2 == 1:
            # contained pair (i, n) with mirror (n+1, 2n+1-i)
            syms[i - 1] = syms[n - 1] = a
            syms[n] = syms[2 * n - i] = b
        else:
            # straddling pairs (i, 2n+1-j) and (j, 2n+1-i)
            syms[i - 1] = syms[2 * n - j] = a
            syms[j - 1] = syms[2 * n - i] = b
    for i in range(1, n + 1):
        if syms[i - 1] is None:
            if i == n and n % 2 == 1:
                syms[n - 1], syms[n] = PLUS, MINUS
            else:
                syms[i - 1] = MINUS
                syms[2 * n - i] = PLUS
    clan = DIIIClan(syms)
    if clan.base_clan() != big_sect_base(n):
        raise AssertionError("decoded clan left the big sect")
    return clan
