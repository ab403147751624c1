"""Core clan data type and its elementary transforms.

A clan is a string of ``+``/``-`` signs and paired natural numbers in which
every number appears exactly twice; the two occurrences of a number are
called *mates*.  Only balanced clans (as many ``+`` as ``-``, length ``2n``)
are supported here.  Clans are kept in canonical form: pair labels are
renumbered 1..k in order of first occurrence, so two clans are equal exactly
when their sign positions and mate-position sets coincide.

Positions are 1-indexed in every public interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

PLUS = "+"
MINUS = "-"

#: A clan symbol: one of the two sign literals, or a positive integer label.
Symbol = Union[str, int]


class ClanError(ValueError):
    """Raised for malformed clans and violated preconditions."""


def _flip_sign(s: Symbol) -> Symbol:
    return MINUS if s == PLUS else PLUS


def _canonical(symbols: Sequence[Symbol]) -> tuple[Symbol, ...]:
    """Renumber pair labels 1..k by first occurrence."""
    relabel: dict[Symbol, int] = {}
    out: list[Symbol] = []
    for s in symbols:
        if s == PLUS or s == MINUS:
            out.append(s)
        else:
            if s not in relabel:
                relabel[s] = len(relabel) + 1
            out.append(relabel[s])
    return tuple(out)


class Clan:
    """A balanced (n,n)-clan in canonical form.

    Accepts any iterable of symbols; labels may be arbitrary hashable
    values and are canonicalized on construction.
    """

    __slots__ = ("_symbols",)

    def __init__(self, symbols: Iterable[Symbol]):
        syms = _canonical(tuple(symbols))
        if not syms:
            raise ClanError("a clan must contain at least two symbols")
        if len(syms) % 2 != 0:
            raise ClanError(f"odd number of symbols ({len(syms)})")
        counts: dict[int, int] = {}
        plus = minus = 0
        for s in syms:
            if s == PLUS:
                plus += 1
            elif s == MINUS:
                minus += 1
            else:
                counts[s] = counts.get(s, 0) + 1
        for label, c in counts.items():
            if c != 2:
                raise ClanError(f"label {label} appears {c} times, expected 2")
        if plus != minus:
            raise ClanError(
                f"unbalanced signs ({plus} plus vs {minus} minus): not an (n,n)-clan"
            )
        self._symbols = syms

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return self._symbols

    @property
    def n(self) -> int:
        """Half-length: the clan has 2n symbols."""
        return len(self._symbols) // 2

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._symbols)

    def __getitem__(self, pos: int) -> Symbol:
        """Symbol at 1-based position ``pos``."""
        if not 1 <= pos <= len(self._symbols):
            raise IndexError(pos)
        return self._symbols[pos - 1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Clan):
            return self._symbols == other._symbols
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __lt__(self, other: "Clan") -> bool:
        # canonical enumeration order: lexicographic on spaced text
        return self.spaced() < other.spaced()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.text()!r})"

    def __str__(self) -> str:
        return self.text()

    # -- serialization ----------------------------------------------------

    def compact(self) -> str:
        """One character per symbol; only valid while labels stay below 10."""
        if any(s not in (PLUS, MINUS) and s > 9 for s in self._symbols):
            raise ClanError("compact form requires all labels <= 9")
        return "".join(str(s) for s in self._symbols)

    def spaced(self) -> str:
        """Whitespace-separated token form; valid for arbitrary labels."""
        return " ".join(str(s) for s in self._symbols)

    def text(self) -> str:
        """Compact form when possible, spaced form otherwise."""
        try:
            return self.compact()
        except ClanError:
            return self.spaced()

    # -- elementary transforms --------------------------------------------

    def reverse(self) -> "Clan":
        """The symbol sequence read backwards, re-canonicalized."""
        return Clan(reversed(self._symbols))

    def negative(self) -> "Clan":
        """Swap every ``+`` with ``-``, leaving numbers untouched."""
        return Clan(
            _flip_sign(s) if s in (PLUS, MINUS) else s for s in self._symbols
        )

    def flip(self) -> "Clan":
        """Exchange the two middle symbols (positions n and n+1)."""
        n = self.n
        syms = list(self._symbols)
        syms[n - 1], syms[n] = syms[n], syms[n - 1]
        return Clan(syms)

    # -- structure queries --------------------------------------------------

    def mate_positions(self) -> dict[int, int]:
        """Map each number-holding position to the position of its mate."""
        first_seen: dict[Symbol, int] = {}
        mates: dict[int, int] = {}
        for pos, s in enumerate(self._symbols, start=1):
            if s == PLUS or s == MINUS:
                continue
            if s in first_seen:
                i = first_seen[s]
                mates[i] = pos
                mates[pos] = i
            else:
                first_seen[s] = pos
        return mates

    def pairs(self) -> list[tuple[int, int]]:
        """Mate-position pairs (i, j) with i < j, in label order."""
        first_seen: dict[Symbol, int] = {}
        out: list[tuple[int, int]] = []
        for pos, s in enumerate(self._symbols, start=1):
            if s == PLUS or s == MINUS:
                continue
            if s in first_seen:
                out.append((first_seen[s], pos))
            else:
                first_seen[s] = pos
        return out

    def is_matchless(self) -> bool:
        return all(s in (PLUS, MINUS) for s in self._symbols)

    def signatures(self) -> tuple[str, ...]:
        """Signature of each position in the default signed clan.

        Signs keep their own symbol; the first mate of each pair is signed
        ``-`` and the second ``+``.
        """
        seen: set[Symbol] = set()
        sig: list[str] = []
        for s in self._symbols:
            if s == PLUS or s == MINUS:
                sig.append(s)
            elif s in seen:
                sig.append(PLUS)
            else:
                seen.add(s)
                sig.append(MINUS)
        return tuple(sig)

    # -- DIII validity ------------------------------------------------------

    def diii_violation(self) -> str | None:
        """The first violated DIII condition, or None if all three hold.

        The conditions: the clan equals the reverse of its negative; no
        number sits opposite its own mate; the count of minus signs plus
        mate pairs lying entirely in the first half is even.
        """
        n = self.n
        syms = self._symbols
        if _canonical(
            tuple(
                _flip_sign(s) if s in (PLUS, MINUS) else s
                for s in reversed(syms)
            )
        ) != syms:
            return "not skew-symmetric (clan differs from the reverse of its negative)"
        mates = self.mate_positions()
        for i, j in mates.items():
            if j == 2 * n + 1 - i:
                return f"antipodal mates at positions ({min(i, j)}, {max(i, j)})"
        minus_count = sum(1 for s in syms[:n] if s == MINUS)
        inner_pairs = sum(1 for (i, j) in self.pairs() if j <= n)
        if (minus_count + inner_pairs) % 2 != 0:
            return (
                f"odd parity in the first half ({minus_count} minus signs, "
                f"{inner_pairs} contained pairs)"
            )
        return None

    def is_diii(self) -> bool:
        return self.diii_violation() is None

    def to_diii(self) -> "DIIIClan":
        return self if isinstance(self, DIIIClan) else DIIIClan(self._symbols)


class DIIIClan(Clan):
    """A clan satisfying the three DIII conditions; validated on construction."""

    __slots__ = ()

    def __init__(self, symbols: Iterable[Symbol]):
        super().__init__(symbols)
        reason = self.diii_violation()
        if reason is not None:
            raise ClanError(f"not a DIII clan: {reason}")

    # -- derived combinatorial data ------------------------------------------

    def classify_pairs(self) -> "PairClassification":
        """Split mate pairs into straddling and one-sided sets, with families."""
        n = self.n
        pi0: set[tuple[int, int]] = set()
        pi1: set[tuple[int, int]] = set()
        families: list[tuple[int, int, int, int]] = []
        for i, j in self.pairs():
            if i <= n < j:
                pi0.add((i, j))
            else:
                pi1.add((i, j))
            if i < 2 * n + 1 - j:
                families.append((i, j, 2 * n + 1 - j, 2 * n + 1 - i))
        families.sort()
        return PairClassification(
            pi0=frozenset(pi0), pi1=frozenset(pi1), families=tuple(families)
        )

    def base_clan(self) -> "DIIIClan":
        """The matchless clan of signatures; a fixed point on matchless input."""
        return DIIIClan(self.signatures())

    def default_permutation(self) -> "Involution":
        """The involution fixing position i and its opposite when the
        signature at i is ``+``, and swapping them when it is ``-``."""
        n = self.n
        sig = self.signatures()
        mapping = list(range(1, 2 * n + 1))
        for i in range(1, n + 1):
            if sig[i - 1] == MINUS:
                mapping[i - 1] = 2 * n + 1 - i
                mapping[2 * n - i] = i
        return Involution(tuple(mapping))

    def underlying_involution(self) -> "Involution":
        """The involution exchanging the two positions of each mate pair."""
        mapping = list(range(1, len(self) + 1))
        for i, j in self.pairs():
            mapping[i - 1] = j
            mapping[j - 1] = i
        return Involution(tuple(mapping))


@dataclass(frozen=True)
class Involution:
    """A self-inverse permutation of {1..m} in one-line notation.

    ``mapping[k-1]`` is the image of k.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = len(self.mapping)
        if sorted(self.mapping) != list(range(1, m + 1)):
            raise ClanError(f"{self.mapping} is not a permutation of 1..{m}")
        for k in range(1, m + 1):
            if self.mapping[self.mapping[k - 1] - 1] != k:
                raise ClanError(f"{self.mapping} does not square to the identity")

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def __len__(self) -> int:
        return len(self.mapping)

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.mapping, start=1))

    def two_cycles(self) -> list[tuple[int, int]]:
        return [
            (k, v) for k, v in enumerate(self.mapping, start=1) if k < v
        ]

    def one_line(self) -> str:
        if len(self.mapping) <= 9:
            return "".join(str(v) for v in self.mapping)
        return " ".join(str(v) for v in self.mapping)

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class PairClassification:
    """Mate pairs split by position: ``pi0`` straddles the halfway point,
    ``pi1`` stays within one half.  Each family groups a pair (i, j) with
    its mirror pair as the quadruple (i, j, 2n+1-j, 2n+1-i)."""

    pi0: frozenset[tuple[int, int]]
    pi1: frozenset[tuple[int, int]]
    families: tuple[tuple[int, int, int, int], ...]

    @property
    def z(self) -> int:
        """Half the number of straddling pairs."""
        return len(self.pi0) // 2


def parse_clan(text: str) -> Clan:
    """Parse compact (one char per symbol) or spaced (token per symbol) form.

    The unicode minus sign is accepted as an alias for ``-``.
    """
    cleaned = text.replace("−", "-").strip()
    if not cleaned:
        raise ClanError("empty clan text")
    if any(ch.isspace() for ch in cleaned):
        tokens = cleaned.split()
    else:
        tokens = list(cleaned)
    symbols: list[Symbol] = []
    for tok in tokens:
        if tok == PLUS or tok == MINUS:
            symbols.append(tok)
        elif tok.isdigit() and int(tok) >= 1:
            symbols.append(int(tok))
        else:
            raise ClanError(f"unknown token {tok!r}")
    return Clan(symbols)


def parse_diii(text: str) -> DIIIClan:
    return DIIIClan(parse_clan(text).symbols)
