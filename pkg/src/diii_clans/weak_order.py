"""Length function, simple-reflection action, weak order poset, and rank
polynomials for DIII clans.

The monoid action of the simple reflections is realized by a
candidate-and-filter rule: each reflection proposes a position swap and,
where signs allow, a collapse of signs into fresh mate pairs; a candidate is
accepted exactly when it is a valid DIII clan one longer than the input.
At most one candidate ever survives the filter, and a reflection with no
surviving candidate fixes the clan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .clans import MINUS, PLUS, Clan, ClanError, DIIIClan
from .enumeration import enumerate_diii


@dataclass(frozen=True)
class LengthStats:
    """Per-pair spreads and weaves, the straddling-pair count z, and the
    resulting length ((sum of spread-weave) - z) / 2."""

    spreads: Mapping[int, int]
    weaves: Mapping[int, int]
    z: int
    length: int


def clan_length(clan: Clan) -> LengthStats:
    """Length statistics of a DIII clan.

    The spread of a pair is the distance between its mates; its weave counts
    pairs opening strictly before it and closing strictly inside it.
    """
    if not isinstance(clan, DIIIClan) and not clan.is_diii():
        raise ClanError("clan_length requires a DIII clan")
    n = clan.n
    pairs = clan.pairs()
    spreads: dict[int, int] = {}
    weaves: dict[int, int] = {}
    for label, (i, j) in enumerate(pairs, start=1):
        spreads[label] = j - i
        weaves[label] = sum(1 for (u, t) in pairs if u < i < t < j)
    z = sum(1 for (i, j) in pairs if i <= n < j) // 2
    total = sum(spreads.values()) - sum(weaves.values()) - z
    if total % 2 != 0:
        raise ClanError("length formula did not produce an integer")
    length = total // 2
    if not 0 <= length <= n * (n - 1) // 2:
        raise ClanError(f"length {length} outside [0, n(n-1)/2]")
    return LengthStats(spreads=spreads, weaves=weaves, z=z, length=length)


@lru_cache(maxsize=None)
def _length(clan: DIIIClan) -> int:
    return clan_length(clan).length


def _reflection_candidates(i: int, clan: DIIIClan) -> list[tuple]:
    """Raw symbol tuples for the swap and collapse candidates of s_i."""
    syms = clan.symbols
    n = clan.n
    m = 2 * n
    fresh1, fresh2 = m + 1, m + 2  # canonicalized away on construction
    out: list[tuple] = []
    if i < n:
        # swap positions (i, i+1) and (2n-i, 2n+1-i)
        swapped = list(syms)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        swapped[m - i - 1], swapped[m - i] = swapped[m - i], swapped[m - i - 1]
        out.append(tuple(swapped))
        if {syms[i - 1], syms[i]} == {PLUS, MINUS}:
            collapsed = list(syms)
            collapsed[i - 1] = collapsed[i] = fresh1
            collapsed[m - i - 1] = collapsed[m - i] = fresh2
            out.append(tuple(collapsed))
    else:
        # swap positions (n-1, n+1) and (n, n+2)
        swapped = list(syms)
        swapped[n - 2], swapped[n] = swapped[n], swapped[n - 2]
        swapped[n - 1], swapped[n + 1] = swapped[n + 1], swapped[n - 1]
        out.append(tuple(swapped))
        quad = syms[n - 2 : n + 2]
        if quad in ((PLUS, PLUS, MINUS, MINUS), (MINUS, MINUS, PLUS, PLUS)):
            collapsed = list(syms)
            collapsed[n - 2] = collapsed[n] = fresh1
            collapsed[n - 1] = collapsed[n + 1] = fresh2
            out.append(tuple(collapsed))
    return out


@lru_cache(maxsize=None)
def apply_reflection(i: int, clan: DIIIClan) -> DIIIClan:
    """The action of the i-th simple reflection on a DIII clan.

    Returns the unique DIII clan of length one greater reachable by the
    candidate moves, or the clan itself when there is none.
    """
    clan = clan.to_diii()
    n = clan.n
    if not 1 <= i <= n:
        raise ClanError(f"reflection index {i} out of range 1..{n}")
    if n == 1:
        return clan
    target = _length(clan) + 1
    accepted: list[DIIIClan] = []
    for symbols in _reflection_candidates(i, clan):
        try:
            candidate = DIIIClan(symbols)
        except ClanError:
            continue
        if candidate != clan and _length(candidate) == target:
            accepted.append(candidate)
    if len(accepted) > 1:
        raise AssertionError(
            f"ambiguous ascent for s_{i} on {clan}: {accepted}"
        )
    return accepted[0] if accepted else clan


@dataclass(frozen=True)
class RankPolynomial:
    """Integer polynomial; coeffs[k] counts clans of length k."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def total(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                t = "t" if k == 1 else f"t^{k}"
                terms.append(t if c == 1 else f"{c}{t}")
        return "+".join(terms) if terms else "0"


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for k, ca in enumerate(a):
        if ca:
            for l, cb in enumerate(b):
                out[k + l] += ca * cb
    return out


def rank_poly_recurrence(n: int) -> RankPolynomial:
    """Rank polynomial via A_n = 2 A_{n-1} + m_n A_{n-2} where m_n has
    coefficient 1 on t^1..t^{2n-3} except 2 on t^{n-1}.

    Seeds: A_1 = 1, A_2 = t + 2.
    """
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    polys = {1: [1], 2: [2, 1]}
    for k in range(3, n + 1):
        middle = [0] * (2 * k - 2)
        for e in range(1, 2 * k - 2):
            middle[e] = 2 if e == k - 1 else 1
        polys[k] = _poly_add(
            [2 * c for c in polys[k - 1]], _poly_mul(middle, polys[k - 2])
        )
    return RankPolynomial(tuple(polys[n]))


def maximal_clan(n: int) -> DIIIClan:
    """The unique longest DIII (n,n)-clan, of length n(n-1)/2.

    Pairs are laid down as (2j+1, 2n-2j-1) and (2j+2, 2n-2j) for
    j = 0, 1, ...; when n is odd the two middle positions are +, -.
    """
    if n < 1:
        raise ClanError(f"n must be positive, got {n}")
    syms: list = [None] * (2 * n)
    label = 0
    j = 0
    while 2 * j + 2 <= (n if n % 2 == 0 else n - 1):
        for (p, q) in ((2 * j + 1, 2 * n - 2 * j - 1), (2 * j + 2, 2 * n - 2 * j)):
            label += 1
            syms[p - 1] = syms[q - 1] = label
        j += 1
    if n % 2 == 1:
        syms[n - 1] = PLUS
        syms[n] = MINUS
    clan = DIIIClan(syms)
    if _length(clan) != n * (n - 1) // 2:
        raise AssertionError(f"maximal clan for n={n} has wrong length")
    return clan


@dataclass(frozen=True)
class WeakOrderPoset:
    """The weak order on DIII (n,n)-clans: nodes with their lengths and the
    labeled cover relations (lower, upper, reflection index)."""

    n: int
    nodes: tuple[DIIIClan, ...]
    covers: tuple[tuple[DIIIClan, DIIIClan, int], ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def lengths(self) -> dict[DIIIClan, int]:
        return {c: _length(c) for c in self.nodes}

    def rank_sizes(self) -> list[int]:
        """Node counts by length, from length 0 upward."""
        sizes = [0] * (max(_length(c) for c in self.nodes) + 1)
        for c in self.nodes:
            sizes[_length(c)] += 1
        return sizes

    def successors(self, clan: DIIIClan) -> list[tuple[DIIIClan, int]]:
        return [(u, i) for (l, u, i) in self.covers if l == clan]

    def minimal_elements(self) -> list[DIIIClan]:
        uppers = {u for (_, u, _) in self.covers}
        return [c for c in self.nodes if c not in uppers]

    def maximal_elements(self) -> list[DIIIClan]:
        lowers = {l for (l, _, _) in self.covers}
        return [c for c in self.nodes if c not in lowers]

    def to_dot(self) -> str:
        """Graphviz digraph, ranked bottom-up by length, edges labeled by
        the reflection index."""
        lines = ["digraph weak_order {", "  rankdir=BT;", "  node [shape=plaintext];"]
        by_length: dict[int, list[DIIIClan]] = {}
        for c in self.nodes:
            by_length.setdefault(_length(c), []).append(c)
        for ln in sorted(by_length):
            row = " ".join(f'"{c.text()}";' for c in by_length[ln])
            lines.append(f"  {{ rank=same; {row} }}")
        for (l, u, i) in self.covers:
            lines.append(f'  "{l.text()}" -> "{u.text()}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "nodes": [c.spaced() for c in self.nodes],
            "covers": [
                {"lower": l.spaced(), "upper": u.spaced(), "reflection": i}
                for (l, u, i) in self.covers
            ],
        }


def weak_order_poset(n: int) -> WeakOrderPoset:
    """Build the weak order from the reflection action on all clans."""
    nodes = enumerate_diii(n).clans
    covers = []
    for clan in nodes:
        for i in range(1, n + 1):
            image = apply_reflection(i, clan)
            if image != clan:
                covers.append((clan, image, i))
    covers.sort(key=lambda e: (e[0].spaced(), e[2], e[1].spaced()))
    return WeakOrderPoset(n, nodes, tuple(covers))


def rank_polynomial(poset: WeakOrderPoset) -> RankPolynomial:
    """Rank polynomial read off a built poset."""
    return RankPolynomial(tuple(poset.rank_sizes()))


def iter_reflections(n: int) -> Iterator[int]:
    return iter(range(1, n + 1))
