"""Weighted Delannoy paths and the clan <-> path bijection.

A word of labeled N/E/D steps encodes a DIII clan through repeated outer
reductions: each loop inspects the last symbol of the current clan, emits a
mirrored pair of steps at the two open ends of the path, strips the symbols
it consumed, and recurses on the shrunken clan.

The label bound for a diagonal step at word position i uses the size of the
clan remaining at that stage, m_i = n - i + 1 - k_i with k_i the number of
earlier diagonal steps: a first-half label lies in [2, 2*m_i - 1], i.e.
2 <= l_i <= 2n+1-2(i+k_i), and the mirrored step carries 2n+3-2(i+k_i)-l_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .clans import MINUS, PLUS, ClanError, DIIIClan, Symbol

NORTH = "N"
EAST = "E"
DIAGONAL = "D"


class PathError(ClanError):
    """Raised for malformed weighted Delannoy paths."""


@dataclass(frozen=True)
class LabeledStep:
    direction: str
    label: int = 1

    def __post_init__(self):
        if self.direction not in (NORTH, EAST, DIAGONAL):
            raise PathError(f"unknown direction {self.direction!r}")
        if self.direction in (NORTH, EAST):
            if self.label != 1:
                raise PathError(f"{self.direction} steps carry label 1")
        elif self.label < 2:
            raise PathError("diagonal labels start at 2")

    def to_token(self) -> str:
        if self.direction == DIAGONAL:
            return f"{DIAGONAL}:{self.label}"
        return self.direction

    @classmethod
    def from_token(cls, token: str) -> "LabeledStep":
        if token in (NORTH, EAST):
            return cls(token)
        if token.startswith(f"{DIAGONAL}:"):
            try:
                return cls(DIAGONAL, int(token[2:]))
            except ValueError:
                raise PathError(f"bad diagonal label in {token!r}") from None
        raise PathError(f"unknown step token {token!r}")


@dataclass(frozen=True)
class WeightedDelannoyPath:
    """A word of labeled steps; validity is checked by ``validate_path``."""

    steps: tuple[LabeledStep, ...]

    @property
    def n(self) -> int:
        return sum(1 for s in self.steps if s.direction in (EAST, DIAGONAL))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[LabeledStep]:
        return iter(self.steps)

    def to_word(self) -> str:
        return " ".join(s.to_token() for s in self.steps)

    @classmethod
    def from_word(cls, word: str) -> "WeightedDelannoyPath":
        tokens = word.split()
        if not tokens:
            raise PathError("empty path word")
        return cls(tuple(LabeledStep.from_token(t) for t in tokens))

    def to_json_list(self) -> list[dict]:
        return [{"direction": s.direction, "label": s.label} for s in self.steps]

    @classmethod
    def from_json_list(cls, data: Iterable[dict]) -> "WeightedDelannoyPath":
        steps = []
        for item in data:
            try:
                steps.append(LabeledStep(str(item["direction"]), int(item.get("label", 1))))
            except (KeyError, TypeError) as exc:
                raise PathError(f"malformed step JSON: {exc}") from None
        return cls(tuple(steps))

    def __str__(self) -> str:
        return self.to_word()


def validate_path(path: WeightedDelannoyPath | Sequence[LabeledStep]) -> tuple[bool, int | None]:
    """Check the four defining conditions in order; return (ok, first
    violated condition number).

    1. the directions walk from (0,0) to (n,n);
    2. step i is N exactly when its mirror step is E;
    3. diagonal labels in the first half lie within the stage bound and the
       mirror step carries the complementary label;
    4. the word has even length and its middle is either an E step or the
       labeled pair (D,3)(D,2).
    """
    steps = tuple(path)
    r = len(steps)
    north = sum(1 for s in steps if s.direction == NORTH)
    east = sum(1 for s in steps if s.direction == EAST)
    if r == 0 or north != east:
        return False, 1
    n = east + sum(1 for s in steps if s.direction == DIAGONAL)
    for i in range(1, r + 1):
        a, b = steps[i - 1], steps[r - i]
        if (a.direction == NORTH) != (b.direction == EAST):
            return False, 2
    diagonals_before = 0
    for i in range(1, r // 2 + 1):
        step = steps[i - 1]
        if step.direction == DIAGONAL:
            bound = 2 * n + 1 - 2 * (i + diagonals_before)
            if not 2 <= step.label <= bound:
                return False, 3
            mirror = steps[r - i]
            if mirror.direction != DIAGONAL or mirror.label != bound + 2 - step.label:
                return False, 3
            diagonals_before += 1
    if r % 2 != 0:
        return False, 4
    mid = steps[r // 2 - 1]
    if mid.direction == EAST:
        pass
    elif mid == LabeledStep(DIAGONAL, 3) and steps[r // 2] == LabeledStep(DIAGONAL, 2):
        pass
    else:
        return False, 4
    return True, None


def _swap_middle(syms: list[Symbol]) -> None:
    k = len(syms) // 2
    if k:
        syms[k - 1], syms[k] = syms[k], syms[k - 1]


def clan_to_path(clan: DIIIClan) -> WeightedDelannoyPath:
    """Reduce the clan from the outside in, one mirrored step pair per loop.

    A trailing minus emits E...N and strips the outer symbols; a trailing
    plus emits N...E, strips, and trades the middle pair.  A trailing mate
    emits a labeled diagonal pair and strips its whole family, trading the
    middle pair when the mate straddled into the second half.
    """
    syms: list[Symbol] = list(clan.to_diii().symbols)
    head: list[LabeledStep] = []
    tail: list[LabeledStep] = []
    while syms:
        m = len(syms) // 2
        last = syms[-1]
        if last == MINUS:
            head.append(LabeledStep(EAST))
            tail.append(LabeledStep(NORTH))
            syms = syms[1:-1]
        elif last == PLUS:
            head.append(LabeledStep(NORTH))
            tail.append(LabeledStep(EAST))
            syms = syms[1:-1]
            _swap_middle(syms)
        else:
            j = syms.index(last) + 1  # position of the matching mate
            tail.append(LabeledStep(DIAGONAL, j))
            head.append(LabeledStep(DIAGONAL, 2 * m + 1 - j))
            drop = {0, j - 1, 2 * m - j, 2 * m - 1}
            syms = [s for k, s in enumerate(syms) if k not in drop]
            if j > m:
                _swap_middle(syms)
    path = WeightedDelannoyPath(tuple(head + tail[::-1]))
    ok, violated = validate_path(path)
    if not ok:
        raise AssertionError(f"generated path violates condition {violated}")
    return path


def path_to_clan(path: WeightedDelannoyPath) -> DIIIClan:
    """Invert the reduction, rebuilding the clan from the inside out."""
    ok, violated = validate_path(path)
    if not ok:
        raise PathError(f"invalid weighted Delannoy path: condition {violated} violated")
    steps = path.steps
    r = len(steps)
    syms: list[Symbol] = []
    label = 0
    for k in range(r // 2, 0, -1):
        outer = steps[r - k]
        if outer.direction == NORTH:
            syms = [PLUS] + syms + [MINUS]
        elif outer.direction == EAST:
            _swap_middle(syms)
            syms = [MINUS] + syms + [PLUS]
        else:
            m = len(syms) // 2 + 2
            j = outer.label
            if j > m:
                _swap_middle(syms)
            grown: list[Symbol | None] = [None] * (2 * m)
            label += 1
            grown[0] = grown[2 * m - j] = label
            label += 1
            grown[j - 1] = grown[2 * m - 1] = label
            fill = iter(syms)
            for pos in range(2 * m):
                if grown[pos] is None:
                    grown[pos] = next(fill)
            syms = list(grown)
    return DIIIClan(syms)
