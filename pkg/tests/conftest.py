import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from diii_clans import DIIIClan, assemble_clan


@st.composite
def diii_clans(draw, min_n: int = 1, max_n: int = 12) -> DIIIClan:
    """Random DIII clan built from random first-half data."""
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(0, n // 2))
    order = draw(st.permutations(list(range(1, n + 1))))
    paired, rest = order[: 2 * r], sorted(order[2 * r :])
    matching = [tuple(sorted(paired[2 * k : 2 * k + 2])) for k in range(r)]
    modes = draw(st.lists(st.booleans(), min_size=r, max_size=r))
    contained = [m for m, b in zip(matching, modes) if b]
    straddling = [m for m, b in zip(matching, modes) if not b]
    if rest:
        signs = {
            pos: draw(st.sampled_from("+-")) for pos in rest[:-1]
        }
        minus_so_far = sum(1 for s in signs.values() if s == "-")
        need_minus = (minus_so_far + len(contained)) % 2 == 1
        signs[rest[-1]] = "-" if need_minus else "+"
    else:
        signs = {}
        if len(contained) % 2 == 1:
            # no sign slot can absorb the parity; trade one pair's mode
            moved = contained.pop()
            straddling.append(moved)
    return assemble_clan(n, contained, straddling, signs)
