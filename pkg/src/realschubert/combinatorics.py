"""Semi-standard Young tableaux of the two-row rectangular shape 2 x (d-1).

Everything here is exact: counts are Python integers and tableaux are tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import ConstraintViolation


@dataclass(frozen=True)
class ContentVector:
    """Multiplicity vector ``(a_1, ..., a_q)`` with ``1 <= a_j <= d-1`` and ``sum = 2d-2``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise ConstraintViolation(f"need q >= 2 entries, got {entries}")
        if any(a < 1 for a in entries):
            raise ConstraintViolation(f"every a_j must satisfy a_j >= 1: {entries}")
        total = sum(entries)
        if total % 2:
            raise ConstraintViolation(f"sum of entries must equal 2d-2 (even), got {total}")
        d = total // 2 + 1
        if any(a > d - 1 for a in entries):
            raise ConstraintViolation(f"every a_j must satisfy a_j <= d-1 = {d - 1}: {entries}")

    @classmethod
    def parse(cls, text: str) -> "ContentVector":
        """Build from a comma separated string such as ``"1,1,2,2"``."""
        try:
            values = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ConstraintViolation(f"cannot parse content {text!r}") from exc
        return cls(tuple(values))

    @property
    def d(self) -> int:
        return sum(self.entries) // 2 + 1

    @property
    def q(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def as_content(content) -> ContentVector:
    if isinstance(content, ContentVector):
        return content
    if isinstance(content, str):
        return ContentVector.parse(content)
    return ContentVector(tuple(content))


@dataclass(frozen=True, order=True)
class Tableau:
    row1: tuple[int, ...]
    row2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))

    def is_valid(self, content: Optional[ContentVector] = None) -> bool:
        r1, r2 = self.row1, self.row2
        if len(r1) != len(r2):
            return False
        if any(x < 1 for x in r1 + r2):
            return False
        if any(r1[i] > r1[i + 1] for i in range(len(r1) - 1)):
            return False
        if any(r2[i] > r2[i + 1] for i in range(len(r2) - 1)):
            return False
        if any(a >= b for a, b in zip(r1, r2)):
            return False
        if content is not None:
            if len(r1) != content.d - 1:
                return False
            counts = [0] * (content.q + 1)
            for x in r1 + r2:
                if x > content.q:
                    return False
                counts[x] += 1
            if tuple(counts[1:]) != content.entries:
                return False
        return True

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.row1)) + " | " + " ".join(map(str, self.row2)) + "]"


def enumerate_ssyt(content) -> list[Tableau]:
    """All SSYT of shape 2 x (d-1) in which ``k`` occurs ``a_k`` times.

    Columns are filled left to right; each column ``(top, bottom)`` must
    dominate the previous one entrywise and satisfy ``top < bottom``.
    The result is sorted lexicographically by ``(row1, row2)``.
    """
    content = as_content(content)
    width = content.d - 1
    q = content.q
    remaining = [0] + list(content.entries)
    row1: list[int] = []
    row2: list[int] = []
    out: list[Tableau] = []

    def smallest_left() -> int:
        for v in range(1, q + 1):
            if remaining[v]:
                return v
        return q + 1

    def extend(col: int, lo_top: int, lo_bot: int) -> None:
        if col == width:
            out.append(Tableau(tuple(row1), tuple(row2)))
            return
        for top in range(lo_top, q):
            if not remaining[top]:
                continue
            # a leftover value smaller than top could never be placed later
            if smallest_left() < top:
                break
            remaining[top] -= 1
            for bot in range(max(lo_bot, top + 1), q + 1):
                if not remaining[bot]:
                    continue
                remaining[bot] -= 1
                row1.append(top)
                row2.append(bot)
                extend(col + 1, top, bot)
                row1.pop()
                row2.pop()
                remaining[bot] += 1
            remaining[top] += 1

    extend(0, 1, 2)
    out.sort()
    return out


def kostka(content) -> int:
    """Number of SSYT of shape 2 x (d-1) with the given content.

    Counts without building tableaux: values are inserted in increasing
    order, ``x`` copies into the first row and the rest into the second; the
    second row may never outgrow the part of the first row filled by
    strictly smaller values.
    """
    content = as_content(content)
    return _count(content.entries, content.d - 1)


@lru_cache(maxsize=None)
def _count(entries: tuple[int, ...], width: int) -> int:
    states = {(0, 0): 1}
    for a in entries:
        nxt: dict[tuple[int, int], int] = {}
        for (n1, n2), ways in states.items():
            for x in range(a + 1):
                m1, m2 = n1 + x, n2 + a - x
                if m1 > width or m2 > n1:
                    continue
                nxt[(m1, m2)] = nxt.get((m1, m2), 0) + ways
        states = nxt
    return states.get((width, width), 0)


def catalan_count(d: int) -> int:
    """``(1/d) * C(2d-2, d-1)``, the count for the all-ones content."""
    return comb(2 * d - 2, d - 1) // d


def hook_count(a1: int, d: int) -> int:
    """``((a1+1)/d) * C(2d-2-a1, d-1)``, the count for content ``(a1, 1, ..., 1)``."""
    num = (a1 + 1) * comb(2 * d - 2 - a1, d - 1)
    if num % d:
        raise ArithmeticError(f"closed form not integral for a1={a1}, d={d}")
    return num // d


def kostka_closed_form(content) -> Optional[int]:
    """Closed-form count when the content matches a known pattern, else ``None``.

    The content is sorted (decreasing) first, since the count is invariant
    under permuting the multiplicities.
    """
    content = as_content(content)
    d = content.d
    canon = sorted(content.entries, reverse=True)
    if all(a == 1 for a in canon):
        return catalan_count(d)
    if all(a == 1 for a in canon[1:]):
        return hook_count(canon[0], d)
    if len(canon) == 2 and canon[0] == canon[1] == d - 1:
        return 1
    return None


def valid_contents(d: int) -> Iterator[ContentVector]:
    """Every valid content vector for the given ``d`` (compositions of 2d-2 with parts in [1, d-1])."""
    total = 2 * d - 2

    def rec(left: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if left == 0:
            if len(prefix) >= 2:
                yield tuple(prefix)
            return
        for a in range(1, min(d - 1, left) + 1):
            prefix.append(a)
            yield from rec(left - a, prefix)
            prefix.pop()

    for entries in rec(total, []):
        yield ContentVector(entries)

