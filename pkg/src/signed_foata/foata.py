"""
Foata's second fundamental transformation on words, in its incremental
cut-and-rotate form.

Reading ``r = x_1 ... x_m`` left to right, the working word ``r'_i`` is cut
before ``x_{i+1}`` is appended: if the last letter of ``r'_i`` is
``<= x_{i+1}`` the cuts go after every letter ``<= x_{i+1}``, otherwise after
every letter ``> x_{i+1}``.  Each compartment then has its last letter moved
to its front.

>>> phi((2, 3, 5, 1, 4))
(2, 3, 1, 5, 4)
>>> rtl_phi((4, 1, 5, 3, 2))
(4, 5, 1, 3, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .statistics import des_set

__all__ = ["CompartmentSplit", "phi", "phi_trace", "rtl_phi", "maj", "format_trace"]


@dataclass(frozen=True)
class CompartmentSplit:
    """The working word ``r'_i`` cut into compartments, before rotation."""
    segments: tuple[tuple[int, ...], ...]

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for seg in self.segments for x in seg)

    def format(self) -> str:
        return " ".join(" ".join(map(str, seg)) + " |" for seg in self.segments)


def _split(word: list[int], x: int) -> list[list[int]]:
    if word[-1] <= x:
        cut = [y <= x for y in word]
    else:
        cut = [y > x for y in word]
    segments, seg = [], []
    for y, c in zip(word, cut):
        seg.append(y)
        if c:
            segments.append(seg)
            seg = []
    # the last letter always satisfies the active rule, so nothing is left over
    assert not seg
    return segments


def phi_trace(r: Sequence[int]) -> tuple[list[CompartmentSplit], tuple[int, ...]]:
    """
    Run the transformation and return the cut working words
    ``r'_1, ..., r'_{m-1}`` together with the result ``r'_m``.
    """
    r = tuple(r)
    if not r:
        return [], ()
    work = [r[0]]
    splits = []
    for x in r[1:]:
        segments = _split(work, x)
        splits.append(CompartmentSplit(tuple(map(tuple, segments))))
        work = [y for seg in segments for y in (seg[-1], *seg[:-1])]
        work.append(x)
    return splits, tuple(work)


def phi(r: Sequence[int]) -> tuple[int, ...]:
    return phi_trace(r)[1]


def rtl_phi(r: Sequence[int]) -> tuple[int, ...]:
    """``reverse . phi . reverse``."""
    return phi(tuple(r)[::-1])[::-1]


def maj(r: Sequence[int]) -> int:
    """Major index: sum of the descent positions."""
    return sum(des_set(r))


def format_trace(r: Sequence[int]) -> str:
    """
    One line per step, compartments closed by ``|``.

    >>> print(format_trace((2, 3, 5, 1, 4)))
    r'_1 = 2 |
    r'_2 = 2 | 3 |
    r'_3 = 2 | 3 | 5 |
    r'_4 = 2 | 3 | 5 1 |
    r'_5 = 2 3 1 5 4
    """
    splits, result = phi_trace(r)
    lines = [f"r'_{i} = {s.format()}" for i, s in enumerate(splits, start=1)]
    if result:
        lines.append(f"r'_{len(result)} = " + " ".join(map(str, result)))
    return "\n".join(lines)
