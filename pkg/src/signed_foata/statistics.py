"""
Permutation statistics on words, on B_n and on the even subgroups A_n, L_n.

Word statistics (``inv``, ``des_set``, ``des``) take any sequence of
integers, so they apply equally to letter words and to windows; letters are
compared in the ordinary integer order ``... < -2 < -1 < 1 < 2 < ...``.

For ``pi`` of rank ``n + 1`` in L_{n+1}:

* ``des_A_set(pi)`` is the set of ``1 <= i <= n - 1`` with
  ``ell_L(pi * a_i) <= ell_L(pi)``,
* ``rmaj(pi)`` is the sum of ``n - i`` over that set,
* ``nrmaj(pi)`` adds the sum of ``neg_of_inverse(pi)``.

>>> pi = SignedPermutation((5, -1, 2, -3, 4))
>>> sorted(des_A_set(pi)), rmaj(pi), nrmaj(pi)
([1, 2], 5, 9)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .perm import NotInGroupError, SignedPermutation, compose, generator_a

__all__ = [
    "StatisticsBundle", "inv", "des_set", "des", "neg_of_inverse", "del_B",
    "ell_B", "ell_A", "ell_L", "des_A_set", "des_A", "rmaj", "nrmaj",
    "statistics_bundle",
]


def inv(r: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``r[i] > r[j]``."""
    return sum(x > y for x, y in combinations(r, 2))


def des_set(r: Sequence[int]) -> frozenset[int]:
    """1-based positions ``i`` with ``r[i] > r[i+1]``."""
    r = tuple(r)
    return frozenset(i + 1 for i in range(len(r) - 1) if r[i] > r[i + 1])


def des(r: Sequence[int]) -> int:
    return len(des_set(r))


def neg_of_inverse(pi: SignedPermutation) -> frozenset[int]:
    """``{-pi(i) : pi(i) < 0}``, i.e. Neg of the inverse, read off the window."""
    return frozenset(-x for x in pi.window if x < 0)


def del_B(sigma: Sequence[int]) -> int:
    """Number of left-to-right minima at positions 2, 3, ..., n."""
    count = 0
    it = iter(sigma)
    low = next(it, None)
    for x in it:
        if x < low:
            count += 1
            low = x
    return count


def ell_B(sigma: SignedPermutation) -> int:
    return inv(sigma.window) + sum(neg_of_inverse(sigma))


def ell_L(sigma: SignedPermutation) -> int:
    """``ell_B(sigma) - del_B(sigma)``; defined on all of B_n."""
    w = sigma.window
    return inv(w) - del_B(w) + sum(-x for x in w if x < 0)


def ell_A(v: SignedPermutation) -> int:
    """``inv(v) - del_B(v)`` for unsigned even ``v``."""
    _require_alternating(v)
    return inv(v.window) - del_B(v.window)


@lru_cache(maxsize=None)
def _a_generators(rank: int) -> tuple[SignedPermutation, ...]:
    return tuple(generator_a(i, rank) for i in range(1, rank - 1))


def des_A_set(pi: SignedPermutation) -> frozenset[int]:
    _require_L(pi)
    base = ell_L(pi)
    return frozenset(
        i for i, a in enumerate(_a_generators(pi.n), start=1)
        if ell_L(compose(pi, a)) <= base
    )


def des_A(pi: SignedPermutation) -> int:
    return len(des_A_set(pi))


def rmaj(pi: SignedPermutation) -> int:
    n = pi.n - 1
    return sum(n - i for i in des_A_set(pi))


def nrmaj(pi: SignedPermutation) -> int:
    return rmaj(pi) + sum(neg_of_inverse(pi))


def _require_L(pi: SignedPermutation) -> None:
    if not pi.is_even:
        raise NotInGroupError(f"{pi} is odd, so it is not in L_{pi.n}")


def _require_alternating(v: SignedPermutation) -> None:
    if not v.is_unsigned:
        raise NotInGroupError(f"{v} has negative entries, so it is not in A_{v.n}")
    _require_L(v)


@dataclass(frozen=True)
class StatisticsBundle:
    """
    Every statistic of one signed permutation.

    The L-only fields (``des_A_set``, ``des_A``, ``rmaj``, ``nrmaj``) are
    ``None`` when the permutation is odd.
    """
    window: tuple[int, ...]
    inv: int
    des_set: tuple[int, ...]
    des: int
    neg_of_inverse: tuple[int, ...]
    ell_B: int
    del_B: int
    ell_L: int
    des_A_set: tuple[int, ...] | None
    des_A: int | None
    rmaj: int | None
    nrmaj: int | None

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("window", "des_set", "neg_of_inverse", "des_A_set"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d


def statistics_bundle(pi: SignedPermutation) -> StatisticsBundle:
    w = pi.window
    even = pi.is_even
    dA = tuple(sorted(des_A_set(pi))) if even else None
    return StatisticsBundle(
        window=w,
        inv=inv(w),
        des_set=tuple(sorted(des_set(w))),
        des=des(w),
        neg_of_inverse=tuple(sorted(neg_of_inverse(pi))),
        ell_B=ell_B(pi),
        del_B=del_B(w),
        ell_L=ell_L(pi),
        des_A_set=dA,
        des_A=len(dA) if even else None,
        rmaj=rmaj(pi) if even else None,
        nrmaj=nrmaj(pi) if even else None,
    )
