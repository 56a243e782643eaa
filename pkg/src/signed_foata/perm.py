"""
Signed permutations in window notation.

A signed permutation of rank ``n`` is stored as the tuple
``(sigma(1), ..., sigma(n))``; the values on negative letters follow from
``sigma(-i) == -sigma(i)``.  Unsigned permutations are the all-positive
special case, so one class covers S_n, A_n, B_n and L_n = C_2 wr A_n.
Here L_n is the index-2 subgroup of B_n of elements with even Coxeter
length ``ell_B``; see ``parity``.

Products are read right to left: ``(sigma * tau)(i) == sigma(tau(i))``.

>>> sigma = SignedPermutation((-4, -6, -1, 2, 3, 5))
>>> u = SignedPermutation((5, 2, 1, 6, 4, 3))
>>> sigma * u
SignedPermutation(window=(3, -6, -4, 5, 2, -1))
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Group", "NotInGroupError", "SignedPermutation",
    "identity", "compose", "inverse", "generator_s", "generator_a",
    "parity", "sort_window", "reverse", "parse_window", "format_window",
    "is_member",
]


class Group(str, Enum):
    """The four groups handled by the package."""
    S = "S"
    A = "A"
    B = "B"
    L = "L"


class NotInGroupError(ValueError):
    """Raised when an argument is outside the group an operation is defined on."""


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ValueError(
                f"{list(window)} is not a signed permutation window: absolute "
                f"values must be 1..{len(window)}"
            )

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> SignedPermutation:
        # skips validation; callers guarantee a valid window
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    def __call__(self, i: int) -> int:
        """Image of the letter ``i`` (which may be negative)."""
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"letter {i} out of range for rank {self.n}")
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __str__(self):
        return format_window(self)

    def inverse(self) -> SignedPermutation:
        return inverse(self)

    @property
    def is_unsigned(self) -> bool:
        return all(x > 0 for x in self.window)

    @property
    def is_even(self) -> bool:
        return parity(self) == 0


def identity(n: int) -> SignedPermutation:
    return SignedPermutation._trusted(tuple(range(1, n + 1)))


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """
    Return ``sigma * tau``, the map ``i -> sigma(tau(i))``.

    >>> s1, s2 = generator_s(1, 3), generator_s(2, 3)
    >>> compose(s2, s1).window
    (3, 1, 2)
    """
    if sigma.n != tau.n:
        raise ValueError(f"rank mismatch: {sigma.n} vs {tau.n}")
    w = sigma.window
    return SignedPermutation._trusted(
        tuple(w[t - 1] if t > 0 else -w[-t - 1] for t in tau.window)
    )


def inverse(sigma: SignedPermutation) -> SignedPermutation:
    """
    >>> inverse(SignedPermutation((2, 3, 1))).window
    (3, 1, 2)
    >>> inverse(SignedPermutation((-2, 1))).window
    (2, -1)
    """
    out = [0] * sigma.n
    for i, x in enumerate(sigma.window, start=1):
        # sigma(i) = x  =>  sigma^{-1}(|x|) = sign(x) * i
        out[abs(x) - 1] = i if x > 0 else -i
    return SignedPermutation._trusted(tuple(out))


def generator_s(i: int, n: int) -> SignedPermutation:
    """
    The Coxeter generator ``s_i`` of B_n: the transposition ``(i, i+1)`` for
    ``1 <= i <= n-1``, or the sign change ``[-1, 2, ..., n]`` for ``i == 0``.
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a generator of rank {n} (need 0 <= i <= {n - 1})")
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPermutation._trusted(tuple(w))


def generator_a(i: int, n_plus_1: int, inverted: bool = False) -> SignedPermutation:
    """
    The generator ``a_i = s_1 s_{i+1}`` of the alternating group of rank
    ``n_plus_1``, with ``1 <= i <= n_plus_1 - 2``.  ``inverted`` gives
    ``a_1^{-1}`` and is only allowed for ``i == 1``.

    >>> generator_a(1, 3).window
    (2, 3, 1)
    >>> generator_a(1, 3, inverted=True).window
    (3, 1, 2)
    """
    if not 1 <= i <= n_plus_1 - 2:
        raise ValueError(
            f"a_{i} is not a generator of rank {n_plus_1} (need 1 <= i <= {n_plus_1 - 2})"
        )
    if inverted and i != 1:
        raise ValueError("only a_1 has an inverted form (a_i is an involution for i > 1)")
    a = compose(generator_s(1, n_plus_1), generator_s(i + 1, n_plus_1))
    return inverse(a) if inverted else a


def parity(sigma: SignedPermutation) -> int:
    """
    Coxeter parity in B_n: ``(inv(window) + sum of negated letters) mod 2``.

    This is ``ell_B(sigma) mod 2``, a group character, and agrees with the
    usual sign on unsigned permutations.  L_n is its kernel.

    >>> parity(SignedPermutation((2, 1, 3)))
    1
    >>> parity(SignedPermutation((3, -6, -4, 5, 2, -1)))
    0
    """
    w = sigma.window
    inversions = sum(x > y for x, y in combinations(w, 2))
    negated = sum(-x for x in w if x < 0)
    return (inversions + negated) % 2


def is_member(sigma: SignedPermutation, group: Group | str) -> bool:
    group = Group(group)
    if group is Group.B:
        return True
    if group is Group.L:
        return sigma.is_even
    if group is Group.S:
        return sigma.is_unsigned
    return sigma.is_unsigned and sigma.is_even


def sort_window(sigma: SignedPermutation) -> SignedPermutation:
    """The window rearranged in increasing integer order."""
    return SignedPermutation._trusted(tuple(sorted(sigma.window)))


def reverse(r: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(tuple(r)))


def parse_window(text: str) -> SignedPermutation:
    """
    Parse ``"3,-6,-4,5,2,-1"`` (brackets and spaces optional).

    >>> parse_window("[3, -6, -4, 5, 2, -1]").window
    (3, -6, -4, 5, 2, -1)
    """
    return SignedPermutation(parse_word(text))


def parse_word(text: str) -> tuple[int, ...]:
    body = text.strip().strip("[]()").strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as comma-separated integers") from None


def format_window(sigma: SignedPermutation | Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in sigma) + "]"
