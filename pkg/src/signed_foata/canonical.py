"""
Canonical presentations in S_n and A_{n+1}, the covering map ``f`` and its
local inverses ``g_u``.

Every ``w`` in S_n is uniquely ``w_1 w_2 ... w_{n-1}`` with ``w_j`` taken
from ``R^S_j = {1, s_j, s_j s_{j-1}, ..., s_j ... s_1}``.  Every ``v`` in
A_{n+1} is uniquely ``v_1 ... v_{n-1}`` with ``v_j`` taken from
``R^A_j = {1, a_j, a_j a_{j-1}, ..., a_j ... a_1, a_j ... a_2 a_1^-1}``,
where ``a_i = s_1 s_{i+1}``.  The factors at level ``j`` live in S_{j+1}
(resp. A_{j+2}) and are embedded in the ambient rank by fixing the larger
letters.

Factorization peels levels from the top: the factors of ``R_j`` send the
largest letter to pairwise distinct positions, so the position of that
letter in the window picks the top factor, which is then divided out on
the right.

>>> a_factorize(SignedPermutation((5, 2, 1, 6, 4, 3))).format()
'(1)(a_2)(a_3 a_2 a_1^-1)(a_4 a_3)'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .perm import (
    NotInGroupError, SignedPermutation, compose, generator_a, generator_s,
    identity, inverse,
)

__all__ = [
    "SFactor", "AFactor", "SCanonicalWord", "ACanonicalWord",
    "s_factors", "a_factors", "s_factorize", "a_factorize", "evaluate",
    "covering_f", "lift_g", "parse_canonical",
]


@dataclass(frozen=True)
class SFactor:
    """``s_j s_{j-1} ... s_ell``; ``ell == j + 1`` is the identity factor."""
    j: int
    ell: int

    def __post_init__(self):
        if not (self.j >= 1 and 1 <= self.ell <= self.j + 1):
            raise ValueError(f"no factor s_{self.j}..s_{self.ell} at level {self.j}")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(range(self.j, self.ell - 1, -1))

    def __len__(self):
        return self.j + 1 - self.ell

    def format(self) -> str:
        if not len(self):
            return "(1)"
        return "(" + " ".join(f"s_{i}" for i in self.letters) + ")"


@dataclass(frozen=True)
class AFactor:
    """
    ``a_j a_{j-1} ... a_ell``, or ``a_j ... a_2 a_1^-1`` when ``inverted``.

    ``ell == j + 1`` is the identity factor; ``inverted`` requires
    ``ell == 1``.
    """
    j: int
    ell: int
    inverted: bool = False

    def __post_init__(self):
        if not (self.j >= 1 and 1 <= self.ell <= self.j + 1):
            raise ValueError(f"no factor a_{self.j}..a_{self.ell} at level {self.j}")
        if self.inverted and self.ell != 1:
            raise ValueError("only a factor ending in a_1 can end in a_1^-1")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(range(self.j, self.ell - 1, -1))

    def __len__(self):
        return self.j + 1 - self.ell

    def format(self) -> str:
        if not len(self):
            return "(1)"
        names = [f"a_{i}" for i in self.letters]
        if self.inverted:
            names[-1] += "^-1"
        return "(" + " ".join(names) + ")"


class _CanonicalWord:
    factors: tuple
    rank: int

    def __len__(self):
        """Total letter count."""
        return sum(len(f) for f in self.factors)

    def format(self) -> str:
        return "".join(f.format() for f in self.factors)

    def __str__(self):
        return self.format()

    def _check(self, factor_type, levels):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) != levels:
            raise ValueError(
                f"rank {self.rank} needs {levels} factor levels, got {len(self.factors)}"
            )
        for j, f in enumerate(self.factors, start=1):
            if not isinstance(f, factor_type) or f.j != j:
                raise ValueError(f"factor {f!r} does not belong at level {j}")


@dataclass(frozen=True)
class SCanonicalWord(_CanonicalWord):
    """Canonical presentation of an element of S_rank (``rank - 1`` levels)."""
    factors: tuple[SFactor, ...]
    rank: int

    def __post_init__(self):
        self._check(SFactor, max(self.rank - 1, 0))


@dataclass(frozen=True)
class ACanonicalWord(_CanonicalWord):
    """Canonical presentation of an element of A_rank (``rank - 2`` levels)."""
    factors: tuple[AFactor, ...]
    rank: int

    def __post_init__(self):
        self._check(AFactor, max(self.rank - 2, 0))


# --- factor tables ---------------------------------------------------------

def _product(gens, rank):
    out = identity(rank)
    for g in gens:
        out = compose(out, g)
    return out


@lru_cache(maxsize=None)
def _s_factor_window(f: SFactor) -> tuple[int, ...]:
    rank = f.j + 1
    return _product((generator_s(i, rank) for i in f.letters), rank).window


@lru_cache(maxsize=None)
def _a_factor_window(f: AFactor) -> tuple[int, ...]:
    rank = f.j + 2
    gens = [generator_a(i, rank, inverted=(i == 1 and f.inverted)) for i in f.letters]
    return _product(gens, rank).window


def s_factors(j: int) -> tuple[SFactor, ...]:
    """The elements of R^S_j, shortest first."""
    return tuple(SFactor(j, ell) for ell in range(j + 1, 0, -1))


def a_factors(j: int) -> tuple[AFactor, ...]:
    """The elements of R^A_j, shortest first, ``a_1^-1`` variant last."""
    return tuple(AFactor(j, ell) for ell in range(j + 1, 0, -1)) + (AFactor(j, 1, True),)


@lru_cache(maxsize=None)
def _peel_table(kind: str, j: int) -> dict[int, tuple[object, tuple[int, ...]]]:
    """
    Map 1-based position of the top letter -> (factor, window of its inverse),
    for the factors at level ``j``.
    """
    if kind == "S":
        factors, window_of, top = s_factors(j), _s_factor_window, j + 1
    else:
        factors, window_of, top = a_factors(j), _a_factor_window, j + 2
    table = {}
    for f in factors:
        w = window_of(f)
        pos = w.index(top) + 1
        if pos in table:
            raise AssertionError(f"level {j} factors collide at position {pos}")
        table[pos] = (f, inverse(SignedPermutation._trusted(w)).window)
    return table


def _peel(kind: str, window: tuple[int, ...], levels: int) -> list:
    cur = list(window)
    factors = []
    for j in range(levels, 0, -1):
        top = len(cur)
        f, finv = _peel_table(kind, j)[cur.index(top) + 1]
        cur = [cur[k - 1] for k in finv]
        assert cur[-1] == top
        cur.pop()
        factors.append(f)
    factors.reverse()
    return factors


def s_factorize(w: SignedPermutation) -> SCanonicalWord:
    """
    >>> s_factorize(SignedPermutation((4, 1, 5, 3, 2))).format()
    '(1)(s_2)(s_3 s_2 s_1)(s_4 s_3)'
    """
    if not w.is_unsigned:
        raise NotInGroupError(f"{w} is signed; S-canonical presentations need S_n")
    return SCanonicalWord(tuple(_peel("S", w.window, max(w.n - 1, 0))), w.n)


def a_factorize(v: SignedPermutation) -> ACanonicalWord:
    if not v.is_unsigned:
        raise NotInGroupError(f"{v} is signed; A-canonical presentations need A_n")
    if not v.is_even:
        raise NotInGroupError(f"{v} is odd; A-canonical presentations need A_n")
    return ACanonicalWord(tuple(_peel("A", v.window, max(v.n - 2, 0))), v.n)


def evaluate(word: SCanonicalWord | ACanonicalWord) -> SignedPermutation:
    """The permutation ``w_1 w_2 ... w_k`` of rank ``word.rank``."""
    rank = word.rank
    window_of = _s_factor_window if isinstance(word, SCanonicalWord) else _a_factor_window
    cur = list(range(1, rank + 1))
    for f in word.factors:
        w = window_of(f)
        # right multiplication by the factor only touches the first len(w) slots
        cur[: len(w)] = [cur[k - 1] for k in w]
    return SignedPermutation._trusted(tuple(cur))


def covering_f(v: ACanonicalWord) -> SCanonicalWord:
    """Replace every ``a`` by ``s`` and drop exponents; A_{n+1} -> S_n."""
    return SCanonicalWord(tuple(SFactor(f.j, f.ell) for f in v.factors), v.rank - 1)


def lift_g(u: ACanonicalWord, w: SCanonicalWord) -> ACanonicalWord:
    """
    The local inverse ``g_u`` of ``covering_f``: factors ``s_j ... s_ell`` with
    ``ell >= 2`` become ``a_j ... a_ell``, and a factor ``s_j ... s_1`` is
    replaced by ``u``'s own level-``j`` factor, whatever that is.
    """
    if len(u.factors) != len(w.factors):
        raise ValueError(
            f"level mismatch: u has {len(u.factors)} levels, w has {len(w.factors)}"
        )
    lifted = tuple(
        u.factors[f.j - 1] if f.ell == 1 else AFactor(f.j, f.ell)
        for f in w.factors
    )
    return ACanonicalWord(lifted, w.rank + 1)


_GROUP_RE = re.compile(r"\(([^()]*)\)")
_LETTER_RE = re.compile(r"([sa])_\{?(\d+)\}?(\^\{?-1\}?)?")


def parse_canonical(text: str) -> SCanonicalWord | ACanonicalWord:
    """
    Parse the printed form, e.g. ``(1)(a_2)(a_3 a_2 a_1^-1)(a_4 a_3)``.

    Levels are positional: the k-th parenthesized group is level k.  An
    all-identity word is read as an S-word.
    """
    text = text.strip()
    groups = _GROUP_RE.findall(text)
    if _GROUP_RE.sub("", text).strip():
        raise ValueError(f"cannot parse {text!r} as a canonical word")
    kind = None
    parsed = []
    for j, body in enumerate(groups, start=1):
        body = body.strip()
        if body == "1":
            parsed.append((j, j + 1, False))
            continue
        tokens = body.split()
        letters = []
        inverted = False
        for pos, tok in enumerate(tokens):
            m = _LETTER_RE.fullmatch(tok)
            if not m:
                raise ValueError(f"bad letter {tok!r} in {text!r}")
            if kind is None:
                kind = m.group(1)
            elif kind != m.group(1):
                raise ValueError(f"mixed s and a letters in {text!r}")
            if m.group(3):
                if pos != len(tokens) - 1:
                    raise ValueError(f"an inverse may only end a factor: {text!r}")
                inverted = True
            letters.append(int(m.group(2)))
        if letters != list(range(j, j - len(letters), -1)):
            raise ValueError(f"factor ({body}) is not s/a_{j} s/a_{j-1} ... at level {j}")
        parsed.append((j, j + 1 - len(letters), inverted))
    if kind == "a":
        return ACanonicalWord(tuple(AFactor(*p) for p in parsed), len(parsed) + 2)
    if any(inv for _, _, inv in parsed):
        raise ValueError("s letters carry no exponents")
    return SCanonicalWord(tuple(SFactor(j, ell) for j, ell, _ in parsed), len(parsed) + 1)
