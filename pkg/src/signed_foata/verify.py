"""
Exhaustive verification of the equidistribution identities.

Groups are enumerated in a fixed order (unsigned permutations in
lexicographic order, each crossed with sign masks in binary order, bit ``k``
negating position ``k + 1``, keeping the members of the group), so reports
and first counterexamples are reproducible.  Generating polynomials use exact Python integers.

>>> str(product_formula_L(3, {1}))
'1 + 3q + 2q^2'
>>> check_equidistribution(3, {1, 2}).passed
True
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .bijections import psi, theta
from .perm import Group, SignedPermutation, parity
from .statistics import ell_A, ell_L, neg_of_inverse, nrmaj, rmaj

__all__ = [
    "DEFAULT_RANK_CAP", "QPolynomial", "VerificationReport", "STATISTICS",
    "enumerate_group", "group_order", "poly_over", "product_formula_L",
    "product_formula_A", "check_equidistribution", "check_all_subsets",
    "check_alternating", "check_theta", "check_psi", "subsets",
]

DEFAULT_RANK_CAP = 8


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in ``q`` with integer coefficients; index = exponent."""
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> QPolynomial:
        if not counts:
            return cls()
        c = [0] * (max(counts) + 1)
        for k, v in counts.items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            c[k] += v
        return cls(tuple(c))

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: QPolynomial) -> QPolynomial:
        m = max(len(self.coefficients), len(other.coefficients))
        return QPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(m)))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return QPolynomial(tuple(c))

    def __call__(self, q):
        out = 0
        for c in reversed(self.coefficients):
            out = out * q + c
        return out

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])


STATISTICS: dict[str, tuple[Callable[[SignedPermutation], int], frozenset[Group]]] = {
    "ell_L": (ell_L, frozenset(Group)),
    "nrmaj": (nrmaj, frozenset({Group.L, Group.A})),
    "rmaj": (rmaj, frozenset({Group.L, Group.A})),
    "ell_A": (ell_A, frozenset({Group.A})),
}


def group_order(label: Group | str, rank: int) -> int:
    from math import factorial

    label = Group(label)
    size = factorial(rank)
    if label in (Group.B, Group.L):
        size <<= rank
    if label is Group.L or (label is Group.A and rank >= 2):
        size //= 2
    return size


def _unsigned(label: Group, rank: int) -> Iterator[tuple[int, ...]]:
    # L draws from every unsigned permutation; its sign masks are filtered later
    even_only = label is Group.A
    for w in permutations(range(1, rank + 1)):
        if even_only and parity(SignedPermutation._trusted(w)):
            continue
        yield w


def _signed_versions(w: tuple[int, ...], even_only: bool = False) -> Iterator[tuple[int, ...]]:
    n = len(w)
    for mask in range(1 << n):
        s = tuple(-x if mask >> k & 1 else x for k, x in enumerate(w))
        if even_only and parity(SignedPermutation._trusted(s)):
            continue
        yield s


def _versions(label: Group, w: tuple[int, ...]):
    if label in (Group.B, Group.L):
        return _signed_versions(w, even_only=label is Group.L)
    return (w,)


def enumerate_group(
    label: Group | str, rank: int, cap: int = DEFAULT_RANK_CAP,
) -> Iterator[SignedPermutation]:
    """Every element of the group, once, in the fixed enumeration order."""
    label = Group(label)
    _check_rank(rank, cap)
    for w in _unsigned(label, rank):
        for s in _versions(label, w):
            yield SignedPermutation._trusted(s)


def _check_rank(rank: int, cap: int) -> None:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if rank > cap:
        raise ValueError(f"rank {rank} exceeds the configured cap {cap}")


def subsets(universe: Iterable[int]) -> list[frozenset[int]]:
    """All subsets, ordered by bitmask over the sorted universe."""
    items = sorted(universe)
    return [
        frozenset(x for k, x in enumerate(items) if mask >> k & 1)
        for mask in range(1 << len(items))
    ]


def _resolve_statistic(label: Group, statistic):
    if callable(statistic):
        return statistic
    try:
        fn, groups = STATISTICS[statistic]
    except KeyError:
        raise ValueError(f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}") from None
    if label not in groups:
        raise ValueError(f"{statistic} is not defined on {label.value}")
    return fn


def _check_restriction(label: Group, rank: int, restriction) -> frozenset[int] | None:
    if restriction is None:
        return None
    restriction = frozenset(restriction)
    if label is not Group.L:
        raise ValueError("a Neg(pi^-1) restriction only applies to L")
    if not restriction <= set(range(1, rank + 1)):
        raise ValueError(f"subset {sorted(restriction)} is not inside [1, {rank}]")
    return restriction


def _count_chunk(args) -> Counter:
    label, words, statistic, restriction = args
    label = Group(label)
    fn = _resolve_statistic(label, statistic)
    counts: Counter = Counter()
    for w in words:
        for s in _versions(label, w):
            if restriction is not None and not neg_of_inverse_window(s) <= restriction:
                continue
            counts[fn(SignedPermutation._trusted(s))] += 1
    return counts


def neg_of_inverse_window(w: Sequence[int]) -> frozenset[int]:
    return frozenset(-x for x in w if x < 0)


def poly_over(
    label: Group | str,
    rank: int,
    statistic: str | Callable[[SignedPermutation], int],
    restriction: Iterable[int] | None = None,
    *,
    workers: int = 1,
    cap: int = DEFAULT_RANK_CAP,
) -> QPolynomial:
    """
    Generating polynomial of ``statistic`` over the group, optionally
    restricted to elements with ``neg_of_inverse(pi) <= restriction``.

    With ``workers > 1`` the unsigned permutations are split into contiguous
    chunks counted in separate processes; the result does not depend on the
    split.  Callable statistics must then be picklable.
    """
    label = Group(label)
    _check_rank(rank, cap)
    _resolve_statistic(label, statistic)
    restriction = _check_restriction(label, rank, restriction)
    words = list(_unsigned(label, rank))
    if workers <= 1 or len(words) < 2:
        counts = _count_chunk((label.value, words, statistic, restriction))
    else:
        size = -(-len(words) // workers)
        chunks = [words[k:k + size] for k in range(0, len(words), size)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(
                _count_chunk, [(label.value, c, statistic, restriction) for c in chunks]
            ):
                counts.update(part)
    return QPolynomial.from_counts(counts)


def _a_factor_product(n: int) -> QPolynomial:
    # prod_{i=1}^{n-1} (1 + q + ... + q^{i-1} + 2 q^i)
    out = QPolynomial.one()
    for i in range(1, n):
        out = out * QPolynomial((1,) * i + (2,))
    return out


def product_formula_L(rank: int, subset: Iterable[int]) -> QPolynomial:
    """``prod_{i in B}(1 + q^i)`` times the alternating product, for L_rank."""
    subset = frozenset(subset)
    if rank < 2:
        raise ValueError("the product formula needs rank >= 2")
    if not subset <= set(range(1, rank + 1)):
        raise ValueError(f"subset {sorted(subset)} is not inside [1, {rank}]")
    out = _a_factor_product(rank - 1)
    for i in sorted(subset):
        out = out * QPolynomial((1,) + (0,) * (i - 1) + (1,))
    return out


def product_formula_A(rank: int) -> QPolynomial:
    """``prod_{i=1}^{n-1}(1 + q + ... + q^{i-1} + 2q^i)`` for A_{n+1}, n + 1 = rank."""
    if rank < 2:
        raise ValueError("the product formula needs rank >= 2")
    return _a_factor_product(rank - 1)


@dataclass
class VerificationReport:
    identity: str
    rank: int
    lhs: QPolynomial
    rhs: QPolynomial
    passed: bool
    elements: int
    elapsed: float
    subset: frozenset[int] | None = None
    counterexample: SignedPermutation | None = None
    extra: dict[str, QPolynomial] = field(default_factory=dict)
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "rank": self.rank,
            "subset": None if self.subset is None else sorted(self.subset),
            "lhs": self.lhs.to_list(),
            "rhs": self.rhs.to_list(),
            **{k: v.to_list() for k, v in self.extra.items()},
            "passed": self.passed,
            "counterexample": None if self.counterexample is None else list(self.counterexample.window),
            "elements": self.elements,
            "elapsed": self.elapsed,
            "message": self.message,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f"rank {self.rank}"
        if self.subset is not None:
            where += " B={" + ",".join(map(str, sorted(self.subset))) + "}"
        line = f"{status} {self.identity} {where}: {self.elements} elements, lhs = {self.lhs}"
        if not self.passed:
            line += f", rhs = {self.rhs}"
            if self.counterexample is not None:
                line += f", counterexample {self.counterexample}"
            if self.message:
                line += f" ({self.message})"
        return line


def _first_difference(polys: Sequence[QPolynomial]) -> int | None:
    top = max(len(p.coefficients) for p in polys)
    for k in range(top):
        if len({p.coefficient(k) for p in polys}) > 1:
            return k
    return None


def _witness(elements, stats, k):
    for x in elements:
        if any(fn(x) == k for fn in stats):
            return x
    return None


def _equidist_report(rank, subset, lhs, rhs, lhs_statistic, rhs_statistic,
                     start, cap) -> VerificationReport:
    product = product_formula_L(rank, subset)
    k = _first_difference([lhs, rhs, product])
    counterexample = None
    message = ""
    if k is not None:
        message = f"coefficients of q^{k} differ"
        members = (
            p for p in enumerate_group("L", rank, cap)
            if neg_of_inverse(p) <= subset
        )
        stats = [_resolve_statistic(Group.L, s) for s in (lhs_statistic, rhs_statistic)]
        counterexample = _witness(members, stats, k)
    return VerificationReport(
        identity="equidist", rank=rank, subset=subset, lhs=lhs, rhs=rhs,
        extra={"product": product}, passed=k is None, elements=lhs(1),
        elapsed=time.perf_counter() - start, counterexample=counterexample,
        message=message,
    )


def check_equidistribution(
    rank: int,
    subset: Iterable[int] | None = None,
    *,
    lhs_statistic: str | Callable = "nrmaj",
    rhs_statistic: str | Callable = "ell_L",
    workers: int = 1,
    cap: int = DEFAULT_RANK_CAP,
) -> VerificationReport:
    """
    Compare the ``nrmaj`` and ``ell_L`` polynomials over
    ``{pi in L_rank : neg_of_inverse(pi) <= subset}`` with the product formula.
    ``subset=None`` means the whole group.
    """
    start = time.perf_counter()
    subset = frozenset(range(1, rank + 1)) if subset is None else frozenset(subset)
    lhs = poly_over("L", rank, lhs_statistic, subset, workers=workers, cap=cap)
    rhs = poly_over("L", rank, rhs_statistic, subset, workers=workers, cap=cap)
    return _equidist_report(rank, subset, lhs, rhs, lhs_statistic, rhs_statistic, start, cap)


def check_all_subsets(
    rank: int,
    *,
    lhs_statistic: str | Callable = "nrmaj",
    rhs_statistic: str | Callable = "ell_L",
    cap: int = DEFAULT_RANK_CAP,
) -> list[VerificationReport]:
    """
    ``check_equidistribution`` for every ``B`` in ``[1, rank]``, enumerating
    L_rank once: both statistics are tabulated by ``neg_of_inverse`` and each
    restricted polynomial is summed from the table.
    """
    start = time.perf_counter()
    _check_rank(rank, cap)
    fl = _resolve_statistic(Group.L, lhs_statistic)
    fr = _resolve_statistic(Group.L, rhs_statistic)
    table: dict[frozenset[int], tuple[Counter, Counter]] = {}
    for p in enumerate_group("L", rank, cap):
        cl, cr = table.setdefault(neg_of_inverse(p), (Counter(), Counter()))
        cl[fl(p)] += 1
        cr[fr(p)] += 1
    reports = []
    # each report's elapsed time counts from the shared enumeration
    for b in subsets(range(1, rank + 1)):
        lhs, rhs = Counter(), Counter()
        for neg, (cl, cr) in table.items():
            if neg <= b:
                lhs.update(cl)
                rhs.update(cr)
        reports.append(_equidist_report(
            rank, b, QPolynomial.from_counts(lhs), QPolynomial.from_counts(rhs),
            lhs_statistic, rhs_statistic, start, cap,
        ))
    return reports


def check_alternating(rank: int, *, cap: int = DEFAULT_RANK_CAP) -> VerificationReport:
    """Distributions of ``ell_A`` and ``rmaj`` over A_rank against the product."""
    start = time.perf_counter()
    lhs = poly_over("A", rank, "ell_A", cap=cap)
    rhs = poly_over("A", rank, "rmaj", cap=cap)
    product = product_formula_A(rank)
    k = _first_difference([lhs, rhs, product])
    counterexample = None
    if k is not None:
        counterexample = _witness(enumerate_group("A", rank, cap), [ell_A, rmaj], k)
    return VerificationReport(
        identity="altdist", rank=rank, lhs=lhs, rhs=rhs, extra={"product": product},
        passed=k is None, elements=lhs(1), elapsed=time.perf_counter() - start,
        counterexample=counterexample,
        message="" if k is None else f"coefficients of q^{k} differ",
    )


def _check_bijection(identity, label, rank, fn, source_stat, target_stat, cap,
                     preserve=None) -> VerificationReport:
    start = time.perf_counter()
    seen = set()
    src, dst = Counter(), Counter()
    counterexample = None
    message = ""
    count = 0
    for x in enumerate_group(label, rank, cap):
        count += 1
        y = fn(x)
        a, b = source_stat(x), target_stat(y)
        src[a] += 1
        dst[b] += 1
        if counterexample is None:
            if y in seen:
                counterexample, message = x, f"image {y} hit twice"
            elif not (y.n == x.n and (y.is_unsigned or label is not Group.A) and y.is_even):
                counterexample, message = x, f"image {y} outside the group"
            elif a != b:
                counterexample, message = x, f"statistic {a} became {b}"
            elif preserve is not None and preserve(x) != preserve(y):
                counterexample, message = x, f"Neg of the inverse changed for image {y}"
        seen.add(y)
    passed = counterexample is None and len(seen) == count == group_order(label, rank)
    return VerificationReport(
        identity=identity, rank=rank, lhs=QPolynomial.from_counts(src),
        rhs=QPolynomial.from_counts(dst), passed=passed, elements=count,
        elapsed=time.perf_counter() - start, counterexample=counterexample,
        message=message,
    )


def check_theta(rank: int, *, cap: int = DEFAULT_RANK_CAP) -> VerificationReport:
    """Bijectivity of ``theta`` on L_rank, ``ell_L(theta(pi)) == nrmaj(pi)``, Neg preserved."""
    return _check_bijection("theta", Group.L, rank, theta, nrmaj, ell_L, cap,
                            preserve=neg_of_inverse)


def check_psi(rank: int, *, cap: int = DEFAULT_RANK_CAP) -> VerificationReport:
    """Bijectivity of ``psi`` on A_rank and ``ell_A(psi(v)) == rmaj(v)``."""
    return _check_bijection("psi", Group.A, rank, psi, rmaj, ell_A, cap)
