"""
The bijection ``psi`` of A_{n+1} and the bijection ``theta`` of L_{n+1}.

``psi(v)`` factors ``v`` canonically, pushes the word down to S_n with the
covering map, applies the right-to-left Foata transformation there, and
lifts the result back using ``v``'s own factors::

    psi(v) = g_v(rtl_phi(f(v)))

``theta`` splits ``pi`` in L_{n+1} as ``pi = s(pi) * u`` with ``s(pi)``
descent-free and ``u`` in A_{n+1}, and applies ``psi`` to the even part::

    theta(pi) = s(pi) * psi(u)

It carries ``nrmaj`` to ``ell_L`` and preserves ``neg_of_inverse``.

>>> str(theta(SignedPermutation((3, -6, -4, 5, 2, -1))))
'[-6,3,5,-4,2,-1]'
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import (
    ACanonicalWord, SCanonicalWord, a_factorize, covering_f, evaluate,
    lift_g, s_factorize,
)
from .foata import rtl_phi
from .perm import (
    NotInGroupError, SignedPermutation, compose, inverse, sort_window,
)
from .statistics import del_B, des_A, des_A_set, inv, neg_of_inverse

__all__ = [
    "Decomposition", "PsiStages", "ThetaStages", "LemmaViolation",
    "s_of", "decompose", "psi", "psi_stages", "theta", "theta_stages",
    "psi_inverse_table", "theta_inverse_table",
]


class LemmaViolation(AssertionError):
    """A checked decomposition failed one of its guaranteed properties."""


@dataclass(frozen=True)
class Decomposition:
    """``pi = sigma * u`` with ``sigma`` descent-free and ``u`` in A_{n+1}."""
    pi: SignedPermutation
    sigma: SignedPermutation
    u: SignedPermutation

    def check(self) -> None:
        """Raise ``LemmaViolation`` unless every decomposition property holds."""
        pi, sigma, u = self.pi, self.sigma, self.u
        problems = []
        if compose(sigma, u) != pi:
            problems.append("sigma * u != pi")
        if not (u.is_unsigned and u.is_even):
            problems.append("u is not in A_n")
        elif des_A_set(u) != des_A_set(pi):
            problems.append("Des_A(u) != Des_A(pi)")
        if des_A(sigma) != 0:
            problems.append("des_A(sigma) != 0")
        if inv(u.window) - del_B(u.window) != inv(pi.window) - del_B(pi.window):
            problems.append("inv - del_B differs between u and pi")
        if neg_of_inverse(sigma) != neg_of_inverse(pi):
            problems.append("Neg(sigma^-1) != Neg(pi^-1)")
        if problems:
            raise LemmaViolation(f"decomposition of {pi}: " + "; ".join(problems))


def _require_L(pi: SignedPermutation) -> None:
    if not pi.is_even:
        raise NotInGroupError(f"{pi} is odd, so it is not in L_{pi.n}")


def s_of(pi: SignedPermutation) -> SignedPermutation:
    """
    The sorted window, with its first two entries swapped when the sum of
    ``neg_of_inverse(pi)`` is odd.

    >>> str(s_of(SignedPermutation((3, -6, -4, 5, 2, -1))))
    '[-4,-6,-1,2,3,5]'
    """
    _require_L(pi)
    w = list(sort_window(pi).window)
    # an odd negative sum forces rank >= 2, since [-1] is not in L_1
    if sum(neg_of_inverse(pi)) % 2:
        w[0], w[1] = w[1], w[0]
    return SignedPermutation._trusted(tuple(w))


def decompose(pi: SignedPermutation, check: bool = False) -> Decomposition:
    sigma = s_of(pi)
    d = Decomposition(pi, sigma, compose(inverse(sigma), pi))
    if check:
        d.check()
    return d


@dataclass(frozen=True)
class PsiStages:
    """Every intermediate value of ``psi(v)``."""
    v: SignedPermutation
    v_word: ACanonicalWord
    f_word: SCanonicalWord
    f_perm: SignedPermutation
    reversed_f: tuple[int, ...]
    phi_of_reversed: tuple[int, ...]
    rtl_phi: SignedPermutation
    rtl_phi_word: SCanonicalWord
    lifted_word: ACanonicalWord
    result: SignedPermutation


def psi_stages(v: SignedPermutation) -> PsiStages:
    v_word = a_factorize(v)
    f_word = covering_f(v_word)
    f_perm = evaluate(f_word)
    rev = f_perm.window[::-1]
    w = SignedPermutation._trusted(rtl_phi(f_perm.window))
    w_word = s_factorize(w)
    lifted = lift_g(v_word, w_word)
    return PsiStages(
        v=v, v_word=v_word, f_word=f_word, f_perm=f_perm, reversed_f=rev,
        phi_of_reversed=w.window[::-1], rtl_phi=w, rtl_phi_word=w_word,
        lifted_word=lifted, result=evaluate(lifted),
    )


def psi(v: SignedPermutation) -> SignedPermutation:
    """``g_v(rtl_phi(f(v)))`` for ``v`` unsigned and even."""
    return psi_stages(v).result


@dataclass(frozen=True)
class ThetaStages:
    decomposition: Decomposition
    psi: PsiStages
    result: SignedPermutation


def theta_stages(pi: SignedPermutation, check: bool = False) -> ThetaStages:
    d = decompose(pi, check=check)
    p = psi_stages(d.u)
    result = compose(d.sigma, p.result)
    if check and neg_of_inverse(result) != neg_of_inverse(pi):
        raise LemmaViolation(f"theta({pi}) = {result} changed Neg of the inverse")
    return ThetaStages(d, p, result)


def theta(pi: SignedPermutation, check: bool = False) -> SignedPermutation:
    """
    ``s(pi) * psi(s(pi)^-1 * pi)``.

    With ``check=True`` the decomposition properties are verified on the way
    and a ``LemmaViolation`` is raised if any fails.
    """
    return theta_stages(pi, check=check).result


def _inverse_table(fn, elements) -> dict[SignedPermutation, SignedPermutation]:
    table = {}
    for x in elements:
        y = fn(x)
        if y in table:
            raise ValueError(f"not injective: {table[y]} and {x} both map to {y}")
        table[y] = x
    return table


def psi_inverse_table(rank: int) -> dict[SignedPermutation, SignedPermutation]:
    """``{psi(v): v}`` over A_rank, built by forward enumeration."""
    from .verify import enumerate_group

    return _inverse_table(psi, enumerate_group("A", rank))


def theta_inverse_table(rank: int) -> dict[SignedPermutation, SignedPermutation]:
    """``{theta(pi): pi}`` over L_rank, built by forward enumeration."""
    from .verify import enumerate_group

    return _inverse_table(theta, enumerate_group("L", rank))
