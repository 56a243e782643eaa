# coding: utf-8

# # Following one permutation through theta
#
# theta carries the statistic nrmaj to the length function ell_L on the
# even-length signed permutations.  Here we push a single element of L_6
# through every stage and print what comes out.

from signed_foata import SignedPermutation, ell_L, statistics_bundle, theta_stages
from signed_foata.foata import format_trace

pi = SignedPermutation((3, -6, -4, 5, 2, -1))
b = statistics_bundle(pi)
print("pi            =", pi)
print("Des_A(pi)     =", sorted(b.des_A_set))
print("rmaj, nrmaj   =", b.rmaj, b.nrmaj)


# ## Splitting off the signs
#
# pi = s(pi) * u where s(pi) has no A-descents and u is unsigned and even.

t = theta_stages(pi, check=True)
d = t.decomposition
print("s(pi)         =", d.sigma)
print("u             =", d.u)


# ## psi on the even part
#
# Factor u canonically, forget the a's down to s's, run Foata from the right,
# then lift back with u's own factors.

p = t.psi
print("canonical u   =", p.v_word)
print("f(u)          =", p.f_word, "=", p.f_perm)
print("reversed      =", list(p.reversed_f))
print(format_trace(p.reversed_f))
print("rtl Phi       =", p.rtl_phi, "=", p.rtl_phi_word)
print("lifted        =", p.lifted_word)
print("psi(u)        =", p.result)


# ## Back together

print("theta(pi)     =", t.result)
print("ell_L(theta)  =", ell_L(t.result), "(nrmaj was", str(b.nrmaj) + ")")
