# coding: utf-8

# # nrmaj against ell_L, one sign set at a time
#
# For each B in [n] we restrict to elements whose inverse negatives lie in B
# and compare the two generating functions with the closed product.

import sys

from signed_foata import check_all_subsets

rank = int(sys.argv[1]) if len(sys.argv) > 1 else 4

for r in check_all_subsets(rank):
    b = ",".join(map(str, sorted(r.subset)))
    status = "ok" if r.passed else "MISMATCH"
    print(f"B={{{b}}}".ljust(14), f"{r.elements:>6}", " ", r.lhs, " ", status)


# ## The alternating group on its own
#
# Over A_{n+1}, rmaj and ell_A share the product distribution too.

from signed_foata import check_alternating, product_formula_A

for n in range(3, 8):
    r = check_alternating(n)
    print(n, r.passed, product_formula_A(n))
