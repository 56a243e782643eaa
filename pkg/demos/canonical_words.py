# coding: utf-8

# # Canonical words
#
# Every element of S_n and of A_{n+1} has a unique normal form as a product of
# one factor per level.  The number of letters is the Coxeter length.

from signed_foata import a_factorize, ell_A, enumerate_group, inv, s_factorize

for w in enumerate_group("S", 3):
    word = s_factorize(w)
    print(str(w).ljust(10), str(word).ljust(24), len(word), inv(w.window))

print()
for v in enumerate_group("A", 4):
    word = a_factorize(v)
    assert len(word) == ell_A(v)
    print(str(v).ljust(10), word)


# Words go back to permutations by evaluating them.

from signed_foata import evaluate, parse_canonical

word = parse_canonical("(1)(a_2)(a_3 a_2 a_1^-1)(a_4 a_3)")
print(word, "->", evaluate(word))
