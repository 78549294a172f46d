"""Every finite operation from a chain's meet and join plus three unary maps."""

import itertools
import random

from btk import LogicalMatrix, eval_expr, generator_set, synthesize, unary_closure, unary_word
from btk.unigen import expand_words, to_sexpr

g = generator_set(4)
print("S1 =", g.sigma1, " S2 =", g.sigma2, " T =", g.theta)
for k in (2, 3, 4):
    closure = unary_closure(k)
    longest = max(closure.values(), key=len)
    print(f"k={k}: {len(closure)} unary maps reached, longest shortest word has {len(longest)} letters")

target = LogicalMatrix(6, (3, 3, 1, 6, 2, 2))
word = unary_word(target)
print(f"\n{target} is a word of {len(word)} generators")

# A 3-valued majority-like function of two variables.
f = LogicalMatrix(3, (1, 1, 2, 1, 2, 3, 2, 3, 3))
expr = synthesize(f, 2)
print("\nterm:", to_sexpr(expr))
print("agrees on all inputs:",
      all(eval_expr(expr, xs) == f.cols[j] for j, xs in enumerate(itertools.product((1, 2, 3), repeat=2))))
print("with generator words:", to_sexpr(expand_words(expr))[:120], "...")

rng = random.Random(0)
f3 = LogicalMatrix(3, tuple(rng.randint(1, 3) for _ in range(27)))
synthesize(f3, 3)
print("\nrandom ternary operation on 3 elements synthesized and checked")
