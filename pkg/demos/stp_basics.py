"""Semi-tensor products on logical matrices, and how an operation table becomes a matrix."""

import numpy as np

from btk import LogicalMatrix, delta, kron, stp, swap_matrix
from btk.stp import as_matrix, power_reducing

# Matching dimensions: an ordinary product.
a = np.array([[1, 2], [3, 4]])
print("A ⋉ I2 =\n", stp(a, np.eye(2, dtype=int)))

# Mismatched dimensions: A is padded with identities until they line up.
row = np.array([[1, 2]])
col = np.array([[1], [2], [3], [4]])
print("[1 2] ⋉ [1 2 3 4]^T =", stp(row, col).ravel())

# Boolean AND as a 2 x 4 logical matrix: x ∧ y = M (x ⋉ y).
AND = delta(2, [1, 2, 2, 2])
true, false = delta(2, 1), delta(2, 2)
for x, xs in ((true, "T"), (false, "F")):
    for y, ys in ((true, "T"), (false, "F")):
        print(f"{xs} ∧ {ys} ->", "T" if stp(stp(AND, x), y) == true else "F")

# Swapping factors and squaring a basis vector.
x, y = delta(3, 2), delta(2, 1)
print("W[3,2] x y == y x:", stp(swap_matrix(3, 2), stp(x, y)) == stp(y, x))
print("x x == PR x:", stp(x, x) == stp(power_reducing(3), x))

# Logical inputs stay logical, so nothing dense is ever built.
big = kron(LogicalMatrix(4, (1, 2, 3, 4)), swap_matrix(5, 5))
print("I4 ⊗ W[5,5] is", big.shape, "and stored as", len(big.cols), "indices")
print("dense view sums to", as_matrix(big).sum())
