"""Building larger algebras as products and taking them apart again."""

from btk import classify, decompose, decompose_up_to_iso, is_decomposable, product, relabel
from btk.algebra import StructureTriple
from btk.stp import LogicalMatrix

ba2 = StructureTriple.from_tables(2, [1, 2, 2, 2], [1, 1, 1, 2], [2, 1])
chain3 = StructureTriple.from_tables(3, [1, 2, 3, 2, 2, 3, 3, 3, 3], [1, 1, 1, 1, 2, 2, 1, 2, 3], [3, 2, 1])

square = product(ba2, ba2)
print("BA2 x BA2:", square)
print("  boolean:", classify(square).boolean)
print("  factors:", decompose(square, 2, 2) == (ba2, ba2))

mixed = product(ba2, chain3)
r = classify(mixed)
print("\nBA2 x 3-chain: kleene", r.kleene, "boolean", r.boolean)
a1, a2 = decompose(mixed, 2, 3)
print("  recovered factors:", a1 == ba2, a2 == chain3)

# A chain is never a product of two smaller lattices.
chain4 = StructureTriple.from_tables(
    4, [max(x, y) for x in range(1, 5) for y in range(1, 5)],
    [min(x, y) for x in range(1, 5) for y in range(1, 5)], [4, 3, 2, 1])
print("\n4-chain splits as 2 x 2:", is_decomposable(chain4, 2, 2))

# After shuffling the labels, the fixed-labeling test fails but a search finds it.
shuffled = relabel(mixed, LogicalMatrix(6, (1, 4, 2, 5, 3, 6)))
print("\nshuffled product splits directly:", decompose(shuffled, 2, 3) is not None)
t, (b1, b2) = decompose_up_to_iso(shuffled)
print("after relabeling by", t, "->", (b1, b2) == (ba2, chain3))
