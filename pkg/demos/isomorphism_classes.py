"""Which labeled 5-element lattices are the same lattice under a relabeling?"""

from btk import enumerate_lattices, find_isomorphisms, iso_classes

lattices = enumerate_lattices(5)
classes = iso_classes(lattices)
print(f"{len(lattices)} labeled lattices fall into {len(classes)} isomorphism classes:")
for group in classes:
    print("  {" + ", ".join(f"#{i + 1}" for i in group) + "}")

# One witness map per pair inside each class.
print("\nWitnesses (top and bottom fixed):")
for group in classes:
    first = lattices[group[0]]
    for j in group[1:]:
        maps = find_isomorphisms(first, lattices[j])
        print(f"  #{group[0] + 1} -> #{j + 1}: " + ", ".join(str(m.map) for m in maps))

# Three shapes up to isomorphism: the chain, and the square with an extra top or bottom.
for group in classes:
    lat = lattices[group[0]]
    k = lat.k
    comparable = sum(lat.meet.cols[(x - 1) * k + y - 1] in (x, y) for x in range(2, k) for y in range(2, k) if x < y)
    shape = "chain" if comparable == 3 else "square plus a new top or bottom"
    print(f"class of #{group[0] + 1}: {len(group)} labelings, {shape}")
