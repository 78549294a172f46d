"""Census of small bounded distributive lattices and the complements they admit."""

from btk import classify, enumerate_btas, enumerate_complements, enumerate_lattices

for k in range(2, 7):
    print(f"k={k}: {len(enumerate_lattices(k))} bounded distributive lattices "
          f"({len(enumerate_lattices(k, False))} bounded lattices)")

print("\nThe three 4-element lattices (1 = top, 4 = bottom):")
for i, lat in enumerate(enumerate_lattices(4), 1):
    print(f"  L{i}: meet {lat.meet}\n      join {lat.join}")

print("\nComplements per lattice:")
header = ["dic", "de_morgan", "kleene", "pseudo", "stone", "boolean"]
print("       " + "  ".join(f"{h:>9}" for h in header))
for i, lat in enumerate(enumerate_lattices(4), 1):
    counts = [len(enumerate_complements(lat, c)) for c in header]
    print(f"  L{i}   " + "  ".join(f"{n:>9}" for n in counts))

print("\nPseudo complements:")
for i, lat in enumerate(enumerate_lattices(4), 1):
    (n,) = enumerate_complements(lat, "pseudo")
    r = classify(lat.with_comp(n))
    print(f"  L{i}: {n}  stone={r.stone} boolean={r.boolean}")

print("\nDe Morgan algebras on 5 elements whose complement is a DIC:")
for a in enumerate_btas(5, ("dic", "de_morgan")):
    print(f"  comp {a.comp}  meet {a.meet}")
