"""Designing a decoration with a chosen symmetry.

Run:  python3 demos/02_designing_decorations.py

Two routes are shown.  A recipe builds the faces from square symmetry
classes and a relation between them.  A search draws hitomezashi charts
(rows and columns of running stitches set by binary seeds) until one
hits the target.
"""

from biscornu import classify_square, classify_subgroup, stabilizer
from biscornu.designer import RECIPES, build_from_recipe, search

print("Recipes (target: top face class, relation, bottom face class)")
for target, rec in RECIPES.items():
    d = build_from_recipe(rec, n=7, rng_seed=1)
    got = classify_subgroup(stabilizer(d))
    print(f"  {target:9s} {rec.top_class:8s} {rec.relation:11s} {rec.bottom_class or '':8s}"
          f" -> built {got}, faces {classify_square(d.top)}/{classify_square(d.bottom)}")

# Even sides give hitomezashi faces with no half-turn, so n=5 is used here.
# Hitomezashi charts are never chiral (C2 or C4 without mirrors), so D4,
# which needs two same-handed chiral faces, is out of reach of seeds.
print("\nSeed search at n=5:")
for target in ("D4d", "D4", "C2_prime", "C1"):
    d = search(target, 5, "seeds", budget=20000, rng_seed=1)
    print(f"  {target:9s}", "not found" if d is None else f"found, stabilizer order {len(stabilizer(d))}")

print("\nAnd a search that cannot succeed, D4d on a 6x6 grid:")
print("  ", search("D4d", 6, "seeds", budget=2000, rng_seed=0))
