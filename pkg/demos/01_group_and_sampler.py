"""Tour of the biscornu symmetry group and the bundled sampler.

Run:  python3 demos/01_group_and_sampler.py [output_dir]

A biscornu is two stitched squares seamed with each corner of one meeting
an edge midpoint of the other.  Its symmetry group has sixteen elements,
written s^k r^j.  We list them, watch them move the eight seam corners
and then classify the eleven sampler decorations.
"""

import sys
from pathlib import Path

from biscornu import all_elements, classify_subgroup, element_type, seam_perm, stabilizer
from biscornu.designer import load_sampler
from biscornu.group_d4d import conjugacy_classes_of_subgroups
from biscornu.svg import decoration_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

print("The sixteen elements and what they do to the seam corners:")
for g in all_elements():
    moved = " ".join(f"{a}->{b}" for a, b in seam_perm(g).items() if a != b) or "(nothing moves)"
    print(f"  {str(g):4s} {element_type(g):17s} {moved}")

# Subgroups up to conjugacy: the possible symmetry types of a decoration.
classes = conjugacy_classes_of_subgroups()
print(f"\n{len(classes)} conjugacy classes of subgroups:")
for c in classes:
    print(f"  {classify_subgroup(c[0]):9s} order {len(c[0]):2d}, {len(c)} conjugate(s)")

print("\nThe sampler, one decoration per class:")
for name, d, label in load_sampler():
    found = classify_subgroup(stabilizer(d))
    (out / name.replace(".bis", ".svg")).write_text(decoration_svg(d), encoding="utf-8")
    print(f"  {name:16s} labelled {label:9s} classified {found:9s} {'ok' if found == label else 'MISMATCH'}")
print(f"\nSVG renderings written to {out}/")
