"""From flat boundaries to a relaxed 3D cushion.

Run:  python3 demos/03_dform_geometry.py [output_dir]

A D-form joins two flat sheets of equal perimeter along their whole
boundary.  For a biscornu both sheets are squares and the seam starts
half a side along.  The relaxation is kept coarse so the script
finishes in a few seconds; use the ``relax`` command for finer meshes.
"""

import math
import sys
from pathlib import Path

import numpy as np

from biscornu.geometry import (
    RelaxParams, biscornu_seam3d, build_sheets, convex_hull_check, make_dform_pairing,
    make_pita_pairing, relax, write_obj,
)
from biscornu.geometry.boundary import perimeter, square, stadium, trisphericon_flat

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

print("Perimeters")
print(f"  stadium L=2 r=1      {perimeter(stadium(2, 1)):.9f}  (4 + 2pi = {4 + 2 * math.pi:.9f})")
print(f"  trisphericon net r=1 {perimeter(trisphericon_flat(1)):.9f}  (4pi = {4 * math.pi:.9f})")

# A stadium folded onto itself about its rightmost point is a pita-form.
st = stadium(2, 1)
fold = make_pita_pairing(st, 2 + math.pi / 2)
print("\nStadium pita-form fixed points at arclength", [round(s, 6) for s in fold.fixed_points()])

a = 1.0
sq = square(a)
pairing = make_dform_pairing(sq, sq, a / 2)
sheets = build_sheets([sq, sq], pairing, 0.08, multiple=8)
res = relax(sheets, pairing, RelaxParams(iterations=1500))
print(f"\nBiscornu relaxation: {len(res.vertices)} vertices,"
      f" max edge strain {res.max_edge_strain:.2e}, converged {res.converged}")

idx = [int(np.argmin(np.abs(sheets[0].boundary_params - k * a / 2))) for k in range(8)]
z = res.seam_curve[idx, 2] - res.seam_curve[:, 2].mean()
print("  seam corner heights  ", np.round(z, 3))
print("  antiprism prediction ", np.round(biscornu_seam3d(a)[:, 2], 3), "(up to which face is up)")
print("  vertices inside the seam's convex hull:", convex_hull_check(res, 0.16))

path = out / "biscornu.obj"
write_obj(res, path)
print(f"\nMesh written to {path}")
