"""Constructing decorations with a prescribed biscornu symmetry class.

A :class:`Recipe` names the symmetry class wanted on each face and how
the bottom chart is obtained from the top one.  Symmetric charts are made
by choosing whole orbits of stitch segments under a representative
subgroup of the square's symmetry group, so the chart is invariant by
construction; the result is then checked against the exact class, since a
random choice can pick up extra symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .chart import SeedPair, StitchChart, hitomezashi
from .errors import ConstructionError
from .group_d4d import (
    SUBGROUP_CLASSES,
    BiscornuDecoration,
    classify_subgroup,
    parse_decoration,
    stabilizer,
)
from .symmetry_square import D4_ELEMENTS, SQUARE_CLASSES, D4Element, apply_d4, classify_square

__all__ = [
    "Recipe",
    "RECIPES",
    "RELATIONS",
    "symmetric_chart",
    "build_from_recipe",
    "search",
    "exemplar_library",
    "load_sampler",
    "write_sampler",
    "sampler_filename",
    "sampler_report",
    "running_border",
    "concentric_rings",
    "classify_decoration",
]

RELATIONS = ("identical", "mirrored", "independent")

_F = D4Element(0, True)
_R = D4Element(1, False)
_R2 = D4Element(2, False)

# one representative subgroup (as generators) for each square class
_REPRESENTATIVES = {
    "C1": (),
    "C2": (_R2,),
    "C4": (_R,),
    "D1_axis": (_F,),
    "D1_diag": (_R * _F,),
    "D2_axis": (_R2, _F),
    "D2_diag": (_R2, _R * _F),
    "D4": (_R, _F),
}


def classify_decoration(d: BiscornuDecoration) -> str:
    return classify_subgroup(stabilizer(d))


@dataclass(frozen=True)
class Recipe:
    """Face classes plus the relation tying the bottom chart to the top.

    ``relation`` is ``"identical"`` (bottom = top), ``"mirrored"`` (bottom
    is the top reflected in its vertical mid-axis, which reverses any
    chirality) or ``"independent"`` (bottom drawn separately with class
    ``bottom_class``, in a random orientation).
    """

    target: str
    top_class: str
    relation: str
    bottom_class: str | None = None

    def __post_init__(self):
        if self.target not in SUBGROUP_CLASSES:
            raise ValueError(f"unknown subgroup class {self.target!r}")
        if self.top_class not in SQUARE_CLASSES:
            raise ValueError(f"unknown square class {self.top_class!r}")
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.relation!r}")
        if self.relation == "independent":
            if self.bottom_class not in SQUARE_CLASSES:
                raise ValueError("an independent bottom chart needs a square class")
        elif self.bottom_class is not None:
            raise ValueError("bottom_class applies only to independent charts")


RECIPES = {
    "D4d": Recipe("D4d", "D4", "identical"),
    "S8cyc": Recipe("S8cyc", "C4", "mirrored"),
    "D4": Recipe("D4", "C4", "identical"),
    "C4v": Recipe("C4v", "D4", "independent", "D4"),
    "C4": Recipe("C4", "C4", "independent", "D4"),
    "D2": Recipe("D2", "D2_axis", "identical"),
    "C2v": Recipe("C2v", "D2_axis", "independent", "D4"),
    "C2_axial": Recipe("C2_axial", "C2", "independent", "D4"),
    "C2_prime": Recipe("C2_prime", "C1", "identical"),
    "Cs": Recipe("Cs", "D1_diag", "independent", "D1_axis"),
    "C1": Recipe("C1", "C1", "independent", "C1"),
}


def _closure(gens):
    group = {D4Element()}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for h in gens:
            k = h * g
            if k not in group:
                group.add(k)
                frontier.append(k)
    return sorted(group)


def _segment_orbits(n: int, group) -> list:
    """Orbits of single segments, each as a chart."""
    seen = set()
    orbits = []
    cands = [("h", (x, y)) for y in range(n + 1) for x in range(n)]
    cands += [("v", (x, y)) for x in range(n + 1) for y in range(n)]
    for kind, seg in cands:
        if (kind, seg) in seen:
            continue
        base = StitchChart(n, frozenset([seg]) if kind == "h" else frozenset(),
                           frozenset([seg]) if kind == "v" else frozenset())
        orbit = StitchChart(n)
        for g in group:
            orbit = orbit | apply_d4(g, base)
        seen.update(("h", s) for s in orbit.hseg)
        seen.update(("v", s) for s in orbit.vseg)
        orbits.append(orbit)
    return orbits


def symmetric_chart(square_class: str, n: int, rng, density: float = 0.5, attempts: int = 200) -> StitchChart:
    """Random chart whose symmetry class is exactly ``square_class``."""
    if square_class not in _REPRESENTATIVES:
        raise ValueError(f"unknown square class {square_class!r}")
    group = _closure(_REPRESENTATIVES[square_class])
    orbits = _segment_orbits(n, group)
    for _ in range(attempts):
        keep = rng.random(len(orbits)) < density
        chart = StitchChart(n)
        for orbit, k in zip(orbits, keep):
            if k:
                chart = chart | orbit
        if classify_square(chart) == square_class:
            return chart
    raise ConstructionError(f"no chart of class {square_class} found at n={n} in {attempts} draws")


def _bottom_for(rec: Recipe, top: StitchChart, rng) -> StitchChart:
    if rec.relation == "identical":
        return top
    if rec.relation == "mirrored":
        return apply_d4(_F, top)
    chart = symmetric_chart(rec.bottom_class, top.n, rng)
    return apply_d4(D4_ELEMENTS[int(rng.integers(len(D4_ELEMENTS)))], chart)


def build_from_recipe(rec: Recipe, n: int, rng_seed: int, max_attempts: int = 100) -> BiscornuDecoration:
    """Decoration realising ``rec.target`` exactly; retries with fresh draws."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(rng_seed)
    seen = {}
    for _ in range(max_attempts):
        top = symmetric_chart(rec.top_class, n, rng)
        d = BiscornuDecoration(top, _bottom_for(rec, top, rng))
        label = classify_decoration(d)
        if label == rec.target:
            return d
        seen[label] = seen.get(label, 0) + 1
    raise ConstructionError(
        f"recipe for {rec.target} failed after {max_attempts} attempts at n={n}; got {seen}"
    )


def _random_seeds(n: int, rng) -> SeedPair:
    bits = rng.integers(0, 2, size=2 * (n + 1))
    return SeedPair(tuple(bits[: n + 1]), tuple(bits[n + 1:]))


def search(target: str, n: int, space: str = "seeds", budget: int = 1000, rng_seed: int = 0,
           density: float = 0.5):
    """Sample decorations until one classifies exactly as ``target``.

    ``space`` is ``"seeds"`` (hitomezashi charts from random seed bits) or
    ``"random"`` (aleatoric charts).  For each candidate the bottom chart
    is, with equal odds, drawn independently or taken as a random square
    symmetry applied to the top.  Returns ``None`` when the budget runs out.
    """
    if target not in SUBGROUP_CLASSES:
        raise ValueError(f"unknown subgroup class {target!r}")
    if space not in ("seeds", "random"):
        raise ValueError(f"space must be 'seeds' or 'random', got {space!r}")
    if budget < 0:
        raise ValueError("budget must be non-negative")
    rng = np.random.default_rng(rng_seed)

    def draw():
        if space == "seeds":
            return hitomezashi(_random_seeds(n, rng), n)
        bits = rng.random(2 * n * (n + 1)) < density
        h = [(x, y) for y in range(n + 1) for x in range(n)]
        v = [(x, y) for x in range(n + 1) for y in range(n)]
        return StitchChart(n, frozenset(c for c, k in zip(h, bits[: len(h)]) if k),
                           frozenset(c for c, k in zip(v, bits[len(h):]) if k))

    for _ in range(budget):
        top = draw()
        if rng.random() < 0.5:
            bottom = draw()
        else:
            bottom = apply_d4(D4_ELEMENTS[int(rng.integers(len(D4_ELEMENTS)))], top)
        d = BiscornuDecoration(top, bottom)
        if classify_decoration(d) == target:
            return d
    return None


# ------------------------------------------------------------- motifs


def running_border(n: int, pattern=(1, 1, 0), inset: int = 0) -> StitchChart:
    """Fourfold pinwheel of running stitches around a square ring.

    ``pattern`` is repeated along the bottom side of the ring at distance
    ``inset`` from the edge and the side is then rotated onto the other
    three.  A pattern that is not a palindrome gives a chiral border;
    mirroring the chart reverses its handedness.
    """
    length = n - 2 * inset
    if length < 1:
        raise ValueError("inset too large for the chart")
    side = frozenset((inset + i, inset) for i in range(length) if pattern[i % len(pattern)])
    base = StitchChart(n, side)
    out = StitchChart(n)
    for k in range(4):
        out = out | apply_d4(D4Element(k, False), base)
    return out


def concentric_rings(n: int, insets) -> StitchChart:
    """Closed square outlines at the given distances from the edge."""
    out = StitchChart(n)
    for k in insets:
        lo, hi = k, n - k
        if hi - lo < 1:
            continue
        h = {(x, y) for x in range(lo, hi) for y in (lo, hi)}
        v = {(x, y) for x in (lo, hi) for y in range(lo, hi)}
        out = out | StitchChart(n, frozenset(h), frozenset(v))
    return out


def _interior(chart: StitchChart) -> StitchChart:
    n = chart.n
    return StitchChart(n, frozenset((x, y) for x, y in chart.hseg if 0 < y < n),
                       frozenset((x, y) for x, y in chart.vseg if 0 < x < n))


def _snowflake(n: int) -> StitchChart:
    # palindromic seeds make a hitomezashi with full square symmetry at odd n
    half = ([0, 1, 1, 0, 1] * n)[: (n + 1) // 2]
    seeds = tuple(half + half[::-1])
    return hitomezashi(SeedPair(seeds, seeds), n)


_BORDER_PATTERNS = ((1, 1, 0), (1, 1, 0, 1, 0, 0), (1, 1, 1, 0))


def exemplar_library(n: int = 9, rng_seed: int = 2024) -> list:
    """One (decoration, class label) pair for each of the eleven classes.

    Motif-based entries use a symmetric hitomezashi centre and chiral
    running-stitch borders; the rest are orbit-built charts from fixed
    seeds.  Every entry is checked against the brute-force classifier.
    """
    if n % 2 == 0 or n < 7:
        raise ValueError("the exemplar motifs need odd n >= 7")
    rng = np.random.default_rng(rng_seed)
    centre = _interior(_snowflake(n))
    border = next(b for b in (running_border(n, p) for p in _BORDER_PATTERNS)
                  if classify_square(b) == "C4")
    chiral = centre | border
    framed = centre | concentric_rings(n, (0,))
    rings = concentric_rings(n, (0, 2, 4))
    entries = [
        ("D4d", BiscornuDecoration(framed, framed)),
        ("S8cyc", BiscornuDecoration(chiral, apply_d4(_F, chiral))),
        ("D4", BiscornuDecoration(chiral, chiral)),
        ("C4v", BiscornuDecoration(framed, rings)),
        ("C4", BiscornuDecoration(chiral, rings)),
    ]
    for label in ("D2", "C2v", "C2_axial", "C2_prime", "Cs", "C1"):
        entries.append((label, build_from_recipe(RECIPES[label], n, int(rng.integers(2 ** 31)))))
    out = []
    for label, d in entries:
        got = classify_decoration(d)
        if got != label:
            raise ConstructionError(f"exemplar for {label} classifies as {got}")
        out.append((d, label))
    return out


def load_sampler() -> list:
    """The bundled sampler: (filename, decoration, label) from the manifest."""
    base = resources.files("biscornu") / "data" / "sampler"
    out = []
    for line in (base / "manifest.txt").read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, label = line.split()
        out.append((name, parse_decoration((base / name).read_text(encoding="utf-8")), label))
    return out


def sampler_filename(index: int, label: str) -> str:
    return f"{index + 1:02d}_{label}.bis"


def write_sampler(directory, entries) -> list:
    """Write ``(decoration, label)`` entries as .bis files plus ``manifest.txt``.

    Returns the manifest rows ``(filename, label)``.
    """
    from pathlib import Path

    from .group_d4d import emit_decoration

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rows = []
    for i, (d, label) in enumerate(entries):
        name = sampler_filename(i, label)
        (directory / name).write_text(emit_decoration(d), encoding="utf-8")
        rows.append((name, label))
    manifest = "".join(f"{name} {label}\n" for name, label in rows)
    (directory / "manifest.txt").write_text(manifest, encoding="utf-8")
    return rows


def sampler_report(entries) -> tuple:
    """Verification lines for ``(name, decoration, label)`` and the match count."""
    lines = []
    matched = 0
    for name, d, label in entries:
        got = classify_decoration(d)
        ok = got == label
        matched += ok
        lines.append(f"{name} expected={label} got={got} {'ok' if ok else 'MISMATCH'}")
    lines.append(f"{matched}/{len(entries)} classes matched")
    return lines, matched
