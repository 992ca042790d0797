"""The order-16 symmetry group of a biscornu and its action on decorations.

Elements are kept in the normal form ``s^k r^j`` where ``s`` is the
eightfold rotoreflection and ``r`` the half-turn about an axis in the
mid-plane.  Composition ``a * b`` means "apply ``b`` first".

Seam vertices
-------------
Looking down the main axis, the eight seam vertices sit at plan angles
``-45 + 45 p`` degrees, ``p = 0..7``, carrying the labels
``1, α, 2, β, 3, γ, 4, δ``.  Numbered labels are the corners of the top
square, Greek labels the corners of the bottom square.  ``s`` moves the
vertex at position ``p`` to ``p + 1``; ``r`` moves it to ``1 - p``.

Chart frames
------------
Each chart is stored as seen from outside the cushion.  The top chart's
corners ``(n, 0), (n, n), (0, n), (0, 0)`` are ``1, 2, 3, 4``.  Seen
from below, the bottom square's corners run clockwise: ``(0, 0)`` is α,
``(0, n)`` β, ``(n, n)`` γ and ``(n, 0)`` δ.  With ``M`` the vertical-axis
mirror and ``R`` the counterclockwise quarter-turn, the generators act by

    s : (T, B) -> (R M B, M T)
    r : (T, B) -> (R B, R^-1 T)

which are exactly the plan rotation by 45 degrees and the plan reflection
across the line at -22.5 degrees, written in the two chart frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .chart import StitchChart
from .symmetry_square import D4Element, IDENTITY as D4_ID, apply_d4

__all__ = [
    "GroupElement",
    "ELEMENT_TYPES",
    "SUBGROUP_CLASSES",
    "CLASS_ORDER",
    "SEAM_LABELS",
    "BiscornuDecoration",
    "E",
    "S",
    "R",
    "element_mul",
    "element_inv",
    "all_elements",
    "element_type",
    "seam_perm",
    "face_action",
    "act",
    "stabilizer",
    "generate_subgroup",
    "is_subgroup",
    "census",
    "classify_subgroup",
    "enumerate_subgroups",
    "conjugacy_classes_of_subgroups",
    "parse_decoration",
    "emit_decoration",
]


@dataclass(frozen=True, order=True)
class GroupElement:
    k: int = 0
    j: int = 0

    def __post_init__(self):
        object.__setattr__(self, "k", int(self.k) % 8)
        object.__setattr__(self, "j", int(self.j) % 2)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return element_mul(self, other)

    def __pow__(self, m: int) -> "GroupElement":
        out = E
        base = self if m >= 0 else element_inv(self)
        for _ in range(abs(m)):
            out = out * base
        return out

    def inverse(self) -> "GroupElement":
        return element_inv(self)

    def __str__(self):
        if self.k == 0 and self.j == 0:
            return "e"
        s = "" if self.k == 0 else ("s" if self.k == 1 else f"s{self.k}")
        return s + ("r" if self.j else "")

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        """Inverse of ``str``: ``e``, ``s3``, ``r``, ``s5r`` ..."""
        t = text.strip()
        if t == "e":
            return cls()
        j = 1 if t.endswith("r") else 0
        if j:
            t = t[:-1]
        if not t:
            return cls(0, j)
        if not t.startswith("s"):
            raise ValueError(f"bad group element {text!r}")
        k = int(t[1:]) if len(t) > 1 else 1
        return cls(k, j)


E = GroupElement(0, 0)
S = GroupElement(1, 0)
R = GroupElement(0, 1)


def element_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    # r s^b = s^-b r
    sign = -1 if a.j else 1
    return GroupElement(a.k + sign * b.k, a.j + b.j)


def element_inv(a: GroupElement) -> GroupElement:
    if a.j:
        return a
    return GroupElement(-a.k, 0)


def all_elements() -> list:
    return [GroupElement(k, j) for j in (0, 1) for k in range(8)]


ELEMENT_TYPES = ("Identity", "S8Rotoreflection", "C4Rotation", "C2Axial", "C2Prime", "SigmaD")


def element_type(g: GroupElement) -> str:
    if g.j:
        return "C2Prime" if g.k % 2 == 0 else "SigmaD"
    if g.k == 0:
        return "Identity"
    if g.k % 2:
        return "S8Rotoreflection"
    return "C2Axial" if g.k == 4 else "C4Rotation"


# ------------------------------------------------------------ seam vertices

SEAM_LABELS = ("1", "α", "2", "β", "3", "γ", "4", "δ")

# Generator label movements, one cycle / transposition set per generator.
_S_CYCLE = ("1", "α", "2", "β", "3", "γ", "4", "δ")
_R_PAIRS = (("1", "α"), ("2", "δ"), ("3", "γ"), ("4", "β"))


def _perm_from_cycle(cycle):
    return {a: cycle[(i + 1) % len(cycle)] for i, a in enumerate(cycle)}


def _perm_from_transpositions(pairs):
    out = {}
    for a, b in pairs:
        out[a], out[b] = b, a
    return out


_PERM_S = _perm_from_cycle(_S_CYCLE)
_PERM_R = _perm_from_transpositions(_R_PAIRS)


def _compose(p, q):
    """``p`` after ``q``."""
    return {x: p[q[x]] for x in q}


def seam_perm(g: GroupElement) -> dict:
    """Label movement of ``g`` on the eight seam vertices (label -> new position label)."""
    perm = {x: x for x in SEAM_LABELS}
    if g.j:
        perm = _compose(_PERM_R, perm)
    for _ in range(g.k):
        perm = _compose(_PERM_S, perm)
    return perm


# --------------------------------------------------------------- decorations


@dataclass(frozen=True)
class BiscornuDecoration:
    top: StitchChart
    bottom: StitchChart

    def __post_init__(self):
        if self.top.n != self.bottom.n:
            raise ValueError(f"top and bottom charts differ in size ({self.top.n} vs {self.bottom.n})")

    @property
    def n(self) -> int:
        return self.top.n

    @classmethod
    def blank(cls, n: int) -> "BiscornuDecoration":
        return cls(StitchChart(n), StitchChart(n))


@dataclass(frozen=True)
class FaceAction:
    """``new_top = top(src_top)``, ``new_bottom = bottom(src_bottom)``.

    When ``swap`` is set the sources are exchanged (``src_top`` is the old
    bottom chart).
    """

    swap: bool
    top: D4Element
    bottom: D4Element

    def then(self, g: "FaceAction") -> "FaceAction":
        """Apply ``self`` first, then ``g``."""
        if g.swap:
            # new_top = g.top(self.bottom(...)), new_bottom = g.bottom(self.top(...))
            return FaceAction(not self.swap, g.top * self.bottom, g.bottom * self.top)
        return FaceAction(self.swap, g.top * self.top, g.bottom * self.bottom)


_FLIP = D4Element(0, True)
_QUARTER = D4Element(1, False)
_ACT_S = FaceAction(True, _QUARTER * _FLIP, _FLIP)
_ACT_R = FaceAction(True, _QUARTER, _QUARTER.inverse())
_ACT_E = FaceAction(False, D4_ID, D4_ID)


def _build_face_actions():
    table = {}
    for g in all_elements():
        fa = _ACT_E
        if g.j:
            fa = fa.then(_ACT_R)
        for _ in range(g.k):
            fa = fa.then(_ACT_S)
        table[g] = fa
    return table


_FACE_ACTIONS = _build_face_actions()


def face_action(g: GroupElement) -> FaceAction:
    return _FACE_ACTIONS[g]


def act(g: GroupElement, d: BiscornuDecoration) -> BiscornuDecoration:
    fa = _FACE_ACTIONS[g]
    src_top, src_bottom = (d.bottom, d.top) if fa.swap else (d.top, d.bottom)
    return BiscornuDecoration(apply_d4(fa.top, src_top), apply_d4(fa.bottom, src_bottom))


def stabilizer(d: BiscornuDecoration) -> frozenset:
    return frozenset(g for g in all_elements() if act(g, d) == d)


# ---------------------------------------------------------------- subgroups

SUBGROUP_CLASSES = ("C1", "Cs", "C2_axial", "C2_prime", "C4", "D2", "C2v", "S8cyc", "D4", "C4v", "D4d")

# Element-type census in ELEMENT_TYPES order.
_SIGNATURES = {
    (1, 4, 2, 1, 4, 4): "D4d",
    (1, 4, 2, 1, 0, 0): "S8cyc",
    (1, 0, 2, 1, 4, 0): "D4",
    (1, 0, 2, 1, 0, 4): "C4v",
    (1, 0, 2, 1, 0, 0): "C4",
    (1, 0, 0, 1, 2, 0): "D2",
    (1, 0, 0, 1, 0, 2): "C2v",
    (1, 0, 0, 1, 0, 0): "C2_axial",
    (1, 0, 0, 0, 1, 0): "C2_prime",
    (1, 0, 0, 0, 0, 1): "Cs",
    (1, 0, 0, 0, 0, 0): "C1",
}
SIGNATURES = {label: sig for sig, label in _SIGNATURES.items()}
CLASS_ORDER = {label: sum(sig) for sig, label in _SIGNATURES.items()}


def census(h: Iterable[GroupElement]) -> tuple:
    counts = dict.fromkeys(ELEMENT_TYPES, 0)
    for g in h:
        counts[element_type(g)] += 1
    return tuple(counts[t] for t in ELEMENT_TYPES)


def is_subgroup(h) -> bool:
    h = set(h)
    return E in h and all(a * b in h for a in h for b in h)


def classify_subgroup(h) -> str:
    h = frozenset(h)
    if not is_subgroup(h):
        raise ValueError(f"not a subgroup: {sorted(str(g) for g in h)}")
    return _SIGNATURES[census(h)]


def generate_subgroup(gens: Iterable[GroupElement]) -> frozenset:
    elems = {E}
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        if g in elems:
            continue
        elems.add(g)
        frontier.extend(g * x for x in list(elems))
        frontier.extend(x * g for x in list(elems))
    return frozenset(elems)


def enumerate_subgroups() -> list:
    """Every subgroup, by brute-force closure of all element pairs.

    Subgroups of a dihedral group are generated by at most two elements,
    so pairs suffice.
    """
    elems = all_elements()
    found = set()
    for a in elems:
        for b in elems:
            found.add(generate_subgroup([a, b]))
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def conjugacy_classes_of_subgroups() -> list:
    remaining = enumerate_subgroups()
    classes = []
    while remaining:
        h = remaining[0]
        conj = {frozenset(g * x * g.inverse() for x in h) for g in all_elements()}
        classes.append(sorted(conj, key=sorted))
        remaining = [k for k in remaining if k not in conj]
    return classes


# ----------------------------------------------------------------- file I/O


def parse_decoration(text: str) -> BiscornuDecoration:
    from .chart import content_lines, parse_chart_body, parse_size_line
    from .errors import ParseError

    lines = content_lines(text)
    if not lines:
        raise ParseError("empty decoration file: missing 'n <int>' line", 1)
    n = parse_size_line(*lines[0])
    sections = {}
    current = None
    for lineno, line in lines[1:]:
        if line in ("top", "bottom"):
            if line in sections:
                raise ParseError(f"duplicate '{line}' section", lineno)
            current = sections[line] = []
        elif current is None:
            raise ParseError(f"segment before 'top'/'bottom' section header: {line!r}", lineno)
        else:
            current.append((lineno, line))
    for name in ("top", "bottom"):
        if name not in sections:
            raise ParseError(f"missing '{name}' section", len(text.splitlines()) or 1)
    return BiscornuDecoration(parse_chart_body(sections["top"], n), parse_chart_body(sections["bottom"], n))


def emit_decoration(d: BiscornuDecoration) -> str:
    from .chart import emit_chart_body

    return f"n {d.n}\ntop\n" + emit_chart_body(d.top) + "bottom\n" + emit_chart_body(d.bottom)
