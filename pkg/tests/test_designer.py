import numpy as np
import pytest

from biscornu.chart import SeedPair, hitomezashi
from biscornu.designer import (
    RECIPES, Recipe, build_from_recipe, classify_decoration, concentric_rings, exemplar_library,
    load_sampler, running_border, sampler_report, search, symmetric_chart, write_sampler,
)
from biscornu.errors import ConstructionError
from biscornu.group_d4d import SUBGROUP_CLASSES, BiscornuDecoration, emit_decoration, stabilizer
from biscornu.symmetry_square import D4Element, apply_d4, classify_square


def test_recipes_cover_all_classes():
    assert set(RECIPES) == set(SUBGROUP_CLASSES)


@pytest.mark.parametrize("label", SUBGROUP_CLASSES)
@pytest.mark.parametrize("n", [6, 7, 9])
def test_recipe_hits_target_exactly(label, n):
    d = build_from_recipe(RECIPES[label], n, rng_seed=n)
    assert classify_decoration(d) == label


def test_recipe_c2_prime_identical_asymmetric_faces():
    d = build_from_recipe(RECIPES["C2_prime"], 8, 0)
    assert d.top == d.bottom and classify_square(d.top) == "C1"
    assert classify_decoration(d) == "C2_prime"


def test_recipe_cs_needs_matching_orientation():
    d = build_from_recipe(RECIPES["Cs"], 8, 0)
    assert classify_square(d.top) == "D1_diag" and classify_square(d.bottom) == "D1_axis"
    # turning the bottom a quarter-turn misaligns the mirrors
    turned = BiscornuDecoration(d.top, apply_d4(D4Element(1, False), d.bottom))
    assert classify_decoration(turned) == "C1"


def test_identical_axis_charts_give_dihedral_rotations():
    # faces with two axis mirrors, stitched identically: only rotations survive
    d = build_from_recipe(RECIPES["D2"], 8, 0)
    assert d.top == d.bottom and classify_square(d.top) == "D2_axis"
    assert classify_decoration(d) == "D2"


def test_recipe_validation():
    with pytest.raises(ValueError):
        Recipe("D5", "C1", "identical")
    with pytest.raises(ValueError):
        Recipe("C1", "C1", "independent")
    with pytest.raises(ValueError):
        Recipe("C1", "C1", "sideways")


def test_exhausted_recipe_reports():
    impossible = Recipe("D4d", "C1", "independent", "C1")
    with pytest.raises(ConstructionError, match="after 3 attempts"):
        build_from_recipe(impossible, 6, 0, max_attempts=3)


def test_symmetric_chart_classes():
    rng = np.random.default_rng(5)
    for label in ("C1", "C2", "C4", "D1_axis", "D1_diag", "D2_axis", "D2_diag", "D4"):
        assert classify_square(symmetric_chart(label, 6, rng)) == label


def test_motifs():
    assert classify_square(running_border(9)) == "C4"
    assert classify_square(apply_d4(D4Element(0, True), running_border(9))) == "C4"
    assert apply_d4(D4Element(0, True), running_border(9)) != running_border(9)
    assert classify_square(concentric_rings(9, (0, 2))) == "D4"


def test_exemplar_library_labels():
    lib = exemplar_library()
    assert [label for _, label in lib] == list(RECIPES)
    for d, label in lib:
        assert classify_decoration(d) == label


def test_bundled_sampler_matches_library():
    bundled = load_sampler()
    assert len(bundled) == 11
    assert {label for _, _, label in bundled} == set(SUBGROUP_CLASSES)
    lib = exemplar_library()
    assert [emit_decoration(d) for _, d, _ in bundled] == [emit_decoration(d) for d, _ in lib]
    lines, matched = sampler_report(bundled)
    assert matched == 11 and lines[-1] == "11/11 classes matched"


def test_write_sampler(tmp_path):
    rows = write_sampler(tmp_path, exemplar_library())
    manifest = (tmp_path / "manifest.txt").read_text().splitlines()
    assert manifest == [f"{a} {b}" for a, b in rows]
    assert all((tmp_path / a).exists() for a, _ in rows)


def test_chirality_of_borders():
    from biscornu.designer import _interior, _snowflake

    chiral = _interior(_snowflake(9)) | running_border(9)
    mirrored = apply_d4(D4Element(0, True), chiral)
    assert classify_decoration(BiscornuDecoration(chiral, mirrored)) == "S8cyc"
    assert classify_decoration(BiscornuDecoration(chiral, chiral)) == "D4"


# ------------------------------------------------------------------- search


def test_search_asymmetric():
    d = search("C1", 8, "random", budget=5, rng_seed=0)
    assert d is not None and classify_decoration(d) == "C1"


def test_search_zero_budget():
    assert search("D4d", 6, "seeds", budget=0, rng_seed=0) is None


def test_search_full_symmetry_from_seeds_at_odd_size():
    d = search("D4d", 5, "seeds", budget=20000, rng_seed=1)
    assert d is not None and len(stabilizer(d)) == 16


def test_no_even_hitomezashi_has_half_turn():
    # why a seed-only D4d search at n=6 must come back empty
    n = 6
    half = D4Element(2, False)
    for bits in range(2 ** (2 * n + 2)):
        b = [(bits >> i) & 1 for i in range(2 * n + 2)]
        c = hitomezashi(SeedPair(b[: n + 1], b[n + 1:]), n)
        assert apply_d4(half, c) != c
    assert search("D4d", 6, "seeds", budget=2000, rng_seed=0) is None


def test_search_is_deterministic():
    a = search("C2_prime", 6, "random", budget=200, rng_seed=4)
    b = search("C2_prime", 6, "random", budget=200, rng_seed=4)
    assert a is not None and a == b


def test_search_arguments():
    with pytest.raises(ValueError):
        search("C1", 4, "bogus", 1, 0)
    with pytest.raises(ValueError):
        search("Z9", 4, "seeds", 1, 0)
