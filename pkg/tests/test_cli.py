import io
import subprocess
import sys
from pathlib import Path

import pytest

from biscornu.chart import SeedPair, emit_chart, hitomezashi, parse_chart, random_chart
from biscornu.cli import run
from biscornu.designer import load_sampler, search
from biscornu.geometry.boundary import parse_boundary
from biscornu.geometry.seam import make_pita_pairing
from biscornu.group_d4d import BiscornuDecoration, classify_subgroup, emit_decoration, parse_decoration, stabilizer
from biscornu.svg import decoration_svg
from biscornu.symmetry_square import classify_square

GOLDEN = Path(__file__).parent / "golden"
SAMPLER = Path(__file__).parents[1] / "src" / "biscornu" / "data" / "sampler"


def cli(*argv):
    buf = io.StringIO()
    code = run([str(a) for a in argv], buf)
    return code, buf.getvalue()


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize("argv, name", [
    (("gen", "--n", 6, "--rows", "0110101", "--cols", "1011001"), "gen_hitomezashi.chart"),
    (("gen", "--n", 5, "--random", "--density", 0.4, "--seed", 7), "gen_random.chart"),
    (("classify-square", GOLDEN / "gen_hitomezashi.chart"), "classify_square.txt"),
    (("seam", "--b1", GOLDEN / "square.bnd", "--b2", GOLDEN / "square.bnd", "--offset", 0.5), "seam_square.txt"),
    (("seam", "--pita", GOLDEN / "stadium.bnd", "--fold", 3.5707963267948966, "--samples", 6), "seam_stadium.txt"),
    (("svg", SAMPLER / "05_C4.bis"), "svg_05_C4.svg"),
    (("svg", GOLDEN / "gen_hitomezashi.chart"), "svg_chart.svg"),
    (("design", "--target", "D2", "--n", 5, "--seed", 3), "design_D2.bis"),
])
def test_golden_outputs(argv, name):
    code, out = cli(*argv)
    assert code == 0
    assert out == golden(name)


def test_classify_biscornu_golden():
    lines = []
    for f in sorted(SAMPLER.glob("*.bis")):
        code, out = cli("classify-biscornu", f)
        assert code == 0
        lines.append(f"{f.name} {out.replace(chr(10), ' ')}")
    assert "\n".join(lines) + "\n" == golden("classify_biscornu.txt")


# ----------------------------------------------------- CLI equals library


def test_gen_matches_library():
    chart = hitomezashi(SeedPair.from_strings("0110101", "1011001"), 6)
    assert cli("gen", "--n", 6, "--rows", "0110101", "--cols", "1011001")[1] == emit_chart(chart)
    assert cli("gen", "--n", 5, "--random", "--density", 0.4, "--seed", 7)[1] == emit_chart(random_chart(5, 0.4, 7))


def test_classifiers_match_library():
    chart = parse_chart(golden("gen_hitomezashi.chart"))
    assert cli("classify-square", GOLDEN / "gen_hitomezashi.chart")[1].strip() == classify_square(chart)
    for name, d, label in load_sampler():
        out = cli("classify-biscornu", SAMPLER / name)[1].splitlines()
        assert out[0] == classify_subgroup(stabilizer(d)) == label
        assert len(out[1].split()) - 1 == len(stabilizer(d))


def test_design_and_svg_match_library():
    d = search("D2", 5, "seeds", 10000, 3)
    assert cli("design", "--target", "D2", "--n", 5, "--seed", 3)[1] == emit_decoration(d)
    d = parse_decoration((SAMPLER / "05_C4.bis").read_text())
    assert cli("svg", SAMPLER / "05_C4.bis")[1] == decoration_svg(d)


def test_seam_matches_library():
    b = parse_boundary(golden("stadium.bnd"))
    pr = make_pita_pairing(b, 3.5707963267948966)
    rows = [line.split() for line in golden("seam_stadium.txt").splitlines() if line[0].isdigit()]
    for row in rows:
        s, t = float(row[0]), float(row[1])
        assert abs(float(pr.partner(s)) - t) < 1e-7


def test_svg_bytes_are_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert cli("svg", SAMPLER / "07_C2v.bis", "--out", a)[0] == 0
    assert cli("svg", SAMPLER / "07_C2v.bis", "--out", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<?xml") and 'stroke-linecap="round"' in text


# ----------------------------------------------------------- exit codes


def test_blank_biscornu_is_d4d(tmp_path):
    f = tmp_path / "blank.bis"
    f.write_text(emit_decoration(BiscornuDecoration.blank(4)))
    code, out = cli("classify-biscornu", f)
    assert code == 0 and out.splitlines()[0] == "D4d"


def test_design_budget_zero_is_not_found(capsys):
    code, out = cli("design", "--target", "D4d", "--budget", 0)
    assert code == 2 and out == ""
    assert "error: NotFound" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("gen", "--n", 3, "--rows", "012", "--cols", "0101"),
    ("gen", "--n", 3),
    ("gen", "--n", 3, "--random", "--rows", "0101"),
    ("classify-square", "/nonexistent.chart"),
    ("seam", "--pita", GOLDEN / "stadium.bnd"),
    ("seam", "--b1", GOLDEN / "square.bnd"),
    ("design", "--target", "D5"),
    ("frobnicate",),
    ("gen", "--n", 3, "--bogus"),
])
def test_input_errors_exit_one(argv, capsys):
    assert cli(*argv)[0] == 1
    assert "error:" in capsys.readouterr().err


def test_bad_file_contents_exit_one(tmp_path, capsys):
    f = tmp_path / "bad.bis"
    f.write_text("n 2\ntop\nh 9 9\n")
    assert cli("classify-biscornu", f)[0] == 1
    assert capsys.readouterr().err.startswith("error:")


def test_sampler_command(tmp_path):
    code, out = cli("sampler", "--out", tmp_path)
    assert code == 0
    assert out.rstrip().endswith("11/11 classes matched")
    assert len(list(tmp_path.glob("*.bis"))) == 11
    assert (tmp_path / "manifest.txt").exists() and (tmp_path / "report.txt").read_text() == out


def test_relax_not_converged_exits_two(tmp_path, capsys):
    obj = tmp_path / "m.obj"
    code, out = cli("relax", "--b1", GOLDEN / "square.bnd", "--b2", GOLDEN / "square.bnd", "--offset", 0.5,
                    "--iters", 60, "--target-edge", 0.25, "--tolerance", 1e-15, "--out", obj)
    assert code == 2
    assert "max_edge_strain" in out and "converged no" in out
    assert "error: not converged" in capsys.readouterr().err
    assert obj.read_text().count("\nf ") > 0


def test_relax_converges(tmp_path):
    code, out = cli("relax", "--pita", GOLDEN / "stadium.bnd", "--fold", 3.5707963267948966,
                    "--iters", 400, "--target-edge", 0.3)
    assert code == 0, out
    fields = dict(line.split() for line in out.splitlines())
    assert float(fields["max_edge_strain"]) <= 0.01 and fields["converged"] == "yes"


def test_console_script_help():
    res = subprocess.run([sys.executable, "-m", "biscornu.cli", "--help"], capture_output=True, text=True)
    assert res.returncode == 0
    for sub in ("gen", "classify-square", "classify-biscornu", "sampler", "design", "seam", "relax", "svg"):
        assert sub in res.stdout
