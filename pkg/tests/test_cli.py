import io
import json
import subprocess
import sys
from importlib import resources

import pytest

from jetlink.algebra import AZPoly, SkeinElement, ZPoly
from jetlink.cli import run

DATA = resources.files("jetlink").joinpath("data")


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def gen(*args):
    code, out, _ = call(["gen", *args])
    assert code == 0
    return out


def test_gen_and_rulings_of_a21():
    code, out, _ = call(["rulings", "--p", "1"], gen("A", "2,1"))
    assert code == 0
    assert out.strip().endswith("R = 0")


def test_rulings_json():
    code, out, _ = call(["rulings", "--json"], gen("A", "2,2"))
    data = json.loads(out)
    assert data["count"] == 3
    assert ZPoly.from_json(data["polynomial"]) == ZPoly({0: 2, 2: 1})


def test_spec_prints_the_reference_value():
    code, out, _ = call(["spec", str(DATA / "L2.json")])
    assert code == 0
    hat = AZPoly.parse(out.splitlines()[0].split("=", 1)[1])
    want = AZPoly.parse(
        "2*a^-2 + 6*a^-2*z^2 + 5*a^-2*z^4 + 1*a^-2*z^6 + -4*a^-3*z^3 + -5*a^-3*z^5 + -1*a^-3*z^7"
        " + -3*a^-4*z^2 + -4*a^-4*z^4 + -1*a^-4*z^6 + 1*a^-5*z^3"
    )
    assert hat == want
    assert "R1 = 2 + 6*z^2 + 5*z^4 + 1*z^6" in out


def test_spec_json_round_trips():
    code, out, _ = call(["spec", "--json", str(DATA / "L1.json")])
    data = json.loads(out)
    assert data["tb"] == 1
    # every basis element in F_L1 has zero ruling polynomial
    assert AZPoly.from_json(data["F_hat"]) == AZPoly()
    assert ZPoly.from_json(data["recovered"]) == ZPoly()


def test_kauffman_json():
    code, out, _ = call(["kauffman", "--json"], gen("unknot"))
    data = json.loads(out)
    assert SkeinElement.from_json(data["F"]) == SkeinElement.parse("1*a^1*z^-1 + -1*a^-1*z^-1 + 1")


def test_equivalence_on_example():
    code, out, _ = call(["equivalence", str(DATA / "L1.json")])
    assert code == 0
    assert out.startswith("sharp=yes, GNR=yes, augmentation=yes")
    assert "verdict: consistent" in out


def test_equivalence_brute_force_branch():
    code, out, _ = call(["equivalence", "--p", "2", "--json"], gen("unknot"))
    data = json.loads(out)
    assert code == 0
    assert data["augmentation_method"] == "brute-force"
    assert data["consistent"] and data["sharp"] and data["augmentation"]


def test_sharp_and_invariants():
    code, out, _ = call(["sharp", str(DATA / "L1.json")])
    assert "sharp: yes" in out and "certificate=(2,1)" in out
    code, out, _ = call(["invariants", "--json"], gen("unknot"))
    data = json.loads(out)
    assert data["tb"] == -1 and data["rotation"] == ["0"]


def test_validate_table():
    code, out, _ = call(["validate"], gen("basic", "3"))
    assert code == 0
    assert out.splitlines()[0] == "valid"


def test_dga_and_augment():
    u = gen("unknot")
    code, out, _ = call(["dga", "--json", "--p", "2"], u)
    data = json.loads(out)
    assert [g["name"] for g in data["dga"]["generators"]] == ["x^1_1,2", "y^1_1,2", "c_2"]
    assert data["structure"]["d_squared_zero"]
    code, out, _ = call(["augment", "--brute-force", "--json"], u)
    assert json.loads(out)["count"] == 4
    code, out, _ = call(["augment", "--json"], u)
    (eps,) = json.loads(out)["augmentations"]
    assert eps["y^1_1,2"] == 1


def test_augment_extract(tmp_path):
    u = gen("unknot")
    front = tmp_path / "u.json"
    front.write_text(u)
    aug = tmp_path / "eps.json"
    aug.write_text(json.dumps({"x^1_1,2": 0, "y^1_1,2": 1, "c_2": 0}))
    code, out, _ = call(["augment", str(front), "--extract", str(aug), "--json"])
    assert code == 0
    assert json.loads(out)["ruling"]["seed"] == []
    aug.write_text(json.dumps({"x^1_1,2": 0, "y^1_1,2": 0, "c_2": 0}))
    code, _, err = call(["augment", str(front), "--extract", str(aug)])
    assert code == 1


def test_exit_codes():
    assert call(["rulings", "--bogus"], gen("unknot"))[0] == 1
    assert call(["validate"], "not json")[0] == 1
    assert call(["validate"], '{"seam_strands": 1, "events": [{"type": "right_cusp", "k": 1}]}')[0] == 1
    assert call(["kauffman", "--budget", "2", str(DATA / "L1.json")])[0] == 2
    assert call(["augment", "--brute-force", "--limit", "3", str(DATA / "L1.json")])[0] == 2
    assert call(["dga", "--p", "3"], '{"seam_strands": 1, "events": [{"type": "left_cusp", "k": 2}, {"type": "right_cusp", "k": 1}]}')[0] == 1
    assert call(["gen", "A", "2,x"])[0] == 1


def test_gen_products_and_random():
    data = json.loads(gen("A", "3,2,1"))
    assert data["seam_strands"] == 6
    assert data["orientation"]["components"] == ["+", "+", "+"]
    assert json.loads(gen("A", "2", "--neg", "1"))["orientation"]["components"] == ["+", "-"]
    assert gen("random", "--seed", "4") == gen("random", "--seed", "4")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jetlink.cli", "sharp", str(DATA / "L2.json")], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "certificate=()" in proc.stdout
