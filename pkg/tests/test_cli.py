import io
import json
import subprocess
import sys

import pytest

from specht_lab.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, json.loads(out.getvalue())


def test_winding_example():
    assert call("winding", "--n", "3", "--braid", "1 1") == (0, {"pure": True, "omega": {"12": 1, "13": 0, "23": 0}})


def test_winding_of_non_pure_braid_reports_permutation():
    code, doc = call("winding", "--n", "3", "--braid", "1")
    assert code == 0 and doc == {"pure": False, "permutation": [2, 1, 3]}


def test_membership_rejects_non_pure():
    assert call("membership", "--n", "4", "--subgroup", "N12", "--braid", "1") == (2, {"error": "braid is not pure"})


def test_membership_result():
    code, doc = call("membership", "--n", "4", "--subgroup", "N0", "--braid", "1 1 2 2 1 1")
    assert code == 0 and doc["member"] is False
    code, doc = call("membership", "--n", "3", "--subgroup", "N0", "--braid", "1 1 2 1 1 2")
    assert code == 0 and doc["member"] is True


def test_cohomology_example():
    code, doc = call("cohomology", "--n", "4", "--module", "S1", "--ring", "Z", "--degree", "2")
    assert code == 0
    assert doc["free_rank"] == 0 and doc["torsion"] == [2]
    assert doc["module"] == {"id": "S1", "n": 4, "ring": "Z"}


def test_cohomology_generators_flag():
    code, doc = call("cohomology", "--n", "4", "--module", "M2", "--ring", "Zmod:2", "--degree", "1", "--generators")
    assert code == 0 and len(doc["generators"]) == 2
    assert all(g["degree"] == 1 for g in doc["generators"])


def test_splitting_reports_witness_and_certificate():
    code, doc = call("splitting", "--n", "4", "--map", "pi:3")
    assert code == 0 and doc["splits"] and doc["section_verified"] and doc["ring"] == "Z/3"
    code, doc = call("splitting", "--n", "5", "--map", "f2", "--ring", "Zmod:2")
    assert code == 0 and not doc["splits"] and doc["witness"] is None
    assert doc["certificate"]["H2_torsion"] == [2, 2]


def test_image_index():
    assert call("image-index", "--n", "5", "--map", "f2")[1]["index"] == 48
    assert call("image-index", "--n", "4", "--map", "f1")[1] == {"n": 4, "map": "f1", "index": 4, "formula": 4}


def test_classify():
    assert call("classify", "--n", "4", "--vectors", "1 1 1 1 1 1")[1]["label"] == "N0"
    assert call("classify", "--n", "4", "--braids", "1 1;2 2")[1]["label"] == "PBn"


def test_verify_small_scope_passes_at_n3():
    code, doc = call("verify", "--scope", "paper-full", "--n-max", "3")
    assert code == 0 and doc["failed"] == 0 and doc["passed"] > 0


def test_verify_output_is_byte_stable():
    a, b = io.StringIO(), io.StringIO()
    run(["verify", "--n-max", "3"], out=a)
    run(["verify", "--n-max", "3"], out=b)
    assert a.getvalue() == b.getvalue()


@pytest.mark.parametrize("argv", [
    ["verify", "--scope", "nope"],
    ["verify", "--scope", "paper-full", "--n-max", "7"],
    ["bogus"],
    [],
    ["cohomology", "--n", "4"],
    ["cohomology", "--n", "4", "--module", "S9", "--degree", "1"],
    ["cohomology", "--n", "4", "--module", "S1", "--degree", "3"],
    ["cohomology", "--n", "4", "--module", "S1", "--degree", "1", "--ring", "Q"],
    ["winding", "--n", "3", "--braid", "1 x"],
    ["winding", "--n", "3", "--braid", "5"],
    ["membership", "--n", "4", "--subgroup", "N7", "--braid", "1 1"],
    ["membership", "--n", "3", "--subgroup", "N2", "--braid", "1 1"],
    ["splitting", "--n", "4", "--map", "pi:3", "--ring", "Zmod:2"],
    ["splitting", "--n", "4", "--map", "g1"],
    ["splitting", "--n", "3", "--map", "f1"],
    ["image-index", "--n", "4", "--map", "pi:2"],
    ["classify", "--n", "4", "--vectors", "1 2"],
    ["classify", "--n", "4"],
    ["winding", "--n", "three", "--braid", "1"],
])
def test_usage_errors_exit_2(argv):
    code, doc = call(*argv)
    assert code == 2 and set(doc) == {"error"} and doc["error"]


def test_module_entry_point_and_streams(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "specht_lab", "--cache", str(tmp_path), "-v",
                           "winding", "--n", "3", "--braid", "1 1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pure"] is True
    bad = subprocess.run([sys.executable, "-m", "specht_lab", "cohomology"], capture_output=True, text=True)
    assert bad.returncode == 2 and "error" in json.loads(bad.stdout)


def test_verify_exits_1_on_table_disagreements():
    code, doc = call("verify", "--n-max", "4")
    failed = sorted({(c["id"], c["n"]) for c in doc["checks"] if c["status"] == "FAIL"})
    assert code == 1
    assert failed == [("splitting.f2", 4), ("subgroups.generators.N02", 4)]
