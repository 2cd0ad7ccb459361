import os
from pathlib import Path

import gnerve

DATA = Path(os.environ.get("GNERVE_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_corpus_and_counts():
    assert "constant-top on 3-chain" in gnerve.corpus_names()
    assert gnerve.nerve_counts("constant-top on 3-chain") == {
        "objects": 3, "horizontal": 6, "vertical": 9, "squares": 36}
    assert gnerve.nerve_counts("constant-top on 3-chain", "embedding")["vertical"] == 6


def test_axioms_pass():
    for theory in ("kleisli", "embedding", "splitepi"):
        results = dict(gnerve.axioms("closure on diamond", theory))
        assert all(s == "pass" for s in results.values()), results


def test_cli_exit_codes():
    assert gnerve.run(["validate", str(DATA / "constant_top.json")])[0] == 0
    assert gnerve.run(["validate", str(DATA / "broken_mu.json")])[0] == 1
    assert gnerve.run(["validate", str(DATA / "malformed.json")])[0] == 2


def test_machine_report(tmp_path):
    rc, report = gnerve.check("nerve", DATA / "constant_top.json", tmp_path / "n.json")
    assert rc == 0
    assert report["tool"] == "gnerve" and report["version"] == gnerve.__version__
    assert all(c["status"] == "pass" for c in report["checks"] if c["required"])
    assert (tmp_path / "n.json").exists()
