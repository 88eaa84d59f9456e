from pathlib import Path

import pytest
import yaml

from src.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"
EXPECTED = yaml.safe_load((GOLDEN_DIR / "expected.yaml").read_text())


def test_every_document_has_an_expectation():
    documents = {p.stem for p in GOLDEN_DIR.glob("*.yaml")} - {"expected"}
    assert documents == set(EXPECTED)
    assert len(documents) >= 20


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_golden_verdict(name, capsys):
    assert main(["decide", str(GOLDEN_DIR / f"{name}.yaml")]) == 0
    lines = capsys.readouterr().out.splitlines()
    expected = EXPECTED[name]
    assert lines[0] == expected["verdict"]
    if "isomorphism" in expected:
        assert lines[1] == f"isomorphism: {expected['isomorphism']}"
    else:
        assert not lines[1].startswith("isomorphism:")
    if name.startswith("f"):
        assert "caveats:" in lines


@pytest.mark.parametrize(
    "name, verdict",
    [("q5-modular", "false"), ("q7-amalgam", "true:case (g)"), ("f5-free", "true:case (b)")],
)
def test_shipped_configs_decide(name, verdict, capsys):
    path = Path(__file__).parent.parent / "configs" / f"{name}.yaml"
    assert main(["decide", str(path)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == verdict


REPORTS = sorted(p.stem for p in GOLDEN_DIR.glob("*.txt"))


def test_report_files_have_documents():
    assert len(REPORTS) >= 3
    for name in REPORTS:
        assert (GOLDEN_DIR / f"{name}.yaml").exists()
        assert (GOLDEN_DIR / f"{name}.machine").exists()


@pytest.mark.parametrize("name", REPORTS)
def test_text_report_is_byte_exact(name, capsys):
    assert main(["decide", str(GOLDEN_DIR / f"{name}.yaml")]) == 0
    assert capsys.readouterr().out == (GOLDEN_DIR / f"{name}.txt").read_text()


@pytest.mark.parametrize("name", REPORTS)
def test_machine_report_is_byte_exact(name, capsys):
    assert main(["decide", str(GOLDEN_DIR / f"{name}.yaml"), "--format", "machine"]) == 0
    assert capsys.readouterr().out == (GOLDEN_DIR / f"{name}.machine").read_text()
