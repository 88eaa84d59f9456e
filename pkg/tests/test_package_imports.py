import importlib

import pytest

MODULES = [
    "src.errors",
    "src.localfield",
    "src.localfield.config",
    "src.localfield.field",
    "src.localfield.grammar",
    "src.localfield.hensel",
    "src.localfield.residue",
    "src.localfield.scalars",
    "src.psl2",
    "src.psl2.isometry",
    "src.psl2.matrix",
    "src.btree",
    "src.btree.dot",
    "src.btree.probe",
    "src.btree.vertex",
    "src.groupkit",
    "src.groupkit.closure",
    "src.groupkit.identify",
    "src.groupkit.involution",
    "src.decide",
    "src.decide.algorithm",
    "src.decide.analyze",
    "src.decide.verdict",
    "src.examples",
    "src.examples.construct",
    "src.examples.menu",
    "src.examples.traces",
    "src.document",
    "src.report",
    "src.cli",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_imports(name):
    module = importlib.import_module(name)
    assert module.__name__ == name


def test_field_class_builds_after_import():
    from src.localfield.field import LocalField

    assert isinstance(LocalField.__dict__["pi"], property)
