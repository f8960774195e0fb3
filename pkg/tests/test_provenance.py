"""The frozen constants must be reproducible from the independent oracle."""

import ast
import importlib.util
import json

from conftest import ASSETS


def load_oracle():
    spec = importlib.util.spec_from_file_location("derive_constants",
                                                  ASSETS / "derive_constants.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_oracle_does_not_use_the_library():
    tree = ast.parse((ASSETS / "derive_constants.py").read_text())
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            assert all(not a.name.startswith("apolarity") for a in node.names)
        if isinstance(node, ast.ImportFrom):
            assert not (node.module or "").startswith("apolarity")


def test_rederive_matches_frozen():
    frozen = json.loads((ASSETS / "derived_constants.json").read_text())
    fresh = json.loads(json.dumps(load_oracle().derive()))
    assert fresh == frozen
