import json
from pathlib import Path

import pytest
import sympy as sp

from apolarity.polyring import parse_polynomial

ASSETS = Path(__file__).resolve().parent / "assets"

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def derived():
    return json.loads((ASSETS / "derived_constants.json").read_text())


@pytest.fixture
def perazzo():
    return parse_polynomial("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5)


@pytest.fixture
def fermat():
    return parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5)


def to_sympy(p):
    """Our polynomial as a sympy expression in x0..x{n-1}."""
    xs = sp.symbols(f"x0:{p.nvars}")
    return sp.Add(*[c * sp.Mul(*[x**e for x, e in zip(xs, m)]) for m, c in p.terms.items()])


def same_poly(p, text):
    return sp.expand(to_sympy(p) - sp.sympify(text)) == 0


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
