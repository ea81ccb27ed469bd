import pytest

from hlrc.code import build_code, make_plan
from hlrc.gf import field_new
from hlrc.poly import Poly

# Generator matrix of the F_19 example, transcribed column by column.
TOY_MATRIX = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 7, 11, 8, 12, 18, 2, 3, 14, 5, 16, 17, 4, 6, 9, 10, 13, 15),
    (1, 1, 1, 18, 18, 18, 8, 8, 8, 11, 11, 11, 7, 7, 7, 12, 12, 12),
    (1, 1, 1, 1, 1, 1, 7, 7, 7, 7, 7, 7, 11, 11, 11, 11, 11, 11),
    (1, 7, 11, 8, 12, 18, 14, 2, 3, 16, 17, 5, 6, 9, 4, 15, 10, 13),
    (1, 1, 1, 18, 18, 18, 18, 18, 18, 1, 1, 1, 1, 1, 1, 18, 18, 18),
)

_results: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _results


def pytest_terminal_summary(terminalreporter):
    if _results:
        terminalreporter.section("acceptance criteria")
        for line in _results:
            terminalreporter.write_line(line)


def monomial_code(p, e, df, dh, s, lam=2, ell=None):
    F = field_new(p, e)
    return build_code(make_plan(Poly.monomial(F, df), Poly.monomial(F, dh), lam, s, ell))


@pytest.fixture(scope="session")
def gf19():
    return field_new(19)


@pytest.fixture(scope="session")
def gf64():
    return field_new(2, 6)


@pytest.fixture(scope="session")
def toy():
    return monomial_code(19, 1, 2, 3, s=1)


@pytest.fixture(scope="session")
def toy0():
    return monomial_code(19, 1, 2, 3, s=0)
