from pathlib import Path

import pytest

from zdposet.poset import generate, parse_poset

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def figure1_text() -> str:
    return (DATA / "figure1.poset").read_text()


@pytest.fixture(scope="session")
def figure1(figure1_text):
    return parse_poset(figure1_text)


@pytest.fixture(scope="session")
def boolean_catalog():
    """The Boolean posets the acceptance criteria sweep over."""
    posets = [generate("boolean_lattice", n) for n in range(2, 6)]
    posets += [generate("atom_coatom", k) for k in range(3, 7)]
    return posets
