import pathlib

import pytest

PKG_ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = PKG_ROOT / "data"
GOLDENS = pathlib.Path(__file__).resolve().parent / "goldens"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def goldens_dir():
    return GOLDENS


def load_golden(name):
    """Parse a golden dimension table: lines 'HH d0 d1 ...' / 'HC d0 d1 ...'."""
    out = {}
    for line in (GOLDENS / f"{name}.txt").read_text().splitlines():
        if line.startswith("HH ") or line.startswith("HC "):
            key, *vals = line.split()
            out[key] = [int(v) for v in vals]
    return out
