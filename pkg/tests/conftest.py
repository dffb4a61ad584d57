"""Shared fixtures: polynomial parsing shorthand and sample files."""
from pathlib import Path

import pytest

from services.sysio import parse_polynomial

SAMPLES = Path(__file__).resolve().parent.parent / 'samples'


@pytest.fixture
def poly():
    """poly('x^2 - 1', 'x y') reads an expression over the listed variables"""
    def build(text, names):
        return parse_polynomial(text, names.split() if isinstance(names, str) else names)
    return build


@pytest.fixture
def samples():
    return SAMPLES


@pytest.fixture
def write_system(tmp_path):
    def write(text, name='system.psys'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
