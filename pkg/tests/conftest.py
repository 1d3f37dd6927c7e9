import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kplanes import complete_configuration, four_line_geometry, polygon


@pytest.fixture
def tetrahedron():
    return complete_configuration(4)


@pytest.fixture
def triangle():
    return polygon(3)


@pytest.fixture
def square():
    return polygon(4)


@pytest.fixture
def four_lines():
    return four_line_geometry()
