"""
Shared test fixtures
"""

import numpy as np
import pytest

from src.engine.config import EngineConfig
from src.stream.stream_model import BinaryImage


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow tests')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def image(rows):
    """BinaryImage from a list of '0'/'1' strings"""
    return BinaryImage.from_array(np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8))


@pytest.fixture
def engine_config():
    return EngineConfig()


@pytest.fixture
def make_image():
    return image
