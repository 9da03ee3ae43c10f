from __future__ import annotations

import pytest
from loguru import logger


@pytest.fixture(autouse=True)
def _quiet_gpla_logs():
    """Undo any `setup_logging` a test performed; its sink may outlive the capture."""
    yield
    logger.remove()
    logger.disable("gpla")
