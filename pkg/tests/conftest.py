import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--heavy",
        action="store_true",
        default=False,
        help="run the heavy acceptance paths (C5xC5 enumeration, rank-4 closure)",
    )


@pytest.fixture
def heavy(request) -> bool:
    return bool(
        request.config.getoption("--heavy") or os.environ.get("ZSLEN_HEAVY") == "1"
    )
