import warnings

import pytest

from smallworld.errors import LatticeScaleWarning


@pytest.fixture(autouse=True)
def _silence_scale_warning():
    # Many tests deliberately use small n relative to k; the scale warning
    # is under test only where explicitly asserted.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LatticeScaleWarning)
        yield
