import warnings

import pytest


@pytest.fixture(autouse=True)
def _quiet_extrapolation_warning():
    # p31 with r in {3, 4} warns that it extends the construction's stated
    # range; the battery exercises those cases on purpose.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        yield
