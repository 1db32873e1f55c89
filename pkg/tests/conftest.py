import warnings

import pytest

from cnlse_ansatz import AliasingWarning, BRANCHES, REFERENCE_PARAMS, with_branch


@pytest.fixture
def params():
    return REFERENCE_PARAMS


@pytest.fixture(params=sorted(BRANCHES))
def branch_params(request):
    """Reference parameters on each of the four sign branches."""
    sz, sq = BRANCHES[request.param]
    return request.param, with_branch(REFERENCE_PARAMS, sz, sq)


@pytest.fixture
def no_aliasing_warning():
    # the acceptance grids intentionally run above the aliasing bound;
    # the warning is advisory there
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AliasingWarning)
        yield
