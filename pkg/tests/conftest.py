import pytest

from skewlog import get_max_terms, set_max_terms, verify_all


@pytest.fixture(autouse=True)
def _restore_term_cap():
    """The CLI honors SKEWLOG_MAX_TERMS by mutating the engine cap; keep that
    from leaking between tests."""
    cap = get_max_terms()
    yield
    set_max_terms(cap)


@pytest.fixture(scope="session")
def full_report():
    """One shared full verification run; building it per-test would dominate runtime."""
    return verify_all()
