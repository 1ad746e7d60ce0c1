import pytest

from cycloperm.field import CyclotomicContext, make_field


@pytest.fixture(scope="session")
def f25():
    return make_field(5, 2)


@pytest.fixture(scope="session")
def ctx25d2(f25):
    return CyclotomicContext(f25, 2)


@pytest.fixture(scope="session")
def ctx_cache():
    """Shared (q, d) -> context cache so dlog tables are built once."""
    cache = {}

    def get(q, d):
        if (q, d) not in cache:
            from cycloperm.arith import factorize
            ((p, k),) = factorize(q)
            cache[(q, d)] = CyclotomicContext(make_field(p, k), d)
        return cache[(q, d)]

    return get
