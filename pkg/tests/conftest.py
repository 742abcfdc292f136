import pytest
from hypothesis import settings, strategies as st

from ivpoly import _pykernels, kernels
from ivpoly.exact_rings import IntPoly
from ivpoly.matrices import IntMatrix

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def int_polys(max_deg=8, bound=50):
    return st.lists(st.integers(-bound, bound), max_size=max_deg + 1).map(IntPoly)


def monic_polys(min_deg=1, max_deg=5, bound=20):
    return st.lists(st.integers(-bound, bound), min_size=min_deg, max_size=max_deg).map(
        lambda c: IntPoly(c + [1])
    )


def int_matrices(n, bound=9):
    return st.lists(
        st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n
    ).map(IntMatrix.of)


BACKENDS = [pytest.param(_pykernels, id="python")]
if kernels._ckernels is not None:
    BACKENDS.append(pytest.param(kernels._ckernels, id="cython"))


@pytest.fixture(params=BACKENDS, scope="session")
def backend(request):
    return request.param
