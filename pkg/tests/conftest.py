import pytest
from hypothesis import settings, strategies as st

from cluster_demazure.exactalg import LaurentMono, LaurentPoly, Var
from cluster_demazure.exactalg import _kernels_py

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

try:
    from cluster_demazure.exactalg import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))

VARS = [Var.torus(1), Var.torus(2)] + [Var.y(s, j) for s in (1, 2, 3) for j in (1, 2, 3)]


@st.composite
def monos(draw, max_vars=3):
    chosen = draw(st.lists(st.sampled_from(VARS), max_size=max_vars, unique=True))
    exps = {v: draw(st.integers(-3, 3)) for v in chosen}
    return LaurentMono(exps)


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.lists(st.tuples(st.integers(-4, 4), monos()), max_size=max_terms))
    return LaurentPoly.from_terms(terms)


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param
