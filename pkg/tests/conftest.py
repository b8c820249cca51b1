import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bvcalc.algebra import LElement, LieRinehartAlgebra
from bvcalc.catalog import CATALOG_NAMES, load_catalog
from bvcalc.exterior import Multivector
from bvcalc.poly import PolyElement

settings.register_profile(
    "exact",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=40,
)
settings.load_profile("exact")


def exponent_vectors(m: int, max_degree: int = 3):
    return st.lists(st.integers(min_value=0, max_value=max_degree), min_size=m, max_size=m) \
        .filter(lambda exps: sum(exps) <= max_degree).map(tuple)


def polys(m: int, max_degree: int = 3, max_terms: int = 4):
    coeffs = st.integers(min_value=-9, max_value=9)
    term = st.tuples(exponent_vectors(m, max_degree), coeffs)
    return st.lists(term, max_size=max_terms).map(lambda terms: PolyElement(m, terms))


def lelements(alg: LieRinehartAlgebra, max_degree: int = 2, max_terms: int = 2):
    return st.tuples(*[polys(alg.m, max_degree, max_terms) for _ in range(alg.n)]) \
        .map(lambda cs: LElement(tuple(cs)))


def multivectors(n: int, m: int, max_degree: int = 2, max_terms: int = 2):
    key = st.lists(st.integers(min_value=0, max_value=n - 1), unique=True, max_size=n) \
        .map(lambda ids: tuple(sorted(ids)))
    term = st.tuples(key, polys(m, max_degree, max_terms))
    return st.lists(term, max_size=3).map(lambda terms: Multivector(n, terms))


@pytest.fixture(scope="session")
def catalog():
    return {name: load_catalog(name) for name in CATALOG_NAMES}


@pytest.fixture(scope="session")
def coordinate_2d(catalog):
    return catalog["coordinate-2d"].algebra


@pytest.fixture(scope="session")
def nonabelian_dim2(catalog):
    return catalog["nonabelian-dim2"].algebra


@pytest.fixture(scope="session")
def sl2(catalog):
    return catalog["sl2"].algebra
