from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from octorb.scalar import GF, Q
from octorb.algebra import DIM, Octo
from octorb.operator import LinMap

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F3, F5, F7 = GF(3), GF(5), GF(7)
FIELDS = [Q, F3, F5, F7]

small_fracs = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))


def values(field):
    if field is Q:
        return small_fracs
    return st.integers(0, field.p - 1)


def octos(field):
    return st.lists(values(field), min_size=DIM, max_size=DIM).map(lambda c: Octo(field, c))


def linmaps(field, density=0.3):
    entry = st.one_of(st.just(0), values(field)) if density < 1 else values(field)
    return st.lists(st.lists(entry, min_size=DIM, max_size=DIM), min_size=DIM, max_size=DIM).map(
        lambda rows: LinMap(field, rows))


@pytest.fixture(params=FIELDS, ids=lambda f: repr(f))
def field(request):
    return request.param
