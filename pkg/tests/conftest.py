"""Shared fixtures and hypothesis strategies for the test suite."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from virfock.scalars import GF, QQ
from virfock.verma import verma_module

settings.register_profile(
    "exact",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

ODD_PRIMES = (3, 5, 7, 11, 13)


def fractions(max_num: int = 40, max_den: int = 12):
    """Small exact rationals; denominators stay modest so F_p images exist
    for most sampled primes."""
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def fp_elements(p: int):
    ring = GF(p)
    return st.integers(min_value=0, max_value=p - 1).map(ring.of_int)


@pytest.fixture(scope="session")
def ising_modules():
    """The three c = 1/2 modules over Q, shared so memo tables warm once."""
    return {
        h: verma_module(Fraction(1, 2), h, QQ)
        for h in (Fraction(0), Fraction(1, 2), Fraction(1, 16))
    }
