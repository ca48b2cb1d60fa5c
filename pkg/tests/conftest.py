import pytest

from ffzeta.gf import GF, poly_from_str
from ffzeta.ring import RingSpec


def _cab(field, c0, c1, name):
    return RingSpec.cab(field, (poly_from_str(field, c0),
                                poly_from_str(field, c1)), name=name)


@pytest.fixture(scope="session")
def ex26():
    """y^2 + (x^2+x+1) y = (x^2+x+1)(x^5+x^2+1) over F_2, genus 3."""
    return _cab(GF(2), "x^7 + x^6 + x^5 + x^4 + x^3 + x + 1", "x^2 + x + 1",
                "ex26")


@pytest.fixture(scope="session")
def ex36():
    """y^2 = x^5 + 2x over F_3, genus 2."""
    return _cab(GF(3), "2*x^5 + x", "0", "ex36")


@pytest.fixture(scope="session")
def h4g3():
    """y^2 + (x^2+x) y = (x^2+x)(x^5+x^3+x^2+x+1) over F_2: h = 4, g = 3."""
    return _cab(GF(2), "x^7 + x^6 + x^5 + x", "x^2 + x", "h4g3")


@pytest.fixture(scope="session")
def h4g3_classes(h4g3):
    from ffzeta.ideals import class_group
    return class_group(h4g3)
