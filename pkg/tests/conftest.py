import pytest

from kantor import zoo
from kantor.wn import build_h1, build_s2, build_w2sym, build_wn


@pytest.fixture(scope="session")
def wn2():
    return build_wn(2)


@pytest.fixture(scope="session")
def w2sym():
    return build_w2sym()


@pytest.fixture(scope="session")
def s2():
    return build_s2()


@pytest.fixture(scope="session")
def h1():
    return build_h1()


@pytest.fixture(scope="session")
def m7():
    return zoo.malcev_m7()


@pytest.fixture(scope="session")
def matrix2():
    return zoo.matrix_algebra(2)


@pytest.fixture(scope="session")
def sl2():
    return zoo.sl2()


@pytest.fixture(scope="session")
def jordan():
    return zoo.jordan_sym2()


@pytest.fixture(scope="session")
def nilp4():
    return zoo.nilpotent4_example()
