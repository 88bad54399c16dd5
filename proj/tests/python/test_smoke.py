import pytest

import holocert
from holocert import GaussianRational as G


def test_gaussian_rational_arithmetic():
    assert str(G("1+1i") * G("1-1i")) == "2+0i"
    assert G("2-1i") + G("0+2i") == G("2+1i")
    assert str(G("0+2i").inv()) == "0-1/2i"
    z = G("3/2-1/3i")
    assert (z.re, z.im) == ("3/2", "-1/3")
    assert complex(z) == pytest.approx(1.5 - 1j / 3)
    with pytest.raises(holocert.ParseError):
        G("2-i3")


def test_expand_test_point():
    e = holocert.expand(holocert.TEST_POINT)
    assert e["S"]["2"] == "w^2 - 1"
    assert e["c"]["2"] == "-1-1i"
    assert e["c"]["4"] == "1-7i"


def test_conditions_degrees():
    c = holocert.conditions(holocert.TEST_POINT)
    assert c["degrees"] == {"3": 1, "4": 2, "5": 3, "6": 4}


def test_certify_unique_and_deterministic():
    a = holocert.certify_text(holocert.TEST_POINT)
    b = holocert.certify_text(holocert.TEST_POINT)
    assert a == b
    cert = holocert.certify(holocert.TEST_POINT)
    assert cert["verdict"] == "UNIQUE"
    assert cert["numeric"] == {}


def test_nongeneric_rejected():
    bad = dict(holocert.TEST_POINT, lambda1="1/3")
    report = holocert.genericity(bad)
    assert not report["exact_pass"]
    assert not report["checks"]["lambda1_not_in_lattice"]["pass"]
    with pytest.raises(holocert.GenericityError):
        holocert.conditions(bad)
    with pytest.raises(holocert.HolocertError):
        holocert.certify(bad)


def test_config_range():
    with pytest.raises(holocert.ConfigError):
        holocert.certify(holocert.TEST_POINT, radius=2.0)
