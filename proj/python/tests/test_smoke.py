from fractions import Fraction

import pytest

import pysds

CYCLIC = "x1^4*x2^2 - x1^3*x2*x3^2 + x2^4*x3^2 - x1^2*x2^3*x3 + x1^2*x3^4 - x1*x2^2*x3^3"


def test_parse_and_render():
    f = pysds.parse_form("x1^2 - 2*x1*x2 + x2^2")
    assert f.variables == 2
    assert f.degree == 2
    assert str(f) == "x1^2 - 2*x1*x2 + x2^2"
    assert sorted(f.terms()) == [([0, 2], "1/1"), ([1, 1], "-2/1"), ([2, 0], "1/1")]
    assert f.evaluate(["3", "1/2"]) == "25/4"
    assert pysds.parse_form("2*x1 + 4*x2").content_normalize() == pysds.parse_form("x1 + 2*x2")


def test_parse_errors():
    with pytest.raises(ValueError):
        pysds.parse_form("x1 + x2^2")
    with pytest.raises(pysds.ParseError):
        pysds.parse_form("x1^2 + * x2^2")


def test_majorization():
    assert pysds.majorizes([3, 1, 1], [2, 1, 2])
    assert not pysds.majorizes([3, 4, 1], [4, 2, 2])
    assert pysds.majorizes_under([3, 4, 1], [4, 2, 2], [2, 1, 3])
    assert pysds.separating_point([3, 4, 1], [4, 2, 2], [1, 2, 3]) == [2, 1, 1]


def test_matrices():
    assert pysds.build_B([1, 3, 2], [2, 3, 5]) == [[2, 3, 5], [0, 0, 5], [0, 3, 5]]
    assert pysds.build_K(["1", "1/2"]) == [[1, Fraction(1, 2)], [0, Fraction(1, 2)]]
    image = pysds.apply_substitution("x1^2 - 2*x1*x2 + x2^2", pysds.build_B([1, 2], [1, 1]))
    assert str(image) == "x1^2"


def test_check_verdicts():
    psd = pysds.check("x1^2 - 2*x1*x2 + x2^2", max_depth=5)
    assert psd["verdict"] == "psd"
    assert psd["depth"] == 1

    neg = pysds.check("x1^2 - 3*x1*x2 + x2^2", max_depth=5)
    assert neg["verdict"] == "not_psd"
    assert neg["witness"]["point"] == [2, 1]
    assert neg["witness"]["value"] == -1

    cyc = pysds.check(CYCLIC, matrix="gn", max_depth=2, check_necessary=True)
    assert cyc["verdict"] == "inconclusive"
    assert cyc["necessary"]["holds"] is False


def test_necessary_and_persistent():
    report = pysds.necessary_condition(CYCLIC)
    assert report["holds"] is False
    assert {"term": [3, 1, 2], "ordering": [1, 3, 2]} in report["violations"]
    for m in range(1, 4):
        assert pysds.persistent_coefficient(CYCLIC, [1, 3, 2], [1, 1, 1], m, [3, 1, 2]) == -1
