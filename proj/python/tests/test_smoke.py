import pytest

import tangentia as tg


def test_ring_and_polynomials():
    R = tg.ring(["x", "y"])
    assert R.names == ["x", "y"]
    p = tg.Polynomial(R, "x^2 - y") * tg.Polynomial(R, "x + y")
    assert str(p) == "x^3 + x^2*y - x*y - y^2"
    assert p.total_degree == 3


def test_groebner_and_membership():
    R = tg.ring(["x", "y", "z"], order="lex")
    I = tg.Ideal(R, ["x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"])
    assert I.dimension() == 0
    assert I.groebner_basis()[-1] == "z^6 - 4*z^4 + 4*z^3 - z^2"
    assert I.eliminate(["x", "y"]).generators == ["z^6 - 4*z^4 + 4*z^3 - z^2"]
    assert I.contains("x^2 + y + z - 1")


def test_conic_dual():
    R = tg.ring(["x0", "x1", "x2"])
    D = tg.dual_variety(tg.projective(R, ["x0*x2 - x1^2"]))
    assert D.ring.names == ["y0", "y1", "y2"]
    assert D.dim() == 1 and D.degree() == 2
    assert D.ideal.same_ideal(tg.Ideal(D.ring, ["y1^2 - 4*y0*y2"]))


def test_twisted_cubic():
    R = tg.ring(["x0", "x1", "x2", "x3"])
    X = tg.projective(R, ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"])
    assert tg.dual_variety(X).degree() == 4
    assert tg.bidual_check(X)
    assert tg.r_of(X) == 1
    assert tg.bitangent_osculating(["1", "t", "t^2", "t^3"])["pairs"] == []


def test_veronese_cone():
    v = tg.veronese_cone_stratum(3, 4)
    assert (v["ambient_dim"], v["stratum_dim"], v["span_dim"], v["scheme_span_bound"]) == (34, 17, 22, 11)
    assert v["violated"]


def test_errors():
    R = tg.ring(["x", "y"])
    with pytest.raises(tg.ParseError):
        tg.Polynomial(R, "x *")
    with pytest.raises(tg.InputError):
        tg.projective(R, ["x^2 - y"])
    assert issubclass(tg.ParseError, tg.Error)


def test_run_script():
    records, code, error = tg.run("ring R = [x0, x1, x2];\nideal I = x0*x2 - x1^2;\nD = dual I;\n")
    assert code == 0 and error == ""
    assert [r["kind"] for r in records] == ["ring", "ideal", "dual"]
    assert records[2]["dims"]["proj_dim"] == 1
    assert records[2]["result"]["ideal"] == ["y1^2 - 4*y0*y2"]
    _, code, error = tg.run("ring R = [x];\nideal I = x *;\n")
    assert code == 1 and "line 2" in error
