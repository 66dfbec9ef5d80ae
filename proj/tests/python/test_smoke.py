from fractions import Fraction

import pytest

import qdyn


@pytest.fixture
def H():
    return qdyn.Algebra()


def test_fixed_points_of_quadratic(H):
    f = H.poly("x^2 + (i + 1)*x + 1 + i*j")
    res = qdyn.fixed_points(f)
    assert res["companion"] == "x^4 + 3*x^2 + 2"
    assert [s["point"] for s in res["result"]] == ["-j", "-i - j"]
    assert [(c["T"], c["N"]) for c in res["classes"]] == [("0", "1"), ("0", "2")]


def test_companion_and_numeric_roots(H):
    g = H.poly("x^2 + i*x + 1")
    assert qdyn.companion(g) == "x^4 + 3*x^2 + 1"
    res = qdyn.roots(g, mode="numeric")
    assert len(res["result"]) == 2
    assert all(s["residual"] <= 1e-9 for s in res["result"])
    assert qdyn.roots(g)["unresolved_factor"] == "x^4 + 3*x^2 + 1"


def test_composition_and_iteration(H):
    f = H.poly("i*x^2")
    lam = H.element("1 + j")
    assert str(f.iterate(2)) == "(-i)*x^4"
    assert f.iterate(2)(lam) == H.element("4*i")
    assert f.star_eval(lam, 2) == H.element("-4*i")
    points, flags = f.orbit(lam, 2, "compose")
    assert [str(p) for p in points] == ["2*k", "4*i"]
    assert flags == [False, False]


def test_certification(H):
    v = H.poly("x^2 + i").certify_periodic(H.element("-i"), 2)
    assert v["status"] == "CertifiedPeriodic"
    H5 = qdyn.Algebra("quat:-1,-1@Q(s5)")
    lam = H5.element(
        "-1 + (133/362*s5 - 333/362)*i - (14/181*s5 + 165/181)*j - (26/181*s5 + 22/181)*k")
    v = H5.poly("x^2 + (i + 1)*x + 1 + i*j").certify_periodic(lam, 2, n_max=2)
    assert v["status"] == "RefutedAt" and v["n"] == 2 and v["r_fixed"]


# Independent octonion arithmetic for the composition check.
def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0*b0 - a1*b1 - a2*b2 - a3*b3, a0*b1 + a1*b0 + a2*b3 - a3*b2,
            a0*b2 - a1*b3 + a2*b0 + a3*b1, a0*b3 + a1*b2 - a2*b1 + a3*b0)


def _qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def _omul(x, y):
    q, r, s, t = x[:4], x[4:], y[:4], y[4:]
    lo = [u - v for u, v in zip(_qmul(q, s), _qmul(_qconj(t), r))]
    hi = [u + v for u, v in zip(_qmul(t, q), _qmul(r, _qconj(s)))]
    return tuple(lo + hi)


def _pmul(f, g):
    out = [(Fraction(0),) * 8 for _ in range(len(f) + len(g) - 1)]
    for a, x in enumerate(f):
        for b, y in enumerate(g):
            out[a + b] = tuple(u + v for u, v in zip(out[a + b], _omul(x, y)))
    return out


def test_octonion_example_against_python_oracle():
    O = qdyn.Algebra("oct:-1,-1,-1@Q")
    f = O.poly("l*x^2 + (1 - i*l)*x + l - (i*j)*l")
    coeffs = [tuple(Fraction(c) for c in e.coords()) for e in f.coeffs()]
    acc = [(Fraction(0),) * 8]
    power = [(Fraction(1),) + (Fraction(0),) * 7]
    for n, c in enumerate(coeffs):
        if n:
            power = _pmul(power, coeffs)
        term = _pmul([c], power)
        acc += [(Fraction(0),) * 8] * (len(term) - len(acc))
        acc = [tuple(u + v for u, v in zip(a, b)) for a, b in zip(acc, term)]
    ff = f.iterate(2)
    assert [tuple(Fraction(c) for c in e.coords()) for e in ff.coeffs()] == acc

    rep = qdyn.octonion_fixed_check(f, O.element("j"), 3)
    assert rep["fixed"] and rep["first_failure"] == 2


def test_errors_and_cli(H):
    with pytest.raises(qdyn.ParseError):
        H.poly("x + y")
    with pytest.raises(qdyn.MathError):
        qdyn.fixed_points(H.poly("x"))
    with pytest.raises(qdyn.MathError):
        H.element("0").inv()
    code, doc = qdyn.cli("compose", "--poly", "i*x^2", "--n", 2)
    assert code == 0 and doc["result"] == "(-i)*x^4"
    code, doc = qdyn.cli("roots", "--poly", "x +")
    assert code == 2 and doc["error"]["kind"] == "parse"
