import pytest

import wonderk


def poly(*terms):
    return {"terms": [{"exp": list(e), "coef": str(c)} for e, c in terms]}


def test_system_basics():
    s = wonderk.System("B2")
    assert (s.type, s.rank, s.order) == ("B2", 2, 8)
    assert len(s.elements()) == 8
    assert len(s.roots()["positive_roots"]) == 4


def test_pgl2_kx():
    s = wonderk.System("A1")
    gs = [{"w": "s", "coef": {"1": 1}}]
    sq = s.kx_multiply(gs, gs)
    assert sq == [{"w": "s", "coef": {"1": 4, "s": -4}}]
    assert s.kx_multiply(sq, gs) == []
    h = {"1": 1, "s": -1}
    assert s.kgb_multiply(h, h) == {"1": 0, "s": 0}


def test_decompose_round_trip():
    s = wonderk.System("A2")
    for v in s.elements():
        f = s.generator(v)
        assert s.is_member(f)
        d = s.decompose(f)
        assert s.assemble(d) == f


def test_non_member():
    s = wonderk.System("A1")
    f = poly(([0, 1], 1))
    assert not s.is_member(f)
    with pytest.raises(wonderk.ValidationError) as e:
        s.decompose(f)
    assert e.value.code == "NotInSubring"


def test_pushdown_matches_kx():
    s = wonderk.System("A1")
    d = s.decompose(s.generator("s"))
    assert s.pushdown(d) == [{"w": "s", "coef": {"1": 1, "s": 0}}]


def test_verify_suites():
    s = wonderk.System("A2")
    reports = s.verify(["prop1.8", "lemma1.9", "two-path-product"])
    assert [r["suite"] for r in reports] == ["prop1.8", "lemma1.9", "two-path-product"]
    assert all(r["pass"] for r in reports)
    assert "membership" in wonderk.suite_names()


def test_errors():
    with pytest.raises(wonderk.ValidationError) as e:
        wonderk.System("E9")
    assert e.value.code == "InvalidCartanLabel"
    with pytest.raises(wonderk.ValidationError) as e:
        wonderk.System("F4").ctable()
    assert e.value.code == "RankBoundExceeded"
    with pytest.raises(wonderk.ValidationError):
        wonderk.System("A1").verify(["nope"])
