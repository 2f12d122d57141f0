import pytest

import seifertkit as sk


def test_invariants_of_9_46():
    v = [[3, 2], [1, 0]]
    assert sk.det(v) == -2
    assert sk.knot_determinant(v) == 9
    assert sk.alexander(v) == (0, [2, -5, 2])
    assert sk.alexander(v, canonical=False) == (0, [-2, 5, -2])
    assert sk.h1_double_cover(v) == ([3, 3], 0)
    assert sk.isotropic_vector(v) == (0, 1)
    assert sk.metabolizer_form(v)["a"] == 3
    assert sk.smith_diagonal([[6, 3], [3, 0]]) == [3, 3]
    assert sk.signature([[-2, -1], [-1, -2]]) == -2


def test_big_integers_survive():
    big = 10**30
    assert sk.det([[big, 0], [0, big]]) == big * big


def test_analyze():
    r = sk.analyze("pretzel -5,3,-3")
    assert r["verdict"] == "OBSTRUCTED"
    assert r["seifert"] == [[-1, 2], [1, 0]]
    assert [x["tag"] for x in r["reasons"]] == ["trotter-no-congruence"]
    assert sk.analyze("whitehead + 2", unique_surface=True)["verdict"] == "OBSTRUCTED"
    assert sk.analyze("matrix 0,0;1,0")["verdict"] == "INCONCLUSIVE"


def test_table():
    t = sk.table_screen()
    assert t["survivors"] == ["6_1", "9_46", "10_3", "11n_139"]
    assert len(t["reports"]) == 23


def test_certificates():
    a, k, text = sk.sequiv_pair(5)
    assert (a, k) == (6, -13)
    assert sk.verify_certificate(text)[0]
    assert sk.congruence_classifier(a, 5, a + 1) is None
    assert sk.congruence_classifier(0, 1, 3) == 1
    chain = sk.chain_certificate(2, 3)
    assert sk.verify_certificate(chain) == (True, None, "")
    lines = chain.splitlines()
    lines[1] = lines[1].replace("to=[[", "to=[[7")
    ok, step, _ = sk.verify_certificate("\n".join(lines))
    assert not ok and step == 1
    assert sk.brute_force_congruence([[0, 1], [2, 0]], [[3, 1], [2, 0]], 3) == [[-1, -1], [0, -1]]


def test_errors():
    with pytest.raises(sk.InputError):
        sk.analyze("pretzel 2,3,3")
    with pytest.raises(ValueError):
        sk.sequiv_pair(7)
    with pytest.raises(ValueError):
        sk.alexander([[3, 3], [1, 0]])
