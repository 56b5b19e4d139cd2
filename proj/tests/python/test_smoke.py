import itertools

import pytest

import ringlab


def test_catalog_round_trip():
    names = ringlab.catalog_names()
    assert len(names) == 22 and "E3.9" in names
    for name in names:
        r = ringlab.catalog_ring(name)
        back = ringlab.load_document(ringlab.to_document(r))
        assert back == r
        assert back.content_hash() == r.content_hash()
    assert ringlab.catalog_ring("G7").content_hash() == "524e6a3b03d881e5"


def test_zmod_tables_match_python_arithmetic():
    r = ringlab.construct({"op": "zmod", "n": 6})
    for a, b in itertools.product(range(6), repeat=2):
        assert r.add(a, b) == (a + b) % 6
        assert r.mul(a, b) == (a * b) % 6
    assert r.one == 1 and r.pow(5, 3) == 5


def test_radicals_of_z8_and_m2z2():
    assert ringlab.jacobson_radical(ringlab.construct({"op": "zmod", "n": 8})) == [0, 2, 4, 6]
    m2 = ringlab.catalog_ring("M2Z2")
    assert ringlab.prime_radical(m2) == [0]
    assert ringlab.jacobson_radical(m2) == [0]


def test_potent_decomposition_every_element():
    r = ringlab.catalog_ring("E4.6")
    for a in range(len(r)):
        d = ringlab.potent_decomposition(r, a)
        assert r.add(d["p"], d["w"]) == a
        assert r.pow(d["p"], d["potency_exponent"]) == d["p"]
        assert r.pow(d["w"], d["nilpotency_index"]) == 0
    with pytest.raises(ringlab.RingError):
        ringlab.potent_decomposition(r, len(r))


def test_classification_of_t2z3():
    rep = ringlab.classify(ringlab.catalog_ring("E4.6"))
    assert rep["format"] == "ringlab-classification"
    assert rep["classes"]["J-clean-like"] and not rep["classes"]["J-clean"]


def test_checks_and_suite():
    ids = ringlab.check_ids()
    assert ids[0] == "T1.1" and "T4.13" in ids
    rep = ringlab.run_check("T3.3", ringlab.catalog_ring("M2Z2"), name="M2Z2")
    assert rep["verdict"] == "pass"
    suite = ringlab.run_catalog_suite(ids=["T1.1", "E4.6"], threads=2)
    assert suite["summary"]["fail"] == 0 and suite["summary"]["pass"] > 0


def test_bad_recipe_and_cli():
    with pytest.raises(ringlab.RingError):
        ringlab.construct({"op": "warp"})
    with pytest.raises(ringlab.RingError):
        ringlab.construct({"op": "matrix", "base": {"op": "zmod", "n": 2}, "k": 3}, max_order=100)
    code, out, _ = ringlab.cli("--no-cache", "decompose", "Z4", "--element", "2", "--mode", "potent")
    assert code == 0 and out.splitlines()[0] == "p=0 w=2 n=2"
    assert ringlab.cli("frobnicate")[0] == 2
