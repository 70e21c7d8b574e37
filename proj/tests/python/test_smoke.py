import os

import pytest

import vcat

DATA = os.environ.get("VCAT_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_load_and_inspect():
    s = vcat.load_space(os.path.join(DATA, "t3.space"))
    assert s.name == "t3"
    assert s.size == 3
    assert s.base == "rplus"
    assert not s.symmetric
    assert s.dist("a", "b") == "1"
    assert s.dist("c", "a") == "5"
    assert vcat.validate_space(s) == []


def test_round_trip():
    s = vcat.example_t3()
    again = vcat.parse_space(vcat.format_space(s))
    assert again.name == s.name
    assert vcat.spaces_isomorphic(again, s)


def test_complete_sizes():
    t3 = vcat.example_t3()
    full = vcat.complete(t3, "p1")
    assert full["result"].size == 7
    assert full["embedding"]["a"] == "{a}"
    names = {p["name"] for p in full["points"]}
    assert "{a,b}" in names

    directed = vcat.complete(t3, "p2")
    assert directed["result"].size == 3
    assert vcat.spaces_isomorphic(directed["result"], t3)


def test_completeness_and_flatness():
    t3 = vcat.example_t3()
    assert not vcat.is_complete(t3, "p1")
    assert vcat.is_complete(t3, "p2")

    assert vcat.is_flat(t3, ["0", "0", "4"], "p1")
    assert not vcat.is_flat(t3, ["0", "0", "4"], "p2")
    oracle = vcat.flatness_oracle(t3, ["0", "0", "4"], "p2")
    assert oracle["flat"] is False
    assert oracle["witness"]


def test_filters():
    t3 = vcat.example_t3()
    assert vcat.filter_distance(t3, ["a", "b"], ["b"]) == "1"
    assert vcat.filter_distance(t3, ["b"], ["a", "b"]) == "0"
    ladder = vcat.filter_flatness(t3, ["a", "b"])
    assert ladder["weakly_flat"] and not ladder["flat"]
    assert ladder["diameter"] == "2"


def test_zero_quotient():
    q = vcat.zero_quotient(vcat.example_z2())
    assert q["space"].size == 1
    assert sorted(q["classes"][0]) == ["p", "q"]


def test_bool_side():
    anti = vcat.example_antichain2()
    assert vcat.bridge_check(anti, "p1")
    assert vcat.bridge_check(anti, "p2")
    enc = vcat.bool_encode(anti)
    assert enc.base == "rplus"
    assert enc.dist("x", "y") == "inf"


def test_errors():
    with pytest.raises(vcat.ParseError):
        vcat.parse_space("space broken over rplus\n")
    with pytest.raises(ValueError):
        vcat.complete(vcat.example_t3(), "p9")
    with pytest.raises(vcat.BudgetExceededError):
        vcat.flatness_oracle(vcat.example_t3(), ["0", "0", "4"], "p1", 1)
