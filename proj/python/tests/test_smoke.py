import json

import pytest

import selfshuffle as ss


def test_word():
    assert ss.word("thue-morse", 12) == "011010011001"


def test_search_and_verify():
    out = ss.search("fibonacci", depth=2000)
    assert out["outcome"] == "witness"
    assert ss.verify("fibonacci", out["steering"])
    assert not ss.verify("fibonacci", "2" + out["steering"][1:])


def test_dead_word():
    out = ss.search("0(1)", depth=1000)
    assert out["outcome"] == "dead"


def test_tm_witness():
    assert ss.verify("thue-morse", ss.witness_steering("tm", 4096))


def test_sturmian():
    s = ss.sturmian_steering("(3-sqrt(5))/2", "1/3", 500)
    assert ss.verify("sturmian:(3-sqrt(5))/2:1/3", s)
    with pytest.raises(ss.DomainError):
        ss.sturmian_steering("(3-sqrt(5))/2", "0", 10)


def test_checkers():
    assert ss.abelian_borders("0110") == [1, 2]
    assert ss.shuffling_delay("(3-sqrt(5))/2", "(3-sqrt(5))/2") >= 1


def test_bad_spec():
    with pytest.raises(ss.ParseError):
        ss.word("nonsense", 3)


def test_cli_json():
    code, out, _ = ss.cli(["--format", "json", "word", "fibonacci", "--length", "8"])
    assert code == 0
    assert "01001010" in json.dumps(json.loads(out))
