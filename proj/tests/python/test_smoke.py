import pytest

import ltlteach


AP = ["p", "q"]


def test_eval_word():
    assert ltlteach.eval_word("F q", AP, "{p}.{q}")
    assert not ltlteach.eval_word("G q", AP, "{p}.{q}")


def test_eval_expr():
    assert ltlteach.eval_expr("F p", AP, "{q}^w.{p}.{q}^w")
    assert not ltlteach.eval_expr("sF p", AP, "{p}")


def test_characterize_round_trips_through_fits():
    sample = ltlteach.characterize("sF p & q", AP)
    assert "+ word" in sample and "- expr" in sample
    ok, _ = ltlteach.fits("sF p & q", sample)
    assert ok
    ok, failure = ltlteach.fits("q", sample)
    assert not ok and failure


def test_canonical_set_and_dual():
    assert ltlteach.canonical_set("sF p", AP) == ["{}.{p}"]
    vs = ltlteach.dual(["{p}"], ["p"])
    assert vs == ["{}.{p}^w"]
    assert ltlteach.dual(["{p}"], ["p"], variant="paper") != vs


def test_verify_unique():
    sample = ltlteach.characterize("sF p & q", AP)
    verdict = ltlteach.verify_unique("sF p & q", sample,
                                     ops="sF,F,&,|,true,false", max_size=4)
    assert verdict["status"] == "confirmed"
    assert verdict["examined"] > 0


def test_classify():
    admits, _ = ltlteach.classify("sF,X,&,true")
    assert admits
    rejects, witness = ltlteach.classify("F,&")
    assert not rejects and "F" in witness


def test_teach_learn_round_trip():
    ops = "sF,&,|,true,false"
    sample = ltlteach.teach("sF p", AP, ops)
    assert ltlteach.learn(sample, ops) == "sF p"


def test_adversary():
    sample = "ap: p q\n+ word {p}\n- word {}\n"
    psi, witness = ltlteach.adversary("x-or", sample, "p")
    assert "X" in psi and witness


def test_oracle_and_size_report():
    assert ltlteach.oracle("sF(p & q)", AP, max_len=4) is None
    report = ltlteach.size_report("sF p & sF q", AP)
    assert report["length_bound_ok"]
    assert report["l_max"] == 3


def test_errors():
    with pytest.raises(ValueError):
        ltlteach.eval_word("p U", AP, "{p}")
    with pytest.raises(ValueError):
        ltlteach.characterize("X p", AP)  # outside the monotone fragment
    with pytest.raises(RuntimeError):
        ltlteach.characterize("X X X X p", AP, fragment="x-omega", budget=10)


def test_schematic():
    sample = ltlteach.characterize_schematic("F(p & q)", AP)
    assert "schema" in sample
    ok, _ = ltlteach.fits("F(p & q)", sample)
    assert ok
