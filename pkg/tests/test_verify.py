import json
import math

from pknuth import verify
from pknuth.knuth import components
from pknuth.poset import enumerate_orders, from_partition


def test_golden_suite_passes():
    rep = verify.golden_figures()
    assert rep.passed, rep.witnesses
    assert len(rep.details["parts"]) == 7


def test_report_json():
    rep = verify.Report("demo", {"n": 3})
    rep.fail({"word": (1, 2), "values": {3, 1}})
    obj = json.loads(json.dumps(rep.to_json()))
    assert obj["status"] == "fail"
    assert obj["witnesses"] == [{"word": [1, 2], "values": [1, 3]}]


def test_suites_small_n_and_jobs_agree():
    for suite in ("theorem", "conjecture", "oracles"):
        one = verify.run_suite(suite, n=4, jobs=1)
        two = verify.run_suite(suite, n=4, jobs=2)
        assert one.passed and two.passed
        assert one.details == two.details
        assert one.scope == {"n": 4, "orders": 14, "seed": 0}


def test_theorem_mainstrong_n5():
    for P in enumerate_orders(5):
        rep = verify.check_theorem_mainstrong(P)
        assert rep.passed, rep.witnesses


def test_climbing_orders_are_skipped_not_failed():
    P = from_partition((3, 1, 1), 5)
    rep = verify.check_theorem_main(P)
    assert rep.passed and rep.details["skipped"]


def test_ght_fails_on_climbing_order_with_witness():
    P = from_partition((3, 1, 1), 5)
    rep = verify.check_ght_constancy(P)
    assert not rep.passed
    w = rep.witnesses[0]
    assert w["ght_values"] == {2, 3}


def test_harness_totals():
    for n in range(1, 6):
        for P in enumerate_orders(n):
            assert sum(len(c) for c in components(P)) == math.factorial(n)
            assert verify.check_class_sum_total(P).passed


def test_invrel_with_random_inputs():
    for P in enumerate_orders(5):
        rep = verify.check_invrel(P, extra_random=50, seed=1)
        assert rep.passed, rep.witnesses


def test_oracles_sampled_n6():
    P = from_partition((3, 2, 1), 6)
    rep = verify.check_oracles(P, sample=40, seed=2)
    assert rep.passed and rep.scope["sample"] == 40


def test_oracle_lds_and_rsk():
    assert verify.oracle_lds((3, 1, 4, 2, 5)) == 2
    assert verify.oracle_lds((5, 4, 3, 2, 1)) == 5
    assert verify.oracle_rsk_insertion_tableau((3, 1, 2)) == ((1, 2), (3,))
