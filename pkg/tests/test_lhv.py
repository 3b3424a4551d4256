import itertools

import pytest

from chainbell.chain import ChainScenario
from chainbell.errors import BudgetExceededError, ShapeMismatchError
from chainbell.lhv import (
    DeterministicStrategy,
    certify_classical_bound,
    classical_vs_quantum_gap,
    strategy_chain_value,
)
from chainbell.quantum import EXTENDED


def brute_force_max_margin(scenario):
    """Independent enumeration with explicit setting labels."""
    n = scenario.n
    alice = list(range(0, 2 * n + (1 if scenario.variant == EXTENDED else -1), 2))
    bob = list(range(1, 2 * n, 2))
    labels = alice + bob
    last = 2 * n if scenario.variant == EXTENDED else 2 * n - 1
    best = None
    for outcomes in itertools.product(range(scenario.d), repeat=len(labels)):
        val = dict(zip(labels, outcomes))
        lhs = sum(val[k] != val[k + 1] for k in range(last))
        rhs = int(val[0] != val[last])
        best = rhs - lhs if best is None else max(best, rhs - lhs)
    return best, scenario.d ** len(labels)


def test_all_equal_strategy():
    s = ChainScenario(3, 3)
    assert strategy_chain_value(DeterministicStrategy((1, 1, 1), (1, 1, 1)), s) == (0, 0)


def test_hand_counted_strategy():
    s = ChainScenario(2, 2)
    # links (0,1), (2,1), (2,3) all differ; closing (0,3) differs
    assert strategy_chain_value(DeterministicStrategy((0, 0), (1, 1)), s) == (3, 1)


def test_single_link_chain():
    s = ChainScenario(3, 1)
    assert strategy_chain_value(DeterministicStrategy((0,), (1,)), s) == (1, 1)


def test_extended_strategy():
    s = ChainScenario(3, 1, EXTENDED)
    # A0=0, B1=1, A2=2: links (0,1), (2,1) differ; closing (0,2) differs
    assert strategy_chain_value(DeterministicStrategy((0, 2), (1,)), s) == (2, 1)


def test_shape_mismatch():
    s = ChainScenario(3, 2)
    with pytest.raises(ShapeMismatchError):
        strategy_chain_value(DeterministicStrategy((0,), (0, 0)), s)
    with pytest.raises(ShapeMismatchError):
        strategy_chain_value(DeterministicStrategy((0, 3), (0, 0)), s)


@pytest.mark.parametrize(
    "d, n, variant",
    [(2, 2, "standard"), (3, 3, "standard"), (3, 1, "standard"), (2, 3, "standard"),
     (3, 2, "standard"), (4, 2, "standard"), (2, 2, EXTENDED), (3, 2, EXTENDED)],
)
def test_certificate_matches_brute_force(d, n, variant):
    s = ChainScenario(d, n, variant)
    cert = certify_classical_bound(s)
    best, count = brute_force_max_margin(s)
    assert cert.max_margin == best == 0
    assert cert.strategies_checked == count
    assert cert.holds
    w = cert.witness
    assert len(set(w.alice_outcomes + w.bob_outcomes)) == 1
    assert strategy_chain_value(w, s) == (0, 0)


def test_certificate_chunking_independent():
    s = ChainScenario(3, 3)
    base = certify_classical_bound(s)
    for chunk in (1, 7, 100, 10**6):
        assert certify_classical_bound(s, chunk_size=chunk) == base


def test_budget():
    with pytest.raises(BudgetExceededError):
        certify_classical_bound(ChainScenario(3, 20))
    with pytest.raises(BudgetExceededError):
        certify_classical_bound(ChainScenario(3, 3), budget=100)


def test_gap():
    assert classical_vs_quantum_gap(ChainScenario(3, 2)) == pytest.approx(0.137159, abs=1e-6)
    assert classical_vs_quantum_gap(ChainScenario(4, 2)) == pytest.approx(0.25, abs=1e-12)
    assert classical_vs_quantum_gap(ChainScenario(3, 1)) == pytest.approx(0.0, abs=1e-12)


def test_certificate_json():
    d = certify_classical_bound(ChainScenario(2, 2)).to_dict()
    assert d["strategiesChecked"] == 16
    assert d["maxMargin"] == 0
    assert d["witness"] == {"aliceOutcomes": [0, 0], "bobOutcomes": [0, 0]}
