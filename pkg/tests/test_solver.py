import pytest
from hypothesis import given, settings

from conftest import static_cycle, static_graph
from corpus import small_graphs
from epcops.families import gen_cycle_l2
from epcops.game import Configuration, Positional, Stay, Turn, simulate, successors
from epcops.graph import EdgePeriodicGraph
from epcops.reductions import reduce_pca_to_directed_cycle, reduce_pca_to_undirected_cycle
from epcops.solver import (BudgetExceeded, StrategyError, evasion_certificate, extract_cop_strategy,
                           robber_best_response, solve_fixpoint, solve_streaming)
from oracles import brute_force_cop_winning
from test_game import chase_cop
from test_graph import graphs

# verdicts frozen from oracles.brute_force_cop_winning
ORACLE_CASES = [
    ("edge2", static_graph(2, [(0, 1)]), True, [0, 1]),
    ("C4", static_cycle(4), False, []),
    ("triangle", static_cycle(3), True, [0, 1, 2]),
    ("family-k2", gen_cycle_l2(2), True, list(range(7))),
    ("single-vertex", EdgePeriodicGraph(1, False, ()), True, [0]),
    ("two-isolated", EdgePeriodicGraph(2, False, ()), False, []),
    ("pca-no-undirected", reduce_pca_to_undirected_cycle(["10", "01"]), False, []),
    ("pca-no-directed", reduce_pca_to_directed_cycle(["10", "01"]), False, []),
    ("pca-yes-directed", reduce_pca_to_directed_cycle(["1"]), True, [0, 1, 2]),
]


@pytest.mark.parametrize("name, g, winning, starts", ORACLE_CASES, ids=[c[0] for c in ORACLE_CASES])
def test_oracle_values_are_current(name, g, winning, starts):
    assert brute_force_cop_winning(g) == (winning, set(starts))


@pytest.mark.parametrize("name, g, winning, starts", ORACLE_CASES, ids=[c[0] for c in ORACLE_CASES])
def test_both_solvers_match_frozen_values(name, g, winning, starts):
    outcome, win = solve_fixpoint(g)
    assert outcome.cop_winning is winning
    assert outcome.winning_starts == starts
    stream = solve_streaming(g)
    assert stream.cop_winning is winning
    assert stream.winning_starts == starts
    assert stream.stats["peak_resident_levels"] == 2


def test_six_cycle_solvers_agree(six_cycle):
    outcome, _ = solve_fixpoint(six_cycle)
    assert solve_streaming(six_cycle).winning_starts == outcome.winning_starts
    assert brute_force_cop_winning(six_cycle) == (outcome.cop_winning, set(outcome.winning_starts))


def test_family_start_zero_wins():
    outcome, _ = solve_fixpoint(gen_cycle_l2(2))
    assert outcome.cop_winning and 0 in outcome.winning_starts


def check_winset(g, win):
    n, L = g.n, g.lcm
    for t in range(L):
        for c in range(n):
            for r in range(n):
                for turn, table, ranks in ((Turn.COP, win.cop, win.rank_cop),
                                           (Turn.ROBBER, win.robber, win.rank_robber)):
                    conf = Configuration(c, r, turn, t)
                    member = bool(table[t, c, r])
                    assert member == (ranks[t, c, r] >= 0)
                    if c == r:
                        assert member and ranks[t, c, r] == 0
                        continue
                    succ = successors(g, conf)
                    rk = [win.rank(s) for s in succ]
                    if turn == Turn.COP:
                        ok = any(0 <= x < ranks[t, c, r] for x in rk)
                        assert member == any(win.contains(s) for s in succ)
                    else:
                        ok = all(0 <= x < ranks[t, c, r] for x in rk)
                        assert member == all(win.contains(s) for s in succ)
                    if member:
                        assert ok


@pytest.mark.parametrize("name, g, winning, starts", ORACLE_CASES, ids=[c[0] for c in ORACLE_CASES])
def test_winset_local_conditions(name, g, winning, starts):
    check_winset(g, solve_fixpoint(g)[1])


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4))
def test_solvers_match_oracle_on_random_graphs(g):
    if g.lcm > 12:
        return
    outcome, win = solve_fixpoint(g)
    verdict, starts = brute_force_cop_winning(g)
    assert outcome.cop_winning == verdict and set(outcome.winning_starts) == starts
    assert solve_streaming(g).winning_starts == outcome.winning_starts
    check_winset(g, win)


def test_budgets():
    g = gen_cycle_l2(3)
    with pytest.raises(BudgetExceeded) as info:
        solve_fixpoint(g, budget=100)
    assert info.value.size == 2 * 11 * 11 * 3
    with pytest.raises(BudgetExceeded) as info:
        solve_streaming(g, level_budget=100)
    assert info.value.size == 11 * 11 * 3
    assert solve_fixpoint(g, budget=2 * 11 * 11 * 3)[0].cop_winning


def test_streaming_memory_is_two_levels():
    for g in (gen_cycle_l2(2), reduce_pca_to_undirected_cycle(["10", "01"])):
        stats = solve_streaming(g).stats
        assert stats["peak_resident_levels"] == 2
        assert stats["peak_cells"] == 2 * 2 * g.n * g.n


def test_cop_strategy_edge2(edge2):
    _, win = solve_fixpoint(edge2)
    cop = extract_cop_strategy(edge2, win)
    trace = simulate(edge2, cop, robber_best_response(edge2, win), 10, cop_start=0, robber_start=1)
    assert trace.capture_round == 0 and trace.rounds[0].cop == 1


def test_cop_strategy_family_within_bound():
    g = gen_cycle_l2(2)
    _, win = solve_fixpoint(g)
    trace = simulate(g, extract_cop_strategy(g, win, 0), robber_best_response(g, win),
                     horizon=10 * g.n * g.n * g.lcm, cop_start=0, robber_start=3)
    assert trace.captured and trace.capture_round < g.n * g.n * g.lcm


def test_cop_strategy_requires_cop_win(c4):
    _, win = solve_fixpoint(c4)
    with pytest.raises(StrategyError):
        extract_cop_strategy(c4, win)


def test_cop_strategy_outside_winset_errors():
    g = static_graph(2, [(0, 1)], directed=True)
    outcome, win = solve_fixpoint(g)
    assert outcome.winning_starts == [0]
    outside = Configuration(1, 0, Turn.COP, 0)  # cop cannot go back to 0
    assert not win.contains(outside)
    with pytest.raises(StrategyError):
        extract_cop_strategy(g, win).move(g, outside, None)


def test_robber_evades_on_c4(c4):
    _, win = solve_fixpoint(c4)
    bound = 2 * c4.n * c4.n * c4.lcm
    for cop_start in range(4):
        for cop in (Stay(cop_start), Positional(chase_cop, cop_start)):
            trace = simulate(c4, cop, robber_best_response(c4, win), bound)
            assert not trace.captured and len(trace.rounds) == bound
    assert evasion_certificate(win) == {0: 2, 1: 3, 2: 0, 3: 1}


def test_robber_cannot_escape_edge2(edge2):
    _, win = solve_fixpoint(edge2)
    assert win.cop[0].all()
    assert evasion_certificate(win) == {}


def test_directed_no_instance_has_certificate():
    g = reduce_pca_to_directed_cycle(["10", "01"])
    outcome, win = solve_fixpoint(g)
    cert = evasion_certificate(win)
    assert not outcome.cop_winning and sorted(cert) == list(range(g.n))
    for c, r in cert.items():
        trace = simulate(g, Positional(chase_cop), robber_best_response(g, win),
                         2 * g.n * g.n * g.lcm, cop_start=c, robber_start=r)
        assert not trace.captured


def test_small_graph_corpus_agrees():
    for name, g in small_graphs(count=30):
        outcome, _ = solve_fixpoint(g)
        assert solve_streaming(g).winning_starts == outcome.winning_starts, name


def test_outcome_json(edge2):
    outcome, _ = solve_fixpoint(edge2)
    doc = outcome.to_json()
    assert set(doc) == {"cop_winning", "winning_starts", "rounds_bound", "stats"}
    assert doc["rounds_bound"] == 4
