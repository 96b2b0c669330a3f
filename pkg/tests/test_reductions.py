import math
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epcops.pca import pca_solve
from epcops.reductions import reduce_pca_to_directed_cycle, reduce_pca_to_undirected_cycle
from epcops.graph import is_cycle
from epcops.solver import solve_fixpoint
from oracles import brute_force_cop_winning


def taus(g):
    return {e.pair: str(e.tau) for e in g.edges}


def test_undirected_strings_m1():
    g = reduce_pca_to_undirected_cycle(["1"])
    # l0=0, l1=1, r0=2, r1=3
    assert taus(g) == {(0, 3): "00101", (1, 2): "01001", (0, 1): "10011", (2, 3): "10011"}


def test_directed_strings_m1():
    g = reduce_pca_to_directed_cycle(["1"])
    # v0=0, v1=1, s=2
    assert taus(g) == {(1, 2): "0100", (2, 0): "0001", (0, 1): "1011"}


def test_undirected_strings_m2():
    g = reduce_pca_to_undirected_cycle(["10", "0"])
    t = taus(g)
    assert t[(0, 5)] == "00" + "01" + "00" + "1"
    assert t[(2, 3)] == "00" + "10" + "00" + "1"
    assert t[(0, 1)] == t[(3, 4)] == "1100111" + "1100001"
    assert t[(1, 2)] == t[(4, 5)] == "1100001"


def test_directed_strings_m2():
    g = reduce_pca_to_directed_cycle(["10", "0"])
    t = taus(g)
    assert t[(2, 3)] == "001000"
    assert t[(3, 0)] == "000001"
    assert t[(0, 1)] == "110111" + "000111"
    assert t[(1, 2)] == "000111"


def test_empty_instance_rejected():
    with pytest.raises(ValueError):
        reduce_pca_to_undirected_cycle([])
    with pytest.raises(ValueError):
        reduce_pca_to_directed_cycle([])


@pytest.mark.parametrize("build", [reduce_pca_to_undirected_cycle, reduce_pca_to_directed_cycle])
@pytest.mark.parametrize("x, winning", [(["1"], True), (["10", "01"], False), (["110", "10"], True)])
def test_verdicts(build, x, winning):
    g = build(x)
    assert brute_force_cop_winning(g)[0] is winning
    assert solve_fixpoint(g)[0].cop_winning is winning


def test_singleton_all_zero_breaks_undirected_equivalence():
    # With m = 1 the bridge timing lets the cop reach l_m one step after
    # crossing, so the no-instance {"0"} still yields a cop-winning cycle.
    for x in (["0"], ["00"], ["000"]):
        assert pca_solve(x) is None
        assert brute_force_cop_winning(reduce_pca_to_undirected_cycle(x))[0]
        assert not brute_force_cop_winning(reduce_pca_to_directed_cycle(x))[0]
    # duplicating the string (m = 2) restores the equivalence
    assert not solve_fixpoint(reduce_pca_to_undirected_cycle(["0", "0"]))[0].cop_winning


instances = st.lists(st.text(alphabet="01", min_size=1, max_size=4), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(instances)
def test_structure(x):
    m = len(x)
    lcm_x = reduce(math.lcm, map(len, x), 1)
    gu = reduce_pca_to_undirected_cycle(x)
    assert gu.n == len(gu.edges) == 2 * m + 2
    assert is_cycle(gu) and not gu.directed
    assert all(len(e.tau) % (2 * m + 3) == 0 for e in gu.edges)
    assert gu.lcm == (2 * m + 3) * lcm_x
    gd = reduce_pca_to_directed_cycle(x)
    assert gd.n == len(gd.edges) == m + 2
    assert is_cycle(gd) and gd.directed
    assert all(len(e.tau) % (2 * m + 2) == 0 for e in gd.edges)
    assert gd.lcm == (2 * m + 2) * lcm_x


def test_duplicates_allowed():
    g = reduce_pca_to_directed_cycle(["1", "1"])
    assert g.n == 4 and solve_fixpoint(g)[0].cop_winning
