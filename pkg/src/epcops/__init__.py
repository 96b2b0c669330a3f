"""Cops and robber on edge-periodic graphs."""
from .graph import (Edge, EdgePeriodicGraph, GraphError, ParseError, PeriodProfile, PeriodString,
                    edge_present, parse_graph, period_profile, serialize_graph, snapshot)
from .game import Configuration, Round, Strategy, Trace, Turn, simulate, successors
from .solver import (AttractorCop, BestResponseRobber, BudgetExceeded, Outcome, WinSet,
                     evasion_certificate, extract_cop_strategy, robber_best_response,
                     solve_fixpoint, solve_streaming)
from .pca import PcaInstance, pca_solve
from .reductions import reduce_pca_to_directed_cycle, reduce_pca_to_undirected_cycle
from .families import gen_cycle_l1, gen_cycle_l2, random_cycle, table1_strategies
from .chase import ChaseReport, greedy_directed_chase

__version__ = "0.1.0"
