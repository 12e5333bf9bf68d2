"""P-Knuth equivalence and P-Robinson-Schensted insertion for natural unit
interval orders."""
from .poset import (INF, UnitIntervalOrder, AbstractPoset, from_partition, from_intervals,
                    partition_of, restrict, avoids, is_ladder, is_ladder_climbing, find_climber,
                    enumerate_orders, conjugate, stair)
from .words import des_p, ginv_p, ght_p, finv_p, finv_count, parse_word, format_word
from .tableaux import (is_p_tableau, reading_word, des, superstandard, evacuation, enumerate_syt,
                       enumerate_p_tableaux, finv_p_tab, from_rows, to_rows)
from .knuth import knuth_neighbors, equivalence_class, build_graph, check_d_graph_axioms, components
from .symfunc import (TPoly, QSymElement, SchurExpansion, fundamental, gamma, schur_to_fundamental,
                      expand_in_schur, is_symmetric, is_schur_positive)
from .insertion import phi, psi, prs, inverse_prs, hat, hat_word, hat_chain, StepTrace, PrsResult

__version__ = "0.1.0"
