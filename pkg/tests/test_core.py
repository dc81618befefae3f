from fractions import Fraction

import pytest

from emrank.core import (
    AlternativeId,
    CredibilityMatrix,
    CriterionSpec,
    Direction,
    FlowTable,
    PerformanceTable,
    Relation,
    directed_difference,
    flows,
    preference_degree,
    preference_index,
    rank_complete,
    rank_partial,
)
from emrank.errors import ConfigurationError, DataError, UsageError
from emrank.preference import Usual, VShape


def table_of(scores, directions=None, weights=None):
    """Small helper: scores as lists of ints, one row per alternative."""
    m = len(scores)
    n = len(scores[0])
    directions = directions or [Direction.MAXIMIZE] * n
    weights = weights or [Fraction(1, n)] * n
    alts = tuple(AlternativeId(f"a{i}") for i in range(m))
    crits = tuple(
        CriterionSpec(id=f"c{j}", weight=weights[j], direction=directions[j]) for j in range(n)
    )
    rows = tuple(tuple(Fraction(v) for v in row) for row in scores)
    return PerformanceTable(alts, crits, rows)


class TestPreferenceDegree:
    def test_usual_examples(self):
        assert preference_degree(Fraction(0), Usual()) == 0
        assert preference_degree(Fraction(1, 2), Usual()) == 1
        assert preference_degree(Fraction(-3), Usual()) == 0

    def test_vshape_halfway(self):
        assert preference_degree(Fraction(1), VShape(p=Fraction(2))) == Fraction(1, 2)


class TestDirectedDifference:
    def test_maximize(self):
        t = table_of([[3], [1]])
        assert directed_difference(t, 0, 0, 1) == 2

    def test_minimize_flips_sign(self):
        t = table_of([[3], [1]], directions=[Direction.MINIMIZE])
        assert directed_difference(t, 0, 0, 1) == -2

    def test_self_difference_is_zero(self):
        t = table_of([[3], [1]])
        assert directed_difference(t, 0, 1, 1) == 0

    def test_out_of_range_indices(self):
        t = table_of([[3], [1]])
        with pytest.raises(UsageError):
            directed_difference(t, 5, 0, 1)
        with pytest.raises(UsageError):
            directed_difference(t, 0, 0, 9)


class TestPreferenceIndex:
    def test_unanimous_strict_preference(self):
        t = table_of([[3, 3], [1, 1]])
        pi = preference_index(t)
        assert pi.values[0][1] == 1
        assert pi.values[1][0] == 0

    def test_split_criteria(self):
        t = table_of([[3, 1], [1, 3]])
        pi = preference_index(t)
        assert pi.values[0][1] == Fraction(1, 2)
        assert pi.values[1][0] == Fraction(1, 2)

    def test_identical_rows(self):
        t = table_of([[2, 2], [2, 2]])
        pi = preference_index(t)
        assert pi.values[0][1] == 0
        assert pi.values[1][0] == 0

    def test_diagonal_is_zero(self):
        t = table_of([[4, 0], [0, 4]])
        pi = preference_index(t)
        assert pi.values[0][0] == 0 and pi.values[1][1] == 0

    def test_step_functions_keep_mutual_sum_at_most_one(self):
        t = table_of([[4, 0, 2], [0, 4, 2]])
        pi = preference_index(t)
        assert pi.values[0][1] + pi.values[1][0] <= 1


class TestFlows:
    def test_total_dominance_two_alternatives(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        pi = CredibilityMatrix(alts, ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0))))
        flow = flows(pi)
        assert flow.net == (Fraction(1), Fraction(-1))

    def test_all_zero_matrix(self):
        alts = (AlternativeId("a"), AlternativeId("b"), AlternativeId("c"))
        zero = Fraction(0)
        pi = CredibilityMatrix(alts, ((zero,) * 3,) * 3)
        flow = flows(pi)
        assert flow.positive == (zero, zero, zero)
        assert flow.net == (zero, zero, zero)

    def test_three_cycle_cancels_out(self):
        alts = tuple(AlternativeId(x) for x in "abc")
        one, zero = Fraction(1), Fraction(0)
        pi = CredibilityMatrix(
            alts,
            ((zero, one, zero), (zero, zero, one), (one, zero, zero)),
        )
        flow = flows(pi)
        assert flow.positive == (Fraction(1, 2),) * 3
        assert flow.negative == (Fraction(1, 2),) * 3
        assert flow.net == (zero, zero, zero)

    def test_net_flows_sum_to_zero(self):
        t = table_of([[4, 1, 0], [2, 2, 2], [0, 3, 4]])
        flow = flows(preference_index(t))
        assert sum(flow.net) == 0


class TestRankComplete:
    def test_two_alternatives(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        flow = FlowTable.from_net(alts, [1, -1])
        ranking = rank_complete(flow)
        assert ranking.class_ids() == (("a",), ("b",))

    def test_total_indifference_is_one_class(self):
        alts = tuple(AlternativeId(x) for x in "abc")
        flow = FlowTable.from_net(alts, [0, 0, 0])
        ranking = rank_complete(flow)
        assert ranking.class_ids() == (("a", "b", "c"),)

    def test_published_six_way_ranking_with_three_way_tie(self):
        names = ("PERA", "GIM", "CIMOSA", "GERAM", "GRAI", "MERISE")
        nets = ["0.078", "0.033", "-0.022", "-0.022", "-0.022", "-0.045"]
        flow = FlowTable.from_net(tuple(AlternativeId(n) for n in names), nets)
        ranking = rank_complete(flow)
        assert ranking.class_ids() == (("PERA",), ("GIM",), ("CIMOSA", "GERAM", "GRAI"), ("MERISE",))

    def test_ties_keep_input_order(self):
        alts = tuple(AlternativeId(x) for x in ("z", "m", "a"))
        flow = FlowTable.from_net(alts, [0, 0, 1])
        ranking = rank_complete(flow)
        assert ranking.class_ids() == (("a",), ("z", "m"))


class TestRankPartial:
    def test_clear_preference(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        flow = FlowTable(alts, (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(-1)))
        partial = rank_partial(flow)
        assert partial.relation(0, 1) is Relation.PREFER
        assert partial.relation(1, 0) is not Relation.PREFER  # preference is one-way

    def test_crossed_flows_are_incomparable(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        flow = FlowTable(
            alts,
            (Fraction(3, 4), Fraction(1, 2)),
            (Fraction(1, 2), Fraction(1, 4)),
            (Fraction(1, 4), Fraction(1, 4)),
        )
        partial = rank_partial(flow)
        assert partial.relation(0, 1) is Relation.INCOMPARABLE
        assert partial.relation(1, 0) is Relation.INCOMPARABLE

    def test_identical_flow_pairs_are_indifferent(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        half = Fraction(1, 2)
        flow = FlowTable(alts, (half, half), (half, half), (Fraction(0), Fraction(0)))
        partial = rank_partial(flow)
        assert partial.relation(0, 1) is Relation.INDIFFERENT
        assert partial.relation(1, 0) is Relation.INDIFFERENT

    def test_diagonal_is_self(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        flow = FlowTable.from_net(alts, [1, -1])
        partial = rank_partial(flow)
        assert partial.relation(0, 0) is Relation.SELF


class TestValidation:
    def test_single_alternative_rejected(self):
        with pytest.raises(UsageError, match="two alternatives"):
            table_of([[1]])

    def test_dimension_mismatch_rejected(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        crits = (CriterionSpec(id="c"),)
        with pytest.raises(UsageError):
            PerformanceTable(alts, crits, ((Fraction(1), Fraction(2)), (Fraction(1),)))

    def test_duplicate_alternative_id_rejected(self):
        alts = (AlternativeId("a"), AlternativeId("a"))
        crits = (CriterionSpec(id="c"),)
        with pytest.raises(DataError) as err:
            PerformanceTable(alts, crits, ((Fraction(1),), (Fraction(2),)))
        assert err.value.code == "DUPLICATE_ID"

    def test_all_zero_weights_rejected(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        crits = (CriterionSpec(id="c", weight=Fraction(0)),)
        with pytest.raises(ConfigurationError):
            PerformanceTable(alts, crits, ((Fraction(1),), (Fraction(2),)))

    def test_negative_weight_rejected(self):
        with pytest.raises(ConfigurationError):
            CriterionSpec(id="c", weight=Fraction(-1))

    def test_weights_normalize_to_one(self):
        t = table_of([[1, 2, 3], [3, 2, 1]], weights=[Fraction(2), Fraction(3), Fraction(5)])
        assert sum(t.normalized_weights) == 1
        assert t.normalized_weights == (Fraction(1, 5), Fraction(3, 10), Fraction(1, 2))

    def test_credibility_requires_zero_diagonal(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        with pytest.raises(DataError) as err:
            CredibilityMatrix(alts, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))))
        assert err.value.code == "BAD_MATRIX"

    def test_credibility_rejects_out_of_range_entries(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        with pytest.raises(DataError):
            CredibilityMatrix(alts, ((Fraction(0), Fraction(2)), (Fraction(0), Fraction(0))))

    def test_flow_table_checks_net_identity(self):
        alts = (AlternativeId("a"), AlternativeId("b"))
        with pytest.raises(DataError) as err:
            FlowTable(alts, (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
        assert err.value.code == "BAD_FLOWS"

    def test_flows_rejects_single_row_matrix(self):
        # bypass the m >= 2 table validation by building the matrix directly
        pi = CredibilityMatrix((AlternativeId("a"),), ((Fraction(0),),))
        with pytest.raises(UsageError, match="two alternatives"):
            flows(pi)

    def test_empty_alternative_id_rejected(self):
        with pytest.raises(DataError) as err:
            AlternativeId("")
        assert err.value.code == "EMPTY_ID"

    def test_label_defaults_to_id(self):
        assert AlternativeId("PERA").label == "PERA"
