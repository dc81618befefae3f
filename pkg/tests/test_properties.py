"""Randomized properties of the ranking pipeline, 200+ cases each."""

import random

import pytest

from emrank.core import Relation, flows, preference_index, rank_partial

import props
from oracle import random_table

CASES = 200


@pytest.mark.parametrize("check", props.ALL_CHECKS, ids=lambda c: c.__name__)
def test_property(check):
    rng = random.Random(f"prop:{check.__name__}")
    for _ in range(CASES):
        check(rng)


def test_partial_ranking_relation_structure():
    """Mutual preference never happens; ties and crossed pairs mirror."""
    rng = random.Random("partial-structure")
    for _ in range(CASES):
        table = random_table(rng, functions="mixed")
        partial = rank_partial(flows(preference_index(table)))
        m = len(partial.alternatives)
        for i in range(m):
            assert partial.relations[i][i] is Relation.SELF
            for k in range(i + 1, m):
                forward, backward = partial.relations[i][k], partial.relations[k][i]
                assert Relation.SELF not in (forward, backward)
                assert (forward, backward) != (Relation.PREFER, Relation.PREFER)
                if forward is Relation.INDIFFERENT:
                    assert backward is Relation.INDIFFERENT
                if Relation.PREFER not in (forward, backward):
                    assert forward is backward
