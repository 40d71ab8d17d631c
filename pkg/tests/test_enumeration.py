from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import brace_corpus
from weakbrace.brace import make_weak_brace, opposite
from weakbrace.enumeration import (
    are_isomorphic,
    canonical_form,
    canonical_table,
    enumerate_inverse_semigroups,
    enumerate_weak_braces,
    inverse_semigroup_census,
    weak_brace_census,
)
from weakbrace.errors import AlgebraError, OrderTooLarge
from weakbrace.factorization import sym3_showcase
from weakbrace.semigroup import CayleyTable

# labeled / up-to-isomorphism counts fixed by the brute-force oracle and
# recomputed below; order 4 is beyond the naive scan and frozen from the
# backtracking run (inverse semigroups of order 4: 16 up to isomorphism)
INVERSE_COUNTS = {1: (1, 1), 2: (4, 2), 3: (24, 5), 4: (272, 16)}
BRACE_COUNTS = {1: (1, 1), 2: (4, 2), 3: (24, 5), 4: (296, 18)}

CORPUS = brace_corpus()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_semigroups_match_oracle(n):
    census = inverse_semigroup_census(n)
    oracle = oracles.all_inverse_semigroups(n)
    assert census.labeled == len(oracle) == INVERSE_COUNTS[n][0]
    ours = {canonical_table(t)[0] for t in census.structures}
    theirs = {bytes(oracles.canonical(t)) for t in oracle}
    assert ours == theirs
    assert census.upto_iso == INVERSE_COUNTS[n][1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weak_braces_match_oracle(n):
    census = weak_brace_census(n)
    oracle = oracles.all_weak_braces(n)
    assert census.labeled == len(oracle) == BRACE_COUNTS[n][0]
    ours = {canonical_form(wb) for wb in census.structures}
    theirs = {bytes(oracles.canonical(A, M)) for A, M in oracle}
    assert ours == theirs
    assert census.upto_iso == BRACE_COUNTS[n][1]


def test_order_4_counts():
    assert (inverse_semigroup_census(4).labeled, inverse_semigroup_census(4).upto_iso) == INVERSE_COUNTS[4]
    census = weak_brace_census(4)
    assert (census.labeled, census.upto_iso) == BRACE_COUNTS[4]
    skew = [wb for wb in census.structures if len(wb.add.idempotents) == 1]
    assert len(skew) == 4  # Z4 and Z2 x Z2, each trivial and non-trivial
    assert sum(not np.array_equal(wb.A, wb.M) for wb in skew) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pruned_equals_unpruned(n):
    a, b = weak_brace_census(n, prune=True), weak_brace_census(n, prune=False)
    assert a.labeled == b.labeled
    assert [canonical_form(x) for x in a.structures] == [canonical_form(x) for x in b.structures]


def test_order_2_structures():
    tables = enumerate_inverse_semigroups(2)
    kinds = sorted(int((np.diagonal(t.table) == np.arange(2)).sum()) for t in tables)
    assert kinds == [1, 2]  # Z2 and the 2-chain
    assert weak_brace_census(2).summary() == "order=2 labeled=4 upto-iso=2"


def test_order_checks():
    with pytest.raises(OrderTooLarge):
        enumerate_weak_braces(5)
    with pytest.raises(AlgebraError):
        enumerate_inverse_semigroups(0)


def test_output_is_sorted_and_canonical():
    for n in (2, 3, 4):
        wbs = enumerate_weak_braces(n)
        keys = [canonical_form(wb) for wb in wbs]
        assert keys == sorted(keys)
        for wb in wbs:
            flat = np.concatenate([wb.A.ravel(), wb.M.ravel()]).astype(np.uint8).tobytes()
            assert flat == canonical_form(wb)


def test_and_and_vs_or_or():
    aa = make_weak_brace(CayleyTable(oracles.AND), CayleyTable(oracles.AND))
    oo = make_weak_brace(CayleyTable(oracles.OR), CayleyTable(oracles.OR))
    assert are_isomorphic(aa, oo) == (1, 0)
    assert canonical_form(aa) == canonical_form(oo)


def test_isomorphism_examples():
    show = sym3_showcase()
    assert are_isomorphic(show.circ, show.circ) == tuple(range(6))
    assert are_isomorphic(show.circ, show.bullet) is None
    assert are_isomorphic(show.circ, enumerate_weak_braces(2)[0]) is None


def _permuted(wb, perm):
    return wb.relabel(perm)


@pytest.mark.parametrize("name", [k for k in sorted(CORPUS) if CORPUS[k].order <= 6])
def test_canonical_form_permutation_invariant(name):
    wb = CORPUS[name]
    rnd = random.Random(name)
    key = canonical_form(wb)
    for _ in range(20):
        perm = list(range(wb.order))
        rnd.shuffle(perm)
        moved = _permuted(wb, perm)
        assert canonical_form(moved) == key
        f = are_isomorphic(wb, moved)
        assert f is not None
        assert np.array_equal(np.asarray(f)[wb.A], moved.A[np.ix_(f, f)])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_weak_braces(n)), st.permutations(list(range(n))))))
def test_canonical_form_invariant_property(case):
    wb, perm = case
    assert canonical_form(_permuted(wb, perm)) == canonical_form(wb)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_under_opposite(n):
    wbs = enumerate_weak_braces(n)
    keys = {canonical_form(wb) for wb in wbs}
    for wb in wbs:
        assert canonical_form(opposite(wb)) in keys


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_isomorphism_agrees_with_canonical_form(n):
    wbs = enumerate_weak_braces(n)
    for i, x in enumerate(wbs):
        for j, y in enumerate(wbs):
            assert (are_isomorphic(x, y) is not None) == (i == j)
