from __future__ import annotations

import numpy as np
import pytest

from weakbrace.brace import bi_skew_counterexample, structure_class
from weakbrace.constructions import almost_trivial_wb, trivial_wb
from weakbrace.errors import CarrierTooLarge, NotClifford, SwappedNotExact
from weakbrace.factorization import (
    ExactFactorization,
    bullet_brace,
    circ_brace,
    find_exact_factorizations,
    map_cycles,
    subsemigroups,
    sym3_factorization,
    sym3_showcase,
)
from weakbrace.fixtures import brandt_b2, monoid_xy, z3_by_monoid_xy
from weakbrace.semigroup import InverseSemigroupView, cyclic, direct_product, symmetric
from weakbrace.solutions import PairMap, check_braid, compose, op_solution, solution_of


def _view(t):
    return InverseSemigroupView(t)


def _labels(f):
    t = f.ambient.base
    return tuple(t.label(x) for x in f.U), tuple(t.label(x) for x in f.V)


def test_sym3_factorizations_include_both_orders():
    fs = [_labels(f) for f in find_exact_factorizations(_view(symmetric(3)))]
    assert (("id", "(12)"), ("id", "(123)", "(132)")) in fs
    assert (("id", "(123)", "(132)"), ("id", "(12)")) in fs


def test_c2_only_trivial_factorizations():
    fs = [(f.U, f.V) for f in find_exact_factorizations(_view(cyclic(2)))]
    assert fs == [((0,), (0, 1)), ((0, 1), (0,))]


def test_z4_has_no_proper_factorization():
    fs = find_exact_factorizations(_view(cyclic(4)))
    assert all(len(f.U) in (1, 4) for f in fs)


def test_factorization_order_is_deterministic():
    fs = find_exact_factorizations(_view(symmetric(3)))
    keys = [(f.U, f.V) for f in fs]
    assert keys == sorted(keys)


def test_factor_cap():
    with pytest.raises(CarrierTooLarge):
        find_exact_factorizations(_view(symmetric(3)), cap=5)


def test_subsemigroups_are_closed():
    T = symmetric(3).table
    for X in subsemigroups(T):
        assert all(T[a, b] in X for a in X for b in X)


def test_sym3_circ_is_cyclic_of_order_6():
    circ = sym3_showcase().circ
    ix = circ.add.base.index
    for gen in ("(13)", "(23)"):
        g = ix(gen)
        seen, x = [], g
        while x not in seen:
            seen.append(x)
            x = int(circ.M[x, g])
        assert len(seen) == 6
    assert np.array_equal(circ.M, circ.M.T)


def test_sym3_bullet_is_cyclic():
    bullet = sym3_showcase().bullet
    assert np.array_equal(bullet.M, bullet.M.T)
    g = bullet.add.base.index("(13)")
    seen, x = [], g
    while x not in seen:
        seen.append(x)
        x = int(bullet.M[x, g])
    assert len(seen) == 6


def test_sym3_showcase_verdicts():
    show = sym3_showcase()
    assert show.equivalence is None
    assert show.isomorphism is None
    assert structure_class(show.circ).is_skew_brace
    assert structure_class(show.bullet).is_bi_skew


def test_circ_solution_inverse_is_op():
    for f in find_exact_factorizations(_view(symmetric(3))):
        wb = circ_brace(f)
        r = solution_of(wb)
        assert check_braid(r) is None
        assert compose(r, op_solution(wb)) == PairMap.identity(6)


def test_normal_factor_gives_bi_skew():
    # V = A3 is normal in Sym3: bullet is bi-skew; U = <(12)> is not normal
    f = sym3_factorization()
    assert bi_skew_counterexample(bullet_brace(f)) is None
    swapped = [g for g in find_exact_factorizations(_view(symmetric(3)))
               if _labels(g) == (("id", "(123)", "(132)"), ("id", "(12)"))][0]
    assert bi_skew_counterexample(circ_brace(swapped)) is None


def test_abelian_direct_product_gives_trivial():
    g = _view(direct_product(cyclic(2), cyclic(3)))
    proper = [f for f in find_exact_factorizations(g) if len(f.U) == 2 and len(f.V) == 3]
    assert proper
    for f in proper:
        assert circ_brace(f) == trivial_wb(g)
        assert bullet_brace(f) == trivial_wb(g)


def test_nonabelian_direct_product_gives_trivial_and_almost_trivial():
    g = _view(direct_product(symmetric(3), cyclic(2)))
    m = 2
    U = tuple(a * m for a in range(6))
    V = (0, 1)
    f = [h for h in find_exact_factorizations(g) if h.U == U and h.V == V][0]
    circ, bullet = circ_brace(f), bullet_brace(f)
    assert circ == trivial_wb(g)
    # a . b = b + a: almost trivial over (G, .), which keeps the ambient sum
    assert structure_class(bullet).is_almost_trivial
    assert np.array_equal(bullet.M, g.table.T)
    assert bullet == almost_trivial_wb(g.base.transpose())
    # r_circ = tau r_bullet tau
    tw = PairMap.twist(12)
    assert solution_of(circ) == compose(tw, compose(solution_of(bullet), tw))


def test_clifford_semigroup_factorization():
    g = _view(z3_by_monoid_xy())
    fs = [f for f in find_exact_factorizations(g) if 1 < len(f.U) < 9]
    assert fs
    for f in fs:
        wb = circ_brace(f)
        assert check_braid(solution_of(wb)) is None


def test_non_clifford_rejected():
    g = _view(brandt_b2())
    f = ExactFactorization(g, tuple(range(5)), (0,), tuple((a, 0) for a in range(5)))
    with pytest.raises(NotClifford):
        circ_brace(f)


def test_swapped_not_exact_detected():
    # no small Clifford semigroup has an exact (U, V) with (V, U) inexact,
    # so hand a record whose swapped pair collides: V x U has 6 sums on 3 points
    g = _view(monoid_xy())
    f = ExactFactorization(g, (0, 1, 2), (0, 1), tuple((a, 0) for a in range(3)))
    with pytest.raises(SwappedNotExact):
        bullet_brace(f)
    for f in find_exact_factorizations(g):
        bullet_brace(f)


def test_map_cycles_notation():
    labels = ("id", "(23)", "(12)", "(123)", "(132)", "(13)")
    assert map_cycles(list(range(6)), labels) == "id"
    perm = [0, 2, 5, 3, 4, 1]  # (23) -> (12) -> (13) -> (23)
    assert map_cycles(perm, labels) == "((12)(13)(23))"
