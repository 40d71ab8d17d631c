from __future__ import annotations

import numpy as np
import pytest

from weakbrace.brace import structural_report
from weakbrace.constructions import (
    almost_trivial_wb,
    double_semidirect,
    double_solution_check,
    double_solution_formula,
    double_tables,
    example_products,
    idempotent_condition_witness,
    matched_product,
    matched_solution_check,
    matched_solution_formula,
    semidirect_system,
    trivial_wb,
    validate_double_system,
    validate_matched_system,
)
from weakbrace.enumeration import are_isomorphic, enumerate_weak_braces
from weakbrace.errors import CarrierTooLarge, NotClifford, PreconditionFailed, SystemViolation, UnsupportedKind
from weakbrace.factorization import sym3_showcase
from weakbrace.fixtures import (
    SWAP_XY_ACTION,
    brandt_b2,
    chain2,
    join_semilattice_xy,
    monoid_xy,
    semidirect_3x3,
    semidirect_3x3_double,
    semidirect_3x3_system,
    sym3_conjugation_system,
    sym3_double_system,
)
from weakbrace.semigroup import cyclic, direct_product, semidirect_semigroup, symmetric
from weakbrace.solutions import solution_of


def _identity_maps(acting: int, acted: int):
    return np.tile(np.arange(acted), (acting, 1))


def test_trivial_and_almost_trivial():
    assert np.array_equal(trivial_wb(cyclic(2)).A, cyclic(2).table)
    at = almost_trivial_wb(symmetric(3))
    assert np.array_equal(at.A, symmetric(3).table.T)
    with pytest.raises(NotClifford):
        trivial_wb(brandt_b2())
    with pytest.raises(NotClifford):
        almost_trivial_wb(brandt_b2())


def test_example_products():
    k1 = example_products(1, chain2(), chain2())
    assert k1.order == 4 and np.array_equal(k1.A, k1.M)
    s3 = symmetric(3)
    ident = list(range(6))
    assert example_products(2, cyclic(2), s3, [ident, ident]).order == 12
    ix = s3.index
    conj12 = [s3(s3(ix("(12)"), a), ix("(12)")) for a in range(6)]
    assert structural_report(example_products(2, cyclic(2), s3, [ident, conj12])).ok
    with pytest.raises(PreconditionFailed):
        example_products(2, cyclic(2), s3, [conj12, conj12])  # 0 is the unit, must act trivially
    with pytest.raises(PreconditionFailed):
        example_products(2, cyclic(2), s3)
    with pytest.raises(PreconditionFailed):
        example_products(1, brandt_b2(), chain2())
    assert example_products(3, chain2(), cyclic(2), [[0, 1], [0, 1]]).order == 4
    with pytest.raises(UnsupportedKind):
        example_products(4, chain2(), chain2())


def test_kind3_as_matched_product():
    S, T = trivial_wb(cyclic(2)), trivial_wb(cyclic(3))
    beta = [[0, 1, 2], [0, 2, 1]]
    k3 = example_products(3, cyclic(2), cyclic(3), beta)
    mp = matched_product(validate_matched_system(S, T, _identity_maps(3, 2), beta))
    assert np.array_equal(k3.A, mp.A) and np.array_equal(k3.M, mp.M)


@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_trivial_actions_give_direct_product(n, m):
    for S in enumerate_weak_braces(n):
        for T in enumerate_weak_braces(m):
            sys = validate_matched_system(S, T, _identity_maps(m, n), _identity_maps(n, m))
            wb = matched_product(sys)
            assert np.array_equal(wb.A, direct_product(S.add.base, T.add.base).table)
            assert np.array_equal(wb.M, direct_product(S.mul.base, T.mul.base).table)
            assert matched_solution_check(sys).ok
            dsys = validate_double_system(S, T, _identity_maps(m, n), _identity_maps(n, m))
            dwb = double_semidirect(dsys)
            assert dwb == wb
            assert double_solution_check(dsys).ok


def test_semidirect_3x3():
    sys = semidirect_3x3_system()
    wb = matched_product(sys)
    assert wb.order == 9
    mul = semidirect_semigroup(join_semilattice_xy(), monoid_xy(), SWAP_XY_ACTION)
    assert np.array_equal(wb.M, mul.table)
    assert matched_solution_check(sys).ok
    assert structural_report(wb).ok


def test_semidirect_3x3_lambda_values():
    wb = semidirect_3x3()
    ix = wb.add.base.index
    yy, y1 = ix("(y,y)"), ix("(y,1)")
    right = wb.M[yy, wb.inv[yy]]
    left = wb.M[wb.inv[yy], yy]
    assert wb.label(right) == "(y,x)"
    assert wb.label(left) == "(x,x)"
    assert wb.label(wb.lam[right, y1]) == "(y,x)"
    assert wb.label(wb.lam[left, y1]) == "(1,x)"


def test_semidirect_3x3_double_agrees():
    dsys = semidirect_3x3_double()
    assert double_semidirect(dsys) == semidirect_3x3()
    assert double_solution_check(dsys).ok
    add, _ = double_tables(dsys)
    assert np.array_equal(add.table, direct_product(join_semilattice_xy(), monoid_xy()).table)


def test_sym3_conjugation_system():
    sys = sym3_conjugation_system()
    wb = matched_product(sys)
    assert wb.order == 36
    assert matched_solution_check(sys).ok
    assert matched_solution_formula(sys) == solution_of(wb)


def test_sym3_double_system_realizes_circ():
    dsys = sym3_double_system()
    wb = double_semidirect(dsys)
    assert double_solution_formula(dsys) == solution_of(wb)
    assert are_isomorphic(wb, sym3_showcase().circ) is not None


def test_alpha_violations():
    S = sym3_showcase().circ
    T = trivial_wb(cyclic(2))
    s3 = symmetric(3)
    conj23 = [s3(s3(1, a), 1) for a in range(6)]
    with pytest.raises(SystemViolation) as exc:
        validate_matched_system(S, T, [list(range(6)), conj23], _identity_maps(6, 2))
    assert exc.value.condition == "compatibility-alpha"
    assert exc.value.witness == (1, 1, 1)
    with pytest.raises(SystemViolation) as exc:
        validate_matched_system(T, S, _identity_maps(6, 2), [list(range(6)), conj23])
    assert exc.value.condition == "compatibility-beta"


def test_action_and_hom_violations():
    S, T = trivial_wb(cyclic(3)), trivial_wb(cyclic(2))
    with pytest.raises(SystemViolation) as exc:
        validate_matched_system(S, T, [[0, 1, 2], [1, 2, 0]], _identity_maps(3, 2))
    assert exc.value.condition == "alpha-automorphism"
    with pytest.raises(SystemViolation) as exc:
        validate_matched_system(S, T, [[0, 2, 1], [0, 1, 2]], _identity_maps(3, 2))
    assert exc.value.condition == "alpha-homomorphism"
    with pytest.raises(SystemViolation) as exc:
        validate_double_system(S, T, [[0, 1, 2], [0, 1, 2]], [[0, 1], [1, 0], [0, 1]])
    assert exc.value.condition == "delta-automorphism"


def test_carrier_cap():
    S = trivial_wb(symmetric(3))
    T = trivial_wb(cyclic(2))
    with pytest.raises(CarrierTooLarge):
        validate_matched_system(S, T, _identity_maps(2, 6), _identity_maps(6, 2), cap=11)
    validate_matched_system(S, T, _identity_maps(2, 6), _identity_maps(6, 2), cap=12)


def test_idempotent_condition_witness_synthetic():
    # S the 2-chain, T trivial; alpha_0 swaps the two points (not an
    # automorphism), so the premise holds at a = 1 while alpha_0(1) = 0
    MS = np.array([[0, 0], [0, 1]])
    MT = np.array([[0]])
    Am = Ai = np.array([[1, 0]])
    Bm = Bi = np.array([[0], [0]])
    assert idempotent_condition_witness(MS, MT, Am, Ai, Bm, Bi) == (1, 0)


def test_idempotent_condition_holds_on_fixtures():
    for sys in (semidirect_3x3_system(), sym3_conjugation_system()):
        al, be = sys.alpha, sys.beta
        assert idempotent_condition_witness(sys.S.M, sys.T.M, al.maps, al.inverse_maps,
                                            be.maps, be.inverse_maps) is None


def test_semidirect_system_helper():
    sys = semidirect_system(trivial_wb(join_semilattice_xy()), trivial_wb(monoid_xy()), SWAP_XY_ACTION)
    assert sys.beta.is_trivial() and not sys.alpha.is_trivial()
