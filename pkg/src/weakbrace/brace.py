"""Weak braces: axiom validation, the lambda/rho maps and structural checks.

Notation in comments: ``+`` and ``-a`` are the additive operation and
inverse, ``o`` and ``a'`` the multiplicative ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AddNotInverse,
    AlgebraError,
    DistributivityFails,
    InvariantViolation,
    InverseLinkFails,
    MulNotInverse,
    OrderMismatch,
)
from .report import Report
from .semigroup import CayleyTable, InverseSemigroupView, first_true, predicates


@dataclass(frozen=True, eq=False)
class WeakBrace:
    """A validated weak brace. Build it with :func:`make_weak_brace`.

    ``lam[a, b]`` is lambda_a(b) and ``rho[b, a]`` is rho_b(a).
    """

    add: InverseSemigroupView
    mul: InverseSemigroupView
    lam: np.ndarray
    rho: np.ndarray

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self.add.base.labels

    @property
    def A(self) -> np.ndarray:
        return self.add.table

    @property
    def M(self) -> np.ndarray:
        return self.mul.table

    @property
    def neg(self) -> np.ndarray:
        return self.add.inv_array

    @property
    def inv(self) -> np.ndarray:
        return self.mul.inv_array

    def label(self, a: int) -> str:
        return self.add.base.label(a)

    def __eq__(self, other):
        if not isinstance(other, WeakBrace):
            return NotImplemented
        return (np.array_equal(self.A, other.A) and np.array_equal(self.M, other.M)
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.A.tobytes(), self.M.tobytes()))

    def __repr__(self):
        return f"WeakBrace(order={self.order})"

    def relabel(self, perm) -> WeakBrace:
        return make_weak_brace(self.add.base.relabel(perm), self.mul.base.relabel(perm))


def _axiom_failures(A: np.ndarray, M: np.ndarray, neg: np.ndarray, inv: np.ndarray):
    n = A.shape[0]
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    # a o (b + c) = a o b - a + a o c
    lhs = M[a, A[b, c]]
    rhs = A[A[M[a, b], neg[a]], M[a, c]]
    dist = first_true(lhs != rhs)
    x = np.arange(n)
    link = first_true(M[x, inv] != A[neg, x])
    return dist, link


def make_weak_brace(add: CayleyTable, mul: CayleyTable) -> WeakBrace:
    """Validate ``(add, mul)`` as a weak brace.

    Checks run in order: additive inverse semigroup, multiplicative inverse
    semigroup, distributivity, the inverse link ``a o a' = -a + a``. The first
    failure is raised. Afterwards the idempotent sets and Cliffordness of the
    sum are re-checked as consequences.
    """
    if add.order != mul.order:
        raise OrderMismatch(f"tables have orders {add.order} and {mul.order}")
    if mul.labels is None and add.labels is not None:
        mul = CayleyTable(mul.table, add.labels)
    try:
        add_v = InverseSemigroupView(add)
    except AlgebraError as exc:
        raise AddNotInverse(f"additive table: {exc}", exc.witness) from exc
    try:
        mul_v = InverseSemigroupView(mul)
    except AlgebraError as exc:
        raise MulNotInverse(f"multiplicative table: {exc}", exc.witness) from exc
    A, M = add_v.table, mul_v.table
    neg, inv = add_v.inv_array, mul_v.inv_array
    dist, link = _axiom_failures(A, M, neg, inv)
    if dist is not None:
        a, b, c = dist
        raise DistributivityFails(f"a o (b + c) != a o b - a + a o c at (a,b,c) = {dist}", dist)
    if link is not None:
        raise InverseLinkFails(f"a o a' != -a + a at a = {link[0]}", link)

    n = add.order
    x = np.arange(n)
    lam = A[neg[:, None], M]                          # -a + a o b
    rho = M[inv[A[inv[None, :], x[:, None]]], x[:, None]]  # rho[b, a] = (a' + b)' o b
    lam.setflags(write=False)
    rho.setflags(write=False)
    wb = WeakBrace(add_v, mul_v, lam, rho)

    if set(add_v.idempotents) != set(mul_v.idempotents):
        raise InvariantViolation("idempotent sets of + and o differ")
    bad = first_true(A[x, neg] != A[neg, x])
    if bad is not None:
        raise InvariantViolation(f"additive structure not Clifford at {bad}", bad)
    return wb


def axiom_report(add: CayleyTable, mul: CayleyTable) -> Report:
    """Non-raising version of :func:`make_weak_brace` listing each axiom.

    Checks that depend on an earlier failure are recorded as failing with
    no witness.
    """
    rep = Report("weak brace axioms")
    views = []
    for name, t in (("additive inverse semigroup", add), ("multiplicative inverse semigroup", mul)):
        try:
            views.append(InverseSemigroupView(t))
            rep.add(name, True)
        except AlgebraError as exc:
            rep.add(name, False, exc.witness)
    if add.order != mul.order:
        rep.add("equal orders", False, (add.order, mul.order))
        return rep
    if len(views) < 2:
        rep.add("distributivity", False)
        rep.add("inverse link", False)
        return rep
    add_v, mul_v = views
    dist, link = _axiom_failures(add_v.table, mul_v.table, add_v.inv_array, mul_v.inv_array)
    rep.add("distributivity", dist is None, dist)
    rep.add("inverse link", link is None, link)
    return rep


def lam(wb: WeakBrace, a: int, b: int) -> int:
    return int(wb.lam[a, b])


def rho(wb: WeakBrace, b: int, a: int) -> int:
    return int(wb.rho[b, a])


def opposite(wb: WeakBrace) -> WeakBrace:
    """The weak brace with the reversed sum ``a +op b = b + a``."""
    return make_weak_brace(wb.add.base.transpose(), wb.mul.base)


def check_semibrace_form(wb: WeakBrace) -> Report:
    """Verify the equivalent semi-brace formulation on all triples."""
    A, M, neg, inv = wb.A, wb.M, wb.neg, wb.inv
    n = wb.order
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    rep = Report("semi-brace form")
    rep.add("additive structure is an inverse semigroup", True)
    rep.add_mask("a o (b + c) = a o b + a o (a' + c)",
                 M[a, A[b, c]] == A[M[a, b], M[a, A[inv[a], c]]])
    a2, b2 = np.arange(n)[:, None], np.arange(n)[None, :]
    rep.add_mask("a o (a' + b) = -a + a o b", M[a2, A[inv[a2], b2]] == A[neg[a2], M[a2, b2]])
    return rep


@dataclass(frozen=True)
class StructureClass:
    is_skew_brace: bool
    is_brace: bool
    is_bi_skew: bool
    is_trivial: bool
    is_almost_trivial: bool
    add_commutative: bool
    add_band: bool
    mul_clifford: bool

    def to_dict(self) -> dict:
        return {
            "isSkewBrace": self.is_skew_brace,
            "isBrace": self.is_brace,
            "isBiSkew": self.is_bi_skew,
            "isTrivial": self.is_trivial,
            "isAlmostTrivial": self.is_almost_trivial,
            "addCommutative": self.add_commutative,
            "addBand": self.add_band,
            "mulClifford": self.mul_clifford,
        }


def bi_skew_counterexample(wb: WeakBrace) -> tuple[int, int, int] | None:
    """First triple violating ``a + b o c = (a + b) o a' o (a + c)``."""
    A, M, inv = wb.A, wb.M, wb.inv
    n = wb.order
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    return first_true(A[a, M[b, c]] != M[M[A[a, b], inv[a]], A[a, c]])


def structure_class(wb: WeakBrace) -> StructureClass:
    from .semigroup import is_clifford

    add_p, mul_p = predicates(wb.add), predicates(wb.mul)
    skew = add_p.is_group and mul_p.is_group
    return StructureClass(
        is_skew_brace=skew,
        is_brace=skew and add_p.is_commutative,
        is_bi_skew=skew and bi_skew_counterexample(wb) is None,
        is_trivial=bool(np.array_equal(wb.A, wb.M)),
        is_almost_trivial=bool(np.array_equal(wb.A, wb.M.T)),
        add_commutative=add_p.is_commutative,
        add_band=add_p.is_band,
        mul_clifford=is_clifford(wb.mul),
    )


@dataclass(frozen=True)
class StructuralReport:
    flags: StructureClass
    checks: Report

    @property
    def ok(self) -> bool:
        return self.checks.ok

    def to_dict(self) -> dict:
        return {"flags": self.flags.to_dict(), **self.checks.to_dict()}


def identity_checks(wb: WeakBrace) -> Report:
    """Exhaustively check the structural identities every weak brace satisfies."""
    A, M, neg, inv, L, R = wb.A, wb.M, wb.neg, wb.inv, wb.lam, wb.rho
    n = wb.order
    x = np.arange(n)
    a, b = x[:, None], x[None, :]
    Rt = R.T  # Rt[a, b] = rho_b(a)
    ab = M[a, b]
    t = (x[:, None, None], x[None, :, None], x[None, None, :])
    rep = Report("structural identities")

    add_p, mul_p = predicates(wb.add), predicates(wb.mul)
    rep.add("E(S,+) = E(S,o)", set(wb.add.idempotents) == set(wb.mul.idempotents))
    rep.add_mask("(S,+) is Clifford: a - a = -a + a", A[x, neg] == A[neg, x])
    rep.add("(S,+) group iff (S,o) group", add_p.is_group == mul_p.is_group)
    rep.add("(S,+) band iff (S,o) band", add_p.is_band == mul_p.is_band)
    rep.add("(S,+) monoid with unit 0 iff (S,o) monoid with unit 0", add_p.unit == mul_p.unit)
    rep.add_mask("lambda_a(b) = a o (a' + b) = -a + a o b", M[a, A[inv[a], b]] == L)
    rep.add_mask("a o (-b) = a - a o b + a", M[a, neg[b]] == A[A[a, neg[ab]], a])
    rep.add_mask("a o b = a + lambda_a(b)", ab == A[a, L])
    rep.add_mask("lambda_a(a') = -a", L[x, inv] == neg)
    rep.add_mask("rho_{a'}(a)' = -a", inv[R[inv, x]] == neg)
    ta, tb, tc = t
    rep.add_mask("lambda_a(b + c) = lambda_a(b) + lambda_a(c)", L[ta, A[tb, tc]] == A[L[ta, tb], L[ta, tc]])
    rep.add_mask("lambda_a(-b) = -lambda_a(b)", L[a, neg[b]] == neg[L])
    rep.add_mask("lambda_{a o b} = lambda_a lambda_b", L[M[ta, tb], tc] == L[ta, L[tb, tc]])
    rep.add_mask("rho_{b o c} = rho_c rho_b", R[M[tb, tc], ta] == R[tc, R[tb, ta]])
    rep.add_mask("lambda_a(b) = -a o b o b' + a o b", L == A[neg[M[ab, inv[b]]], ab])
    rep.add_mask("lambda_a(b) = a o b o rho_b(a)'", L == M[ab, inv[Rt]])
    rep.add_mask("rho_b(a)' = b' o a' - b'", inv[Rt] == A[M[inv[b], inv[a]], neg[inv[b]]])
    rep.add_mask("rho_b(a) = lambda_a(b)' o a o b", Rt == M[inv[L], ab])
    rep.add_mask("lambda_a(b) = a o b o b' o (a' + b)", L == M[M[ab, inv[b]], A[inv[a], b]])
    rep.add_mask("rho_b(a) = (a' + b)' o a' o a o b", Rt == M[M[inv[A[inv[a], b]], M[inv[a], a]], b])
    rep.add_mask("lambda_{a o a'} = lambda_a lambda_{a'}", L[M[a, inv[a]], b] == L[a, L[inv[a], b]])
    rep.add_mask("lambda_{a o b o b'} = lambda_{a o b} lambda_{b'}",
                 L[M[M[ta, tb], inv[tb]], tc] == L[M[ta, tb], L[inv[tb], tc]])
    rep.add_mask("a o lambda_{a'}(b) = a + lambda_{a o a'}(b)", M[a, L[inv[a], b]] == A[a, L[M[a, inv[a]], b]])
    rep.add_mask("a + lambda_a(b) = a o (a' o a + b)", A[a, L] == M[a, A[M[inv[a], a], b]])
    rep.add_mask("lambda_a lambda_{a'} lambda_a = lambda_a", L[a, L[inv[a], L]] == L)
    rep.add_mask("lambda_{a'} lambda_a lambda_{a'} = lambda_{a'}",
                 L[inv[a], L[a, L[inv[a], b]]] == L[inv[a], b])
    rep.add_mask("rho_b rho_{b'} rho_b = rho_b", R[b, R[inv[b], Rt]] == Rt)
    rep.add_mask("lambda_a(b)' o lambda_a(b) o rho_b(a) = lambda_a(b)' o a o b",
                 M[M[inv[L], L], Rt] == M[inv[L], ab])
    rep.add_mask("lambda_a(b) o rho_b(a) o rho_b(a)' = a o b o rho_b(a)'",
                 M[M[L, Rt], inv[Rt]] == M[ab, inv[Rt]])
    rep.add_mask("rho_b(a) = lambda_{lambda_a(b)'}(-a o b + a + a o b)",
                 Rt == L[inv[L], A[A[neg[ab], a], ab]])
    rep.add_mask("a o b = lambda_a(b) o rho_b(a)", ab == M[L, Rt])
    return rep


def structural_report(wb: WeakBrace) -> StructuralReport:
    rep = identity_checks(wb)
    rep.extend(check_semibrace_form(wb))
    return StructuralReport(structure_class(wb), rep)
