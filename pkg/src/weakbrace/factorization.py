"""Exact factorizations and the two weak braces they induce."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import WeakBrace, make_weak_brace
from .errors import (
    AlgebraError,
    CarrierTooLarge,
    FactorNotClifford,
    InvariantViolation,
    NotClifford,
    SwappedNotExact,
)
from .semigroup import (
    CayleyTable,
    InverseSemigroupView,
    clifford_counterexample,
    first_true,
    subtable,
    symmetric,
)
from .solutions import PairMap, are_equivalent, solution_of

DEFAULT_FACTOR_CAP = 12


def closure(table: np.ndarray, elements) -> frozenset[int]:
    current = set(int(e) for e in elements)
    frontier = list(current)
    while frontier:
        new = []
        for x in frontier:
            for y in list(current):
                for z in (int(table[x, y]), int(table[y, x])):
                    if z not in current:
                        current.add(z)
                        new.append(z)
        frontier = new
    return frozenset(current)


def subsemigroups(table: np.ndarray) -> list[tuple[int, ...]]:
    """All non-empty subsemigroups, grown by closure from smaller ones."""
    n = table.shape[0]
    found = {closure(table, [x]) for x in range(n)}
    queue = list(found)
    while queue:
        X = queue.pop()
        for y in range(n):
            if y in X:
                continue
            Y = closure(table, X | {y})
            if Y not in found:
                found.add(Y)
                queue.append(Y)
    return sorted(tuple(sorted(X)) for X in found)


@dataclass(frozen=True)
class ExactFactorization:
    ambient: InverseSemigroupView
    U: tuple[int, ...]
    V: tuple[int, ...]
    factor_of: tuple[tuple[int, int], ...]  # a -> (u_a, v_a) with a = u_a + v_a

    def describe(self) -> str:
        t = self.ambient.base
        fmt = lambda xs: "{" + ", ".join(t.label(x) for x in xs) + "}"
        return f"U={fmt(self.U)} V={fmt(self.V)}"


def _decompose(table: np.ndarray, first, second) -> list[tuple[int, int]] | None:
    n = table.shape[0]
    out: list[tuple[int, int] | None] = [None] * n
    for x in first:
        for y in second:
            s = int(table[x, y])
            if out[s] is not None:
                return None
            out[s] = (x, y)
    if any(p is None for p in out):
        return None
    return out


def find_exact_factorizations(v: InverseSemigroupView, cap: int = DEFAULT_FACTOR_CAP) -> list[ExactFactorization]:
    """Every pair of subsemigroups ``(U, V)`` with unique decompositions
    ``a = u + v``, ordered by U and then V (both as sorted tuples)."""
    n = v.order
    if n > cap:
        raise CarrierTooLarge(f"factorization search capped at {cap} elements, got {n}")
    subs = subsemigroups(v.table)
    result = []
    for U in subs:
        for V in subs:
            if len(U) * len(V) != n:
                continue
            dec = _decompose(v.table, U, V)
            if dec is not None:
                result.append(ExactFactorization(v, U, V, tuple(dec)))
    return result


def _require_clifford_factor(f: ExactFactorization, name: str, elements):
    try:
        sub = InverseSemigroupView(subtable(f.ambient.base, elements))
    except AlgebraError as exc:
        raise FactorNotClifford(f"factor {name} is not inverse: {exc}", exc.witness) from exc
    if clifford_counterexample(sub) is not None:
        raise FactorNotClifford(f"factor {name} is not Clifford")


def _iso_check(S: np.ndarray, M: np.ndarray, first, second, neg, what: str):
    """Check ``(x, y) -> x - y`` carries the componentwise sum to ``M``."""
    for x1 in first:
        for y1 in second:
            for x2 in first:
                for y2 in second:
                    lhs = S[S[x1, x2], neg[S[y1, y2]]]
                    rhs = M[S[x1, neg[y1]], S[x2, neg[y2]]]
                    if lhs != rhs:
                        raise InvariantViolation(f"{what}: x - y is not a homomorphism",
                                                 (x1, y1, x2, y2))
    images = {int(S[x, neg[y]]) for x in first for y in second}
    if len(images) != S.shape[0]:
        raise InvariantViolation(f"{what}: x - y is not a bijection")


def circ_brace(f: ExactFactorization) -> WeakBrace:
    """``a o b = u_a + b + v_a``."""
    amb = f.ambient
    if clifford_counterexample(amb) is not None:
        raise NotClifford("ambient semigroup is not Clifford")
    _require_clifford_factor(f, "U", f.U)
    _require_clifford_factor(f, "V", f.V)
    S = amb.table
    u = np.array([p[0] for p in f.factor_of])
    v = np.array([p[1] for p in f.factor_of])
    circ = S[S[u[:, None], np.arange(amb.order)[None, :]], v[:, None]]
    wb = make_weak_brace(amb.base, CayleyTable(circ, amb.base.labels))
    neg = amb.inv_array
    bad = first_true(wb.inv != S[neg[u], neg[v]])
    if bad is not None:
        raise InvariantViolation("a' != -u_a - v_a", bad)
    # V is closed under negation, so u - v ranges over U x V
    _iso_check(S, wb.M, f.U, f.V, neg, "circ")
    return wb


def bullet_brace(f: ExactFactorization) -> WeakBrace:
    """``a . b = v'_a + b + u'_a`` for the swapped decomposition ``a = v'_a + u'_a``."""
    amb = f.ambient
    S = amb.table
    dec = _decompose(S, f.V, f.U)
    if dec is None:
        raise SwappedNotExact("(V, U) is not an exact factorization")
    if clifford_counterexample(amb) is not None:
        raise NotClifford("ambient semigroup is not Clifford")
    _require_clifford_factor(f, "U", f.U)
    _require_clifford_factor(f, "V", f.V)
    v = np.array([p[0] for p in dec])
    u = np.array([p[1] for p in dec])
    bullet = S[S[v[:, None], np.arange(amb.order)[None, :]], u[:, None]]
    wb = make_weak_brace(amb.base, CayleyTable(bullet, amb.base.labels))
    if len(wb.add.idempotents) == 1:
        _iso_check(S, wb.M, f.V, f.U, amb.inv_array, "bullet")
    return wb


def sym3_factorization() -> ExactFactorization:
    """``Sym3 = U + V`` with ``U = <(12)>`` and ``V = <(123)>``."""
    g = InverseSemigroupView(symmetric(3))
    labels = g.base.labels
    U = tuple(sorted(labels.index(x) for x in ("id", "(12)")))
    V = tuple(sorted(labels.index(x) for x in ("id", "(123)", "(132)")))
    for f in find_exact_factorizations(g):
        if f.U == U and f.V == V:
            return f
    raise InvariantViolation("Sym3 factorization not found")


@dataclass(frozen=True)
class Sym3Showcase:
    circ: WeakBrace
    bullet: WeakBrace
    r_circ: PairMap
    r_bullet: PairMap
    equivalence: tuple[int, ...] | None
    isomorphism: tuple[int, ...] | None


def sym3_showcase() -> Sym3Showcase:
    from .enumeration import are_isomorphic

    f = sym3_factorization()
    circ, bullet = circ_brace(f), bullet_brace(f)
    r_circ, r_bullet = solution_of(circ), solution_of(bullet)
    return Sym3Showcase(circ, bullet, r_circ, r_bullet,
                        are_equivalent(r_circ, r_bullet), are_isomorphic(circ, bullet))


def map_cycles(perm, labels) -> str:
    """A permutation of labelled points in cycle notation, e.g. ``((12)(13)(23))``.

    Points are ordered by label length and then text, so transpositions
    come before 3-cycles; each cycle starts at its smallest point.
    """
    n = len(perm)
    order = sorted(range(n), key=lambda i: (len(labels[i]), labels[i]))
    seen = set()
    out = []
    for s in order:
        if s in seen or perm[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = int(perm[s])
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = int(perm[x])
        out.append("(" + "".join(labels[i] for i in cyc) + ")")
    return "".join(out) or "id"
