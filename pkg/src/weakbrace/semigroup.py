"""Finite magmas as Cayley tables, inverse-semigroup validation and builders.

Elements are always the indices ``0..n-1``; labels only affect display.
All exhaustive scans report the lexicographically first failing tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    ActionNotAutomorphism,
    MalformedTable,
    NoInverse,
    NonUniqueInverse,
    NotAHomomorphism,
    NotAssociative,
    UnsupportedKind,
)


def first_true(mask: np.ndarray) -> tuple[int, ...] | None:
    """Index of the first True entry of ``mask`` in row-major order."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _frozen_array(data, ndim: int) -> np.ndarray:
    arr = np.array(data, dtype=np.int64)
    if arr.ndim != ndim:
        raise MalformedTable(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """An ``n x n`` operation table; ``table[a, b]`` is the product ``a.b``."""

    table: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        arr = _frozen_array(self.table, 2)
        n = arr.shape[0]
        if n == 0 or arr.shape != (n, n):
            raise MalformedTable(f"table must be square and non-empty, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= n:
            raise MalformedTable(f"entries must lie in 0..{n - 1}")
        object.__setattr__(self, "table", arr)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n or len(set(labels)) != n:
                raise MalformedTable("labels must be n distinct strings")
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __call__(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return np.array_equal(self.table, other.table) and self.labels == other.labels

    def __hash__(self):
        return hash((self.table.tobytes(), self.order, self.labels))

    def __repr__(self):
        return f"CayleyTable(order={self.order}, table={self.table.tolist()})"

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def tolist(self) -> list[list[int]]:
        return self.table.tolist()

    def transpose(self) -> CayleyTable:
        return CayleyTable(self.table.T.copy(), self.labels)

    def relabel(self, perm: Sequence[int]) -> CayleyTable:
        """Image of the table under the bijection ``a -> perm[a]``."""
        p = np.asarray(perm, dtype=np.int64)
        out = np.empty_like(self.table)
        out[np.ix_(p, p)] = p[self.table]
        labels = None
        if self.labels:
            labels = [""] * self.order
            for a, pa in enumerate(p):
                labels[pa] = self.labels[a]
        return CayleyTable(out, labels)

    def index(self, label: str) -> int:
        if not self.labels:
            return int(label)
        return self.labels.index(label)


def validate_associative(t: CayleyTable) -> tuple[int, int, int] | None:
    """Return None if ``t`` is associative, else the first failing ``(a, b, c)``."""
    T = t.table
    n = t.order
    c = np.arange(n)
    left = T[T[:, :, None], c[None, None, :]]
    right = T[np.arange(n)[:, None, None], T[None, :, :]]
    return first_true(left != right)


def inverse_candidates(t: CayleyTable) -> np.ndarray:
    """Boolean matrix: ``[a, x]`` is True iff ``a.x.a = a`` and ``x.a.x = x``."""
    T = t.table
    A = np.arange(t.order)
    axa = T[T, A[:, None]]
    xax = T[T.T, A[None, :]]
    return (axa == A[:, None]) & (xax == A[None, :])


@dataclass(frozen=True, eq=False)
class InverseSemigroupView:
    """A table validated as an inverse semigroup.

    Constructing one runs the validation, so an instance always satisfies
    associativity and unique inverses.
    """

    base: CayleyTable
    inv: tuple[int, ...] = field(init=False)
    idempotents: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        t = self.base
        bad = validate_associative(t)
        if bad is not None:
            a, b, c = bad
            raise NotAssociative(f"({a}.{b}).{c} != {a}.({b}.{c})", bad)
        cand = inverse_candidates(t)
        inv = []
        for a in range(t.order):
            xs = np.flatnonzero(cand[a])
            if len(xs) == 0:
                raise NoInverse(f"element {a} has no inverse", (a,))
            if len(xs) > 1:
                x1, x2 = int(xs[0]), int(xs[1])
                raise NonUniqueInverse(f"element {a} has inverses {x1} and {x2}", (a, x1, x2))
            inv.append(int(xs[0]))
        diag = t.table[np.arange(t.order), np.arange(t.order)]
        object.__setattr__(self, "inv", tuple(inv))
        object.__setattr__(self, "idempotents", tuple(int(e) for e in np.flatnonzero(diag == np.arange(t.order))))

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def table(self) -> np.ndarray:
        return self.base.table

    @property
    def inv_array(self) -> np.ndarray:
        return np.asarray(self.inv, dtype=np.int64)

    def __call__(self, a: int, b: int) -> int:
        return int(self.base.table[a, b])

    def __eq__(self, other):
        if not isinstance(other, InverseSemigroupView):
            return NotImplemented
        return self.base == other.base

    def __hash__(self):
        return hash(self.base)


def as_inverse_semigroup(t: CayleyTable) -> InverseSemigroupView:
    return InverseSemigroupView(t)


def clifford_counterexample(v: InverseSemigroupView) -> tuple[int, int] | None:
    """First ``(e, a)`` with ``e`` idempotent and ``e.a != a.e``, or None."""
    T = v.table
    for e in v.idempotents:
        bad = np.flatnonzero(T[e, :] != T[:, e])
        if len(bad):
            return (e, int(bad[0]))
    return None


def is_clifford(v: InverseSemigroupView) -> bool:
    return clifford_counterexample(v) is None


@dataclass(frozen=True)
class Predicates:
    is_group: bool
    unit: int | None
    is_commutative: bool
    is_band: bool

    @property
    def is_monoid(self) -> bool:
        return self.unit is not None


def find_unit(t: CayleyTable) -> int | None:
    T = t.table
    A = np.arange(t.order)
    for e in range(t.order):
        if np.array_equal(T[e], A) and np.array_equal(T[:, e], A):
            return e
    return None


def predicates(v: InverseSemigroupView) -> Predicates:
    T = v.table
    return Predicates(
        is_group=len(v.idempotents) == 1,
        unit=find_unit(v.base),
        is_commutative=bool(np.array_equal(T, T.T)),
        is_band=len(v.idempotents) == v.order,
    )


# -- builders ---------------------------------------------------------------

def cyclic(n: int) -> CayleyTable:
    A = np.arange(n)
    return CayleyTable((A[:, None] + A[None, :]) % n)


def cycle_notation(perm: Sequence[int]) -> str:
    """Cycle notation on the points ``1..n``; the identity is written ``id``."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        out.append("(" + "".join(str(i + 1) for i in cyc) + ")")
    return "".join(out) or "id"


def symmetric(n: int) -> CayleyTable:
    """Symmetric group on ``n <= 5`` points.

    Elements are permutations in lexicographic one-line order. The product
    ``p.q`` applies ``p`` first and then ``q``.
    """
    if not 1 <= n <= 5:
        raise UnsupportedKind(f"symmetric({n}) not supported; need 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[x]] for x in range(n))] for q in perms] for p in perms]
    return CayleyTable(table, [cycle_notation(p) for p in perms])


def semilattice(n: int, relations: Iterable[tuple[int, int]], op: str = "meet",
                labels: Sequence[str] | None = None) -> CayleyTable:
    """Meet (or join) semilattice of a poset on ``0..n-1``.

    ``relations`` lists pairs ``(a, b)`` meaning ``a <= b``; the reflexive
    transitive closure is taken.
    """
    leq = np.eye(n, dtype=bool)
    for a, b in relations:
        leq[a, b] = True
    for k in range(n):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
        raise UnsupportedKind("relations do not define a partial order")
    if op == "join":
        leq = leq.T
    elif op != "meet":
        raise UnsupportedKind(f"unknown semilattice op {op!r}")
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq[c, a] and leq[c, b]]
            top = [c for c in lower if all(leq[d, c] for d in lower)]
            if len(top) != 1:
                raise UnsupportedKind(f"elements {a} and {b} have no {op}")
            table[a, b] = top[0]
    return CayleyTable(table, labels)


def _pair_labels(t1: CayleyTable, t2: CayleyTable) -> list[str]:
    return [f"({t1.label(a)},{t2.label(u)})" for a in range(t1.order) for u in range(t2.order)]


def direct_product(t1: CayleyTable, t2: CayleyTable) -> CayleyTable:
    """Componentwise product; the pair ``(a, u)`` has index ``a * |t2| + u``."""
    m = t2.order
    A, B = t1.table, t2.table
    table = (A[:, None, :, None] * m + B[None, :, None, :]).reshape(t1.order * m, t1.order * m)
    return CayleyTable(table, _pair_labels(t1, t2))


def semidirect_semigroup(t1: CayleyTable, t2: CayleyTable, action: Sequence[Sequence[int]]) -> CayleyTable:
    """``(a, u)(b, v) = (a . action[u](b), u . v)`` on ``t1 x t2``."""
    fam = ActionFamily(t2.order, t1, action)
    n, m = t1.order, t2.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    for a, u, b, v in itertools.product(range(n), range(m), range(n), range(m)):
        table[a * m + u, b * m + v] = t1.table[a, fam.maps[u, b]] * m + t2.table[u, v]
    return CayleyTable(table, _pair_labels(t1, t2))


_BUILDERS: dict[str, Callable[..., CayleyTable]] = {
    "cyclic": cyclic,
    "symmetric": symmetric,
    "semilattice": semilattice,
    "directProduct": direct_product,
    "semidirectSemigroup": semidirect_semigroup,
}


def build(kind: str, *args, **kwargs) -> CayleyTable:
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise UnsupportedKind(f"unknown table kind {kind!r}") from None
    return builder(*args, **kwargs)


def subtable(t: CayleyTable, elements: Sequence[int]) -> CayleyTable:
    """Restriction of ``t`` to a closed subset, reindexed in the given order."""
    pos = {e: i for i, e in enumerate(elements)}
    rows = []
    for a in elements:
        row = []
        for b in elements:
            c = int(t.table[a, b])
            if c not in pos:
                raise MalformedTable(f"subset not closed: {a}.{b} = {c}")
            row.append(pos[c])
        rows.append(row)
    return CayleyTable(rows, [t.label(e) for e in elements])


# -- homomorphisms and actions ----------------------------------------------

@dataclass(frozen=True)
class HomWitness:
    source: object
    target: CayleyTable
    map: tuple[int, ...]
    kind: str


def check_hom(mapping: Sequence[int], source, target: CayleyTable, kind: str = "homomorphism") -> HomWitness:
    """Validate ``mapping`` as a (anti-)homomorphism from ``source`` to ``target``.

    Raises :class:`NotAHomomorphism` with the first failing pair.
    """
    S = source.table if hasattr(source, "table") else np.asarray(source)
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (S.shape[0],):
        raise NotAHomomorphism("map must be total on the source carrier")
    T = target.table
    lhs = f[S]
    if kind == "homomorphism":
        rhs = T[f[:, None], f[None, :]]
    elif kind == "anti-homomorphism":
        rhs = T[f[None, :], f[:, None]]
    else:
        raise UnsupportedKind(f"unknown hom kind {kind!r}")
    bad = first_true(lhs != rhs)
    if bad is not None:
        raise NotAHomomorphism(f"law fails at pair {bad}", bad)
    return HomWitness(source, target, tuple(int(x) for x in f), kind)


@dataclass(frozen=True, eq=False)
class ActionFamily:
    """``maps[u]`` is a bijection of the acted carrier, one per acting element.

    Every map must be an automorphism of ``acted``.
    """

    acting_order: int
    acted: CayleyTable
    maps: np.ndarray

    def __post_init__(self):
        maps = _frozen_array(self.maps, 2)
        n = self.acted.order
        if maps.shape != (self.acting_order, n):
            raise ActionNotAutomorphism(
                f"expected {self.acting_order} maps on {n} points, got shape {maps.shape}")
        T = self.acted.table
        for u, p in enumerate(maps):
            if sorted(p.tolist()) != list(range(n)):
                raise ActionNotAutomorphism(f"map {u} is not a bijection", (u,))
            bad = first_true(p[T] != T[p[:, None], p[None, :]])
            if bad is not None:
                raise ActionNotAutomorphism(f"map {u} does not preserve the operation at {bad}", (u,) + bad)
        object.__setattr__(self, "maps", maps)
        inverse = np.empty_like(maps)
        for u, p in enumerate(maps):
            inverse[u, p] = np.arange(n)
        inverse.setflags(write=False)
        object.__setattr__(self, "inverse_maps", inverse)

    @classmethod
    def identity(cls, acting_order: int, acted: CayleyTable) -> ActionFamily:
        return cls(acting_order, acted, np.tile(np.arange(acted.order), (acting_order, 1)))

    def __call__(self, u: int, a: int) -> int:
        return int(self.maps[u, a])

    def __eq__(self, other):
        if not isinstance(other, ActionFamily):
            return NotImplemented
        return self.acted == other.acted and np.array_equal(self.maps, other.maps)

    def is_trivial(self) -> bool:
        return bool(np.all(self.maps == np.arange(self.acted.order)))

    def check_hom(self, source: CayleyTable | InverseSemigroupView, anti: bool = False) -> None:
        """Check ``u -> maps[u]`` against ``source`` under composition of maps.

        Homomorphism: ``maps[u.v] = maps[u] o maps[v]`` (``maps[v]`` applied
        first). Anti-homomorphism: ``maps[u.v] = maps[v] o maps[u]``.
        """
        S = source.table
        if S.shape[0] != self.acting_order:
            raise NotAHomomorphism("source order differs from the number of maps")
        M = self.maps
        lhs = M[S]  # [u, v, x]
        if anti:
            rhs = M[np.arange(self.acting_order)[None, :, None], M[:, None, :]]
        else:
            rhs = M[np.arange(self.acting_order)[:, None, None], M[None, :, :]]
        bad = first_true(lhs != rhs)
        if bad is not None:
            u, v, x = bad
            kind = "anti-homomorphism" if anti else "homomorphism"
            raise NotAHomomorphism(f"{kind} law fails for ({u}, {v}) at point {x}", (u, v))
