"""Small-order enumeration of inverse semigroups and weak braces up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from .brace import WeakBrace, make_weak_brace
from .errors import AlgebraError, OrderTooLarge
from .semigroup import CayleyTable, InverseSemigroupView

DEFAULT_ENUMERATION_CAP = 4


@lru_cache(maxsize=None)
def _perm_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of ``range(n)`` in lexicographic order, with their inverses."""
    P = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    Q = np.argsort(P, axis=1)
    return P, Q


def _relabel_all(table: np.ndarray, P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Stack of ``p . table`` for every row ``p`` of ``P``, flattened row-major."""
    k, n = P.shape
    pulled = table[Q[:, :, None], Q[:, None, :]]
    return np.take_along_axis(P, pulled.reshape(k, n * n), axis=1)


def _lexmin_rows(rows: np.ndarray) -> int:
    """Index of the lexicographically smallest row (first one on ties)."""
    order = np.lexsort(rows.T[::-1])
    return int(order[0])


def canonical_table(t: CayleyTable | np.ndarray) -> tuple[bytes, tuple[int, ...]]:
    """Minimal row-major table over all relabelings, plus the relabeling attaining it."""
    T = t.table if isinstance(t, CayleyTable) else np.asarray(t)
    P, Q = _perm_arrays(T.shape[0])
    rows = _relabel_all(T, P, Q)
    i = _lexmin_rows(rows)
    return rows[i].astype(np.uint8).tobytes(), tuple(int(x) for x in P[i])


def canonical_pair(add: np.ndarray, mul: np.ndarray) -> tuple[bytes, tuple[int, ...]]:
    P, Q = _perm_arrays(add.shape[0])
    rows = np.concatenate([_relabel_all(add, P, Q), _relabel_all(mul, P, Q)], axis=1)
    i = _lexmin_rows(rows)
    return rows[i].astype(np.uint8).tobytes(), tuple(int(x) for x in P[i])


def canonical_form(wb: WeakBrace) -> bytes:
    """The minimal concatenated ``(add, mul)`` byte string over all relabelings."""
    return canonical_pair(wb.A, wb.M)[0]


def _check_order(n: int, cap: int):
    if n < 1:
        raise AlgebraError(f"order must be positive, got {n}")
    if n > cap:
        raise OrderTooLarge(f"enumeration capped at order {cap}, got {n}")


def _labeled_inverse_tables(n: int) -> list[np.ndarray]:
    """Every labeled inverse-semigroup table on ``range(n)``, in lexicographic order.

    Cells are filled row-major.  After each assignment the associativity
    triples that just became fully determined are checked, and a branch
    dies as soon as some element has two confirmed inverses.
    """
    t = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    out: list[np.ndarray] = []

    def assoc_ok(i: int, j: int) -> bool:
        # every triple (a, b, c) in which cell (i, j) plays one of the four roles
        triples = set()
        for c in range(n):
            triples.add((i, j, c))
        for a in range(n):
            triples.add((a, i, j))
        for a in range(n):
            for b in range(n):
                if t[a][b] == i:
                    triples.add((a, b, j))
                if t[a][b] == j:
                    triples.add((i, a, b))
        for a, b, c in triples:
            ab, bc = t[a][b], t[b][c]
            if ab < 0 or bc < 0:
                continue
            left, right = t[ab][c], t[a][bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def is_inverse(a: int, x: int) -> bool | None:
        ax, xa = t[a][x], t[x][a]
        if ax < 0 or xa < 0:
            return None
        axa, xax = t[ax][a], t[xa][x]
        if axa < 0 or xax < 0:
            return None
        return axa == a and xax == x

    def inverses_ok(complete: bool) -> bool:
        for a in range(n):
            found = 0
            for x in range(n):
                s = is_inverse(a, x)
                if s:
                    found += 1
            if found > 1 or (complete and found == 0):
                return False
        return True

    def fill(k: int):
        if k == len(cells):
            if inverses_ok(True):
                out.append(np.array(t, dtype=np.int64))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if assoc_ok(i, j) and inverses_ok(False):
                fill(k + 1)
        t[i][j] = -1

    fill(0)
    return out


@lru_cache(maxsize=None)
def _labeled_cache(n: int) -> tuple[np.ndarray, ...]:
    tables = _labeled_inverse_tables(n)
    for arr in tables:
        arr.setflags(write=False)
    return tuple(tables)


@dataclass(frozen=True)
class Census:
    order: int
    labeled: int
    structures: tuple

    @property
    def upto_iso(self) -> int:
        return len(self.structures)

    def summary(self) -> str:
        return f"order={self.order} labeled={self.labeled} upto-iso={self.upto_iso}"


def inverse_semigroup_census(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Census:
    _check_order(n, cap)
    labeled = _labeled_cache(n)
    reps: dict[bytes, CayleyTable] = {}
    for arr in labeled:
        key, perm = canonical_table(arr)
        if key not in reps:
            reps[key] = CayleyTable(arr).relabel(perm)
    ordered = tuple(reps[k] for k in sorted(reps))
    return Census(n, len(labeled), ordered)


def enumerate_inverse_semigroups(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[CayleyTable]:
    """Inverse semigroups of order ``n`` up to isomorphism, each in canonical labeling,
    sorted by canonical form."""
    return list(inverse_semigroup_census(n, cap).structures)


def _idempotent_mask(T: np.ndarray) -> bytes:
    return (np.diagonal(T) == np.arange(T.shape[0])).tobytes()


def _automorphism_count(T: np.ndarray) -> int:
    P, Q = _perm_arrays(T.shape[0])
    rows = _relabel_all(T, P, Q)
    return int((rows == T.reshape(1, -1)).all(axis=1).sum())


def _try_brace(add: np.ndarray, mul: np.ndarray) -> WeakBrace | None:
    try:
        return make_weak_brace(CayleyTable(add), CayleyTable(mul))
    except AlgebraError:
        return None


def weak_brace_census(n: int, prune: bool = True, cap: int = DEFAULT_ENUMERATION_CAP) -> Census:
    """Weak braces of order ``n``.

    The additive table ranges over isomorphism representatives and the
    multiplicative one over all labeled inverse-semigroup tables, so every
    isomorphism class is met.  With ``prune`` the multiplicative tables are
    restricted to those sharing the additive idempotent set; ``prune=False``
    runs the full pairing.  The labeled count is recovered from orbit sizes.
    """
    _check_order(n, cap)
    labeled_tables = _labeled_cache(n)
    by_mask: dict[bytes, list[np.ndarray]] = {}
    for arr in labeled_tables:
        by_mask.setdefault(_idempotent_mask(arr), []).append(arr)
    reps: dict[bytes, WeakBrace] = {}
    labeled = 0
    for add in inverse_semigroup_census(n, cap).structures:
        A = add.table
        candidates = by_mask.get(_idempotent_mask(A), []) if prune else labeled_tables
        hits = 0
        for M in candidates:
            wb = _try_brace(A, M)
            if wb is None:
                continue
            hits += 1
            key, perm = canonical_pair(A, M)
            if key not in reps:
                reps[key] = wb.relabel(perm)
        labeled += hits * (factorial(n) // _automorphism_count(A))
    ordered = tuple(reps[k] for k in sorted(reps))
    return Census(n, labeled, ordered)


def enumerate_weak_braces(n: int, prune: bool = True, cap: int = DEFAULT_ENUMERATION_CAP) -> list[WeakBrace]:
    """Weak braces of order ``n`` up to isomorphism, sorted by canonical form."""
    return list(weak_brace_census(n, prune, cap).structures)


def _element_profile(A: np.ndarray, M: np.ndarray) -> list[tuple]:
    """Isomorphism-invariant data per element, used to prune the search."""
    n = A.shape[0]
    out = []
    for a in range(n):
        prof = []
        for T in (A, M):
            x, seen = a, []
            while x not in seen:
                seen.append(x)
                x = int(T[x, a])
            prof.append((len(seen), seen.index(x), int((T[a] == a).sum()), int((T[:, a] == a).sum())))
        out.append(tuple(prof))
    return out


def are_isomorphic(wb1: WeakBrace, wb2: WeakBrace) -> tuple[int, ...] | None:
    """First bijection ``f`` (lexicographically) with ``f(a+b) = f(a)+f(b)`` and
    ``f(a o b) = f(a) o f(b)``, or None."""
    n = wb1.order
    if wb2.order != n:
        return None
    A1, M1, A2, M2 = wb1.A, wb1.M, wb2.A, wb2.M
    p1, p2 = _element_profile(A1, M1), _element_profile(A2, M2)
    if sorted(p1) != sorted(p2):
        return None
    f = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for x in range(k + 1):
            for y in range(k + 1):
                for T1, T2 in ((A1, A2), (M1, M2)):
                    z = int(T1[x, y])
                    if f[z] >= 0 and f[z] != T2[f[x], f[y]]:
                        return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        for y in range(n):
            if used[y] or p1[k] != p2[y]:
                continue
            f[k], used[y] = y, True
            if consistent(k) and search(k + 1):
                return True
            f[k], used[y] = -1, False
        return False

    if not search(0):
        return None
    return tuple(f)
