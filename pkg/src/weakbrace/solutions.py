"""Maps on S x S: the solution of a weak brace, braid checks, powers,
complete regularity and equivalence search.

A :class:`PairMap` stores ``r(a, b) = (x, y)`` as the code ``x * n + y`` at
position ``a * n + b``, so composition is a single indexing operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .brace import WeakBrace, opposite
from .errors import MismatchWithOpposite, OrderMismatch, OrderTooLarge, PreconditionFailed
from .report import Report
from .semigroup import first_true

DEFAULT_EQUIVALENCE_CAP = 8


@dataclass(frozen=True, eq=False)
class PairMap:
    order: int
    forward: np.ndarray

    def __post_init__(self):
        fwd = np.array(self.forward, dtype=np.int64).reshape(-1)
        n = self.order
        if fwd.shape != (n * n,) or (n and (fwd.min() < 0 or fwd.max() >= n * n)):
            raise PreconditionFailed(f"pair map on {n} elements needs {n * n} codes in range")
        fwd.setflags(write=False)
        object.__setattr__(self, "forward", fwd)

    @classmethod
    def from_components(cls, first, second) -> PairMap:
        first = np.asarray(first, dtype=np.int64)
        second = np.asarray(second, dtype=np.int64)
        n = first.shape[0]
        return cls(n, (first * n + second).reshape(-1))

    @classmethod
    def from_pairs(cls, order: int, pairs) -> PairMap:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(order * order, 2)
        return cls(order, pairs[:, 0] * order + pairs[:, 1])

    @classmethod
    def identity(cls, n: int) -> PairMap:
        return cls(n, np.arange(n * n))

    @classmethod
    def twist(cls, n: int) -> PairMap:
        x = np.arange(n)
        return cls.from_components(np.broadcast_to(x[None, :], (n, n)), np.broadcast_to(x[:, None], (n, n)))

    @property
    def first(self) -> np.ndarray:
        return (self.forward // self.order).reshape(self.order, self.order)

    @property
    def second(self) -> np.ndarray:
        return (self.forward % self.order).reshape(self.order, self.order)

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        code = int(self.forward[a * self.order + b])
        return divmod(code, self.order)

    def pairs(self) -> list[list[int]]:
        return [list(divmod(int(c), self.order)) for c in self.forward]

    def image_size(self) -> int:
        return len(np.unique(self.forward))

    def __eq__(self, other):
        if not isinstance(other, PairMap):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.forward, other.forward)

    def __hash__(self):
        return hash((self.order, self.forward.tobytes()))

    def __repr__(self):
        return f"PairMap(order={self.order})"


def solution_of(wb: WeakBrace) -> PairMap:
    """``r(a, b) = (lambda_a(b), rho_b(a))``."""
    return PairMap.from_components(wb.lam, wb.rho.T)


def compose(p: PairMap, q: PairMap) -> PairMap:
    """The map ``p o q``: apply ``q`` first."""
    if p.order != q.order:
        raise OrderMismatch(f"orders {p.order} and {q.order} differ")
    return PairMap(p.order, p.forward[q.forward])


def power(p: PairMap, k: int) -> PairMap:
    if k < 0:
        raise PreconditionFailed("power needs k >= 0")
    result = PairMap.identity(p.order)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def _braid_sides(F1: np.ndarray, F2: np.ndarray):
    n = F1.shape[0]
    a = np.broadcast_to(np.arange(n)[:, None, None], (n, n, n))
    b = np.broadcast_to(np.arange(n)[None, :, None], (n, n, n))
    c = np.broadcast_to(np.arange(n)[None, None, :], (n, n, n))

    def r12(x, y, z):
        return F1[x, y], F2[x, y], z

    def r23(x, y, z):
        return x, F1[y, z], F2[y, z]

    left = r12(*r23(*r12(a, b, c)))
    right = r23(*r12(*r23(a, b, c)))
    return left, right


def check_braid(pm: PairMap) -> tuple[int, int, int] | None:
    """None if ``pm`` satisfies the braid relation, else the first failing triple."""
    left, right = _braid_sides(pm.first, pm.second)
    mask = (left[0] != right[0]) | (left[1] != right[1]) | (left[2] != right[2])
    return first_true(mask)


def check_componentwise(wb: WeakBrace) -> Report:
    """The three lambda/rho conditions equivalent to the braid relation."""
    L, R = wb.lam, wb.rho
    n = wb.order
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    lab = L[a, b]
    rba = R[b, a]
    lbc = L[b, c]
    rep = Report("componentwise braid conditions")
    rep.add_mask("lambda_a lambda_b(c) = lambda_{lambda_a(b)} lambda_{rho_b(a)}(c)",
                 L[a, lbc] == L[lab, L[rba, c]])
    rep.add_mask("lambda_{rho_{lambda_b(c)}(a)} rho_c(b) = rho_{lambda_{rho_b(a)}(c)} lambda_a(b)",
                 L[R[lbc, a], R[c, b]] == R[L[rba, c], lab])
    rep.add_mask("rho_c rho_b(a) = rho_{rho_c(b)} rho_{lambda_b(c)}(a)",
                 R[c, rba] == R[R[c, b], R[lbc, a]])
    return rep


def op_solution_formula(wb: WeakBrace) -> PairMap:
    """``(a o b - a, (a o b - a)' o a o b)`` evaluated on every pair."""
    A, M, neg, inv = wb.A, wb.M, wb.neg, wb.inv
    n = wb.order
    a, b = np.arange(n)[:, None], np.arange(n)[None, :]
    first = A[M[a, b], neg[a]]
    second = M[inv[first], M[a, b]]
    return PairMap.from_components(first, second)


def op_solution(wb: WeakBrace) -> PairMap:
    """The solution of the opposite weak brace, computed two ways."""
    direct = op_solution_formula(wb)
    via_opposite = solution_of(opposite(wb))
    if direct != via_opposite:
        bad = first_true(direct.forward != via_opposite.forward)
        raise MismatchWithOpposite("formula and opposite-brace solution differ",
                                   divmod(bad[0], wb.order))
    return direct


def idempotent_companion(mul) -> PairMap:
    """``(a o b o b', a' o a o b)`` for any inverse semigroup ``mul``."""
    M, inv = mul.table, mul.inv_array
    n = mul.order
    a, b = np.arange(n)[:, None], np.arange(n)[None, :]
    return PairMap.from_components(M[M[a, b], inv[b]], M[M[inv[a], a], b])


def regularity_report(wb: WeakBrace) -> Report:
    r = solution_of(wb)
    rop = op_solution(wb)
    r_rop = compose(r, rop)
    rep = Report("complete regularity")
    rep.add("r rop r = r", compose(r_rop, r) == r)
    rep.add("rop r rop = rop", compose(compose(rop, r), rop) == rop)
    rep.add("r rop = rop r", r_rop == compose(rop, r))
    companion = idempotent_companion(wb.mul)
    bad = first_true(r_rop.forward != companion.forward)
    rep.add("r rop (a,b) = (a o b o b', a' o a o b)", bad is None,
            None if bad is None else divmod(bad[0], wb.order))
    braid = check_braid(r_rop)
    rep.add("r rop is a solution", braid is None, braid)
    rep.add("r rop is idempotent", compose(r_rop, r_rop) == r_rop)
    return rep


def _multiple(A: np.ndarray, x: np.ndarray, k: int) -> np.ndarray | None:
    """``x + x + ... + x`` (k terms) elementwise; None for k = 0."""
    if k == 0:
        return None
    out = x
    for _ in range(k - 1):
        out = A[out, x]
    return out


def _sum(A: np.ndarray, *terms):
    out = None
    for t in terms:
        if t is None:
            continue
        out = t if out is None else A[out, t]
    return out


def closed_form_power(wb: WeakBrace, k: int) -> PairMap:
    """Evaluate the closed form of ``r^k`` on every pair, with ``k >= 1``.

    Even ``k = 2m``: first component ``-m(a o b) + a + m(a o b)``.
    Odd ``k = 2m + 1``: first component ``-m(a o b) - a + (m + 1)(a o b)``.
    The second component is always ``first' o a o b``.
    """
    if k < 1:
        raise PreconditionFailed("closed form needs k >= 1")
    A, M, neg, inv = wb.A, wb.M, wb.neg, wb.inv
    n = wb.order
    a = np.broadcast_to(np.arange(n)[:, None], (n, n))
    ab = M[a, np.arange(n)[None, :]]
    m, odd = divmod(k, 2)
    m_ab = _multiple(A, ab, m)
    minus_m_ab = None if m_ab is None else neg[m_ab]
    if odd:
        first = _sum(A, minus_m_ab, neg[a], _multiple(A, ab, m + 1))
    else:
        first = _sum(A, minus_m_ab, a, m_ab)
    second = M[inv[first], ab]
    return PairMap.from_components(first, second)


def power_closed_form(wb: WeakBrace, k: int, a: int, b: int) -> tuple[int, int]:
    return closed_form_power(wb, k)(a, b)


@dataclass(frozen=True)
class SolutionProfile:
    satisfies_ybe: bool
    involutive: bool
    idempotent: bool
    cubic: bool
    cube_equals_square: bool
    bijective: bool
    image_size: int
    left_nondegenerate: bool
    right_nondegenerate: bool
    braid_counterexample: tuple | None = None
    completely_regular_with: PairMap | None = None

    def to_dict(self) -> dict:
        return {
            "satisfiesYBE": self.satisfies_ybe,
            "involutive": self.involutive,
            "idempotent": self.idempotent,
            "cubic": self.cubic,
            "cubeEqualsSquare": self.cube_equals_square,
            "bijective": self.bijective,
            "imageSize": self.image_size,
            "leftNondegenerate": self.left_nondegenerate,
            "rightNondegenerate": self.right_nondegenerate,
            "braidCounterexample": list(self.braid_counterexample) if self.braid_counterexample else None,
            "completelyRegularWith": self.completely_regular_with is not None,
        }


def is_completely_regular_pair(r: PairMap, s: PairMap) -> bool:
    rs = compose(r, s)
    return compose(rs, r) == r and compose(compose(s, r), s) == s and rs == compose(s, r)


def classify(pm: PairMap, partner: PairMap | None = None) -> SolutionProfile:
    """Compute every flag by explicit composition, solution or not."""
    n = pm.order
    ident = PairMap.identity(n)
    r2 = compose(pm, pm)
    r3 = compose(r2, pm)
    braid = check_braid(pm)
    F1, F2 = pm.first, pm.second
    return SolutionProfile(
        satisfies_ybe=braid is None,
        involutive=r2 == ident,
        idempotent=r2 == pm,
        cubic=r3 == pm,
        cube_equals_square=r3 == r2,
        bijective=pm.image_size() == n * n,
        image_size=pm.image_size(),
        left_nondegenerate=all(len(set(F1[a].tolist())) == n for a in range(n)),
        right_nondegenerate=all(len(set(F2[:, b].tolist())) == n for b in range(n)),
        braid_counterexample=braid,
        completely_regular_with=partner if partner is not None and is_completely_regular_pair(pm, partner) else None,
    )


def _fingerprints(pm: PairMap) -> list[tuple]:
    """Per-element invariants preserved by every equivalence of solutions."""
    F1, F2 = pm.first, pm.second
    n = pm.order
    x = np.arange(n)
    fps = []
    for e in range(n):
        fps.append((
            int(F1[e, e] == e), int(F2[e, e] == e),
            int(np.sum(F1[e, :] == x)), int(np.sum(F1[e, :] == e)),
            int(np.sum(F2[e, :] == x)), int(np.sum(F2[e, :] == e)),
            int(np.sum(F1[:, e] == x)), int(np.sum(F1[:, e] == e)),
            int(np.sum(F2[:, e] == x)), int(np.sum(F2[:, e] == e)),
            len(set(F1[e, :].tolist())), len(set(F2[:, e].tolist())),
            int(np.sum(F1 == e)), int(np.sum(F2 == e)),
        ))
    return fps


def are_equivalent(p: PairMap, q: PairMap, max_order: int = DEFAULT_EQUIVALENCE_CAP) -> tuple[int, ...] | None:
    """First bijection ``f`` (lexicographic) with ``(f x f) p = q (f x f)``.

    Depth-first over partial bijections in lexicographic order; a branch is
    cut only when it already contradicts the equation or pairs elements with
    different fingerprints, so the first witness found is the
    lexicographically first one overall.
    """
    if p.order != q.order:
        return None
    n = p.order
    if n > max_order:
        raise OrderTooLarge(f"equivalence search capped at order {max_order}, got {n}")
    P1, P2 = p.first.tolist(), p.second.tolist()
    Q1, Q2 = q.first.tolist(), q.second.tolist()
    fp_p, fp_q = _fingerprints(p), _fingerprints(q)
    if sorted(fp_p) != sorted(fp_q):
        return None
    f = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        # pairs touching the newly assigned element k
        for a in range(k + 1):
            for b, c in ((a, k), (k, a)):
                fa, fb = f[b], f[c]
                x, y = P1[b][c], P2[b][c]
                if x <= k and f[x] != Q1[fa][fb]:
                    return False
                if y <= k and f[y] != Q2[fa][fb]:
                    return False
        # earlier pairs whose image involves k
        for b in range(k):
            for c in range(k):
                fa, fb = f[b], f[c]
                if P1[b][c] == k and f[k] != Q1[fa][fb]:
                    return False
                if P2[b][c] == k and f[k] != Q2[fa][fb]:
                    return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        for cand in range(n):
            if used[cand] or fp_p[k] != fp_q[cand]:
                continue
            f[k] = cand
            used[cand] = True
            if consistent(k) and search(k + 1):
                return True
            used[cand] = False
        f[k] = -1
        return False

    return tuple(f) if search(0) else None


def bijection_count(n: int) -> int:
    return math.factorial(n)


def is_equivalence(f, p: PairMap, q: PairMap) -> bool:
    """Direct check of ``(f x f) p = q (f x f)``."""
    f = np.asarray(f)
    n = p.order
    lhs = PairMap.from_components(f[p.first], f[p.second])
    fa = np.broadcast_to(f[:, None], (n, n))
    fb = np.broadcast_to(f[None, :], (n, n))
    rhs = PairMap.from_components(q.first[fa, fb], q.second[fa, fb])
    return lhs == rhs
