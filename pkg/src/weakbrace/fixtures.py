"""Builders for the worked examples shipped as JSON fixtures.

``python -m weakbrace.fixtures DIR`` regenerates every file; the test suite
checks the shipped copies against these builders.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from .brace import WeakBrace
from .constructions import (
    DoubleSystem,
    MatchedSystem,
    almost_trivial_wb,
    matched_product,
    semidirect_system,
    trivial_wb,
    validate_double_system,
)
from .factorization import sym3_factorization, sym3_showcase
from .io import Document, dumps, to_document
from .semigroup import CayleyTable, InverseSemigroupView, cyclic, semidirect_semigroup, semilattice, subtable, symmetric
from .solutions import PairMap

X3 = ("1", "x", "y")


def chain2() -> CayleyTable:
    """Two-element meet semilattice ``0 < 1``."""
    return semilattice(2, [(0, 1)])


def chain3() -> CayleyTable:
    return semilattice(3, [(0, 1), (1, 2)])


def brandt_b2() -> CayleyTable:
    """Matrix units ``e_ij`` of size 2 with a zero: ``e_ij e_kl = e_il`` if ``j = k``."""
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    labels = ["0"] + [f"e{i}{j}" for i, j in units]
    table = np.zeros((5, 5), dtype=np.int64)
    for p, (i, j) in enumerate(units, 1):
        for q, (k, l) in enumerate(units, 1):
            if j == k:
                table[p, q] = units.index((i, l)) + 1
    return CayleyTable(table, labels)


def join_semilattice_xy() -> CayleyTable:
    """``{1, x, y}`` with ``x + y = 1``: the upper semilattice with top 1."""
    return semilattice(3, [(1, 0), (2, 0)], op="join", labels=X3)


def monoid_xy() -> CayleyTable:
    """Commutative inverse monoid on ``{1, x, y}``: ``xx = yy = x``, ``xy = y``."""
    return CayleyTable([[0, 1, 2], [1, 1, 2], [2, 2, 1]], X3)


SWAP_XY_ACTION = [[0, 1, 2], [0, 1, 2], [0, 2, 1]]  # sigma(1) = sigma(x) = id, sigma(y) = (x y)


def semidirect_3x3_system() -> MatchedSystem:
    return semidirect_system(trivial_wb(join_semilattice_xy()), trivial_wb(monoid_xy()), SWAP_XY_ACTION)


def semidirect_3x3() -> WeakBrace:
    return matched_product(semidirect_3x3_system())


def semidirect_3x3_double() -> DoubleSystem:
    """The same product read as a double semidirect product with trivial delta."""
    S, T = trivial_wb(join_semilattice_xy()), trivial_wb(monoid_xy())
    return validate_double_system(S, T, SWAP_XY_ACTION, np.tile(np.arange(3), (3, 1)))


def z3_by_monoid_xy() -> CayleyTable:
    """Semidirect product of the group Z3 by the monoid ``{1, x, y}``, ``y`` acting by negation."""
    return semidirect_semigroup(cyclic(3), monoid_xy(), [[0, 1, 2], [0, 1, 2], [0, 2, 1]])


def sym3_conjugation_system() -> MatchedSystem:
    """Sym3 acting on itself by conjugation, trivial beta; 36-element carrier."""
    G = symmetric(3)
    inv = InverseSemigroupView(G).inv_array
    conj = G.table[G.table[:, :], inv[:, None]]  # conj[u, a] = u a u'
    return semidirect_system(trivial_wb(G), trivial_wb(G), conj)


def sym3_double_system() -> DoubleSystem:
    """G_circ for Sym3 as a double semidirect product of <(12)> and <(123)>.

    S is the trivial brace on U, T the almost trivial brace on V, sigma is
    trivial and ``t^b = -b + t + b``.
    """
    G = symmetric(3)
    f = sym3_factorization()
    U, V = list(f.U), list(f.V)
    inv = InverseSemigroupView(G).inv_array
    delta = [[V.index(int(G.table[G.table[inv[b], t], b])) for t in V] for b in U]
    sigma = [list(range(len(U))) for _ in V]
    return validate_double_system(trivial_wb(subtable(G, U)), almost_trivial_wb(subtable(G, V)), sigma, delta)


def fixture_objects() -> dict[str, object]:
    show = sym3_showcase()
    c2, ch2, s3 = cyclic(2), chain2(), symmetric(3)
    return {
        "c2": c2,
        "chain2": ch2,
        "chain3": chain3(),
        "brandt_b2": brandt_b2(),
        "sym3": s3,
        "join_semilattice_xy": join_semilattice_xy(),
        "monoid_xy": monoid_xy(),
        "z3_by_monoid_xy": z3_by_monoid_xy(),
        "trivial_c2": trivial_wb(c2),
        "almost_trivial_c2": almost_trivial_wb(c2),
        "trivial_chain2": trivial_wb(ch2),
        "almost_trivial_chain2": almost_trivial_wb(ch2),
        "trivial_sym3": trivial_wb(s3),
        "almost_trivial_sym3": almost_trivial_wb(s3),
        "semidirect_3x3_system": semidirect_3x3_system(),
        "semidirect_3x3": semidirect_3x3(),
        "semidirect_3x3_double": semidirect_3x3_double(),
        "sym3_conjugation_system": sym3_conjugation_system(),
        "sym3_double_system": sym3_double_system(),
        "sym3_circ": show.circ,
        "sym3_bullet": show.bullet,
        "sym3_rcirc": show.r_circ,
        "sym3_rbullet": show.r_bullet,
        "twist4": PairMap.twist(4),
    }


def fixture_documents() -> dict[str, Document]:
    return {name: to_document(obj) for name, obj in fixture_objects().items()}


def write_fixtures(directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in fixture_documents().items():
        path = out / f"{name}.json"
        path.write_text(dumps(doc, pretty=True) + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
