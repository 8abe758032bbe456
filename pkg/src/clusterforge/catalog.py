"""Named quivers: Dynkin and affine families, the exceptional
finite-mutation quivers, and the standard potentials on them.

Potential cycles are written in traversal order (each arrow's target is the
next arrow's source).
"""

from __future__ import annotations

from .qp import QP, DEFAULT_TRUNCATION
from .quiver import Quiver

# ---------------------------------------------------------------------------
# Dynkin / affine quivers (one concrete orientation each)
# ---------------------------------------------------------------------------


def linear_a(n: int) -> Quiver:
    """Path quiver 1 -> 2 -> ... -> n."""
    return Quiver.from_arrows(n, [(i, i + 1) for i in range(1, n)])


def dynkin_quiver(kind: str, n: int) -> Quiver:
    kind = kind.upper()
    if kind == "A":
        return linear_a(n)
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        arrows = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return Quiver.from_arrows(n, arrows)
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        arrows = [(i, i + 1) for i in range(1, n - 1)] + [(n, 3)]
        return Quiver.from_arrows(n, arrows)
    raise ValueError(f"unknown Dynkin kind {kind}")


def kronecker(m: int = 2) -> Quiver:
    """Generalized Kronecker quiver: two vertices, m parallel arrows."""
    return Quiver.from_arrows(2, [(1, 2, m)])


def affine_a(r: int, reversed_edges: int = 1) -> Quiver:
    """Affine A_r quiver: an (r+1)-cycle with some edges reversed (so the
    quiver is acyclic), or the Kronecker quiver for r = 1."""
    if r == 1:
        return kronecker(2)
    if not (1 <= reversed_edges <= r):
        raise ValueError("need at least one edge in each direction")
    n = r + 1
    arrows = []
    for i in range(1, n + 1):
        j = i % n + 1
        if i <= reversed_edges:
            arrows.append((j, i))
        else:
            arrows.append((i, j))
    return Quiver.from_arrows(n, arrows)


def affine_d(r: int) -> Quiver:
    if r < 4:
        raise ValueError("affine D_r needs r >= 4")
    n = r + 1
    arrows = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    return Quiver.from_arrows(n, arrows)


def affine_e(k: int) -> Quiver:
    if k == 6:
        arrows = [(1, 2), (2, 3), (3, 4), (4, 5), (6, 3), (7, 6)]
        return Quiver.from_arrows(7, arrows)
    if k == 7:
        arrows = [(i, i + 1) for i in range(1, 7)] + [(8, 4)]
        return Quiver.from_arrows(8, arrows)
    if k == 8:
        arrows = [(i, i + 1) for i in range(1, 8)] + [(9, 3)]
        return Quiver.from_arrows(9, arrows)
    raise ValueError("affine E_k needs k in {6,7,8}")


# ---------------------------------------------------------------------------
# Undirected diagrams for mutation-type matching
# ---------------------------------------------------------------------------


def _sym(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    M = [[0] * n for _ in range(n)]
    for (i, j) in edges:
        M[i - 1][j - 1] += 1
        M[j - 1][i - 1] += 1
    return tuple(tuple(r) for r in M)


def dynkin_diagrams(n: int) -> dict[str, tuple[tuple[int, ...], ...]]:
    """Underlying diagrams of the Dynkin quivers with n vertices."""
    out = {}
    out[f"A{n}"] = _sym(n, [(i, i + 1) for i in range(1, n)])
    if n >= 4:
        out[f"D{n}"] = _sym(n, [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)])
    if n in (6, 7, 8):
        out[f"E{n}"] = _sym(n, [(i, i + 1) for i in range(1, n - 1)] + [(n, 3)])
    return out


def affine_diagrams(n: int) -> dict[str, tuple[tuple[int, ...], ...]]:
    """Underlying diagrams of the affine quivers with n vertices (rank n-1)."""
    out = {}
    if n == 2:
        out["A1^(1)"] = ((0, 2), (2, 0))
    if n >= 3:
        out[f"A{n - 1}^(1)"] = _sym(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if n >= 5:
        r = n - 1
        out[f"D{r}^(1)"] = _sym(n, [(1, 3), (2, 3)]
                                + [(i, i + 1) for i in range(3, n - 2)]
                                + [(n - 2, n - 1), (n - 2, n)])
    if n == 7:
        out["E6^(1)"] = _sym(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)])
    if n == 8:
        out["E7^(1)"] = _sym(8, [(i, i + 1) for i in range(1, 7)] + [(4, 8)])
    if n == 9:
        out["E8^(1)"] = _sym(9, [(i, i + 1) for i in range(1, 8)] + [(3, 9)])
    return out


# ---------------------------------------------------------------------------
# Exceptional finite-mutation quivers
# ---------------------------------------------------------------------------


def x6() -> Quiver:
    # center 1; doubled arrows 2=>3 and 5=>4; pendant 6
    return Quiver.from_arrows(6, [(1, 2), (3, 1), (1, 5), (4, 1), (6, 1), (2, 3, 2), (5, 4, 2)])


def x7() -> Quiver:
    # center 1 with three doubled blades
    return Quiver.from_arrows(7, [(1, 2), (3, 1), (1, 4), (5, 1), (1, 7), (6, 1),
                                  (2, 3, 2), (4, 5, 2), (7, 6, 2)])


def elliptic_e(k: int) -> Quiver:
    """The E_k^(1,1) quivers (doubled arrow between the two hub vertices)."""
    if k == 6:
        # hubs: u=3, d=4
        arrows = [(1, 2), (3, 2), (2, 4), (3, 5), (5, 4), (4, 3, 2),
                  (6, 5), (8, 7), (3, 7), (7, 4)]
        return Quiver.from_arrows(8, arrows)
    if k == 7:
        # hubs: u=4, d=5
        arrows = [(1, 2), (2, 3), (4, 3), (3, 5), (4, 6), (6, 5), (5, 4, 2),
                  (8, 7), (9, 8), (4, 7), (7, 5)]
        return Quiver.from_arrows(9, arrows)
    if k == 8:
        # hubs: u=3, d=4
        arrows = [(1, 2), (3, 2), (2, 4), (3, 5), (5, 4), (4, 3, 2),
                  (7, 6), (8, 7), (3, 6), (6, 4), (9, 8), (10, 9)]
        return Quiver.from_arrows(10, arrows)
    raise ValueError("elliptic E_k needs k in {6,7,8}")


def markov() -> Quiver:
    """Rank-3 doubled directed triangle: finite mutation type, not acyclic."""
    return Quiver.from_arrows(3, [(1, 2, 2), (2, 3, 2), (3, 1, 2)])


def table1_builders() -> dict[str, object]:
    """All exceptional finite-mutation quivers, keyed by name.  K_m for
    m >= 3 is handled separately (any rank-2 quiver is finite mutation type).
    """
    return {
        "E6": lambda: dynkin_quiver("E", 6),
        "E7": lambda: dynkin_quiver("E", 7),
        "E8": lambda: dynkin_quiver("E", 8),
        "E6^(1)": lambda: affine_e(6),
        "E7^(1)": lambda: affine_e(7),
        "E8^(1)": lambda: affine_e(8),
        "E6^(1,1)": lambda: elliptic_e(6),
        "E7^(1,1)": lambda: elliptic_e(7),
        "E8^(1,1)": lambda: elliptic_e(8),
        "X6": x6,
        "X7": x7,
    }


# ---------------------------------------------------------------------------
# Quivers with potentials
# ---------------------------------------------------------------------------


def qp_a3_zero(trunc: int = DEFAULT_TRUNCATION) -> QP:
    return QP.from_named(3, [("a", 1, 2), ("b", 2, 3)], [], trunc)


def qp_cycle3(trunc: int = DEFAULT_TRUNCATION) -> QP:
    """Oriented 3-cycle with its full-cycle potential."""
    return QP.from_named(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)],
                         [(1, ["a", "b", "c"])], trunc)


def qp_kronecker(m: int = 2, trunc: int = DEFAULT_TRUNCATION) -> QP:
    return QP.from_quiver(kronecker(m), [], trunc)


_T1_ARROWS = [("a1", 1, 2), ("a2", 1, 2), ("g1", 2, 3), ("g2", 2, 3), ("b1", 3, 1), ("b2", 3, 1)]


def qp_t1(trunc: int = DEFAULT_TRUNCATION) -> QP:
    """Doubled 3-cycle with the Jacobi-finite, tame potential."""
    return QP.from_named(3, _T1_ARROWS,
                         [(1, ["g1", "b1", "a1"]), (1, ["g2", "b2", "a2"])], trunc)


def qp_t1_prime(trunc: int = DEFAULT_TRUNCATION) -> QP:
    """Doubled 3-cycle with the non-degenerate potential whose Jacobian
    quotient keeps growing (not Jacobi-finite)."""
    return QP.from_named(3, _T1_ARROWS,
                         [(1, ["g2", "b2", "a1"]), (1, ["g2", "b1", "a2"]), (1, ["g1", "b2", "a2"])],
                         trunc)


_T2_ARROWS = [("a1", 1, 2), ("a2", 1, 2), ("g1", 2, 3), ("g2", 2, 4),
              ("b1", 3, 1), ("b2", 4, 1), ("d", 3, 4)]


def t2_quiver() -> Quiver:
    return Quiver.from_arrows(4, [(1, 2, 2), (2, 3), (2, 4), (3, 1), (4, 1), (3, 4)])


def qp_t2_tame(trunc: int = DEFAULT_TRUNCATION) -> QP:
    return QP.from_named(4, _T2_ARROWS,
                         [(1, ["g1", "b1", "a1"]), (1, ["g2", "b2", "a2"])], trunc)


def qp_t2_wild(trunc: int = DEFAULT_TRUNCATION) -> QP:
    return QP.from_named(4, _T2_ARROWS,
                         [(1, ["g1", "b1", "a1"]), (1, ["g2", "b2", "a1"]),
                          (1, ["g1", "d", "b2", "a2"])], trunc)


def qp_x6(trunc: int = DEFAULT_TRUNCATION) -> QP:
    """X6 with its standard non-degenerate Jacobi-finite potential.
    Vertices: 1,3 doubled pair; 2,4 doubled pair; 6 center; 5 pendant."""
    arrows = [("a1", 1, 3), ("a1p", 1, 3), ("a2", 2, 4), ("a2p", 2, 4),
              ("b1", 3, 6), ("b2", 4, 6), ("g1", 6, 1), ("g2", 6, 2), ("d", 6, 5)]
    terms = [(1, ["a1", "b1", "g1"]),
             (1, ["a2", "b2", "g2"]),
             (1, ["a1p", "b1", "g2", "a2p", "b2", "g1"])]
    return QP.from_named(6, arrows, terms, trunc)


def qp_x7(trunc: int = DEFAULT_TRUNCATION) -> QP:
    """X7 with the standard potential (three doubled blades around vertex 0,
    here renumbered to 1..7 with center 1)."""
    arrows = [("a1", 1, 2), ("b1", 2, 3), ("d1", 2, 3), ("g1", 3, 1),
              ("a2", 1, 4), ("b2", 4, 5), ("d2", 4, 5), ("g2", 5, 1),
              ("a3", 1, 6), ("b3", 6, 7), ("d3", 6, 7), ("g3", 7, 1)]
    terms = [(1, ["a1", "b1", "g1"]), (1, ["a2", "b2", "g2"]), (1, ["a3", "b3", "g3"]),
             (1, ["a2", "d2", "g2", "a1", "d1", "g1"]),
             (1, ["a3", "d3", "g3", "a2", "d2", "g2"]),
             (1, ["a1", "d1", "g1", "a3", "d3", "g3"]),
             (1, ["a3", "d3", "g3", "a2", "d2", "g2", "a1", "d1", "g1"])]
    return QP.from_named(7, arrows, terms, trunc)
