"""Cluster algebras with principal coefficients: exact seed mutation,
g-vectors by grading and by the transition recurrence, cluster enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, NotHomogeneous, check_laurent, product
from .quiver import Quiver, b_matrix, mutate

__all__ = [
    "Seed", "initial_seed", "mutate_seed", "g_vector_of", "mutate_gvector",
    "enumerate_clusters", "ClusterEnumeration", "NotHomogeneous", "check_laurent",
]


@dataclass(frozen=True)
class Seed:
    """A seed of the principal-coefficients pattern: the framed quiver on 2n
    vertices (frozen vertices n+1..2n are never mutated) plus the current
    cluster of n exact Laurent polynomials, plus the mutation history."""

    framed_quiver: Quiver
    cluster: tuple[LaurentPoly, ...]
    history: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.cluster)

    def g_matrix(self, B0: list[list[int]]) -> tuple[tuple[int, ...], ...]:
        """g-vectors of the cluster entries, as a tuple of columns."""
        return tuple(p.grading_degree(B0) for p in self.cluster)


def framed_quiver(q: Quiver) -> Quiver:
    arrows = list(q.arrows) + [(i, q.n + i, 1) for i in range(1, q.n + 1)]
    return Quiver.from_arrows(2 * q.n, arrows)


def initial_seed(q: Quiver) -> Seed:
    n = q.n
    cluster = tuple(LaurentPoly.x_var(n, i) for i in range(1, n + 1))
    return Seed(framed_quiver(q), cluster, ())


def mutate_seed(s: Seed, k: int) -> Seed:
    """Exchange x_k for x'_k with x_k x'_k = prod_{j->k} x_j y_{j-n}
    + prod_{j<-k} x_j y_{j-n}, products over arrows of the framed quiver with
    multiplicity, x_{n+1..2n} = 1 and y_{<=0} = 1."""
    n = s.n
    if not (1 <= k <= n):
        raise ValueError(f"vertex {k} is not mutable (1..{n})")
    q = s.framed_quiver

    def factor(j: int) -> LaurentPoly:
        if j <= n:
            return s.cluster[j - 1]
        return LaurentPoly.y_var(n, j - n)

    p_in = product(n, (factor(j) for (j, m) in q.neighbors_in(k) for _ in range(m)))
    p_out = product(n, (factor(j) for (j, m) in q.neighbors_out(k) for _ in range(m)))
    new_xk = (p_in + p_out).exact_div(s.cluster[k - 1])
    cluster = tuple(new_xk if i == k - 1 else p for i, p in enumerate(s.cluster))
    hist = s.history[:-1] if (s.history and s.history[-1] == k) else s.history + (k,)
    return Seed(mutate(q, k), cluster, hist)


def g_vector_of(p: LaurentPoly, B0: list[list[int]]) -> tuple[int, ...]:
    """g-vector of a cluster variable: its common multidegree under
    deg(x_i) = e_i, deg(y_j) = sum_i(-b_ij e_i)."""
    return p.grading_degree(B0)


def mutate_gvector(g: tuple[int, ...], k: int, B: list[list[int]]) -> tuple[int, ...]:
    """Transition rule taking the g-fan of a quiver to the g-fan of its
    mutation at k:  g'_k = -g_k,  g'_i = g_i + [b_ik]_+ g_k - b_ik min(g_k, 0).
    """
    kk = k - 1
    gk = g[kk]
    out = list(g)
    out[kk] = -gk
    neg = min(gk, 0)
    for i in range(len(g)):
        if i == kk:
            continue
        b_ik = B[i][kk]
        out[i] = g[i] + max(b_ik, 0) * gk - b_ik * neg
    return tuple(out)


def sorted_g_matrix(gmat) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(gmat))


@dataclass(frozen=True)
class ClusterEnumeration:
    g_matrices: tuple[tuple[tuple[int, ...], ...], ...]  # sorted columns per cluster
    variables: tuple[tuple[int, ...], ...]               # distinct g-vectors
    status: str                                          # Exhausted | BudgetExceeded
    seeds: tuple[Seed, ...] = ()

    @property
    def exhausted(self) -> bool:
        return self.status == "Exhausted"


def enumerate_clusters(q: Quiver, budget: int = 100000, depth: int | None = None,
                       keep_seeds: bool = False, paranoid: bool = False) -> ClusterEnumeration:
    """BFS over seeds, deduplicating clusters by sorted g-matrix (clusters
    are determined by their g-vector cones).  With paranoid=True the Laurent
    data of colliding clusters is compared as well."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    B0 = b_matrix(q)
    s0 = initial_seed(q)
    key0 = sorted_g_matrix(s0.g_matrix(B0))
    seen: dict = {key0: s0}
    variables: set = set(key0)
    frontier = [s0]
    status = "Exhausted"
    level = 0
    while frontier:
        if depth is not None and level >= depth:
            status = "BudgetExceeded"
            break
        nxt = []
        for s in frontier:
            for k in range(1, s.n + 1):
                t = mutate_seed(s, k)
                key = sorted_g_matrix(t.g_matrix(B0))
                if key in seen:
                    if paranoid:
                        prev = seen[key]
                        if sorted(p.to_text() for p in prev.cluster) != \
                                sorted(p.to_text() for p in t.cluster):
                            raise AssertionError("g-matrix collision with distinct Laurent data")
                    continue
                if len(seen) >= budget:
                    status = "BudgetExceeded"
                    frontier = []
                    nxt = []
                    break
                seen[key] = t
                variables.update(key)
                nxt.append(t)
            else:
                continue
            break
        frontier = nxt
        level += 1
    return ClusterEnumeration(
        g_matrices=tuple(sorted(seen.keys())),
        variables=tuple(sorted(variables)),
        status=status,
        seeds=tuple(seen.values()) if keep_seeds else (),
    )
