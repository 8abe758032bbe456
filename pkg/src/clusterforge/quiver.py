"""Quivers (loop-free, 2-cycle-free multidigraphs) and their mutation theory.

The exchange matrix convention used throughout the package is

    b_ij = #{arrows j -> i} - #{arrows i -> j},

which is the unique choice making the rank-2 cluster variable (1 + x2*y1)/x1
homogeneous under the grading deg(y_j) = sum_i(-b_ij e_i).  A cross-check test
in the cluster module asserts this and fails loudly if the convention drifts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class InvalidVertex(ValueError):
    pass


class NotSkewSymmetric(ValueError):
    pass


class EmptySubset(ValueError):
    pass


class Disconnected(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without loops or 2-cycles.

    Arrows are stored as a sorted tuple of bundles (i, j, m): m parallel
    arrows from vertex i to vertex j, vertices 1-based.
    """

    n: int
    arrows: tuple[tuple[int, int, int], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        seen = {}
        for (i, j, m) in self.arrows:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvalidVertex(f"arrow ({i},{j}) out of range for n={self.n}")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if m < 1:
                raise ValueError("arrow multiplicity must be >= 1")
            if (i, j) in seen:
                raise ValueError(f"duplicate arrow bundle ({i},{j})")
            if (j, i) in seen:
                raise ValueError(f"2-cycle between {i} and {j}")
            seen[(i, j)] = m
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must equal n")

    @staticmethod
    def from_arrows(n: int, arrows: Iterable[tuple[int, int] | tuple[int, int, int]],
                    labels: Optional[Sequence[str]] = None) -> "Quiver":
        """Build a quiver from (i, j) pairs or (i, j, m) bundles, merging repeats."""
        bundle: dict[tuple[int, int], int] = {}
        for a in arrows:
            if len(a) == 2:
                i, j = a  # type: ignore[misc]
                m = 1
            else:
                i, j, m = a  # type: ignore[misc]
            bundle[(i, j)] = bundle.get((i, j), 0) + m
        arr = tuple((i, j, m) for (i, j), m in sorted(bundle.items()))
        return Quiver(n, arr, tuple(labels) if labels is not None else None)

    def arrow_multiplicity(self, i: int, j: int) -> int:
        for (a, b, m) in self.arrows:
            if (a, b) == (i, j):
                return m
        return 0

    def neighbors_in(self, k: int) -> list[tuple[int, int]]:
        """Pairs (j, m): m arrows j -> k."""
        return [(i, m) for (i, j, m) in self.arrows if j == k]

    def neighbors_out(self, k: int) -> list[tuple[int, int]]:
        """Pairs (j, m): m arrows k -> j."""
        return [(j, m) for (i, j, m) in self.arrows if i == k]

    def is_acyclic(self) -> bool:
        out = {v: [] for v in range(1, self.n + 1)}
        indeg = {v: 0 for v in range(1, self.n + 1)}
        for (i, j, m) in self.arrows:
            out[i].append(j)
            indeg[j] += 1
        queue = [v for v in indeg if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.n

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = {v: set() for v in range(1, self.n + 1)}
        for (i, j, m) in self.arrows:
            adj[i].add(j)
            adj[j].add(i)
        stack, seen = [1], {1}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def max_multiplicity(self) -> tuple[int, tuple[int, int]]:
        best, pair = 0, (0, 0)
        for (i, j, m) in self.arrows:
            if m > best:
                best, pair = m, (i, j)
        return best, pair

    def opposite(self) -> "Quiver":
        return Quiver.from_arrows(self.n, [(j, i, m) for (i, j, m) in self.arrows], self.labels)


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutate q at vertex k by the three-step rule: compose paths through k,
    reverse arrows incident to k, cancel a maximal set of disjoint 2-cycles."""
    if not (1 <= k <= q.n):
        raise InvalidVertex(f"vertex {k} out of range 1..{q.n}")
    # Net arrow counts c[i][j] allow intermediate 2-cycles before cancellation.
    count: dict[tuple[int, int], int] = {}
    for (i, j, m) in q.arrows:
        count[(i, j)] = count.get((i, j), 0) + m
    into = [(i, m) for (i, j, m) in q.arrows if j == k]
    outof = [(j, m) for (i, j, m) in q.arrows if i == k]
    # (1) add an arrow j -> i for every path j -> k -> i
    for (j, mj) in into:
        for (i, mi) in outof:
            count[(j, i)] = count.get((j, i), 0) + mj * mi
    # (2) reverse all arrows incident to k
    for (i, m) in into:
        count[(i, k)] -= m
        count[(k, i)] = count.get((k, i), 0) + m
    for (j, m) in outof:
        count[(k, j)] -= m
        count[(j, k)] = count.get((j, k), 0) + m
    # (3) cancel 2-cycles
    net: dict[tuple[int, int], int] = {}
    for (i, j) in {(min(i, j), max(i, j)) for (i, j) in count}:
        d = count.get((i, j), 0) - count.get((j, i), 0)
        if d > 0:
            net[(i, j)] = d
        elif d < 0:
            net[(j, i)] = -d
    arrows = tuple((i, j, m) for (i, j), m in sorted(net.items()))
    return Quiver(q.n, arrows, q.labels)


def b_matrix(q: Quiver) -> list[list[int]]:
    """Exchange matrix with b_ij = #{j -> i} - #{i -> j}."""
    B = [[0] * q.n for _ in range(q.n)]
    for (i, j, m) in q.arrows:
        B[j - 1][i - 1] += m
        B[i - 1][j - 1] -= m
    return B


def from_b_matrix(B: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Quiver:
    n = len(B)
    for row in B:
        if len(row) != n:
            raise NotSkewSymmetric("matrix is not square")
    for i in range(n):
        for j in range(n):
            if B[i][j] != -B[j][i] or int(B[i][j]) != B[i][j]:
                raise NotSkewSymmetric(f"entry ({i},{j}) breaks skew-symmetry")
    arrows = []
    for i in range(n):
        for j in range(n):
            if B[i][j] > 0:
                # b_ij > 0 encodes arrows j -> i
                arrows.append((j + 1, i + 1, int(B[i][j])))
    return Quiver.from_arrows(n, arrows, labels)


def mutate_b_matrix(B: Sequence[Sequence[int]], k: int) -> list[list[int]]:
    """Standard skew-symmetric matrix mutation (k 1-based); used as the
    independent oracle against the three-step arrow procedure."""
    n = len(B)
    kk = k - 1
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                out[i][j] = -B[i][j]
            else:
                # b_ij + sgn(b_ik) * [b_ik * b_kj]_+
                prod = B[i][kk] * B[kk][j]
                extra = 0
                if prod > 0:
                    extra = prod if B[i][kk] > 0 else -prod
                out[i][j] = B[i][j] + extra
    return out


def restrict(q: Quiver, subset: Iterable[int]) -> Quiver:
    """Full subquiver on the given vertex subset (vertices renumbered 1..|I|
    in increasing original order)."""
    verts = sorted(set(subset))
    if not verts:
        raise EmptySubset("vertex subset is empty")
    for v in verts:
        if not (1 <= v <= q.n):
            raise InvalidVertex(f"vertex {v} not in quiver")
    index = {v: i + 1 for i, v in enumerate(verts)}
    arrows = [(index[i], index[j], m) for (i, j, m) in q.arrows if i in index and j in index]
    labels = tuple(q.labels[v - 1] for v in verts) if q.labels is not None else None
    return Quiver.from_arrows(len(verts), arrows, labels)


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _refine_colors(mat: list[list[int]]) -> list[int]:
    """Weisfeiler-Leman style color refinement on a weighted digraph matrix."""
    n = len(mat)
    colors = [0] * n
    while True:
        sigs = []
        for i in range(n):
            neigh = sorted((colors[j], mat[i][j], mat[j][i]) for j in range(n) if j != i)
            sigs.append((colors[i], tuple(neigh)))
        order = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_matrix(mat: list[list[int]]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Lexicographically minimal matrix over simultaneous row/column
    permutations, with color-refinement pruning.

    Returns (canonical matrix, permutation) where permutation[p] = original
    index placed at position p.
    """
    n = len(mat)
    colors = _refine_colors(mat)
    best: list[tuple[int, ...]] | None = None
    best_perm: list[int] | None = None

    def rows_for(perm: list[int]) -> list[tuple[int, ...]]:
        return [tuple(mat[i][j] for j in perm) for i in perm]

    def search(perm: list[int], used: set[int]):
        nonlocal best, best_perm
        t = len(perm)
        if t == n:
            rows = rows_for(perm)
            if best is None or rows < best:
                best = rows
                best_perm = perm[:]
            return
        # candidates ordered by refined color, then index, for determinism
        cands = sorted((colors[v], v) for v in range(n) if v not in used)
        for _, v in cands:
            perm.append(v)
            used.add(v)
            if best is not None:
                # prune on the completed prefix rows
                rows = [tuple(mat[i][j] for j in perm) for i in perm]
                pref = [b[: len(perm)] for b in best[: len(perm)]]
                if rows > pref:
                    perm.pop()
                    used.remove(v)
                    continue
            search(perm, used)
            perm.pop()
            used.remove(v)

    search([], set())
    assert best is not None and best_perm is not None
    return tuple(best), tuple(best_perm)


def canonicalize(q: Quiver) -> tuple[Quiver, tuple[int, ...]]:
    """Canonical representative of the isomorphism class of q, plus the
    vertex permutation (position -> original vertex, 1-based)."""
    B = b_matrix(q)
    canon, perm = canonical_matrix(B)
    cq = from_b_matrix([list(r) for r in canon])
    return cq, tuple(p + 1 for p in perm)


def canonical_key(q: Quiver) -> tuple[tuple[int, ...], ...]:
    B = b_matrix(q)
    canon, _ = canonical_matrix(B)
    return canon


# ---------------------------------------------------------------------------
# Mutation classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityBlowup:
    pair: tuple[int, int]
    weight: int


@dataclass(frozen=True)
class MutationClassResult:
    representatives: tuple[Quiver, ...]
    status: object  # "Exhausted" | "BudgetExceeded" | MultiplicityBlowup
    edges: tuple[tuple[int, int, int], ...] = ()  # (rep index, vertex k, rep index)

    @property
    def exhausted(self) -> bool:
        return self.status == "Exhausted"


@dataclass(frozen=True)
class Classification:
    bucket: str   # Dynkin | Affine | ExceptionalFiniteMut | FiniteMutOther | InfiniteMut | Unknown
    name: str = ""

    def __str__(self):
        return f"{self.bucket}({self.name})" if self.name else self.bucket


def classify(q: Quiver, budget: int = 10000) -> Classification:
    """Mutation-type classification of a connected quiver.

    Dynkin/affine types are decided by finding an acyclic representative in
    the mutation class and matching its underlying diagram; the remaining
    exceptional finite-mutation-type quivers are matched by canonical class
    membership at the same rank.  A multiplicity blowup (weight >= 3 on
    n >= 3 vertices) certifies infinite mutation type; a budget stop yields
    Unknown.
    """
    from . import catalog

    if not q.is_connected():
        raise Disconnected("classify expects a connected quiver")
    if q.n == 1:
        return Classification("Dynkin", "A1")
    result = mutation_class(q, max_quivers=budget)
    if isinstance(result.status, MultiplicityBlowup):
        return Classification("InfiniteMut")
    if result.status == "BudgetExceeded":
        return Classification("Unknown")
    # rank 2: the class is one quiver K_m up to direction
    if q.n == 2:
        w, _ = q.max_multiplicity()
        if w == 1:
            return Classification("Dynkin", "A2")
        if w == 2:
            return Classification("Affine", "A1^(1)")
        return Classification("ExceptionalFiniteMut", f"K{w}")
    acyclic = next((r for r in result.representatives if r.is_acyclic()), None)
    if acyclic is not None:
        diagram = _underlying_matrix(acyclic)
        key = canonical_matrix(diagram)[0]
        for name, M in catalog.dynkin_diagrams(q.n).items():
            if canonical_matrix([list(r) for r in M])[0] == key:
                return Classification("Dynkin", name)
        for name, M in catalog.affine_diagrams(q.n).items():
            if canonical_matrix([list(r) for r in M])[0] == key:
                return Classification("Affine", name)
        # exhausted + acyclic but neither Dynkin nor affine cannot happen at
        # rank >= 3; fall through defensively
    keys = {canonical_key(r) for r in result.representatives}
    for name, builder in catalog.table1_builders().items():
        ex = builder()
        if ex.n != q.n:
            continue
        if canonical_key(ex) in keys:
            return Classification("ExceptionalFiniteMut", name)
    return Classification("FiniteMutOther")


def _underlying_matrix(q: Quiver) -> list[list[int]]:
    M = [[0] * q.n for _ in range(q.n)]
    for (i, j, m) in q.arrows:
        M[i - 1][j - 1] += m
        M[j - 1][i - 1] += m
    return M


def mutation_class(q: Quiver, max_quivers: int = 10000, max_weight: int = 3) -> MutationClassResult:
    """Breadth-first closure of q under mutation, deduplicated by canonical
    form.  Stops early with MultiplicityBlowup when an arrow bundle of
    multiplicity >= max_weight appears on a quiver with n >= 3 vertices
    (such a quiver cannot be of finite mutation type), or with
    BudgetExceeded past the representative budget."""
    if max_quivers < 1:
        raise ValueError("budget must be >= 1")
    w, pair = q.max_multiplicity()
    if q.n >= 3 and w >= max_weight:
        return MutationClassResult((q,), MultiplicityBlowup(pair, w))
    key0 = canonical_key(q)
    reps = [q]
    keys = {key0: 0}
    edges = []
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            cur = reps[idx]
            for k in range(1, cur.n + 1):
                m = mutate(cur, k)
                w, pair = m.max_multiplicity()
                if m.n >= 3 and w >= max_weight:
                    return MutationClassResult(tuple(reps), MultiplicityBlowup(pair, w))
                key = canonical_key(m)
                if key in keys:
                    j = keys[key]
                    if (min(idx, j), k, max(idx, j)) not in edges:
                        edges.append((min(idx, j), k, max(idx, j)))
                    continue
                if len(reps) >= max_quivers:
                    return MutationClassResult(tuple(reps), "BudgetExceeded", tuple(edges))
                keys[key] = len(reps)
                reps.append(m)
                edges.append((idx, k, keys[key]))
                nxt.append(keys[key])
        frontier = nxt
    return MutationClassResult(tuple(reps), "Exhausted", tuple(edges))
