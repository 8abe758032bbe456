"""Quivers with potentials: cyclic calculus, premutation, reduction to the
reduced part, truncated Jacobian dimensions, nondegeneracy probing.

Cycles are stored in traversal order: in a cycle (a_1, ..., a_m) the target
of a_i is the source of a_{i+1}, and the target of a_m closes back to the
source of a_1.  Each cycle is kept rotated to its lexicographically minimal
form and like terms are merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .pathalg import PathContext, Rewriter
from .quiver import Quiver

DEFAULT_TRUNCATION = 12


class UnknownArrow(ValueError):
    pass


class VertexOnTwoCycle(ValueError):
    pass


class TwoCycleInOutput(ValueError):
    pass


class PrecisionExhausted(ArithmeticError):
    pass


class DegenerateQuadraticPart(ArithmeticError):
    pass


class EmptySubset(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _min_rotation(cycle: tuple[int, ...]) -> tuple[int, ...]:
    return min(tuple(cycle[i:] + cycle[:i]) for i in range(len(cycle)))


@dataclass(frozen=True)
class Potential:
    """Rational linear combination of cycles, stored canonically, together
    with the m-adic working precision."""

    terms: tuple[tuple[object, tuple[int, ...]], ...]
    trunc: int = DEFAULT_TRUNCATION

    @staticmethod
    def make(terms: Iterable[tuple[object, Sequence[int]]], trunc: int = DEFAULT_TRUNCATION) -> "Potential":
        acc: dict[tuple[int, ...], object] = {}
        for c, cyc in terms:
            cyc = tuple(cyc)
            if not cyc:
                raise ValueError("empty cycle")
            if len(cyc) > trunc:
                continue
            key = _min_rotation(cyc)
            c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
            acc[key] = _norm(acc.get(key, 0) + c)
            if acc[key] == 0:
                del acc[key]
        ordered = sorted(acc.items(), key=lambda t: (len(t[0]), t[0]))
        return Potential(tuple((c, cyc) for cyc, c in ordered), trunc)

    def is_zero(self) -> bool:
        return not self.terms

    def arrows_used(self) -> set[int]:
        used: set[int] = set()
        for _c, cyc in self.terms:
            used.update(cyc)
        return used


@dataclass(frozen=True)
class QP:
    """A quiver with potential.  The arrow table is loop-free; parallel
    arrows and (mid-pipeline) 2-cycles are allowed, since premutation
    creates 2-cycles that reduction then removes."""

    n: int
    arrows: tuple[tuple[int, int], ...]
    potential: Potential

    def __post_init__(self):
        for (s, t) in self.arrows:
            if s == t:
                raise ValueError(f"loop at vertex {s}")
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ValueError("arrow endpoint out of range")
        for _c, cyc in self.potential.terms:
            for a in cyc:
                if not (0 <= a < len(self.arrows)):
                    raise UnknownArrow(f"arrow id {a} not in quiver")
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                if self.arrows[a][1] != self.arrows[b][0]:
                    raise ValueError(f"cycle {cyc} is not a closed path")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_quiver(q: Quiver, terms: Iterable[tuple[object, Sequence[int]]] = (),
                    trunc: int = DEFAULT_TRUNCATION) -> "QP":
        arrows = arrow_table(q)
        return QP(q.n, arrows, Potential.make(terms, trunc))

    @staticmethod
    def from_named(n: int, named_arrows: Sequence[tuple[str, int, int]],
                   named_terms: Iterable[tuple[object, Sequence[str]]] = (),
                   trunc: int = DEFAULT_TRUNCATION) -> "QP":
        names = {}
        arrows = []
        for idx, (name, s, t) in enumerate(named_arrows):
            if name in names:
                raise ValueError(f"duplicate arrow name {name}")
            names[name] = idx
            arrows.append((s, t))
        terms = [(c, [names[x] for x in cyc]) for c, cyc in named_terms]
        return QP(n, tuple(arrows), Potential.make(terms, trunc))

    # -- views ----------------------------------------------------------------

    def two_cycle_pairs(self) -> list[tuple[int, int]]:
        """Pairs of opposite arrow ids (a, b) with a: i->j and b: j->i."""
        out = []
        for a, (s1, t1) in enumerate(self.arrows):
            for b in range(a + 1, len(self.arrows)):
                s2, t2 = self.arrows[b]
                if (s2, t2) == (t1, s1):
                    out.append((a, b))
        return out

    def has_two_cycles(self) -> bool:
        return bool(self.two_cycle_pairs())

    @property
    def quiver(self) -> Quiver:
        if self.has_two_cycles():
            raise TwoCycleInOutput("quiver part contains a 2-cycle")
        return Quiver.from_arrows(self.n, [(s, t) for (s, t) in self.arrows])

    @property
    def trunc(self) -> int:
        return self.potential.trunc

    def src(self, a: int) -> int:
        return self.arrows[a][0]

    def tgt(self, a: int) -> int:
        return self.arrows[a][1]

    def key(self):
        return (self.n, self.arrows, self.potential.terms, self.trunc)


def arrow_table(q: Quiver) -> tuple[tuple[int, int], ...]:
    """Stable arrow ids for a Quiver: bundles in sorted order, multiplicity
    expanded.  The codec relies on this indexing."""
    table = []
    for (i, j, m) in q.arrows:
        table.extend([(i, j)] * m)
    return tuple(table)


# ---------------------------------------------------------------------------
# Cyclic calculus
# ---------------------------------------------------------------------------

def cyclic_derivative(qp: QP, a: int) -> tuple[tuple[object, tuple[int, ...]], ...]:
    """Derivative of the potential with respect to arrow a: each cycle
    contributes, for every occurrence of a, the path that starts right after
    that occurrence and wraps around to just before it."""
    if not (0 <= a < len(qp.arrows)):
        raise UnknownArrow(f"arrow id {a}")
    acc: dict[tuple[int, ...], object] = {}
    for c, cyc in qp.potential.terms:
        m = len(cyc)
        for i, x in enumerate(cyc):
            if x != a:
                continue
            path = cyc[i + 1:] + cyc[:i]
            acc[path] = _norm(acc.get(path, 0) + c)
            if acc[path] == 0:
                del acc[path]
    ordered = sorted(acc.items(), key=lambda t: (len(t[0]), t[0]))
    return tuple((c, path) for path, c in ordered)


def _substitute(qp: QP, images: dict[int, list[tuple[object, tuple[int, ...]]]]) -> Potential:
    """Apply an arrow substitution to the potential, expanding multilinearly
    and truncating beyond the working precision."""
    N = qp.trunc
    acc: dict[tuple[int, ...], object] = {}
    for c, cyc in qp.potential.terms:
        partial: list[tuple[object, tuple[int, ...]]] = [(c, ())]
        for x in cyc:
            img = images.get(x, [(1, (x,))])
            nxt = []
            for (c1, w1) in partial:
                for (c2, w2) in img:
                    w = w1 + w2
                    if len(w) <= N:
                        nxt.append((_norm(c1 * c2), w))
            partial = nxt
        for (cc, w) in partial:
            if not w:
                continue
            key = _min_rotation(w)
            acc[key] = _norm(acc.get(key, 0) + cc)
            if acc[key] == 0:
                del acc[key]
    ordered = sorted(acc.items(), key=lambda t: (len(t[0]), t[0]))
    return Potential(tuple((c, cyc) for cyc, c in ordered), N)


# ---------------------------------------------------------------------------
# Premutation / reduction / mutation
# ---------------------------------------------------------------------------

def premutate(qp: QP, k: int) -> QP:
    """Premutation at k: add composite arrows [ba] for paths through k,
    star all arrows at k, and set the new potential to [W] plus the sum of
    the composite 3-cycles.  The output may contain 2-cycles."""
    if not (1 <= k <= qp.n):
        raise ValueError(f"vertex {k} out of range")
    for (a, b) in qp.two_cycle_pairs():
        if k in qp.arrows[a]:
            raise VertexOnTwoCycle(f"vertex {k} lies on the 2-cycle {qp.arrows[a]}")

    into = [a for a, (s, t) in enumerate(qp.arrows) if t == k]
    outof = [b for b, (s, t) in enumerate(qp.arrows) if s == k]
    untouched = [a for a, (s, t) in enumerate(qp.arrows) if s != k and t != k]

    new_arrows: list[tuple[int, int]] = []
    old_to_new: dict[int, int] = {}
    for a in untouched:
        old_to_new[a] = len(new_arrows)
        new_arrows.append(qp.arrows[a])
    composite: dict[tuple[int, int], int] = {}
    for a in into:
        for b in outof:
            composite[(a, b)] = len(new_arrows)
            new_arrows.append((qp.src(a), qp.tgt(b)))
    star: dict[int, int] = {}
    for a in into:
        star[a] = len(new_arrows)
        new_arrows.append((k, qp.src(a)))
    for b in outof:
        star[b] = len(new_arrows)
        new_arrows.append((qp.tgt(b), k))

    new_terms: list[tuple[object, tuple[int, ...]]] = []
    for c, cyc in qp.potential.terms:
        # rotate so the basepoint avoids k (always possible: no loops at k)
        rot = None
        for i in range(len(cyc)):
            if qp.src(cyc[i]) != k:
                rot = cyc[i:] + cyc[:i]
                break
        assert rot is not None
        out: list[int] = []
        i = 0
        while i < len(rot):
            a = rot[i]
            if qp.tgt(a) == k:
                b = rot[(i + 1) % len(rot)]
                out.append(composite[(a, b)])
                i += 2
            else:
                out.append(old_to_new[a])
                i += 1
        new_terms.append((c, tuple(out)))
    for a in into:
        for b in outof:
            new_terms.append((1, (composite[(a, b)], star[b], star[a])))
    return QP(qp.n, tuple(new_arrows), Potential.make(new_terms, qp.trunc))


def _drop_arrows(qp: QP, dead: set[int]) -> QP:
    keep = [a for a in range(len(qp.arrows)) if a not in dead]
    remap = {a: i for i, a in enumerate(keep)}
    terms = []
    for c, cyc in qp.potential.terms:
        if any(a in dead for a in cyc):
            raise AssertionError("dropping arrows still used by the potential")
        terms.append((c, tuple(remap[a] for a in cyc)))
    return QP(qp.n, tuple(qp.arrows[a] for a in keep), Potential.make(terms, qp.trunc))


def reduce_qp(qp: QP) -> QP:
    """Reduced part of qp up to the working precision: repeatedly eliminate a
    2-cycle term by the iterative substitution that absorbs all other
    occurrences of its two arrows, then delete the arrow pair."""
    cur = qp
    guard = 0
    while True:
        guard += 1
        if guard > 2 * len(qp.arrows) + 4:
            raise PrecisionExhausted("reduction did not reach a fixpoint")
        quad = [(cyc, c) for c, cyc in cur.potential.terms if len(cyc) == 2]
        if not quad:
            return cur
        quad.sort(key=lambda t: (t[0], -abs(Fraction(t[1]))))
        (a, b), _c = quad[0]

        for _ in range(cur.trunc + 3):
            coeffs = dict((cyc, c) for c, cyc in cur.potential.terms)
            c = coeffs.get(_min_rotation((a, b)), 0)
            if c == 0:
                raise DegenerateQuadraticPart(
                    f"2-cycle term on arrows {a},{b} vanished during elimination")
            rest = Potential(tuple((cc, cyc) for cc, cyc in cur.potential.terms
                                   if _min_rotation(cyc) != _min_rotation((a, b))), cur.trunc)
            probe = QP(cur.n, cur.arrows, rest)
            da = cyclic_derivative(probe, a)
            db = cyclic_derivative(probe, b)
            if not da and not db:
                break
            inv = Fraction(-1) / Fraction(c)
            images = {}
            if db:
                images[a] = [(1, (a,))] + [(_norm(inv * cc), w) for cc, w in db]
            if da:
                images[b] = [(1, (b,))] + [(_norm(inv * cc), w) for cc, w in da]
            cur = QP(cur.n, cur.arrows, _substitute(cur, images))
        else:
            raise PrecisionExhausted(
                f"substitution for arrow pair ({a},{b}) kept producing terms "
                f"below degree {cur.trunc}")
        # the pair is now isolated in its own 2-cycle term: drop it
        terms = tuple((cc, cyc) for cc, cyc in cur.potential.terms
                      if _min_rotation(cyc) != _min_rotation((a, b)))
        cur = _drop_arrows(QP(cur.n, cur.arrows, Potential(terms, cur.trunc)), {a, b})


def qp_mutate(qp: QP, k: int, allow_two_cycles: bool = False) -> QP:
    """QP-mutation: the reduced part of the premutation.  When the result
    still contains a 2-cycle the potential is degenerate at this step; that
    raises TwoCycleInOutput unless allow_two_cycles is set."""
    out = reduce_qp(premutate(qp, k))
    if out.has_two_cycles() and not allow_two_cycles:
        raise TwoCycleInOutput(
            f"mutation at {k} left 2-cycles {out.two_cycle_pairs()} (degenerate potential)")
    return out


# ---------------------------------------------------------------------------
# Jacobian dimensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DimProfile:
    dims: tuple[int, ...]
    verdict: object  # ("StabilizedAt", l) | "GrowingAtBound"

    @property
    def stabilized(self) -> bool:
        return self.verdict != "GrowingAtBound"


def jacobian_dim_truncated(qp: QP, N: int | None = None, precedence: list[int] | None = None) -> DimProfile:
    """Dimensions d_0..d_{N-1} of the quotients by the cyclic-derivative
    ideal plus paths of length > l, computed by degree-graded rewriting
    closed under overlaps up to degree N."""
    if N is None:
        N = qp.trunc
    if N < 2:
        raise ValueError("truncation degree must be >= 2")
    ctx = PathContext(qp.n, list(qp.arrows), precedence)
    rels = []
    for a in range(len(qp.arrows)):
        d = cyclic_derivative(qp, a)
        if d:
            rels.append({w: c for c, w in d})
    rw = Rewriter(ctx, rels, N)
    counts = rw.normal_word_counts()
    dims = []
    acc = 0
    for l in range(N):
        acc += counts[l] if l < len(counts) else 0
        dims.append(acc)
    # a genuine plateau needs at least two equal trailing values; a lone last
    # entry says nothing about growth
    verdict: object = "GrowingAtBound"
    for l in range(N - 1):
        if all(dims[t] == dims[l] for t in range(l, N)):
            verdict = ("StabilizedAt", l)
            break
    return DimProfile(tuple(dims), verdict)


# ---------------------------------------------------------------------------
# Restriction and nondegeneracy probing
# ---------------------------------------------------------------------------

def restrict_qp(qp: QP, subset: Iterable[int]) -> QP:
    """Full sub-QP on a vertex subset: the induced arrows plus only those
    potential terms whose cycles stay inside."""
    verts = sorted(set(subset))
    if not verts:
        raise EmptySubset("vertex subset is empty")
    vmap = {v: i + 1 for i, v in enumerate(verts)}
    keep_arrows = [a for a, (s, t) in enumerate(qp.arrows) if s in vmap and t in vmap]
    amap = {a: i for i, a in enumerate(keep_arrows)}
    arrows = tuple((vmap[qp.src(a)], vmap[qp.tgt(a)]) for a in keep_arrows)
    terms = [(c, tuple(amap[a] for a in cyc))
             for c, cyc in qp.potential.terms
             if all(a in amap for a in cyc)]
    return QP(len(verts), arrows, Potential.make(terms, qp.trunc))


def probe_nondegenerate(qp: QP, depth: int):
    """Runs qp_mutate along all mutation sequences of length <= depth (pruned
    by exact-state dedup) and reports the first 2-cycle found, if any.

    Returns ("NoTwoCyclesUpTo", depth) or ("TwoCycleAt", sequence).
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if qp.has_two_cycles():
        return ("TwoCycleAt", ())
    seen = {qp.key()}
    frontier: list[tuple[QP, tuple[int, ...]]] = [(qp, ())]
    for _level in range(depth):
        nxt = []
        for cur, seq in frontier:
            for k in range(1, cur.n + 1):
                m = qp_mutate(cur, k, allow_two_cycles=True)
                if m.has_two_cycles():
                    return ("TwoCycleAt", seq + (k,))
                if m.key() in seen:
                    continue
                seen.add(m.key())
                nxt.append((m, seq + (k,)))
        frontier = nxt
    return ("NoTwoCyclesUpTo", depth)
