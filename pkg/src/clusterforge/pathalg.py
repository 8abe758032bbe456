"""Degree-truncated rewriting in path algebras.

Relations live in the path algebra of a quiver (words = composable arrow
sequences).  A two-sided rewriting system closed under overlaps is computed
up to a degree bound with a fixed graded order, after which dimensions of the
truncated quotients are counted by an automaton walk over normal words.
"""

from __future__ import annotations

from fractions import Fraction


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class PathContext:
    """Arrow table (src, tgt) with a fixed arrow precedence for the graded
    lexicographic word order."""

    def __init__(self, n_vertices: int, arrows: list[tuple[int, int]], precedence: list[int] | None = None):
        self.n = n_vertices
        self.arrows = list(arrows)
        if precedence is None:
            precedence = list(range(len(arrows)))
        if sorted(precedence) != list(range(len(arrows))):
            raise ValueError("precedence must be a permutation of arrow ids")
        self.rank = {a: r for r, a in enumerate(precedence)}

    def src(self, a: int) -> int:
        return self.arrows[a][0]

    def tgt(self, a: int) -> int:
        return self.arrows[a][1]

    def composable(self, w: tuple[int, ...]) -> bool:
        return all(self.tgt(w[i]) == self.src(w[i + 1]) for i in range(len(w) - 1))

    def word_key(self, w: tuple[int, ...]):
        return (len(w), tuple(self.rank[a] for a in w))


class Rewriter:
    def __init__(self, ctx: PathContext, relations: list[dict[tuple[int, ...], object]], degree_bound: int):
        self.ctx = ctx
        self.bound = degree_bound
        self.rules: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
        pending = [self._truncate(r) for r in relations]
        pending = [r for r in pending if r]
        self._complete(pending)

    # -- polynomial plumbing -------------------------------------------------

    def _truncate(self, poly: dict) -> dict:
        return {w: c for w, c in poly.items() if len(w) <= self.bound and c != 0}

    def _lead(self, poly: dict) -> tuple[int, ...]:
        return max(poly, key=self.ctx.word_key)

    def _monic(self, poly: dict) -> dict:
        lead = self._lead(poly)
        c = poly[lead]
        if c == 1:
            return dict(poly)
        inv = Fraction(1) / Fraction(c)
        return {w: _norm(Fraction(v) * inv) for w, v in poly.items()}

    def reduce(self, poly: dict) -> dict:
        """Normal form of poly modulo the current rules (and the degree
        truncation)."""
        poly = self._truncate(poly)
        out: dict = {}
        work = dict(poly)
        while work:
            w = max(work, key=self.ctx.word_key)
            c = work.pop(w)
            if c == 0:
                continue
            hit = None
            for u in self.rules:
                lu = len(u)
                for s in range(len(w) - lu + 1):
                    if w[s:s + lu] == u:
                        hit = (u, s)
                        break
                if hit:
                    break
            if hit is None:
                out[w] = _norm(out.get(w, 0) + c)
                if out[w] == 0:
                    del out[w]
                continue
            u, s = hit
            rule = self.rules[u]
            prefix, suffix = w[:s], w[s + len(u):]
            for v, cv in rule.items():
                if v == u:
                    continue
                nw = prefix + v + suffix
                if len(nw) > self.bound:
                    continue
                work[nw] = _norm(work.get(nw, 0) - c * cv)
                if work[nw] == 0:
                    del work[nw]
        return out

    # -- completion -----------------------------------------------------------

    def _add_rule(self, poly: dict) -> bool:
        poly = self.reduce(poly)
        if not poly:
            return False
        poly = self._monic(poly)
        lead = self._lead(poly)
        self.rules[lead] = poly
        # interreduce: any existing rule whose lead contains the new lead
        stale = [u for u in self.rules
                 if u != lead and any(u[s:s + len(lead)] == lead for s in range(len(u) - len(lead) + 1))]
        for u in stale:
            old = self.rules.pop(u)
            self._add_rule(old)
        return True

    def _complete(self, pending: list[dict]):
        for p in pending:
            self._add_rule(p)
        # overlap closure, processed in increasing overlap-word degree
        done: set = set()
        while True:
            tasks = []
            leads = list(self.rules)
            for u in leads:
                for v in leads:
                    # proper overlap: a suffix of u equals a prefix of v
                    for olap in range(1, min(len(u), len(v))):
                        if u[-olap:] == v[:olap]:
                            w = u + v[olap:]
                            if len(w) > self.bound:
                                continue
                            if (u, v, olap) in done:
                                continue
                            tasks.append((len(w), u, v, olap))
            if not tasks:
                return
            tasks.sort(key=lambda t: t[0])
            progressed = False
            for _, u, v, olap in tasks:
                if (u, v, olap) in done:
                    continue
                done.add((u, v, olap))
                if u not in self.rules or v not in self.rules:
                    continue
                fu, fv = self.rules[u], self.rules[v]
                spoly: dict = {}
                tail_v = v[olap:]
                for w1, c1 in fu.items():
                    if w1 == u:
                        continue
                    nw = w1 + tail_v
                    if len(nw) <= self.bound:
                        spoly[nw] = _norm(spoly.get(nw, 0) + c1)
                head_u = u[:-olap]
                for w2, c2 in fv.items():
                    if w2 == v:
                        continue
                    nw = head_u + w2
                    if len(nw) <= self.bound:
                        spoly[nw] = _norm(spoly.get(nw, 0) - c2)
                spoly = {w: c for w, c in spoly.items() if c != 0}
                if self._add_rule(spoly):
                    progressed = True
            if not progressed:
                return

    # -- dimension counting ----------------------------------------------------

    def normal_word_counts(self) -> list[int]:
        """counts[l] = number of normal words of length exactly l, l <= bound-1.

        Walks an Aho-Corasick style automaton whose states are prefixes of the
        forbidden leading words, fibred over the quiver's vertices.
        """
        ctx = self.ctx
        forbidden = set(self.rules)
        prefixes = {()}
        for u in forbidden:
            for t in range(1, len(u)):
                prefixes.add(u[:t])
        prefixes = sorted(prefixes, key=len)

        def longest_suffix_state(w: tuple[int, ...]):
            for t in range(len(w), -1, -1):
                cand = w[len(w) - t:]
                if cand in prefset:
                    return cand
            return ()

        prefset = set(prefixes)
        # states: (vertex, prefix) with vertex = end of the path so far
        counts = [ctx.n]
        cur: dict[tuple[int, tuple[int, ...]], int] = {(v, ()): 1 for v in range(1, ctx.n + 1)}
        for length in range(1, self.bound):
            nxt: dict[tuple[int, tuple[int, ...]], int] = {}
            total = 0
            for (v, pref), mult in cur.items():
                for a in range(len(ctx.arrows)):
                    if ctx.src(a) != v:
                        continue
                    w = pref + (a,)
                    # forbidden word ending here kills the path
                    dead = False
                    for t in range(1, len(w) + 1):
                        if w[len(w) - t:] in forbidden:
                            dead = True
                            break
                    if dead:
                        continue
                    st = (ctx.tgt(a), longest_suffix_state(w))
                    nxt[st] = nxt.get(st, 0) + mult
                    total += mult
            counts.append(total)
            cur = nxt
            if not cur:
                counts.extend([0] * (self.bound - 1 - length))
                break
        return counts[: self.bound]
