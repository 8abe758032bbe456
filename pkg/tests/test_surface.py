import itertools
import random

import pytest

from clusterforge import catalog
from clusterforge.quiver import Quiver, canonical_key, mutate
from clusterforge.surface import (
    NOTCHED, PLAIN, ArcNotInTriangulation, DifferentSurface, Laminate, MarkedSurface,
    NotExceptional, TaggedArc, Triangulation, UnsupportedSurface, annulus,
    arc_crossing_number, closed_core, compatible, disc, disc_chord, elementary,
    enumerate_laminates, enumerate_tagged_arcs, exceptional, flip,
    initial_triangulation, laminate_of_vector, laminates_compatible, punctured_disc,
    pq_split, quiver_of_triangulation, shear_coordinates, shear_of_lamination,
    verify_arc_gvector_correspondence,
)

D5, D6 = disc(5), disc(6)
P2, P3 = punctured_disc(2), punctured_disc(3)
A11, A21 = annulus(1, 1), annulus(2, 1)


def all_triangulations(S, seed_T=None, cap=200):
    """Flip closure starting from the initial triangulation."""
    start = seed_T or initial_triangulation(S)
    seen = {tuple(sorted(start.arcs)): start}
    frontier = [start]
    while frontier:
        nxt = []
        for T in frontier:
            for arc in T.arcs:
                T2 = flip(T, arc)
                key = tuple(sorted(T2.arcs))
                if key not in seen:
                    seen[key] = T2
                    nxt.append(T2)
                    if len(seen) > cap:
                        raise RuntimeError("triangulation cap hit")
        frontier = nxt
    return list(seen.values())


class TestSurfaces:
    def test_excluded_small_cases(self):
        with pytest.raises(UnsupportedSurface):
            disc(3)  # unpunctured triangle
        with pytest.raises(UnsupportedSurface):
            punctured_disc(1)  # once-punctured monogon
        with pytest.raises(UnsupportedSurface):
            annulus(0, 1)

    def test_ranks(self):
        assert D5.rank == 2 and D6.rank == 3
        assert P3.rank == 3 and P2.rank == 2
        assert A11.rank == 2 and A21.rank == 3


class TestArcEnumeration:
    def test_disc5_pentagon_chords(self):
        assert len(enumerate_tagged_arcs(D5)) == 5

    def test_disc_chord_count_formula(self):
        for m in (4, 5, 6, 7):
            assert len(enumerate_tagged_arcs(disc(m))) == m * (m - 3) // 2

    def test_punctured_disc3(self):
        arcs = enumerate_tagged_arcs(P3)
        radials = [a for a in arcs if a.key[0] == "radial"]
        chords = [a for a in arcs if a.key[0] == "chord"]
        assert len(arcs) == 9
        assert len([a for a in radials if a.tag == PLAIN]) == 3
        assert len([a for a in radials if a.tag == NOTCHED]) == 3
        assert len(chords) == 3

    def test_annulus11_windings(self):
        arcs = enumerate_tagged_arcs(A11, winding_bound=2)
        assert [a.key for a in arcs] == [("bridge", 1, 1, w) for w in range(-2, 3)]


class TestCompatibility:
    def test_disjoint_pentagon_chords(self):
        a = disc_chord(D5, 1, 3)
        b = disc_chord(D5, 3, 5)
        assert compatible(a, b)

    def test_conjugate_pair(self):
        p = TaggedArc(P3, ("radial", 1), PLAIN)
        n = TaggedArc(P3, ("radial", 1), NOTCHED)
        assert compatible(p, n)

    def test_radii_with_different_tags_and_marks(self):
        p = TaggedArc(P3, ("radial", 1), PLAIN)
        n = TaggedArc(P3, ("radial", 2), NOTCHED)
        assert not compatible(p, n)

    def test_crossing_chords(self):
        assert not compatible(disc_chord(D5, 1, 3), disc_chord(D5, 2, 4))

    def test_different_surface_rejected(self):
        with pytest.raises(DifferentSurface):
            compatible(disc_chord(D5, 1, 3), disc_chord(D6, 1, 3))

    def test_adjacent_winding_bridges(self):
        a = TaggedArc(A11, ("bridge", 1, 1, 0))
        b = TaggedArc(A11, ("bridge", 1, 1, 1))
        c = TaggedArc(A11, ("bridge", 1, 1, 2))
        assert compatible(a, b)
        assert not compatible(a, c)
        assert arc_crossing_number(a, c) == 1


class TestFlip:
    def test_pentagon_flip_graph_is_5_cycle(self):
        tris = all_triangulations(D5)
        assert len(tris) == 5

    def test_involution_200_random(self):
        rng = random.Random(20)
        surfaces = [D5, D6, P2, P3, A11, A21]
        count = 0
        while count < 200:
            S = rng.choice(surfaces)
            T = initial_triangulation(S)
            for _ in range(rng.randint(0, 3)):
                T = flip(T, rng.choice(T.arcs))
            g = rng.choice(T.arcs)
            T2 = flip(T, g)
            gp = next(a for a in T2.arcs if a not in T.arcs)
            assert sorted(flip(T2, gp).arcs) == sorted(T.arcs)
            count += 1

    def test_tag_toggle_at_conjugate_pair(self):
        # flipping the plain radius of a conjugate pair toggles its tag
        pair = Triangulation(P3, (TaggedArc(P3, ("radial", 1), PLAIN),
                                  TaggedArc(P3, ("radial", 1), NOTCHED),
                                  TaggedArc(P3, ("chord", 1, 2))))
        plain = pair.arcs[0]
        out = flip(pair, plain)
        new = next(a for a in out.arcs if a not in pair.arcs)
        assert new.key[0] == "radial" and new.tag == NOTCHED or new.key[0] == "chord"

    def test_arc_not_in_triangulation(self):
        T = initial_triangulation(D5)
        with pytest.raises(ArcNotInTriangulation):
            flip(T, disc_chord(D5, 2, 4))


class TestQuiverOf:
    def test_pentagon_fan_is_a2(self):
        q = quiver_of_triangulation(initial_triangulation(D5))
        assert q.n == 2 and sum(m for (_i, _j, m) in q.arrows) == 1

    def test_disc6_has_linear_a3_triangulation(self):
        a3_key = canonical_key(catalog.linear_a(3))
        found = 0
        for T in all_triangulations(D6):
            if canonical_key(quiver_of_triangulation(T)) == a3_key:
                found += 1
        assert found > 0

    def test_annulus11_kronecker(self):
        q = quiver_of_triangulation(initial_triangulation(A11))
        assert sorted((i, j, m) for (i, j, m) in q.arrows) in ([(1, 2, 2)], [(2, 1, 2)])

    def test_flip_commutes_with_mutation_200_random(self):
        rng = random.Random(21)
        surfaces = [D5, D6, P2, P3, A11, A21]
        count = 0
        while count < 200:
            S = rng.choice(surfaces)
            T = initial_triangulation(S)
            for _ in range(rng.randint(0, 2)):
                T = flip(T, rng.choice(T.arcs))
            k = rng.randint(1, len(T.arcs))
            T2 = flip(T, T.arcs[k - 1])
            assert quiver_of_triangulation(T2) == mutate(quiver_of_triangulation(T), k)
            count += 1


def disc_shear_oracle(T, lam):
    """Independent combinatorial rule for the disc: a chord laminate with
    endpoints x, y (displaced past their marks) contributes -1 at
    gamma = {A, C} when x sits in the open interval (A, B) and y in (C, D),
    where (A, B, C, D) are the corners of gamma's quadrilateral in cyclic
    order; +1 on the other opposite pattern; 0 otherwise."""
    from fractions import Fraction

    S = T.surface
    m = S.outer
    assert lam.kind == "elementary"
    key = lam.of.key
    x = (key[1] + Fraction(1, 3) - 1) % m + 1
    y = (key[1] + key[2] + Fraction(1, 3) - 1) % m + 1

    def in_interval(t, a, b):
        return 0 < (t - a) % m < (b - a) % m

    def edge_of_T(p, q):
        if (q - p) % m in (1, m - 1):
            return True  # boundary segment
        return disc_chord(S, p, q) in T.arcs

    def far_corner(A, C):
        for v in range(1, m + 1):
            if v not in (A, C) and in_interval(v, A, C) and edge_of_T(A, v) and edge_of_T(v, C):
                return v
        raise AssertionError("no triangle corner found")

    out = []
    for g in T.arcs:
        A = g.key[1]
        C = (g.key[1] + g.key[2] - 1) % m + 1
        B = far_corner(A, C)
        D = far_corner(C, A)
        val = 0
        if (in_interval(x, A, B) and in_interval(y, C, D)) or \
                (in_interval(y, A, B) and in_interval(x, C, D)):
            val = -1
        elif (in_interval(x, B, C) and in_interval(y, D, A)) or \
                (in_interval(y, B, C) and in_interval(x, D, A)):
            val = 1
        out.append(val)
    return tuple(out)


class TestShear:
    def test_unit_identity_100_random(self):
        rng = random.Random(22)
        surfaces = [D5, D6, P2, P3, A11, A21]
        count = 0
        while count < 100:
            S = rng.choice(surfaces)
            T = initial_triangulation(S)
            for _ in range(rng.randint(0, 3)):
                T = flip(T, rng.choice(T.arcs))
            for i, g in enumerate(T.arcs):
                want = tuple(-1 if j == i else 0 for j in range(len(T.arcs)))
                assert shear_coordinates(T, elementary(g)) == want
                count += 1

    def test_disc_oracle_agreement(self):
        for T in all_triangulations(D5) + all_triangulations(D6):
            for arc in enumerate_tagged_arcs(T.surface):
                lam = elementary(arc)
                assert shear_coordinates(T, lam) == disc_shear_oracle(T, lam)

    def test_single_quadrilateral_crossing(self):
        T = initial_triangulation(D5)
        # the flip partner of the first diagonal crosses with exactly one +-1
        # at that arc
        v = shear_coordinates(T, elementary(disc_chord(D5, 2, 4)))
        assert v[0] in (-1, 1)

    def test_core_matches_kronecker_missing_direction(self):
        T = initial_triangulation(A11)
        v = shear_coordinates(T, closed_core(A11))
        assert tuple(-x for x in v) == (1, -1)

    def test_core_copies_scale(self):
        T = initial_triangulation(A11)
        v1 = shear_coordinates(T, closed_core(A11))
        v3 = shear_coordinates(T, closed_core(A11, 3))
        assert v3 == tuple(3 * x for x in v1)

    def test_additive_over_laminations(self):
        T = initial_triangulation(P3)
        lams = [elementary(TaggedArc(P3, ("radial", 1), PLAIN)),
                elementary(TaggedArc(P3, ("radial", 2), PLAIN))]
        assert laminates_compatible(*lams)
        total = shear_of_lamination(T, lams)
        assert total == tuple(a + b for a, b in
                              zip(shear_coordinates(T, lams[0]), shear_coordinates(T, lams[1])))


class TestPQSplit:
    def test_split_gives_conjugate_pair(self):
        lp, lq = pq_split(exceptional(P3, 1))
        assert lp.of.key == lq.of.key == ("radial", 1)
        assert {lp.of.tag, lq.of.tag} == {PLAIN, NOTCHED}

    def test_additivity_all_triangulations_pd3(self):
        for T in all_triangulations(P3):
            for s in (1, 2, 3):
                ex = exceptional(P3, s)
                lp, lq = pq_split(ex)
                b = shear_coordinates(T, ex)
                bp = shear_coordinates(T, lp)
                bq = shear_coordinates(T, lq)
                assert b == tuple(p + q for p, q in zip(bp, bq)), (s, [a.key for a in T.arcs])

    def test_rejects_elementary(self):
        with pytest.raises(NotExceptional):
            pq_split(elementary(disc_chord(D5, 1, 3)))


class TestLaminationInverse:
    def test_unit_vectors(self):
        T = initial_triangulation(D5)
        for i, g in enumerate(T.arcs):
            v = tuple(-1 if j == i else 0 for j in range(2))
            lams = laminate_of_vector(T, v)
            assert len(lams) == 1 and lams[0].of == g

    def test_zero_is_empty(self):
        T = initial_triangulation(D5)
        assert laminate_of_vector(T, (0, 0)) == ()

    def test_disc5_box_elementary_only(self):
        T = initial_triangulation(D5)
        for v in itertools.product(range(-2, 3), repeat=2):
            lams = laminate_of_vector(T, v)
            assert shear_of_lamination(T, lams) == v
            assert all(l.kind == "elementary" for l in lams)

    def test_injectivity_disc5(self):
        T = initial_triangulation(D5)
        assert_injective(T, enumerate_laminates(D5), maxmult=2)

    def test_injectivity_pd3(self):
        T = initial_triangulation(P3)
        assert_injective(T, enumerate_laminates(P3), maxmult=1)

    def test_injectivity_annulus11(self):
        T = initial_triangulation(A11)
        assert_injective(T, enumerate_laminates(A11, winding_bound=2), maxmult=1)

    def test_annulus_core_vector_needs_core(self):
        T = initial_triangulation(A11)
        core_v = shear_coordinates(T, closed_core(A11))
        lams = laminate_of_vector(T, core_v)
        assert any(l.kind == "core" for l in lams)

    def test_annulus_core_vectors_are_the_unreachable_points(self):
        # vectors realizable only with the closed curve are exactly the
        # integer points the fan membership search reports missing
        from clusterforge.gfan import contains_point
        T = initial_triangulation(A11)
        q = quiver_of_triangulation(T)
        for v in itertools.product(range(-2, 3), repeat=2):
            if v == (0, 0):
                continue
            lams = laminate_of_vector(T, v)
            needs_core = any(l.kind == "core" for l in lams)
            verdict = contains_point(q, tuple(-x for x in v), depth=60)
            assert needs_core == (verdict[0] == "NotFoundWithin"), (v, lams, verdict)


def assert_injective(T, cands, maxmult):
    compat = {}

    def ok(i, j):
        key = (min(i, j), max(i, j))
        if key not in compat:
            compat[key] = laminates_compatible(cands[i], cands[j])
        return compat[key]

    seen = {}
    n = len(cands)

    def rec(start, cur):
        key = tuple(cur)
        v = shear_of_lamination(T, [cands[i] for i in cur])
        assert v not in seen or seen[v] == key, f"injectivity broken at {v}"
        seen[v] = key
        for i in range(start, n):
            if all(ok(i, j) for j in set(cur)):
                for mult in range(1, maxmult + 1):
                    rec(i + 1, cur + [i] * mult)

    rec(0, [])


class TestCorrespondence:
    def test_disc6_exhaustive(self):
        rep = verify_arc_gvector_correspondence(initial_triangulation(D6), exhaustive=True)
        assert rep["arcs_matched"] == 9
        assert rep["triangulations_seen"] == 14

    def test_pd3_exhaustive(self):
        rep = verify_arc_gvector_correspondence(initial_triangulation(P3), exhaustive=True)
        assert rep["arcs_matched"] == 9
        assert rep["triangulations_seen"] == 14

    def test_annulus11_depth6(self):
        rep = verify_arc_gvector_correspondence(initial_triangulation(A11), budget=6)
        # all bridges with winding in [-3, 3] minus the two just outside
        assert rep["arcs_matched"] >= 8
