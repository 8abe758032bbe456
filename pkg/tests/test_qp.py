from fractions import Fraction

import pytest

from clusterforge import catalog
from clusterforge.qp import (
    QP, DimProfile, EmptySubset, Potential, TwoCycleInOutput, UnknownArrow,
    VertexOnTwoCycle, cyclic_derivative, jacobian_dim_truncated, premutate,
    probe_nondegenerate, qp_mutate, reduce_qp, restrict_qp,
)
from clusterforge.quiver import mutate


class TestCyclicDerivative:
    def test_single_occurrence(self):
        qp = catalog.qp_cycle3()
        # cycle (a, b, c); differentiating at a leaves the path (b, c)
        assert cyclic_derivative(qp, 0) == ((1, (1, 2)),)

    def test_zero_potential(self):
        qp = catalog.qp_a3_zero()
        assert cyclic_derivative(qp, 0) == ()

    def test_two_occurrences(self):
        # cycle visiting arrow a twice: a b a c with a: 1->2, b,c: 2->1
        qp = QP.from_named(2, [("a", 1, 2), ("b", 2, 1), ("c", 2, 1)],
                           [(1, ["a", "b", "a", "c"])])
        d = cyclic_derivative(qp, 0)
        assert set(d) == {(1, (1, 0, 2)), (1, (2, 0, 1))}  # b a c  +  c a b

    def test_unknown_arrow(self):
        with pytest.raises(UnknownArrow):
            cyclic_derivative(catalog.qp_cycle3(), 99)

    def test_cyclic_invariance(self):
        # storing a rotated cycle yields the same derivative
        qp1 = QP.from_named(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)], [(1, ["a", "b", "c"])])
        qp2 = QP.from_named(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)], [(1, ["b", "c", "a"])])
        assert qp1.potential == qp2.potential
        for arrow in range(3):
            assert cyclic_derivative(qp1, arrow) == cyclic_derivative(qp2, arrow)

    def test_occurrence_count_matches_degree(self):
        # commutative shadow: total occurrences over all arrows = cycle length
        qp = catalog.qp_x6()
        for c, cyc in qp.potential.terms:
            total = sum(len([x for x in cyc if x == a]) for a in range(len(qp.arrows)))
            assert total == len(cyc)


class TestPremutate:
    def test_a3_at_middle(self):
        p = premutate(catalog.qp_a3_zero(), 2)
        assert sorted(p.arrows) == [(1, 3), (2, 1), (3, 2)]
        # single term: the composite 3-cycle [ba] a* b*
        assert len(p.potential.terms) == 1
        c, cyc = p.potential.terms[0]
        assert c == 1 and len(cyc) == 3

    def test_kronecker_reverses(self):
        p = premutate(catalog.qp_kronecker(2), 1)
        assert sorted(p.arrows) == [(2, 1), (2, 1)]
        assert p.potential.is_zero()

    def test_three_cycle_creates_two_cycle_term(self):
        p = premutate(catalog.qp_cycle3(), 2)
        assert sorted(p.arrows) == [(1, 3), (2, 1), (3, 1), (3, 2)]
        lengths = sorted(len(cyc) for _c, cyc in p.potential.terms)
        assert lengths == [2, 3]

    def test_vertex_on_two_cycle_rejected(self):
        qp = QP.from_named(2, [("a", 1, 2), ("b", 2, 1)], [(1, ["a", "b"])])
        with pytest.raises(VertexOnTwoCycle):
            premutate(qp, 1)


class TestReduce:
    def test_reduced_fixpoint(self):
        qp = catalog.qp_cycle3()
        assert reduce_qp(qp) == qp

    def test_a3_premutation_already_reduced(self):
        p = premutate(catalog.qp_a3_zero(), 2)
        assert reduce_qp(p) == p

    def test_three_cycle_mutates_to_acyclic(self):
        out = qp_mutate(catalog.qp_cycle3(), 2)
        assert sorted(out.arrows) == [(2, 1), (3, 2)]
        assert out.potential.is_zero()


class TestQPMutate:
    def test_quiver_agreement_and_involution(self):
        for qp, ks in [(catalog.qp_a3_zero(), (1, 2, 3)),
                       (catalog.qp_cycle3(), (1, 2, 3)),
                       (catalog.qp_t2_tame(), (1, 2, 3, 4))]:
            base_profile = jacobian_dim_truncated(qp, 10)
            for k in ks:
                m = qp_mutate(qp, k)
                assert m.quiver == mutate(qp.quiver, k)
                mm = qp_mutate(m, k)
                assert mm.quiver == qp.quiver
                assert jacobian_dim_truncated(mm, 10).dims == base_profile.dims

    def test_kronecker_zero_potential(self):
        out = qp_mutate(catalog.qp_kronecker(2), 1)
        assert sorted(out.arrows) == [(2, 1), (2, 1)]
        assert out.potential.is_zero()


class TestJacobianDims:
    def test_kronecker_counts(self):
        for m in (2, 3, 4):
            prof = jacobian_dim_truncated(catalog.qp_kronecker(m), 8)
            assert prof.dims[-1] == 2 + m
            assert prof.verdict == ("StabilizedAt", 1)

    def test_three_cycle_stabilizes_at_six(self):
        prof = jacobian_dim_truncated(catalog.qp_cycle3(), 10)
        assert prof.dims[-1] == 6
        assert prof.verdict == ("StabilizedAt", 1)

    def test_t1_prime_grows_at_twenty(self):
        prof = jacobian_dim_truncated(catalog.qp_t1_prime(20), 20)
        assert prof.verdict == "GrowingAtBound"
        assert all(b > a for a, b in zip(prof.dims, prof.dims[1:]))

    def test_monotone_in_truncation(self):
        qp = catalog.qp_t2_tame()
        d8 = jacobian_dim_truncated(qp, 8).dims
        d12 = jacobian_dim_truncated(qp, 12).dims
        assert d12[:8] == d8

    def test_independent_of_path_order(self):
        qp = catalog.qp_t2_tame()
        n_arrows = len(qp.arrows)
        d1 = jacobian_dim_truncated(qp, 10, precedence=list(range(n_arrows)))
        d2 = jacobian_dim_truncated(qp, 10, precedence=list(reversed(range(n_arrows))))
        assert d1.dims == d2.dims

    def test_dims_nondecreasing(self):
        for qp in (catalog.qp_t1(), catalog.qp_x6(), catalog.qp_t2_wild()):
            prof = jacobian_dim_truncated(qp, 9)
            assert all(b >= a for a, b in zip(prof.dims, prof.dims[1:]))


class TestRestrict:
    def test_identity(self):
        qp = catalog.qp_t2_tame()
        assert restrict_qp(qp, range(1, 5)).potential.terms == qp.potential.terms

    def test_t2_single_triangle(self):
        qp = catalog.qp_t2_tame()
        r = restrict_qp(qp, {1, 2, 3})
        assert len(r.potential.terms) == 1
        _c, cyc = r.potential.terms[0]
        assert len(cyc) == 3

    def test_x6_doubled_pair_is_kronecker_zero(self):
        r = restrict_qp(catalog.qp_x6(), {1, 3})
        assert sorted(r.arrows) == [(1, 2), (1, 2)]
        assert r.potential.is_zero()

    def test_empty_rejected(self):
        with pytest.raises(EmptySubset):
            restrict_qp(catalog.qp_cycle3(), [])


class TestProbe:
    def test_kronecker_depth5(self):
        assert probe_nondegenerate(catalog.qp_kronecker(2), 5) == ("NoTwoCyclesUpTo", 5)

    def test_a3_depth4(self):
        assert probe_nondegenerate(catalog.qp_a3_zero(), 4) == ("NoTwoCyclesUpTo", 4)

    def test_t2_tame_depth2(self):
        assert probe_nondegenerate(catalog.qp_t2_tame(), 2) == ("NoTwoCyclesUpTo", 2)

    def test_degenerate_potential_found(self):
        # zero potential on the 3-cycle is degenerate: a mutation leaves a
        # 2-cycle in the quiver
        qp = QP.from_named(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)], [])
        verdict = probe_nondegenerate(qp, 2)
        assert verdict[0] == "TwoCycleAt"
        with pytest.raises(TwoCycleInOutput):
            qp_mutate(qp, verdict[1][0])


class TestReductionOrderCrossCheck:
    def test_two_elimination_orders_same_quiver(self):
        # the fixed elimination order picks one representative; eliminating in
        # the reverse order must still yield the same underlying quiver
        p = premutate(catalog.qp_cycle3(), 1)
        out1 = reduce_qp(p)
        # reverse the arrow precedence by relabeling arrows backwards
        n_arr = len(p.arrows)
        remap = {a: n_arr - 1 - a for a in range(n_arr)}
        rev = QP(p.n, tuple(p.arrows[n_arr - 1 - a] for a in range(n_arr)),
                 Potential.make([(c, tuple(remap[a] for a in cyc))
                                 for c, cyc in p.potential.terms], p.trunc))
        out2 = reduce_qp(rev)
        assert sorted(out1.arrows) == sorted(out2.arrows)
