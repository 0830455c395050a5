import pytest

from nspairs.errors import (ContradictionError, HypothesisError, ImpossibleDegreeError,
                            InsufficientDataError, SpunUndefinedError, StructureError,
                            UnsupportedCaseError)
from nspairs.invariants import (bouquet_even, bouquet_odd, compose_projection, euler_from_degree,
                                higher_dim_construct, looijenga_sum, spun, stairs_conclude,
                                triviality_check)
from nspairs.linking import LinkingMatrix, classify, generate_unimodular_blocks
from nspairs.records import FiberDescriptor, NSInvariantRecord, check_euler


def pair_S5_L3():
    return classify(generate_unimodular_blocks(1)).pair_record()


def germ(n, p, fiber, **kw):
    return NSInvariantRecord(kind="germ", source_dim=n, target_dim=p, fiber=fiber,
                             link_components=kw.pop("link_components", 1), **kw)


class TestFiberDescriptor:
    def test_punctured_sphere(self):
        f = FiberDescriptor.punctured_sphere(3, 5)
        assert f.betti == (1, 0, 4, 0)
        assert f.summary() == "S³_(5) ≃ ∨⁴S²"
        assert f.euler_characteristic() == 5

    def test_validation(self):
        with pytest.raises(StructureError):
            FiberDescriptor(2, (1, 0))
        with pytest.raises(StructureError):
            FiberDescriptor(2, (2, 0, 0))
        with pytest.raises(ContradictionError):
            FiberDescriptor(3, (1, 0, 3, 0), bouquet=((2, 4),))
        with pytest.raises(ContradictionError):
            FiberDescriptor(2, (1, 1, 0), bouquet=((1, 1),), pi1_free=False)

    def test_profile_and_strings(self):
        f = bouquet_odd(3, 2, True)
        assert f.bouquet_str() == "∨²(S²∨S³)"
        assert f.homology_profile() == (1, 0, 2, 2)
        assert FiberDescriptor(2, (1, 0, 0), bouquet=()).bouquet_str() == "point"


class TestEuler:
    def test_examples(self):
        assert euler_from_degree(6, -4) == 5
        assert euler_from_degree(7, 0) == 1
        with pytest.raises(ContradictionError):
            euler_from_degree(7, 3)

    def test_record_validator(self):
        f = FiberDescriptor.punctured_sphere(3, 5)
        with pytest.raises(ContradictionError):
            germ(6, 3, f, link_components=5, degree=-3)
        with pytest.raises(ContradictionError):
            germ(7, 3, bouquet_odd(3, 1, True), degree=2)
        germ(6, 3, f, link_components=5, degree=-4)

    def test_odd_betti_must_balance(self):
        f = FiberDescriptor(4, (1, 0, 2, 1, 0))
        with pytest.raises(ContradictionError):
            check_euler(7, None, f)


class TestBouquets:
    def test_even_examples(self):
        f = bouquet_even(3, -4)
        assert f.bouquet == ((2, 4),)
        assert bouquet_even(3, 0).is_contractible
        assert bouquet_even(4, 2).bouquet == ((3, 2),)
        with pytest.raises(ImpossibleDegreeError):
            bouquet_even(3, 4)

    def test_even_matches_euler(self):
        for n in range(2, 7):
            for d in range(-6, 7):
                if (-1) ** n * d < 0:
                    continue
                f = bouquet_even(n, d)
                assert f.euler_characteristic() == 1 - d
                if n >= 2 and 2 * n >= 3:
                    assert euler_from_degree(2 * n, d) == f.euler_characteristic()

    def test_odd_examples(self):
        assert bouquet_odd(3, 2, True).bouquet == ((2, 2), (3, 2))
        assert bouquet_odd(3, 0, True).is_contractible
        f = bouquet_odd(4, 1, False)
        assert f.bouquet is None and f.torsion_free_middle is False
        with pytest.raises(StructureError):
            bouquet_odd(3, -1, True)
        for n in range(3, 7):
            for b in range(5):
                assert bouquet_odd(n, b, True).euler_characteristic() == 1


class TestLooijenga:
    def test_block_pipeline(self):
        rec = looijenga_sum(pair_S5_L3())
        assert rec.kind == "germ" and rec.dims == (6, 3)
        assert rec.link_components == 5
        assert rec.fiber.model == (3, 5)
        assert rec.fiber.betti[2] == 4
        assert rec.fiber.bouquet_str() == "∨⁴S²"
        assert rec.degree == -4
        assert rec.trivial is False
        assert len(rec.provenance) == 2

    def test_trivial_pair(self):
        rec = looijenga_sum(classify(generate_unimodular_blocks(0)).pair_record())
        assert rec.link_components == 1
        assert rec.fiber.betti == (1, 0, 0, 0)
        assert rec.trivial is True and rec.degree == 0

    def test_odd_link_count(self):
        for half in range(4):
            rec = looijenga_sum(classify(generate_unimodular_blocks(half)).pair_record())
            assert rec.link_components % 2 == 1
            assert rec.link_components == 2 * (2 * half + 1) - 1

    def test_errors(self):
        p = pair_S5_L3()
        with pytest.raises(InsufficientDataError):
            looijenga_sum(p.derive("forget", link_components=None))
        with pytest.raises(HypothesisError):
            looijenga_sum(looijenga_sum(p))


class TestSpun:
    def test_five_two_to_six_two_and_seven_two(self):
        base = germ(5, 2, FiberDescriptor(3, (1, None, None, 0), simply_connected=False,
                                          pi1_free=False), degree=0, trivial=False)
        once = spun(base)
        assert once.dims == (6, 2)
        assert once.link_dim == 3
        assert once.fiber.betti[0] == 1 and once.fiber.betti[1:] == (None,) * 4
        assert once.fiber.simply_connected is False and once.fiber.pi1_free is False
        assert once.trivial is False
        assert spun(once).dims == (7, 2)
        assert spun(once).degree == 0

    def test_fibered_knot_keeps_flags(self):
        fiber = FiberDescriptor(2, (1, 2, 0), bouquet=((1, 2),), simply_connected=False, pi1_free=True)
        knot = NSInvariantRecord("pair", 3, 1, 1, fiber, trivial=False)
        s = spun(knot)
        assert s.dims == (4, 1) and s.kind == "pair"
        assert (s.fiber.simply_connected, s.fiber.pi1_free) == (False, True)
        assert s.fiber.dim == 3

    def test_empty_link(self):
        rec = germ(8, 5, FiberDescriptor(3, (1, 0, 0, 0)), link_components=0)
        with pytest.raises(SpunUndefinedError):
            spun(rec)


class TestProjection:
    def test_bouquet_preserved(self):
        for n in (3, 4, 5):
            d = (-1) ** n * 4
            rec = germ(2 * n, n, bouquet_even(n, d), link_components=None, degree=d)
            bouquet = rec.fiber.bouquet
            profile = rec.fiber.homology_profile()
            while rec.target_dim > 2:
                rec = compose_projection(rec)
                assert rec.fiber.bouquet == bouquet
                assert rec.fiber.homology_profile() == profile
            assert rec.dims == (2 * n, 2)

    def test_seven_three(self):
        rec = germ(7, 3, bouquet_odd(3, 2, True), degree=0)
        out = compose_projection(rec)
        assert out.dims == (7, 2)
        assert out.fiber.bouquet_str() == "∨²(S²∨S³)"

    def test_contractible(self):
        rec = germ(6, 3, bouquet_even(3, 0), degree=0, trivial=True)
        out = compose_projection(rec)
        assert out.fiber.is_contractible and out.trivial is True

    def test_target_two_flagged_and_one_rejected(self):
        rec = germ(6, 2, FiberDescriptor(4, (1, 0, 0, 0, 0), bouquet=()))
        out = compose_projection(rec)
        assert "ℝ¹" in out.provenance[-1]
        with pytest.raises(StructureError):
            compose_projection(out)

    def test_pairs_rejected(self):
        with pytest.raises(HypothesisError):
            compose_projection(pair_S5_L3())


class TestHigher:
    def test_n3(self):
        rec = higher_dim_construct(3, generate_unimodular_blocks(1))
        assert rec.dims == (6, 3)
        assert rec.link_components == 9
        assert rec.fiber.model == (3, 9)
        assert rec.fiber.bouquet == ((2, 8),)
        assert rec.degree == -8

    def test_l0(self):
        rec = higher_dim_construct(3, generate_unimodular_blocks(0))
        assert rec.link_components == 1 and rec.fiber.is_contractible

    def test_n4_symmetric(self):
        rec = higher_dim_construct(4, LinkingMatrix.from_rows([[0, 1], [1, 0]], 1))
        assert rec.dims == (8, 4)
        assert rec.fiber.bouquet == ((3, 8),)
        assert rec.degree == 8

    def test_k_is_one_mod_four(self):
        for half in range(4):
            rec = higher_dim_construct(3, generate_unimodular_blocks(half))
            k = (rec.link_components + 1) // 2
            assert k % 4 == 1
            assert rec.degree == (-1) ** 3 * (2 * k - 2)

    def test_hypotheses(self):
        with pytest.raises(HypothesisError):
            higher_dim_construct(3, LinkingMatrix.from_rows([[0, 2], [-2, 0]]))
        with pytest.raises(HypothesisError):
            higher_dim_construct(4, generate_unimodular_blocks(1))
        with pytest.raises(HypothesisError):
            higher_dim_construct(3, LinkingMatrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))


class TestTriviality:
    def test_six_three(self):
        f0 = bouquet_even(3, 0)
        assert triviality_check(germ(6, 3, f0, degree=0))[0] is True
        rec = looijenga_sum(pair_S5_L3())
        assert triviality_check(rec)[0] is False
        bare = germ(6, 3, FiberDescriptor(3, (1, None, None, None)), link_components=5)
        assert triviality_check(bare)[0] is False

    def test_contradiction(self):
        rec = germ(6, 3, FiberDescriptor(3, (1, None, None, None)), link_components=5, degree=0)
        with pytest.raises(ContradictionError):
            triviality_check(rec)

    def test_five_two(self):
        unknown = germ(5, 2, FiberDescriptor(3, (1, None, None, None)))
        verdict, reason = triviality_check(unknown)
        assert verdict is None and "insufficient" in reason
        sc = germ(5, 2, FiberDescriptor(3, (1, 0, 0, 0), simply_connected=True))
        assert triviality_check(sc)[0] is True

    def test_eight_five(self):
        assert triviality_check(germ(8, 5, bouquet_even(3, 0).with_(), link_components=1))[0] is True
        assert triviality_check(germ(8, 5, FiberDescriptor(3, (1, None, None, None)),
                                     link_components=0))[0] is False

    def test_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            triviality_check(germ(7, 3, bouquet_odd(3, 1, True)))


class TestStairs:
    def test_examples(self):
        f = stairs_conclude(8, 2, True, None)
        assert f.bouquet == ((3, None),)
        g = stairs_conclude(9, 2, True, True)
        assert g.bouquet == ((3, None), (4, None))
        assert stairs_conclude(9, 2, True, None) is None
        assert stairs_conclude(8, 2, False, True) is None

    def test_with_degree(self):
        f = stairs_conclude(8, 2, True, None, degree=3)
        assert f.bouquet == ((3, 3),)

    def test_range(self):
        with pytest.raises(UnsupportedCaseError):
            stairs_conclude(6, 4, True, True)
