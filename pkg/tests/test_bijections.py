import pytest

from oddferrers.bijections import (
    d_to_do,
    d_to_o,
    distinct_odd_to_sc,
    do_to_d,
    o_to_d,
    phi,
    phi_inverse,
    sc_to_distinct_odd,
)
from oddferrers.classes import (
    enumerate_D,
    enumerate_DO,
    enumerate_O,
    enumerate_S,
    is_in_D,
    is_in_DO,
    is_in_S,
)
from oddferrers.errors import (
    MalformedDClass,
    MalformedDOClass,
    MalformedSClass,
    NotDistinctOdd,
    NotSelfConjugate,
)
from oddferrers.ferrers import OddFerrersGraph, graph_weight
from oddferrers.partitions import Partition, hook_decompose

EXHAUSTIVE_N = 12


def P(*parts):
    return Partition(parts)


def G(*parts):
    return OddFerrersGraph(Partition(parts))


class TestPhi:
    def test_worked_example(self):
        assert phi(G(3, 3, 2)) == P(5, 5, 5, 3, 3)

    def test_single_hook(self):
        assert phi(G(1)) == P(1)
        assert phi(G(2, 1)) == P(3, 1, 1)

    def test_rejects_non_self_conjugate(self):
        with pytest.raises(NotSelfConjugate):
            phi(G(7, 4, 2, 1))

    def test_check_mode_accepts_valid_input(self):
        assert phi(G(3, 3, 2), check=True) == P(5, 5, 5, 3, 3)

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_well_defined(self, n):
        for g in enumerate_O(n):
            assert is_in_S(phi(g), n)

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_weight_law(self, n):
        for g in enumerate_O(n):
            assert phi(g).weight == 2 * graph_weight(g) - 1

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_output_hook_pairing(self, n):
        for g in enumerate_O(n):
            counts = hook_decompose(phi(g)).cell_counts
            assert len(counts) % 2 == 1
            assert counts[0] % 4 == 1
            for j in range(1, len(counts), 2):
                assert counts[j] - counts[j + 1] == 2
                assert counts[j] % 4 == 3


class TestPhiInverse:
    def test_worked_example(self):
        assert phi_inverse(P(5, 5, 5, 3, 3)).shape == P(3, 3, 2)

    def test_single_hook(self):
        assert phi_inverse(P(1)).shape == P(1)
        assert phi_inverse(P(3, 1, 1)).shape == P(2, 1)

    def test_rejects_even_hook_count(self):
        # 4+4+2+2 is self-conjugate but has two hooks
        with pytest.raises(MalformedSClass):
            phi_inverse(P(4, 4, 2, 2))

    def test_rejects_bad_pairing(self):
        # hooks 13,7,1: the 7,1 pair gap is 6
        bad = distinct_odd_to_sc(P(13, 7, 1))
        with pytest.raises(MalformedSClass):
            phi_inverse(bad)

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_roundtrips(self, n):
        for g in enumerate_O(n):
            assert phi_inverse(phi(g)).shape == g.shape
        for p in enumerate_S(n):
            assert phi(phi_inverse(p)) == p

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_image_coverage(self, n):
        image = sorted(phi(g).parts for g in enumerate_O(n))
        assert image == sorted(p.parts for p in enumerate_S(n))


class TestHookSumBijection:
    def test_examples(self):
        assert sc_to_distinct_odd(P(5, 5, 5, 3, 3)) == P(9, 7, 5)
        assert sc_to_distinct_odd(P(1)) == P(1)
        assert sc_to_distinct_odd(P(4, 4, 2, 2)) == P(7, 5)

    def test_inverse_examples(self):
        assert distinct_odd_to_sc(P(9, 7, 5)) == P(5, 5, 5, 3, 3)
        assert distinct_odd_to_sc(P(1)) == P(1)
        assert distinct_odd_to_sc(P(7, 5)) == P(4, 4, 2, 2)

    def test_errors(self):
        with pytest.raises(NotSelfConjugate):
            sc_to_distinct_odd(P(3, 1))
        with pytest.raises(NotDistinctOdd):
            distinct_odd_to_sc(P(4, 2))
        with pytest.raises(NotDistinctOdd):
            distinct_odd_to_sc(P(3, 3))

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_roundtrip_on_s(self, n):
        for p in enumerate_S(n):
            img = sc_to_distinct_odd(p)
            assert all(x % 2 == 1 for x in img.parts)
            assert len(set(img.parts)) == len(img.parts)
            assert img.weight == p.weight
            assert distinct_odd_to_sc(img) == p


class TestODBijection:
    def test_examples(self):
        assert o_to_d(G(3, 3, 2)) == P(6, 5)
        assert o_to_d(G(1)) == P(1)
        assert o_to_d(G(2, 1)) == P(3)

    def test_inverse_examples(self):
        assert d_to_o(P(6, 5)).shape == P(3, 3, 2)
        assert d_to_o(P(1)).shape == P(1)
        assert d_to_o(P(3)).shape == P(2, 1)

    def test_inverse_errors(self):
        with pytest.raises(MalformedDClass):
            d_to_o(P(4, 3))  # even part not 2 mod 4
        with pytest.raises(MalformedDClass):
            d_to_o(P(2, 2))  # no odd part
        with pytest.raises(MalformedDClass):
            d_to_o(P(10, 1))  # recovered arms collide

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_bijectivity(self, n):
        image = sorted(o_to_d(g).parts for g in enumerate_O(n))
        assert image == sorted(p.parts for p in enumerate_D(n))
        for g in enumerate_O(n):
            assert is_in_D(o_to_d(g), n)
            assert d_to_o(o_to_d(g)).shape == g.shape
        for p in enumerate_D(n):
            assert o_to_d(d_to_o(p)) == p


class TestDDOBijection:
    def test_examples(self):
        assert d_to_do(P(6, 5)) == P(9, 7, 5)
        assert d_to_do(P(1)) == P(1)
        assert d_to_do(P(3)) == P(5)

    def test_inverse_examples(self):
        assert do_to_d(P(9, 7, 5)) == P(6, 5)
        assert do_to_d(P(1)) == P(1)
        assert do_to_d(P(5)) == P(3)

    def test_errors(self):
        with pytest.raises(MalformedDClass):
            d_to_do(P(5, 4, 2))
        with pytest.raises(MalformedDOClass):
            do_to_d(P(13, 7, 1))  # pair gap 6
        with pytest.raises(MalformedDOClass):
            do_to_d(P(3, 1))  # even part count

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_bijectivity(self, n):
        image = sorted(d_to_do(p).parts for p in enumerate_D(n))
        assert image == sorted(p.parts for p in enumerate_DO(n))
        for p in enumerate_D(n):
            assert is_in_DO(d_to_do(p), n)
            assert do_to_d(d_to_do(p)) == p
        for p in enumerate_DO(n):
            assert d_to_do(do_to_d(p)) == p

    @pytest.mark.parametrize("n", range(EXHAUSTIVE_N + 1))
    def test_commuting_square(self, n):
        # the direct +-1 formula must agree with the compositional route
        for g in enumerate_O(n):
            assert sc_to_distinct_odd(phi(g)) == d_to_do(o_to_d(g))
