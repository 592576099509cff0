import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurweyl.weights import (OrbitSignature, PartitionPair, RationalWeight, Weight, canonicalize,
                               from_partition_pair, is_contractive, l1_norm, orbit_equal,
                               split_signs, to_partition_pair)

from conftest import W

weights = st.dictionaries(st.integers(0, 30), st.integers(-4, 4).filter(bool), max_size=6).map(Weight)


class TestCanonicalize:
    def test_examples(self):
        assert canonicalize(Weight({0: 2, 1: 1})) == OrbitSignature({2: 1, 1: 1})
        assert canonicalize(Weight({})) == OrbitSignature({})
        assert canonicalize(Weight({5: -1, 9: -1})) == OrbitSignature({-1: 2})

    @given(weights, st.randoms(use_true_random=False))
    def test_invariant_under_finite_permutations(self, lam, r):
        idx = sorted(lam.support() | set(r.sample(range(40), 5)))
        img = idx[:]
        r.shuffle(img)
        assert canonicalize(lam.permute(dict(zip(idx, img)))) == canonicalize(lam)

    @given(weights)
    def test_l1_norm_from_multiplicities(self, lam):
        sig = canonicalize(lam)
        assert l1_norm(lam) == sum(abs(k) * m for k, m in sig.multiplicities.items())


class TestOrbitEqual:
    def test_examples(self):
        assert orbit_equal(Weight({0: 2, 1: 1}), Weight({7: 1, 3: 2}))
        assert not orbit_equal(Weight({0: 1}), Weight({0: -1}))
        assert orbit_equal(Weight({0: 2, 1: -1}), Weight({0: 2, 1: -1}))


class TestSplitSigns:
    def test_examples(self):
        assert split_signs(Weight({0: 2, 1: -1})) == (Weight({0: 2}), Weight({1: 1}))
        assert split_signs(Weight({0: 3})) == (Weight({0: 3}), Weight({}))
        assert split_signs(Weight({})) == (Weight({}), Weight({}))

    @given(weights)
    def test_reassembles_with_disjoint_supports(self, lam):
        plus, minus = split_signs(lam)
        assert plus - minus == lam
        assert not plus.support() & minus.support()
        assert all(v > 0 for v in plus.values() + minus.values())


class TestPartitionPairs:
    def test_examples(self):
        assert to_partition_pair(Weight({0: 2, 1: 1, 2: -3})) == PartitionPair((2, 1), (3,))
        assert from_partition_pair(PartitionPair((2, 1), (3,))) == Weight({0: 2, 1: 1, 2: -3})
        assert to_partition_pair(Weight({})) == PartitionPair((), ())

    def test_negatives_placed_in_decreasing_order(self):
        assert from_partition_pair(PartitionPair((1,), (3, 1))) == W(1, -1, -3)

    @given(weights)
    def test_round_trip_preserves_orbit(self, lam):
        pair = to_partition_pair(lam)
        assert canonicalize(from_partition_pair(pair)) == canonicalize(lam)
        assert to_partition_pair(from_partition_pair(pair)) == pair

    def test_rejects_non_partitions(self):
        with pytest.raises(ValueError):
            PartitionPair((1, 2), ())
        with pytest.raises(ValueError):
            PartitionPair((), (0,))


class TestContractive:
    @pytest.mark.parametrize("lam,expected", [
        ({4: 1}, True), ({4: -1}, True), ({4: 2}, False), ({0: 1, 1: 1}, False), ({}, False),
    ])
    def test_examples(self, lam, expected):
        assert is_contractive(Weight(lam)) is expected


class TestJson:
    def test_round_trip(self):
        lam = Weight({3: -2, 0: 5})
        text = json.dumps(lam.to_json())
        assert Weight.from_json(text) == lam
        assert Weight.from_json({"0": 5, "3": -2}) == lam

    @pytest.mark.parametrize("bad", [{"0": 0}, {"0": 1.5}, {"0": True}, [1, 2]])
    def test_rejects_bad_values(self, bad):
        with pytest.raises(ValueError):
            Weight.from_json(bad)

    def test_rational_weight(self):
        mu = RationalWeight.from_json({"2": "1/2", "0": -1})
        assert mu.to_json() == {"entries": {"0": "-1", "2": "1/2"}}
        with pytest.raises(ValueError):
            RationalWeight.from_json({"0": 0.25})

    def test_zero_values_never_stored(self):
        assert Weight({0: 0, 1: 2}) == Weight({1: 2})
        assert len(W(0, 0, 3)) == 1


def test_signature_representative_is_sorted():
    sig = canonicalize(Weight({9: -1, 4: 3, 2: -2, 7: 3}))
    assert sig.representative() == W(3, 3, -1, -2)
    assert sig.negated() == canonicalize(W(-3, -3, 1, 2))
    rng = random.Random(1)
    vals = [rng.choice([-2, -1, 1, 2]) for _ in range(10)]
    assert canonicalize(W(*vals)).size() == 10
