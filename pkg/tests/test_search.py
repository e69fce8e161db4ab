"""Seeded space generation, witness search, and generator portability."""

import pytest

from softtop import (
    ExhaustedReport,
    SearchSpec,
    SplitMix64,
    Witness,
    discrete,
    find_nonclosed_pair,
    find_separating_set,
    is_in_class,
    random_space,
    search_separation,
    validate_topology,
)
from softtop.classes import HIERARCHY_IMPLICATIONS
from softtop.search import make_context


class TestSplitMix64:
    def test_reference_vectors(self):
        # first outputs of the published reference implementation
        rng = SplitMix64(0)
        assert [rng.next() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]
        rng = SplitMix64(42)
        assert [rng.next() for _ in range(3)] == [
            0xBDD732262FEB6E95,
            0x28EFE333B266F103,
            0x47526757130F9F52,
        ]

    def test_chance_extremes(self):
        rng = SplitMix64(1)
        assert not any(rng.chance(0.0) for _ in range(50))
        assert all(rng.chance(1.0) for _ in range(50))


class TestSearchSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchSpec(0, 1, seed=1)
        with pytest.raises(ValueError):
            SearchSpec(9, 2, seed=1)
        with pytest.raises(ValueError):
            SearchSpec(2, 2, seed=1, max_trials=0)
        with pytest.raises(ValueError):
            SearchSpec(2, 2, seed=1, density=1.5)


class TestRandomSpace:
    def test_output_validates(self):
        for seed in range(20):
            ctx, top = random_space(SearchSpec(3, 2, seed=seed, density=0.4))
            validate_topology(ctx, top.members)

    def test_deterministic(self):
        spec = SearchSpec(3, 2, seed=77, density=0.6)
        _, a = random_space(spec)
        _, b = random_space(spec)
        assert a == b

    def test_density_zero_gives_indiscrete(self):
        _, top = random_space(SearchSpec(3, 2, seed=5, density=0.0))
        assert len(top.members) == 2


class TestFindSeparatingSet:
    def test_pre_open_vs_alpha_open_witness_exists(self, ex33):
        top = ex33.topology
        w = find_separating_set(top, "pre-open", "alpha-open")
        assert w is not None
        assert is_in_class(top, w, "pre-open")
        assert not is_in_class(top, w, "alpha-open")
        h = ex33.sets["H"]
        assert is_in_class(top, h, "pre-open") and not is_in_class(top, h, "alpha-open")

    def test_beta_open_vs_semi_open_witness_exists(self, ex33):
        w = find_separating_set(ex33.topology, "beta-open", "semi-open")
        assert w is not None

    def test_discrete_space_has_no_separation(self):
        top = discrete(make_context(2, 2))
        assert find_separating_set(top, "beta-open", "open") is None

    def test_returns_the_canonically_first_witness(self, ex33):
        top = ex33.topology
        w = find_separating_set(top, "pre-open", "alpha-open")
        from softtop import enumerate_all_soft_sets

        for f in enumerate_all_soft_sets(top.context):
            if f.mask == w.mask:
                break
            assert not (
                is_in_class(top, f, "pre-open")
                and not is_in_class(top, f, "alpha-open")
            )


class TestFindNonclosedPair:
    def test_beta_open_intersection_failure(self, ex36):
        top = ex36.topology
        pair = find_nonclosed_pair(top, "beta-open", "intersection")
        assert pair is not None
        a, b = pair
        assert not is_in_class(top, a & b, "beta-open")
        # the paper's pair qualifies too
        g, h = ex36.sets["G"], ex36.sets["H"]
        assert is_in_class(top, g, "beta-open") and is_in_class(top, h, "beta-open")
        assert not is_in_class(top, g & h, "beta-open")

    def test_beta_closed_union_failure(self, ex38):
        top = ex38.topology
        pair = find_nonclosed_pair(top, "beta-closed", "union")
        assert pair is not None
        a, b = pair
        assert not is_in_class(top, a | b, "beta-closed")
        g, h = ex38.sets["G"], ex38.sets["H"]
        assert is_in_class(top, g, "beta-closed") and is_in_class(top, h, "beta-closed")
        assert not is_in_class(top, g | h, "beta-closed")

    def test_beta_open_union_never_fails(self, ex33, ex36, random_spaces):
        for top in [ex33.topology, ex36.topology] + random_spaces[:10]:
            assert find_nonclosed_pair(top, "beta-open", "union") is None

    def test_beta_closed_intersection_never_fails(self, random_spaces):
        for top in random_spaces[:10]:
            assert find_nonclosed_pair(top, "beta-closed", "intersection") is None

    def test_unknown_operation_rejected(self, ex36):
        with pytest.raises(ValueError):
            find_nonclosed_pair(ex36.topology, "beta-open", "xor")


class TestSearchSeparation:
    def test_finds_pre_vs_alpha_witness(self):
        spec = SearchSpec(3, 2, seed=2024, max_trials=200, density=0.35)
        outcome = search_separation(spec, "pre-open", "alpha-open")
        assert isinstance(outcome, Witness)
        assert outcome.verify()

    def test_never_finds_witness_for_proven_implications(self):
        for weaker, stronger in HIERARCHY_IMPLICATIONS:
            spec = SearchSpec(2, 2, seed=9, max_trials=40, density=0.5)
            outcome = search_separation(spec, weaker, stronger)
            assert isinstance(outcome, ExhaustedReport)
            assert outcome.trials == 40

    def test_deterministic_outcome(self):
        spec = SearchSpec(3, 2, seed=12345, max_trials=100, density=0.3)
        a = search_separation(spec, "beta-open", "semi-open")
        b = search_separation(spec, "beta-open", "semi-open")
        assert isinstance(a, Witness) and isinstance(b, Witness)
        assert a.trial_index == b.trial_index
        assert a.subject == b.subject
        assert a.topology == b.topology

    def test_witness_records_replayable_trial_seed(self):
        spec = SearchSpec(3, 2, seed=2024, max_trials=200, density=0.35)
        outcome = search_separation(spec, "pre-open", "alpha-open")
        assert isinstance(outcome, Witness)
        from softtop.search import SplitMix64, random_space_from

        ctx = make_context(spec.universe_size, spec.param_count)
        replayed = random_space_from(
            SplitMix64(outcome.trial_seed), ctx, spec.density
        )
        assert replayed == outcome.topology
