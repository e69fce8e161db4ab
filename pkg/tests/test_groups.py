"""Homeomorphism collections, the beta-irresolute group, and conjugation."""

import itertools

import pytest

from softtop import (
    CapExceededError,
    SoftContext,
    SoftMapping,
    build_collection,
    build_group,
    classify_bijection,
    conjugation_iso,
    discrete,
    enumerate_all_soft_sets,
    indiscrete,
    is_subgroup,
    validate_topology,
)
from softtop.groups import (
    GroupLawError,
    HOMEO_KINDS,
    chain_perms,
    identity_perm,
    invert_perm,
)


@pytest.fixture(scope="module")
def indiscrete3():
    return indiscrete(SoftContext(("x1", "x2", "x3"), ("e1", "e2")))


class TestClassifyBijection:
    def test_identity_has_all_tags(self, ex33, ex36, random_spaces):
        for top in [ex33.topology, ex36.topology] + random_spaces[:6]:
            n = top.context.n_elements
            assert classify_bijection(identity_perm(n), top) == frozenset(HOMEO_KINDS)

    def test_everything_qualifies_on_indiscrete(self, indiscrete3):
        for p in itertools.permutations(range(3)):
            assert "beta-irresolute-homeo" in classify_bijection(p, indiscrete3)

    def test_transposition_on_the_two_point_space(self, ex36):
        # frozen from the naive oracle: the swap satisfies none of the kinds
        assert classify_bijection((1, 0), ex36.topology) == frozenset()

    def test_seven_member_space_tags(self, ex33):
        # frozen from the naive oracle: only two transpositions are
        # beta-homeomorphisms and neither is beta-irresolute
        tags = {p: classify_bijection(p, ex33.topology) for p in itertools.permutations(range(3))}
        assert tags[(0, 1, 2)] == frozenset(HOMEO_KINDS)
        assert tags[(0, 2, 1)] == frozenset({"beta-homeo"})
        assert tags[(2, 1, 0)] == frozenset({"beta-homeo"})
        for p in [(1, 0, 2), (1, 2, 0), (2, 0, 1)]:
            assert tags[p] == frozenset()

    def test_non_permutation_rejected(self, ex36):
        with pytest.raises(ValueError):
            classify_bijection((0, 0), ex36.topology)


class TestCollections:
    def test_indiscrete_collection_is_everything(self, indiscrete3):
        coll = build_collection(indiscrete3, "beta-irresolute-homeo")
        assert len(coll) == 6
        assert coll.elements == tuple(itertools.permutations(range(3)))

    def test_discrete_collections_are_everything(self):
        top = discrete(SoftContext(("x1", "x2", "x3"), ("e1",)))
        for kind in HOMEO_KINDS:
            assert len(build_collection(top, kind)) == 6

    def test_inclusion_chain_on_every_space(self, ex33, ex36, ex44, ex47, random_spaces):
        spaces = [ex33.topology, ex36.topology, ex44.tau_x, ex44.tau_y,
                  ex47.tau_x, ex47.tau_y, ex47.tau_z] + random_spaces[:8]
        for top in spaces:
            soft = set(build_collection(top, "soft-homeo").elements)
            irr = set(build_collection(top, "beta-irresolute-homeo").elements)
            beta = set(build_collection(top, "beta-homeo").elements)
            assert soft <= irr <= beta

    def test_frozen_collection_sizes(self, ex33, ex36, ex44, ex47):
        # regression constants computed with the naive oracle before the build
        def sizes(top):
            return tuple(len(build_collection(top, kind)) for kind in HOMEO_KINDS)

        assert sizes(ex33.topology) == (1, 3, 1)
        assert sizes(ex36.topology) == (1, 1, 1)
        assert sizes(ex44.tau_x) == (2, 2, 2)
        assert sizes(ex44.tau_y) == (1, 2, 2)
        assert sizes(ex47.tau_z) == (2, 6, 6)

    def test_bound_on_universe_size(self):
        ctx = SoftContext(tuple(f"x{i}" for i in range(7)), ("e1",))
        with pytest.raises(CapExceededError):
            build_collection(indiscrete(ctx), "soft-homeo")

    def test_homeomorphism_commutes_with_the_triple_composite(self, ex33):
        # key identity used by the inclusion proof, checked for each soft
        # homeomorphism and every soft set
        top = ex33.topology
        for p in build_collection(top, "soft-homeo").elements:
            m = SoftMapping(top.context, top.context, p)
            for g in enumerate_all_soft_sets(top.context):
                lhs = m.preimage(top.closure(top.interior(top.closure(g))))
                rhs = top.closure(top.interior(top.closure(m.preimage(g))))
                assert lhs == rhs


class TestGroupTable:
    def test_symmetric_group_on_indiscrete_three_points(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        assert group.order == 6
        assert group.elements[group.identity_index] == (0, 1, 2)
        # the table follows op(a, b) = b after a
        for i, a in enumerate(group.elements):
            for j, b in enumerate(group.elements):
                assert group.elements[group.cayley[i][j]] == chain_perms(a, b)
        for i, p in enumerate(group.elements):
            assert group.elements[group.inverse[i]] == invert_perm(p)

    def test_group_axioms_on_paper_spaces(self, ex33, ex36, ex44, ex47, random_spaces):
        spaces = [ex33.topology, ex36.topology, ex44.tau_x, ex44.tau_y,
                  ex47.tau_x, ex47.tau_z] + random_spaces[:6]
        for top in spaces:
            group = build_group(build_collection(top, "beta-irresolute-homeo"))
            assert group.order >= 1  # axioms verified inside build_group

    def test_frozen_group_order_of_the_seven_member_space(self, ex33):
        group = build_group(build_collection(ex33.topology, "beta-irresolute-homeo"))
        assert group.order == 1

    def test_beta_homeo_collection_can_fail_closure(self, ex33):
        # the two transpositions compose to a 3-cycle that is not in the
        # collection, so the beta-homeomorphisms of this space are not a group
        coll = build_collection(ex33.topology, "beta-homeo")
        assert len(coll) == 3
        with pytest.raises(GroupLawError) as err:
            build_group(coll)
        assert err.value.law == "closure"
        a, b, composed = err.value.witness
        assert composed == chain_perms(a, b)

    def test_soft_homeomorphisms_form_a_subgroup(self, ex44, random_spaces):
        spaces = [ex44.tau_x] + random_spaces[:8]
        for top in spaces:
            group = build_group(build_collection(top, "beta-irresolute-homeo"))
            soft_group = build_group(build_collection(top, "soft-homeo"))
            assert is_subgroup(soft_group, group)

    def test_trivial_group_is_a_subgroup(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        assert is_subgroup([identity_perm(3)], group)

    def test_dropping_an_element_breaks_closure(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        dropped = [p for p in group.elements if p != (1, 2, 0)]
        check = is_subgroup(dropped, group)
        assert not check
        assert check.reason == "not closed under the group operation"
        assert check.witness

    def test_elements_outside_the_group_are_rejected(self, ex33):
        group = build_group(build_collection(ex33.topology, "beta-irresolute-homeo"))
        check = is_subgroup([(0, 2, 1)], group)
        assert not check
        assert check.reason == "element not in the group"


class TestConjugation:
    def test_identity_conjugation_is_identity(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        iso = conjugation_iso(SoftMapping.identity(indiscrete3.context), group, group)
        assert iso.mapping == tuple(range(group.order))
        assert iso.is_isomorphism

    def test_transposition_conjugation_on_symmetric_group(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        swap = SoftMapping(indiscrete3.context, indiscrete3.context, (1, 0, 2))
        iso = conjugation_iso(swap, group, group)
        assert iso.is_isomorphism
        # conjugation in the symmetric group: a |-> swap . a . swap
        for i, a in enumerate(group.elements):
            expected = chain_perms(chain_perms((1, 0, 2), a), (1, 0, 2))
            assert group.elements[iso.mapping[i]] == expected

    def test_conjugation_between_relabeled_spaces(self, ex44):
        # transport the space along a bijection and conjugate across it
        top = ex44.tau_x
        ctx = top.context
        other = SoftContext(("y1", "y2", "y3"), ctx.params)
        relabel = SoftMapping(ctx, other, (2, 0, 1))
        moved = validate_topology(
            other, [relabel.image(m) for m in top.members]
        )
        group_x = build_group(build_collection(top, "beta-irresolute-homeo"))
        group_y = build_group(build_collection(moved, "beta-irresolute-homeo"))
        iso = conjugation_iso(relabel, group_x, group_y)
        assert iso.is_isomorphism
        assert group_x.order == group_y.order == 2

    def test_functoriality_of_conjugation(self, indiscrete3):
        group = build_group(build_collection(indiscrete3, "beta-irresolute-homeo"))
        ctx = indiscrete3.context
        f = SoftMapping(ctx, ctx, (1, 0, 2))
        g = SoftMapping(ctx, ctx, (0, 2, 1))
        from softtop.maps import compose

        composed = conjugation_iso(compose(f, g), group, group)
        f_star = conjugation_iso(f, group, group)
        g_star = conjugation_iso(g, group, group)
        chained = tuple(g_star.mapping[f_star.mapping[i]] for i in range(group.order))
        assert composed.mapping == chained

    def test_non_irresolute_map_rejected(self, ex33):
        group = build_group(build_collection(ex33.topology, "beta-irresolute-homeo"))
        swap = SoftMapping(ex33.topology.context, ex33.topology.context, (1, 0, 2))
        with pytest.raises(ValueError):
            conjugation_iso(swap, group, group)

    def test_relabeled_homeomorphism_is_beta_irresolute_both_ways(self, ex33):
        # cross-space form of the inclusion statement: a homeomorphism
        # between a space and its relabeling is beta-irresolute in both
        # directions
        top = ex33.topology
        ctx = top.context
        other = SoftContext(("y1", "y2", "y3"), ctx.params)
        relabel = SoftMapping(ctx, other, (1, 2, 0))
        moved = validate_topology(other, [relabel.image(m) for m in top.members])
        from softtop import classify_map

        assert "beta-irresolute" in classify_map(relabel, top, moved)
        assert "beta-irresolute" in classify_map(relabel.inverse(), moved, top)
