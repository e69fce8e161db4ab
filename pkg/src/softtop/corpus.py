"""The embedded golden corpus and the verify-paper suite.

Six worked examples (two set-class separations, one intersection failure,
one union failure, three continuity separations) are reproduced exactly,
then the general statements are checked over seeded random corpora: the
class hierarchy implications, the section-3 theorem battery, the five-way
beta-continuity equivalence, the homeomorphism group laws, and the
scan-versus-duality operator cross-check. Every item is deterministic for
a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import (
    HIERARCHY_IMPLICATIONS,
    check_beta_closed_characterization,
    classify,
    enumerate_class,
    is_in_class,
)
from .core import SoftContext, SoftSet, absolute_set, enumerate_all_soft_sets, null_set
from .groups import (
    GroupLawError,
    build_collection,
    build_group,
    conjugation_iso,
    is_subgroup,
)
from .maps import SoftMapping, classify_map, compose, thm45_variant
from .search import SplitMix64, make_context, random_space_from
from .topology import SoftTopology, discrete, indiscrete, validate_topology, validate_supratopology

DEFAULT_VERIFY_SEED = 0x50F7B37A  # fixed so verify-paper output is stable
HIERARCHY_SPACE_COUNT = 500
MAP_INSTANCE_COUNT = 200


@dataclass(frozen=True, eq=False)
class PaperSpace:
    name: str
    topology: SoftTopology
    sets: dict[str, SoftSet]


@dataclass(frozen=True, eq=False)
class MapExample:
    name: str
    tau_x: SoftTopology
    tau_y: SoftTopology
    mapping: SoftMapping


def example_3_3() -> PaperSpace:
    """Seven-member topology on three points; H separates pre from alpha."""
    ctx = SoftContext(("x1", "x2", "x3"), ("e1", "e2"))
    sets = {
        "F1": ctx.soft_set({"x1", "x2"}, {"x1", "x2"}),
        "F2": ctx.soft_set({"x2"}, {"x1", "x3"}),
        "F3": ctx.soft_set({"x2", "x3"}, {"x1"}),
        "F4": ctx.soft_set({"x2"}, {"x1"}),
        "F5": ctx.soft_set({"x1", "x2"}, {"x1", "x2", "x3"}),
        "F6": ctx.soft_set({"x1", "x2", "x3"}, {"x1", "x2"}),
        "F7": ctx.soft_set({"x2", "x3"}, {"x1", "x3"}),
    }
    top = validate_topology(ctx, list(sets.values()))
    sets["H"] = ctx.soft_set(set(), {"x1"})
    return PaperSpace("example-3.3", top, sets)


def example_3_6() -> PaperSpace:
    """Five-member topology on two points; G and H witness the intersection failure."""
    ctx = SoftContext(("x1", "x2"), ("e1", "e2"))
    sets = {
        "F1": ctx.soft_set({"x1"}, {"x2"}),
        "F2": ctx.soft_set({"x1", "x2"}, {"x2"}),
        "F3": ctx.soft_set({"x1"}, {"x1", "x2"}),
    }
    top = validate_topology(ctx, list(sets.values()))
    sets["G"] = ctx.soft_set({"x2"}, {"x2"})
    sets["H"] = ctx.soft_set({"x1", "x2"}, {"x1"})
    return PaperSpace("example-3.6", top, sets)


def example_3_8() -> PaperSpace:
    """Same space as example 3.6; G and H witness the union failure for beta-closed."""
    base = example_3_6()
    ctx = base.topology.context
    sets = {
        "G": ctx.soft_set({"x1"}, {"x1"}),
        "H": ctx.soft_set(set(), {"x2"}),
    }
    return PaperSpace("example-3.8", base.topology, sets)


def example_4_3() -> MapExample:
    """Swap map from the indiscrete three-point space to the discrete one."""
    ctx = SoftContext(("x1", "x2", "x3"), ("e1", "e2"))
    mapping = SoftMapping.from_labels(ctx, ctx, {"x1": "x2", "x2": "x1", "x3": "x3"})
    return MapExample("example-4.3", indiscrete(ctx), discrete(ctx), mapping)


def example_4_4() -> MapExample:
    """Three-point spaces where the G2 preimage is beta-open but not pre-open."""
    ctx = SoftContext(("x1", "x2", "x3"), ("e1", "e2"))
    tau_x = validate_topology(
        ctx,
        [
            ctx.soft_set({"x1"}, {"x1"}),
            ctx.soft_set({"x2"}, {"x2"}),
            ctx.soft_set({"x1", "x2"}, {"x1", "x2"}),
        ],
    )
    tau_y = validate_topology(
        ctx,
        [
            ctx.soft_set({"x1"}, {"x1"}),
            ctx.soft_set({"x1", "x2"}, {"x1", "x2"}),
        ],
    )
    mapping = SoftMapping.from_labels(ctx, ctx, {"x1": "x1", "x2": "x3", "x3": "x2"})
    return MapExample("example-4.4", tau_x, tau_y, mapping)


@dataclass(frozen=True, eq=False)
class CompositionExample:
    name: str
    tau_x: SoftTopology
    tau_y: SoftTopology
    tau_z: SoftTopology
    first: SoftMapping  # X -> Y
    second: SoftMapping  # Y -> Z


def example_4_7() -> CompositionExample:
    """Two beta-continuous maps whose composition is not beta-continuous."""
    ctx_x = SoftContext(("x1", "x2", "x3"), ("e1", "e2"))
    ctx_y = SoftContext(("x1", "x2", "x3", "x4"), ("e1", "e2"))
    ctx_z = SoftContext(("x1", "x2", "x3"), ("e1", "e2"))
    tau_x = validate_topology(ctx_x, [ctx_x.soft_set({"x1"}, {"x1"})])
    tau_y = validate_topology(ctx_y, [ctx_y.soft_set({"x1", "x3"}, {"x1", "x3"})])
    tau_z = validate_topology(
        ctx_z,
        [
            ctx_z.soft_set({"x3"}, {"x3"}),
            ctx_z.soft_set({"x1", "x2"}, {"x1", "x2"}),
        ],
    )
    inclusion = SoftMapping.from_labels(
        ctx_x, ctx_y, {"x1": "x1", "x2": "x2", "x3": "x3"}
    )
    collapse = SoftMapping.from_labels(
        ctx_y, ctx_z, {"x1": "x1", "x2": "x2", "x3": "x3", "x4": "x2"}
    )
    return CompositionExample("example-4.7", tau_x, tau_y, tau_z, inclusion, collapse)


def corpus_spaces() -> list[tuple[str, SoftTopology]]:
    """Every space occurring in the worked examples, by a stable name."""
    e33, e36 = example_3_3(), example_3_6()
    e43, e44, e47 = example_4_3(), example_4_4(), example_4_7()
    return [
        ("ex3.3", e33.topology),
        ("ex3.6", e36.topology),
        ("ex4.3-X", e43.tau_x),
        ("ex4.3-Y", e43.tau_y),
        ("ex4.4-X", e44.tau_x),
        ("ex4.4-Y", e44.tau_y),
        ("ex4.7-X", e47.tau_x),
        ("ex4.7-Y", e47.tau_y),
        ("ex4.7-Z", e47.tau_z),
    ]


# --- random corpora ---


def hierarchy_corpus(seed: int, count: int = HIERARCHY_SPACE_COUNT):
    """Seeded random spaces with |X| <= 3 and |E| <= 2, densities varying."""
    rng = SplitMix64(seed)
    spaces = []
    for _ in range(count):
        ctx = make_context(1 + rng.below(3), 1 + rng.below(2))
        density = rng.below(101) / 100.0
        spaces.append(random_space_from(rng, ctx, density))
    return spaces


def map_corpus(seed: int, count: int = MAP_INSTANCE_COUNT):
    """Seeded random (space, map, space) instances with |X|,|Y| <= 3, |E| <= 2."""
    rng = SplitMix64(seed)
    instances = []
    for _ in range(count):
        nx, ny, ne = 1 + rng.below(3), 1 + rng.below(3), 1 + rng.below(2)
        ctx_x, ctx_y = make_context(nx, ne), make_context(ny, ne)
        tau_x = random_space_from(rng, ctx_x, rng.below(101) / 100.0)
        tau_y = random_space_from(rng, ctx_y, rng.below(101) / 100.0)
        point_map = tuple(rng.below(ny) for _ in range(nx))
        instances.append((SoftMapping(ctx_x, ctx_y, point_map), tau_x, tau_y))
    return instances


# --- verify items ---


@dataclass(frozen=True)
class VerifyItem:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    items: tuple[VerifyItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def failures(self) -> int:
        return sum(not item.passed for item in self.items)


def _item(name: str, checks: list[tuple[bool, str]]) -> VerifyItem:
    bad = [msg for ok, msg in checks if not ok]
    if bad:
        return VerifyItem(name, False, "; ".join(bad))
    return VerifyItem(name, True, f"{len(checks)} checks")


def item_example_3_3() -> VerifyItem:
    space = example_3_3()
    tags = classify(space.topology, space.sets["H"])
    return _item(
        "example-3.3",
        [
            ("pre-open" in tags, "H should be pre-open"),
            ("alpha-open" not in tags, "H should not be alpha-open"),
            ("beta-open" in tags, "H should be beta-open"),
            ("semi-open" not in tags, "H should not be semi-open"),
        ],
    )


def item_example_3_6() -> VerifyItem:
    space = example_3_6()
    top = space.topology
    g, h = space.sets["G"], space.sets["H"]
    k = g & h
    ctx = top.context
    cic = top.closure(top.interior(top.closure(k)))
    return _item(
        "example-3.6",
        [
            (is_in_class(top, g, "beta-open"), "G should be beta-open"),
            (is_in_class(top, h, "beta-open"), "H should be beta-open"),
            (k == ctx.soft_set({"x2"}, set()), "K should be ({x2},{})"),
            (not is_in_class(top, k, "beta-open"), "K should not be beta-open"),
            (cic == null_set(ctx), "cl(int(cl K)) should be the null set"),
        ],
    )


def item_example_3_8() -> VerifyItem:
    space = example_3_8()
    top = space.topology
    g, h = space.sets["G"], space.sets["H"]
    k = g | h
    ctx = top.context
    ici = top.interior(top.closure(top.interior(k)))
    return _item(
        "example-3.8",
        [
            (is_in_class(top, g, "beta-closed"), "G should be beta-closed"),
            (is_in_class(top, h, "beta-closed"), "H should be beta-closed"),
            (k == ctx.soft_set({"x1"}, {"x1", "x2"}), "K should be ({x1},{x1,x2})"),
            (not is_in_class(top, k, "beta-closed"), "K should not be beta-closed"),
            (ici == absolute_set(ctx), "int(cl(int K)) should be the absolute set"),
        ],
    )


def item_example_4_3() -> VerifyItem:
    ex = example_4_3()
    tags = classify_map(ex.mapping, ex.tau_x, ex.tau_y)
    return _item(
        "example-4.3",
        [
            ("beta-continuous" in tags, "map should be beta-continuous"),
            ("semi-continuous" not in tags, "map should not be semi-continuous"),
        ],
    )


def item_example_4_4() -> VerifyItem:
    ex = example_4_4()
    ctx = ex.tau_x.context
    g2 = ctx.soft_set({"x1", "x2"}, {"x1", "x2"})
    expected = ctx.soft_set({"x1", "x3"}, {"x1", "x3"})
    tags = classify_map(ex.mapping, ex.tau_x, ex.tau_y)
    return _item(
        "example-4.4",
        [
            (ex.mapping.preimage(g2) == expected, "preimage of G2 is wrong"),
            ("beta-continuous" in tags, "map should be beta-continuous"),
            ("pre-continuous" not in tags, "map should not be pre-continuous"),
        ],
    )


def item_example_4_7() -> VerifyItem:
    ex = example_4_7()
    composite = compose(ex.first, ex.second)
    h1 = ex.tau_z.context.soft_set({"x3"}, {"x3"})
    expected = ex.tau_x.context.soft_set({"x3"}, {"x3"})
    first_tags = classify_map(ex.first, ex.tau_x, ex.tau_y)
    second_tags = classify_map(ex.second, ex.tau_y, ex.tau_z)
    composite_tags = classify_map(composite, ex.tau_x, ex.tau_z)
    return _item(
        "example-4.7",
        [
            ("beta-continuous" in first_tags, "inclusion should be beta-continuous"),
            ("beta-continuous" in second_tags, "collapse should be beta-continuous"),
            (composite.preimage(h1) == expected, "composite preimage of H1 is wrong"),
            (
                "beta-continuous" not in composite_tags,
                "composite should not be beta-continuous",
            ),
        ],
    )


def item_hierarchy(spaces) -> VerifyItem:
    violations = 0
    sets_checked = 0
    for top in spaces:
        for f in enumerate_all_soft_sets(top.context):
            tags = classify(top, f)
            sets_checked += 1
            for weaker, stronger in HIERARCHY_IMPLICATIONS:
                if weaker in tags and stronger not in tags:
                    violations += 1
    return VerifyItem(
        "hierarchy-implications",
        violations == 0,
        f"spaces={len(spaces)} sets={sets_checked} violations={violations}",
    )


def _sweep(name: str, spaces, per_set) -> VerifyItem:
    """Run a per-set predicate over every soft set of every space."""
    violations = 0
    checked = 0
    for top in spaces:
        for f in enumerate_all_soft_sets(top.context):
            checked += 1
            if not per_set(top, f):
                violations += 1
    return VerifyItem(
        name, violations == 0, f"spaces={len(spaces)} sets={checked} violations={violations}"
    )


def item_prop_3_5(spaces) -> VerifyItem:
    """The beta-open family of every space is a valid supratopology."""
    failures = 0
    for top in spaces:
        family = enumerate_class(top, "beta-open")
        try:
            validate_supratopology(top.context, family)
        except Exception:
            failures += 1
    return VerifyItem(
        "prop-3.5", failures == 0, f"spaces={len(spaces)} failures={failures}"
    )


def item_prop_3_7(spaces) -> VerifyItem:
    """Pairwise intersections of beta-closed sets stay beta-closed."""
    violations = 0
    pairs = 0
    for top in spaces:
        family = enumerate_class(top, "beta-closed")
        masks = {f.mask for f in family}
        for i, a in enumerate(family):
            for b in family[i + 1 :]:
                pairs += 1
                if (a & b).mask not in masks:
                    violations += 1
    return VerifyItem(
        "prop-3.7", violations == 0, f"spaces={len(spaces)} pairs={pairs} violations={violations}"
    )


def item_thm_3_9(spaces) -> VerifyItem:
    def check(top, f):
        if is_in_class(top, f, "beta-open") and is_in_class(top, f, "semi-closed"):
            return is_in_class(top, f, "semi-open")
        return True

    return _sweep("thm-3.9", spaces, check)


def item_cor_3_10(spaces) -> VerifyItem:
    def check(top, f):
        if is_in_class(top, f, "beta-closed") and is_in_class(top, f, "semi-open"):
            return is_in_class(top, f, "semi-closed")
        return True

    return _sweep("cor-3.10", spaces, check)


def item_prop_3_11(spaces) -> VerifyItem:
    """On indiscrete spaces only: every beta-open set is pre-open."""
    indiscrete_spaces = [
        indiscrete(make_context(nx, ne)) for nx in (1, 2, 3) for ne in (1, 2)
    ]
    indiscrete_spaces += [top for top in spaces if len(top.members) == 2]

    def check(top, f):
        if is_in_class(top, f, "beta-open"):
            return is_in_class(top, f, "pre-open")
        return True

    item = _sweep("prop-3.11", indiscrete_spaces, check)
    return VerifyItem(item.name, item.passed, item.detail + " (indiscrete only)")


def item_thm_3_12(spaces) -> VerifyItem:
    def check(top, f):
        return check_beta_closed_characterization(top, f) == is_in_class(
            top, f, "beta-closed"
        )

    return _sweep("thm-3.12", spaces, check)


def item_thm_3_13(spaces) -> VerifyItem:
    def check(top, f):
        if is_in_class(top, f, "beta-open") and is_in_class(top, f, "alpha-closed"):
            equality = f == top.closure(top.interior(top.closure(f)))
            return is_in_class(top, f, "closed") and equality
        return True

    return _sweep("thm-3.13", spaces, check)


def item_cor_3_14(spaces) -> VerifyItem:
    def check(top, f):
        if is_in_class(top, f, "beta-closed") and is_in_class(top, f, "alpha-open"):
            return is_in_class(top, f, "open")
        return True

    return _sweep("cor-3.14", spaces, check)


def item_thm_4_5(instances) -> VerifyItem:
    disagreements = 0
    for mapping, tau_x, tau_y in instances:
        verdicts = {v: thm45_variant(mapping, tau_x, tau_y, v) for v in "i ii iii iv v".split()}
        if len(set(verdicts.values())) != 1:
            disagreements += 1
    return VerifyItem(
        "thm-4.5-equivalence",
        disagreements == 0,
        f"instances={len(instances)} disagreements={disagreements}",
    )


def item_group_suite() -> VerifyItem:
    checks: list[tuple[bool, str]] = []
    for name, top in corpus_spaces():
        if top.context.n_elements > 4:
            continue
        soft = build_collection(top, "soft-homeo")
        beta = build_collection(top, "beta-homeo")
        irresolute = build_collection(top, "beta-irresolute-homeo")
        checks.append(
            (
                set(soft.elements) <= set(irresolute.elements) <= set(beta.elements),
                f"{name}: inclusion chain broken",
            )
        )
        try:
            group = build_group(irresolute)
        except GroupLawError as err:
            checks.append((False, f"{name}: group axioms failed ({err})"))
            continue
        soft_group = build_group(soft)
        checks.append((bool(is_subgroup(soft_group, group)), f"{name}: S-h not a subgroup"))
        identity_map = SoftMapping.identity(top.context)
        iso = conjugation_iso(identity_map, group, group)
        checks.append(
            (
                iso.mapping == tuple(range(group.order)) and iso.is_isomorphism,
                f"{name}: identity conjugation is not the identity isomorphism",
            )
        )
        for p in group.elements:
            mapping = SoftMapping(top.context, top.context, p)
            conj = conjugation_iso(mapping, group, group)
            if not conj.is_isomorphism:
                checks.append((False, f"{name}: conjugation by {p} not an isomorphism"))

    order6 = build_group(
        build_collection(indiscrete(make_context(3, 2)), "beta-irresolute-homeo")
    )
    checks.append((order6.order == 6, "indiscrete 3-point group should have order 6"))
    return _item("group-suite", checks)


def item_oracle_equivalence() -> VerifyItem:
    checks: list[tuple[bool, str]] = []
    for name, top in corpus_spaces():
        scan_ok = dual_ok = True
        for f in enumerate_all_soft_sets(top.context):
            if top.interior_scan(f) != top.interior_dual(f):
                scan_ok = False
            if top.closure_scan(f) != top.closure_dual(f):
                dual_ok = False
        checks.append((scan_ok, f"{name}: interior scan/duality disagree"))
        checks.append((dual_ok, f"{name}: closure scan/duality disagree"))
        for tag in ("beta-open", "beta-closed", "pre-open", "semi-open", "alpha-open"):
            family = enumerate_class(top, tag)
            naive = tuple(
                f
                for f in enumerate_all_soft_sets(top.context)
                if tag in classify(top, f)
            )
            checks.append((family == naive, f"{name}: {tag} family mismatch"))
    return _item("oracle-equivalence", checks)


def verify_paper(
    seed: int = DEFAULT_VERIFY_SEED,
    hierarchy_count: int = HIERARCHY_SPACE_COUNT,
    map_count: int = MAP_INSTANCE_COUNT,
) -> VerifyReport:
    """Run the whole golden corpus; deterministic for a given seed."""
    spaces = hierarchy_corpus(seed, hierarchy_count)
    instances = map_corpus(seed, map_count)
    items = (
        item_example_3_3(),
        item_example_3_6(),
        item_example_3_8(),
        item_example_4_3(),
        item_example_4_4(),
        item_example_4_7(),
        item_hierarchy(spaces),
        item_prop_3_5(spaces),
        item_prop_3_7(spaces),
        item_thm_3_9(spaces),
        item_cor_3_10(spaces),
        item_prop_3_11(spaces),
        item_thm_3_12(spaces),
        item_thm_3_13(spaces),
        item_cor_3_14(spaces),
        item_thm_4_5(instances),
        item_group_suite(),
        item_oracle_equivalence(),
    )
    return VerifyReport(items)
