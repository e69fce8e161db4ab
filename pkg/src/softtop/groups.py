"""Self-bijections of a soft space, their homeomorphism kinds, and the
group they form under composition.

Three kinds are tracked for a bijection p of the universe: soft
homeomorphism (p and its inverse pull open sets back to open sets), beta
homeomorphism (preimages of open sets are beta-open, both directions) and
beta-irresolute homeomorphism (preimages of beta-open sets are beta-open,
both directions). Only the last collection is guaranteed to be a group;
the beta-homeomorphisms can fail closure under composition, and
``build_group`` then reports the witness pair.

The group operation is op(a, b) = b after a, i.e. the Cayley cell
``cayley[i][j]`` holds the index of "apply element i first, then j". All
four group axioms are verified explicitly on every built table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .classes import enumerate_class, is_in_class
from .core import CapExceededError, SoftTopError
from .maps import SoftMapping
from .topology import SoftTopology

PERMUTATION_BOUND = 6

HOMEO_KINDS = ("soft-homeo", "beta-homeo", "beta-irresolute-homeo")

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def chain_perms(first: Perm, then: Perm) -> Perm:
    """The permutation that applies ``first``, then ``then``."""
    return tuple(then[x] for x in first)


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


class GroupLawError(SoftTopError):
    """A collection failed one of the group axioms; carries the witness."""

    def __init__(self, law: str, detail: str, witness=None):
        super().__init__(f"{law} failure: {detail}")
        self.law = law
        self.witness = witness


class ConjugationEscapeError(SoftTopError):
    """Conjugation left the target collection (contradicts the corollary)."""


def _self_map(top: SoftTopology, p: Perm) -> SoftMapping:
    return SoftMapping(top.context, top.context, p)


def _preimages_in(top: SoftTopology, p: Perm, sets, cls: str) -> bool:
    m = _self_map(top, p)
    return all(is_in_class(top, m.preimage(g), cls) for g in sets)


def classify_bijection(p: Perm, top: SoftTopology) -> frozenset[str]:
    """Which homeomorphism kinds hold for p and its inverse on top."""
    p = tuple(p)
    n = top.context.n_elements
    if sorted(p) != list(range(n)):
        raise ValueError(f"{p!r} is not a permutation of {n} elements")
    inv = invert_perm(p)
    tags = set()
    if _preimages_in(top, p, top.members, "open") and _preimages_in(
        top, inv, top.members, "open"
    ):
        tags.add("soft-homeo")
    if _preimages_in(top, p, top.members, "beta-open") and _preimages_in(
        top, inv, top.members, "beta-open"
    ):
        tags.add("beta-homeo")
    beta = enumerate_class(top, "beta-open")
    if _preimages_in(top, p, beta, "beta-open") and _preimages_in(
        top, inv, beta, "beta-open"
    ):
        tags.add("beta-irresolute-homeo")
    return frozenset(tags)


@dataclass(frozen=True)
class HomeoCollection:
    """All universe permutations of one kind, in lexicographic order."""

    topology: SoftTopology
    kind: str
    elements: tuple[Perm, ...]

    def __post_init__(self):
        n = self.topology.context.n_elements
        if identity_perm(n) not in self.elements:
            raise ValueError("collection must contain the identity permutation")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return tuple(p) in self.elements


def build_collection(top: SoftTopology, kind: str) -> HomeoCollection:
    """Filter all universe permutations by kind (universe bound applies)."""
    if kind not in HOMEO_KINDS:
        raise ValueError(f"unknown homeomorphism kind {kind!r}")
    n = top.context.n_elements
    if n > PERMUTATION_BOUND:
        raise CapExceededError(
            f"permutation enumeration over {n} elements exceeds the bound "
            f"of {PERMUTATION_BOUND}"
        )
    elements = tuple(
        p for p in permutations(range(n)) if kind in classify_bijection(p, top)
    )
    return HomeoCollection(top, kind, elements)


@dataclass(frozen=True)
class GroupTable:
    """A verified finite group of permutations under op(a, b) = b after a."""

    space: SoftTopology
    elements: tuple[Perm, ...]
    cayley: tuple[tuple[int, ...], ...]
    identity_index: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def op(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def index_of(self, p: Perm) -> int:
        return self.elements.index(tuple(p))


def build_group(collection: HomeoCollection) -> GroupTable:
    """Build and verify the composition table of a homeomorphism collection.

    Raises :class:`GroupLawError` (with a witness) when the collection is
    not closed under composition or misses an inverse; the paper guarantees
    success for the soft and beta-irresolute kinds only.
    """
    elements = collection.elements
    index = {p: i for i, p in enumerate(elements)}
    n = collection.topology.context.n_elements

    cayley = []
    for a in elements:
        row = []
        for b in elements:
            composed = chain_perms(a, b)
            got = index.get(composed)
            if got is None:
                raise GroupLawError(
                    "closure",
                    f"composition of {a} then {b} gives {composed}, "
                    "which is outside the collection",
                    witness=(a, b, composed),
                )
            row.append(got)
        cayley.append(tuple(row))
    cayley = tuple(cayley)

    identity_index = index[identity_perm(n)]
    inverse = []
    for i, p in enumerate(elements):
        j = index.get(invert_perm(p))
        if j is None or cayley[i][j] != identity_index or cayley[j][i] != identity_index:
            raise GroupLawError(
                "inverse", f"element {p} has no two-sided inverse", witness=p
            )
        inverse.append(j)

    table = GroupTable(
        collection.topology, elements, cayley, identity_index, tuple(inverse)
    )
    _verify_axioms(table)
    return table


def _verify_axioms(g: GroupTable) -> None:
    order = g.order
    for row in g.cayley:
        for cell in row:
            if not 0 <= cell < order:
                raise GroupLawError("closure", f"table cell {cell} out of range")
    for i in range(order):
        for j in range(order):
            for k in range(order):
                if g.cayley[g.cayley[i][j]][k] != g.cayley[i][g.cayley[j][k]]:
                    raise GroupLawError(
                        "associativity", f"associativity fails at ({i},{j},{k})",
                        witness=(i, j, k),
                    )
    e = g.identity_index
    for i in range(order):
        if g.cayley[e][i] != i or g.cayley[i][e] != i:
            raise GroupLawError("identity", f"identity law fails at {i}", witness=i)
    for i in range(order):
        j = g.inverse[i]
        if g.cayley[i][j] != e or g.cayley[j][i] != e:
            raise GroupLawError("inverse", f"inverse law fails at {i}", witness=i)


@dataclass(frozen=True)
class SubgroupCheck:
    """Outcome of a subgroup test; falsy when it failed, with the reason."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def _elements_of(h) -> tuple[Perm, ...]:
    if isinstance(h, (GroupTable, HomeoCollection)):
        return h.elements
    return tuple(tuple(p) for p in h)


def is_subgroup(h, g: GroupTable) -> SubgroupCheck:
    """Whether h's elements form a subgroup of the verified group g.

    Checks containment, closure under g's operation and the shared
    identity; h may be a GroupTable, a HomeoCollection or a plain iterable
    of permutations.
    """
    elements = _elements_of(h)
    g_index = {p: i for i, p in enumerate(g.elements)}
    sub = set()
    for p in elements:
        if p not in g_index:
            return SubgroupCheck(False, "element not in the group", (p,))
        sub.add(g_index[p])
    if g.identity_index not in sub:
        return SubgroupCheck(False, "identity missing")
    for i in sub:
        for j in sub:
            if g.cayley[i][j] not in sub:
                return SubgroupCheck(
                    False,
                    "not closed under the group operation",
                    (g.elements[i], g.elements[j], g.elements[g.cayley[i][j]]),
                )
    return SubgroupCheck(True)


@dataclass(frozen=True)
class ConjugationIso:
    """The conjugation map between two homeomorphism groups, with its checks."""

    mapping: tuple[int, ...]  # index into source elements -> index into target
    bijective: bool
    homomorphism: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.bijective and self.homomorphism


def _beta_irresolute_between(
    f: SoftMapping, tau_x: SoftTopology, tau_y: SoftTopology
) -> bool:
    return all(
        is_in_class(tau_x, f.preimage(g), "beta-open")
        for g in enumerate_class(tau_y, "beta-open")
    )


def conjugation_iso(
    f: SoftMapping, group_x: GroupTable, group_y: GroupTable
) -> ConjugationIso:
    """The map a -> f after a after f-inverse, from group_x into group_y.

    f must be a beta-irresolute bijection with beta-irresolute inverse
    between the two groups' spaces. If some conjugate lands outside
    group_y, :class:`ConjugationEscapeError` is raised with the witness;
    the theory says this cannot happen, so reaching it means a kernel bug.
    """
    tau_x, tau_y = group_x.space, group_y.space
    if f.domain != tau_x.context or f.codomain != tau_y.context:
        raise ValueError("mapping does not connect the two groups' spaces")
    if not f.is_bijection():
        raise ValueError("conjugation needs a bijection")
    f_inv = f.inverse()
    if not (
        _beta_irresolute_between(f, tau_x, tau_y)
        and _beta_irresolute_between(f_inv, tau_y, tau_x)
    ):
        raise ValueError("mapping must be beta-irresolute in both directions")

    pm, inv_pm = f.point_map, f_inv.point_map
    y_index = {p: i for i, p in enumerate(group_y.elements)}
    mapping = []
    for a in group_x.elements:
        conjugate = tuple(pm[a[inv_pm[y]]] for y in range(len(inv_pm)))
        got = y_index.get(conjugate)
        if got is None:
            raise ConjugationEscapeError(
                f"conjugate {conjugate} of {a} is outside the target group"
            )
        mapping.append(got)
    mapping = tuple(mapping)

    bijective = (
        len(set(mapping)) == group_x.order and group_x.order == group_y.order
    )
    homomorphism = all(
        mapping[group_x.cayley[i][j]] == group_y.cayley[mapping[i]][mapping[j]]
        for i in range(group_x.order)
        for j in range(group_x.order)
    )
    return ConjugationIso(mapping, bijective, homomorphism)
