"""Point mappings between soft spaces and their continuity classes.

A mapping is a total function on universe elements, identity on parameters
(both contexts must carry the same parameter list). It acts on soft sets
pointwise: the image collects mapped elements per parameter, the preimage
collects elements whose image lies in the target block.

Continuity classes quantify the preimage condition over the open sets of
the codomain; beta-irresoluteness quantifies over the codomain's whole
beta-open family (enumeration cap applies). The five-way equivalence
battery for beta-continuity is exposed as ``thm45_variant``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import enumerate_class, is_in_class
from .core import (
    ContextMismatchError,
    SoftContext,
    SoftSet,
    enumerate_all_soft_sets,
)
from .topology import SoftTopology

CONTINUITY_CLASSES = (
    "continuous",
    "alpha-continuous",
    "semi-continuous",
    "pre-continuous",
    "beta-continuous",
    "beta-irresolute",
)

# Preimage condition of each continuity class, as a set class in the domain.
_PREIMAGE_CLASS = {
    "continuous": "open",
    "alpha-continuous": "alpha-open",
    "semi-continuous": "semi-open",
    "pre-continuous": "pre-open",
    "beta-continuous": "beta-open",
}

# Implications that hold for every mapping: continuous -> alpha -> {semi, pre}
# -> beta, and beta-irresolute -> beta-continuous.
CONTINUITY_IMPLICATIONS = (
    ("continuous", "alpha-continuous"),
    ("alpha-continuous", "semi-continuous"),
    ("alpha-continuous", "pre-continuous"),
    ("semi-continuous", "beta-continuous"),
    ("pre-continuous", "beta-continuous"),
    ("beta-irresolute", "beta-continuous"),
)


@dataclass(frozen=True)
class SoftMapping:
    """A total point function between two contexts sharing a parameter list."""

    domain: SoftContext
    codomain: SoftContext
    point_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "point_map", tuple(self.point_map))
        if self.domain.params != self.codomain.params:
            raise ContextMismatchError(
                "domain and codomain must carry the same parameter list"
            )
        if len(self.point_map) != self.domain.n_elements:
            raise ValueError("point map must be total over the domain universe")
        for y in self.point_map:
            if not 0 <= y < self.codomain.n_elements:
                raise ValueError(f"point map output index {y} out of range")

    @classmethod
    def identity(cls, ctx: SoftContext) -> SoftMapping:
        return cls(ctx, ctx, tuple(range(ctx.n_elements)))

    @classmethod
    def from_labels(
        cls, domain: SoftContext, codomain: SoftContext, assignment: dict[str, str]
    ) -> SoftMapping:
        """Build from an element-label assignment covering the whole domain."""
        point_map = []
        for label in domain.universe:
            if label not in assignment:
                raise ValueError(f"point map does not cover element {label!r}")
            point_map.append(codomain.element_index(assignment[label]))
        extra = set(assignment) - set(domain.universe)
        if extra:
            raise ValueError(f"point map mentions unknown elements {sorted(extra)}")
        return cls(domain, codomain, tuple(point_map))

    def __call__(self, x: int) -> int:
        return self.point_map[x]

    def image(self, f: SoftSet) -> SoftSet:
        """Pointwise forward image, parameter by parameter."""
        if f.context != self.domain:
            raise ContextMismatchError("image argument must live over the domain")
        cod = self.codomain
        mask = 0
        for e in range(cod.n_params):
            for x in range(self.domain.n_elements):
                if f.has(e, x):
                    mask |= 1 << cod.bit(e, self.point_map[x])
        return SoftSet(cod, mask)

    def preimage(self, g: SoftSet) -> SoftSet:
        """Pointwise inverse image, parameter by parameter."""
        if g.context != self.codomain:
            raise ContextMismatchError("preimage argument must live over the codomain")
        dom = self.domain
        mask = 0
        for e in range(dom.n_params):
            for x in range(dom.n_elements):
                if g.has(e, self.point_map[x]):
                    mask |= 1 << dom.bit(e, x)
        return SoftSet(dom, mask)

    def is_bijection(self) -> bool:
        return (
            self.domain.n_elements == self.codomain.n_elements
            and len(set(self.point_map)) == self.domain.n_elements
        )

    def inverse(self) -> SoftMapping:
        if not self.is_bijection():
            raise ValueError("only bijections have an inverse")
        inv = [0] * self.codomain.n_elements
        for x, y in enumerate(self.point_map):
            inv[y] = x
        return SoftMapping(self.codomain, self.domain, tuple(inv))


def compose(f: SoftMapping, g: SoftMapping) -> SoftMapping:
    """The mapping that applies f first, then g."""
    if f.codomain != g.domain:
        raise ContextMismatchError("compose needs f's codomain to equal g's domain")
    return SoftMapping(f.domain, g.codomain, tuple(g.point_map[y] for y in f.point_map))


def preimage(f: SoftMapping, g: SoftSet) -> SoftSet:
    return f.preimage(g)


def image(f: SoftMapping, s: SoftSet) -> SoftSet:
    return f.image(s)


def _check_spaces(f: SoftMapping, tau_x: SoftTopology, tau_y: SoftTopology) -> None:
    if tau_x.context != f.domain or tau_y.context != f.codomain:
        raise ContextMismatchError("topologies do not match the mapping's contexts")


def classify_map(
    f: SoftMapping, tau_x: SoftTopology, tau_y: SoftTopology
) -> frozenset[str]:
    """The exact set of continuity tags f satisfies between the two spaces."""
    _check_spaces(f, tau_x, tau_y)
    tags = set()
    for tag, cls in _PREIMAGE_CLASS.items():
        if all(is_in_class(tau_x, f.preimage(g), cls) for g in tau_y.members):
            tags.add(tag)
    if all(
        is_in_class(tau_x, f.preimage(g), "beta-open")
        for g in enumerate_class(tau_y, "beta-open")
    ):
        tags.add("beta-irresolute")
    return frozenset(tags)


THM45_VARIANTS = ("i", "ii", "iii", "iv", "v")


def thm45_variant(
    f: SoftMapping, tau_x: SoftTopology, tau_y: SoftTopology, variant: str
) -> bool:
    """One of the five equivalent characterizations of beta-continuity.

    i    the preimage of every open set is beta-open;
    ii   every soft point and every open neighborhood of its image admit a
         beta-open set around the point whose image fits the neighborhood;
    iii  the preimage of every closed set is beta-closed;
    iv   int(cl(int(preimage G))) <= preimage(cl G) for every soft set G
         over the codomain;
    v    image(int(cl(int F))) <= cl(image F) for every soft set F over the
         domain.
    """
    _check_spaces(f, tau_x, tau_y)
    if variant == "i":
        return all(
            is_in_class(tau_x, f.preimage(g), "beta-open") for g in tau_y.members
        )
    if variant == "ii":
        return _variant_ii(f, tau_x, tau_y)
    if variant == "iii":
        return all(
            is_in_class(tau_x, f.preimage(c), "beta-closed")
            for c in tau_y.closed_members
        )
    if variant == "iv":
        tau_y.context.check_enumeration_cap("variant iv")
        ix, cx = tau_x.interior, tau_x.closure
        for g in enumerate_all_soft_sets(tau_y.context):
            pre = f.preimage(g)
            if not ix(cx(ix(pre))) <= f.preimage(tau_y.closure(g)):
                return False
        return True
    if variant == "v":
        tau_x.context.check_enumeration_cap("variant v")
        ix, cx = tau_x.interior, tau_x.closure
        for s in enumerate_all_soft_sets(tau_x.context):
            if not f.image(ix(cx(ix(s)))) <= tau_y.closure(f.image(s)):
                return False
        return True
    raise ValueError(f"unknown variant {variant!r}")


def _variant_ii(f: SoftMapping, tau_x: SoftTopology, tau_y: SoftTopology) -> bool:
    # The point's image is a soft point too, so an open set contains it iff
    # the mapped element is present at the same parameter. The preimage of
    # the neighborhood is the proof's canonical witness; scan the whole
    # beta-open family only when it fails.
    dom = f.domain
    beta_family = None
    for e in range(dom.n_params):
        for x in range(dom.n_elements):
            fx = f.point_map[x]
            for g in tau_y.members:
                if not g.has(e, fx):
                    continue
                candidate = f.preimage(g)
                if candidate.has(e, x) and is_in_class(tau_x, candidate, "beta-open"):
                    continue  # f(candidate) <= g holds automatically
                if beta_family is None:
                    beta_family = enumerate_class(tau_x, "beta-open")
                for w in beta_family:
                    if w.has(e, x) and f.image(w) <= g:
                        break
                else:
                    return False
    return True
