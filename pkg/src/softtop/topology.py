"""Validated soft topologies and the interior/closure operators.

A topology is a family of soft sets containing the null and absolute sets
and closed under pairwise unions and intersections (on a finite family,
pairwise union closure already gives closure under arbitrary unions).
Validation reports the first violating pair in canonical order instead of
just failing.

Interior and closure each have two routes: a member scan (union of open
subsets / intersection of closed supersets) and the complement-duality of
the other operator. The default ``interior``/``closure`` use the scan and
the duality respectively, memoized per topology; the ``*_scan`` and
``*_dual`` variants are uncached and exist so the two routes can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    ContextMismatchError,
    SoftContext,
    SoftSet,
    SoftTopError,
    absolute_set,
    null_set,
)


@dataclass(frozen=True)
class TopologyViolation:
    """First closure failure found while validating a candidate family."""

    operation: str  # "union" or "intersection"
    left: SoftSet
    right: SoftSet
    missing: SoftSet

    def describe(self) -> str:
        return (
            f"{self.operation} of {self.left.notation()} and "
            f"{self.right.notation()} gives {self.missing.notation()}, "
            "which is not in the family"
        )


class InvalidTopologyError(SoftTopError):
    def __init__(self, violation: TopologyViolation):
        super().__init__(violation.describe())
        self.violation = violation


class _SoftFamily:
    """Canonicalized family of soft sets with its complement family."""

    def __init__(self, context: SoftContext, members: Sequence[SoftSet], notices=()):
        self.context = context
        masks = sorted({m.mask for m in members})
        self.members = tuple(SoftSet(context, m) for m in masks)
        full = (1 << context.cells) - 1
        self._member_masks = frozenset(masks)
        self._closed_masks = frozenset(m ^ full for m in masks)
        self.closed_members = tuple(
            SoftSet(context, m) for m in sorted(self._closed_masks)
        )
        self.notices = tuple(notices)
        self._full = full

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.context == other.context
            and self._member_masks == other._member_masks
        )

    def __hash__(self):
        return hash((type(self), self.context, self._member_masks))

    def __len__(self):
        return len(self.members)

    def _check(self, f: SoftSet) -> None:
        if f.context != self.context:
            raise ContextMismatchError("soft set belongs to a different context")

    def is_open(self, f: SoftSet) -> bool:
        self._check(f)
        return f.mask in self._member_masks

    def is_closed(self, f: SoftSet) -> bool:
        self._check(f)
        return f.mask in self._closed_masks


class SoftTopology(_SoftFamily):
    """A validated soft topology; construct via :func:`validate_topology`."""

    def __init__(self, context, members, notices=()):
        super().__init__(context, members, notices)
        self._interior_cache: dict[int, int] = {}
        self._closure_cache: dict[int, int] = {}
        self._family_cache: dict[str, tuple[SoftSet, ...]] = {}

    # --- operators ---

    def interior(self, f: SoftSet) -> SoftSet:
        """Largest open soft set contained in f (memoized member scan)."""
        self._check(f)
        got = self._interior_cache.get(f.mask)
        if got is None:
            got = self._interior_mask(f.mask)
            self._interior_cache[f.mask] = got
        return SoftSet(self.context, got)

    def closure(self, f: SoftSet) -> SoftSet:
        """Smallest closed soft set containing f (memoized complement duality)."""
        self._check(f)
        got = self._closure_cache.get(f.mask)
        if got is None:
            got = self._interior_mask(f.mask ^ self._full) ^ self._full
            self._closure_cache[f.mask] = got
        return SoftSet(self.context, got)

    def _interior_mask(self, mask: int) -> int:
        out = 0
        for m in self._member_masks:
            if m & ~mask == 0:
                out |= m
        return out

    # --- uncached reference routes for cross-checking ---

    def interior_scan(self, f: SoftSet) -> SoftSet:
        """Union of the open sets contained in f."""
        self._check(f)
        return SoftSet(self.context, self._interior_mask(f.mask))

    def closure_scan(self, f: SoftSet) -> SoftSet:
        """Intersection of the closed sets containing f."""
        self._check(f)
        out = self._full
        for m in self._closed_masks:
            if f.mask & ~m == 0:
                out &= m
        return SoftSet(self.context, out)

    def interior_dual(self, f: SoftSet) -> SoftSet:
        """Complement of the closure (by scan) of the complement."""
        self._check(f)
        return SoftSet(self.context, self.closure_scan(~f).mask ^ self._full)

    def closure_dual(self, f: SoftSet) -> SoftSet:
        """Complement of the interior (by scan) of the complement."""
        self._check(f)
        return SoftSet(self.context, self._interior_mask(f.mask ^ self._full) ^ self._full)


class SoftSupratopology(_SoftFamily):
    """A family closed under unions only; construct via :func:`validate_supratopology`."""


def _prepare(ctx: SoftContext, candidates: Iterable[SoftSet]):
    members = list(candidates)
    for f in members:
        if f.context != ctx:
            raise ContextMismatchError("candidate belongs to a different context")
    masks = {f.mask for f in members}
    notices = []
    if 0 not in masks:
        masks.add(0)
        notices.append("null set was absent and has been added")
    full = (1 << ctx.cells) - 1
    if full not in masks:
        masks.add(full)
        notices.append("absolute set was absent and has been added")
    return sorted(masks), notices


def validate_topology(ctx: SoftContext, candidates: Iterable[SoftSet]) -> SoftTopology:
    """Check the topology axioms; raise :class:`InvalidTopologyError` on failure.

    The null and absolute sets are inserted automatically when absent (a
    notice is recorded on the result). Pairwise union and intersection
    closure is checked over pairs in canonical order and the first failure
    is reported.
    """
    masks, notices = _prepare(ctx, candidates)
    mask_set = set(masks)
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a | b not in mask_set:
                raise InvalidTopologyError(
                    TopologyViolation(
                        "union", SoftSet(ctx, a), SoftSet(ctx, b), SoftSet(ctx, a | b)
                    )
                )
            if a & b not in mask_set:
                raise InvalidTopologyError(
                    TopologyViolation(
                        "intersection",
                        SoftSet(ctx, a),
                        SoftSet(ctx, b),
                        SoftSet(ctx, a & b),
                    )
                )
    return SoftTopology(ctx, [SoftSet(ctx, m) for m in masks], notices)


def validate_supratopology(
    ctx: SoftContext, candidates: Iterable[SoftSet]
) -> SoftSupratopology:
    """Like :func:`validate_topology` but checking union closure only."""
    masks, notices = _prepare(ctx, candidates)
    mask_set = set(masks)
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a | b not in mask_set:
                raise InvalidTopologyError(
                    TopologyViolation(
                        "union", SoftSet(ctx, a), SoftSet(ctx, b), SoftSet(ctx, a | b)
                    )
                )
    return SoftSupratopology(ctx, [SoftSet(ctx, m) for m in masks], notices)


def indiscrete(ctx: SoftContext) -> SoftTopology:
    """The two-member topology {null, absolute}."""
    return SoftTopology(ctx, [null_set(ctx), absolute_set(ctx)])


def discrete(ctx: SoftContext) -> SoftTopology:
    """The topology of all soft sets over the context (cap applies)."""
    ctx.check_enumeration_cap("discrete topology")
    members = [SoftSet(ctx, m) for m in range(1 << ctx.cells)]
    return SoftTopology(ctx, members)


# --- spec operation surface ---


def is_open(top: SoftTopology, f: SoftSet) -> bool:
    return top.is_open(f)


def is_closed(top: SoftTopology, f: SoftSet) -> bool:
    return top.is_closed(f)


def interior(top: SoftTopology, f: SoftSet) -> SoftSet:
    return top.interior(f)


def closure(top: SoftTopology, f: SoftSet) -> SoftSet:
    return top.closure(f)
