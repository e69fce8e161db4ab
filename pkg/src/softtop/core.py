"""Soft sets over a fixed finite context, and their Boolean algebra.

A context fixes an ordered universe of element labels and an ordered list
of parameter labels. A soft set assigns one subset of the universe to every
parameter. Internally a soft set is a single bitmask over the
``|params| * |universe|`` membership grid, read parameter-major and
element-minor with the first cell as the most significant bit, so plain
integer order on masks is the canonical order used everywhere (enumeration,
reports, witness selection).

All values are immutable and every operation is a pure function, so
anything here can be shared freely across threads or tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

ENUMERATION_CAP_CELLS = 16


class SoftTopError(Exception):
    """Base class for softtop errors."""


class ContextMismatchError(SoftTopError):
    """Two values from different contexts were combined."""


class CapExceededError(SoftTopError):
    """An exhaustive enumeration was requested beyond the supported size."""


@dataclass(frozen=True)
class SoftContext:
    """The fixed universe and parameter list that scope all other values."""

    universe: tuple[str, ...]
    params: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "params", tuple(self.params))
        if not self.universe:
            raise ValueError("universe must be nonempty")
        if not self.params:
            raise ValueError("parameter list must be nonempty")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe labels must be unique")
        if len(set(self.params)) != len(self.params):
            raise ValueError("parameter labels must be unique")

    @property
    def n_elements(self) -> int:
        return len(self.universe)

    @property
    def n_params(self) -> int:
        return len(self.params)

    @property
    def cells(self) -> int:
        return len(self.universe) * len(self.params)

    def bit(self, param: int, element: int) -> int:
        """Bit position of grid cell (param, element); cell 0 is the MSB."""
        return self.cells - 1 - (param * self.n_elements + element)

    def element_index(self, label: str) -> int:
        try:
            return self.universe.index(label)
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    def param_index(self, label: str) -> int:
        try:
            return self.params.index(label)
        except ValueError:
            raise KeyError(f"unknown parameter label {label!r}") from None

    def check_enumeration_cap(self, what: str = "enumeration") -> None:
        if self.cells > ENUMERATION_CAP_CELLS:
            raise CapExceededError(
                f"{what} needs {self.cells} grid cells; cap is {ENUMERATION_CAP_CELLS}"
            )

    def soft_set(self, *families: Iterable[str]) -> SoftSet:
        """Build a soft set from per-parameter element labels, in parameter order."""
        if len(families) != self.n_params:
            raise ValueError(
                f"expected {self.n_params} families, got {len(families)}"
            )
        mask = 0
        for e, fam in enumerate(families):
            for label in fam:
                mask |= 1 << self.bit(e, self.element_index(label))
        return SoftSet(self, mask)

    def from_indices(self, families: Iterable[Iterable[int]]) -> SoftSet:
        """Build a soft set from per-parameter element indices."""
        mask = 0
        for e, fam in enumerate(families):
            for x in fam:
                if not 0 <= x < self.n_elements:
                    raise IndexError(f"element index {x} out of range")
                mask |= 1 << self.bit(e, x)
        return SoftSet(self, mask)


@dataclass(frozen=True)
class SoftSet:
    """One subset of the universe per parameter, encoded as a grid bitmask."""

    context: SoftContext
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.context.cells):
            raise ValueError(f"mask {self.mask} out of range for context")

    # --- per-parameter views ---

    def family(self, param: int) -> frozenset[int]:
        """Element indices present at the given parameter."""
        ctx = self.context
        return frozenset(
            x for x in range(ctx.n_elements) if self.mask >> ctx.bit(param, x) & 1
        )

    def families(self) -> tuple[frozenset[int], ...]:
        return tuple(self.family(e) for e in range(self.context.n_params))

    def labels(self, param: int) -> tuple[str, ...]:
        """Element labels present at the given parameter, in universe order."""
        ctx = self.context
        return tuple(
            lab
            for x, lab in enumerate(ctx.universe)
            if self.mask >> ctx.bit(param, x) & 1
        )

    def has(self, param: int, element: int) -> bool:
        return bool(self.mask >> self.context.bit(param, element) & 1)

    # --- algebra ---

    def _check(self, other: SoftSet) -> None:
        if self.context != other.context:
            raise ContextMismatchError("soft sets belong to different contexts")

    def __or__(self, other: SoftSet) -> SoftSet:
        self._check(other)
        return SoftSet(self.context, self.mask | other.mask)

    def __and__(self, other: SoftSet) -> SoftSet:
        self._check(other)
        return SoftSet(self.context, self.mask & other.mask)

    def __sub__(self, other: SoftSet) -> SoftSet:
        self._check(other)
        return SoftSet(self.context, self.mask & ~other.mask)

    def complement(self) -> SoftSet:
        full = (1 << self.context.cells) - 1
        return SoftSet(self.context, self.mask ^ full)

    __invert__ = complement

    def issubset(self, other: SoftSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def is_null(self) -> bool:
        return self.mask == 0

    def is_absolute(self) -> bool:
        return self.mask == (1 << self.context.cells) - 1

    def notation(self) -> str:
        """Paper-style literal, e.g. ``({x1,x2},{x1})``."""
        blocks = (
            "{" + ",".join(self.labels(e)) + "}"
            for e in range(self.context.n_params)
        )
        return "(" + ",".join(blocks) + ")"

    def __repr__(self):
        return f"SoftSet{self.notation()}"


class SoftPoint(NamedTuple):
    """The pair (element index, parameter index) naming a singleton cell."""

    element: int
    param: int


# --- spec operation surface ---


def null_set(ctx: SoftContext) -> SoftSet:
    """The soft set that is empty at every parameter."""
    return SoftSet(ctx, 0)


def absolute_set(ctx: SoftContext) -> SoftSet:
    """The soft set that is the whole universe at every parameter."""
    return SoftSet(ctx, (1 << ctx.cells) - 1)


def union(f: SoftSet, g: SoftSet) -> SoftSet:
    return f | g


def intersection(f: SoftSet, g: SoftSet) -> SoftSet:
    return f & g


def complement(f: SoftSet) -> SoftSet:
    return f.complement()


def difference(f: SoftSet, g: SoftSet) -> SoftSet:
    return f - g


def is_subset(f: SoftSet, g: SoftSet) -> bool:
    return f.issubset(g)


def soft_point(ctx: SoftContext, element: int, param: int) -> SoftSet:
    """Singleton {element} at the given parameter, empty elsewhere."""
    if not 0 <= element < ctx.n_elements:
        raise IndexError(f"element index {element} out of range")
    if not 0 <= param < ctx.n_params:
        raise IndexError(f"parameter index {param} out of range")
    return SoftSet(ctx, 1 << ctx.bit(param, element))


def point_belongs(element: int, f: SoftSet) -> bool:
    """Membership at EVERY parameter (the all-parameter reading)."""
    ctx = f.context
    if not 0 <= element < ctx.n_elements:
        raise IndexError(f"element index {element} out of range")
    return all(f.has(e, element) for e in range(ctx.n_params))


def soft_point_in(p: SoftPoint, f: SoftSet) -> bool:
    """Per-parameter containment: the element is present at the point's parameter."""
    ctx = f.context
    if not (0 <= p.element < ctx.n_elements and 0 <= p.param < ctx.n_params):
        raise IndexError(f"soft point {p} out of range")
    return f.has(p.param, p.element)


def enumerate_all_soft_sets(ctx: SoftContext) -> Iterator[SoftSet]:
    """All soft sets over the context in canonical order (null first, absolute last)."""
    ctx.check_enumeration_cap("soft set enumeration")
    for mask in range(1 << ctx.cells):
        yield SoftSet(ctx, mask)
