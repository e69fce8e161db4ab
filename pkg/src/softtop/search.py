"""Seeded generation of small soft spaces and counterexample search.

Spaces are generated by sampling a handful of random soft sets and closing
them under pairwise union and intersection (a fixpoint on a finite lattice,
so always a valid topology). Witness search then scans all soft sets in
canonical order, so the reported witness for a given seed is stable across
runs and machines.

Randomness comes from SplitMix64, a well-known 64-bit generator chosen for
being tiny and portable: state advances by the golden-gamma constant
0x9E3779B97F4A7C15 and the output is the xor-shift-multiply finalizer with
constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. The test suite pins
its first outputs for seeds 0 and 42 as portability vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .classes import enumerate_class, is_in_class
from .core import SoftContext, SoftSet, enumerate_all_soft_sets
from .topology import SoftTopology, validate_topology

_MASK64 = (1 << 64) - 1
MAX_GENERATORS = 4


class SplitMix64:
    """SplitMix64 pseudo-random generator over 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-enough draw in [0, n) for the tiny n used here."""
        return self.next() % n

    def chance(self, p: float) -> bool:
        """True with probability p (p is clamped to [0, 1])."""
        if p <= 0.0:
            return False
        if p >= 1.0:
            return True
        return self.next() < int(p * 2.0**64)


@dataclass(frozen=True)
class SearchSpec:
    """Parameters for a seeded randomized search."""

    universe_size: int
    param_count: int
    seed: int
    max_trials: int = 100
    density: float = 0.5

    def __post_init__(self):
        if self.universe_size < 1 or self.param_count < 1:
            raise ValueError("universe and parameter sizes must be positive")
        if self.universe_size * self.param_count > 16:
            raise ValueError("universe_size * param_count must stay within the cap of 16")
        if self.max_trials < 1:
            raise ValueError("max_trials must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")


def make_context(universe_size: int, param_count: int) -> SoftContext:
    """Context with synthetic labels x1..xn / e1..em."""
    return SoftContext(
        tuple(f"x{i + 1}" for i in range(universe_size)),
        tuple(f"e{j + 1}" for j in range(param_count)),
    )


def _close_family(masks: set[int], full: int) -> list[int]:
    masks = set(masks) | {0, full}
    changed = True
    while changed:
        changed = False
        items = sorted(masks)
        for i, a in enumerate(items):
            for b in items[i + 1 :]:
                for m in (a | b, a & b):
                    if m not in masks:
                        masks.add(m)
                        changed = True
    return sorted(masks)


def random_space_from(
    rng: SplitMix64, ctx: SoftContext, density: float
) -> SoftTopology:
    """One random topology over ctx: random generators closed to a fixpoint."""
    k = 1 + rng.below(MAX_GENERATORS)
    full = (1 << ctx.cells) - 1
    generators = set()
    for _ in range(k):
        mask = 0
        for cell in range(ctx.cells):
            if rng.chance(density):
                mask |= 1 << cell
        generators.add(mask)
    members = [SoftSet(ctx, m) for m in _close_family(generators, full)]
    return validate_topology(ctx, members)


def random_space(spec: SearchSpec) -> tuple[SoftContext, SoftTopology]:
    """The deterministic space generated directly from the spec's seed."""
    ctx = make_context(spec.universe_size, spec.param_count)
    rng = SplitMix64(spec.seed)
    return ctx, random_space_from(rng, ctx, spec.density)


def find_separating_set(
    top: SoftTopology, class_a: str, class_b: str
) -> Optional[SoftSet]:
    """Canonically-first soft set in class_a but not class_b, if any."""
    top.context.check_enumeration_cap("separating-set scan")
    for f in enumerate_all_soft_sets(top.context):
        if is_in_class(top, f, class_a) and not is_in_class(top, f, class_b):
            return f
    return None


def find_nonclosed_pair(
    top: SoftTopology, tag: str, op: str
) -> Optional[tuple[SoftSet, SoftSet]]:
    """First pair (canonical order) in the class whose union/intersection leaves it."""
    if op not in ("union", "intersection"):
        raise ValueError(f"unknown operation {op!r}")
    family = enumerate_class(top, tag)
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            combined = a | b if op == "union" else a & b
            if not is_in_class(top, combined, tag):
                return (a, b)
    return None


@dataclass(frozen=True)
class Witness:
    """A found counterexample, replayable from its seed and trial index."""

    spec: SearchSpec
    trial_index: int
    trial_seed: int
    topology: SoftTopology
    subject: SoftSet
    claim: tuple[str, ...]  # e.g. ("separates", "pre-open", "alpha-open")

    def verify(self) -> bool:
        """Re-run the claim check against the stored subject and space."""
        kind = self.claim[0]
        if kind == "separates":
            _, class_a, class_b = self.claim
            return is_in_class(self.topology, self.subject, class_a) and not is_in_class(
                self.topology, self.subject, class_b
            )
        raise ValueError(f"unknown claim {self.claim!r}")


@dataclass(frozen=True)
class ExhaustedReport:
    """No witness was found within the trial budget."""

    spec: SearchSpec
    trials: int


def search_separation(
    spec: SearchSpec, class_a: str, class_b: str
) -> Union[Witness, ExhaustedReport]:
    """Random spaces from the spec's seed until one separates the classes.

    Trial i uses the i-th output of a SplitMix64 stream seeded with the
    spec seed, so results are reproducible and individual trials could be
    replayed (or distributed) independently; the witness reported is always
    the one with the lowest trial index.
    """
    master = SplitMix64(spec.seed)
    ctx = make_context(spec.universe_size, spec.param_count)
    for trial in range(spec.max_trials):
        trial_seed = master.next()
        top = random_space_from(SplitMix64(trial_seed), ctx, spec.density)
        subject = find_separating_set(top, class_a, class_b)
        if subject is not None:
            return Witness(
                spec=spec,
                trial_index=trial,
                trial_seed=trial_seed,
                topology=top,
                subject=subject,
                claim=("separates", class_a, class_b),
            )
    return ExhaustedReport(spec=spec, trials=spec.max_trials)
