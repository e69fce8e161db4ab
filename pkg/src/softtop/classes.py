"""The generalized open/closed set hierarchy over a soft topology.

Ten classes: plain open/closed plus the semi, pre, alpha and beta variants.
Each open class is one inequality between a set and a composition of
interior/closure; each closed class is the complement-dual inequality.

    semi-open   F <= cl(int F)        semi-closed   int(cl F) <= F
    pre-open    F <= int(cl F)        pre-closed    cl(int F) <= F
    alpha-open  F <= int(cl(int F))   alpha-closed  cl(int(cl F)) <= F
    beta-open   F <= cl(int(cl F))    beta-closed   int(cl(int F)) <= F
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import SoftSet, enumerate_all_soft_sets
from .topology import SoftTopology

OPEN_CLASSES = ("open", "alpha-open", "semi-open", "pre-open", "beta-open")
CLOSED_CLASSES = ("closed", "alpha-closed", "semi-closed", "pre-closed", "beta-closed")
ALL_CLASSES = OPEN_CLASSES + CLOSED_CLASSES

DUAL_CLASS = dict(zip(OPEN_CLASSES, CLOSED_CLASSES)) | dict(
    zip(CLOSED_CLASSES, OPEN_CLASSES)
)

# The implication arrows between the five open classes that hold in every
# space: open -> alpha -> {semi, pre} -> beta (and alpha -> beta).
HIERARCHY_IMPLICATIONS = (
    ("open", "alpha-open"),
    ("alpha-open", "semi-open"),
    ("alpha-open", "pre-open"),
    ("semi-open", "beta-open"),
    ("pre-open", "beta-open"),
    ("alpha-open", "beta-open"),
)


def is_in_class(top: SoftTopology, f: SoftSet, tag: str) -> bool:
    """Whether f satisfies the given class's defining condition in top."""
    if tag == "open":
        return top.is_open(f)
    if tag == "closed":
        return top.is_closed(f)
    i, c = top.interior, top.closure
    if tag == "semi-open":
        return f <= c(i(f))
    if tag == "semi-closed":
        return i(c(f)) <= f
    if tag == "pre-open":
        return f <= i(c(f))
    if tag == "pre-closed":
        return c(i(f)) <= f
    if tag == "alpha-open":
        return f <= i(c(i(f)))
    if tag == "alpha-closed":
        return c(i(c(f))) <= f
    if tag == "beta-open":
        return f <= c(i(c(f)))
    if tag == "beta-closed":
        return i(c(i(f))) <= f
    raise ValueError(f"unknown set class {tag!r}")


def classify(top: SoftTopology, f: SoftSet) -> frozenset[str]:
    """The exact set of class tags f satisfies in top."""
    return frozenset(tag for tag in ALL_CLASSES if is_in_class(top, f, tag))


def enumerate_class(top: SoftTopology, tag: str) -> tuple[SoftSet, ...]:
    """All soft sets of the class, in canonical order (memoized per topology)."""
    if tag not in ALL_CLASSES:
        raise ValueError(f"unknown set class {tag!r}")
    cached = top._family_cache.get(tag)
    if cached is None:
        top.context.check_enumeration_cap(f"enumerating the {tag} family")
        cached = tuple(
            f for f in enumerate_all_soft_sets(top.context) if is_in_class(top, f, tag)
        )
        top._family_cache[tag] = cached
    return cached


def check_beta_closed_characterization(top: SoftTopology, f: SoftSet) -> bool:
    """The closure-difference inequality that holds exactly for beta-closed sets:

    cl(F) - F  <=  cl(complement(cl(int F))) - complement(cl F)
    """
    cl_f = top.closure(f)
    lhs = cl_f - f
    rhs = top.closure(~top.closure(top.interior(f))) - ~cl_f
    return lhs <= rhs


@dataclass
class HierarchyReport:
    """Pairwise inclusion matrix of the five open-class families.

    ``included[(a, b)]`` says whether every member of class a is in class b;
    when it is False, ``witnesses[(a, b)]`` is the canonically-first set in
    a but not in b.
    """

    topology: SoftTopology
    included: dict[tuple[str, str], bool] = field(default_factory=dict)
    witnesses: dict[tuple[str, str], SoftSet] = field(default_factory=dict)

    def holds(self, a: str, b: str) -> bool:
        return self.included[(a, b)]


def hierarchy_report(top: SoftTopology) -> HierarchyReport:
    """Inclusion matrix over the five open classes, with separating witnesses."""
    report = HierarchyReport(top)
    families = {tag: enumerate_class(top, tag) for tag in OPEN_CLASSES}
    mask_sets = {tag: {f.mask for f in fam} for tag, fam in families.items()}
    for a in OPEN_CLASSES:
        for b in OPEN_CLASSES:
            if a == b:
                continue
            missing = [f for f in families[a] if f.mask not in mask_sets[b]]
            report.included[(a, b)] = not missing
            if missing:
                report.witnesses[(a, b)] = missing[0]
    return report
