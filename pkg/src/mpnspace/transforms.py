"""Symmetries of the rule space and equivalence-class reduction.

Two involutions act on the 81 rules:

* node swap (T12): relabel the two nodes, so the weights transpose as
  (wxx, wxy, wyx, wyy) -> (wyy, wyx, wxy, wxx); it conjugates the
  dynamics by the state relabeling (x, y) -> (y, x) and therefore
  preserves the dynamics class under every variant.
* cross-weight sign flip (G): negate both cross weights,
  (wxx, wxy, wyx, wyy) -> (wxx, -wxy, -wyx, wyy).  On {-1, +1} values
  with the hold-at-zero treatment (variant V1) this is a change of
  variables (negate one node's value), so it preserves V1 dynamics; on
  {0, 1} values no such change of variables exists, and reduction under
  it is refused outside V1.

The two transformations commute, so they generate a group of order at
most 4 and orbits have size 1, 2, or 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dynamics import Rule, Variant, all_rules, variant


def t12(rule: Rule) -> Rule:
    """Swap the two node labels."""
    return Rule(rule.wyy, rule.wyx, rule.wxy, rule.wxx)


def gauge(rule: Rule) -> Rule:
    """Flip the signs of both cross weights."""
    return Rule(rule.wxx, -rule.wxy, -rule.wyx, rule.wyy)


TRANSFORMATIONS = {"T12": t12, "G": gauge}


@dataclass(frozen=True)
class EquivalenceClass:
    """An orbit of rules under a set of generating transformations."""

    representative: int
    members: tuple[int, ...]
    generators: frozenset[str]

    def __post_init__(self):
        if self.representative != min(self.members):
            raise ValueError("representative must be the smallest member")


def _orbit(rule: Rule, generators: Iterable[str]) -> frozenset[int]:
    funcs = [TRANSFORMATIONS[g] for g in generators]
    orbit = {rule.number}
    frontier = [rule]
    while frontier:
        cur = frontier.pop()
        for f in funcs:
            nxt = f(cur)
            if nxt.number not in orbit:
                orbit.add(nxt.number)
                frontier.append(nxt)
    return frozenset(orbit)


def reduce_rules(generators: Iterable[str],
                 rules: Iterable[Rule] | None = None,
                 under: Variant | None = None) -> list[EquivalenceClass]:
    """Partition rules into orbits of the chosen transformations.

    ``generators`` is a subset of {"T12", "G"}.  ``rules`` defaults to
    all 81; the set must be closed under the generators.  ``under``
    names the variant whose dynamics the reduction is meant to respect
    (default V1); requesting the G generator for any other variant is
    refused, because the cross-weight sign flip is a dynamics symmetry
    only for the hold-at-zero sign variant.
    """
    generators = frozenset(generators)
    unknown = generators - TRANSFORMATIONS.keys()
    if unknown:
        raise ValueError(f"unknown transformations: {sorted(unknown)}")
    if under is None:
        under = variant("V1")
    if "G" in generators and under.tag != "V1":
        raise ValueError(
            "the cross-weight sign flip preserves dynamics only under V1; "
            f"refusing to reduce {under.tag} with it"
        )
    pool = tuple(all_rules()) if rules is None else tuple(rules)
    numbers = {r.number for r in pool}
    classes: dict[int, EquivalenceClass] = {}
    for r in pool:
        orbit = _orbit(r, generators)
        if not orbit <= numbers:
            raise ValueError(
                f"rule set is not closed under {sorted(generators)}: "
                f"orbit of rule {r.number} leaves it"
            )
        rep = min(orbit)
        if rep not in classes:
            classes[rep] = EquivalenceClass(rep, tuple(sorted(orbit)), generators)
    return [classes[rep] for rep in sorted(classes)]
