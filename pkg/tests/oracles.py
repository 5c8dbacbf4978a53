"""Independent reimplementations used only as test oracles.

The attractor oracle deliberately uses a different algorithm from the
package (advance-then-extract on the functional graph instead of
first-revisit bookkeeping) so that agreement is evidence, not an echo.
"""

from __future__ import annotations


def _canonical(cycle: list[int]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


def functional_graph_attractors(next_index, n_states: int = 4):
    """Attractors of a self-map on range(n_states) by brute simulation.

    In a functional graph on n states every trajectory is on its cycle
    after at most n - 1 steps, so advancing n steps lands on the cycle;
    the cycle is then read off directly.  Returns (attractors, basin,
    steps) shaped like the package's attractor set: a tuple of
    canonical cycles sorted by leading state, a start -> cycle map, and
    a start -> transient-length map.
    """
    cycles: dict[tuple[int, ...], None] = {}
    basin: dict[int, tuple[int, ...]] = {}
    steps: dict[int, int] = {}
    for start in range(n_states):
        cur = start
        for _ in range(n_states):
            cur = next_index(cur)
        cyc = [cur]
        nxt = next_index(cur)
        while nxt != cur:
            cyc.append(nxt)
            nxt = next_index(nxt)
        canonical = _canonical(cyc)
        cycles[canonical] = None
        basin[start] = canonical
        on_cycle = set(cyc)
        k, walker = 0, start
        while walker not in on_cycle:
            walker = next_index(walker)
            k += 1
        steps[start] = k
    ordered = tuple(sorted(cycles, key=lambda c: c[0]))
    return ordered, basin, steps
