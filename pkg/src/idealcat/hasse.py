"""DOT rendering of the subideal order of a Z_n backend."""

from __future__ import annotations

from .ideals import Ideal, enumerate_objects, is_subideal
from .rings import Ring


def covering_pairs(objects: list[Ideal]) -> list[tuple[Ideal, Ideal]]:
    """Pairs (A, B) with A strictly below B and nothing strictly between."""
    covers = []
    for A in objects:
        for B in objects:
            if A == B or not is_subideal(A, B):
                continue
            if any(
                C != A and C != B and is_subideal(A, C) and is_subideal(C, B)
                for C in objects
            ):
                continue
            covers.append((A, B))
    return covers


def poset_dot(ring: Ring) -> str:
    """A DOT digraph of the Hasse diagram: one node per ideal, one edge per
    covering relation, edges pointing from smaller to larger."""
    objects = enumerate_objects(ring)
    lines = ["digraph subideals {", "  rankdir=BT;"]
    for A in objects:
        lines.append(f'  "{A.literal}";')
    for A, B in covering_pairs(objects):
        lines.append(f'  "{A.literal}" -> "{B.literal}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
