"""Reduction of the bigraded complex over the two-element field."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .pairing import BigradedComplex


class ComplexError(RuntimeError):
    """Structural failure: a mis-graded arrow in strict mode, or d^2 != 0."""


@dataclass(frozen=True)
class RankTable:
    """Rank per (alexander, maslov) bigrading; zero entries are never stored."""

    ranks: Mapping[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "ranks", {k: v for k, v in dict(self.ranks).items() if v})

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def entries(self) -> list[tuple[int, int, int]]:
        """(alexander, maslov, rank) triples, descending alexander then maslov."""
        return [(a, m, self.ranks[(a, m)])
                for a, m in sorted(self.ranks, key=lambda am: (-am[0], -am[1]))]

    def alexander_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (a, _), r in self.ranks.items():
            out[a] = out.get(a, 0) + r
        return out


@dataclass(frozen=True)
class FilterReport:
    mode: str
    dropped: tuple[dict, ...] = field(default_factory=tuple)


def grading_filter(complex_: BigradedComplex, mode: str = "repair") -> tuple[BigradedComplex, FilterReport]:
    """Enforce that every arrow preserves alexander and drops maslov by one.

    In repair mode offending arrows are dropped and reported; in strict mode
    any offender raises ComplexError.  A correctly assembled complex never
    has offenders, so the report doubles as a structural diagnostic.
    """
    if mode not in ("strict", "repair"):
        raise ValueError(f"unknown filter mode {mode!r}")
    kept = []
    dropped = []
    gens = complex_.generators
    for src, tgt in complex_.arrows:
        x, y = gens[src], gens[tgt]
        if x.alexander == y.alexander and x.maslov == y.maslov + 1:
            kept.append((src, tgt))
            continue
        record = {
            "source": x.name,
            "target": y.name,
            "source_bigrading": [x.alexander, x.maslov],
            "target_bigrading": [y.alexander, y.maslov],
        }
        if mode == "strict":
            raise ComplexError(f"mis-graded arrow {record}")
        dropped.append(record)
    filtered = BigradedComplex(generators=gens, arrows=tuple(kept))
    return filtered, FilterReport(mode=mode, dropped=tuple(dropped))


def _check_d_squared(arrows: Iterable[tuple[int, int]]) -> None:
    outgoing: dict[int, set[int]] = {}
    for src, tgt in arrows:
        outgoing.setdefault(src, set()).add(tgt)
    for src, targets in outgoing.items():
        acc: dict[int, int] = {}
        for mid in targets:
            for tgt in outgoing.get(mid, ()):
                acc[tgt] = acc.get(tgt, 0) ^ 1
        if any(acc.values()):
            raise ComplexError(f"d^2 != 0 at generator index {src}")


def _cancel_block(arrows: list[tuple[int, int]]) -> set[int]:
    """Cancel arrows over GF(2) until none remain; return killed generators."""
    outgoing: dict[int, set[int]] = {}
    incoming: dict[int, set[int]] = {}
    for src, tgt in arrows:
        outgoing.setdefault(src, set()).add(tgt)
        incoming.setdefault(tgt, set()).add(src)
    killed: set[int] = set()
    queue = deque(arrows)
    while queue:
        x, y = queue.popleft()
        if x in killed or y in killed or y not in outgoing.get(x, ()):
            continue
        killed.update((x, y))
        sources = incoming.get(y, set()) - {x}
        targets = outgoing.get(x, set()) - {y}
        for node in (x, y):
            for w in incoming.pop(node, set()):
                outgoing.get(w, set()).discard(node)
            for z in outgoing.pop(node, set()):
                incoming.get(z, set()).discard(node)
        # zig-zag composition: toggle w -> z for every pair
        for w in sources:
            for z in targets:
                if z in outgoing.get(w, set()):
                    outgoing[w].discard(z)
                    incoming[z].discard(w)
                else:
                    outgoing.setdefault(w, set()).add(z)
                    incoming.setdefault(z, set()).add(w)
                    queue.append((w, z))
    return killed


def reduce_complex(complex_: BigradedComplex) -> RankTable:
    """Full cancellation; surviving generators binned by bigrading.

    Requires a grading-filtered complex, so arrows never cross Alexander
    gradings and the cancellation splits into independent blocks.  The
    resulting table does not depend on cancellation order.
    """
    _check_d_squared(complex_.arrows)
    blocks: dict[int, list[tuple[int, int]]] = {}
    gens = complex_.generators
    for src, tgt in complex_.arrows:
        if gens[src].alexander != gens[tgt].alexander:
            raise ComplexError("arrow crosses Alexander gradings; run grading_filter first")
        blocks.setdefault(gens[src].alexander, []).append((src, tgt))
    killed: set[int] = set()
    for alexander in sorted(blocks):
        killed |= _cancel_block(blocks[alexander])
    ranks: dict[tuple[int, int], int] = {}
    for i, gen in enumerate(gens):
        if i not in killed:
            key = (gen.alexander, gen.maslov)
            ranks[key] = ranks.get(key, 0) + 1
    return RankTable(ranks)
