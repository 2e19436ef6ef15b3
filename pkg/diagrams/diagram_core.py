"""
Oriented knot diagrams as Gauss codes.

A diagram is the cyclic sequence of crossing passes met while walking along
the knot in its orientation. Edge ``j`` is the arc between pass ``j`` and pass
``j + 1`` (indices mod 2c); the 0-crossing diagram has the single edge 0.

USAGE:
    from diagrams.diagram_core import Pass, Strand, validate

    trefoil = validate([Pass(1, Strand.OVER), Pass(2, Strand.UNDER), ...])
    trefoil.crossing_count  # 3
"""
from collections import Counter
from dataclasses import dataclass, replace
from functools import cached_property

from django.db import models

from .exceptions import InvalidDiagram, UnknownCrossing, ZeroCrossings


class Strand(models.TextChoices):
    OVER = 'O', 'Over'
    UNDER = 'U', 'Under'

    @property
    def opposite(self):
        return Strand.UNDER if self is Strand.OVER else Strand.OVER


class Sign(models.IntegerChoices):
    POSITIVE = 1, '+'
    NEGATIVE = -1, '-'

    @property
    def opposite(self):
        return Sign(-self.value)


@dataclass(frozen=True)
class Pass:
    crossing: int
    strand: Strand
    sign: Sign | None = None

    @property
    def is_over(self):
        return self.strand is Strand.OVER

    def changed(self):
        """The same pass after a crossing change at its crossing."""
        sign = self.sign.opposite if self.sign is not None else None
        return Pass(self.crossing, self.strand.opposite, sign)

    def __str__(self):
        sign = self.sign.label if self.sign is not None else ''
        return f"{self.strand.value}{self.crossing}{sign}"


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable Gauss code. Build it with validate(); the constructor trusts its input."""
    passes: tuple[Pass, ...] = ()

    @property
    def crossing_count(self):
        return len(self.passes) // 2

    @property
    def edge_count(self):
        return max(len(self.passes), 1)

    @cached_property
    def crossings(self):
        """Crossing ids in order of first appearance."""
        return tuple(dict.fromkeys(p.crossing for p in self.passes))

    @cached_property
    def positions(self):
        """crossing id -> (position of its Over pass, position of its Under pass)"""
        over, under = {}, {}
        for index, p in enumerate(self.passes):
            (over if p.is_over else under)[p.crossing] = index
        return {x: (over[x], under[x]) for x in over}

    def crossing_positions(self, x):
        try:
            return self.positions[x]
        except KeyError:
            raise UnknownCrossing(f"crossing {x} does not occur in the diagram") from None

    def pattern(self):
        """Over/Under markers as a string, e.g. 'OUOUOU'."""
        return ''.join(p.strand.value for p in self.passes)

    def next_crossing_id(self):
        return max(self.crossings, default=0) + 1

    def __str__(self):
        return ' '.join(str(p) for p in self.passes)

    def __len__(self):
        return len(self.passes)


def validate(raw):
    """
    Check a raw pass sequence and return it as a GaussDiagram.

    Raises InvalidDiagram with code OddLength, IdNotPairedOnceOverOnceUnder
    or SignMismatch.
    """
    passes = tuple(raw)
    if len(passes) % 2:
        raise InvalidDiagram(f"odd number of passes ({len(passes)})", code='OddLength')

    strands = {}
    for p in passes:
        if p.crossing < 1:
            raise InvalidDiagram(f"crossing id {p.crossing} is not positive",
                                 code='IdNotPairedOnceOverOnceUnder')
        strands.setdefault(p.crossing, []).append(p)

    for x, pair in strands.items():
        kinds = Counter(p.strand for p in pair)
        if kinds[Strand.OVER] != 1 or kinds[Strand.UNDER] != 1:
            raise InvalidDiagram(
                f"crossing {x} must occur exactly once Over and once Under",
                code='IdNotPairedOnceOverOnceUnder',
            )
        signs = {p.sign for p in pair if p.sign is not None}
        if len(signs) > 1:
            raise InvalidDiagram(f"crossing {x} carries two different signs", code='SignMismatch')

    return GaussDiagram(passes)


def crossing_count(diagram):
    return diagram.crossing_count


def is_alternating(diagram):
    """Over and Under strictly alternate around the code; False for c = 0."""
    passes = diagram.passes
    if not passes:
        return False
    return all(passes[i].strand != passes[i - 1].strand for i in range(len(passes)))


def bridge_count(diagram):
    """Number of maximal cyclic runs of Over passes."""
    passes = diagram.passes
    return sum(1 for i, p in enumerate(passes) if p.is_over and not passes[i - 1].is_over)


def is_one_bridge(diagram):
    """The cyclic pattern is a rotation of O^c U^c."""
    if diagram.crossing_count == 0:
        raise ZeroCrossings("a one-bridge diagram needs at least one crossing")
    return bridge_count(diagram) == 1


def mirror(diagram):
    return GaussDiagram(tuple(p.changed() for p in diagram.passes))


def reverse(diagram):
    return GaussDiagram(diagram.passes[::-1])


def crossing_change(diagram, x):
    diagram.crossing_positions(x)
    return GaussDiagram(tuple(p.changed() if p.crossing == x else p for p in diagram.passes))


def evenness_lint(diagram):
    """
    Advisory realizability check: an even number of passes lies strictly
    between the two occurrences of every crossing.
    """
    return all((under - over) % 2 == 1 for over, under in diagram.positions.values())


def canonical_ids(diagram):
    """Renumber crossings 1..c by first appearance, keeping the rotation."""
    mapping = {x: i for i, x in enumerate(diagram.crossings, start=1)}
    return GaussDiagram(tuple(replace(p, crossing=mapping[p.crossing]) for p in diagram.passes))
