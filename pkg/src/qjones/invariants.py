"""Colored Jones polynomials from graded weight-block traces, with the
per-degree Lefschetz decomposition and Nielsen-type counts.

For a braid whose closure is a knot, the color-N invariant is assembled as

    J(N) = q^{-w·l - n·l} · ( 1 + Σ_{r=1}^{nl} (-1)^r L_r q^{2r} ),   l = N - 1,

where L_r = (-1)^r · aug_l(trace of the word on the (n, r) weight block) is
the degree-r abelianized Lefschetz number: the homology behind the block is
concentrated in degree r, so the alternating trace formula reduces to a
single signed term. The diagonal weight q^{-nl} q^{2r} contributed by the
inverse Cartan generator is applied here, never inside the block matrices,
so the weight route and the truncated simple-module route stay independent.

The framing factor q^{-w·l} (w the writhe) is forced by Markov invariance:
a positive (negative) stabilization multiplies the quantum trace by exactly
q^{l} (q^{-l}), so only this exponent makes the assembly independent of the
braid presentation. At color 2 it reduces to the familiar q^{-w}.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .braid import BraidWord, closure_class
from .errors import NonKnotClosureError
from .ring import CLASSICAL, LaurentPoly, ONE, ZERO, aug
from .verma import evaluate_word


@dataclass(frozen=True)
class PerDegreeData:
    """Trace data for one configuration degree r."""

    r: int
    graded_trace: LaurentPoly          # over Z[q^{±1}, s^{±1}]
    lefschetz_abelianized: LaurentPoly  # over Z[q^{±1}], sign (-1)^r included
    lefschetz_classical: int
    nonzero_monomials: int


@dataclass(frozen=True)
class InvariantReport:
    """Colored Jones polynomial plus its per-degree decomposition."""

    braid: BraidWord
    color: int
    writhe: int
    jones: LaurentPoly
    per_r: tuple[PerDegreeData, ...]

    def to_dict(self) -> dict:
        return {
            "braid": self.braid.to_json(),
            "N": self.color,
            "writhe": self.writhe,
            "jones": self.jones.render(),
            "per_r": [
                {
                    "r": row.r,
                    "trace": row.graded_trace.render(),
                    "lefschetz": row.lefschetz_abelianized.render(),
                    "classical": row.lefschetz_classical,
                    "nonzero": row.nonzero_monomials,
                }
                for row in self.per_r
            ],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _per_degree(word: BraidWord, l: int, r: int, trace: LaurentPoly) -> PerDegreeData:
    abelianized = aug(l).apply(trace)
    if r % 2:
        abelianized = -abelianized
    classical = CLASSICAL.apply(abelianized).as_int()
    return PerDegreeData(r, trace, abelianized, classical, abelianized.term_count)


def colored_jones(word: BraidWord, color: int, workers: int = 1) -> InvariantReport:
    """Colored Jones polynomial of the knot closure of ``word``.

    ``color`` is N = l + 1 >= 2. Per-degree traces are pure functions of the
    word and r and may be computed concurrently; assembly is serial and the
    result is deterministic regardless of schedule.
    """
    if color < 2:
        raise ValueError(f"color must be at least 2, got {color}")
    if not closure_class(word).is_knot:
        raise NonKnotClosureError(word.permutation_cycles())
    n, l, w = word.strands, color - 1, word.writhe
    degrees = range(0, n * l + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            traces = list(pool.map(lambda r: evaluate_word(word, r).trace(), degrees))
    else:
        traces = [evaluate_word(word, r).trace() for r in degrees]
    per_r = tuple(_per_degree(word, l, r, tr) for r, tr in zip(degrees, traces))
    assert per_r[0].graded_trace == ONE, "degree-0 block trace must be 1"
    total = ZERO
    for row in per_r:
        contribution = row.lefschetz_abelianized * LaurentPoly.q_power(2 * row.r)
        if row.r % 2:
            contribution = -contribution
        total = total + contribution
    jones = LaurentPoly.q_power(-w * l - n * l) * total
    return InvariantReport(word, color, w, jones, per_r)


def lefschetz_numbers(word: BraidWord, l: int, r_max: int) -> list[LaurentPoly]:
    """Degree-r abelianized Lefschetz numbers of the word's configuration
    action, for r = 1..r_max, specialized at color l.

    The homology is concentrated in degree r, so each value is
    (-1)^r · aug_l(trace on the (n, r) weight block). Degrees beyond n·l are
    allowed for exploration; they do not enter the Jones assembly.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    if l < 0:
        raise ValueError("l must be nonnegative")
    out = []
    for r in range(1, r_max + 1):
        value = aug(l).apply(evaluate_word(word, r).trace())
        if r % 2:
            value = -value
        out.append(value)
    return out


@dataclass(frozen=True)
class NielsenEntry:
    r: int
    nonzero_monomials: int
    classical_lefschetz: int


def nielsen_data(report: InvariantReport) -> list[NielsenEntry]:
    """Per degree: the count of nonzero monomials of the abelianized Lefschetz
    number (a lower bound for the classical Nielsen number) and its value at
    q = 1 (the classical Lefschetz number)."""
    return [
        NielsenEntry(row.r, row.nonzero_monomials, row.lefschetz_classical)
        for row in report.per_r
    ]


def largest_block_dimension(strands: int, color: int) -> int:
    """Dimension of the largest weight block entering a color-N computation."""
    l = color - 1
    return math.comb(strands * l + strands - 1, strands - 1)
