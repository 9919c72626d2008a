"""Differential-verification harness.

Sweeps parameter grids, evaluates every closed form against the DP
oracle, and assembles a deterministic machine-readable report.  The
report's integer fields serialize as decimal strings so arbitrarily large
counts survive any consumer.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import formulas
from .model import (
    Arrangement,
    Kind,
    Restriction,
    WeightRule,
    canonical_arrangement,
    validate,
)
from .oracle import PathQuery, count_table, dp_count, iter_paths


@dataclass(frozen=True)
class SweepSpec:
    l_values: tuple[int, ...] = (2, 3, 4, 5)
    n_max: int = 48
    d_max: int = 6
    strips_max: int = 5
    a_max: int = 3
    b_max: int = 3
    semantics: WeightRule = WeightRule.LANDING

    def check(self) -> "SweepSpec":
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if any(l < 2 for l in self.l_values):
            raise ValueError(f"all l values must be >= 2, got {self.l_values}")
        if self.d_max < 1:
            raise ValueError(f"d_max must be >= 1, got {self.d_max}")
        return self


@dataclass(frozen=True)
class Cell:
    formula_id: str
    parameters: tuple[tuple[str, int], ...]
    formula_value: int
    oracle_value: int

    @property
    def match(self) -> bool:
        return self.formula_value == self.oracle_value


@dataclass
class CompareReport:
    cells: list[Cell] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.cells)

    @property
    def mismatches(self) -> int:
        return sum(1 for c in self.cells if not c.match)

    def mismatch_cells(self) -> list[Cell]:
        return [c for c in self.cells if not c.match]

    def extend(self, other: "CompareReport") -> None:
        self.cells.extend(other.cells)

    def as_dict(self) -> dict:
        return {
            "cells": [
                {
                    "formula_id": c.formula_id,
                    "parameters": dict(c.parameters),
                    "formula_value": str(c.formula_value),
                    "oracle_value": str(c.oracle_value),
                    "match": c.match,
                }
                for c in self.cells
            ],
            "summary": {"total": self.total, "mismatches": self.mismatches},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_csv(self) -> str:
        lines = ["formula_id,parameters,formula_value,oracle_value,match"]
        for c in self.cells:
            params = " ".join(f"{k}={v}" for k, v in c.parameters)
            lines.append(
                f"{c.formula_id},{params},{c.formula_value},{c.oracle_value},"
                f"{str(c.match).lower()}"
            )
        return "\n".join(lines) + "\n"

    def render(self, max_mismatches: int = 20) -> str:
        lines = [f"cells: {self.total}   mismatches: {self.mismatches}"]
        for c in self.mismatch_cells()[:max_mismatches]:
            params = " ".join(f"{k}={v}" for k, v in c.parameters)
            lines.append(
                f"  MISMATCH {c.formula_id} [{params}] "
                f"formula={c.formula_value} oracle={c.oracle_value}"
            )
        rest = self.mismatches - max_mismatches
        if rest > 0:
            lines.append(f"  ... and {rest} more")
        return "\n".join(lines) + "\n"


def _params(**kwargs: int) -> tuple[tuple[str, int], ...]:
    return tuple(kwargs.items())


def _endpoints(n_max: int, m_lo, m_hi):
    """All (m, n) with n <= n_max, parity-matched, clipped to callables' range."""
    for n in range(0, n_max + 1):
        lo, hi = m_lo(n), m_hi(n)
        start = lo if (n - lo) % 2 == 0 else lo + 1
        for m in range(start, hi + 1, 2):
            yield m, n


def run_lemma_suite(spec: SweepSpec) -> CompareReport:
    """One-restriction formulas vs the DP oracle over the full grid."""
    spec.check()
    report = CompareReport()
    n_max = spec.n_max

    def add(formula_id, params, formula_value, oracle_value):
        report.cells.append(Cell(formula_id, params, formula_value, oracle_value))

    free = count_table(0, n_max, Arrangement(semantics=spec.semantics))
    for m, n in _endpoints(n_max, lambda n: -n, lambda n: n):
        add("free", _params(m=m, n=n), formulas.count_free(m, n), free.count(m, n))

    for d in range(1, spec.d_max + 1):
        arrangements = {
            "wall_left": (Restriction(Kind.WALL_LEFT, 1 - d), lambda n: 1 - d, lambda n: n),
            "wall_right": (Restriction(Kind.WALL_RIGHT, d - 1), lambda n: -n, lambda n: d - 1),
            "filter1_left": (Restriction(Kind.FILTER1, d), lambda n: -n, lambda n: min(d - 1, n)),
            "filter1_right": (Restriction(Kind.FILTER1, d), lambda n: d, lambda n: n),
            "filter1_neg": (Restriction(Kind.FILTER1, -d), lambda n: max(-d, -n), lambda n: n),
            "filter2_left": (Restriction(Kind.FILTER2, d), lambda n: -n, lambda n: min(d - 1, n)),
            "filter2_right": (Restriction(Kind.FILTER2, d), lambda n: d + 1, lambda n: n),
            "filter2_neg": (Restriction(Kind.FILTER2, -d), lambda n: max(-d, -n), lambda n: n),
        }
        evaluators = {
            "wall_left": lambda m, n: formulas.wall_left(1 - d, m, n),
            "wall_right": lambda m, n: formulas.wall_right(d - 1, m, n),
            "filter1_left": lambda m, n: formulas.filter1_left(d, m, n),
            "filter1_right": lambda m, n: formulas.filter1_right(d, m, n),
            "filter1_neg": lambda m, n: formulas.filter1_neg(d, m, n),
            "filter2_left": lambda m, n: formulas.filter2_left(d, m, n),
            "filter2_right": lambda m, n: formulas.filter2_right(d, m, n),
            "filter2_neg": lambda m, n: formulas.filter2_neg(d, m, n),
        }
        for fid, (restriction, m_lo, m_hi) in arrangements.items():
            table = count_table(0, n_max, Arrangement((restriction,), spec.semantics))
            evaluate = evaluators[fid]
            for m, n in _endpoints(n_max, m_lo, m_hi):
                add(fid, _params(d=d, m=m, n=n), evaluate(m, n), table.count(m, n))
    return report


def run_theorem_suite(spec: SweepSpec) -> CompareReport:
    """Multi-restriction formulas vs the DP oracle over the sweep grid."""
    spec.check()
    report = CompareReport()
    n_max = spec.n_max

    def add(formula_id, params, formula_value, oracle_value):
        report.cells.append(Cell(formula_id, params, formula_value, oracle_value))

    for l in spec.l_values:
        wall_filter = Arrangement(
            (Restriction(Kind.WALL_LEFT, 0), Restriction(Kind.FILTER1, l - 1)),
            spec.semantics,
        )
        table = count_table(0, n_max, wall_filter)
        for m, n in _endpoints(n_max, lambda n: 0, lambda n: min(l - 2, n)):
            add("desire1", _params(l=l, m=m, n=n),
                formulas.wall_filter_strip1(l, m, n), table.count(m, n))
        for m, n in _endpoints(n_max, lambda n: l - 1, lambda n: n):
            add("desire2", _params(l=l, m=m, n=n),
                formulas.wall_filter_right(l, m, n), table.count(m, n))

        pair = Arrangement(
            (Restriction(Kind.FILTER1, l - 1), Restriction(Kind.FILTER2, 2 * l - 1)),
            spec.semantics,
        )
        strip = (lambda n: l - 1, lambda n: min(2 * l - 2, n))
        table = count_table(0, n_max, pair)
        for m, n in _endpoints(n_max, *strip):
            add("th3", _params(l=l, m=m, n=n),
                formulas.two_filters(l, m, n), table.count(m, n))
        for a in range(0, spec.a_max + 1):
            table = count_table(-2 * a * l, n_max, pair)
            for m, n in _endpoints(n_max, *strip):
                value = formulas.two_filters_from_even(a, l, m, n)
                add("th32", _params(a=a, l=l, m=m, n=n), value, table.count(m, n))
        for b in range(0, spec.b_max + 1):
            table = count_table(-2 * b * l - 2, n_max, pair)
            for m, n in _endpoints(n_max, *strip):
                value = formulas.two_filters_from_odd(b, l, m, n)
                add("th33", _params(b=b, l=l, m=m, n=n), value, table.count(m, n))

        boxed = Arrangement(
            (
                Restriction(Kind.WALL_LEFT, 0),
                Restriction(Kind.FILTER1, l - 1),
                Restriction(Kind.FILTER2, 2 * l - 1),
            ),
            spec.semantics,
        )
        table = count_table(0, n_max, boxed)
        for m, n in _endpoints(n_max, *strip):
            add("th4", _params(l=l, m=m, n=n),
                formulas.wall_two_filters(l, m, n), table.count(m, n))

        periodic = canonical_arrangement(l, n_max)
        if spec.semantics is not periodic.semantics:
            periodic = Arrangement(periodic.restrictions, spec.semantics)
        table = count_table(0, n_max, periodic)
        m_cap = lambda n: min(spec.strips_max * l - 2, n)
        for m, n in _endpoints(n_max, lambda n: 0, m_cap):
            add("mj", _params(l=l, m=m, n=n),
                formulas.multiplicity(l, m, n), table.count(m, n))
    return report


def _random_arrangement(rng: random.Random) -> Arrangement:
    """A random valid arrangement: spaced one-way columns of random kinds."""
    kinds = (Kind.WALL_LEFT, Kind.WALL_RIGHT, Kind.FILTER1, Kind.FILTER2)
    count = rng.randint(0, 3)
    axes: list[int] = []
    axis = rng.randint(-8, 4)
    for _ in range(count):
        axes.append(axis)
        axis += rng.randint(2, 5)
    rs = tuple(Restriction(rng.choice(kinds), a) for a in axes)
    semantics = rng.choice((WeightRule.LANDING, WeightRule.LITERAL))
    return validate(Arrangement(rs, semantics))


def run_property_suite(seed: int, cases: int, n_max: int = 20) -> CompareReport:
    """Randomized oracle properties, reproducible from the seed.

    Per case: DP vs exhaustive enumeration, translation invariance of the
    DP under a random shift, and nonnegativity.
    """
    if cases < 1:
        raise ValueError(f"cases must be >= 1, got {cases}")
    rng = random.Random(seed)
    report = CompareReport()
    for i in range(cases):
        arr = _random_arrangement(rng)
        start = rng.randint(-6, 6)
        n = rng.randint(0, n_max)
        m = start + n - 2 * rng.randint(0, n)
        q = PathQuery((start, 0), m, n, arr)
        dp = dp_count(q)

        enum_total = sum(p.weight for p in iter_paths(q))
        report.cells.append(
            Cell("dp_vs_enum", _params(case=i, start=start, m=m, n=n), dp, enum_total)
        )

        t = rng.randint(-5, 5)
        shifted = dp_count(PathQuery((start + t, 0), m + t, n, arr.shifted(t)))
        report.cells.append(
            Cell("translation", _params(case=i, shift=t, m=m, n=n), shifted, dp)
        )

        report.cells.append(
            Cell("nonnegative", _params(case=i, m=m, n=n), dp, max(dp, 0))
        )
    return report
