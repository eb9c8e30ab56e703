"""Numbers N(t) of real m-Arf functions of a given topological type.

Two independent routes are provided:

* :func:`closed_count` evaluates the closed formulas;
* :func:`oracle_count` enumerates every admissible value tuple on a fixed
  symmetric generating set and tallies the extracted types.

:func:`census` and :func:`verify_sweep` assemble both into reports.
"""

from __future__ import annotations

import itertools
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .arf_types import (
    ArfTopologicalType,
    NonSepEvenType,
    OddType,
    SepEvenType,
    admissible_half_invariants,
    enumerate_arf_types,
    is_swap_symmetric,
    surface_of,
    validate_arf_type,
)
from .errors import InvalidTypeError, OracleBudgetExceeded
from .klein_surface import (
    DecompositionParams,
    SurfaceType,
    check_decomposition,
    decomposition_choices,
    default_decomposition,
    enumerate_surface_types,
    has_positive_geometric_genus,
    moduli_dimension,
)
from .value_tuples import ValueTuple, extract_type, validate_tuple

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_CHUNK_SIZE",
    "closed_count",
    "swap_corrected_count",
    "count_even_arf_pairs",
    "count_odd_arf_pairs",
    "oracle_size",
    "oracle_count",
    "CountResult",
    "CensusGroup",
    "CensusReport",
    "census",
    "Mismatch",
    "VerifyRecord",
    "verify_sweep",
]

DEFAULT_BUDGET = 10**9
DEFAULT_CHUNK_SIZE = 4096


# ---------------------------------------------------------------------------
# closed forms


def _exact(x: Fraction, what) -> int:
    if x.denominator != 1 or x < 0:
        raise AssertionError(f"closed count for {what} is not a nonnegative integer: {x}")
    return x.numerator


def _sep_count(t: SepEvenType, m: int) -> int:
    g, k, k0, k1 = t.g, t.k, t.k0, t.k1
    s = surface_of(t)
    allowed = admissible_half_invariants(g, k, k0, m)
    probe = SepEvenType(g, allowed[0], t.k00, t.k01, t.k10, t.k11)
    if not validate_arf_type(probe, m, s):
        raise InvalidTypeError(f"{t.as_tuple()} fails the oval congruence for m={m}")
    forced = m % 4 == 0 or k0 != 0
    dt = t.delta_tilde
    if dt not in allowed:
        # the explicit zero clauses of the counting theorem
        if forced and ((g > k + 1 and dt == 1) or (g == k + 1 and dt == 2)):
            return 0
        raise InvalidTypeError(f"half-surface invariant {dt} impossible for {t.as_tuple()}")

    M = comb(k, k0) * comb(k0, t.k00) * comb(k1, t.k01)
    two = Fraction(2)
    if g > k + 1:
        if forced:
            n = two ** (1 - k) * m**g * M
        else:
            sign = 1 if dt == 0 else -1
            # g + k + 1 is even here because k = g + 1 (mod 2)
            n = (two**-k + sign * two ** (-((g + k + 1) // 2))) * m**g * M
    elif forced:
        n = two ** (-(k - 1)) * m ** (k + 1) * M
    elif dt == 1:
        n = 3 * two ** (-(k + 1)) * m ** (k + 1) * M
    else:
        n = two ** (-(k + 1)) * m ** (k + 1) * M
    return _exact(n, t.as_tuple())


def closed_count(t: ArfTopologicalType, m: int, epsilon: int | None = None) -> int:
    """Closed-form N(t).

    Separating types whose only defect is a forbidden half-surface invariant
    get 0, as in the theorem's explicit zero clauses. Any other invalid type
    raises :class:`InvalidTypeError`. ``epsilon`` only matters for odd ``m``,
    where it lets the type be checked against a concrete surface.
    """
    if isinstance(t, OddType):
        if m % 2 == 0:
            raise InvalidTypeError("OddType needs odd m")
        if epsilon is not None:
            ok = validate_arf_type(t, m, surface_of(t, epsilon))
        else:
            ok = (t.g - 1) % m == 0
        if not ok:
            raise InvalidTypeError(f"no real {m}-Arf functions in genus {t.g}")
        return m**t.g
    if isinstance(t, NonSepEvenType):
        if not validate_arf_type(t, m, surface_of(t)):
            raise InvalidTypeError(f"{t.as_tuple()} fails the oval congruence for m={m}")
        return _exact(Fraction(comb(t.k, t.k1) * m**t.g, 2), t.as_tuple())
    return _sep_count(t, m)


def swap_corrected_count(t: ArfTopologicalType, m: int, epsilon: int | None = None) -> int:
    """:func:`closed_count`, halved for types fixed by the class swap.

    When both similarity classes have equal counts the binomial factor
    counts every labelled oval assignment twice: once as given and once with
    the classes exchanged. Those are the same set of functions.
    """
    n = closed_count(t, m, epsilon)
    return n // 2 if is_swap_symmetric(t) else n


def count_even_arf_pairs(g_tilde: int, m: int) -> int:
    """Number of ``(alpha, beta)`` in ``(Z/m)^(2 g_tilde)`` with even ``sum (1-a)(1-b)``."""
    if m % 2:
        raise ValueError("count_even_arf_pairs needs even m")
    if g_tilde < 1:
        raise ValueError("g_tilde must be >= 1")
    return 2 ** (g_tilde - 1) * (2**g_tilde + 1) * (m // 2) ** (2 * g_tilde)


def count_odd_arf_pairs(g_tilde: int, m: int) -> int:
    if m % 2:
        raise ValueError("count_odd_arf_pairs needs even m")
    if g_tilde < 1:
        raise ValueError("g_tilde must be >= 1")
    return 2 ** (g_tilde - 1) * (2**g_tilde - 1) * (m // 2) ** (2 * g_tilde)


# ---------------------------------------------------------------------------
# brute-force oracle


def _admissible_gammas(s: SurfaceType, m: int, d: DecompositionParams) -> list[tuple[int, ...]]:
    slots = d.n - 1
    nov = min(s.k, slots)
    choices = (0,) if m % 2 else (0, m // 2)
    zeros_a, zeros_d = (0,) * d.g_tilde, (0,) * slots
    out = []
    for ovals in itertools.product(choices, repeat=nov):
        gamma = ovals + (0,) * (slots - nov)
        # admissibility depends on gamma only
        if validate_tuple(ValueTuple(m, s, d, zeros_a, zeros_a, gamma, zeros_d)):
            out.append(gamma)
    return out


def oracle_size(s: SurfaceType, m: int, d: DecompositionParams | None = None) -> int:
    """Number of admissible tuples :func:`oracle_count` would visit."""
    d = d if d is not None else default_decomposition(s)
    check_decomposition(s, d)
    return len(_admissible_gammas(s, m, d)) * m ** (2 * d.g_tilde) * m ** (d.n - 1)


def _tally_chunk(s, m, d, gammas, start, stop) -> Counter:
    gt, slots = d.g_tilde, d.n - 1
    tally: Counter = Counter()
    deltas = list(itertools.product(range(m), repeat=slots))
    for idx in range(start, stop):
        digits = []
        for _ in range(2 * gt):
            idx, r = divmod(idx, m)
            digits.append(r)
        alpha, beta = tuple(digits[0::2]), tuple(digits[1::2])
        for gamma in gammas:
            for delta in deltas:
                tally[extract_type(ValueTuple(m, s, d, alpha, beta, gamma, delta))] += 1
    return tally


def _tally_chunk_args(args) -> Counter:
    return _tally_chunk(*args)


def oracle_count(
    s: SurfaceType,
    m: int,
    d: DecompositionParams | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> dict[ArfTopologicalType, int]:
    """Tally every admissible value tuple on ``s`` by its topological type.

    Gamma runs over admissible oval values with twists at 0, alpha and beta
    over ``(Z/m)^(2 g_tilde)`` and the bridge values over ``(Z/m)^(n-1)``.
    Each tuple is one real m-Arf function and is counted once. The
    ``(alpha, beta)`` index range is split into chunks of ``chunk_size``.
    With ``workers > 1`` chunks run in separate processes. Tallies are
    summed, so the result does not depend on scheduling. Keys come out sorted.
    """
    if budget < 1 or workers < 1 or chunk_size < 1:
        raise ValueError("budget, workers and chunk_size must be positive")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    d = d if d is not None else default_decomposition(s)
    check_decomposition(s, d)
    gammas = _admissible_gammas(s, m, d)
    pairs = m ** (2 * d.g_tilde)
    size = len(gammas) * pairs * m ** (d.n - 1)
    if size > budget:
        raise OracleBudgetExceeded(size, budget)
    log.debug("oracle %s m=%d n=%d: %d tuples", s, m, d.n, size)

    jobs = [
        (s, m, d, gammas, lo, min(lo + chunk_size, pairs))
        for lo in range(0, pairs, chunk_size)
    ] if gammas else []
    total: Counter = Counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_chunk_args, jobs):
                total.update(part)
    else:
        for job in jobs:
            total.update(_tally_chunk(*job))
    return {t: total[t] for t in sorted(total, key=lambda t: t.as_tuple())}


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CountResult:
    """One topological type with its counts and moduli data.

    ``oracle_count`` is None when the oracle was not run or hit its budget.
    """

    arf_type: ArfTopologicalType
    m: int
    closed_count: int
    oracle_count: int | None
    moduli_dimension: int
    covering_base: SurfaceType

    @property
    def agrees(self) -> bool | None:
        if self.oracle_count is None:
            return None
        return self.oracle_count == self.closed_count


@dataclass
class CensusGroup:
    surface: SurfaceType
    entries: list[CountResult] = field(default_factory=list)
    oracle_status: str = "off"  # off | ok | budget

    @property
    def total(self) -> int:
        return sum(e.closed_count for e in self.entries)

    @property
    def oracle_total(self) -> int | None:
        if self.oracle_status != "ok":
            return None
        return sum(e.oracle_count for e in self.entries)


@dataclass
class CensusReport:
    g: int
    m: int
    groups: list[CensusGroup]
    skipped: list[SurfaceType]

    @property
    def totals(self) -> dict[tuple[int, int], int]:
        return {(gr.surface.k, gr.surface.epsilon): gr.total for gr in self.groups}

    @property
    def budget_exceeded(self) -> bool:
        return any(gr.oracle_status == "budget" for gr in self.groups)

    def group(self, k: int, epsilon: int) -> CensusGroup:
        for gr in self.groups:
            if (gr.surface.k, gr.surface.epsilon) == (k, epsilon):
                return gr
        raise KeyError((k, epsilon))


def census(
    g: int,
    m: int,
    with_oracle: bool = False,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> CensusReport:
    """Every topological type in genus ``g`` with its closed count.

    Surfaces of zero geometric genus go to ``skipped``. An oracle budget
    overrun leaves that group's oracle counts at None.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    groups, skipped = [], []
    for s in enumerate_surface_types(g):
        if not has_positive_geometric_genus(s):
            skipped.append(s)
            continue
        group = CensusGroup(s)
        tally = None
        if with_oracle:
            try:
                tally = oracle_count(s, m, budget=budget, workers=workers, chunk_size=chunk_size)
                group.oracle_status = "ok"
            except OracleBudgetExceeded as exc:
                log.warning("oracle skipped for %s: %s", s, exc)
                group.oracle_status = "budget"
        for t in enumerate_arf_types(s, m):
            group.entries.append(
                CountResult(
                    arf_type=t,
                    m=m,
                    closed_count=closed_count(t, m, s.epsilon),
                    oracle_count=None if tally is None else tally.get(t, 0),
                    moduli_dimension=moduli_dimension(g),
                    covering_base=s,
                )
            )
        groups.append(group)
    return CensusReport(g, m, groups, skipped)


# ---------------------------------------------------------------------------
# verification sweep


@dataclass(frozen=True)
class Mismatch:
    arf_type: ArfTopologicalType
    closed: int | None
    oracle: int


@dataclass
class VerifyRecord:
    surface: SurfaceType
    m: int
    n: int
    status: str  # pass | fail | budget
    mismatches: list[Mismatch] = field(default_factory=list)
    tally: dict | None = None


def _compare(s, m, tally, count_fn) -> list[Mismatch]:
    keys = set(enumerate_arf_types(s, m)) | set(tally)
    bad = []
    for t in sorted(keys, key=lambda t: t.as_tuple()):
        try:
            closed = count_fn(t, m, s.epsilon)
        except InvalidTypeError:
            closed = None
        if closed != tally.get(t, 0):
            bad.append(Mismatch(t, closed, tally.get(t, 0)))
    return bad


def verify_sweep(
    g_max: int,
    ms,
    *,
    all_n: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    count_fn: Callable | None = None,
) -> list[VerifyRecord]:
    """Compare oracle tallies with closed counts for all surfaces of genus 2..g_max.

    With ``all_n`` every decomposition is checked, and non-separating
    surfaces must also give identical tallies for every ``n``; a
    disagreement marks the later decompositions as failing.
    """
    if g_max < 2:
        raise ValueError("g_max must be >= 2")
    count_fn = count_fn or closed_count
    records = []
    for g in range(2, g_max + 1):
        for s in enumerate_surface_types(g):
            if not has_positive_geometric_genus(s):
                continue
            for m in ms:
                ds = decomposition_choices(s) if all_n else [default_decomposition(s)]
                first = None
                for d in ds:
                    try:
                        tally = oracle_count(
                            s, m, d, budget=budget, workers=workers, chunk_size=chunk_size
                        )
                    except OracleBudgetExceeded:
                        records.append(VerifyRecord(s, m, d.n, "budget"))
                        continue
                    bad = _compare(s, m, tally, count_fn)
                    if first is None:
                        first = tally
                    elif tally != first:
                        extra = [
                            Mismatch(t, first.get(t, 0), tally.get(t, 0))
                            for t in sorted(set(first) | set(tally), key=lambda t: t.as_tuple())
                            if first.get(t, 0) != tally.get(t, 0)
                        ]
                        bad.extend(extra)
                    records.append(VerifyRecord(s, m, d.n, "fail" if bad else "pass", bad, tally))
    return records


def default_budget_from_env(var: str = "KLEIN_SPIN_ORACLE_BUDGET") -> int:
    raw = os.environ.get(var)
    return int(raw) if raw else DEFAULT_BUDGET
