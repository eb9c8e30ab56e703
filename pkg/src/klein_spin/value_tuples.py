"""Values of a real m-Arf function on a symmetric generating set.

A symmetric generating set of the fundamental group consists of
``a_i, b_i`` (i <= g_tilde) on one half, their mirror images ``a_i', b_i'``,
invariant curves ``c_1 .. c_{n-1}`` (ovals first, then twists) and bridges
``d_1 .. d_{n-1}`` joining each ``c_i`` to ``c_n``. A :class:`ValueTuple`
stores the function's residues on the independent members only. Mirror
values equal the originals and the value on ``c_n`` follows from the others.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arf_types import (
    ArfTopologicalType,
    NonSepEvenType,
    OddType,
    SepEvenType,
    normalize_swap,
    surface_of,
    swap,
    validate_arf_type,
)
from .errors import InvalidTypeError, MalformedTupleError
from .klein_surface import (
    DecompositionParams,
    SurfaceType,
    check_decomposition,
    default_decomposition,
)

__all__ = [
    "ValueTuple",
    "boundary_values",
    "validate_tuple",
    "arf_invariant_sum",
    "half_surface_invariant",
    "similarity_partition",
    "extract_type",
    "canonical_tuple",
]


@dataclass(frozen=True)
class ValueTuple:
    """Residues ``0..m-1`` on ``a_i``, ``b_i``, ``c_i`` and ``d_i``.

    Lengths must match the decomposition; the decomposition itself is assumed
    admissible for ``surface`` (see :func:`klein_surface.check_decomposition`).
    """

    m: int
    surface: SurfaceType
    decomp: DecompositionParams
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    delta_vals: tuple[int, ...]

    def __post_init__(self):
        gt, slots = self.decomp.g_tilde, self.decomp.n - 1
        for name, seq, want in (
            ("alpha", self.alpha, gt),
            ("beta", self.beta, gt),
            ("gamma", self.gamma, slots),
            ("delta_vals", self.delta_vals, slots),
        ):
            if len(seq) != want:
                raise MalformedTupleError(f"{name} has length {len(seq)}, expected {want}")
            for x in seq:
                if not 0 <= x < self.m:
                    raise MalformedTupleError(f"{name} entry {x} is not a residue mod {self.m}")

    @classmethod
    def build(cls, m, surface, decomp, alpha, beta, gamma, delta_vals) -> ValueTuple:
        """Reduce arbitrary integers mod ``m`` and check the decomposition."""
        check_decomposition(surface, decomp)
        red = lambda seq: tuple(int(x) % m for x in seq)  # noqa: E731
        return cls(m, surface, decomp, red(alpha), red(beta), red(gamma), red(delta_vals))

    @property
    def oval_slots(self) -> int:
        """How many of the stored ``gamma`` entries sit on ovals."""
        return min(self.surface.k, self.decomp.n - 1)


def _closing_value(v: ValueTuple) -> int:
    """Value on ``c_n``: forced by the oval sum on separating surfaces, 0 on a twist."""
    if v.surface.epsilon == 1:
        return (1 - v.surface.g - sum(v.gamma)) % v.m
    return 0


def boundary_values(v: ValueTuple) -> tuple[int, ...]:
    """Values on all ``n`` boundary curves ``c_1 .. c_n`` of one half."""
    return v.gamma + (_closing_value(v),)


def validate_tuple(v: ValueTuple) -> bool:
    """True iff ``v`` is admissible for a real m-Arf function."""
    m, g, k = v.m, v.surface.g, v.surface.k
    if m % 2:
        return all(x == 0 for x in v.gamma) and (g - 1) % m == 0
    half = m // 2
    nov = v.oval_slots
    if any(x not in (0, half) for x in v.gamma[:nov]):
        return False
    if any(x != 0 for x in v.gamma[nov:]):
        return False
    if v.surface.epsilon == 1:
        return _closing_value(v) in (0, half)
    return (sum(v.gamma[:k]) - (1 - g)) % m == 0


def _require_even(v: ValueTuple, what: str) -> None:
    if v.m % 2:
        raise MalformedTupleError(f"{what} is undefined for odd m={v.m}")


def arf_invariant_sum(v: ValueTuple) -> int:
    """Arf invariant of the whole function, sum of ``(1-gamma_i)(1-delta_i)`` mod 2."""
    _require_even(v, "the Arf invariant")
    return sum((1 - c) * (1 - d) for c, d in zip(v.gamma, v.delta_vals)) % 2


def half_surface_invariant(v: ValueTuple) -> int:
    """Arf invariant of the restriction to one half.

    Genus >= 2 halves give 0 as soon as a boundary value is even, otherwise
    the parity of ``sum (1-alpha_i)(1-beta_i)``. Genus-one halves give
    ``gcd(m, alpha_1, beta_1, c_1+1, ..., c_n+1)`` over the boundary values.
    """
    gt = v.decomp.g_tilde
    if v.m % 2:
        return 0 if gt >= 2 else 1
    bnd = boundary_values(v)
    if gt == 1:
        return math.gcd(v.m, v.alpha[0], v.beta[0], *(c + 1 for c in bnd))
    if any(c % 2 == 0 for c in bnd):
        return 0
    return sum((1 - a) * (1 - b) for a, b in zip(v.alpha, v.beta)) % 2


def similarity_partition(v: ValueTuple, anchor_parity: int = 1) -> tuple[int, int, int, int]:
    """Counts ``(k00, k01, k10, k11)`` of ovals by similarity class and value.

    Oval ``c_i`` shares the class of ``c_k`` (class 0) exactly when its
    bridge value is odd. ``c_k`` has no bridge and is given the value
    ``anchor_parity``. Passing 0 puts ``c_k`` in class 1 and mirrors the result.
    """
    if v.surface.epsilon != 1:
        raise MalformedTupleError("similarity classes exist on separating surfaces only")
    _require_even(v, "similarity of ovals")
    half = v.m // 2
    counts = [0, 0, 0, 0]
    for c, d in zip(boundary_values(v), v.delta_vals + (anchor_parity,)):
        cls = 0 if d % 2 else 1
        counts[2 * cls + (1 if c == half else 0)] += 1
    return tuple(counts)


def extract_type(v: ValueTuple) -> ArfTopologicalType:
    """Topological type of the real m-Arf function with values ``v``."""
    s = v.surface
    if v.m % 2:
        return OddType(s.g, s.k)
    if s.epsilon == 0:
        k1 = sum(1 for c in v.gamma[: s.k] if c == v.m // 2)
        return NonSepEvenType(s.g, arf_invariant_sum(v), s.k - k1, k1)
    return normalize_swap(SepEvenType(s.g, half_surface_invariant(v), *similarity_partition(v)))


def _handle_values(gt: int, first_pair: tuple[int, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha = (first_pair[0],) + (1,) * (gt - 1)
    beta = (first_pair[1],) + (1,) * (gt - 1)
    return alpha, beta


def canonical_tuple(
    t: ArfTopologicalType,
    m: int,
    d: DecompositionParams | None = None,
    epsilon: int | None = None,
) -> ValueTuple:
    """Values on a generating set that is canonical for type ``t``.

    ``epsilon`` is needed only for odd ``m``. Without ``d`` the default
    decomposition is used. For separating types the class holding ``c_k``
    must contain an oval of the value ``c_k`` receives, so ``t`` is swapped
    first when its class 0 lacks one.
    """
    s = surface_of(t, epsilon)
    if not validate_arf_type(t, m, s):
        raise InvalidTypeError(f"{t.as_tuple()} is not a topological type for m={m} on {s}")
    d = d if d is not None else default_decomposition(s)
    check_decomposition(s, d)
    gt, slots = d.g_tilde, d.n - 1

    if isinstance(t, OddType):
        alpha, beta = _handle_values(gt, (0, 1) if gt >= 2 else (1, 0))
        return ValueTuple.build(m, s, d, alpha, beta, (0,) * slots, (0,) * slots)

    half = m // 2
    if isinstance(t, NonSepEvenType):
        alpha, beta = _handle_values(gt, (0, 1) if gt >= 2 else (1, 0))
        gamma = (0,) * t.k0 + (half,) * t.k1 + (0,) * (slots - t.k)
        return ValueTuple.build(m, s, d, alpha, beta, gamma, (1 - t.delta,) * slots)

    dt = t.delta_tilde
    alpha, beta = _handle_values(gt, (0, 1 - dt) if gt >= 2 else (dt, 0))
    k = t.k
    if (t.k1 >= 1 and t.k01 == 0) or (t.k1 == 0 and t.k00 == 0):
        t = swap(t)
    gamma = ((0,) * t.k0 + (half,) * t.k1)[: k - 1]
    if t.k1 >= 1:
        delta = (0,) * t.k10 + (1,) * t.k00 + (0,) * t.k11 + (1,) * (k - 1 - t.k0 - t.k11)
    else:
        delta = (0,) * t.k10 + (1,) * (k - 1 - t.k10)
    return ValueTuple.build(m, s, d, alpha, beta, gamma, delta)
