"""Topological types of real m-Arf functions.

Three shapes occur, depending on the parity of ``m`` and on whether the
surface is separating:

* ``OddType(g, k)`` for odd ``m``;
* ``NonSepEvenType(g, delta, k0, k1)`` for even ``m`` on non-separating surfaces,
  where ``k_j`` counts ovals with value ``j*m/2``;
* ``SepEvenType(g, delta_tilde, k00, k01, k10, k11)`` for even ``m`` on
  separating surfaces, where ``k_ci`` counts ovals in similarity class ``c``
  with value ``i*m/2``. The two classes carry no intrinsic labels, so the
  type is only defined up to exchanging them; :func:`normalize_swap` picks a
  representative.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .errors import InconsistentTypeError, MalformedTypeError, OutOfScopeError
from .klein_surface import SurfaceType, has_positive_geometric_genus

__all__ = [
    "OddType",
    "NonSepEvenType",
    "SepEvenType",
    "ArfTopologicalType",
    "type_class_for",
    "surface_of",
    "admissible_half_invariants",
    "validate_arf_type",
    "enumerate_arf_types",
    "normalize_swap",
    "swap",
    "is_swap_symmetric",
    "global_arf_invariant",
    "type_from_tuple",
]


@dataclass(frozen=True, order=True)
class OddType:
    g: int
    k: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.g, self.k)


@dataclass(frozen=True, order=True)
class NonSepEvenType:
    g: int
    delta: int
    k0: int
    k1: int

    @property
    def k(self) -> int:
        return self.k0 + self.k1

    def as_tuple(self) -> tuple[int, ...]:
        return (self.g, self.delta, self.k0, self.k1)


@dataclass(frozen=True, order=True)
class SepEvenType:
    g: int
    delta_tilde: int
    k00: int
    k01: int
    k10: int
    k11: int

    @property
    def k0(self) -> int:
        return self.k00 + self.k10

    @property
    def k1(self) -> int:
        return self.k01 + self.k11

    @property
    def k(self) -> int:
        return self.k00 + self.k01 + self.k10 + self.k11

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.k00, self.k01, self.k10, self.k11)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.g, self.delta_tilde, self.k00, self.k01, self.k10, self.k11)


ArfTopologicalType = Union[OddType, NonSepEvenType, SepEvenType]


def type_class_for(m: int, epsilon: int) -> type:
    if m % 2:
        return OddType
    return SepEvenType if epsilon == 1 else NonSepEvenType


def type_from_tuple(values, m: int, epsilon: int) -> ArfTopologicalType:
    """Build the variant matching ``(m, epsilon)`` from a flat integer sequence."""
    cls = type_class_for(m, epsilon)
    values = tuple(int(v) for v in values)
    try:
        return cls(*values)
    except TypeError:
        raise MalformedTypeError(
            f"{cls.__name__} takes {len(cls.__dataclass_fields__)} integers, got {len(values)}"
        ) from None


def surface_of(t: ArfTopologicalType, epsilon: int | None = None) -> SurfaceType:
    """The Klein surface type a topological type lives on.

    Even types determine ``epsilon`` themselves; odd ones need it passed in.
    """
    if isinstance(t, SepEvenType):
        return SurfaceType(t.g, t.k, 1)
    if isinstance(t, NonSepEvenType):
        return SurfaceType(t.g, t.k, 0)
    if epsilon is None:
        raise MalformedTypeError("odd-m types need epsilon to name their surface")
    return SurfaceType(t.g, t.k, epsilon)


def _check_modulus(m: int) -> None:
    if m < 2:
        raise MalformedTypeError(f"modulus must be >= 2, got {m}")


def _check_shape(t: ArfTopologicalType, m: int, s: SurfaceType) -> None:
    _check_modulus(m)
    expected = type_class_for(m, s.epsilon)
    if not isinstance(t, expected):
        raise MalformedTypeError(
            f"{type(t).__name__} does not apply to m={m}, eps={s.epsilon}; "
            f"expected {expected.__name__}"
        )
    if t.g != s.g:
        raise MalformedTypeError(f"type genus {t.g} != surface genus {s.g}")
    fields = t.as_tuple()[1:] if isinstance(t, OddType) else t.as_tuple()[2:]
    if any(c < 0 for c in fields):
        raise MalformedTypeError(f"negative oval count in {t.as_tuple()}")
    if t.k != s.k:
        raise MalformedTypeError(f"type has {t.k} ovals, surface has {s.k}")
    if isinstance(t, NonSepEvenType) and t.delta not in (0, 1):
        raise MalformedTypeError(f"Arf invariant must be 0 or 1, got {t.delta}")
    if isinstance(t, SepEvenType) and t.delta_tilde not in (0, 1, 2):
        raise MalformedTypeError(f"half-surface invariant must be 0, 1 or 2, got {t.delta_tilde}")
    if not has_positive_geometric_genus(s):
        raise OutOfScopeError(f"surface {s} has zero geometric genus: outside theorem scope")


def _oval_congruence(k1: int, m: int, g: int) -> bool:
    # k1 * m/2 == 1 - g (mod m)
    return (k1 * (m // 2) - (1 - g)) % m == 0


def admissible_half_invariants(g: int, k: int, k0: int, m: int) -> tuple[int, ...]:
    """Values the half-surface invariant may take for a separating surface, even ``m``."""
    forced = m % 4 == 0 or k0 != 0
    if g > k + 1:
        return (0,) if forced else (0, 1)
    return (1,) if forced else (1, 2)


def validate_arf_type(t: ArfTopologicalType, m: int, s: SurfaceType) -> bool:
    """True iff ``t`` is the topological type of some real m-Arf function on ``s``.

    Shape problems (wrong variant, genus or oval count, zero geometric genus)
    raise; only the existence conditions themselves produce ``False``.
    """
    _check_shape(t, m, s)
    if isinstance(t, OddType):
        return (t.g - 1) % m == 0
    if not _oval_congruence(t.k1, m, t.g):
        return False
    if isinstance(t, NonSepEvenType):
        return True
    return t.delta_tilde in admissible_half_invariants(t.g, t.k, t.k0, m)


def swap(t: SepEvenType) -> SepEvenType:
    """Exchange the labels of the two similarity classes."""
    return replace(t, k00=t.k10, k01=t.k11, k10=t.k00, k11=t.k01)


def normalize_swap(t: SepEvenType) -> SepEvenType:
    """Representative whose ``(k00, k01, k10, k11)`` is lexicographically smallest."""
    other = swap(t)
    return other if other.counts < t.counts else t


def is_swap_symmetric(t: ArfTopologicalType) -> bool:
    return isinstance(t, SepEvenType) and (t.k00, t.k01) == (t.k10, t.k11)


def enumerate_arf_types(s: SurfaceType, m: int) -> list[ArfTopologicalType]:
    """All topological types on ``s`` for modulus ``m``, sorted; separating ones normalized."""
    _check_modulus(m)
    if not has_positive_geometric_genus(s):
        raise OutOfScopeError(f"surface {s} has zero geometric genus: outside theorem scope")
    g, k = s.g, s.k
    if m % 2:
        return [OddType(g, k)] if (g - 1) % m == 0 else []
    found: set = set()
    for k1 in range(k + 1):
        if not _oval_congruence(k1, m, g):
            continue
        k0 = k - k1
        if s.epsilon == 0:
            found.update(NonSepEvenType(g, delta, k0, k1) for delta in (0, 1))
            continue
        for dt in admissible_half_invariants(g, k, k0, m):
            for k00 in range(k0 + 1):
                for k01 in range(k1 + 1):
                    found.add(normalize_swap(SepEvenType(g, dt, k00, k01, k0 - k00, k1 - k01)))
    return sorted(found, key=lambda t: t.as_tuple())


def global_arf_invariant(t: SepEvenType, m: int) -> int:
    """Arf invariant of the whole function, read off a separating type.

    Uses the class-0 counts; the class-1 counts must give the same parity,
    otherwise the type is not realisable and :class:`InconsistentTypeError`
    is raised.
    """
    if m % 2:
        raise MalformedTypeError("the global Arf invariant is defined for even m only")
    if m % 4 == 2:
        first, second = t.k00, t.k10
    else:
        first, second = t.k00 + t.k01, t.k10 + t.k11
    if (first - second) % 2:
        raise InconsistentTypeError(
            f"class parities disagree for {t.as_tuple()} at m={m}: {first} vs {second}"
        )
    return first % 2
