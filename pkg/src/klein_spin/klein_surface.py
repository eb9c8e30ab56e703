"""Topological types of Klein surfaces and their decompositions into two halves.

A Klein surface is recorded by its Weichold triple ``(g, k, eps)``: the genus
of the complex double, the number of ovals, and whether the real part
separates (``eps = 1``) or not (``eps = 0``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSurfaceError, NonHyperbolicError, OutOfScopeError

__all__ = [
    "SurfaceType",
    "DecompositionParams",
    "validate_surface_type",
    "geometric_genus",
    "has_positive_geometric_genus",
    "enumerate_surface_types",
    "decomposition_choices",
    "default_decomposition",
    "check_decomposition",
    "moduli_dimension",
]


def _require_hyperbolic(g: int) -> None:
    if g < 2:
        raise NonHyperbolicError(f"non-hyperbolic: genus {g} < 2")


def validate_surface_type(g: int, k: int, epsilon: int) -> bool:
    """Weichold's realisability test for ``(g, k, epsilon)``.

    Raises :class:`NonHyperbolicError` for ``g < 2`` instead of returning False.
    """
    _require_hyperbolic(g)
    if epsilon == 1:
        return 1 <= k <= g + 1 and (k - g - 1) % 2 == 0
    if epsilon == 0:
        return 0 <= k <= g
    return False


@dataclass(frozen=True, order=True)
class SurfaceType:
    """Weichold triple of a hyperbolic Klein surface. Invalid triples cannot be built."""

    g: int
    k: int
    epsilon: int

    def __post_init__(self):
        if not validate_surface_type(self.g, self.k, self.epsilon):
            raise InvalidSurfaceError(
                f"({self.g}, {self.k}, {self.epsilon}) is not a Klein surface type"
            )

    @property
    def separating(self) -> bool:
        return self.epsilon == 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.g, self.k, self.epsilon)

    def __str__(self):
        return f"({self.g},{self.k},{self.epsilon})"


@dataclass(frozen=True, order=True)
class DecompositionParams:
    """Number ``n`` of invariant curves cut along and genus ``g_tilde`` of each half."""

    n: int
    g_tilde: int


def geometric_genus(s: SurfaceType) -> int:
    if s.epsilon == 1:
        return (s.g + 1 - s.k) // 2
    return (s.g - s.k) // 2


def has_positive_geometric_genus(s: SurfaceType) -> bool:
    if s.epsilon == 1:
        return s.k <= s.g - 1
    return s.k <= s.g - 2


def moduli_dimension(g: int) -> int:
    """Real dimension of the moduli space of Klein surfaces of genus ``g``."""
    return 3 * g - 3


def enumerate_surface_types(g: int) -> list[SurfaceType]:
    """All Klein surface types of genus ``g``, separating first, then by oval count."""
    _require_hyperbolic(g)
    out = []
    for eps in (1, 0):
        for k in range(0, g + 2):
            if validate_surface_type(g, k, eps):
                out.append(SurfaceType(g, k, eps))
    return out


def _require_positive(s: SurfaceType) -> None:
    if not has_positive_geometric_genus(s):
        raise OutOfScopeError(f"surface {s} has zero geometric genus: outside theorem scope")


def decomposition_choices(s: SurfaceType) -> list[DecompositionParams]:
    """Admissible ``n`` (ascending) for cutting ``s`` into two halves of genus >= 1.

    Separating surfaces are cut along their ovals only. Non-separating ones
    take ``n`` in ``k+1 .. g-1`` with ``n = g-1 (mod 2)``, so each half keeps
    at least one handle.
    """
    _require_positive(s)
    if s.epsilon == 1:
        ns = [s.k]
    else:
        ns = [n for n in range(s.k + 1, s.g) if (n - s.g + 1) % 2 == 0]
    return [DecompositionParams(n, (s.g + 1 - n) // 2) for n in ns]


def default_decomposition(s: SurfaceType) -> DecompositionParams:
    """Smallest admissible ``n``, i.e. the halves of largest genus."""
    return decomposition_choices(s)[0]


def check_decomposition(s: SurfaceType, d: DecompositionParams) -> None:
    """Raise :class:`InvalidSurfaceError` unless ``d`` is admissible for ``s``."""
    if d not in decomposition_choices(s):
        raise InvalidSurfaceError(f"n={d.n}, g_tilde={d.g_tilde} is not a decomposition of {s}")
