"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class KleinSpinError(Exception):
    """Base class for every error raised by this package."""


class NonHyperbolicError(KleinSpinError, ValueError):
    """Genus below 2: the surface is not hyperbolic."""


class InvalidSurfaceError(KleinSpinError, ValueError):
    """A (g, k, eps) triple that violates Weichold's conditions."""


class OutOfScopeError(KleinSpinError):
    """The surface has zero geometric genus, so the classification does not apply."""


class MalformedTypeError(KleinSpinError, ValueError):
    """A topological type that does not match the surface or modulus it is used with."""


class InvalidTypeError(KleinSpinError, ValueError):
    """A well-formed topological type that fails the existence conditions."""


class InconsistentTypeError(KleinSpinError):
    """The two parity readings of the global Arf invariant disagree."""


class MalformedTupleError(KleinSpinError, ValueError):
    """A value tuple whose sequence lengths or residues do not fit its decomposition."""


class OracleBudgetExceeded(KleinSpinError):
    """The brute-force enumeration would visit more tuples than allowed."""

    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"enumeration needs {size} tuples, budget is {budget}")
