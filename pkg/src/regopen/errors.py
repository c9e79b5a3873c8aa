"""Exception hierarchy shared by all regopen modules.

Input-validation errors subclass ValueError so callers can catch them
generically; ``VerificationError`` and its children signal that a law the
library promises to uphold was found violated (which a correct build never
triggers -- the exhaustive suites exist to demonstrate exactly that).
"""


class RegOpenError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(RegOpenError, ValueError):
    """A point index falls outside the ambient ground set {0..n-1}."""


class MissingEmptyOrFull(RegOpenError, ValueError):
    """A candidate open family lacks the empty set or the full ground set."""


class NotClosedUnderUnion(RegOpenError, ValueError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"family lacks the union of {sorted(a)} and {sorted(b)}")


class NotClosedUnderIntersection(RegOpenError, ValueError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"family lacks the intersection of {sorted(a)} and {sorted(b)}")


class EmptySubspace(RegOpenError, ValueError):
    """Subspace construction requires a nonempty point set."""


class SizeMismatch(RegOpenError, ValueError):
    """Two structures that must share a ground-set size do not."""


class NotAMetric(RegOpenError, ValueError):
    """A distance matrix violates one of the metric axioms."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"metric axiom {axiom!r} fails at {witness}")


class NotALattice(RegOpenError, ValueError):
    """An order relation fails to be a lattice (missing inf/sup or bad order)."""


class NotOpen(RegOpenError, ValueError):
    """An argument required to be open is not."""


class NotDense(RegOpenError, ValueError):
    """An argument required to be dense is not."""


class NotRegularOpen(RegOpenError, ValueError):
    """An argument required to be regular open is not."""


class ContainmentHolds(RegOpenError, ValueError):
    """separating_witness was called with U contained in V: no witness is owed."""


class NotABasis(RegOpenError, ValueError):
    """A family fails the basis property (some open is not a union of members)."""


class NotInclusionPreserving(RegOpenError, ValueError):
    def __init__(self, u, v):
        self.witness = (u, v)
        super().__init__(
            f"bijection does not preserve inclusion on the pair {sorted(u)}, {sorted(v)}"
        )


class NotBoolean(RegOpenError, ValueError):
    """A lattice expected to be a Boolean algebra fails a Boolean law."""


class SizeGuardExceeded(RegOpenError, ValueError):
    """A combinatorial guard (ground-set size limit) was exceeded."""


class UnknownSuite(RegOpenError, ValueError):
    """run_suite was asked for a suite name that does not exist."""


class VerificationError(RegOpenError):
    """A verified mathematical claim failed; carries the counterexample."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: {witness}")


class CompositionNotIdentity(VerificationError):
    """Round-tripping the restriction/extension maps moved an element."""


class CompositionNotIso(VerificationError):
    """The composed transfer map is not an order isomorphism."""


class CoresNotHomeomorphic(RegOpenError, ValueError):
    """The supplied core identification is not a homeomorphism."""
