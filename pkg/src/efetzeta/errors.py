"""Exception taxonomy shared by all modules."""


class EfetZetaError(Exception):
    """Base class for all library errors."""


class PoleProximity(EfetZetaError):
    """Evaluation point is within the pole guard of a pole."""


class NonConvergent(EfetZetaError):
    """Integral or series does not converge for the given parameters."""


class ToleranceNotMet(EfetZetaError):
    """Adaptive refinement exhausted its budget before reaching tolerance."""


class DomainError(EfetZetaError):
    """Arguments violate a convergence / admissibility condition."""


class InsufficientSamples(EfetZetaError):
    """Not enough samples for the requested extrapolation order."""


class NotACharacter(EfetZetaError):
    """Value table violates a Dirichlet-character axiom."""


class PrimitiveMismatch(EfetZetaError):
    """Numeric exceptional set disagrees with the gcd-based set for a primitive character."""


class DivisionNearZero(EfetZetaError):
    """Quotient evaluated too close to a denominator zero."""


class NearNode(EfetZetaError):
    """Series evaluation requested too close to an interpolation node."""


class IrrationalV(EfetZetaError):
    """The series tail closure requires a rational shift parameter."""


class DegenerateFit(EfetZetaError):
    """Regression input has no resolvable decay (residuals dominate)."""
