"""Exception hierarchy shared by every module."""


class DihedralBesselError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DihedralBesselError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class WallError(DomainError):
    """A closed form was evaluated on a chamber wall where it degenerates."""


class ConvergenceError(DihedralBesselError, ArithmeticError):
    """A series did not reach its tolerance within the allowed number of terms."""


class QuadratureSizeError(DihedralBesselError, ValueError):
    """A quadrature rule has too few nodes to be exact for the integrand degree."""
