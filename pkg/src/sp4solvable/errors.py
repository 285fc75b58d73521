"""Exception types shared across the library."""


class Sp4Error(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(Sp4Error):
    """Root extraction was asked for the zero polynomial."""


class SingularMatrix(Sp4Error):
    """Inverse (or conjugation) of a singular matrix."""


class NotSemisimple(Sp4Error):
    """Cartan reduction applied to a non-semisimple element."""


class NotInBorel(Sp4Error):
    """Cartan reduction applied outside the fixed Borel subalgebra."""


class NotInSp4(Sp4Error):
    """Element classification applied outside sp(4)."""


class IrrationalSpectrum(Sp4Error):
    """Eigenvalue data is not rational; compare characteristic polynomials instead."""


class DependentInputs(Sp4Error):
    """Pencil stratification needs two independent nilpotents."""


class UnsupportedDimension(Sp4Error):
    """Structure-constant identification outside dimensions 1..4."""


class UnrecognizedFamily(Sp4Error):
    """Solvable structure outside the families occurring in the catalog."""


class OutOfCatalog(Sp4Error):
    """Class-label translation requested for a class the catalog does not carry."""


class ZeroParameter(Sp4Error):
    """A family parameter that must be nonzero was zero."""


class DimensionMismatch(Sp4Error):
    """Isomorphism verification with incompatible dimensions."""
