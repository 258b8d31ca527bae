"""Exception types shared across the library."""


class QuivrepError(Exception):
    """Base class for all library errors."""


class AlgebraMismatch(QuivrepError):
    """Operands live over different algebras."""


class NotAdmissible(QuivrepError):
    """A relation violates admissibility (length < 2 or inhomogeneous)."""


class BoundExceeded(QuivrepError):
    """The relation ideal does not annihilate all paths at the Loewy bound."""


class NotMono(QuivrepError):
    """A map required to be injective is not."""


class NotEpi(QuivrepError):
    """A map required to be surjective is not."""


class ZeroCokernel(QuivrepError):
    """A ladder seed has zero cokernel, so there is no basis module."""


class ZeroModule(QuivrepError):
    """The operation is undefined on the zero module."""


class OutOfRange(QuivrepError):
    """Requested truncation stage exceeds the built depth."""


class EdgeMismatch(QuivrepError):
    """Squares cannot be composed: the shared edge does not match."""


class NotExact(QuivrepError):
    """A sequence fails exactness; carries the failing vertex and ranks."""


class NotNilpotent(QuivrepError):
    """The steering map is not nilpotent."""


class BelowIndex(QuivrepError):
    """Splitting witness requested below the nilpotency index."""


class NotRigid(QuivrepError):
    """A module required to have no self-extensions has some."""


class NotSimple(QuivrepError):
    """The given submodule is not simple."""


class NotSelfExtension(QuivrepError):
    """The sequence is not a self-extension (end terms differ)."""


class NotStandard(QuivrepError):
    """The extension class does not factor through the projective cover."""


class Inconclusive(QuivrepError):
    """The decision procedure could neither certify nor refute."""


class ParseError(QuivrepError):
    """Malformed input file; message carries the line number."""


class UsageError(QuivrepError):
    """Bad command-line usage (exit status 2)."""
