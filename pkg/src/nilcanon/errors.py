"""Exception hierarchy shared by all nilcanon modules."""


class NilcanonError(Exception):
    """Base class for every error raised by this package."""


# -- field construction and arithmetic ----------------------------------

class NonPrime(NilcanonError):
    pass


class NotPrimePower(NilcanonError):
    pass


class NoIrreducibleFound(NilcanonError):
    """No irreducible modulus of the requested degree exists; internal error."""


class DivisionByZero(NilcanonError, ZeroDivisionError):
    pass


class FieldMismatch(NilcanonError):
    pass


class WrongField(NilcanonError):
    pass


# -- matrices ------------------------------------------------------------

class ShapeMismatch(NilcanonError):
    pass


class NotSquare(NilcanonError):
    pass


class Singular(NilcanonError):
    pass


class ZeroScale(NilcanonError):
    pass


# -- partitions and classical types ---------------------------------------

class TypeSizeMismatch(NilcanonError):
    pass


class TypeA(NilcanonError):
    """Operation requires a type with a bilinear form; type A has none."""


class BadPartition(NilcanonError):
    """Partition is not the Jordan type of any orbit for the requested type."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# -- canonical form construction -------------------------------------------

class SymmetricFormImpossible(NilcanonError):
    pass


class CharacteristicTwo(NilcanonError):
    pass


class FieldTooSmall(NilcanonError):
    pass


class NotGeneric(NilcanonError):
    """An elimination pivot vanished; the input was not in the dense orbit."""


class EngineError(NilcanonError):
    """Internal inconsistency in the elimination engine (a defect, not user error)."""


# -- Springer morphisms -----------------------------------------------------

class NotUnipotent(NilcanonError):
    pass


class NotNilpotent(NilcanonError):
    pass


class AlphaInBaseField(NilcanonError):
    pass


# -- verification ------------------------------------------------------------

class NotSupported(NilcanonError):
    """Matrix has entries outside the block layout it was checked against."""
