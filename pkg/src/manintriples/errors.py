"""Exception hierarchy.  Every library error derives from :class:`ManinError`."""


class ManinError(ValueError):
    """Base class for all mathematical and contract errors raised here."""


class DimensionError(ManinError):
    pass


class NotInvolutiveError(ManinError):
    pass


class InvalidSpecError(ManinError):
    """Unknown family or a rank that the family does not admit."""


class RootNotFoundError(ManinError):
    pass


class AutomorphismError(ManinError):
    """A map that should respect brackets does not."""


class IncompatibleSignsError(ManinError):
    pass


class PreconditionError(ManinError):
    pass


class ConditionIVError(ManinError):
    pass


class ConditionVError(ManinError):
    pass


class NotSubalgebraError(ManinError):
    pass


class NotBijectiveError(ManinError):
    pass


class CocycleError(ManinError):
    pass


class NotSkewError(ManinError):
    pass


class NotInnerError(ManinError):
    pass


class NotOuterError(ManinError):
    pass


class NotIsotropicError(ManinError):
    pass


class NotComplementError(ManinError):
    pass


class VariantError(ManinError):
    pass


class InconsistencyError(ManinError):
    """Two formulations of the same predicate disagreed; signals a bug."""


class SchemaError(ManinError):
    """A serialized document does not match the expected layout."""
