"""Exception classes shared across choicekit."""


class ChoiceKitError(Exception):
    """Base class for all errors raised by choicekit."""


class DimensionError(ChoiceKitError, ValueError):
    """Vectors of different dimension were combined."""


class NotBlunt(ChoiceKitError):
    """The generators span a cone that contains the zero vector."""


class EmptyOptionSet(ChoiceKitError, ValueError):
    pass


class EmptyOrderSet(ChoiceKitError, ValueError):
    pass


class PremiseFree(ChoiceKitError, ValueError):
    """Monotonification only applies to rules with at least one premise."""


class UnknownScheme(ChoiceKitError, ValueError):
    pass


class InvalidProbe(ChoiceKitError, ValueError):
    pass


class InconsistentAssessment(ChoiceKitError):
    """No proper set of options makes every assessed set rejected."""


class NotBinary(ChoiceKitError):
    """The choice function is not determined by its pairwise choices."""

    def __init__(self, message, option_set=None, option=None):
        super().__init__(message)
        self.option_set = option_set
        self.option = option


class ResourceLimit(ChoiceKitError):
    """Base class for configured size limits being exceeded."""


class CombinatorialLimit(ResourceLimit):
    pass


class VariableLimit(ResourceLimit):
    pass
