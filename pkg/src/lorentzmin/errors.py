"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed input: bad signature, arity, parameter, or spec."""


class SignatureMismatchError(InvalidInputError):
    """Operands carry different pseudo-Euclidean signatures."""


class ConstraintViolationError(InvalidInputError):
    """A curve-family parameter set makes a radicand negative or a
    denominator vanish.  ``radicand`` names the offending expression."""

    def __init__(self, radicand: str, value: float):
        self.radicand = radicand
        self.value = value
        super().__init__(f"radicand {radicand} is negative (= {value:.6g})")


class PremiseError(InvalidInputError):
    """A surface constructor's curve premises failed.  ``failed`` lists
    the condition ids that did not hold."""

    def __init__(self, failed: list[str]):
        self.failed = list(failed)
        super().__init__("premise check failed: " + ", ".join(self.failed))


class DegenerateMetricError(InvalidInputError):
    """The induced metric is not in Lorentz null-coordinate form
    (g_xy >= 0 or a singular Gram matrix)."""


class DomainError(InvalidInputError):
    """Evaluation point outside the declared domain, too close to a
    singular locus, or a domain that touches one."""
