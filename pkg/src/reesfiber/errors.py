"""Exception hierarchy.

``InputError`` covers malformed or out-of-range input (CLI exit code 2).
``ConsistencyError`` covers well-formed input that contradicts one of the
structural results the classifiers rely on (CLI exit code 1); its ``rule``
names the result that was violated.
"""


class ReesfiberError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ReesfiberError, ValueError):
    """Malformed input: unknown ids, bad JSON, non-effective divisors, ..."""


class ConsistencyError(ReesfiberError):
    """Input that is well formed but violates a structural constraint."""

    def __init__(self, message: str, rule: str | None = None):
        self.rule = rule
        if rule is not None:
            message = f"{message} (violates {rule})"
        super().__init__(message)


class SBLValidationError(ConsistencyError):
    """An explicit stable-base-locus annotation fails a necessary condition."""


# Rules quoted in error messages, keyed by the condition they enforce.
RULE_NEGATIVE_CURVE = "Lemma 5"        # sBL curves all have zero pairing with Delta
RULE_ADJACENCY = "Lemma 2"             # curve meeting sBL outside it pairs negatively
RULE_WHOLE_FIBER = "Theorem 2"         # all-zero pairing + nonempty sBL => whole fiber
