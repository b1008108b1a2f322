"""Exception hierarchy shared by every module."""


class GarsideKitError(Exception):
    """Base class for all errors raised by garside_kit."""


class MalformedRelation(GarsideKitError):
    pass


class DuplicateGenerator(GarsideKitError):
    pass


class NoLengthFunction(GarsideKitError):
    """The presentation is not homogeneous, so class-exhaustion is unsound."""


class NotRightComplemented(GarsideKitError):
    pass


class CubeConditionFailed(GarsideKitError):
    pass


class BadParameters(GarsideKitError):
    pass


class NotASimple(GarsideKitError):
    pass


class Inconclusive(GarsideKitError):
    """A bounded computation ran out of budget. Never means "false"."""


class CapExceeded(Inconclusive):
    def __init__(self, cap, what="equivalence class"):
        super().__init__(f"{what} exceeded cap of {cap} members")
        self.cap = cap


class Diverged(Inconclusive):
    def __init__(self, steps):
        super().__init__(f"reversing did not terminate within {steps} steps")
        self.steps = steps


class NotGarsideElement(GarsideKitError):
    REASONS = ("divisor sets differ", "generator not a divisor", "lattice failure")

    def __init__(self, reason, detail=""):
        assert reason in self.REASONS, reason
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail
