"""Exception hierarchy shared by all modules."""


class MaxOrdersError(Exception):
    pass


class InvalidInput(MaxOrdersError, ValueError):
    pass


class InvalidGenus(InvalidInput):
    """Raised for genus values the formulas do not cover (g <= 1, or wrong parity)."""


class Infeasible(MaxOrdersError):
    pass


class SearchTooLarge(MaxOrdersError):
    pass


class GroupTooLarge(MaxOrdersError):
    pass


class NotInvariant(MaxOrdersError):
    pass
