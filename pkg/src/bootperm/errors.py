"""Exception types shared across the package."""


class BootpermError(Exception):
    pass


class ParseError(BootpermError, ValueError):
    pass


class BudgetExceeded(BootpermError):
    """An exhaustive search was asked for beyond its configured size limit."""


class CapExceeded(BudgetExceeded):
    pass


class PositionOutOfRange(BootpermError, IndexError):
    pass


class NotFinal(BootpermError):
    pass


class CellNotRed(BootpermError, ValueError):
    pass


class MalformedTree(BootpermError, ValueError):
    pass


class NotSeparable(BootpermError, ValueError):
    pass


class InvalidStep(BootpermError, ValueError):
    pass


class MalformedDiagram(BootpermError, ValueError):
    pass
