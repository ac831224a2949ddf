"""Exception types shared across the package."""


class CommGraphError(Exception):
    """Base class for all errors raised by this package."""


# field layer

class NotPrime(CommGraphError):
    pass


class CapExceeded(CommGraphError):
    pass


class DivisionByZero(CommGraphError):
    pass


class SpecMismatch(CommGraphError):
    pass


class ZeroElement(CommGraphError):
    pass


class NoSuchOrder(CommGraphError):
    pass


# group layer

class BackendMismatch(CommGraphError):
    pass


class NotMember(CommGraphError):
    pass


class NotNormal(CommGraphError):
    pass


# commuting graph layer

class EmptyGraph(CommGraphError):
    pass


class NotAVertex(CommGraphError):
    pass


# witness family layer

class NoSuchParams(CommGraphError):
    pass


class EigenvalueClash(CommGraphError):
    pass


class CheckFailed(CommGraphError):
    def __init__(self, clause, detail=""):
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause
        self.detail = detail


class NotNormalizing(CommGraphError):
    pass


class NotInD(CommGraphError):
    pass


class SymbolicFailure(CommGraphError):
    pass


class PathBroken(CommGraphError):
    def __init__(self, edge_index, detail=""):
        super().__init__(f"edge {edge_index}: {detail}" if detail else f"edge {edge_index}")
        self.edge_index = edge_index
