"""Exception hierarchy shared by all treespec modules."""


class TreespecError(ValueError):
    """Base class for invalid-input errors raised by treespec."""


# graph construction
class LoopEdge(TreespecError):
    pass


class DuplicateEdge(TreespecError):
    pass


class VertexOutOfRange(TreespecError):
    pass


class InvalidOrder(TreespecError):
    pass


class EmptyEdgeSet(TreespecError):
    pass


class OrientationLengthMismatch(TreespecError):
    pass


class NotUnicyclic(TreespecError):
    pass


# graph6
class MalformedGraph6(TreespecError):
    pass


class OrderTooLarge(TreespecError):
    pass


# linear algebra
class NotSquare(TreespecError):
    pass


class NotSymmetric(TreespecError):
    pass


class NotMonic(TreespecError):
    pass


class IndexOutOfRange(TreespecError):
    pass


class InexactDivision(ArithmeticError):
    """An exact integer division left a remainder. Always an internal bug."""


# enumeration oracles
class TooLarge(TreespecError):
    pass


class ZeroTrees(TreespecError):
    pass


# checkers / cli
class SizeMismatch(TreespecError):
    pass


class InvalidFamily(TreespecError):
    pass


class InvalidSizeRange(TreespecError):
    pass


class ConfigError(TreespecError):
    pass
