class EffsqError(Exception):
    """Base class for input errors raised by this package."""


class IllDefined(EffsqError):
    """A matrix does not send some source relation into the target's relations."""

    def __init__(self, relation_index: int, message: str = ""):
        self.relation_index = relation_index
        super().__init__(message or f"relation {relation_index} of the source is not killed")


class ShapeError(EffsqError):
    pass


class ObjectMismatch(EffsqError):
    """Endpoints that must be the same presentation are not."""


class NotCommutative(EffsqError):
    pass


class InfiniteGroup(EffsqError):
    pass


class BoundExceeded(EffsqError):
    pass


class PreconditionError(EffsqError):
    pass


class DimensionError(EffsqError):
    pass
