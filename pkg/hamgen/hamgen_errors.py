class GraphError(ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class UndefinedDegreeError(GraphError):
    pass


class WidthMismatchError(ValueError):
    pass


class SpanError(ValueError):
    pass


class ParityError(ValueError):
    pass


class InapplicableError(ValueError):
    pass


class UsageError(ValueError):
    pass


class CapacityError(RuntimeError):
    pass


class ConstructionError(RuntimeError):
    pass
