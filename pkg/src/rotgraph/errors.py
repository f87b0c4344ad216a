class GraphError(Exception):
    """Base class for every error raised by rotgraph."""


class InvalidArgument(GraphError, ValueError):
    pass


class NoSpanningTree(GraphError):
    pass


class ResourceLimit(GraphError):
    """An exhaustive routine was asked to work beyond its desk-scale cap."""


class InternalContradiction(GraphError):
    """A condition that holds for r-graphs failed, so the input was not one."""


class ScriptError(GraphError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"reduction step {index}: {cause}")
        self.index = index
        self.cause = cause
