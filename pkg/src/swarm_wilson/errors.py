"""Exception hierarchy. Every error carries a short machine-readable code."""


class SwarmError(Exception):
    code = "SwarmError"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


class GraphError(SwarmError):
    code = "GraphError"


class MalformedLine(GraphError):
    code = "MalformedLine"


class SelfLoop(GraphError):
    code = "SelfLoop"


class DuplicateEdge(GraphError):
    code = "DuplicateEdge"


class Disconnected(GraphError):
    code = "Disconnected"


class VertexOutOfRange(GraphError):
    code = "VertexOutOfRange"


class NotAdjacent(GraphError):
    code = "NotAdjacent"


class ConfigError(SwarmError):
    code = "ConfigError"


class DuplicateLabel(ConfigError):
    code = "DuplicateLabel"


class DuplicateVertex(ConfigError):
    code = "DuplicateVertex"


class LabelGap(ConfigError):
    code = "LabelGap"


class DisconnectedSupport(ConfigError):
    code = "DisconnectedSupport"


class GraphMismatch(ConfigError):
    code = "GraphMismatch"


class LabelCountMismatch(ConfigError):
    code = "LabelCountMismatch"


class MalformedMove(SwarmError):
    code = "MalformedMove"


class InvalidStep(SwarmError):
    code = "InvalidStep"

    def __init__(self, index, reason=""):
        super().__init__(f"move {index} is invalid: {reason}".rstrip(": "), index=index)
        self.index = index


class NotSaturated(SwarmError):
    code = "NotSaturated"


class Saturated(SwarmError):
    code = "Saturated"


class BudgetExceeded(SwarmError):
    code = "BudgetExceeded"

    def __init__(self, visited):
        super().__init__(f"state budget exceeded after {visited} states", visited=visited)
        self.visited = visited


class BadSupport(SwarmError):
    code = "BadSupport"


class NotInGroup(SwarmError):
    code = "NotInGroup"


class MissingConfig(ConfigError):
    code = "MissingConfig"
