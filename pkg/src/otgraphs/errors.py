"""Exception types raised across the package."""


class OTGraphError(Exception):
    pass


class CollinearOrDegenerate(OTGraphError, ValueError):
    """Three points are collinear or two points coincide."""


class DuplicateIndex(OTGraphError, ValueError):
    pass


class CoordinateRange(OTGraphError, ValueError):
    """A coordinate does not fit in a signed 32-bit integer."""


class BrokenTrace(OTGraphError):
    """A proof step references an antecedent that is not known at replay time."""


class NotAnOTGraph(OTGraphError, ValueError):
    pass


class NotFound(OTGraphError, LookupError):
    """No OT-graph exists within the requested edge budget."""


class ConstructionFailed(OTGraphError):
    pass


class DegenerateInstance(OTGraphError):
    pass


class FormatError(OTGraphError, ValueError):
    """Malformed text input (points, triples, graphs, reports)."""


class SizeMismatch(OTGraphError, ValueError):
    pass


class DegenerateRecord(OTGraphError, ValueError):
    def __init__(self, index, message="collinear triple"):
        super().__init__(f"record {index}: {message}")
        self.index = index
