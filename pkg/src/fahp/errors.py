"""Exception types shared across the package."""


class FahpError(Exception):
    """Base class for all errors raised by this package."""


class IncompleteMatrixError(FahpError):
    """A pairwise comparison set is missing one or more pairs."""

    def __init__(self, missing_pairs):
        self.missing_pairs = sorted(missing_pairs)
        pairs = ", ".join(f"({i},{j})" for i, j in self.missing_pairs)
        super().__init__(f"missing pairwise judgments: {pairs}")


class DuplicatePairError(FahpError):
    """The same (i, j) pair was judged more than once."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"duplicate judgment for pair ({pair[0]},{pair[1]})")


class ShapeError(FahpError):
    """Matrices or vectors with incompatible orders or item ids."""


class ConsistencyError(FahpError):
    """A comparison matrix failed the consistency-ratio gate."""

    def __init__(self, node_id, report):
        self.node_id = node_id
        self.report = report
        super().__init__(
            f"judgments for node '{node_id}' are too inconsistent "
            f"(CR={report.cr:.4f}, threshold={report.threshold})"
        )


class InfeasibleBoostError(FahpError):
    """A sensitivity boost would push a weight to 1 or beyond."""

    def __init__(self, node_id, weight, factor):
        self.node_id = node_id
        self.weight = weight
        self.factor = factor
        super().__init__(
            f"cannot boost '{node_id}': {factor} x {weight:.4f} >= 1"
        )


class ProjectError(FahpError):
    """Base class for project-file problems."""


class ProjectParseError(ProjectError):
    """Malformed project file syntax."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ProjectVersionError(ProjectError):
    """Unsupported project schema version."""


class ProjectValidationError(ProjectError):
    """Well-formed project file that violates the schema contract."""

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)
