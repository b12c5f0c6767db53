"""Exception types shared across the package."""


class MultirankError(Exception):
    """Base class for every package-specific error."""


class DimensionMismatchError(MultirankError, ValueError):
    """Operands do not conform (vector length vs. matrix shape, unequal lengths)."""


class DegenerateRowError(MultirankError, ValueError):
    """A row scaling is impossible: zero or negative entry where a reciprocal is needed."""


class DegenerateBlockError(MultirankError, ValueError):
    """A block of the coupled model has a structurally zero row and cannot be normalized."""


class NormalizationError(MultirankError, ValueError):
    """Vector has no L1 mass and cannot be normalized."""


class ModelSpecError(MultirankError, ValueError):
    """Invalid model/weighting combination or malformed weight inputs."""


class InputFormatError(MultirankError, ValueError):
    """Malformed input file. Carries the path and 1-based line number when known."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        if path is not None and line is not None:
            message = f"{path}:{line}: {message}"
        elif path is not None:
            message = f"{path}: {message}"
        super().__init__(message)


class DivergenceError(MultirankError, RuntimeError):
    """NaN/Inf appeared in solver iterates. Carries the partial stage report."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage
