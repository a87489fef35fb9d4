"""Error types shared across the package."""


class AgeditError(Exception):
    """Base class for package-specific failures."""


class ConfigError(AgeditError):
    """Invalid configuration value (bad resolution, batch size, weights...)."""


class SchemaError(AgeditError):
    """Attribute schema mismatch: unknown name, wrong vector length, order drift."""


class ShapeError(AgeditError):
    """Array/tensor shape incompatible with the operation."""


class ManifestParseError(AgeditError):
    """Malformed manifest or label file; carries the offending line number."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where += f" [{path}"
            where += f":{line}]" if line is not None else "]"
        super().__init__(message + where)


class CheckpointError(AgeditError):
    """Checkpoint directory unreadable or its manifest does not match."""


class RegistryError(AgeditError):
    """Model registry incomplete or internally inconsistent."""


class TrainingDiverged(AgeditError):
    """A loss went non-finite; carries a diagnostic snapshot of the step."""

    def __init__(self, message, snapshot=None):
        self.snapshot = snapshot or {}
        super().__init__(message)
