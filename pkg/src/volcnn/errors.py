"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: usage problems -> 1, data problems -> 2,
numeric failures -> 3.
"""


class VolcnnError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(VolcnnError, ValueError):
    """Tensor/layer geometry is inconsistent (dim mismatch, degenerate output)."""


class ParameterError(VolcnnError, ValueError):
    """A hyperparameter or argument is outside its documented domain."""


class StateError(VolcnnError, RuntimeError):
    """An operation was called in the wrong order (e.g. backward before forward)."""


class NumericError(VolcnnError, ArithmeticError):
    """A computation produced non-finite values or an empty reduction."""


class DataError(VolcnnError):
    """Dataset, manifest or file-format problem."""


class StudyExcluded(DataError):
    """A study failed label-quality checks and must be dropped from the dataset."""

    def __init__(self, study_id, reason):
        super().__init__(f"study {study_id!r} excluded: {reason}")
        self.study_id = study_id
        self.reason = reason


class CheckpointError(DataError):
    """Checkpoint file is corrupt, truncated, or inconsistent with the config."""


class TrainingDiverged(NumericError):
    """Loss became non-finite during training; message names batch and layer."""
