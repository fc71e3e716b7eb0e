"""Dense tensor construction and the finite-difference gradient oracle.

Tensors are plain C-contiguous numpy arrays in row-major layout; f32 is the
training dtype, f64 is used wherever gradients are checked numerically. The
constructors here enforce the invariants (non-empty shape, positive dims,
element count = product of dims) that the rest of the package relies on.
"""

import numpy as np

from .errors import NumericError, ParameterError, ShapeError
from .rng import Rng

F32 = np.float32
F64 = np.float64

__all__ = [
    "F32",
    "F64",
    "new_tensor",
    "as_tensor",
    "rand_normal",
    "matmul",
    "finite_difference_gradient",
]


def _check_shape(shape):
    shape = tuple(int(d) for d in shape)
    if len(shape) == 0:
        raise ShapeError("tensor shape must have at least one dimension")
    for d in shape:
        if d < 1:
            raise ShapeError(f"tensor dims must be >= 1, got {shape}")
    return shape


def new_tensor(shape, fill=0.0, dtype=F32) -> np.ndarray:
    """Tensor of the given shape with every element equal to ``fill``."""
    shape = _check_shape(shape)
    return np.full(shape, fill, dtype=dtype)


def as_tensor(data, dtype=F32) -> np.ndarray:
    """Validate and convert existing data into a contiguous tensor."""
    arr = np.ascontiguousarray(data, dtype=dtype)
    _check_shape(arr.shape)
    return arr


def rand_normal(shape, mean, std, rng: Rng, dtype=F32) -> np.ndarray:
    """Normal(mean, std^2) tensor drawn from the given stream."""
    if std < 0:
        raise ParameterError(f"std must be >= 0, got {std}")
    shape = _check_shape(shape)
    return rng.normal(shape, mean=mean, std=std, dtype=dtype)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rank-2 matrix product with explicit shape validation."""
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul expects rank-2 operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"inner dims disagree: {a.shape} x {b.shape}")
    return np.matmul(a, b)


def finite_difference_gradient(f, x: np.ndarray, h: float = 1e-5) -> np.ndarray:
    """Central-difference gradient of a scalar function of a tensor.

    This is the oracle every analytic backward pass in the package is checked
    against; it must stay independent of the layer implementations. The
    quotient is accumulated in f64 regardless of the dtype of ``x``.
    """
    if h <= 0:
        raise ParameterError(f"step h must be > 0, got {h}")
    grad = np.zeros(x.shape, dtype=F64)
    flat = x.reshape(-1)
    gflat = grad.reshape(-1)
    for i in range(flat.size):
        orig = flat[i]
        flat[i] = orig + h
        fp = float(f(x))
        flat[i] = orig - h
        fm = float(f(x))
        flat[i] = orig
        if not (np.isfinite(fp) and np.isfinite(fm)):
            raise NumericError(f"non-finite evaluation at element {i}: f(+h)={fp}, f(-h)={fm}")
        gflat[i] = (fp - fm) / (2.0 * h)
    return grad
