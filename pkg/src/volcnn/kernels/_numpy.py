"""Pure-numpy implementations of the convolution lowering kernels.

These mirror the compiled Cython kernels exactly, including the accumulation
order of col2im3d, so switching backends never changes a single bit of any
result. Rows of the column matrix are channel-major: row index
``c*kd*kh*kw + (ikd*kh + ikh)*kw + ikw``; columns enumerate output positions
``(od*oh + ohh)*ow + oww``.
"""

import numpy as np


def im2col3d(xp: np.ndarray, kshape, stride) -> np.ndarray:
    """Gather sliding 3D patches of a padded [N,C,Dp,Hp,Wp] array into columns.

    Returns an array of shape [N, C*kd*kh*kw, od*oh*ow].
    """
    n, c, dp, hp, wp = xp.shape
    kd, kh, kw = kshape
    sd, sh, sw = stride
    od = (dp - kd) // sd + 1
    oh = (hp - kh) // sh + 1
    ow = (wp - kw) // sw + 1
    cols = np.empty((n, c * kd * kh * kw, od * oh * ow), dtype=xp.dtype)
    view = cols.reshape(n, c, kd, kh, kw, od, oh, ow)
    for ikd in range(kd):
        for ikh in range(kh):
            for ikw in range(kw):
                view[:, :, ikd, ikh, ikw] = xp[
                    :,
                    :,
                    ikd : ikd + od * sd : sd,
                    ikh : ikh + oh * sh : sh,
                    ikw : ikw + ow * sw : sw,
                ]
    return cols


def col2im3d(cols: np.ndarray, padded_shape, kshape, stride) -> np.ndarray:
    """Scatter-add columns back onto a padded volume (adjoint of im2col3d).

    Accumulation runs over kernel offsets in lexicographic (kd, kh, kw) order;
    the compiled kernel follows the same order.
    """
    n, c, dp, hp, wp = padded_shape
    kd, kh, kw = kshape
    sd, sh, sw = stride
    od = (dp - kd) // sd + 1
    oh = (hp - kh) // sh + 1
    ow = (wp - kw) // sw + 1
    out = np.zeros(padded_shape, dtype=cols.dtype)
    view = cols.reshape(n, c, kd, kh, kw, od, oh, ow)
    for ikd in range(kd):
        for ikh in range(kh):
            for ikw in range(kw):
                out[
                    :,
                    :,
                    ikd : ikd + od * sd : sd,
                    ikh : ikh + oh * sh : sh,
                    ikw : ikw + ow * sw : sw,
                ] += view[:, :, ikd, ikh, ikw]
    return out
