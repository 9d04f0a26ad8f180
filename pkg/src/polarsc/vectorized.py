"""Batched numpy implementations of the transform and SC decode, one row per frame.

Bit-identical to the scalar reference in :mod:`polarsc.decoder`; used by the
Monte Carlo harness where per-frame Python recursion would dominate runtime.
"""

import numpy as np


def encode_batch(u):
    """Polar-transform each row of a (frames, N) bit matrix."""
    u = np.asarray(u, dtype=np.uint8)
    if u.ndim != 2:
        raise ValueError(f"expected a (frames, N) matrix, got shape {u.shape}")
    n = u.shape[1]
    if n < 1 or (n & (n - 1)) != 0:
        raise ValueError(f"row length must be a power of two, got {n}")
    if u.size and u.max() > 1:
        raise ValueError("bit matrix entries must be 0 or 1")
    return _transform(u)


def _transform(bits):
    if bits.shape[1] == 1:
        return bits
    half = bits.shape[1] // 2
    p = _transform(bits[:, :half])
    q = _transform(bits[:, half:])
    out = np.empty_like(bits)
    out[:, 0::2] = p ^ q
    out[:, 1::2] = q
    return out


def quantize_batch(llrs, fmt):
    """Quantize float LLRs to signed integer words (sign-magnitude semantics)."""
    llrs = np.asarray(llrs, dtype=np.float64)
    mag = np.floor(np.abs(llrs) * fmt.scale + 0.5)
    mag = np.minimum(mag, fmt.max_magnitude).astype(np.int32)
    return np.where(llrs < 0, -mag, mag)


def _f_minsum(a, b):
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def _f_exact(a, b):
    lo = np.minimum(np.abs(a), np.abs(b))
    hi = np.maximum(np.abs(a), np.abs(b))
    mag = lo + np.log1p(np.exp(-(lo + hi))) - np.log1p(np.exp(-(hi - lo)))
    return np.sign(a) * np.sign(b) * mag


def _make_g(clip):
    if clip is None:
        def g(a, b, v):
            return b + (1 - 2 * v.astype(b.dtype)) * a
    else:
        def g(a, b, v):
            return np.clip(b + (1 - 2 * v.astype(b.dtype)) * a, -clip, clip)
    return g


def _decide_pair(la, lb, a_even, a_odd, f, g, shortcut):
    fv = f(la, lb)
    u0 = (fv < 0).astype(np.uint8) if a_even else np.zeros(la.shape[0], np.uint8)
    if not a_odd:
        u1 = np.zeros(la.shape[0], np.uint8)
    elif shortcut:
        u1 = np.where(np.abs(lb) >= np.abs(la), lb < 0, (la < 0) ^ u0.astype(bool))
        u1 = u1.astype(np.uint8)
    else:
        u1 = (g(la, lb, u0) < 0).astype(np.uint8)
    return u0, u1


def _decode_rows(ll, mask, f, g, shortcut):
    n = ll.shape[1]
    if n == 2:
        u0, u1 = _decide_pair(ll[:, 0], ll[:, 1], mask[0], mask[1], f, g, shortcut)
        return np.stack([u0, u1], axis=1)
    half = n // 2
    even, odd = ll[:, 0::2], ll[:, 1::2]
    u_first = _decode_rows(f(even, odd), mask[:half], f, g, shortcut)
    v = _transform(u_first)
    u_second = _decode_rows(g(even, odd, v), mask[half:], f, g, shortcut)
    return np.concatenate([u_first, u_second], axis=1)


def decode_batch(llrs, mask, kernel=None):
    """
    SC-decode each row of an LLR matrix.

    Parameters
    ----------
    llrs : ndarray, shape (frames, N)
        Float LLRs for float kernels; signed integer words (as produced by
        :func:`quantize_batch`) for the quantized kernel.
    mask : array-like of {0,1}
        Frozen-bit indicator vector of length N.
    kernel : DecoderKernel, optional
        Same selection semantics as scalar decode; defaults to float min-sum
        with the hardware decision shortcut.

    Returns
    -------
    ndarray, shape (frames, N)
        Decisions per frame, frozen positions zero.
    """
    from .decoder import DecoderKernel

    if kernel is None:
        kernel = DecoderKernel.min_sum()
    mask = np.asarray(mask, dtype=np.uint8)
    llrs = np.asarray(llrs)
    if llrs.ndim != 2:
        raise ValueError(f"expected a (frames, N) matrix, got shape {llrs.shape}")
    n = llrs.shape[1]
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"row length must be a power of two >= 2, got {n}")
    if len(mask) != n:
        raise ValueError(f"mask length {len(mask)} != row length {n}")
    if kernel.arithmetic == "quantized":
        if not np.issubdtype(llrs.dtype, np.integer):
            raise ValueError("quantized decode expects integer words; see quantize_batch")
        f, g = _f_minsum, _make_g(kernel.qformat.max_magnitude)
    else:
        llrs = llrs.astype(np.float64, copy=False)
        f = _f_minsum if kernel.arithmetic == "minsum" else _f_exact
        g = _make_g(None)
    return _decode_rows(llrs, mask, f, g, kernel.decision == "shortcut")
