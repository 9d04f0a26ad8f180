"""Successive-cancellation decoding, generic over float and sign-magnitude arithmetic."""

import math
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Optional

import numpy as np

from .llr import QFormat, QLlr, f_exact, f_minsum, g_fn, qf_minsum, qg_fn, sign_bit

_ARITHMETICS = ("minsum", "exact", "quantized")
_DECISIONS = ("shortcut", "plain")


@dataclass(frozen=True)
class DecoderKernel:
    """
    Arithmetic and decision-rule selection for the SC decoder.

    ``arithmetic`` picks the check-node update: "minsum" (float sign/min),
    "exact" (float tanh-domain), or "quantized" (sign-magnitude words, needs
    a :class:`QFormat`). ``decision`` picks how odd-indexed bits are sliced:
    "shortcut" uses the magnitude comparison that hardware implements,
    "plain" takes the sign of the full variable-node update.
    """

    arithmetic: str = "minsum"
    decision: str = "shortcut"
    qformat: Optional[QFormat] = None

    def __post_init__(self):
        if self.arithmetic not in _ARITHMETICS:
            raise ValueError(f"unknown arithmetic {self.arithmetic!r}")
        if self.decision not in _DECISIONS:
            raise ValueError(f"unknown decision mode {self.decision!r}")
        if self.arithmetic == "quantized" and self.qformat is None:
            raise ValueError("quantized arithmetic requires a QFormat")

    @classmethod
    def min_sum(cls, decision="shortcut"):
        return cls("minsum", decision)

    @classmethod
    def exact(cls, decision="shortcut"):
        return cls("exact", decision)

    @classmethod
    def quantized(cls, qformat, decision="shortcut"):
        return cls("quantized", decision, qformat)


_FLOAT_MINSUM = SimpleNamespace(
    f=f_minsum,
    g=g_fn,
    sgn=sign_bit,
    mag_ge=lambda a, b: abs(a) >= abs(b),
)
_FLOAT_EXACT = SimpleNamespace(
    f=f_exact,
    g=g_fn,
    sgn=sign_bit,
    mag_ge=lambda a, b: abs(a) >= abs(b),
)
_QUANTIZED = SimpleNamespace(
    f=qf_minsum,
    g=qg_fn,
    sgn=lambda x: x.sign,
    mag_ge=lambda a, b: a.magnitude >= b.magnitude,
)


def _ops_for(kernel):
    if kernel.arithmetic == "minsum":
        return _FLOAT_MINSUM
    if kernel.arithmetic == "exact":
        return _FLOAT_EXACT
    return _QUANTIZED


def decide_odd(lam1, lam2, u_even, a_odd):
    """
    Odd-bit decision shortcut.

    Returns 0 for a frozen position; the sign of lam2 when |lam2| >= |lam1|;
    otherwise the sign of lam1 XORed with the preceding even decision. Agrees
    with the sign of the variable-node update whenever |lam1| != |lam2|.
    """
    if a_odd == 0:
        return 0
    if isinstance(lam1, QLlr):
        if lam2.magnitude >= lam1.magnitude:
            return lam2.sign
        return lam1.sign ^ u_even
    if abs(lam2) >= abs(lam1):
        return sign_bit(lam2)
    return sign_bit(lam1) ^ u_even


def decide_even_simplified(l0, l1, l2, l3, a_even):
    """
    Even-bit decision as the XOR of four sign bits, gated by the mask bit.

    Matches the nested check-node form whenever no intermediate magnitude is
    exactly zero; a zero magnitude normalizes its sign to 0, which the pure
    sign XOR cannot see.
    """
    if isinstance(l0, QLlr):
        signs = l0.sign ^ l1.sign ^ l2.sign ^ l3.sign
    else:
        signs = sign_bit(l0) ^ sign_bit(l1) ^ sign_bit(l2) ^ sign_bit(l3)
    return signs & a_even


def _partial_sums(bits):
    """Polar transform on a plain list of bits (partial sums of prior decisions)."""
    if len(bits) == 1:
        return bits
    half = len(bits) // 2
    p = _partial_sums(bits[:half])
    q = _partial_sums(bits[half:])
    out = [0] * len(bits)
    out[0::2] = [x ^ y for x, y in zip(p, q)]
    out[1::2] = q
    return out


def _decide_pair(lam1, lam2, a_even, a_odd, ops, shortcut):
    """Base length-2 decode: even decision, then the data-dependent odd decision."""
    u0 = ops.sgn(ops.f(lam1, lam2)) & a_even
    if a_odd == 0:
        u1 = 0
    elif shortcut:
        u1 = ops.sgn(lam2) if ops.mag_ge(lam2, lam1) else ops.sgn(lam1) ^ u0
    else:
        u1 = ops.sgn(ops.g(lam1, lam2, u0))
    return u0, u1


def _decode_rec(llrs, mask, ops, shortcut):
    n = len(llrs)
    if n == 2:
        u0, u1 = _decide_pair(llrs[0], llrs[1], mask[0], mask[1], ops, shortcut)
        return [u0, u1]
    if n == 4:
        # unrolled recursion; identical operation sequence, fewer calls
        f, g = ops.f, ops.g
        la, lb = f(llrs[0], llrs[1]), f(llrs[2], llrs[3])
        u0, u1 = _decide_pair(la, lb, mask[0], mask[1], ops, shortcut)
        ma, mb = g(llrs[0], llrs[1], u0 ^ u1), g(llrs[2], llrs[3], u1)
        u2, u3 = _decide_pair(ma, mb, mask[2], mask[3], ops, shortcut)
        return [u0, u1, u2, u3]
    half = n // 2
    f, g = ops.f, ops.g
    first = [f(llrs[2 * j], llrs[2 * j + 1]) for j in range(half)]
    u_first = _decode_rec(first, mask[:half], ops, shortcut)
    v = _partial_sums(u_first)
    second = [g(llrs[2 * j], llrs[2 * j + 1], v[j]) for j in range(half)]
    u_second = _decode_rec(second, mask[half:], ops, shortcut)
    return u_first + u_second


def decode(llrs, mask, kernel=None):
    """
    Decode one LLR vector by successive cancellation.

    Parameters
    ----------
    llrs : sequence
        Channel LLRs, floats for float kernels or :class:`QLlr` words for the
        quantized kernel. Length must be a power of two >= 2.
    mask : array-like of {0,1}
        Frozen-bit indicator vector (1 marks a data position).
    kernel : DecoderKernel, optional
        Arithmetic/decision selection; defaults to float min-sum with the
        hardware decision shortcut.

    Returns
    -------
    ndarray
        Estimated input vector of length N; frozen positions are 0.
    """
    if kernel is None:
        kernel = DecoderKernel.min_sum()
    n = len(llrs)
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"LLR vector length must be a power of two >= 2, got {n}")
    mask_list = [int(b) for b in mask]
    if len(mask_list) != n:
        raise ValueError(f"mask length {len(mask_list)} != LLR length {n}")
    if any(b not in (0, 1) for b in mask_list):
        raise ValueError("mask entries must be 0 or 1")
    if kernel.arithmetic == "quantized":
        llr_list = list(llrs)
        width = kernel.qformat.bits
        if any(not isinstance(x, QLlr) or x.bits != width for x in llr_list):
            raise ValueError(f"quantized decode expects QLlr words of width {width}")
    else:
        llr_list = [float(x) for x in llrs]
        if any(not math.isfinite(x) for x in llr_list):
            raise ValueError("LLRs must be finite")
    ops = _ops_for(kernel)
    out = _decode_rec(llr_list, mask_list, ops, kernel.decision == "shortcut")
    return np.array(out, dtype=np.uint8)


@dataclass(frozen=True)
class UnitCounts:
    """Hardware blocks instantiated by the decode recursion."""

    check_comparators: int
    decision_comparators: int
    adders: int

    @property
    def total(self):
        return self.check_comparators + self.decision_comparators + self.adders


def structural_unit_counts(n):
    """
    Walk the decode recursion and tally its hardware building blocks.

    The length-4 base block carries 2 check-node comparators, 2 decision
    comparators (odd bits only; even decisions reduce to sign XORs) and 4
    adders/subtractors (each variable-node unit precomputes both the sum and
    the difference). Each larger level adds N/2 check units and N/2
    variable-node units of glue.
    """
    if n < 4 or (n & (n - 1)) != 0:
        raise ValueError(f"block length must be a power of two >= 4, got {n}")
    if n == 4:
        return UnitCounts(2, 2, 4)
    sub = structural_unit_counts(n // 2)
    return UnitCounts(
        2 * sub.check_comparators + n // 2,
        2 * sub.decision_comparators,
        2 * sub.adders + n,
    )
