"""LLR arithmetic: check/variable-node updates in float and Q-bit sign-magnitude form."""

import math
from dataclasses import dataclass


def sign_bit(llr):
    """Hard-decision bit of an LLR: 0 for llr >= 0, 1 otherwise."""
    return 0 if llr >= 0 else 1


def f_minsum(l1, l2):
    """
    Min-sum check-node update: sign product times magnitude minimum.

    The result magnitude is exactly min(|l1|, |l2|).
    """
    return (1 - 2 * sign_bit(l1)) * (1 - 2 * sign_bit(l2)) * min(abs(l1), abs(l2))


def f_exact(l1, l2):
    """
    Exact check-node update 2*atanh(tanh(l1/2)*tanh(l2/2)).

    Evaluated in the log domain (min-sum term plus two correction terms) so
    the result stays finite even where tanh saturates in double precision.
    """
    a, b = abs(l1), abs(l2)
    lo, hi = (a, b) if a <= b else (b, a)
    mag = lo + math.log1p(math.exp(-(lo + hi))) - math.log1p(math.exp(-(hi - lo)))
    return (1 - 2 * sign_bit(l1)) * (1 - 2 * sign_bit(l2)) * mag


def g_fn(l1, l2, v):
    """Variable-node update: l2 + l1 for partial sum v=0, l2 - l1 for v=1."""
    if v not in (0, 1):
        raise ValueError(f"partial-sum bit must be 0 or 1, got {v}")
    return l2 + (1 - 2 * v) * l1


@dataclass(frozen=True)
class QFormat:
    """
    Sign-magnitude fixed-point format: total width in bits and an input scale.

    ``bits`` includes the sign, so magnitudes span [0, 2**(bits-1) - 1].
    ``scale`` multiplies channel LLRs before rounding.
    """

    bits: int
    scale: float = 1.0

    def __post_init__(self):
        if self.bits < 2:
            raise ValueError(f"need at least 2 bits (sign + magnitude), got {self.bits}")
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    @property
    def max_magnitude(self):
        return (1 << (self.bits - 1)) - 1


@dataclass(frozen=True)
class QLlr:
    """One sign-magnitude LLR word. Zero is normalized: magnitude 0 forces sign 0."""

    sign: int
    magnitude: int
    bits: int

    def __post_init__(self):
        if self.sign not in (0, 1):
            raise ValueError(f"sign must be 0 or 1, got {self.sign}")
        max_mag = (1 << (self.bits - 1)) - 1
        if not 0 <= self.magnitude <= max_mag:
            raise ValueError(
                f"magnitude {self.magnitude} out of range [0, {max_mag}] for {self.bits} bits"
            )
        if self.magnitude == 0 and self.sign != 0:
            raise ValueError("zero magnitude must carry sign 0")

    @property
    def value(self):
        """Signed integer value."""
        return -self.magnitude if self.sign else self.magnitude

    @classmethod
    def from_value(cls, value, bits):
        """Build a word from a signed integer, saturating the magnitude."""
        max_mag = (1 << (bits - 1)) - 1
        mag = min(abs(int(value)), max_mag)
        return cls(0 if mag == 0 else (1 if value < 0 else 0), mag, bits)


def quantize(llr, fmt):
    """
    Quantize a float LLR to a sign-magnitude word.

    Magnitude is |llr|*scale rounded half away from zero and saturated at the
    format's maximum; the sign follows :func:`sign_bit` unless the magnitude
    rounds to zero.
    """
    if not math.isfinite(llr):
        raise ValueError(f"LLR must be finite, got {llr}")
    mag = int(math.floor(abs(llr) * fmt.scale + 0.5))
    mag = min(mag, fmt.max_magnitude)
    return QLlr(0 if mag == 0 else sign_bit(llr), mag, fmt.bits)


def _check_widths(a, b):
    if a.bits != b.bits:
        raise ValueError(f"mixed word widths: {a.bits} vs {b.bits} bits")


def qf_minsum(a, b):
    """Min-sum check-node update on sign-magnitude words: XOR signs, min magnitudes."""
    _check_widths(a, b)
    mag = min(a.magnitude, b.magnitude)
    return QLlr(0 if mag == 0 else a.sign ^ b.sign, mag, a.bits)


def qg_fn(a, b, v):
    """
    Variable-node update on sign-magnitude words.

    Exact integer evaluation of b + (1-2v)*a, then the magnitude saturates at
    the format maximum (never wraps) and zero is normalized.
    """
    _check_widths(a, b)
    if v not in (0, 1):
        raise ValueError(f"partial-sum bit must be 0 or 1, got {v}")
    return QLlr.from_value(b.value + (1 - 2 * v) * a.value, a.bits)


def qg_saturates(a, b, v):
    """True when :func:`qg_fn` on the same operands would clip its magnitude."""
    _check_widths(a, b)
    raw = b.value + (1 - 2 * v) * a.value
    return abs(raw) > (1 << (a.bits - 1)) - 1
