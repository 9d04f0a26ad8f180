"""Hybrid decoding: a synchronous LLR front end delegating component codes to the
combinational decoder, plus the analytical latency/throughput calculator."""

import math
from dataclasses import dataclass

import numpy as np

from .decoder import DecoderKernel, _decode_rec, _ops_for, _partial_sums

# Measured throughputs (b/s) of the combinational core on a mid-range FPGA,
# used to derive default component-decoder delays D = N'/TP.
DEFAULT_COMB_THROUGHPUT_BPS = {16: 1.05e9, 32: 0.88e9, 64: 0.85e9}


def component_inputs(llrs, decided, n_prime, kernel=None):
    """
    LLR vector handed to the component decoder for the next repetition.

    Descends the check/variable-node tree from the channel level down to the
    component-code level, consuming the ``decided`` bits (all component
    outputs so far) to form partial sums on the variable-node branches. This
    is the synchronous decoder's share of the work.
    """
    if kernel is None:
        kernel = DecoderKernel.min_sum()
    ops = _ops_for(kernel)

    def descend(vec, bits):
        m = len(vec)
        if m == n_prime:
            return vec
        half = m // 2
        if len(bits) < half:
            return descend(
                [ops.f(vec[2 * j], vec[2 * j + 1]) for j in range(half)], bits
            )
        v = _partial_sums(bits[:half])
        return descend(
            [ops.g(vec[2 * j], vec[2 * j + 1], v[j]) for j in range(half)],
            bits[half:],
        )

    return descend(list(llrs), list(decided))


def hybrid_decode(llrs, mask, n_prime, kernel=None):
    """
    Decode by alternating the synchronous front end and the component decoder.

    Runs N/N' repetitions; repetition i receives the intermediate LLRs for
    component i (which depend on all earlier component decisions through
    partial sums) and decodes them against the i-th slice of the mask. The
    result is bit-identical to a single full decode.

    Parameters
    ----------
    llrs : sequence
        Channel LLRs (floats or QLlr words, matching the kernel).
    mask : array-like of {0,1}
        Frozen-bit indicator for the full code.
    n_prime : int
        Component block length; must be a power of two dividing N.
    kernel : DecoderKernel, optional
        Arithmetic/decision selection shared by both decoder halves.
    """
    if kernel is None:
        kernel = DecoderKernel.min_sum()
    n = len(llrs)
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"LLR vector length must be a power of two >= 2, got {n}")
    if n_prime < 2 or (n_prime & (n_prime - 1)) != 0 or n % n_prime != 0:
        raise ValueError(f"component length {n_prime} must be a power of two dividing {n}")
    mask_list = [int(b) for b in mask]
    if len(mask_list) != n:
        raise ValueError(f"mask length {len(mask_list)} != LLR length {n}")
    ops = _ops_for(kernel)
    shortcut = kernel.decision == "shortcut"
    decided = []
    for i in range(n // n_prime):
        lam = component_inputs(llrs, decided, n_prime, kernel)
        component_mask = mask_list[i * n_prime : (i + 1) * n_prime]
        decided += _decode_rec(lam, component_mask, ops, shortcut)
    return np.array(decided, dtype=np.uint8)


def semi_parallel_latency(n, p):
    """
    Decode latency, in cycles, of a semi-parallel SC decoder with p shared PEs.

    Evaluates 2N + (N/P)*log2(N/(4P)). Only defined for P <= N/4, where the
    logarithm is nonnegative.
    """
    if n < 4 or (n & (n - 1)) != 0:
        raise ValueError(f"block length must be a power of two >= 4, got {n}")
    if p < 1:
        raise ValueError(f"processing-element count must be >= 1, got {p}")
    if p > n / 4:
        raise ValueError(
            f"latency model not defined for P > N/4 (got P={p}, N={n})"
        )
    return 2 * n + (n / p) * math.log2(n / (4 * p))


@dataclass(frozen=True)
class HybridConfig:
    """Hybrid-decoder sizing: code length, component length, synchronous PEs and
    clock, and the component decoder's combinational delay."""

    n: int
    n_prime: int
    p: int
    f_c_hz: float
    comb_delay_s: float

    def __post_init__(self):
        if self.n_prime < 2 or (self.n_prime & (self.n_prime - 1)) != 0:
            raise ValueError(f"component length must be a power of two, got {self.n_prime}")
        if self.n % self.n_prime != 0:
            raise ValueError(f"component length {self.n_prime} must divide {self.n}")
        if self.f_c_hz <= 0 or self.comb_delay_s <= 0:
            raise ValueError("clock frequency and combinational delay must be positive")

    @classmethod
    def from_comb_throughput(cls, n, n_prime, p, f_c_hz, comb_tp_bps):
        """Derive the component delay from a measured combinational throughput."""
        return cls(n, n_prime, p, f_c_hz, n_prime / comb_tp_bps)


@dataclass(frozen=True)
class HybridReport:
    latency_cycles: float          # synchronous decode latency for the full code
    reduction_cycles: int          # cycles saved per repetition by the component decoder
    gain: float                    # throughput multiplier over the synchronous decoder
    synchronous_tp_bps: float
    hybrid_tp_bps: float


def latency_gain(cfg):
    """
    Throughput gain of the hybrid decoder over its synchronous baseline.

    The synchronous decoder would spend 2N'-2 cycles per component; the
    component decoder replaces those with ceil(D_N' * f_c) wait cycles, saving
    reduction_cycles per repetition. The gain divides the full synchronous
    latency by what remains after N/N' repetitions of that saving.
    """
    l_full = semi_parallel_latency(cfg.n, cfg.p)
    wait = math.ceil(cfg.comb_delay_s * cfg.f_c_hz)
    reduction = (2 * cfg.n_prime - 2) - wait
    remaining = l_full - (cfg.n // cfg.n_prime) * reduction
    if remaining <= 0:
        raise ValueError(
            "latency model breakdown: repetition savings exceed the total latency"
        )
    gain = l_full / remaining
    tp_sync = cfg.f_c_hz * cfg.n / l_full
    return HybridReport(l_full, reduction, gain, tp_sync, gain * tp_sync)
