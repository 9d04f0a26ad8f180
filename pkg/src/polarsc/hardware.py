"""Analytical complexity, delay, and efficiency models for the combinational decoder."""

import math
import warnings
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class GateDelays:
    """
    Propagation delays of the elementary blocks, in seconds.

    ``interconnect`` is an additive routing term applied to the closed-form
    delay only; it cannot be derived from the gate model and defaults to 0.
    """

    comparator: float
    mux: float
    xor: float
    and_gate: float
    interconnect: float = 0.0

    def __post_init__(self):
        for name in ("comparator", "mux", "xor", "and_gate", "interconnect"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} delay must be nonnegative")

    @property
    def meets_base_assumption(self):
        """Base-block model assumes the comparator dominates three XORs plus an AND."""
        return self.comparator >= 3 * self.xor + self.and_gate


def _check_block_length(n, minimum):
    if n < minimum or (n & (n - 1)) != 0:
        raise ValueError(f"block length must be a power of two >= {minimum}, got {n}")


@dataclass(frozen=True)
class ComplexityCounts:
    check_comparators: int
    decision_comparators: int
    adders: int

    @property
    def total(self):
        return self.check_comparators + self.decision_comparators + self.adders


def complexity(n):
    """
    Closed-form block counts of a combinational decoder.

    check comparators (N/2)log2(N/2), decision comparators N/2, and
    adders/subtractors N*log2(N/2); the total equals N*(1.5*log2(N) - 1).
    The counts are anchored at the length-4 base block (2 check comparators).
    """
    _check_block_length(n, 4)
    stages = int(math.log2(n)) - 1
    return ComplexityCounts(n // 2 * stages, n // 2, n * stages)


def base_block_delay(d):
    """Critical path of the length-4 base block: 3 comparators, 4 muxes, 1 XOR, 2 ANDs."""
    if not d.meets_base_assumption:
        warnings.warn(
            "gate delays violate the base-block assumption "
            "(comparator < 3*xor + and); the delay model may be optimistic",
            stacklevel=2,
        )
    return 3 * d.comparator + 4 * d.mux + d.xor + 2 * d.and_gate


def delay_recursive(n, d):
    """
    Decoder delay by unrolling the level recursion down to the length-4 base.

    Each level above the base adds a comparator stage, two mux stages, and the
    partial-sum encoder path of log2(N/2) XORs. Excludes interconnect.
    """
    _check_block_length(n, 8)
    delay = base_block_delay(d)
    m = 8
    while m <= n:
        delay = 2 * delay + d.comparator + 2 * d.mux + math.log2(m // 2) * d.xor
        m *= 2
    return delay


def delay_closed(n, d):
    """
    Closed-form decoder delay, including the additive interconnect term.

    N*(1.5*mux + comparator + xor + 0.5*and) minus a logarithmic correction;
    agrees exactly with :func:`delay_recursive` when interconnect is zero.
    """
    _check_block_length(n, 8)
    if not d.meets_base_assumption:
        warnings.warn(
            "gate delays violate the base-block assumption "
            "(comparator < 3*xor + and); the delay model may be optimistic",
            stacklevel=2,
        )
    linear = n * (1.5 * d.mux + d.comparator + d.xor + 0.5 * d.and_gate)
    correction = d.comparator + 2 * d.mux + (math.log2(n) + 1) * d.xor
    return linear - correction + d.interconnect


@dataclass(frozen=True)
class Metrics:
    throughput_bps: float
    energy_per_bit_j: float
    hw_efficiency_bps_per_m2: float


def metrics(n, delay_s, power_w, area_m2):
    """
    Implementation figures of merit from measured delay, power, and area.

    Throughput is N/delay, energy-per-bit is power/throughput, and hardware
    efficiency is throughput/area.
    """
    if n <= 0 or delay_s <= 0 or power_w <= 0 or area_m2 <= 0:
        raise ValueError("all metric inputs must be positive")
    tp = n / delay_s
    return Metrics(tp, power_w / tp, tp / area_m2)


def dynamic_power(alpha, capacitance_f, v_dd, f_c_hz):
    """Switching power alpha * C * Vdd^2 * f of a CMOS block."""
    if min(alpha, capacitance_f, v_dd, f_c_hz) < 0:
        raise ValueError("dynamic power inputs must be nonnegative")
    return alpha * capacitance_f * v_dd * v_dd * f_c_hz


@dataclass(frozen=True)
class HwReport:
    """Aggregated analyzer output for one block length."""

    n: int
    counts: ComplexityCounts
    delay_s: Optional[float] = None
    metrics: Optional[Metrics] = None


def report(n, gate_delays=None, delay_s=None, power_w=None, area_m2=None):
    """
    Assemble complexity, modeled or supplied delay, and metrics for one decoder.

    ``delay_s`` overrides the gate-delay model when both are given. Metrics
    require a delay source plus power and area.
    """
    counts = complexity(n)
    if delay_s is None and gate_delays is not None:
        delay_s = delay_closed(n, gate_delays)
    figures = None
    if delay_s is not None and power_w is not None and area_m2 is not None:
        figures = metrics(n, delay_s, power_w, area_m2)
    return HwReport(n, counts, delay_s, figures)
