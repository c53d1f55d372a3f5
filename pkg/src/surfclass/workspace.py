"""Bit-accounted work memory for the space-metered engine.

The metered engine mirrors a machine with a read-only input tape, a
write-only output tape, and a small read-write work memory.  Reading the
input is free; every counter or pointer the algorithm keeps live is
charged against a :class:`MeteredWorkspace` in bits.  The workspace
records the peak number of simultaneously live bits and enforces an
optional hard budget.
"""

from __future__ import annotations

from .errors import BudgetExceeded

#: Default budget constant: budget = BUDGET_FACTOR * ceil(log2(N+2))**2 for
#: an input of N symbols.  The quadratic form matches the recursive-doubling
#: connectivity oracle the metered engine ships with.
BUDGET_FACTOR = 64

#: Extra bits charged per recursion frame of a doubling-connectivity query,
#: covering the level counter and the which-child state of the frame.
FRAME_OVERHEAD_BITS = 8


def counter_bits(max_value: int) -> int:
    """Bits needed for a binary counter ranging over 0..max_value.

    Matches the convention that a counter bounded by m is stored in
    ceil(log2(m+2)) bits, so even m = 0 costs one bit.
    """
    if max_value < 0:
        raise ValueError("counter range must be non-negative")
    return (max_value + 1).bit_length()


def default_budget_bits(input_symbols: int, factor: int = BUDGET_FACTOR) -> int:
    """Default work-memory budget for an input of the given symbol length."""
    return factor * counter_bits(input_symbols) ** 2


def savitch_frame_bits(num_vertices: int) -> int:
    """Bits one recursion frame of a doubling reachability query holds."""
    return counter_bits(num_vertices) + FRAME_OVERHEAD_BITS


def savitch_query_bits(num_vertices: int, input_symbols: int = 0) -> int:
    """Peak transient bits of one connectivity query under the doubling model.

    The recursion runs from distance 2**ceil(log2 V) down to 1, one frame per
    level, each frame holding a midpoint vertex id plus bookkeeping; the
    deepest frame scans the input for an edge, holding one tape-position
    counter.
    """
    v = max(num_vertices, 2)
    levels = (v - 1).bit_length()  # ceil(log2 v)
    return (levels + 1) * savitch_frame_bits(num_vertices) + counter_bits(input_symbols)


class ChargeToken:
    """Handle for a live charge; releasing it returns the bits."""

    __slots__ = ("_ws", "bits", "_live")

    def __init__(self, ws: "MeteredWorkspace", bits: int):
        self._ws = ws
        self.bits = bits
        self._live = True

    def release(self) -> None:
        if not self._live:
            raise RuntimeError("charge token released twice")
        self._live = False
        self._ws.current_bits -= self.bits

    def __enter__(self) -> "ChargeToken":
        return self

    def __exit__(self, *exc) -> None:
        self.release()


class MeteredWorkspace:
    """Work-memory meter: live charges, peak watermark, optional budget.

    budget_bits == 0 means unlimited.  input_reads counts how many table
    cells the host actually read while running under this workspace; it is
    a performance statistic, not part of the space claim.
    """

    __slots__ = ("budget_bits", "current_bits", "peak_bits", "input_reads", "input_symbols")

    def __init__(self, budget_bits: int = 0, input_symbols: int = 0):
        if budget_bits < 0:
            raise ValueError("budget_bits must be >= 0")
        self.budget_bits = budget_bits
        self.current_bits = 0
        self.peak_bits = 0
        self.input_reads = 0
        self.input_symbols = input_symbols

    def charge(self, bits: int) -> ChargeToken:
        """Register a live allocation of the given number of bits."""
        if bits <= 0:
            raise ValueError("charge must be positive")
        new_level = self.current_bits + bits
        if self.budget_bits and new_level > self.budget_bits:
            raise BudgetExceeded(new_level, self.budget_bits)
        self.current_bits = new_level
        if new_level > self.peak_bits:
            self.peak_bits = new_level
        return ChargeToken(self, bits)

    def counter(self, max_value: int) -> ChargeToken:
        """Charge a binary counter ranging over 0..max_value."""
        return self.charge(counter_bits(max_value))

    def pulse(self, bits: int) -> None:
        """Record a transient charge-and-release without token churn."""
        if bits <= 0:
            raise ValueError("pulse must be positive")
        cand = self.current_bits + bits
        if self.budget_bits and cand > self.budget_bits:
            raise BudgetExceeded(cand, self.budget_bits)
        if cand > self.peak_bits:
            self.peak_bits = cand

    def space_report(self) -> dict:
        return {
            "input_symbols": self.input_symbols,
            "budget_bits": self.budget_bits,
            "peak_bits": self.peak_bits,
            "input_reads": self.input_reads,
        }

    def __repr__(self) -> str:
        return (f"MeteredWorkspace(current={self.current_bits}, peak={self.peak_bits}, "
                f"budget={self.budget_bits}, reads={self.input_reads})")
