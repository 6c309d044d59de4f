"""External-sort memory planning: one-pass/two-pass choice and merge fan-in.

A two-pass sort cuts runs of roughly the memory size in pass one and
merges them in pass two.  The memory that balances run length against
run count is

    memory = c_buf * buffer + c_sqrt * sqrt(buffer * file)

with c_buf=6 and c_sqrt=3 by default (the constants depend on the sort
implementation).  The continuous formula is used throughout; run/merge
feasibility of a concrete plan is separate ceil/floor arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_C_BUF = 6.0
DEFAULT_C_SQRT = 3.0
DEFAULT_ONE_PASS_THRESHOLD = 5e9  # bytes of file below which one pass wins


class PlanError(ValueError):
    """A sort plan that cannot be met in two passes.

    Carries the rule-of-thumb memory that would make two passes work.
    """

    def __init__(self, message: str, required_memory_bytes: float):
        self.required_memory_bytes = required_memory_bytes
        super().__init__(message)


@dataclass(frozen=True)
class SortProblem:
    file_bytes: float
    buffer_bytes: float
    memory_bytes: float | None = None

    def __post_init__(self):
        if self.file_bytes < 0:
            raise ValueError("file_bytes must be >= 0")
        if not self.buffer_bytes > 0:
            raise ValueError("buffer_bytes must be > 0")
        if self.memory_bytes is not None and not self.memory_bytes > 0:
            raise ValueError("memory_bytes must be > 0 when given")


@dataclass(frozen=True)
class SortPlan:
    passes: int                  # 1 or 2
    memory_required_bytes: float  # rule-of-thumb memory, not the bare minimum
    run_count: int
    fan_in: int


def two_pass_memory(file_bytes: float, buffer_bytes: float,
                    c_buf: float = DEFAULT_C_BUF,
                    c_sqrt: float = DEFAULT_C_SQRT) -> float:
    """Memory for a two-pass sort of file_bytes with IO units of buffer_bytes."""
    if not buffer_bytes > 0:
        raise ValueError("buffer_bytes must be > 0")
    if file_bytes < 0:
        raise ValueError("file_bytes must be >= 0")
    if not (c_buf > 0 and c_sqrt > 0):
        raise ValueError("constants must be > 0")
    return c_buf * buffer_bytes + c_sqrt * math.sqrt(buffer_bytes * file_bytes)


def max_two_pass_file(memory_bytes: float, buffer_bytes: float,
                      c_buf: float = DEFAULT_C_BUF,
                      c_sqrt: float = DEFAULT_C_SQRT) -> float:
    """Largest file the given memory sorts in two passes (two_pass_memory inverted)."""
    if not buffer_bytes > 0:
        raise ValueError("buffer_bytes must be > 0")
    if not (c_buf > 0 and c_sqrt > 0):
        raise ValueError("constants must be > 0")
    headroom = memory_bytes - c_buf * buffer_bytes
    if headroom <= 0:
        raise ValueError(
            f"insufficient memory for any two-pass sort: need more than "
            f"{c_buf:g} x {buffer_bytes:g} = {c_buf * buffer_bytes:g} bytes")
    return (headroom / c_sqrt) ** 2 / buffer_bytes


def _ceil_div(a, b) -> int:
    if isinstance(a, int) and isinstance(b, int):
        return -(-a // b)
    return math.ceil(a / b)


def run_merge_plan(file_bytes, memory_bytes, buffer_bytes) -> SortPlan:
    """Plan runs and merge fan-in for a concrete memory budget.

    Pass one cuts ceil(file/memory) runs; pass two merges up to
    floor(memory/buffer) of them.  More runs than fan-in means the sort
    needs a third pass, which is out of plan.
    """
    if not buffer_bytes > 0:
        raise ValueError("buffer_bytes must be > 0")
    if memory_bytes < buffer_bytes:
        raise ValueError("memory_bytes must be at least buffer_bytes")
    if file_bytes < 0:
        raise ValueError("file_bytes must be >= 0")
    fan_in = int(memory_bytes // buffer_bytes)
    if file_bytes <= memory_bytes:
        return SortPlan(passes=1,
                        memory_required_bytes=max(file_bytes, buffer_bytes),
                        run_count=1, fan_in=fan_in)
    run_count = _ceil_div(file_bytes, memory_bytes)
    required = two_pass_memory(file_bytes, buffer_bytes)
    if run_count > fan_in:
        raise PlanError(
            f"needs more than two passes: {run_count} runs exceed fan-in "
            f"{fan_in}; a two-pass sort wants about {required:.6g} bytes of memory",
            required_memory_bytes=required)
    return SortPlan(passes=2, memory_required_bytes=required,
                    run_count=run_count, fan_in=fan_in)


def choose_pass_count(file_bytes: float,
                      one_pass_threshold_bytes: float = DEFAULT_ONE_PASS_THRESHOLD) -> int:
    """One pass up to the threshold (inclusive), two passes beyond."""
    if not one_pass_threshold_bytes > 0:
        raise ValueError("one_pass_threshold_bytes must be > 0")
    return 1 if file_bytes <= one_pass_threshold_bytes else 2
