"""Trace-driven buffer-pool simulator with an N-second lifetime policy.

The pool runs LRU or Clock2 underneath and layers the recency-list rule
on top: the manager remembers every page touched within the last N
seconds, and when a page is re-read from disk while still on that list
it is granted an N-second lifetime, i.e. its frame will not be evicted
for the next N seconds.  Dirty frames are flushed either on eviction
(contention flush) or by periodic checkpoints (checkpoint flush).

Exact semantics, shared by any reimplementation that wants to agree
with this one event for event:

* Virtual time is the trace's own timestamps; nothing waits.
* History membership: a page is on the list at time t iff its recorded
  last touch is >= t - N (strictly older entries have lapsed).  The
  membership test uses the state before the current access's touch is
  recorded; every access, hit or miss, records a touch afterwards.
* A miss always counts one physical read (writes allocate too) and sets
  the frame's protected_until to t + N when the page was on the list,
  else to t.  Hits never extend protection.
* Eviction considers frames with protected_until <= t; if none are
  eligible the base-policy victim among all frames is taken and the
  fallback counter is bumped.  Evicting a dirty frame counts one
  contention flush.
* With a checkpoint interval C, every boundary k*C <= t (k = 1, 2, ...)
  is processed, in order, before the event at t: frames first dirtied
  before the previous boundary (k-1)*C are written clean, one checkpoint
  flush each.  A final checkpoint at end of trace cleans every dirty
  frame.  A disabled interval disables all checkpoint activity,
  including the final one.
* Clock2 keeps one reference bit per frame in a fixed ring of slots
  filled in index order; the hand starts at slot 0 and stops just past
  the victim.  Loads and hits set the bit.  The sweep skips ineligible
  frames without touching their bits; the fallback sweep ignores
  protection.
* LRU victims are least-recently-used; hits and loads both count as use.
"""
from __future__ import annotations

import io
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .rules import EconomicParams, TechnologyParams, break_even_interval

LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
_U64 = (1 << 64) - 1

TRACE_HEADER = "time,page,op"
REPORT_HEADER = ("logical,physical,hit_ratio,evictions,"
                 "contention_flushes,checkpoint_flushes,fallbacks")


class ConfigError(ValueError):
    """Invalid simulator or generator configuration."""


class TraceOrderError(ValueError):
    """Trace timestamps went backwards."""


class TraceEvent(NamedTuple):
    time_s: float
    page_id: object
    op: str  # "read" | "write"


@dataclass(frozen=True)
class PoolConfig:
    frames: int
    base_policy: str = "lru"            # lru | clock2
    n_minute_s: float = 0.0             # protection lifetime N, in seconds
    checkpoint_interval_s: float | None = None  # None disables checkpoints

    def __post_init__(self):
        if not isinstance(self.frames, int) or self.frames <= 0:
            raise ConfigError(f"frames must be a positive integer, got {self.frames!r}")
        if self.base_policy not in ("lru", "clock2"):
            raise ConfigError(f"base_policy must be lru or clock2, got {self.base_policy!r}")
        if self.n_minute_s < 0:
            raise ConfigError(f"n_minute_s must be >= 0, got {self.n_minute_s}")
        if self.checkpoint_interval_s is not None and not self.checkpoint_interval_s > 0:
            raise ConfigError("checkpoint_interval_s must be > 0 or None")


@dataclass(frozen=True)
class SimReport:
    logical_accesses: int
    physical_reads: int
    evictions: int
    contention_flushes: int
    checkpoint_flushes: int
    protected_eviction_fallbacks: int
    hit_ratio: float

    def csv(self) -> str:
        return (f"{REPORT_HEADER}\n"
                f"{self.logical_accesses},{self.physical_reads},"
                f"{self.hit_ratio:.6g},{self.evictions},"
                f"{self.contention_flushes},{self.checkpoint_flushes},"
                f"{self.protected_eviction_fallbacks}\n")


def simulate(trace: Iterable[tuple], config: PoolConfig,
             event_log: list | None = None) -> SimReport:
    """Run the pool over a time-ordered trace and return the counters.

    event_log, when given, receives one
    ("evict", time, page, protected_until, was_fallback) tuple per
    eviction, for auditing the protection guarantee.
    """
    if config.base_policy == "lru":
        return _run_lru(trace, config, event_log)
    return _run_clock2(trace, config, event_log)


def _report(logical, physical, evictions, contention, checkpoints, fallbacks) -> SimReport:
    hit_ratio = 1.0 - physical / logical if logical else 0.0
    return SimReport(logical, physical, evictions, contention, checkpoints,
                     fallbacks, hit_ratio)


def _run_lru(trace, config: PoolConfig, event_log) -> SimReport:
    frames = config.frames
    n_lifetime = config.n_minute_s
    cp = config.checkpoint_interval_s

    history: dict = {}
    # page -> [protected_until, dirty, first_dirtied]; order == recency
    pool: OrderedDict = OrderedDict()
    move_to_end = pool.move_to_end
    logical = physical = evictions = contention = checkpoints = fallbacks = 0
    dirty_count = 0
    cp_k = 1
    prev_t = None

    for t, page, op in trace:
        if prev_t is not None and t < prev_t:
            raise TraceOrderError(
                f"trace is not time-ordered: {t} after {prev_t}")
        prev_t = t

        if cp is not None:
            boundary = cp_k * cp
            while boundary <= t:
                if dirty_count:
                    cutoff = boundary - cp
                    for st in pool.values():
                        if st[1] and st[2] < cutoff:
                            st[1] = False
                            checkpoints += 1
                            dirty_count -= 1
                cp_k += 1
                boundary = cp_k * cp

        logical += 1
        st = pool.get(page)
        if st is not None:
            move_to_end(page)
            if op == "write" and not st[1]:
                st[1] = True
                st[2] = t
                dirty_count += 1
        else:
            physical += 1
            last = history.get(page)
            protected = t + n_lifetime if (last is not None and last >= t - n_lifetime) else t
            if len(pool) >= frames:
                victim = None
                for p, vst in pool.items():
                    if vst[0] <= t:
                        victim = p
                        break
                if victim is None:
                    victim = next(iter(pool))
                    fallbacks += 1
                    was_fallback = True
                else:
                    was_fallback = False
                vst = pool.pop(victim)
                evictions += 1
                if vst[1]:
                    contention += 1
                    dirty_count -= 1
                if event_log is not None:
                    event_log.append(("evict", t, victim, vst[0], was_fallback))
            if op == "write":
                pool[page] = [protected, True, t]
                dirty_count += 1
            else:
                pool[page] = [protected, False, 0.0]
        history[page] = t

    if cp is not None and dirty_count:
        checkpoints += dirty_count  # final checkpoint cleans everything
    return _report(logical, physical, evictions, contention, checkpoints, fallbacks)


def _run_clock2(trace, config: PoolConfig, event_log) -> SimReport:
    frames = config.frames
    n_lifetime = config.n_minute_s
    cp = config.checkpoint_interval_s

    history: dict = {}
    slot_of: dict = {}
    slot_page = [None] * frames
    ref = bytearray(frames)
    protected = [0.0] * frames
    dirty = bytearray(frames)
    first_dirt = [0.0] * frames
    hand = 0
    used = 0
    logical = physical = evictions = contention = checkpoints = fallbacks = 0
    dirty_count = 0
    cp_k = 1
    prev_t = None

    for t, page, op in trace:
        if prev_t is not None and t < prev_t:
            raise TraceOrderError(
                f"trace is not time-ordered: {t} after {prev_t}")
        prev_t = t

        if cp is not None:
            boundary = cp_k * cp
            while boundary <= t:
                if dirty_count:
                    cutoff = boundary - cp
                    for i in range(used):
                        if dirty[i] and first_dirt[i] < cutoff:
                            dirty[i] = 0
                            checkpoints += 1
                            dirty_count -= 1
                cp_k += 1
                boundary = cp_k * cp

        logical += 1
        i = slot_of.get(page)
        if i is not None:
            ref[i] = 1
            if op == "write" and not dirty[i]:
                dirty[i] = 1
                first_dirt[i] = t
                dirty_count += 1
        else:
            physical += 1
            last = history.get(page)
            prot = t + n_lifetime if (last is not None and last >= t - n_lifetime) else t
            if used < frames:
                i = used
                used += 1
            else:
                # Two rounds over eligible frames: the first clears
                # reference bits, the second must hit an unreferenced one.
                i = hand
                remaining = 2 * frames
                was_fallback = False
                while remaining:
                    if protected[i] <= t:
                        if ref[i]:
                            ref[i] = 0
                        else:
                            break
                    i = i + 1 if i + 1 < frames else 0
                    remaining -= 1
                else:
                    # every frame is protected: sweep again, ignoring protection
                    was_fallback = True
                    fallbacks += 1
                    while ref[i]:
                        ref[i] = 0
                        i = i + 1 if i + 1 < frames else 0
                hand = i + 1 if i + 1 < frames else 0
                old = slot_page[i]
                del slot_of[old]
                evictions += 1
                if dirty[i]:
                    contention += 1
                    dirty_count -= 1
                if event_log is not None:
                    event_log.append(("evict", t, old, protected[i], was_fallback))
            slot_page[i] = page
            slot_of[page] = i
            ref[i] = 1
            protected[i] = prot
            if op == "write":
                dirty[i] = 1
                first_dirt[i] = t
                dirty_count += 1
            else:
                dirty[i] = 0
        history[page] = t

    if cp is not None and dirty_count:
        checkpoints += dirty_count
    return _report(logical, physical, evictions, contention, checkpoints, fallbacks)


def recommended_n(tp: TechnologyParams, ep: EconomicParams) -> float:
    """Economically justified lifetime N: the break-even reference interval."""
    return break_even_interval(tp, ep).interval_s


def generate_trace(seed: int, n_ops: int, n_pages: int, zipf_s: float = 0.0,
                   write_fraction: float = 0.0,
                   ops_per_second: float = 1.0) -> list[TraceEvent]:
    """Deterministic synthetic trace: Zipf(s) page popularity, fixed op rate.

    The stream is reproducible bit for bit from the seed: a 64-bit LCG
    (state' = state * 6364136223846793005 + 1442695040888963407 mod
    2**64) supplies uniforms from the top 53 bits of each new state; per
    op the first uniform picks a page rank by inverse CDF over
    Zipf(zipf_s) (s=0 is uniform), the second makes it a write when below
    write_fraction.  Event k happens at k / ops_per_second.
    """
    if n_pages <= 0:
        raise ConfigError(f"n_pages must be > 0, got {n_pages}")
    if n_ops < 0:
        raise ConfigError(f"n_ops must be >= 0, got {n_ops}")
    if zipf_s < 0:
        raise ConfigError(f"zipf_s must be >= 0, got {zipf_s}")
    if not 0.0 <= write_fraction <= 1.0:
        raise ConfigError(f"write_fraction must be in [0, 1], got {write_fraction}")
    if not ops_per_second > 0:
        raise ConfigError(f"ops_per_second must be > 0, got {ops_per_second}")
    if n_ops == 0:
        return []

    # LCG states vectorized: state_k = A^k * seed + (1 + A + ... + A^(k-1)) * C
    n = 2 * n_ops
    mult = np.uint64(LCG_MULT)
    apow = np.cumprod(np.full(n, mult, dtype=np.uint64))
    geo = np.cumsum(np.concatenate((np.ones(1, dtype=np.uint64), apow[:-1])),
                    dtype=np.uint64)
    states = apow * np.uint64(seed & _U64) + geo * np.uint64(LCG_INC)
    uniforms = (states >> np.uint64(11)).astype(np.float64) * 2.0**-53

    weights = 1.0 / np.arange(1, n_pages + 1, dtype=np.float64) ** zipf_s
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    ranks = np.searchsorted(cdf, uniforms[0::2], side="right")
    ranks = np.minimum(ranks, n_pages - 1) + 1  # 1-based rank ids
    writes = uniforms[1::2] < write_fraction
    times = np.arange(n_ops, dtype=np.float64) / ops_per_second

    return [TraceEvent(t, int(r), "write" if w else "read")
            for t, r, w in zip(times.tolist(), ranks.tolist(), writes.tolist())]


# --- trace and report serialization ---------------------------------------

_OPS_IN = {"r": "read", "w": "write"}
_OPS_OUT = {"read": "r", "write": "w"}


def write_trace_csv(trace: Iterable[TraceEvent], fh: io.TextIOBase) -> None:
    """Trace CSV: header ``time,page,op``; op is r/w.

    Times keep full precision (repr) so a written trace replays exactly.
    """
    fh.write(TRACE_HEADER + "\n")
    for t, page, op in trace:
        fh.write(f"{t!r},{page},{_OPS_OUT[op]}\n")


def read_trace_csv(fh: io.TextIOBase) -> list[TraceEvent]:
    header = fh.readline().rstrip("\n").rstrip("\r")
    if header != TRACE_HEADER:
        raise ValueError(f"trace file must start with {TRACE_HEADER!r}, got {header!r}")
    events = []
    for lineno, line in enumerate(fh, start=2):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 fields, got {len(parts)}")
        t_raw, page, op_raw = parts
        try:
            t = float(t_raw)
        except ValueError:
            raise ValueError(f"line {lineno}: bad time {t_raw!r}") from None
        op = _OPS_IN.get(op_raw)
        if op is None:
            raise ValueError(f"line {lineno}: op must be r or w, got {op_raw!r}")
        events.append(TraceEvent(t, page, op))
    return events
