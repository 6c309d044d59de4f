"""Device throughput/price metrics: Kaps, Maps, scan time, and rent forms.

Kaps and Maps are the kilobyte and megabyte random accesses per second a
device sustains (latency plus transfer; a tape robot pays a full mount
per access).  Scan is the time to stream the whole device.  Dividing the
device rent (price depreciated over three years) by each rate gives
$/Kaps and $/Maps; $/TBscan is the rent accrued while streaming one
terabyte.

Everything here is decimal SI: KB = 1000 bytes, MB = 1e6, TB = 1e12.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .devices import DeviceSpec, RamSpec, TapeRobotSpec

THREE_YEARS_S = 3 * 365 * 86400  # 94,608,000 s

KB = 1e3
MB = 1e6
TB = 1e12


@dataclass(frozen=True)
class RentModel:
    depreciation_s: float = float(THREE_YEARS_S)

    def __post_init__(self):
        if not self.depreciation_s > 0:
            raise ValueError("depreciation_s must be > 0")


@dataclass(frozen=True)
class MetricReport:
    device: str
    kaps: float
    maps: float
    scan_s: float
    dollars_per_kaps: float
    dollars_per_maps: float
    dollars_per_tbscan: float


def _effective_latency(device: DeviceSpec) -> float:
    spec = device.spec
    return spec.mount_time_s if isinstance(spec, TapeRobotSpec) else spec.latency_s


def _price(device: DeviceSpec) -> float:
    return device.spec.price_dollars


def kaps(device: DeviceSpec) -> float:
    """Kilobyte accesses per second."""
    return 1.0 / (_effective_latency(device) + KB / device.spec.bandwidth_bps)


def maps(device: DeviceSpec) -> float:
    """Megabyte accesses per second."""
    return 1.0 / (_effective_latency(device) + MB / device.spec.bandwidth_bps)


def scan_seconds(device: DeviceSpec) -> float:
    """Time to sequentially read or write everything the device holds.

    A tape robot mounts every tape once and streams each in full.
    """
    spec = device.spec
    if isinstance(spec, TapeRobotSpec):
        return spec.tape_count * (spec.tape_capacity_bytes / spec.bandwidth_bps
                                  + spec.mount_time_s)
    if isinstance(spec, RamSpec):
        return spec.unit_capacity_bytes / spec.bandwidth_bps
    return spec.capacity_bytes / spec.bandwidth_bps


def dollar_rate(price_dollars: float, rent: RentModel = RentModel()) -> float:
    """Device rent in dollars per second of its depreciation life."""
    if not price_dollars > 0:
        raise ValueError("price_dollars must be > 0")
    return price_dollars / rent.depreciation_s


def dollars_per_tbscan(device: DeviceSpec, rent: RentModel = RentModel()) -> float:
    """Rent accrued while streaming one terabyte through the device."""
    spec = device.spec
    stream_s = TB / spec.bandwidth_bps
    if isinstance(spec, TapeRobotSpec):
        stream_s += math.ceil(TB / spec.tape_capacity_bytes) * spec.mount_time_s
    return dollar_rate(_price(device), rent) * stream_s


def metric_report(device: DeviceSpec, rent: RentModel = RentModel()) -> MetricReport:
    rate = dollar_rate(_price(device), rent)
    k, m = kaps(device), maps(device)
    return MetricReport(
        device=device.name,
        kaps=k,
        maps=m,
        scan_s=scan_seconds(device),
        dollars_per_kaps=rate / k,
        dollars_per_maps=rate / m,
        dollars_per_tbscan=dollars_per_tbscan(device, rent),
    )


def table8_reports(rent: RentModel = RentModel()) -> list[MetricReport]:
    """Metric reports for the high-performance RAM/disk/tape-robot trio."""
    from .devices import preset

    return [metric_report(preset(name), rent)
            for name in ("table8_ram", "table8_disk", "table8_tape_robot")]
