"""Range scanner: classify every fifth-power-free n in an interval.

Output order is by n regardless of worker count; chunks are contiguous and
reassembled in submission order, so the parallel path is bit-identical to
the sequential one.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .classify import NotFifthPowerFree, classify_radicand


def _scan_chunk(bounds: tuple[int, int]) -> list[tuple[int, str]]:
    lo, hi = bounds
    out = []
    for n in range(lo, hi + 1):
        try:
            rc = classify_radicand(n)
        except NotFifthPowerFree:
            continue
        out.append((n, rc.form.value))
    return out


def scan_range(lo: int, hi: int, jobs: int = 1) -> list[tuple[int, str]]:
    if not 1 < lo <= hi:
        raise ValueError("need 1 < lo <= hi")
    if jobs <= 1:
        return _scan_chunk((lo, hi))
    span = hi - lo + 1
    chunk = max(1, span // (jobs * 4))
    bounds = []
    start = lo
    while start <= hi:
        end = min(start + chunk - 1, hi)
        bounds.append((start, end))
        start = end + 1
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pieces = list(pool.map(_scan_chunk, bounds))
    out: list[tuple[int, str]] = []
    for piece in pieces:
        out.extend(piece)
    return out


def render_scan(results: list[tuple[int, str]]) -> str:
    return "\n".join(f"{n}\t{form}" for n, form in results)
