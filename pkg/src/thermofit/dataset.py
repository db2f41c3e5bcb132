"""Temperature/time series ingestion and validation.

The one ingestion format is CSV:

    # label: bench-a          (optional, before the header)
    # power_w: 150            (optional, before the header)
    time_s,temperature_c
    1,20.2
    5,22.4

Lines starting with ``#`` are comments; ``label`` and ``power_w`` comment
keys are recognized before the header row. Timestamps must be strictly
increasing and temperatures within the sanity bound [-273.15, 10000] degC.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptySeries, MalformedRow, NonIncreasingTime, OutOfRange

TEMP_MIN_C = -273.15
TEMP_MAX_C = 10000.0

_HEADER = "time_s,temperature_c"


@dataclass(frozen=True)
class Sample:
    """One temperature reading at a point in time."""

    time_s: float
    temperature_c: float


@dataclass(frozen=True)
class Series:
    """A labeled, time-ordered sequence of readings under a stated power load.

    Construction does not validate; use :func:`validate` to obtain a
    violation report, or rely on :func:`parse_csv` which refuses to
    produce an invalid Series.
    """

    label: str
    samples: tuple[Sample, ...]
    power_w: float | None = None

    def points(self) -> list[tuple[float, float]]:
        """Return (time_s, temperature_c) pairs in order."""
        return [(s.time_s, s.temperature_c) for s in self.samples]


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by :func:`validate`.

    ``index`` is the offending sample position, or None for series-level
    violations (e.g. an empty series or a bad power rating).
    """

    rule: str
    index: int | None
    message: str


def _check_sample(index: int, s: Sample) -> list[Violation]:
    out = []
    if not math.isfinite(s.time_s) or s.time_s < 0:
        out.append(Violation("OutOfRange", index, f"time_s={s.time_s!r} must be finite and >= 0"))
    if not math.isfinite(s.temperature_c) or not (TEMP_MIN_C <= s.temperature_c <= TEMP_MAX_C):
        out.append(
            Violation(
                "OutOfRange",
                index,
                f"temperature_c={s.temperature_c!r} outside [{TEMP_MIN_C}, {TEMP_MAX_C}]",
            )
        )
    return out


def validate(series: Series) -> list[Violation]:
    """Check all Series invariants; an empty report means the series is valid.

    Violations are data, not failures: invalid series are representable so
    that callers can inspect what is wrong with them.
    """
    report: list[Violation] = []
    if not series.samples:
        report.append(Violation("EmptySeries", None, "series has no samples"))
    if series.power_w is not None and not (
        math.isfinite(series.power_w) and series.power_w > 0
    ):
        report.append(Violation("OutOfRange", None, f"power_w={series.power_w!r} must be positive"))
    for i, s in enumerate(series.samples):
        report.extend(_check_sample(i, s))
    for i in range(1, len(series.samples)):
        if not (series.samples[i].time_s > series.samples[i - 1].time_s):
            report.append(
                Violation(
                    "NonIncreasingTime",
                    i,
                    f"time_s[{i}]={series.samples[i].time_s!r} does not exceed "
                    f"time_s[{i - 1}]={series.samples[i - 1].time_s!r}",
                )
            )
    return report


def parse_csv(text: str) -> Series:
    """Parse CSV text into a Series, refusing anything that breaks an invariant.

    Raises MalformedRow, NonIncreasingTime, EmptySeries, or OutOfRange; never
    returns an invalid Series.
    """
    label = ""
    power_w: float | None = None
    samples: list[Sample] = []
    seen_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not seen_header:
                body = line[1:].strip()
                key, _, value = body.partition(":")
                key = key.strip().lower()
                if key == "label":
                    label = value.strip()
                elif key == "power_w":
                    try:
                        power_w = float(value)
                    except ValueError:
                        raise MalformedRow(f"line {lineno}: power_w is not a number: {value.strip()!r}")
                    if not math.isfinite(power_w) or power_w <= 0:
                        raise OutOfRange(f"line {lineno}: power_w={power_w!r} must be positive")
            continue
        if not seen_header:
            if line != _HEADER:
                raise MalformedRow(f"line {lineno}: expected header {_HEADER!r}, got {line!r}")
            seen_header = True
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise MalformedRow(f"line {lineno}: expected 2 fields, got {len(fields)}")
        try:
            t, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise MalformedRow(f"line {lineno}: non-numeric field in {line!r}")
        sample = Sample(t, y)
        bad = _check_sample(len(samples), sample)
        if bad:
            raise OutOfRange(f"line {lineno}: {bad[0].message}")
        if samples and not (t > samples[-1].time_s):
            raise NonIncreasingTime(
                f"line {lineno}: time_s={t!r} does not exceed previous {samples[-1].time_s!r}"
            )
        samples.append(sample)

    if not seen_header:
        raise MalformedRow(f"missing header row {_HEADER!r}")
    if not samples:
        raise EmptySeries("no data rows after header")
    return Series(label=label, samples=tuple(samples), power_w=power_w)


def to_csv(series: Series) -> str:
    """Serialize a Series to the CSV format accepted by :func:`parse_csv`.

    Floats are written with repr so a round trip reproduces the series
    field-for-field.
    """
    lines = []
    if series.label:
        lines.append(f"# label: {series.label}")
    if series.power_w is not None:
        lines.append(f"# power_w: {series.power_w!r}")
    lines.append(_HEADER)
    for s in series.samples:
        lines.append(f"{s.time_s!r},{s.temperature_c!r}")
    return "\n".join(lines) + "\n"


# Measured heat-sink temperature profile of an Intel Pentium D 915 under two
# steady loads (fan at high speed), sampled at 5 s intervals.  The first
# reading is the power-on value and is logged at t = 1 s: the summary sheet
# originally distributed with these measurements lists sum(t^2) = 16251 and
# sum(t*y) values that are only consistent with t = 1 for that row, even
# though its sum(t) = 390 implies t = 0.  We keep t = 1 and treat 390 as a
# typo for 391 (see README, "Dataset notes").
_TIMES_S = (1, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60)
_IDLE_TEMPS_C = (20.2, 20.2, 20.4, 20.5, 21.2, 21.8, 22.0, 23.8, 25.9, 26.4, 27.5, 28.0, 28.4)
_FULL_TEMPS_C = (20.2, 22.4, 25.0, 27.2, 29.6, 32.5, 33.8, 42.6, 54.7, 55.2, 56.0, 56.5, 56.8)

BUILTIN_NAMES = ("idle", "full")


def builtin_profiles() -> tuple[Series, Series]:
    """Return the embedded (idle 85 W, full 150 W) temperature profiles."""
    idle = Series(
        label="idle-load-85W",
        samples=tuple(Sample(float(t), y) for t, y in zip(_TIMES_S, _IDLE_TEMPS_C)),
        power_w=85.0,
    )
    full = Series(
        label="full-load-150W",
        samples=tuple(Sample(float(t), y) for t, y in zip(_TIMES_S, _FULL_TEMPS_C)),
        power_w=150.0,
    )
    return idle, full


def builtin_series(name: str) -> Series:
    """Look up one embedded series by short name ('idle' or 'full')."""
    idle, full = builtin_profiles()
    if name == "idle":
        return idle
    if name == "full":
        return full
    raise KeyError(f"unknown builtin series {name!r}; choose from {BUILTIN_NAMES}")
