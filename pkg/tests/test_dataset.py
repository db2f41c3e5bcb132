import math

import pytest
from hypothesis import given, strategies as st

from thermofit import Sample, Series, builtin_series, builtin_profiles, parse_csv, to_csv, validate
from thermofit.errors import (
    EmptySeries,
    MalformedRow,
    NonIncreasingTime,
    OutOfRange,
    ThermofitError,
)

from oracles import FULL, IDLE, TIMES, decimal_sums


def test_parse_minimal():
    s = parse_csv("time_s,temperature_c\n0,20.2\n5,20.2")
    assert len(s.samples) == 2
    assert [x.time_s for x in s.samples] == [0.0, 5.0]
    assert s.samples[1].temperature_c == 20.2
    assert s.power_w is None
    assert s.label == ""


def test_parse_comment_metadata():
    s = parse_csv("# label: bench-a\n# power_w: 150\ntime_s,temperature_c\n0,20\n1,21\n")
    assert s.label == "bench-a"
    assert s.power_w == 150.0


def test_parse_duplicate_timestamp():
    with pytest.raises(NonIncreasingTime):
        parse_csv("time_s,temperature_c\n5,20\n5,21")


def test_parse_header_only():
    with pytest.raises(EmptySeries):
        parse_csv("time_s,temperature_c\n")


@pytest.mark.parametrize(
    "text,err",
    [
        ("time_s,temperature_c\n1,2,3\n", MalformedRow),
        ("time_s,temperature_c\nab,2\n", MalformedRow),
        ("wrong,header\n1,2\n", MalformedRow),
        ("", MalformedRow),
        ("time_s,temperature_c\n-1,20\n", OutOfRange),
        ("time_s,temperature_c\n1,20000\n", OutOfRange),
        ("time_s,temperature_c\n1,nan\n", OutOfRange),
        ("time_s,temperature_c\n1,-300\n", OutOfRange),
        ("# power_w: -5\ntime_s,temperature_c\n1,20\n", OutOfRange),
        ("# power_w: lots\ntime_s,temperature_c\n1,20\n", MalformedRow),
    ],
)
def test_parse_rejections(text, err):
    with pytest.raises(err):
        parse_csv(text)


def test_builtin_shapes():
    idle, full = builtin_profiles()
    assert idle.samples[0] == Sample(1.0, 20.2)
    assert full.samples[12] == Sample(60.0, 56.8)
    assert idle.power_w == 85.0 and full.power_w == 150.0
    assert len(idle.samples) == len(full.samples) == 13
    assert [s.time_s for s in idle.samples] == [1.0] + [float(t) for t in range(5, 65, 5)]


def test_builtin_sums_match_decimal_oracle():
    idle, full = builtin_profiles()
    for series, temps in ((idle, IDLE), (full, FULL)):
        expected = decimal_sums(TIMES, temps)
        assert math.fsum(s.temperature_c for s in series.samples) == pytest.approx(
            float(expected["sum_y"]), abs=1e-9
        )
        assert math.fsum(s.time_s for s in series.samples) == 391.0


def test_builtin_lookup():
    assert builtin_series("idle").label == "idle-load-85W"
    assert builtin_series("full").label == "full-load-150W"
    with pytest.raises(KeyError):
        builtin_series("turbo")


def test_validate_builtin_clean():
    idle, full = builtin_profiles()
    assert validate(idle) == []
    assert validate(full) == []


def test_validate_reports_nan():
    s = Series("x", (Sample(0.0, float("nan")),))
    report = validate(s)
    assert any(v.rule == "OutOfRange" and v.index == 0 for v in report)


def test_validate_reports_time_order():
    s = Series("x", (Sample(0.0, 20.0), Sample(10.0, 20.0), Sample(5.0, 20.0)))
    report = validate(s)
    assert any(v.rule == "NonIncreasingTime" and v.index == 2 for v in report)


def test_validate_reports_empty_and_power():
    assert any(v.rule == "EmptySeries" for v in validate(Series("x", ())))
    bad_power = Series("x", (Sample(0.0, 20.0),), power_w=-3.0)
    assert any(v.rule == "OutOfRange" and v.index is None for v in validate(bad_power))


_label_alpha = st.text(
    alphabet="abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 -_:.",
    max_size=30,
).map(str.strip)


@st.composite
def valid_series(draw):
    times = sorted(
        draw(
            st.lists(
                st.floats(0, 1e6, allow_nan=False, allow_infinity=False),
                unique=True,
                min_size=1,
                max_size=20,
            )
        )
    )
    temps = draw(
        st.lists(
            st.floats(-273.15, 10000, allow_nan=False, allow_infinity=False),
            min_size=len(times),
            max_size=len(times),
        )
    )
    label = draw(_label_alpha)
    power = draw(st.one_of(st.none(), st.floats(1e-3, 1e9, allow_nan=False)))
    return Series(label, tuple(Sample(t, y) for t, y in zip(times, temps)), power)


@given(valid_series())
def test_csv_round_trip(series):
    assert parse_csv(to_csv(series)) == series


@given(st.text(max_size=300))
def test_parse_never_yields_invalid_series(text):
    try:
        series = parse_csv(text)
    except ThermofitError:
        return
    assert validate(series) == []
