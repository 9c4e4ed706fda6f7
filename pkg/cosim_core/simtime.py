# integer-nanosecond simulation time helpers
# all clock arithmetic stays in int; floats only at the edges (config, CSV)

NANOS_PER_SECOND = 1_000_000_000
NANOS_PER_MILLI = 1_000_000


def seconds_to_nanos(seconds: float) -> int:
    if seconds < 0:
        raise ValueError(f"negative duration: {seconds}")
    return int(round(seconds * NANOS_PER_SECOND))


def hz_to_period(hz: float) -> int:
    """Period in ns for a frequency, rounded to the nearest nanosecond."""
    if hz <= 0:
        raise ValueError(f"frequency must be positive, got {hz}")
    return int(round(NANOS_PER_SECOND / hz))


def nanos_to_seconds(nanos: int) -> float:
    return nanos / NANOS_PER_SECOND


def nanos_to_millis(nanos: int) -> int:
    return nanos // NANOS_PER_MILLI
