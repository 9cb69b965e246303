import json

SIGNIFICANT_DIGITS = 12


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    """Round to a fixed number of significant digits, so printed floats are stable"""
    rounded = float(f"{float(value):.{digits}g}")
    # avoid printing -0.0
    return rounded + 0.0


def format_float(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Format a float with a fixed number of significant digits"""
    return f"{round_significant(value, digits):.{digits}g}"


def dumps_json(payload) -> str:
    """JSON text with keys in insertion order and a trailing newline"""
    return json.dumps(payload, indent=2, sort_keys=False, allow_nan=False) + "\n"


def parse_grid(text: str) -> list:
    """Parse a comma separated list of reals, e.g. "0,0.5,1,2" """
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ValueError(f"Invalid grid {text!r}: {e}")
    if not values:
        raise ValueError("grid must contain at least one value")
    return values
