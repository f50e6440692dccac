"""Parse and format exact rationals the way canonstrip documents them."""
from fractions import Fraction
from typing import List, Union

from ..exceptions import InvalidRange, MalformedInput


def format_rational(value: Union[Fraction, int]) -> str:
    """Return ``value`` as a ``"num/den"`` string.

    Integers keep the ``/1`` denominator so that every serialized coefficient has the
    same shape.

    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int, Fraction], source: str = None) -> Fraction:
    """Parse ``text`` as an exact rational.

    Accepts integers, ``"num/den"`` and finite decimal strings such as ``"0.25"``.

    :param text: The value to parse.
    :param source: A label used in the error message (default: ``None``).

    :raises: :class:`.MalformedInput` when ``text`` is not a rational.

    """
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise MalformedInput(f"{text!r} is not an exact rational number.", source)


def parse_rational_list(text: str, source: str = None) -> List[Fraction]:
    """Parse a comma separated list of rationals, for example ``"1,3/2,2"``."""
    items = [item for item in (part.strip() for part in text.split(",")) if item]
    if not items:
        raise MalformedInput("expected at least one rational number.", source)
    return [parse_rational(item, source) for item in items]


def parse_range(text: str, name: str = "range") -> List[Fraction]:
    """Expand a range of the form ``a..b`` or ``a..b:step`` into its values.

    A single rational is a one element range. Bounds are inclusive and the values come
    out in ascending order.

    :param text: The range text.
    :param name: The option name used in error messages (default: ``"range"``).

    :raises: :class:`.InvalidRange` for an empty range or a non-positive step.

    """
    text = str(text).strip()
    step = Fraction(1)
    if ":" in text:
        text, step_text = text.split(":", 1)
        step = parse_rational(step_text, name)
        if step <= 0:
            raise InvalidRange(f"The step of {name} must be positive, got {step}.")
    if ".." in text:
        low_text, high_text = text.split("..", 1)
        low, high = parse_rational(low_text, name), parse_rational(high_text, name)
    else:
        low = high = parse_rational(text, name)
    if high < low:
        raise InvalidRange(f"The range {name}={low}..{high} is empty.")
    values = []
    value = low
    while value <= high:
        values.append(value)
        value += step
    return values
