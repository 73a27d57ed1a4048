"""
Deterministic text rendering of densities
"""

from fractions import Fraction

from config.constants import FLOAT_SIGNIFICANT_DIGITS

def format_decimal(value: float) -> str:
    """
    Render a float with 17 significant digits; integral values keep a trailing '.0'

    Fixed precision rather than shortest round-trip: 25/91 renders as 0.27472527472527475
    """
    text = f"{value:.{FLOAT_SIGNIFICANT_DIGITS}g}"
    if "." not in text and "e" not in text and "inf" not in text and "nan" not in text:
        text += ".0"
    return text

def format_fraction(value: Fraction) -> str:
    """Render a fraction as 'num/den', or 'num' when the denominator is 1"""
    return str(value)
