"""Formal inverses of p-automatic sequences over prime fields.

Computes compositional inverses of generating series (digit-sum series and
modified Rudin-Shapiro series), synthesizes the minimal LSD-first automata
generating their coefficient sequences, and mechanically re-verifies the
quantitative claims made about them: state counts, synchronizing words, run
lengths, letter counts, witness families, and conjecture probes.
"""

__version__ = "0.1.0"

from .convolution import backend_name
from .fieldcore import DigitString, FieldElement, Prime, digit_sum, digits_lsd, value_lsd

__all__ = [
    "backend_name",
    "DigitString",
    "FieldElement",
    "Prime",
    "digit_sum",
    "digits_lsd",
    "value_lsd",
    "__version__",
]
