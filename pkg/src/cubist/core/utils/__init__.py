import json
import math
from fractions import Fraction
from typing import Any, Iterable, Union

Rational = Union[int, Fraction]


def fraction_to_str(value: Rational) -> str:
	"""Serialise an exact rational as a decimal-free "p/q" string.

	Usage: `fraction_to_str(Fraction(3, 10))` -> "3/10"
	Usage: `fraction_to_str(1)` -> "1/1"
	"""
	q = Fraction(value)
	return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: Union[str, int, Fraction]) -> Fraction:
	"""Parse "p/q" or an integer string into a Fraction.

	Floats and decimal strings are rejected so serialised values stay exact.
	Usage: `parse_fraction("3/10")` -> Fraction(3, 10)
	"""
	if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
		return Fraction(text)

	if not isinstance(text, str):
		raise ValueError(f"expected a rational string, got {text!r}")

	cleaned = text.strip()
	if "." in cleaned or "e" in cleaned.lower():
		raise ValueError(f"rationals must be written as p/q, got {text!r}")

	try:
		return Fraction(cleaned)
	except (ValueError, ZeroDivisionError) as e:
		raise ValueError(f"not a rational: {text!r}") from e


def extended_to_json(value: Union[int, Fraction, float]) -> Any:
	"""Render an extended distance: infinity becomes the string "inf".

	Usage: `extended_to_json(math.inf)` -> "inf"
	"""
	if isinstance(value, float) and math.isinf(value):
		return "inf"
	if isinstance(value, Fraction):
		return fraction_to_str(value)
	return value


def parse_id_list(text: str) -> list[int]:
	"""Parse a comma separated list of naturals.

	Usage: `parse_id_list("0, 3,5")` -> [0, 3, 5]
	"""
	items = [part.strip() for part in text.split(",") if part.strip()]
	if not all(item.isdigit() for item in items):
		raise ValueError(f"expected comma separated naturals, got {text!r}")
	return [int(item) for item in items]


def dump_json(payload: Any, indent: int = 2) -> str:
	"""Deterministic JSON rendering: sorted keys, fixed separators, trailing newline."""
	return json.dumps(payload, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def sorted_ids(values: Iterable[int]) -> list[int]:
	return sorted(int(v) for v in values)
