"""Common data types shared by the serialisable models."""

import math
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator


def parse_complex(value: Any) -> complex:
    """Coerce JSON-friendly representations into a complex number.

    Accepts numbers, strings such as ``"1+2j"``, ``[re, im]`` pairs and
    ``{"re": ..., "im": ...}`` mappings.

    Raises:
        ValueError: Value cannot be read as a finite complex number
    """
    if isinstance(value, bool):
        raise ValueError("boolean is not a complex number")
    if isinstance(value, int | float | complex):
        result = complex(value)
    elif isinstance(value, str):
        result = complex(value.replace(" ", "").replace("i", "j"))
    elif isinstance(value, list | tuple) and len(value) == 2:
        result = complex(float(value[0]), float(value[1]))
    elif isinstance(value, dict) and set(value) <= {"re", "im"}:
        result = complex(float(value.get("re", 0.0)), float(value.get("im", 0.0)))
    else:
        raise ValueError(f"cannot interpret {value!r} as a complex number")
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise ValueError("complex value must be finite")
    return result


def dump_complex(value: complex) -> float | list[float]:
    """Real values serialise as plain numbers, others as ``[re, im]``."""
    if value.imag == 0:
        return value.real
    return [value.real, value.imag]


ComplexValue = Annotated[
    complex,
    PlainValidator(parse_complex),
    PlainSerializer(dump_complex, return_type=Any),
]
