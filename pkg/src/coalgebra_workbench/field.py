"""Exact base fields: the rationals and the prime fields GF(p)."""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .errors import FieldElementError, UnsupportedFieldError, validate_prime

logger = logging.getLogger(__name__)

Element = Union[int, Fraction]

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"

_RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


@dataclass(frozen=True)
class FieldSpec:
    """The base field k.

    Rational elements are ``Fraction`` values (lowest terms, positive
    denominator). Elements of GF(p) are plain ints in ``range(p)``.

    Attributes:
        kind: Either ``"rationals"`` or ``"prime-field"``
        characteristic: 0 for the rationals, the prime p otherwise
    """

    kind: str = RATIONALS
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic != 0:
                raise UnsupportedFieldError(
                    "the rationals have characteristic 0",
                    field="characteristic",
                    details={"value": self.characteristic},
                )
        elif self.kind == PRIME_FIELD:
            validate_prime(self.characteristic, "characteristic")
        else:
            raise UnsupportedFieldError(
                f"unknown field kind {self.kind!r}",
                field="kind",
                details={"choices": [RATIONALS, PRIME_FIELD]},
            )

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS, 0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        """Read ``Q`` or ``GF(p)`` / ``GFp`` (as used in configuration and the CLI)."""
        text = label.strip().upper().replace(" ", "")
        if text in ("Q", "QQ", "RATIONALS"):
            return cls.rationals()
        match = re.fullmatch(r"GF\(?(\d+)\)?", text)
        if match is None:
            raise UnsupportedFieldError(
                f"cannot read field {label!r}; use Q or GF(p)",
                field="field",
                details={"value": label},
            )
        return cls.prime_field(int(match.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def label(self) -> str:
        return f"GF({self.characteristic})" if self.is_prime_field else "Q"

    @property
    def zero(self) -> Element:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Element:
        return 1 if self.is_prime_field else Fraction(1)

    def element(self, value: Any) -> Element:
        """Coerce an int, ``Fraction`` or string into this field.

        Ints are reduced modulo p over GF(p), so ``element(-1)`` is ``p - 1``.

        Raises:
            FieldElementError: If the value has no image in the field
        """
        if self.is_prime_field:
            if type(value) is int:
                return value % self.characteristic
            if isinstance(value, bool):
                raise FieldElementError(f"booleans are not field elements: {value!r}")
            if isinstance(value, int):
                return int(value) % self.characteristic
            if isinstance(value, Fraction):
                if value.denominator % self.characteristic == 0:
                    raise FieldElementError(
                        f"{value} has no image in {self.label}",
                        details={"value": str(value)},
                    )
                return (value.numerator * pow(value.denominator, -1, self.characteristic)) % self.characteristic
            if isinstance(value, str):
                return self.parse(value)
        else:
            if type(value) is Fraction:
                return value
            if isinstance(value, bool):
                raise FieldElementError(f"booleans are not field elements: {value!r}")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, str):
                return self.parse(value)
        raise FieldElementError(
            f"cannot read {value!r} as an element of {self.label}",
            details={"value": repr(value)},
        )

    def parse(self, value: Any) -> Element:
        """Strictly read a serialized entry.

        Rationals accept ``"p/q"``, ``"p"`` or an int. GF(p) accepts only an int in
        ``[0, p)``; nothing is reduced.

        Raises:
            FieldElementError: On malformed or out-of-range entries
        """
        if isinstance(value, bool):
            raise FieldElementError(f"booleans are not field elements: {value!r}")
        if self.is_prime_field:
            if not isinstance(value, int):
                raise FieldElementError(
                    f"{self.label} entries must be integers, got {value!r}",
                    details={"value": repr(value)},
                )
            if not 0 <= value < self.characteristic:
                raise FieldElementError(
                    f"{value} is out of range for {self.label}",
                    details={"value": value, "range": [0, self.characteristic - 1]},
                )
            return value
        if isinstance(value, int):
            return Fraction(value)
        if not isinstance(value, str) or not _RATIONAL_PATTERN.match(value.strip()):
            raise FieldElementError(
                f"rational entries must look like 'p/q' or 'p', got {value!r}",
                details={"value": repr(value)},
            )
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise FieldElementError(f"zero denominator in {value!r}", details={"value": value})

    def format(self, value: Element) -> Union[int, str]:
        """Serialize an element: ``"p/q"`` strings for Q, ints for GF(p)."""
        if self.is_prime_field:
            return int(value)
        return str(Fraction(value))

    def reduce(self, value: Element) -> Element:
        if self.is_prime_field:
            return value % self.characteristic
        return value if type(value) is Fraction else Fraction(value)

    def inverse(self, value: Element) -> Element:
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.label}")
        if self.is_prime_field:
            return pow(int(value), -1, self.characteristic)
        return 1 / Fraction(value)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    """Shorthand for ``FieldSpec.prime_field(p)``."""
    return FieldSpec.prime_field(p)
