"""
Coefficient fields: the rationals and the prime fields F_p.

Elements are sympy domain elements, so all arithmetic is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from sympy import GF, QQ, isprime
from sympy.polys.domains.domain import Domain

from ..errors import CochainInputError


@dataclass(frozen=True)
class Field:
    """Coefficient field; characteristic 0 means Q, otherwise F_p"""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise CochainInputError(
                f"Field characteristic must be 0 or prime, got {self.characteristic}"
            )

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, name: str) -> "Field":
        """Parse ``q``/``Q`` or ``f<p>``/``F<p>`` (for example ``f2``)."""
        text = name.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(0)
        if text.startswith("f") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise CochainInputError(f"Unknown field {name!r}; use q, f2, f3, f5, ...")

    @property
    def domain(self) -> Domain:
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    @property
    def is_f2(self) -> bool:
        return self.characteristic == 2

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def element(self, value: Union[int, Fraction, Any]) -> Any:
        if isinstance(value, Fraction):
            dom = self.domain
            return dom.convert(value.numerator) / dom.convert(value.denominator)
        return self.domain.convert(value)

    def to_python(self, value: Any) -> Union[int, Fraction]:
        """Plain int (canonical residue for F_p) or Fraction for Q."""
        if self.characteristic:
            return int(value) % self.characteristic
        q = self.domain.to_sympy(value)
        return int(q) if q.q == 1 else Fraction(int(q.p), int(q.q))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


RATIONALS = Field(0)
F2 = Field(2)
