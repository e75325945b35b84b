"""Exact scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Scalar field descriptor: kind "Q" (rationals) or "Fp" (prime field)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("rationals carry no characteristic")
        elif self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"characteristic must be prime, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    def coerce(self, value):
        """Coerce an int, Fraction or string to a canonical field element."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == "Q":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} not invertible mod {self.p}"
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def scalar_str(self, value) -> str:
        """Canonical string form: "a" or "a/b"."""
        if self.kind == "Fp":
            return str(int(value) % self.p)
        v = Fraction(value)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        return {"kind": "Fp", "p": self.p}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return FieldSpec(obj["kind"], obj.get("p"))

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        """Parse a CLI field spec: "Q" or "Fp:<p>"."""
        if text == "Q":
            return QQ
        if text.startswith("Fp:"):
            return FieldSpec("Fp", int(text[3:]))
        raise ValueError(f"bad field spec {text!r} (expected Q or Fp:<p>)")


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)
