"""Exact integer Laurent polynomials.

These carry symmetrized Alexander polynomials and graded Euler
characteristics.  Coefficients are plain Python ints indexed by integer
degree; zero coefficients are never stored, so equality of the underlying
dicts is equality of polynomials.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPolynomial:
    """Finitely supported map ``degree -> coefficient`` over the integers.

    Instances are immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        clean: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for deg, coeff in items:
            if not isinstance(deg, int) or not isinstance(coeff, int):
                raise TypeError(f"degree and coefficient must be ints, got {deg!r}: {coeff!r}")
            if coeff:
                clean[deg] = clean.get(deg, 0) + coeff
                if not clean[deg]:
                    del clean[deg]
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({degree: coeff})

    @classmethod
    def from_centered_list(cls, coeffs: Iterable[int]) -> "LaurentPolynomial":
        """Build from an odd-length coefficient list centered at degree 0.

        Entry ``k`` of a ``(2g+1)``-entry list maps to degree ``k - g``.
        """
        seq = list(coeffs)
        if len(seq) % 2 == 0:
            raise ValueError(f"centered list must have odd length, got {len(seq)}")
        g = len(seq) // 2
        return cls({k - g: c for k, c in enumerate(seq)})

    # -- queries -------------------------------------------------------

    def coeff(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (degree, coefficient) pairs in ascending degree order."""
        for deg in sorted(self._coeffs):
            yield deg, self._coeffs[deg]

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    @property
    def top_degree(self) -> int:
        """Largest degree with a nonzero coefficient (0 for the zero polynomial)."""
        return max(self._coeffs, default=0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_symmetric(self) -> bool:
        """True when coeff(d) == coeff(-d) for every degree."""
        return all(self._coeffs.get(-d) == c for d, c in self._coeffs.items())

    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self._coeffs.values())

    def __call__(self, value: int) -> int:
        """Evaluate at a nonzero integer (exact; negative degrees must divide)."""
        if value == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        total = 0
        for deg, coeff in self._coeffs.items():
            if deg >= 0:
                total += coeff * value**deg
            else:
                q, r = divmod(coeff, value ** (-deg))
                if r:
                    raise ValueError(f"evaluation at {value} is not integral")
                total += q
        return total

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self._coeffs)
        for deg, coeff in other._coeffs.items():
            out[deg] = out.get(deg, 0) + coeff
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPolynomial(out)

    def inflate(self, p: int) -> "LaurentPolynomial":
        """Substitute t -> t**p."""
        return LaurentPolynomial({p * d: c for d, c in self._coeffs.items()})

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by t**k."""
        return LaurentPolynomial({d + k: c for d, c in self._coeffs.items()})

    # -- comparisons / display -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for deg in sorted(self._coeffs, reverse=True):
            coeff = self._coeffs[deg]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if deg == 0:
                body = str(mag)
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (f"-{first_body}" if first_sign == "-" else first_body)
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(sorted(self._coeffs.items()))!r})"
