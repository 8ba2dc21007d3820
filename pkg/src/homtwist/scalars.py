"""Exact coefficient arithmetic: rationals and Laurent polynomials in q.

All identity checking runs over QLaurent, Laurent polynomials in one formal
parameter q with arbitrary-precision rational coefficients.  Keeping q formal
means a passing sweep proves the identity for every nonzero specialization of
q at once.  Division by general Laurent polynomials is deliberately absent;
only monomial inverses q^(-k) ever arise.
"""

from __future__ import annotations

import re
from fractions import Fraction

# Arbitrary-precision rational; Fraction already keeps gcd-reduced canonical
# form with positive denominator.
Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class QLaurent:
    """A Laurent polynomial in q: a sparse map exponent -> nonzero Fraction.

    Instances are immutable after construction and compare structurally;
    canonical form (no zero coefficients) makes structural equality the same
    as ring equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[int(exp)] = clean.get(int(exp), Fraction(0)) + coeff
                    if not clean[int(exp)]:
                        del clean[int(exp)]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QLaurent is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls()

    @classmethod
    def one(cls) -> "QLaurent":
        return cls({0: 1})

    @classmethod
    def of(cls, value) -> "QLaurent":
        """Constant Laurent polynomial from an int/Fraction/str rational."""
        return cls({0: _as_fraction(value)})

    @classmethod
    def q_power(cls, exponent: int, coeff=1) -> "QLaurent":
        return cls({exponent: _as_fraction(coeff)})

    # -- ring structure -----------------------------------------------

    def __add__(self, other) -> "QLaurent":
        other = _coerce(other)
        merged = dict(self.terms)
        for exp, coeff in other.terms.items():
            merged[exp] = merged.get(exp, Fraction(0)) + coeff
        return QLaurent(merged)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({exp: -coeff for exp, coeff in self.terms.items()})

    def __sub__(self, other) -> "QLaurent":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QLaurent":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QLaurent":
        other = _coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = QLaurent.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent.of(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- evaluation ---------------------------------------------------

    def specialize(self, q0) -> Fraction:
        """Evaluate at a concrete nonzero rational q = q0."""
        q0 = _as_fraction(q0)
        if q0 == 0:
            raise ValueError("cannot specialize at q = 0: negative exponents undefined")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            total += coeff * q0**exp
        return total

    # -- text form ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            if exp == 0:
                body = str(coeff)
            else:
                qpart = "q" if exp == 1 else f"q^{exp}"
                if coeff == 1:
                    body = qpart
                elif coeff == -1:
                    body = f"-{qpart}"
                else:
                    body = f"{coeff}*{qpart}"
            parts.append(body)
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return f"QLaurent({self})"

    @classmethod
    def parse(cls, text: str) -> "QLaurent":
        """Parse the rendered sparse-sum grammar, e.g. "3*q^-1 + 1/2*q^2"."""
        total = cls.zero()
        for sign, term in split_sum(text):
            total = total + sign * _parse_scalar_term(term)
        return total


_TERM_FACTOR = re.compile(r"^(?:(?P<coeff>-?\d+(?:/\d+)?)\*?)?(?:q(?:\^(?P<exp>-?\d+))?)?$")


def _parse_scalar_term(term: str) -> QLaurent:
    term = term.strip()
    if not term:
        raise ValueError("empty term in scalar expression")
    match = _TERM_FACTOR.match(term.replace(" ", ""))
    if not match or (match.group("coeff") is None and "q" not in term):
        raise ValueError(f"cannot parse scalar term {term!r}")
    coeff = Fraction(match.group("coeff")) if match.group("coeff") else Fraction(1)
    if "q" in term:
        exp = int(match.group("exp")) if match.group("exp") else 1
    else:
        exp = 0
    return QLaurent({exp: coeff})


def split_sum(text: str):
    """Split a sum into (sign, term) pairs at top-level + and - signs.

    A '-' that directly follows '^' or '*' belongs to the term (negative
    exponent or coefficient), not to the sum structure.  Parentheses are
    respected so "(q + 1)*x" stays one term.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    pieces = []
    sign = 1
    depth = 0
    current = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in "+-":
            prev = "".join(current).rstrip()
            if ch == "-" and prev and prev.endswith(("^", "*", "(")):
                current.append(ch)
            elif not prev:
                if ch == "-":
                    sign = -sign
            else:
                pieces.append((sign, prev))
                sign = 1 if ch == "+" else -1
                current = []
        else:
            current.append(ch)
        i += 1
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    last = "".join(current).strip()
    if not last:
        raise ValueError(f"dangling operator in {text!r}")
    pieces.append((sign, last))
    return pieces


def _coerce(value) -> QLaurent:
    if isinstance(value, QLaurent):
        return value
    if isinstance(value, (int, Fraction)):
        return QLaurent.of(value)
    raise TypeError(f"cannot coerce {value!r} to QLaurent")


ZERO = QLaurent.zero()
ONE = QLaurent.one()
Q = QLaurent.q_power(1)
Q_INV = QLaurent.q_power(-1)
