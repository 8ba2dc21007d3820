"""The affine plane k[x,y] over QLaurent coefficients.

Sparse polynomials keyed by exponent vectors, formal partial derivatives,
graded slices, and algebra endomorphisms given by generator images.  The
variable list is fixed to (x, y); extending to n variables only requires
widening the exponent tuples and the VARIABLES list.
"""

from __future__ import annotations

import re

from .scalars import QLaurent, split_sum

VARIABLES = ("x", "y")


class Poly:
    """Element of k[x,y]: sparse map (i, j) -> nonzero QLaurent."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for expv, coeff in terms.items():
                i, j = int(expv[0]), int(expv[1])
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in {expv}")
                if not isinstance(coeff, QLaurent):
                    coeff = QLaurent.of(coeff)
                if coeff:
                    key = (i, j)
                    acc = clean.get(key, QLaurent.zero()) + coeff
                    if acc:
                        clean[key] = acc
                    else:
                        clean.pop(key, None)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): QLaurent.one()})

    @classmethod
    def monomial(cls, i, j, coeff=None):
        return cls({(i, j): coeff if coeff is not None else QLaurent.one()})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1)

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, QLaurent.zero()) + coeff
        return Poly(merged)

    def __neg__(self):
        return Poly({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QLaurent):
            return self.scaled(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, QLaurent.zero()) + c1 * c2
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (QLaurent, int)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, coeff):
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.of(coeff)
        return Poly({key: c * coeff for key, c in self.terms.items()})

    def __pow__(self, n):
        result = Poly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- calculus and grading -----------------------------------------

    def partial(self, var: str) -> "Poly":
        """Formal partial derivative in 'x' or 'y'."""
        idx = VARIABLES.index(var)
        out = {}
        for (i, j), coeff in self.terms.items():
            exps = [i, j]
            power = exps[idx]
            if power == 0:
                continue
            exps[idx] -= 1
            key = (exps[0], exps[1])
            out[key] = out.get(key, QLaurent.zero()) + coeff * QLaurent.of(power)
        return Poly(out)

    def graded_component(self, n: int) -> "Poly":
        """Sum of terms of total degree n."""
        if n < 0:
            raise ValueError("degree must be non-negative")
        return Poly({(i, j): c for (i, j), c in self.terms.items() if i + j == n})

    def total_degree(self):
        """Max total degree of the support; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(i + j for (i, j) in self.terms)

    # -- text form ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_grlex_key):
            parts.append(_render_term(self.terms[key], key))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return f"Poly({self})"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        total = cls.zero()
        for sign, term in split_sum(text):
            coeff, (i, j) = _parse_poly_term(term)
            total = total + cls.monomial(i, j, coeff * QLaurent.of(sign))
        return total


class PolyEndo:
    """Unital algebra endomorphism of k[x,y], given by generator images."""

    __slots__ = ("image_of_x", "image_of_y")

    def __init__(self, image_of_x: Poly, image_of_y: Poly):
        object.__setattr__(self, "image_of_x", image_of_x)
        object.__setattr__(self, "image_of_y", image_of_y)

    def __setattr__(self, name, value):
        raise AttributeError("PolyEndo is immutable")

    @classmethod
    def identity(cls):
        return cls(Poly.x(), Poly.y())

    @classmethod
    def diagonal(cls, cx: QLaurent, cy: QLaurent):
        """x -> cx*x, y -> cy*y."""
        return cls(Poly.x().scaled(cx), Poly.y().scaled(cy))

    def __call__(self, p: Poly) -> Poly:
        out = Poly.zero()
        for (i, j), coeff in p.terms.items():
            out = out + (self.image_of_x**i * self.image_of_y**j).scaled(coeff)
        return out

    def compose(self, other: "PolyEndo") -> "PolyEndo":
        return PolyEndo(self(other.image_of_x), self(other.image_of_y))


def enumerate_monomials(max_total_degree: int):
    """All monomials x^i y^j with i + j <= bound, graded-lex with x first."""
    if max_total_degree < 0:
        raise ValueError("degree bound must be non-negative")
    out = []
    for degree in range(max_total_degree + 1):
        for i in range(degree, -1, -1):
            out.append(Poly.monomial(i, degree - i))
    return out


def _grlex_key(expv):
    i, j = expv
    return (i + j, -i)


def _render_term(coeff: QLaurent, expv) -> str:
    i, j = expv
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    ctext = str(coeff)
    if not factors:
        return f"({ctext})" if (" + " in ctext or " - " in ctext) else ctext
    if coeff == QLaurent.one():
        return "*".join(factors)
    if coeff == -QLaurent.one():
        return "-" + "*".join(factors)
    if " + " in ctext or " - " in ctext:
        ctext = f"({ctext})"
    return ctext + "*" + "*".join(factors)


_VAR_FACTOR = re.compile(r"^([xy])(?:\^(\d+))?$")


def _parse_poly_term(term: str):
    """One product term: scalar factors and x^i / y^j factors joined by '*'."""
    coeff = QLaurent.one()
    exps = [0, 0]
    for factor in _split_factors(term):
        match = _VAR_FACTOR.match(factor)
        if match:
            idx = VARIABLES.index(match.group(1))
            exps[idx] += int(match.group(2)) if match.group(2) else 1
        else:
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1]
            coeff = coeff * QLaurent.parse(factor)
    return coeff, (exps[0], exps[1])


def _split_factors(term: str):
    factors = []
    depth = 0
    current = []
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            piece = "".join(current).strip()
            if piece:
                factors.append(piece)
            current = []
        else:
            current.append(ch)
    piece = "".join(current).strip()
    if piece:
        factors.append(piece)
    if not factors:
        raise ValueError(f"empty polynomial term in {term!r}")
    return factors
