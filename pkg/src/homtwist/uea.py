"""U(sl(2)) with PBW normal-form arithmetic and primitive comultiplication.

The generators satisfy [X,Y] = Z, [X,Z] = -2X, [Y,Z] = 2Y.  Products are kept
in the fixed normal order X^a Y^b Z^c; out-of-order generator pairs rewrite by

    YX -> XY - Z,    ZX -> XZ + 2X,    ZY -> YZ - 2Y.

Each rewrite either shortens a word or reduces its inversion count, so
normalization terminates; the test suite compares against an independent
free-algebra reduction oracle as confluence evidence.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .report import CheckReport
from .scalars import QLaurent, split_sum

GENERATORS = ("X", "Y", "Z")

# PBWMonomial is a tuple (a, b, c) standing for X^a Y^b Z^c.
UNIT = (0, 0, 0)


class UElem:
    """Element of U(sl(2)): sparse map PBW monomial -> nonzero QLaurent."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                mono = (int(mono[0]), int(mono[1]), int(mono[2]))
                if min(mono) < 0:
                    raise ValueError(f"negative exponent in {mono}")
                if not isinstance(coeff, QLaurent):
                    coeff = QLaurent.of(coeff)
                if coeff:
                    acc = clean.get(mono, QLaurent.zero()) + coeff
                    if acc:
                        clean[mono] = acc
                    else:
                        clean.pop(mono, None)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UElem is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({UNIT: QLaurent.one()})

    @classmethod
    def monomial(cls, mono, coeff=None):
        return cls({tuple(mono): coeff if coeff is not None else QLaurent.one()})

    @classmethod
    def generator(cls, name: str):
        idx = GENERATORS.index(name)
        mono = [0, 0, 0]
        mono[idx] = 1
        return cls.monomial(tuple(mono))

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, QLaurent.zero()) + coeff
        return UElem(merged)

    def __neg__(self):
        return UElem({mono: -coeff for mono, coeff in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QLaurent):
            return self.scaled(other)
        out = UElem.zero()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + _mono_mul(m1, m2).scaled(c1 * c2)
        return out

    def __rmul__(self, other):
        if isinstance(other, (QLaurent, int)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, coeff):
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.of(coeff)
        return UElem({mono: c * coeff for mono, c in self.terms.items()})

    def __pow__(self, n):
        result = UElem.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, UElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def commutator(self, other):
        return self * other - other * self

    def lie_components(self):
        """Coefficients on (X, Y, Z); None if not in the Lie span."""
        coords = []
        for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            coords.append(self.terms.get(gen, QLaurent.zero()))
        span_keys = {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
        if any(mono not in span_keys for mono in self.terms):
            return None
        return tuple(coords)

    # -- text form ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=_grlex_key):
            parts.append(_render_term(self.terms[mono], mono))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return f"UElem({self})"

    @classmethod
    def parse(cls, text: str) -> "UElem":
        total = cls.zero()
        for sign, term in split_sum(text):
            coeff, mono = _parse_u_term(term)
            total = total + cls.monomial(mono, coeff * QLaurent.of(sign))
        return total


# -- PBW normalization ------------------------------------------------


@lru_cache(maxsize=None)
def _left_gen(gen: str, mono) -> UElem:
    """Left-multiply a PBW monomial by one generator, in normal form."""
    a, b, c = mono
    if gen == "X":
        return UElem.monomial((a + 1, b, c))
    if gen == "Y":
        if a == 0:
            return UElem.monomial((0, b + 1, c))
        # Y X^a ... = (XY - Z) X^(a-1) ...
        tail = _left_gen("Y", (a - 1, b, c))
        out = UElem.zero()
        for mono2, coeff in tail.terms.items():
            out = out + _left_gen("X", mono2).scaled(coeff)
        return out - _left_gen("Z", (a - 1, b, c))
    if gen == "Z":
        if a > 0:
            # Z X^a ... = (XZ + 2X) X^(a-1) ...
            tail = _left_gen("Z", (a - 1, b, c))
            out = UElem.zero()
            for mono2, coeff in tail.terms.items():
                out = out + _left_gen("X", mono2).scaled(coeff)
            return out + UElem.monomial((a, b, c), QLaurent.of(2))
        if b > 0:
            # Z Y^b Z^c = (YZ - 2Y) Y^(b-1) Z^c
            tail = _left_gen("Z", (0, b - 1, c))
            out = UElem.zero()
            for mono2, coeff in tail.terms.items():
                m2 = (mono2[0], mono2[1] + 1, mono2[2])
                out = out + UElem.monomial(m2, coeff)
            return out - UElem.monomial((0, b, c), QLaurent.of(2))
        return UElem.monomial((0, 0, c + 1))
    raise ValueError(f"unknown generator {gen!r}")


@lru_cache(maxsize=None)
def _mono_mul(m1, m2) -> UElem:
    """Product of two PBW monomials in normal form."""
    a, b, c = m1
    result = UElem.monomial(m2)
    for gen, count in (("Z", c), ("Y", b), ("X", a)):
        for _ in range(count):
            out = UElem.zero()
            for mono, coeff in result.terms.items():
                out = out + _left_gen(gen, mono).scaled(coeff)
            result = out
    return result


# -- comultiplication -------------------------------------------------


def tensor_mul(t1: dict, t2: dict) -> dict:
    """Componentwise product on U x U tensors: (u1 x u2)(v1 x v2) = u1v1 x u2v2."""
    out = {}
    for (l1, r1), c1 in t1.items():
        for (l2, r2), c2 in t2.items():
            left = _mono_mul(l1, l2)
            right = _mono_mul(r1, r2)
            for ml, cl in left.terms.items():
                for mr, cr in right.terms.items():
                    key = (ml, mr)
                    acc = out.get(key, QLaurent.zero()) + c1 * c2 * cl * cr
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _comul_mono(mono) -> tuple:
    result = {(UNIT, UNIT): QLaurent.one()}
    for gen_idx, count in enumerate(mono):
        gen = [0, 0, 0]
        gen[gen_idx] = 1
        gen = tuple(gen)
        primitive = {(gen, UNIT): QLaurent.one(), (UNIT, gen): QLaurent.one()}
        for _ in range(count):
            result = tensor_mul(result, primitive)
    return tuple(result.items())


def comul(u: UElem) -> dict:
    """Comultiplication with primitive generators: Delta(W) = W x 1 + 1 x W.

    Returns a sparse tensor {(mono, mono): QLaurent} in componentwise PBW
    normal form; Delta(1) = 1 x 1 and Delta extends as an algebra morphism.
    """
    out = {}
    for mono, coeff in u.terms.items():
        for key, c in _comul_mono(mono):
            acc = out.get(key, QLaurent.zero()) + coeff * c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


# -- endomorphisms ----------------------------------------------------


class UEndo:
    """Candidate endomorphism given by generator images in span{X, Y, Z}."""

    __slots__ = ("images",)

    def __init__(self, image_of_X: UElem, image_of_Y: UElem, image_of_Z: UElem):
        images = {"X": image_of_X, "Y": image_of_Y, "Z": image_of_Z}
        for gen, img in images.items():
            if img.lie_components() is None:
                raise ValueError(
                    f"image of {gen} must lie in span{{X, Y, Z}}, got {img}"
                )
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("UEndo is immutable")

    @classmethod
    def identity(cls):
        return cls(
            UElem.generator("X"), UElem.generator("Y"), UElem.generator("Z")
        )

    @classmethod
    def q_example(cls):
        """X -> qX, Y -> q^-1 Y, Z -> Z."""
        return cls(
            UElem.generator("X").scaled(QLaurent.q_power(1)),
            UElem.generator("Y").scaled(QLaurent.q_power(-1)),
            UElem.generator("Z"),
        )

    def apply_lie(self, u: UElem) -> UElem:
        """Linear action on a Lie-span element."""
        coords = u.lie_components()
        if coords is None:
            raise ValueError(f"{u} is not in the Lie span")
        out = UElem.zero()
        for gen, coeff in zip(GENERATORS, coords):
            out = out + self.images[gen].scaled(coeff)
        return out

    def check_lie_endo(self) -> CheckReport:
        """Verify compatibility with the bracket on all generator pairs."""
        report = CheckReport("lie-endomorphism", "bracket multiplicativity")
        for g1 in GENERATORS:
            for g2 in GENERATORS:
                u, v = UElem.generator(g1), UElem.generator(g2)
                lhs = self.apply_lie(u.commutator(v))
                rhs = self.images[g1].commutator(self.images[g2])
                report.checked += 1
                if lhs != rhs:
                    report.record((g1, g2), (g1, g2), lhs, rhs)
        return report

    def extend(self) -> "UAlgebraEndo":
        """Multiplicative extension to all of U(sl(2)).

        Only well defined on the commutator ideal when the generator map is a
        Lie endomorphism, so that is a hard precondition.
        """
        verdict = self.check_lie_endo()
        if not verdict.passed:
            bad = ", ".join(
                f"({ce.inputs[0]}, {ce.inputs[1]})" for ce in verdict.counterexamples
            )
            raise ValueError(f"not a Lie algebra endomorphism; fails on pairs {bad}")
        return UAlgebraEndo(self)


class UAlgebraEndo:
    """The unique algebra endomorphism extending a validated UEndo."""

    __slots__ = ("base", "_cache")

    def __init__(self, base: UEndo):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("UAlgebraEndo is immutable")

    def __call__(self, u: UElem) -> UElem:
        out = UElem.zero()
        for mono, coeff in u.terms.items():
            out = out + self._apply_mono(mono).scaled(coeff)
        return out

    def _apply_mono(self, mono) -> UElem:
        cached = self._cache.get(mono)
        if cached is not None:
            return cached
        a, b, c = mono
        result = (
            self.base.images["X"] ** a
            * self.base.images["Y"] ** b
            * self.base.images["Z"] ** c
        )
        self._cache[mono] = result
        return result


def enumerate_pbw(max_total_degree: int):
    """All PBW monomials of total degree <= bound, graded-lex order."""
    if max_total_degree < 0:
        raise ValueError("degree bound must be non-negative")
    out = []
    for degree in range(max_total_degree + 1):
        for a in range(degree, -1, -1):
            for b in range(degree - a, -1, -1):
                out.append((a, b, degree - a - b))
    return out


def _grlex_key(mono):
    a, b, c = mono
    return (a + b + c, -a, -b)


def render_mono(mono) -> str:
    a, b, c = mono
    if mono == UNIT:
        return "1"
    factors = []
    for gen, power in zip(GENERATORS, (a, b, c)):
        if power == 1:
            factors.append(gen)
        elif power > 1:
            factors.append(f"{gen}^{power}")
    return " ".join(factors)


def _render_term(coeff: QLaurent, mono) -> str:
    mtext = render_mono(mono)
    ctext = str(coeff)
    if mono == UNIT:
        return f"({ctext})" if (" + " in ctext or " - " in ctext) else ctext
    if coeff == QLaurent.one():
        return mtext
    if coeff == -QLaurent.one():
        return "-" + mtext
    if " + " in ctext or " - " in ctext:
        ctext = f"({ctext})"
    return ctext + "*" + mtext


_GEN_FACTOR = re.compile(r"^([XYZ])(?:\^(\d+))?$")


def _split_u_factors(term: str):
    factors = []
    depth = 0
    current = []
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch == "*" or ch.isspace()):
            piece = "".join(current).strip()
            if piece:
                factors.append(piece)
            current = []
        else:
            current.append(ch)
    piece = "".join(current).strip()
    if piece:
        factors.append(piece)
    return factors


def _parse_u_term(term: str):
    coeff = QLaurent.one()
    exps = [0, 0, 0]
    last_gen = -1
    for factor in _split_u_factors(term):
        match = _GEN_FACTOR.match(factor)
        if match:
            idx = GENERATORS.index(match.group(1))
            if idx < last_gen:
                raise ValueError(f"generators out of PBW order in {term!r}")
            last_gen = idx
            exps[idx] += int(match.group(2)) if match.group(2) else 1
        else:
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1]
            if factor == "1":
                continue
            coeff = coeff * QLaurent.parse(factor)
    return coeff, tuple(exps)
