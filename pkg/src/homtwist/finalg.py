"""Finite-dimensional carriers: structure-constant algebras, linear operators,
group bialgebras of automorphisms, and the inner-automorphism deformation.

Everything here is finite, so axiom sweeps run over the complete basis and a
pass is a full proof for the instance, not a degree-bounded truncation.
Matrix inversion is exact Gaussian elimination over rationals; operators with
genuinely q-dependent entries are rejected for inversion rather than
implementing a rational-function field.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .homcore import Carrier, ModuleAlgebraScenario, yau_twist_algebra
from .scalars import QLaurent


class StructAlgebra:
    """Associative algebra given by structure constants e_i e_j = sum_k c_ijk e_k.

    Elements are coordinate vectors: tuples of QLaurent of length dim.
    Associativity on all basis triples is a hard load-time precondition.
    """

    def __init__(self, labels, constants, unit=None):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        table = {}
        for (i, j, k), coeff in constants.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim and 0 <= k < self.dim):
                raise ValueError(f"structure constant index out of range: {(i, j, k)}")
            if not isinstance(coeff, QLaurent):
                coeff = QLaurent.of(coeff)
            if coeff:
                table[(i, j, k)] = coeff
        self.constants = table
        self.unit = tuple(unit) if unit is not None else None
        if self.unit is not None and len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        self._verify_associativity()
        if self.unit is not None:
            self._verify_unit()

    def zero(self):
        return tuple(QLaurent.zero() for _ in range(self.dim))

    def basis_vector(self, i):
        return tuple(
            QLaurent.one() if k == i else QLaurent.zero() for k in range(self.dim)
        )

    def add(self, v, w):
        return tuple(a + b for a, b in zip(v, w))

    def scale(self, coeff, v):
        return tuple(coeff * a for a in v)

    def mul(self, v, w):
        out = [QLaurent.zero()] * self.dim
        for i in range(self.dim):
            if not v[i]:
                continue
            for j in range(self.dim):
                if not w[j]:
                    continue
                for k in range(self.dim):
                    c = self.constants.get((i, j, k))
                    if c:
                        out[k] = out[k] + v[i] * w[j] * c
        return tuple(out)

    def coords(self, v):
        return {i: c for i, c in enumerate(v) if c}

    def render(self, v):
        coords = self.coords(v)
        if not coords:
            return "0"
        parts = []
        for i in sorted(coords):
            c = coords[i]
            ctext = str(c)
            if " + " in ctext or " - " in ctext:
                ctext = f"({ctext})"
            parts.append(f"{self.labels[i]}" if c == QLaurent.one() else f"{ctext}*{self.labels[i]}")
        return " + ".join(parts)

    def _verify_associativity(self):
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(self.dim):
                ej = self.basis_vector(j)
                for k in range(self.dim):
                    ek = self.basis_vector(k)
                    lhs = self.mul(self.mul(ei, ej), ek)
                    rhs = self.mul(ei, self.mul(ej, ek))
                    if lhs != rhs:
                        raise ValueError(
                            "structure constants are not associative at "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )

    def _verify_unit(self):
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise ValueError("declared unit is not a two-sided unit")

    def inverse(self, a):
        """Two-sided inverse of a, by solving the left-multiplication system."""
        if self.unit is None:
            raise ValueError("algebra has no unit; inverses undefined")
        # left multiplication matrix: column j holds a * e_j
        matrix = []
        for k in range(self.dim):
            row = []
            for j in range(self.dim):
                col = self.mul(a, self.basis_vector(j))
                row.append(col[k])
            matrix.append(row)
        solution = _solve_rational(matrix, list(self.unit))
        if solution is None:
            raise ValueError(f"element {self.render(a)} is not invertible")
        inv = tuple(solution)
        if self.mul(inv, a) != self.unit:
            raise ValueError(f"element {self.render(a)} has no two-sided inverse")
        return inv


class LinOp:
    """Exact linear operator on a structure-constant algebra: a dim x dim matrix."""

    def __init__(self, rows):
        self.rows = tuple(
            tuple(c if isinstance(c, QLaurent) else QLaurent.of(c) for c in row)
            for row in rows
        )
        self.dim = len(self.rows)
        for row in self.rows:
            if len(row) != self.dim:
                raise ValueError("operator matrix must be square")

    @classmethod
    def identity(cls, dim):
        return cls(
            [
                [QLaurent.one() if i == j else QLaurent.zero() for j in range(dim)]
                for i in range(dim)
            ]
        )

    @classmethod
    def from_images(cls, images):
        """Build from the list of images of the basis vectors (as columns)."""
        dim = len(images)
        return cls([[images[j][k] for j in range(dim)] for k in range(dim)])

    def __call__(self, v):
        return tuple(
            sum((row[i] * v[i] for i in range(self.dim)), QLaurent.zero())
            for row in self.rows
        )

    def compose(self, other):
        return LinOp(
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(self.dim)),
                        QLaurent.zero(),
                    )
                    for j in range(self.dim)
                ]
                for i in range(self.dim)
            ]
        )

    def __eq__(self, other):
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_algebra_endo(self, algebra: StructAlgebra) -> bool:
        for i in range(algebra.dim):
            ei = algebra.basis_vector(i)
            for j in range(algebra.dim):
                ej = algebra.basis_vector(j)
                if self(algebra.mul(ei, ej)) != algebra.mul(self(ei), self(ej)):
                    return False
        if algebra.unit is not None and self(algebra.unit) != algebra.unit:
            return False
        return True

    def is_automorphism(self, algebra: StructAlgebra) -> bool:
        if not self.is_algebra_endo(algebra):
            return False
        matrix = [[self.rows[i][j] for j in range(self.dim)] for i in range(self.dim)]
        for k in range(self.dim):
            rhs = [
                QLaurent.one() if i == k else QLaurent.zero() for i in range(self.dim)
            ]
            if _solve_rational(matrix, rhs) is None:
                return False
        return True


def _solve_rational(matrix, rhs):
    """Solve M x = rhs exactly; entries must be constant (q-free) QLaurent.

    Returns the solution as a list of QLaurent, or None if singular.
    """

    def as_fraction(c):
        if not c.terms:
            return Fraction(0)
        if set(c.terms) != {0}:
            raise ValueError(
                "inversion requires q-free entries; got a q-dependent value"
            )
        return c.terms[0]

    n = len(matrix)
    aug = [
        [as_fraction(matrix[i][j]) for j in range(n)] + [as_fraction(rhs[i])]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [QLaurent.of(aug[i][n]) for i in range(n)]


def inner_automorphism(algebra: StructAlgebra, a) -> LinOp:
    """The conjugation operator i_a(b) = a b a^-1 for invertible a."""
    a_inv = algebra.inverse(a)
    images = [
        algebra.mul(algebra.mul(a, algebra.basis_vector(j)), a_inv)
        for j in range(algebra.dim)
    ]
    return LinOp.from_images(images)


class GroupBialgebra:
    """A finite group of algebra automorphisms with grouplike comultiplication.

    The group is given extensionally; closure under composition and inverses
    is verified at construction, not computed.
    """

    def __init__(self, algebra: StructAlgebra, operators):
        self.algebra = algebra
        self.operators = list(operators)
        for idx, op in enumerate(self.operators):
            if not op.is_automorphism(algebra):
                raise ValueError(f"operator {idx} is not an algebra automorphism")
        self.table = {}
        for i, op1 in enumerate(self.operators):
            for j, op2 in enumerate(self.operators):
                composed = op1.compose(op2)
                try:
                    self.table[(i, j)] = self.operators.index(composed)
                except ValueError:
                    raise ValueError(
                        f"group not closed under composition at ({i}, {j})"
                    ) from None
        identity = LinOp.identity(algebra.dim)
        if identity not in self.operators:
            raise ValueError("group does not contain the identity operator")
        self.identity_index = self.operators.index(identity)
        for i in range(len(self.operators)):
            if not any(
                self.table[(i, j)] == self.identity_index
                for j in range(len(self.operators))
            ):
                raise ValueError(f"operator {i} has no inverse in the group")

    def size(self):
        return len(self.operators)

    # -- k[G] as a bialgebra carrier ----------------------------------

    def carrier(self) -> Carrier:
        """k[G] with grouplike comultiplication and identity structure map."""
        n = self.size()

        def element(i):
            return {i: QLaurent.one()}

        def mul(u, v):
            out = {}
            for i, c1 in u.items():
                for j, c2 in v.items():
                    k = self.table[(i, j)]
                    acc = out.get(k, QLaurent.zero()) + c1 * c2
                    if acc:
                        out[k] = acc
                    else:
                        out.pop(k, None)
            return out

        def comul(u):
            return {(i, i): c for i, c in u.items()}

        return Carrier(
            name="k[G]",
            basis=tuple(range(n)),
            element=element,
            coords=lambda u: dict(u),
            add=_dict_add,
            scale=_dict_scale,
            zero={},
            mul=mul,
            alpha=lambda u: dict(u),
            comul=comul,
            render_key=lambda i: f"g{i}",
            render_elem=_render_group_elem,
        )

    def apply(self, u: dict, v):
        """Action of a k[G] element on an algebra vector: rho(phi x a) = phi(a)."""
        out = self.algebra.zero()
        for i, coeff in u.items():
            out = self.algebra.add(out, self.algebra.scale(coeff, self.operators[i](v)))
        return out


def _dict_add(u, v):
    out = dict(u)
    for k, c in v.items():
        acc = out.get(k, QLaurent.zero()) + c
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def _dict_scale(coeff, u):
    if not coeff:
        return {}
    return {k: coeff * c for k, c in u.items()}


def _render_group_elem(u):
    if not u:
        return "0"
    return " + ".join(f"{c}*g{i}" for i, c in sorted(u.items()))


def algebra_carrier(algebra: StructAlgebra, alpha=None) -> Carrier:
    endo = alpha if alpha is not None else (lambda v: v)
    return Carrier(
        name="struct-algebra",
        basis=tuple(range(algebra.dim)),
        element=algebra.basis_vector,
        coords=algebra.coords,
        add=algebra.add,
        scale=algebra.scale,
        zero=algebra.zero(),
        mul=algebra.mul,
        alpha=endo,
        render_key=lambda i: algebra.labels[i],
        render_elem=algebra.render,
    )


def automorphism_action(G: GroupBialgebra) -> ModuleAlgebraScenario:
    """The classical k[G]-module algebra on A with rho(phi x a) = phi(a)."""
    return ModuleAlgebraScenario(
        H=G.carrier(), A=algebra_carrier(G.algebra), rho=G.apply
    )


def build_example31(algebra: StructAlgebra, G: GroupBialgebra, a) -> ModuleAlgebraScenario:
    """The inner-automorphism deformation: alpha = i_a with a fixed by G.

    Requires a to be invertible and fixed by every group element; then i_a
    commutes with G, is k[G]-linear, and the deformed package
    (k[G], A_alpha, rho_alpha = i_a o rho) is a module Hom-algebra with
    identity structure map on k[G].
    """
    for idx, op in enumerate(G.operators):
        if op(a) != tuple(a):
            raise ValueError(
                f"element {algebra.render(a)} is not fixed by group operator {idx}"
            )
    alpha = inner_automorphism(algebra, a)
    for idx, op in enumerate(G.operators):
        if alpha.compose(op) != op.compose(alpha):
            raise ValueError(f"inner automorphism does not commute with operator {idx}")

    def rho_alpha(u, v):
        return alpha(G.apply(u, v))

    return ModuleAlgebraScenario(
        H=G.carrier(),
        A=yau_twist_algebra(algebra_carrier(algebra, alpha=alpha)),
        rho=rho_alpha,
    )


# -- built-in instance and the scenario file format --------------------


def m2_algebra() -> StructAlgebra:
    """The 2x2 matrix algebra with basis e11, e12, e21, e22."""
    labels = ("e11", "e12", "e21", "e22")
    index = {label: i for i, label in enumerate(labels)}
    constants = {}
    for (r1, c1) in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for (r2, c2) in ((1, 1), (1, 2), (2, 1), (2, 2)):
            if c1 == r2:
                i = index[f"e{r1}{c1}"]
                j = index[f"e{r2}{c2}"]
                k = index[f"e{r1}{c2}"]
                constants[(i, j, k)] = 1
    unit = [QLaurent.one(), QLaurent.zero(), QLaurent.zero(), QLaurent.one()]
    return StructAlgebra(labels, constants, unit=unit)


def m2_example():
    """Example instance: G generated by conjugation by diag(1,-1), a = diag(2,3)."""
    algebra = m2_algebra()
    # conjugation by diag(1,-1) negates e12 and e21
    conj = LinOp(
        [
            [1, 0, 0, 0],
            [0, -1, 0, 0],
            [0, 0, -1, 0],
            [0, 0, 0, 1],
        ]
    )
    G = GroupBialgebra(algebra, [LinOp.identity(4), conj])
    a = (QLaurent.of(2), QLaurent.zero(), QLaurent.zero(), QLaurent.of(3))
    return algebra, G, a


def load_scenario(path):
    """Load (algebra, group, distinguished element) from a JSON scenario file.

    Format:
      {
        "labels": ["e11", ...],
        "constants": [[i, j, k, "coeff"], ...],
        "unit": ["coeff", ...],            # optional
        "group": [[["m00", "m01", ...], ...], ...],
        "element": ["coeff", ...]          # the conjugating element a
      }
    Coefficients use the scalar text grammar, e.g. "1", "-2/3", "q^2".
    """
    with open(path) as fh:
        data = json.load(fh)
    labels = data["labels"]
    constants = {
        (i, j, k): QLaurent.parse(str(coeff))
        for i, j, k, coeff in data["constants"]
    }
    unit = (
        [QLaurent.parse(str(c)) for c in data["unit"]] if "unit" in data else None
    )
    algebra = StructAlgebra(labels, constants, unit=unit)
    operators = [
        LinOp([[QLaurent.parse(str(c)) for c in row] for row in matrix])
        for matrix in data["group"]
    ]
    G = GroupBialgebra(algebra, operators)
    element = tuple(QLaurent.parse(str(c)) for c in data["element"])
    if len(element) != algebra.dim:
        raise ValueError("distinguished element has wrong length")
    return algebra, G, element
