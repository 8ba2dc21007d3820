"""Generic Hom-structure carriers, Yau twists, and axiom checkers.

A carrier packages a degree-bounded test basis together with oracles for the
product, the structure map, and (for bialgebras) the comultiplication.  All
maps in play are linear or bilinear, so verifying an identity on every basis
tuple proves it on the whole spanned truncation; a passing sweep is a proof
at the declared bound.

Checkers return CheckReport values: a failed identity is report content, not
an exception.  Only malformed carriers raise.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .report import CheckReport, RangeEscapeError
from .scalars import QLaurent


@dataclass(frozen=True)
class Carrier:
    """An algebra (or bialgebra, when comul is set) over QLaurent.

    basis holds hashable keys; element/coords translate between keys and the
    carrier's native element type.  coords must return a canonical sparse
    map key -> nonzero QLaurent, so dict equality of coordinates is exact
    equality of elements.
    """

    name: str
    basis: tuple
    element: Callable
    coords: Callable
    add: Callable
    scale: Callable
    zero: object
    mul: Callable
    alpha: Callable
    comul: Optional[Callable] = None
    render_key: Callable = str
    render_elem: Callable = str

    def eq(self, e1, e2) -> bool:
        return self.coords(e1) == self.coords(e2)

    def basis_elem(self, key):
        return self.element(key)

    def from_coords(self, coords: dict):
        out = self.zero
        for key, coeff in coords.items():
            out = self.add(out, self.scale(coeff, self.element(key)))
        return out


@dataclass(frozen=True)
class ModCarrier:
    """A module over a carrier: space, structure map alpha, and action rho."""

    name: str
    basis: tuple
    element: Callable
    coords: Callable
    add: Callable
    scale: Callable
    zero: object
    alpha: Callable
    rho: Callable  # (algebra element, module element) -> module element
    render_key: Callable = str
    render_elem: Callable = str

    def eq(self, e1, e2) -> bool:
        return self.coords(e1) == self.coords(e2)


@dataclass(frozen=True)
class ModuleAlgebraScenario:
    """A bialgebra H acting on an algebra A on the same underlying space.

    The module structure map is A.alpha, so the scenario is the full input
    for the module Hom-algebra axiom.
    """

    H: Carrier
    A: Carrier
    rho: Callable  # (H element, A element) -> A element

    def module_carrier(self) -> ModCarrier:
        return ModCarrier(
            name=f"{self.A.name} as {self.H.name}-module",
            basis=self.A.basis,
            element=self.A.element,
            coords=self.A.coords,
            add=self.A.add,
            scale=self.A.scale,
            zero=self.A.zero,
            alpha=self.A.alpha,
            rho=self.rho,
            render_key=self.A.render_key,
            render_elem=self.A.render_elem,
        )


# -- sparse tensors ----------------------------------------------------
# A tensor is a dict mapping tuples of basis keys to nonzero QLaurent.


def t_add(t1: dict, t2: dict) -> dict:
    out = dict(t1)
    for key, coeff in t2.items():
        acc = out.get(key, QLaurent.zero()) + coeff
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return out


def t_scale(coeff: QLaurent, t: dict) -> dict:
    if not coeff:
        return {}
    return {key: coeff * c for key, c in t.items()}


def t_outer(*coord_dicts) -> dict:
    """Outer product of coordinate dicts into one tensor."""
    out = {(): QLaurent.one()}
    for coords in coord_dicts:
        nxt = {}
        for prefix, c1 in out.items():
            for key, c2 in coords.items():
                nxt[prefix + (key,)] = c1 * c2
        out = nxt
    return {key: c for key, c in out.items() if c}


def elem_tensor(c1, c2, e1, e2) -> dict:
    return t_outer(c1.coords(e1), c2.coords(e2))


def t_apply(t: dict, slots) -> dict:
    """Apply one linear map per slot to a tensor.

    slots is a sequence of (carrier, fn) pairs, fn acting on carrier
    elements; the result is re-expanded into basis coordinates.
    """
    out = {}
    for key, coeff in t.items():
        coord_dicts = []
        for k, (carrier, fn) in zip(key, slots):
            coord_dicts.append(carrier.coords(fn(carrier.element(k))))
        out = t_add(out, t_scale(coeff, t_outer(*coord_dicts)))
    return out


def t_expand_slot(t: dict, slot: int, carrier: Carrier) -> dict:
    """Replace one tensor slot by the carrier's comultiplication of it."""
    if carrier.comul is None:
        raise ValueError(f"carrier {carrier.name} has no comultiplication")
    out = {}
    for key, coeff in t.items():
        inner = carrier.comul(carrier.element(key[slot]))
        for (left, right), c in inner.items():
            new_key = key[:slot] + (left, right) + key[slot + 1 :]
            acc = out.get(new_key, QLaurent.zero()) + coeff * c
            if acc:
                out[new_key] = acc
            else:
                out.pop(new_key, None)
    return out


def render_tensor(t: dict, *carriers) -> str:
    if not t:
        return "0"
    parts = []
    for key in sorted(t, key=repr):
        names = " x ".join(c.render_key(k) for c, k in zip(carriers, key))
        parts.append(f"({t[key]})*({names})")
    return " + ".join(parts)


# -- algebra checkers --------------------------------------------------


def check_multiplicativity(A: Carrier) -> CheckReport:
    """alpha(ab) = alpha(a) alpha(b) on all basis pairs."""
    report = CheckReport("multiplicativity", "alpha o mu = mu o alpha^2")
    for k1 in A.basis:
        for k2 in A.basis:
            a, b = A.element(k1), A.element(k2)
            lhs = A.alpha(A.mul(a, b))
            rhs = A.mul(A.alpha(a), A.alpha(b))
            report.checked += 1
            if not A.eq(lhs, rhs):
                report.record(
                    (k1, k2),
                    (A.render_key(k1), A.render_key(k2)),
                    A.render_elem(lhs),
                    A.render_elem(rhs),
                )
    return report


def check_hom_associativity(A: Carrier) -> CheckReport:
    """mu(alpha(a), mu(b, c)) = mu(mu(a, b), alpha(c)) on basis triples."""
    report = CheckReport("hom-associativity", "Eq. (1.2)")
    for k1 in A.basis:
        for k2 in A.basis:
            for k3 in A.basis:
                a, b, c = A.element(k1), A.element(k2), A.element(k3)
                lhs = A.mul(A.alpha(a), A.mul(b, c))
                rhs = A.mul(A.mul(a, b), A.alpha(c))
                report.checked += 1
                if not A.eq(lhs, rhs):
                    report.record(
                        (k1, k2, k3),
                        tuple(A.render_key(k) for k in (k1, k2, k3)),
                        A.render_elem(lhs),
                        A.render_elem(rhs),
                    )
    return report


def check_hom_coassociativity(H: Carrier) -> CheckReport:
    """(Delta x alpha) o Delta = (alpha x Delta) o Delta on basis elements."""
    if H.comul is None:
        raise ValueError(f"carrier {H.name} has no comultiplication")
    report = CheckReport("hom-coassociativity", "Eq. (2.3)")
    for key in H.basis:
        t = H.comul(H.element(key))
        lhs = t_apply(t_expand_slot(t, 0, H), [(H, _ident), (H, _ident), (H, H.alpha)])
        rhs = t_apply(t_expand_slot(t, 1, H), [(H, H.alpha), (H, _ident), (H, _ident)])
        report.checked += 1
        if lhs != rhs:
            report.record(
                (key,),
                (H.render_key(key),),
                render_tensor(lhs, H, H, H),
                render_tensor(rhs, H, H, H),
            )
    return report


def check_comul_morphism(H: Carrier) -> CheckReport:
    """Delta is a morphism of Hom-associative algebras (Eqs. 2.4 and 2.5)."""
    if H.comul is None:
        raise ValueError(f"carrier {H.name} has no comultiplication")
    report = CheckReport("comul-morphism", "Eqs. (2.4)-(2.5)")
    for key in H.basis:
        e = H.element(key)
        lhs = H.comul(H.alpha(e))
        rhs = t_apply(H.comul(e), [(H, H.alpha), (H, H.alpha)])
        report.checked += 1
        if lhs != rhs:
            report.record(
                (key,),
                (H.render_key(key),),
                render_tensor(lhs, H, H),
                render_tensor(rhs, H, H),
            )
    for k1 in H.basis:
        for k2 in H.basis:
            e1, e2 = H.element(k1), H.element(k2)
            lhs = H.comul(H.mul(e1, e2))
            # mu^2 o (Id x tau x Id) o Delta^2: middle-two interchange done
            # directly on the index pairs.
            rhs = {}
            for (a, b), c1 in H.comul(e1).items():
                for (u, v), c2 in H.comul(e2).items():
                    left = H.mul(H.element(a), H.element(u))
                    right = H.mul(H.element(b), H.element(v))
                    rhs = t_add(
                        rhs, t_scale(c1 * c2, elem_tensor(H, H, left, right))
                    )
            report.checked += 1
            if lhs != rhs:
                report.record(
                    (k1, k2),
                    (H.render_key(k1), H.render_key(k2)),
                    render_tensor(lhs, H, H),
                    render_tensor(rhs, H, H),
                )
    return report


def check_hom_bialgebra(H: Carrier) -> CheckReport:
    """All four Hom-bialgebra conditions in one merged report."""
    report = check_multiplicativity(H)
    report = report.merge(check_hom_associativity(H))
    report = report.merge(check_hom_coassociativity(H))
    report = report.merge(check_comul_morphism(H))
    report.name = "hom-bialgebra"
    return report


# -- module checkers ---------------------------------------------------


def check_module_axiom(H: Carrier, M: ModCarrier) -> CheckReport:
    """rho is a Hom-module morphism and satisfies the module axiom.

    Checks alpha_M(a m) = alpha(a) alpha_M(m) on pairs and
    alpha(a)(b m) = (a b) alpha_M(m) on triples (Eq. 2.1').
    """
    report = CheckReport("module-axiom", "Eqs. (2.1)/(2.1')")
    for kh in H.basis:
        for km in M.basis:
            a, m = H.element(kh), M.element(km)
            lhs = M.alpha(M.rho(a, m))
            rhs = M.rho(H.alpha(a), M.alpha(m))
            report.checked += 1
            if not M.eq(lhs, rhs):
                report.record(
                    (kh, km),
                    (H.render_key(kh), M.render_key(km)),
                    M.render_elem(lhs),
                    M.render_elem(rhs),
                )
    for k1 in H.basis:
        for k2 in H.basis:
            for km in M.basis:
                a, b, m = H.element(k1), H.element(k2), M.element(km)
                lhs = M.rho(H.alpha(a), M.rho(b, m))
                rhs = M.rho(H.mul(a, b), M.alpha(m))
                report.checked += 1
                if not M.eq(lhs, rhs):
                    report.record(
                        (k1, k2, km),
                        (H.render_key(k1), H.render_key(k2), M.render_key(km)),
                        M.render_elem(lhs),
                        M.render_elem(rhs),
                    )
    return report


def build_rho_tilde(H: Carrier, M: ModCarrier, alpha_power: int = 2) -> ModCarrier:
    """The auxiliary module structure rho-tilde = rho o (alpha_H^2 x Id).

    alpha_power exists only for the negative control (power 1 breaks the
    correspondence between the two module Hom-algebra characterizations).
    """

    def rho_tilde(a, m):
        for _ in range(alpha_power):
            a = H.alpha(a)
        return M.rho(a, m)

    return replace(M, name=f"{M.name} (rho-tilde)", rho=rho_tilde)


def build_rho2(H: Carrier, M: ModCarrier) -> ModCarrier:
    """The diagonal module structure rho^2 on M x M.

    Elements of the tensor-square carrier are sparse tensors keyed by pairs
    of M basis keys.
    """
    if H.comul is None:
        raise ValueError(f"carrier {H.name} has no comultiplication")

    pair_basis = tuple((k1, k2) for k1 in M.basis for k2 in M.basis)

    def element(pair):
        return {pair: QLaurent.one()}

    def alpha2(t):
        return t_apply(_as_mod_tensor(t), [(M, M.alpha), (M, M.alpha)])

    def rho2(x, t):
        out = {}
        for (hk1, hk2), hc in H.comul(x).items():
            x1, x2 = H.element(hk1), H.element(hk2)
            for (mk1, mk2), mc in _as_mod_tensor(t).items():
                left = M.rho(x1, M.element(mk1))
                right = M.rho(x2, M.element(mk2))
                out = t_add(out, t_scale(hc * mc, elem_tensor(M, M, left, right)))
        return out

    return ModCarrier(
        name=f"{M.name} tensor square",
        basis=pair_basis,
        element=element,
        coords=_as_mod_tensor,
        add=t_add,
        scale=t_scale,
        zero={},
        alpha=alpha2,
        rho=rho2,
        render_key=lambda pair: f"{M.render_key(pair[0])} x {M.render_key(pair[1])}",
        render_elem=lambda t: render_tensor(t, M, M),
    )


def _as_mod_tensor(t):
    if not isinstance(t, dict):
        raise RangeEscapeError(f"expected a sparse tensor, got {t!r}")
    return t


def check_module_hom_algebra(s: ModuleAlgebraScenario, alpha_power: int = 2) -> CheckReport:
    """The module Hom-algebra axiom: alpha_H^2(x)(ab) = sum (x'a)(x''b)."""
    report = CheckReport("module-hom-algebra", "Eqs. (2.9)/(2.10)")
    H, A = s.H, s.A
    for kx in H.basis:
        x = H.element(kx)
        ax = x
        for _ in range(alpha_power):
            ax = H.alpha(ax)
        sweedler = H.comul(x)
        for ka in A.basis:
            for kb in A.basis:
                a, b = A.element(ka), A.element(kb)
                lhs = s.rho(ax, A.mul(a, b))
                rhs = A.zero
                for (h1, h2), coeff in sweedler.items():
                    term = A.mul(
                        s.rho(H.element(h1), a), s.rho(H.element(h2), b)
                    )
                    rhs = A.add(rhs, A.scale(coeff, term))
                report.checked += 1
                if not A.eq(lhs, rhs):
                    report.record(
                        (kx, ka, kb),
                        (H.render_key(kx), A.render_key(ka), A.render_key(kb)),
                        A.render_elem(lhs),
                        A.render_elem(rhs),
                    )
    return report


def check_mu_module_morphism(s: ModuleAlgebraScenario, alpha_power: int = 2) -> CheckReport:
    """mu_A as a morphism of H-modules from (A x A, rho^2) to (A, rho-tilde).

    By the characterization theorem this verdict must coincide with
    check_module_hom_algebra on the same scenario.
    """
    report = CheckReport("mu-module-morphism", "Theorem 1.1(3)")
    H, A = s.H, s.A
    M = s.module_carrier()
    square = build_rho2(H, M)
    tilde = build_rho_tilde(H, M, alpha_power=alpha_power)
    for kx in H.basis:
        x = H.element(kx)
        for ka in A.basis:
            for kb in A.basis:
                pair = square.element((ka, kb))
                acted = square.rho(x, pair)
                lhs = A.zero
                for (k1, k2), coeff in acted.items():
                    lhs = A.add(
                        lhs,
                        A.scale(coeff, A.mul(A.element(k1), A.element(k2))),
                    )
                rhs = tilde.rho(x, A.mul(A.element(ka), A.element(kb)))
                report.checked += 1
                if not A.eq(lhs, rhs):
                    report.record(
                        (kx, ka, kb),
                        (H.render_key(kx), A.render_key(ka), A.render_key(kb)),
                        A.render_elem(lhs),
                        A.render_elem(rhs),
                    )
    return report


def check_compat(s: ModuleAlgebraScenario, alpha_H: Callable, alpha_A: Callable) -> CheckReport:
    """Intertwining alpha_A o rho = rho o (alpha_H x alpha_A) (Eq. 1.5)."""
    report = CheckReport("action-compatibility", "Eq. (1.5)")
    H, A = s.H, s.A
    for kx in H.basis:
        for ka in A.basis:
            x, a = H.element(kx), A.element(ka)
            lhs = alpha_A(s.rho(x, a))
            rhs = s.rho(alpha_H(x), alpha_A(a))
            report.checked += 1
            if not A.eq(lhs, rhs):
                report.record(
                    (kx, ka),
                    (H.render_key(kx), A.render_key(ka)),
                    A.render_elem(lhs),
                    A.render_elem(rhs),
                )
    return report


# -- Yau twists --------------------------------------------------------


def yau_twist_algebra(A: Carrier, alpha: Optional[Callable] = None) -> Carrier:
    """Twist an associative carrier: mu_alpha = alpha o mu, structure map alpha."""
    twist = alpha if alpha is not None else A.alpha

    def mul_alpha(a, b):
        return twist(A.mul(a, b))

    return replace(A, name=f"{A.name} twisted", mul=mul_alpha, alpha=twist)


def yau_twist_bialgebra(H: Carrier, alpha: Optional[Callable] = None) -> Carrier:
    """Twist a bialgebra carrier: mu_alpha = alpha o mu, Delta_alpha = Delta o alpha."""
    if H.comul is None:
        raise ValueError(f"carrier {H.name} has no comultiplication")
    twist = alpha if alpha is not None else H.alpha

    def mul_alpha(a, b):
        return twist(H.mul(a, b))

    def comul_alpha(x):
        return H.comul(twist(x))

    return replace(
        H, name=f"{H.name} twisted", mul=mul_alpha, comul=comul_alpha, alpha=twist
    )


def deform_scenario(
    s: ModuleAlgebraScenario, alpha_H: Callable, alpha_A: Callable
) -> ModuleAlgebraScenario:
    """Twist H and A and set rho_alpha = alpha_A o rho."""

    def rho_alpha(x, a):
        return alpha_A(s.rho(x, a))

    return ModuleAlgebraScenario(
        H=yau_twist_bialgebra(s.H, alpha_H),
        A=yau_twist_algebra(s.A, alpha_A),
        rho=rho_alpha,
    )


# -- Hom-Lie structure -------------------------------------------------


def commutator_bracket(A: Carrier) -> Callable:
    """[a, b] = mu(a, b) - mu(b, a)."""

    def bracket(a, b):
        return A.add(A.mul(a, b), A.scale(QLaurent.of(-1), A.mul(b, a)))

    return bracket


def lie_yau_twist(bracket: Callable, alpha: Callable) -> Callable:
    """Twisted bracket [a, b]_alpha = alpha([a, b])."""

    def twisted(a, b):
        return alpha(bracket(a, b))

    return twisted


def check_hom_jacobi(A: Carrier, bracket: Optional[Callable] = None) -> CheckReport:
    """Skew-symmetry, bracket multiplicativity, and the Hom-Jacobi identity."""
    br = bracket if bracket is not None else commutator_bracket(A)
    report = CheckReport("hom-lie", "Hom-Jacobi")
    neg = lambda e: A.scale(QLaurent.of(-1), e)
    for k1 in A.basis:
        for k2 in A.basis:
            a, b = A.element(k1), A.element(k2)
            report.checked += 1
            if not A.eq(br(a, b), neg(br(b, a))):
                report.record(
                    (k1, k2),
                    (A.render_key(k1), A.render_key(k2)),
                    A.render_elem(br(a, b)),
                    A.render_elem(neg(br(b, a))),
                )
            report.checked += 1
            if not A.eq(A.alpha(br(a, b)), br(A.alpha(a), A.alpha(b))):
                report.record(
                    (k1, k2),
                    (A.render_key(k1), A.render_key(k2)),
                    A.render_elem(A.alpha(br(a, b))),
                    A.render_elem(br(A.alpha(a), A.alpha(b))),
                )
    for k1 in A.basis:
        for k2 in A.basis:
            for k3 in A.basis:
                a, b, c = A.element(k1), A.element(k2), A.element(k3)
                total = br(br(a, b), A.alpha(c))
                total = A.add(total, br(br(c, a), A.alpha(b)))
                total = A.add(total, br(br(b, c), A.alpha(a)))
                report.checked += 1
                if not A.eq(total, A.zero):
                    report.record(
                        (k1, k2, k3),
                        tuple(A.render_key(k) for k in (k1, k2, k3)),
                        A.render_elem(total),
                        A.render_elem(A.zero),
                    )
    return report


def _ident(e):
    return e
