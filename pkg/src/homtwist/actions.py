"""The U(sl(2))-module algebra on k[x,y] and its q-deformation.

Generator rules: X acts as x d/dy, Y as y d/dx, Z as x d/dx - y d/dy.  A PBW
monomial X^a Y^b Z^c acts as the composite operator X^a(Y^b(Z^c(-))), which
matches the associative product because the sweeps verify
act(uv, p) = act(u, act(v, p)).

The deformation uses alpha_A(x) = q^2 x, alpha_A(y) = q y on the plane and
alpha_L(X) = qX, alpha_L(Y) = q^-1 Y, alpha_L(Z) = Z on the Lie algebra;
rho_alpha = alpha_A o rho.
"""

from __future__ import annotations

from . import homcore, uea
from .homcore import Carrier, ModuleAlgebraScenario
from .polyalg import Poly, PolyEndo, enumerate_monomials
from .report import CheckReport
from .scalars import QLaurent
from .uea import UElem, UEndo, enumerate_pbw, render_mono


def act_generator(gen: str, p: Poly) -> Poly:
    if gen == "X":
        return Poly.x() * p.partial("y")
    if gen == "Y":
        return Poly.y() * p.partial("x")
    if gen == "Z":
        return Poly.x() * p.partial("x") - Poly.y() * p.partial("y")
    raise ValueError(f"unknown generator {gen!r}")


def act(z: UElem, p: Poly) -> Poly:
    """Action of a U(sl(2)) element on a polynomial, linear in both slots."""
    out = Poly.zero()
    for (a, b, c), coeff in z.terms.items():
        q = p
        for _ in range(c):
            q = act_generator("Z", q)
        for _ in range(b):
            q = act_generator("Y", q)
        for _ in range(a):
            q = act_generator("X", q)
        out = out + q.scaled(coeff)
    return out


def alpha_plane() -> PolyEndo:
    """The diagonal endomorphism P(x, y) -> P(q^2 x, q y)."""
    return PolyEndo.diagonal(QLaurent.q_power(2), QLaurent.q_power(1))


def alpha_u_handle():
    """The bialgebra endomorphism of U(sl(2)) extending the q-example."""
    return UEndo.q_example().extend()


def deformed_act(z: UElem, p: Poly, alpha_A: PolyEndo | None = None) -> Poly:
    """rho_alpha(z x p) = alpha_A(act(z, p))."""
    endo = alpha_A if alpha_A is not None else alpha_plane()
    return endo(act(z, p))


# -- carriers ----------------------------------------------------------


def plane_carrier(bound: int, alpha: PolyEndo | None = None) -> Carrier:
    """k[x,y] as a carrier with test basis of monomials up to total degree bound."""
    endo = alpha if alpha is not None else PolyEndo.identity()
    basis = tuple((i, j) for p in enumerate_monomials(bound) for (i, j) in p.terms)
    return Carrier(
        name="k[x,y]",
        basis=basis,
        element=lambda key: Poly.monomial(key[0], key[1]),
        coords=lambda p: p.terms,
        add=lambda p, r: p + r,
        scale=lambda c, p: p.scaled(c),
        zero=Poly.zero(),
        mul=lambda p, r: p * r,
        alpha=endo,
        render_key=lambda key: str(Poly.monomial(key[0], key[1])),
        render_elem=str,
    )


def u_carrier(bound: int, alpha=None) -> Carrier:
    """U(sl(2)) as a bialgebra carrier on PBW monomials up to degree bound."""
    endo = alpha if alpha is not None else (lambda u: u)
    return Carrier(
        name="U(sl2)",
        basis=tuple(enumerate_pbw(bound)),
        element=UElem.monomial,
        coords=lambda u: u.terms,
        add=lambda u, v: u + v,
        scale=lambda c, u: u.scaled(c),
        zero=UElem.zero(),
        mul=lambda u, v: u * v,
        alpha=endo,
        comul=uea.comul,
        render_key=render_mono,
        render_elem=str,
    )


def classical_scenario(bound_h: int = 3, bound_a: int = 3) -> ModuleAlgebraScenario:
    """The untwisted U(sl(2))-module algebra on the plane (alpha = Id)."""
    return ModuleAlgebraScenario(H=u_carrier(bound_h), A=plane_carrier(bound_a), rho=act)


def deformed_scenario(bound_h: int = 3, bound_a: int = 3) -> ModuleAlgebraScenario:
    """The q-deformed scenario (U(sl2)_alpha, A_alpha, rho_alpha)."""
    return homcore.deform_scenario(
        classical_scenario(bound_h, bound_a), alpha_u_handle(), alpha_plane()
    )


# -- concrete checks ---------------------------------------------------


def check_classical_module_algebra(bound_h: int = 3, bound_a: int = 3) -> CheckReport:
    """x(ab) = sum (x'a)(x''b) for the untwisted action (Eq. 1.1)."""
    report = homcore.check_module_hom_algebra(
        classical_scenario(bound_h, bound_a), alpha_power=0
    )
    report.name = "classical-module-algebra"
    report.equation = "Eq. (1.1)"
    return report


def check_action_associativity(bound_h: int = 3, bound_a: int = 4) -> CheckReport:
    """act(uv, p) = act(u, act(v, p)): the extension to PBW monomials is a
    representation."""
    report = CheckReport("action-associativity", "Eq. (2.1) at alpha = Id")
    monos = enumerate_pbw(bound_h)
    polys = enumerate_monomials(bound_a)
    for m1 in monos:
        u = UElem.monomial(m1)
        for m2 in monos:
            v = UElem.monomial(m2)
            uv = u * v
            for p in polys:
                lhs = act(uv, p)
                rhs = act(u, act(v, p))
                report.checked += 1
                if lhs != rhs:
                    report.record(
                        (m1, m2, next(iter(p.terms))),
                        (render_mono(m1), render_mono(m2), str(p)),
                        lhs,
                        rhs,
                    )
    return report


def check_alphaWP(bound: int = 4) -> CheckReport:
    """alpha_A(W P) = alpha_L(W) alpha_A(P) for the three generators (Eq. 4.2)."""
    report = CheckReport("generator-compatibility", "Eq. (4.2)")
    alpha_A = alpha_plane()
    q_endo = UEndo.q_example()
    for gen in uea.GENERATORS:
        w = UElem.generator(gen)
        aw = q_endo.apply_lie(w)
        for p in enumerate_monomials(bound):
            lhs = alpha_A(act(w, p))
            rhs = act(aw, alpha_A(p))
            report.checked += 1
            if lhs != rhs:
                report.record(
                    (gen, next(iter(p.terms))), (gen, str(p)), lhs, rhs
                )
    return report


def check_alphaza(bound_h: int = 3, bound_a: int = 4) -> CheckReport:
    """Full compatibility alpha_A(za) = alpha_U(z) alpha_A(a) (Eq. 1.7)."""
    report = CheckReport("full-compatibility", "Eq. (1.7)")
    alpha_A = alpha_plane()
    alpha_U = alpha_u_handle()
    for mono in enumerate_pbw(bound_h):
        z = UElem.monomial(mono)
        az = alpha_U(z)
        for p in enumerate_monomials(bound_a):
            lhs = alpha_A(act(z, p))
            rhs = act(az, alpha_A(p))
            report.checked += 1
            if lhs != rhs:
                report.record(
                    (mono, next(iter(p.terms))),
                    (render_mono(mono), str(p)),
                    lhs,
                    rhs,
                )
    return report


def weight_spectrum(n: int):
    """Z-eigenvalues on the degree-n slice A_n, with closure asserted.

    Returns the sorted list of weights; raises if some generator escapes A_n
    or if a basis monomial fails to be a Z-eigenvector.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    weights = []
    for i in range(n, -1, -1):
        mono = Poly.monomial(i, n - i)
        for gen in uea.GENERATORS:
            image = act(UElem.generator(gen), mono)
            if image and image.total_degree() != n:
                raise AssertionError(
                    f"A_{n} not closed under {gen}: {gen}({mono}) = {image}"
                )
        zm = act(UElem.generator("Z"), mono)
        expected = mono.scaled(QLaurent.of(i - (n - i)))
        if zm != expected:
            raise AssertionError(f"{mono} is not a Z-eigenvector: Z({mono}) = {zm}")
        weights.append(i - (n - i))
    return sorted(weights, reverse=True)
