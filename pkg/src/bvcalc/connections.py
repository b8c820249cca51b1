"""Connections on L and on the top exterior power, traces and divergences.

A left connection on L is a Christoffel table Gamma[i][j] in L with
nabla_{e_i} e_j = Gamma[i][j]; it extends A-linearly in the lower slot
and by the Leibniz rule over the anchor in the upper slot.  A connection
on the top power is a vector gamma with
nabla_{e_i}(e_1^..^e_n} = gamma_i e_1^..^e_n.

The covariant derivative on top-valued alternating forms uses the
Hom-complex sign convention with arguments indexed from p = n - q for a
degree-q input form:

    (d f)(xi_p..xi_n) = sum_j (-1)^(j-1) nabla_{xi_j} f(..^xi_j..)
        + (-1)^(p+1) sum_{j<k} (-1)^(j+k) f([xi_j,xi_k], ..^xi_j..^xi_k..)

The absolute argument labels j, k run from p to n; getting this offset
right matters, since the duality checks in `correspond` are sensitive to
a global sign per degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .algebra import LElement, LieRinehartAlgebra
from .exterior import AltForm, TopElement, full_tuple
from .poly import PolyElement


@dataclass(frozen=True)
class TopConnection:
    """Connection on the top exterior power: one coefficient per basis direction."""

    gamma: tuple[PolyElement, ...]

    @property
    def n(self) -> int:
        return len(self.gamma)


@dataclass(frozen=True)
class LeftConnectionOnL:
    """Connection on L via its Christoffel table: table[i][j] = nabla_{e_i} e_j."""

    table: tuple[tuple[LElement, ...], ...]

    @property
    def n(self) -> int:
        return len(self.table)

    @classmethod
    def zero(cls, alg: LieRinehartAlgebra) -> "LeftConnectionOnL":
        return cls(tuple(tuple(alg.zero_l() for _ in range(alg.n)) for _ in range(alg.n)))

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[LElement]]) -> "LeftConnectionOnL":
        return cls(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class EndoOfL:
    """A-linear endomorphism of L; images[j] = E(e_j) in basis coordinates."""

    images: tuple[LElement, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, xi: LElement) -> LElement:
        out = None
        for coeff, image in zip(xi.coeffs, self.images):
            term = image.scale(coeff)
            out = term if out is None else out + term
        return out

    def entry(self, j: int, k: int) -> PolyElement:
        """Coefficient of e_k in E(e_j)."""
        return self.images[j].coeffs[k]


def trace_endo(endo: EndoOfL) -> PolyElement:
    if not endo.n:
        return PolyElement.zero(0)
    out = endo.images[0].coeffs[0]
    for i in range(1, endo.n):
        out = out + endo.images[i].coeffs[i]
    return out


# -- Lie derivative and top connections ---------------------------------


def lie_trace(alg: LieRinehartAlgebra, alpha: LElement) -> PolyElement:
    """Coefficient of the Lie derivative of the basis volume along alpha."""
    out = PolyElement.zero(alg.m)
    for j in range(alg.n):
        out = out + alg.bracket(alpha, alg.basis_l(j)).coeffs[j]
    return out


def lie_derivative_top(alg: LieRinehartAlgebra, alpha: LElement,
                       x: TopElement) -> TopElement:
    """Lie derivative on the top power: a derivation over the anchor."""
    if x.n != alg.n:
        raise ValueError("rank mismatch")
    coeff = alg.anchor_apply(alpha, x.coefficient) + x.coefficient * lie_trace(alg, alpha)
    return TopElement(alg.n, coeff)


def connection_apply_top(alg: LieRinehartAlgebra, conn: TopConnection,
                         alpha: LElement, x: TopElement) -> TopElement:
    """A-linear in alpha, Leibniz over the anchor in x."""
    if conn.n != alg.n or x.n != alg.n:
        raise ValueError("rank mismatch")
    g = PolyElement.zero(alg.m)
    for a, gi in zip(alpha.coeffs, conn.gamma):
        g = g + a * gi
    coeff = alg.anchor_apply(alpha, x.coefficient) + x.coefficient * g
    return TopElement(alg.n, coeff)


def connection_apply_l(alg: LieRinehartAlgebra, conn: LeftConnectionOnL,
                       alpha: LElement, xi: LElement) -> LElement:
    """nabla_alpha xi for general elements of L."""
    out = [PolyElement.zero(alg.m) for _ in range(alg.n)]
    rho_alpha = alg.anchor_of(alpha)
    for k in range(alg.n):
        out[k] = rho_alpha(xi.coeffs[k])
    for i, a in enumerate(alpha.coeffs):
        if not a:
            continue
        for j, b in enumerate(xi.coeffs):
            if not b:
                continue
            gamma_ij = conn.table[i][j]
            for k, ck in enumerate(gamma_ij.coeffs):
                if ck:
                    out[k] = out[k] + a * b * ck
    return LElement(tuple(out))


# -- torsion and curvature ----------------------------------------------


def torsion(alg: LieRinehartAlgebra, conn: LeftConnectionOnL) -> list[list[LElement]]:
    """T[i][j] = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j]."""
    return [[conn.table[i][j] - conn.table[j][i] - alg.bracket_basis(i, j)
             for j in range(alg.n)]
            for i in range(alg.n)]


def is_torsion_free(alg: LieRinehartAlgebra, conn: LeftConnectionOnL) -> bool:
    return all(entry.is_zero() for row in torsion(alg, conn) for entry in row)


def curvature_top(alg: LieRinehartAlgebra, conn: TopConnection) -> list[list[PolyElement]]:
    """R[i][j] = e_i(gamma_j) - e_j(gamma_i) - sum_k c[i][j][k] gamma_k."""
    n = alg.n
    out = [[PolyElement.zero(alg.m) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            value = alg.anchor[i](conn.gamma[j]) - alg.anchor[j](conn.gamma[i])
            for k, ck in enumerate(alg.bracket_basis(i, j).coeffs):
                if ck:
                    value = value - ck * conn.gamma[k]
            out[i][j] = value
    return out


def is_flat(alg: LieRinehartAlgebra, conn: TopConnection) -> bool:
    return all(not entry for row in curvature_top(alg, conn) for entry in row)


# -- covariant derivative ------------------------------------------------


def covariant_derivative(alg: LieRinehartAlgebra, conn: TopConnection,
                         f: AltForm) -> AltForm:
    """Covariant derivative of a top-valued form, one degree up.

    Input of degree n (or more) maps to the zero form one degree up:
    there are no increasing tuples of that length left.
    """
    n, m = alg.n, alg.m
    q = f.degree
    out = AltForm(n, m, min(q + 1, n + 1))
    if q >= n:
        return out
    p = n - q  # first absolute argument label in the sign convention
    acc: dict[tuple[int, ...], PolyElement] = {}
    for key in combinations(range(n), q + 1):
        value = PolyElement.zero(m)
        for t, i in enumerate(key):
            inner = f.value_on_increasing(key[:t] + key[t + 1:])
            if not inner:
                continue
            nabla = alg.anchor[i](inner) + inner * conn.gamma[i]
            # label of slot t is j = p + t; sign (-1)^(j-1)
            value = value + nabla if (p + t - 1) % 2 == 0 else value - nabla
        for s in range(q + 1):
            for t in range(s + 1, q + 1):
                br = alg.bracket_basis(key[s], key[t])
                if br.is_zero():
                    continue
                rest = key[:s] + key[s + 1:t] + key[t + 1:]
                inner = PolyElement.zero(m)
                for l, cl in enumerate(br.coeffs):
                    if cl:
                        inner = inner + cl * f.value_on_basis_tuple((l,) + rest)
                # labels j = p + s, k = p + t; total sign (-1)^(p+1) (-1)^(j+k)
                value = value + inner if (p + 1 + s + t) % 2 == 0 else value - inner
        if value:
            acc[key] = value
    out.components = acc
    return out


# -- the endomorphism-valued map and traces -------------------------------


def phi_map(alg: LieRinehartAlgebra, conn: LeftConnectionOnL,
            alpha: LElement) -> EndoOfL:
    """xi -> [alpha, xi] - nabla_alpha xi, which is A-linear in xi."""
    images = tuple(alg.bracket(alpha, alg.basis_l(j))
                   - connection_apply_l(alg, conn, alpha, alg.basis_l(j))
                   for j in range(alg.n))
    return EndoOfL(images)


def induced_top_connection(alg: LieRinehartAlgebra,
                           conn: LeftConnectionOnL) -> TopConnection:
    """gamma_i = sum_k Gamma[i][k][k], the trace of the Christoffel rows."""
    gamma = []
    for i in range(alg.n):
        g = PolyElement.zero(alg.m)
        for k in range(alg.n):
            g = g + conn.table[i][k].coeffs[k]
        gamma.append(g)
    return TopConnection(tuple(gamma))


# -- right module structure on Hom(top, top) ------------------------------


def identity_top_form(alg: LieRinehartAlgebra) -> AltForm:
    """The identity of Hom(top, top) as a degree-n form."""
    return AltForm(alg.n, alg.m, alg.n, {full_tuple(alg.n): PolyElement.one(alg.m)})


def generalized_lie_derivative(alg: LieRinehartAlgebra, conn: TopConnection,
                               alpha: LElement, f: AltForm) -> AltForm:
    """lambda_alpha on Hom(top, top): f -> nabla_alpha(f x) - f(lambda_alpha x)."""
    if f.degree != alg.n:
        raise ValueError("expected a top-degree form")
    b = f.value_on_increasing(full_tuple(alg.n))
    basis_top = TopElement(alg.n, PolyElement.one(alg.m))
    nabla_part = connection_apply_top(alg, conn, alpha, TopElement(alg.n, b))
    lie_part = b * lie_derivative_top(alg, alpha, basis_top).coefficient
    return AltForm(alg.n, alg.m, alg.n,
                   {full_tuple(alg.n): nabla_part.coefficient - lie_part})


def dual_right_connection(alg: LieRinehartAlgebra, conn: TopConnection,
                          f: AltForm, alpha: LElement) -> AltForm:
    """The right connection f o alpha = -lambda_alpha(f) on Hom(top, top)."""
    return -generalized_lie_derivative(alg, conn, alpha, f)


def divergence_rank_one(endo: Callable, basis) -> PolyElement:
    """Scalar of an endomorphism of a rank-one free module: E(b) = div * b.

    Works for the two rank-one modules in play, the top power and the
    top-degree forms; the chosen basis coefficient must be a nonzero
    rational constant so that it is a unit of A.
    """
    image = endo(basis)
    if isinstance(basis, TopElement):
        base_coeff, image_coeff = basis.coefficient, image.coefficient
    elif isinstance(basis, AltForm):
        if basis.degree != basis.n:
            raise ValueError("basis form must have top degree")
        key = full_tuple(basis.n)
        base_coeff = basis.value_on_increasing(key)
        image_coeff = image.value_on_increasing(key)
    else:
        raise TypeError(f"unsupported rank-one module element: {type(basis).__name__}")
    if not base_coeff.is_constant() or not base_coeff:
        raise ValueError("basis coefficient must be a nonzero constant")
    return image_coeff * (Fraction(1) / base_coeff.constant_value())
