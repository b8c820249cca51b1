"""Conversions between the three equivalent connection data and the checks
that they really do correspond.

For L free of rank n the following data determine each other exactly:

  * a right connection r on A (r_i = 1 o e_i),
  * a connection gamma on the top power (gamma_i = lietrace_i - r_i),
  * a degree -1 generator D of the Gerstenhaber bracket (D e_i = r_i).

`check_generator_duality` verifies the diagram relating a generator to a
top connection through the pairing adjoint: phi_{D(u)} = -d(phi_u) in
every degree.  `check_bracket_pairing_identity` verifies the companion
expansion d(phi_u)(v) = (-1)^p (u ^ Dv + [u, v]) on complementary pairs.

The linear-connection layer: any connection on L induces one on the top
power by tracing its Christoffel rows, the endomorphisms
xi -> [alpha, xi] - nabla_alpha xi have traces equal to 1 o alpha = D(alpha),
and `torsionfree_lift` produces, for any prescribed top connection, a
torsion-free connection on L inducing it (rank-one correction split
symmetrically, which is where invertibility of n + 1 over Q is used).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .algebra import LieRinehartAlgebra
from .bv import GeneratorD, RightConnectionOnA, gerstenhaber_bracket
from .connections import (
    LeftConnectionOnL,
    TopConnection,
    covariant_derivative,
    induced_top_connection,
    lie_trace,
    phi_map,
    trace_endo,
)
from .exterior import Multivector, full_tuple, phi_iso
from .poly import PolyElement
from .sampling import SampleConfig, check_rng, random_poly


def right_from_generator(alg: LieRinehartAlgebra, gen: GeneratorD) -> RightConnectionOnA:
    """Read the right connection back off a generator: r_i = D(e_i)."""
    r = []
    for i in range(alg.n):
        image = gen(Multivector.basis(alg.n, (i,), m=alg.m))
        r.append(image.component((), alg.m))
    return RightConnectionOnA(tuple(r))


def _lie_traces(alg: LieRinehartAlgebra) -> tuple[PolyElement, ...]:
    return tuple(lie_trace(alg, alg.basis_l(i)) for i in range(alg.n))


def top_from_right(alg: LieRinehartAlgebra, conn: RightConnectionOnA) -> TopConnection:
    """The unique top connection with r_i x = lambda_{e_i}(x) - nabla_{e_i}(x)."""
    traces = _lie_traces(alg)
    return TopConnection(tuple(t - r for t, r in zip(traces, conn.r)))


def right_from_top(alg: LieRinehartAlgebra, conn: TopConnection) -> RightConnectionOnA:
    traces = _lie_traces(alg)
    return RightConnectionOnA(tuple(t - g for t, g in zip(traces, conn.gamma)))


def generator_from_top(alg: LieRinehartAlgebra, conn: TopConnection) -> GeneratorD:
    return GeneratorD(alg, right_from_top(alg, conn))


def check_generator_duality(alg: LieRinehartAlgebra, gen: GeneratorD,
                            conn: TopConnection, trials: int = 8, seed: int = 0,
                            config: SampleConfig | None = None) -> tuple[bool, str | None]:
    """Verify phi_{D(u)} = -d(phi_u) for all degrees 0..n.

    Holds exactly when the generator and the top connection correspond;
    a perturbed pair fails with a concrete witness.
    """
    cfg = config or SampleConfig()
    rng = check_rng(seed, "generator_duality")
    n, m = alg.n, alg.m
    for _ in range(max(trials, 1)):
        for p in range(n + 1):
            for key in combinations(range(n), p):
                a = random_poly(rng, m, cfg)
                u = Multivector(n, [(key, a)])
                image = gen(u)
                lhs = phi_iso(image, m, degree=max(p - 1, 0)) if p else None
                rhs = -covariant_derivative(alg, conn, phi_iso(u, m, degree=p))
                if p == 0:
                    # both sides live one degree above the top, i.e. vanish
                    if not (image.is_zero() and rhs.is_zero()):
                        return False, f"degree 0 witness: u=({a}), D(u)={image}, rhs={rhs}"
                    continue
                if lhs != rhs:
                    witness = (f"u=({a})*e{{{','.join(str(i + 1) for i in key)}}} "
                               f"phi_D(u)=[{lhs}] -d(phi_u)=[{rhs}]")
                    return False, witness
    return True, None


def check_bracket_pairing_identity(alg: LieRinehartAlgebra, gen: GeneratorD,
                                   conn: TopConnection, trials: int = 8, seed: int = 0,
                                   config: SampleConfig | None = None) -> tuple[bool, str | None]:
    """Verify d(phi_u)(v) = (-1)^p (u ^ D(v) + [u, v]) on the top power.

    Here u is homogeneous of degree p and v has the complementary degree
    n - p + 1, so both sides are multiples of the volume element.
    """
    cfg = config or SampleConfig()
    rng = check_rng(seed, "bracket_pairing")
    n, m = alg.n, alg.m
    top = full_tuple(n)
    for _ in range(max(trials, 1)):
        # p = 0: the form lands one degree above the top, so both sides vanish
        a = random_poly(rng, m, cfg)
        form = covariant_derivative(alg, conn, phi_iso(Multivector.scalar(n, a), m, degree=0))
        if not form.is_zero():
            return False, f"p=0 u=({a}): derivative of the top-degree form is {form}"
        for p in range(1, n + 1):
            q = n - p + 1
            for s_key in combinations(range(n), p):
                for t_key in combinations(range(n), q):
                    a = random_poly(rng, m, cfg)
                    b = random_poly(rng, m, cfg)
                    u = Multivector(n, [(s_key, a)])
                    v = Multivector(n, [(t_key, b)])
                    form = covariant_derivative(alg, conn, phi_iso(u, m, degree=p))
                    lhs = form.evaluate_on_multivector(v).coefficient
                    wedge_part = u.wedge(gen(v)).component(top, m)
                    bracket_part = gerstenhaber_bracket(alg, u, v).component(top, m)
                    rhs = wedge_part + bracket_part
                    if p % 2:
                        rhs = -rhs
                    if lhs != rhs:
                        witness = (f"p={p} u=({a})*e{{{','.join(str(i + 1) for i in s_key)}}} "
                                   f"v=({b})*e{{{','.join(str(i + 1) for i in t_key)}}} "
                                   f"lhs={lhs} rhs={rhs}")
                        return False, witness
    return True, None


def generator_from_linear_connection(alg: LieRinehartAlgebra,
                                     conn: LeftConnectionOnL) -> GeneratorD:
    """Generator from a connection on L: r_i = Tr(xi -> [e_i, xi] - nabla_{e_i} xi).

    No torsion hypothesis is needed, and the result depends only on the
    induced top connection.
    """
    r = tuple(trace_endo(phi_map(alg, conn, alg.basis_l(i))) for i in range(alg.n))
    return GeneratorD(alg, RightConnectionOnA(r))


def torsionfree_lift(alg: LieRinehartAlgebra, target: TopConnection,
                     base: LeftConnectionOnL | None = None) -> LeftConnectionOnL:
    """A torsion-free connection on L inducing the prescribed top connection.

    Start from a torsion-free base (half the structure functions by
    default), measure the defect phi_i of its induced top connection
    against the target, and correct by the symmetric A-linear family
    Phi(e_i)e_j = (phi_i e_j + phi_j e_i) / (n + 1), whose row traces are
    exactly phi_i.  Any torsion-free base yields the postconditions.
    """
    n = alg.n
    if base is None:
        half = PolyElement.const(alg.m, Fraction(1, 2))
        base = LeftConnectionOnL(tuple(tuple(alg.bracket_basis(i, j).scale(half)
                                             for j in range(n))
                                       for i in range(n)))
    induced = induced_top_connection(alg, base)
    phi = [t - g for t, g in zip(target.gamma, induced.gamma)]
    inv = PolyElement.const(alg.m, Fraction(1, n + 1))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            correction = alg.basis_l(j).scale(phi[i]) + alg.basis_l(i).scale(phi[j])
            row.append(base.table[i][j] + correction.scale(inv))
        rows.append(tuple(row))
    return LeftConnectionOnL(tuple(rows))
