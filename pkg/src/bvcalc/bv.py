"""Gerstenhaber bracket on the exterior algebra and its generators.

The bracket is the degree -1 biderivation extending the Lie bracket on L
and the anchor action on A, with the convention

    [u, v ^ w] = [u, v] ^ w + (-1)^((|u|-1)|v|) v ^ [u, w]
    [u, v]     = -(-1)^((|u|-1)(|v|-1)) [v, u]

A right connection on A is the vector r with r_i = 1 o e_i; it induces a
degree -1 operator on multivectors by

    D(t_1 ^ ... ^ t_p) = sum_i (-1)^(i-1) (1 o t_i) t_1 ^ ..^t_i^.. ^ t_p
      + sum_{j<k} (-1)^(j+k) [t_j, t_k] ^ t_1 ^ ..^t_j..^t_k.. ^ t_p

where 1 o (b e_i) = b r_i - e_i(b).  The operator so built generates the
bracket in the sense checked by `is_generator`, and that identity pins
the sign conventions: the two code paths (recursive bracket, explicit
operator) are kept independent so they can be tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .algebra import LElement, LieRinehartAlgebra
from .exterior import Multivector
from .poly import PolyElement
from .sampling import SampleConfig, check_rng, random_poly


@dataclass(frozen=True)
class RightConnectionOnA:
    """Right connection data on A: r[i] is 1 o e_i."""

    r: tuple[PolyElement, ...]

    @property
    def n(self) -> int:
        return len(self.r)


def one_circ(alg: LieRinehartAlgebra, conn: RightConnectionOnA, alpha: LElement) -> PolyElement:
    """1 o alpha = sum_i (alpha_i r_i - e_i(alpha_i))."""
    if conn.n != alg.n or alpha.n != alg.n:
        raise ValueError("rank mismatch")
    out = PolyElement.zero(alg.m)
    for i, coeff in enumerate(alpha.coeffs):
        if coeff:
            if conn.r[i]:
                out = out + coeff * conn.r[i]
            if not alg.anchor[i].is_zero():
                out = out - alg.anchor[i](coeff)
    return out


def generator_on_factors(alg: LieRinehartAlgebra, conn: RightConnectionOnA,
                         thetas: Sequence[LElement]) -> Multivector:
    """The generator evaluated on a list of degree-1 factors.

    Implements the explicit operator formula literally, with general
    module elements in every slot; used both by `apply_generator` and by
    the well-definedness tests that move coefficients between slots.
    """
    p = len(thetas)
    n = alg.n
    out = Multivector.zero(n)
    for i in range(p):
        coeff = one_circ(alg, conn, thetas[i])
        if not coeff:
            continue
        rest = Multivector.scalar(n, coeff)
        for t, theta in enumerate(thetas):
            if t != i:
                rest = rest.wedge(Multivector.from_lelement(theta))
        out = out + rest if i % 2 == 0 else out - rest
    for j in range(p):
        for k in range(j + 1, p):
            br = alg.bracket(thetas[j], thetas[k])
            if br.is_zero():
                continue
            term = Multivector.from_lelement(br)
            for t, theta in enumerate(thetas):
                if t != j and t != k:
                    term = term.wedge(Multivector.from_lelement(theta))
            # (j+1) + (k+1) is even exactly when j + k is
            out = out + term if (j + k) % 2 == 0 else out - term
    return out


def apply_generator(alg: LieRinehartAlgebra, conn: RightConnectionOnA,
                    u: Multivector) -> Multivector:
    """Apply the generator induced by a right connection to a multivector.

    Each term a*e_S is evaluated with the coefficient carried by the
    first factor; degree-0 terms map to 0.
    """
    if u.n != alg.n:
        raise ValueError("rank mismatch")
    out = Multivector.zero(alg.n)
    for key, coeff in u.components.items():
        if not key:
            continue
        thetas = [alg.basis_l(i).scale(coeff) if t == 0 else alg.basis_l(i)
                  for t, i in enumerate(key)]
        out = out + generator_on_factors(alg, conn, thetas)
    return out


@dataclass(frozen=True)
class GeneratorD:
    """Degree -1 operator generating the Gerstenhaber bracket.

    Every generator arises from a right connection on A, so the data is
    just the connection; calling the object applies the operator.
    """

    alg: LieRinehartAlgebra
    connection: RightConnectionOnA

    def __call__(self, u: Multivector) -> Multivector:
        return apply_generator(self.alg, self.connection, u)


# -- the bracket ------------------------------------------------------


def _insert_at_slot(alg: LieRinehartAlgebra, key: tuple[int, ...], slot: int,
                    value: LElement) -> Multivector:
    """e_{key[0]} ^ .. ^ value ^ .. ^ e_{key[-1]} with value at `slot`."""
    n = alg.n
    out = Multivector.from_lelement(value)
    if slot:
        out = Multivector.basis(n, key[:slot], m=alg.m).wedge(out)
    if slot + 1 < len(key):
        out = out.wedge(Multivector.basis(n, key[slot + 1:], m=alg.m))
    return out


def _vector_bracket(alg: LieRinehartAlgebra, a: PolyElement, i: int,
                    b: PolyElement, key: tuple[int, ...]) -> Multivector:
    """[a e_i, b e_key] for an increasing tuple key.

    The bracket with a degree-1 element is an even derivation, so no
    slot signs appear: [alpha, b e_T] = alpha(b) e_T + b sum_t (...[alpha, e_t]...).
    """
    alpha = alg.basis_l(i).scale(a)
    out = Multivector(alg.n, [(key, alg.anchor_apply(alpha, b))])
    for t in range(len(key)):
        br = alg.bracket(alpha, alg.basis_l(key[t]))
        if br.is_zero():
            continue
        out = out + _insert_at_slot(alg, key, t, br).scale(b)
    return out


def _scalar_bracket(alg: LieRinehartAlgebra, a: PolyElement, b: PolyElement,
                    key: tuple[int, ...]) -> Multivector:
    """[a, b e_key] for a of degree 0: the odd-derivation expansion."""
    n = alg.n
    out = Multivector.zero(n)
    for t, i in enumerate(key):
        value = alg.anchor[i](a) * b
        if not value:
            continue
        term = Multivector(n, [(key[:t] + key[t + 1:], value)])
        # slot signs of an odd derivation, with [a, e_i] = -e_i(a)
        out = out - term if t % 2 == 0 else out + term
    return out


def _term_bracket(alg: LieRinehartAlgebra, a: PolyElement, s_key: tuple[int, ...],
                  b: PolyElement, t_key: tuple[int, ...]) -> Multivector:
    p, q = len(s_key), len(t_key)
    if p == 0:
        return _scalar_bracket(alg, a, b, t_key)
    if p == 1:
        return _vector_bracket(alg, a, s_key[0], b, t_key)
    # peel the first factor: [u ^ w, v] = (-1)^((q-1)(p-1)) [u,v] ^ w + u ^ [w,v]
    head = _vector_bracket(alg, a, s_key[0], b, t_key)
    part1 = head.wedge(Multivector.basis(alg.n, s_key[1:], m=alg.m))
    if ((q - 1) * (p - 1)) % 2:
        part1 = -part1
    tail = _term_bracket(alg, PolyElement.one(alg.m), s_key[1:], b, t_key)
    part2 = Multivector(alg.n, [((s_key[0],), a)]).wedge(tail)
    return part1 + part2


def gerstenhaber_bracket(alg: LieRinehartAlgebra, u: Multivector,
                         v: Multivector) -> Multivector:
    """The degree -1 bracket on multivectors."""
    if u.n != alg.n or v.n != alg.n:
        raise ValueError("rank mismatch")
    out = Multivector.zero(alg.n)
    for s_key, a in u.components.items():
        for t_key, b in v.components.items():
            out = out + _term_bracket(alg, a, s_key, b, t_key)
    return out


# -- generator checks --------------------------------------------------


Operator = Callable[[Multivector], Multivector]


def is_generator(alg: LieRinehartAlgebra, op: Operator, trials: int = 32,
                 seed: int = 0, config: SampleConfig | None = None) -> tuple[bool, str | None]:
    """Check the generator identity on all basis pairs with random coefficients.

    Per trial, every basis subset gets one random coefficient and the
    identity is checked on all ordered pairs.  Accepts any degree -1
    operator as a callable; returns (True, None) or (False, witness) with
    the first violating pair.
    """
    cfg = config or SampleConfig()
    rng = check_rng(seed, "is_generator")
    n = alg.n
    subsets = [s for p in range(n + 1) for s in combinations(range(n), p)]
    for _ in range(max(trials, 1)):
        terms = [(key, random_poly(rng, alg.m, cfg)) for key in subsets]
        elements = [Multivector(n, [(key, a)]) for key, a in terms]
        images = [op(u) for u in elements]
        for s_idx, u in enumerate(elements):
            p = len(terms[s_idx][0])
            du_wedge = images[s_idx]
            for t_idx, v in enumerate(elements):
                lhs = gerstenhaber_bracket(alg, u, v)
                inner = op(u.wedge(v)) - du_wedge.wedge(v)
                udv = u.wedge(images[t_idx])
                inner = inner - udv if p % 2 == 0 else inner + udv
                rhs = inner if p % 2 == 0 else -inner
                if lhs != rhs:
                    s_key, a = terms[s_idx]
                    t_key, b = terms[t_idx]
                    witness = (f"u=({a})*e{{{','.join(str(i + 1) for i in s_key)}}} "
                               f"v=({b})*e{{{','.join(str(i + 1) for i in t_key)}}} "
                               f"defect={lhs - rhs}")
                    return False, witness
    return True, None


@dataclass(frozen=True)
class SquareResult:
    """Outcome of testing whether an operator squares to zero."""

    is_exact: bool
    witness: str | None
    basis_table: dict  # S -> D(D(e_S)) on pure basis multivectors


def generator_square(alg: LieRinehartAlgebra, op: Operator, trials: int = 8,
                     seed: int = 0, config: SampleConfig | None = None) -> SquareResult:
    """Test D(D(u)) = 0 on basis multivectors with random coefficients."""
    cfg = config or SampleConfig()
    rng = check_rng(seed, "generator_square")
    n = alg.n
    subsets = [s for p in range(n + 1) for s in combinations(range(n), p)]
    table = {}
    witness = None
    exact = True
    one = PolyElement.one(alg.m)
    for s_key in subsets:
        table[s_key] = op(op(Multivector(n, [(s_key, one)])))
        if not table[s_key].is_zero() and witness is None:
            exact = False
            witness = f"D^2(e{{{','.join(str(i + 1) for i in s_key)}}}) = {table[s_key]}"
    for _ in range(max(trials, 1)):
        if not exact:
            break
        for s_key in subsets:
            a = random_poly(rng, alg.m, cfg)
            if not a:
                continue
            square = op(op(Multivector(n, [(s_key, a)])))
            if not square.is_zero():
                exact = False
                witness = (f"D^2(({a})*e{{{','.join(str(i + 1) for i in s_key)}}}) "
                           f"= {square}")
                break
    return SquareResult(is_exact=exact, witness=witness, basis_table=table)
