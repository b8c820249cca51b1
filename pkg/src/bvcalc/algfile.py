"""The algebra description file format and its loader.

A file is line oriented: ``key = value`` with ``#`` comments.  Indices in
files are 1-based; everything becomes 0-based on load.

    name = nonabelian-dim2
    m = 0                     # variable count of A = Q[x1..xm]
    n = 2                     # rank of L
    anchor[i][j] = <poly>     # coefficient of d/dx_j in rho(e_i), default 0
    c[i][j][k] = <poly>       # [e_i, e_j] = sum_k c[i][j][k] e_k, needs i < j
    gamma = [<poly>, ...]     # optional connection on the top power
    r = [<poly>, ...]         # optional right connection on A
    Gamma[i][j][k] = <poly>   # optional connection on L
    expect_nonflat = true     # the square-zero check is expected to fail
    suites = axioms, generator  # optional default suite selection

Polynomial values use the exact syntax of `bvcalc.poly.parse_poly`.
Loading validates the Lie-Rinehart axioms; a violating file is rejected
with the offending basis tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .algebra import LElement, LieRinehartAlgebra
from .bv import RightConnectionOnA
from .connections import LeftConnectionOnL, TopConnection
from .poly import DerivationOfA, PolyElement, PolyParseError, parse_poly


class AlgebraFileError(ValueError):
    """Parse or validation failure, located by line (and column if known)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


@dataclass
class LoadedAlgebra:
    """An algebra plus the optional connection blocks found in its file."""

    algebra: LieRinehartAlgebra
    gamma: TopConnection | None = None
    r: RightConnectionOnA | None = None
    Gamma: LeftConnectionOnL | None = None
    expect_nonflat: bool = False
    suites: tuple[str, ...] | None = None
    source: str = ""

    def top_connection(self) -> TopConnection:
        """The effective top connection: explicit gamma, from r, or flat zero."""
        from .correspond import top_from_right

        if self.gamma is not None:
            return self.gamma
        if self.r is not None:
            return top_from_right(self.algebra, self.r)
        alg = self.algebra
        return TopConnection(tuple(PolyElement.zero(alg.m) for _ in range(alg.n)))

    def right_connection(self) -> RightConnectionOnA:
        from .correspond import right_from_top

        if self.r is not None:
            return self.r
        return right_from_top(self.algebra, self.top_connection())


_KEY_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)((?:\[\d+\])*)$")


def _parse_indices(bracket_part: str, count: int, line_no: int) -> tuple[int, ...]:
    indices = tuple(int(s) for s in re.findall(r"\[(\d+)\]", bracket_part))
    if len(indices) != count:
        raise AlgebraFileError(f"expected {count} indices, found {len(indices)}", line_no)
    return indices


def _parse_vector(value: str, m: int, line_no: int) -> tuple[PolyElement, ...]:
    text = value.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise AlgebraFileError("expected a bracketed vector like [0, 1]", line_no)
    inner = text[1:-1].strip()
    if not inner:
        return ()
    out = []
    for piece in inner.split(","):
        try:
            out.append(parse_poly(piece, m))
        except PolyParseError as exc:
            raise AlgebraFileError(f"bad polynomial {piece.strip()!r}: {exc}", line_no) from exc
    return tuple(out)


def load(path: str | Path) -> LoadedAlgebra:
    """Load and validate an algebra file; raises AlgebraFileError on problems."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc}") from exc
    return loads(text, source=str(path))


def loads(text: str, source: str = "<string>") -> LoadedAlgebra:
    name = ""
    m = n = None
    anchor_entries: dict[tuple[int, int], tuple[str, int]] = {}
    c_entries: dict[tuple[int, int, int], tuple[str, int]] = {}
    big_gamma_entries: dict[tuple[int, int, int], tuple[str, int]] = {}
    gamma_line = r_line = None
    expect_nonflat = False
    suites: tuple[str, ...] | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise AlgebraFileError("expected 'key = value'", line_no)
        key_part, value = line.split("=", 1)
        key_part = key_part.strip()
        value = value.strip()
        match = _KEY_RE.match(key_part)
        if not match:
            raise AlgebraFileError(f"malformed key {key_part!r}", line_no)
        key, brackets = match.group(1), match.group(2)

        if key == "name":
            name = value
        elif key in ("m", "n"):
            if not value.isdigit():
                raise AlgebraFileError(f"{key} must be a non-negative integer", line_no)
            if key == "m":
                m = int(value)
            else:
                n = int(value)
        elif key == "anchor":
            anchor_entries[_parse_indices(brackets, 2, line_no)] = (value, line_no)
        elif key == "c":
            c_entries[_parse_indices(brackets, 3, line_no)] = (value, line_no)
        elif key == "Gamma":
            big_gamma_entries[_parse_indices(brackets, 3, line_no)] = (value, line_no)
        elif key == "gamma":
            gamma_line = (value, line_no)
        elif key == "r":
            r_line = (value, line_no)
        elif key == "expect_nonflat":
            if value not in ("true", "false"):
                raise AlgebraFileError("expect_nonflat must be true or false", line_no)
            expect_nonflat = value == "true"
        elif key == "suites":
            suites = tuple(s.strip() for s in value.split(",") if s.strip())
        else:
            raise AlgebraFileError(f"unknown key {key!r}", line_no)

    if m is None or n is None:
        raise AlgebraFileError("file must set both m and n")

    def parse_entry(value: str, line_no: int) -> PolyElement:
        try:
            return parse_poly(value, m)
        except PolyParseError as exc:
            raise AlgebraFileError(str(exc), line_no, exc.column + 1) from exc

    anchor_rows = [[PolyElement.zero(m) for _ in range(m)] for _ in range(n)]
    for (i, j), (value, line_no) in anchor_entries.items():
        if not (1 <= i <= n and 1 <= j <= m):
            raise AlgebraFileError(f"anchor[{i}][{j}] out of range for n={n}, m={m}", line_no)
        anchor_rows[i - 1][j - 1] = parse_entry(value, line_no)

    structure: dict[tuple[int, int], list[PolyElement]] = {}
    for (i, j, k), (value, line_no) in c_entries.items():
        if not (1 <= i < j <= n and 1 <= k <= n):
            raise AlgebraFileError(
                f"c[{i}][{j}][{k}] needs 1 <= i < j <= n and 1 <= k <= n (n={n})", line_no)
        row = structure.setdefault((i - 1, j - 1), [PolyElement.zero(m) for _ in range(n)])
        row[k - 1] = parse_entry(value, line_no)

    algebra = LieRinehartAlgebra(
        m=m, n=n,
        anchor=tuple(DerivationOfA(tuple(row)) for row in anchor_rows),
        structure={key: LElement(tuple(row)) for key, row in structure.items() if any(row)},
        name=name or Path(source).stem)

    violations = algebra.verify_axioms()
    if violations:
        raise AlgebraFileError("axioms fail: " + "; ".join(str(v) for v in violations))

    gamma = None
    if gamma_line is not None:
        vec = _parse_vector(gamma_line[0], m, gamma_line[1])
        if len(vec) != n:
            raise AlgebraFileError(f"gamma must have {n} entries", gamma_line[1])
        gamma = TopConnection(vec)

    r = None
    if r_line is not None:
        vec = _parse_vector(r_line[0], m, r_line[1])
        if len(vec) != n:
            raise AlgebraFileError(f"r must have {n} entries", r_line[1])
        r = RightConnectionOnA(vec)

    if gamma is not None and r is not None:
        from .correspond import right_from_top

        if right_from_top(algebra, gamma).r != r.r:
            raise AlgebraFileError("gamma and r are both given but do not correspond")

    big_gamma = None
    if big_gamma_entries:
        table = [[[PolyElement.zero(m) for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (i, j, k), (value, line_no) in big_gamma_entries.items():
            if not all(1 <= idx <= n for idx in (i, j, k)):
                raise AlgebraFileError(f"Gamma[{i}][{j}][{k}] out of range (n={n})", line_no)
            table[i - 1][j - 1][k - 1] = parse_entry(value, line_no)
        big_gamma = LeftConnectionOnL(tuple(tuple(LElement(tuple(table[i][j]))
                                                  for j in range(n))
                                            for i in range(n)))

    return LoadedAlgebra(algebra=algebra, gamma=gamma, r=r, Gamma=big_gamma,
                         expect_nonflat=expect_nonflat, suites=suites, source=source)
