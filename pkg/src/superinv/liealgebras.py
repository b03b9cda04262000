"""Matrix Lie superalgebras gl, sl, osp, pe, spe: bases, brackets, and the
derivation action on polynomial algebras.

Form-preserving families are not hand-coded; their bases are exact
nullspaces of the annihilation condition on the gl basis, echelonized for
determinism, then checked for bracket closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .alphabet import EVEN, ODD, IndexRange, SuperIndex, ev, od
from .linalg import SpanTracker, nullspace
from .polynomials import AlgebraDescriptor, Polynomial


@dataclass
class MatrixElement:
    """Homogeneous matrix over the super vector space with basis indexed by
    `dims`.  Entry (r, c) sends basis vector c to basis vector r."""

    dims: IndexRange
    entries: dict[tuple[SuperIndex, SuperIndex], Fraction]
    parity: int

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            v = Fraction(v)
            if not v:
                continue
            if (r.parity + c.parity) % 2 != self.parity:
                raise ValueError("entry off the declared parity block")
            clean[(r, c)] = v
        self.entries = clean

    @staticmethod
    def unit(dims: IndexRange, r: SuperIndex, c: SuperIndex) -> "MatrixElement":
        return MatrixElement(dims, {(r, c): Fraction(1)}, (r.parity + c.parity) % 2)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        if other.parity != self.parity:
            raise ValueError("cannot add different parities")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MatrixElement(self.dims, out, self.parity)

    def scale(self, c) -> "MatrixElement":
        c = Fraction(c)
        return MatrixElement(
            self.dims, {k: v * c for k, v in self.entries.items()}, self.parity
        )

    def matmul(self, other: "MatrixElement") -> "MatrixElement":
        out: dict[tuple[SuperIndex, SuperIndex], Fraction] = {}
        for (r1, c1), v1 in self.entries.items():
            for (r2, c2), v2 in other.entries.items():
                if c1 != r2:
                    continue
                k = (r1, c2)
                s = out.get(k, Fraction(0)) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return MatrixElement(self.dims, out, (self.parity + other.parity) % 2)

    def bracket(self, other: "MatrixElement") -> "MatrixElement":
        """Superbracket [X, Y] = XY - (-1)^{p(X)p(Y)} YX."""
        sign = (-1) ** (self.parity * other.parity)
        return self.matmul(other) + other.matmul(self).scale(-sign)

    def supertrace(self) -> Fraction:
        out = Fraction(0)
        for (r, c), v in self.entries.items():
            if r == c:
                out += v if r.parity == EVEN else -v
        return out

    def is_diagonal(self) -> bool:
        return all(r == c for (r, c) in self.entries)

    def column(self, c: SuperIndex) -> dict[SuperIndex, Fraction]:
        """Action on the basis vector e_c."""
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def dual_row(self, r: SuperIndex) -> dict[SuperIndex, Fraction]:
        """Coefficients of the dual action: e_r^* goes to
        -(-1)^{p(X)p(r)} sum of X[r,c] e_c^*."""
        sign = -((-1) ** (self.parity * r.parity))
        return {c: v * sign for (rr, c), v in self.entries.items() if rr == r}

    def coeff_vector(self, coords: Sequence[tuple[SuperIndex, SuperIndex]]) -> list[Fraction]:
        return [self.entries.get(k, Fraction(0)) for k in coords]

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        bits = []
        for (r, c) in sorted(self.entries):
            v = self.entries[(r, c)]
            bits.append(f"{'+' if v > 0 else '-'} {abs(v)}*E[{r},{c}]")
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else s

    __repr__ = __str__


def matrix_from_vector(
    dims: IndexRange,
    coords: Sequence[tuple[SuperIndex, SuperIndex]],
    vec: Sequence[Fraction],
    parity: int,
) -> MatrixElement:
    entries = {coords[i]: Fraction(v) for i, v in enumerate(vec) if v}
    return MatrixElement(dims, entries, parity)


@dataclass
class AlgebraFamily:
    tag: str
    dims: IndexRange
    basis: list[MatrixElement]
    grading: dict[str, list[MatrixElement]] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def diagonal_basis(self) -> list[MatrixElement]:
        return [b for b in self.basis if b.is_diagonal()]

    def off_diagonal_basis(self) -> list[MatrixElement]:
        return [b for b in self.basis if not b.is_diagonal()]


def gl_basis(dims: IndexRange) -> list[MatrixElement]:
    letters = dims.indices()
    return [MatrixElement.unit(dims, r, c) for r in letters for c in letters]


def _parity_block(dims: IndexRange, parity: int) -> list[tuple[SuperIndex, SuperIndex]]:
    letters = dims.indices()
    coords = [
        (r, c) for r in letters for c in letters if (r.parity + c.parity) % 2 == parity
    ]
    # off-diagonal coordinates first: echelonization then pushes purely
    # diagonal solutions into recognisable rows
    coords.sort(key=lambda rc: (rc[0] == rc[1], rc))
    return coords


def _solve_family(
    dims: IndexRange,
    conditions,
    parity: int,
) -> list[MatrixElement]:
    """Solve linear conditions on a single parity block of gl.

    `conditions(X)` maps a MatrixElement to a list of Fractions that must
    all vanish.
    """
    coords = _parity_block(dims, parity)
    rows = []
    cond_len = None
    for i, coord in enumerate(coords):
        x = MatrixElement.unit(dims, *coord)
        vals = conditions(x)
        cond_len = len(vals)
        rows.append(vals)
    if cond_len is None:
        return []
    # transpose: each condition gives one linear equation over the coords
    mat = [[rows[i][j] for i in range(len(coords))] for j in range(cond_len)]
    mat = [row for row in mat if any(row)]
    kernel = nullspace(mat, ncols=len(coords))
    out = []
    for vec in kernel:
        den = 1
        for v in vec:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [v * den for v in vec]
        out.append(matrix_from_vector(dims, coords, ints, parity))
    return out


def osp_form_tensor(dims: IndexRange):
    """The preserved covector pairing for the orthosymplectic family:
    symmetric anti-diagonal on the even part, symplectic pairing on the odd
    part.  Returned as a list of ((a, b), coeff) slots of a two-fold dual
    tensor."""
    n, m = dims.even_count, dims.odd_count
    if m % 2:
        raise ValueError("odd dimension must be even")
    r = m // 2
    terms: list[tuple[tuple[SuperIndex, SuperIndex], Fraction]] = []
    for i in range(1, n + 1):
        terms.append(((ev(i), ev(n - i + 1)), Fraction(1)))
    for j in range(1, r + 1):
        terms.append(((od(m - j + 1), od(j)), Fraction(1)))
        terms.append(((od(j), od(m - j + 1)), Fraction(-1)))
    return terms


def pe_form_tensor(dims: IndexRange):
    """The preserved odd covector pairing for the periplectic family."""
    n, m = dims.even_count, dims.odd_count
    if n != m:
        raise ValueError("periplectic dimensions must be (n|n)")
    terms: list[tuple[tuple[SuperIndex, SuperIndex], Fraction]] = []
    for i in range(1, n + 1):
        terms.append(((ev(i), od(i)), Fraction(1)))
        terms.append(((od(i), ev(i)), Fraction(1)))
    return terms


def _dual_pair_action(x: MatrixElement, form) -> list[Fraction]:
    """Coefficients of x acting on a dual-dual tensor sum c_{ab} e_a* x e_b*.

    The action on e_a* is -(-1)^{p(x)p(a)} sum_c x[a,c] e_c*; crossing into the
    second slot costs (-1)^{p(x)p(first slot)}.
    """
    out: dict[tuple[SuperIndex, SuperIndex], Fraction] = {}

    def accumulate(key, val):
        s = out.get(key, Fraction(0)) + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (a, b), coeff in form:
        for c, v in x.dual_row(a).items():
            accumulate((c, b), coeff * v)
        sign = (-1) ** (x.parity * a.parity)
        for c, v in x.dual_row(b).items():
            accumulate((a, c), coeff * v * sign)
    letters = x.dims.indices()
    return [out.get((a, b), Fraction(0)) for a in letters for b in letters]


def build_family(tag: str, dims: IndexRange) -> AlgebraFamily:
    """Construct a bracket-closed basis for the requested family."""
    if tag == "gl":
        fam = AlgebraFamily("gl", dims, gl_basis(dims))
    elif tag == "sl":
        basis = [
            MatrixElement.unit(dims, r, c)
            for r in dims
            for c in dims
            if r != c
        ]
        letters = dims.indices()
        last = letters[-1]
        s_last = -1 if last.parity else 1
        for a in letters[:-1]:
            s_a = -1 if a.parity else 1
            x = MatrixElement.unit(dims, a, a) + MatrixElement.unit(dims, last, last).scale(
                Fraction(-s_a * s_last)
            )
            basis.append(x)
        fam = AlgebraFamily("sl", dims, basis)
    elif tag == "osp":
        form = osp_form_tensor(dims)
        basis = []
        for parity in (0, 1):
            basis.extend(_solve_family(dims, lambda x: _dual_pair_action(x, form), parity))
        fam = AlgebraFamily("osp", dims, basis)
    elif tag in ("pe", "spe"):
        form = pe_form_tensor(dims)
        basis = []
        for parity in (0, 1):
            if tag == "pe":
                cond = lambda x: _dual_pair_action(x, form)
            else:
                cond = lambda x: _dual_pair_action(x, form) + [x.supertrace()]
            basis.extend(_solve_family(dims, cond, parity))
        fam = AlgebraFamily(tag, dims, basis)
        fam.grading = _pe_grading(fam)
    else:
        raise ValueError(f"unknown family tag {tag!r}")
    _check_linear_independence(fam)
    return fam


def _pe_grading(fam: AlgebraFamily) -> dict[str, list[MatrixElement]]:
    """Split a periplectic-type basis into the (lower | even | upper) blocks."""
    minus, zero, plus = [], [], []
    for b in fam.basis:
        blocks = {(r.parity, c.parity) for (r, c) in b.entries}
        if blocks <= {(ODD, EVEN)}:
            minus.append(b)
        elif blocks <= {(EVEN, ODD)}:
            plus.append(b)
        elif blocks <= {(EVEN, EVEN), (ODD, ODD)}:
            zero.append(b)
        else:  # mixed homogeneous odd element: split it
            lower = {k: v for k, v in b.entries.items() if (k[0].parity, k[1].parity) == (ODD, EVEN)}
            upper = {k: v for k, v in b.entries.items() if (k[0].parity, k[1].parity) == (EVEN, ODD)}
            if lower:
                minus.append(MatrixElement(b.dims, lower, 1))
            if upper:
                plus.append(MatrixElement(b.dims, upper, 1))
    return {"minus": _dedupe(minus), "zero": zero, "plus": _dedupe(plus)}


def _dedupe(elements: list[MatrixElement]) -> list[MatrixElement]:
    if not elements:
        return []
    dims = elements[0].dims
    letters = dims.indices()
    coords = [(r, c) for r in letters for c in letters]
    tracker = SpanTracker(len(coords))
    out = []
    for e in elements:
        if tracker.add(e.coeff_vector(coords)):
            out.append(e)
    return out


def _check_linear_independence(fam: AlgebraFamily) -> None:
    letters = fam.dims.indices()
    coords = [(r, c) for r in letters for c in letters]
    tracker = SpanTracker(len(coords))
    for b in fam.basis:
        if not tracker.add(b.coeff_vector(coords)):
            raise AssertionError("family basis is linearly dependent")


def in_span(fam: AlgebraFamily, x: MatrixElement) -> bool:
    letters = fam.dims.indices()
    coords = [(r, c) for r in letters for c in letters]
    tracker = SpanTracker(len(coords))
    for b in fam.basis:
        tracker.add(b.coeff_vector(coords))
    return tracker.contains(x.coeff_vector(coords))


def bracket_closed(fam: AlgebraFamily) -> bool:
    for x in fam.basis:
        for y in fam.basis:
            if not in_span(fam, x.bracket(y)):
                return False
    return True


# ---------------------------------------------------------------------------
# derivation action on the polynomial algebras


def act_on_generator(x: MatrixElement, algebra: AlgebraDescriptor, gen_index: int):
    """Image of a single generator, as a list of (gen_index, coeff)."""
    g = algebra.generator(gen_index)
    out = []
    if g.family == "uv":
        # x[r,i]: the matrix acts through the second (vector) slot, crossing
        # the u-factor first
        sign = (-1) ** (x.parity * g.row.parity)
        for a, v in x.column(g.col).items():
            idx = algebra.maybe_index("uv", g.row, a)
            if idx is not None:
                out.append((idx, v * sign))
    elif g.family == "vw":
        # x*[i,s]: dual action through the first slot
        for b, v in x.dual_row(g.row).items():
            idx = algebra.maybe_index("vw", b, g.col)
            if idx is not None:
                out.append((idx, v))
    else:
        raise ValueError(f"family {g.family!r} carries no inner action")
    return out


def act_on_polynomial(x: MatrixElement, f: Polynomial) -> Polynomial:
    """Super-derivation extension of the generator action."""
    algebra = f.algebra
    v_range = getattr(algebra, "v_range", None)
    if v_range is not None and v_range != x.dims:
        raise ValueError("matrix dimensions do not match the algebra's inner space")
    parities = algebra.parities
    out = algebra.zero()
    for mono, coeff in f.terms.items():
        left_parity = 0
        for pos, gen in enumerate(mono):
            sign = (-1) ** (x.parity * left_parity)
            for idx, v in act_on_generator(x, algebra, gen):
                new = mono[:pos] + (idx,) + mono[pos + 1 :]
                out.add_term(new, coeff * v * sign)
            left_parity = (left_parity + parities[gen]) % 2
    return out


def act_iterated(xs: Sequence[MatrixElement], f: Polynomial) -> Polynomial:
    """Apply a product of algebra elements, leftmost factor acting last."""
    out = f
    for x in reversed(xs):
        out = act_on_polynomial(x, out)
    return out


# ---------------------------------------------------------------------------
# the lower-triangular product of the periplectic family


def yminus_factors(dims: IndexRange) -> list[MatrixElement]:
    """Factors E[i', j] - E[j', i] over lexicographic pairs i < j."""
    n = dims.even_count
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(
                MatrixElement.unit(dims, od(i), ev(j))
                + MatrixElement.unit(dims, od(j), ev(i)).scale(-1)
            )
    return out


def t1_matrices(n: int) -> list[dict[tuple[int, int], int]]:
    """0/1 matrices with zero diagonal and a_ij + a_ji = 1 off the diagonal."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        a: dict[tuple[int, int], int] = {}
        for (i, j), pick in zip(pairs, choice):
            a[(i, j)] = pick
            a[(j, i)] = 1 - pick
        out.append(a)
    return out


def _abs_recursive(a: dict[tuple[int, int], int], n: int, corrected: bool) -> int:
    """Sign exponent |A| for the lower-product expansion.

    `corrected=False` is the literal recursion: base |A| = 0 at n = 2, the
    lower-entry count taken over the whole matrix at every level, and the
    constant term n(n-1)(n-2)/6.

    `corrected=True` repairs it: base a_21 at n = 2, only the last row's
    lower entries per level, and the constant (n-1)(n-2)(n-3)/6 counting the
    actual factor crossings.
    """
    if n == 2:
        return a[(2, 1)] if corrected else 0
    sub = {k: v for k, v in a.items() if k[0] < n and k[1] < n}

    def substars(i: int) -> int:
        return sum(v for (p, q), v in sub.items() if p > i)

    total = _abs_recursive(sub, n - 1, corrected)
    for i in range(1, n - 1):
        total += a[(i, n)] * substars(i)
    for i in range(2, n):
        for j in range(1, i):
            total += a[(i, n)] * a[(n, j)]
    if corrected:
        total += sum(a[(n, j)] for j in range(1, n))
        total += (n - 1) * (n - 2) * (n - 3) // 6
    else:
        total += sum(v for (i, j), v in a.items() if i > j)
        total += n * (n - 1) * (n - 2) // 6
    return total


def abs_exponent(a: dict[tuple[int, int], int], n: int, convention: str = "corrected") -> int:
    if convention not in ("corrected", "literal"):
        raise ValueError("convention must be 'corrected' or 'literal'")
    return _abs_recursive(a, n, convention == "corrected")


def _gm_algebra(n: int) -> AlgebraDescriptor:
    """Exterior algebra on the odd abelian lower block: one odd generator
    per off-diagonal pair, ordered row-major."""
    from .polynomials import Generator

    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                gens.append(Generator("gm", od(i), ev(j), 1, f"E[{i}',{j}]"))
    return AlgebraDescriptor(f"E(g-)[{n}]", gens)


def yminus_expansion(n: int) -> dict:
    """Expand the product over pairs i<j of (E[i',j] - E[j',i]) inside the
    exterior algebra on the symbols, and compare with the signed sum over
    the admissible 0/1 matrices under both sign conventions.

    Returns the product expansion, both sums, and the per-matrix diffs.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    algebra = _gm_algebra(n)

    def sym(i: int, j: int) -> Polynomial:
        return algebra.gen(algebra.index("gm", od(i), ev(j)))

    product = algebra.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            product = product * (sym(i, j) - sym(j, i))

    def matrix_monomial(a: dict[tuple[int, int], int]) -> Polynomial:
        term = algebra.one()
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and a[(i, j)]:
                    term = term * sym(i, j)
        return term

    sums = {}
    diffs = {}
    for convention in ("literal", "corrected"):
        total = algebra.zero()
        for a in t1_matrices(n):
            sign = (-1) ** abs_exponent(a, n, convention)
            total = total + matrix_monomial(a).scale(sign)
        sums[convention] = total
        diffs[convention] = product - total
    return {
        "product": product,
        "sum_literal": sums["literal"],
        "sum_corrected": sums["corrected"],
        "diff_literal": diffs["literal"],
        "diff_corrected": diffs["corrected"],
        "term_count": len(product.terms),
    }
