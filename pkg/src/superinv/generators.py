"""Generator families for the invariant rings: scalar products per algebra
family, the extra special-linear generators, the orthosymplectic relative
generators, and the special-periplectic tensor and polynomial families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .alphabet import (
    EVEN,
    IndexRange,
    SuperIndex,
    Word,
    all_words,
    ev,
    mutual_parity_count,
    od,
    parity_of_word,
)
from .liealgebras import AlgebraFamily, MatrixElement, abs_exponent
from .named_polynomials import P_t, Z_of
from .polynomials import AlgebraDescriptor, Polynomial
from .tableaux import YoungTableau, enumerate_semistandard
from .tensors import (
    TensorElement,
    act_universal_product,
    apply_group_algebra,
    dual_word,
    form_sign,
    repeated_evens,
    blocked_odds,
    split_cols_tableau,
    split_rows_tableau,
    tilde_index,
)
from .permutations import young_symmetrizer


def gl_scalar_products(algebra: AlgebraDescriptor) -> list[Polynomial]:
    """(v_r*, v_s) = sum over i of x[r,i] x*[i,s], one per (r, s)."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    u_range: IndexRange = algebra.u_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    out = []
    for r in u_range:
        for s in w_range:
            f = algebra.zero()
            for i in v_range:
                f.add_term((algebra.index("uv", r, i), algebra.index("vw", i, s)), 1)
            out.append(f)
    return out


def osp_scalar_product(
    algebra: AlgebraDescriptor, s: SuperIndex, t: SuperIndex
) -> Polynomial:
    """Anti-diagonal symmetric pairing on the even block, symplectic pairing
    on the odd block, with the sign (-1)^{p(s)} on the odd part."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    n, m = v_range.even_count, v_range.odd_count
    r = m // 2
    f = algebra.zero()
    for i in range(1, n + 1):
        f.add_term((algebra.index("vw", ev(i), s), algebra.index("vw", ev(n - i + 1), t)), 1)
    ps = (-1) ** s.parity
    for j in range(1, r + 1):
        f.add_term((algebra.index("vw", od(m - j + 1), s), algebra.index("vw", od(j), t)), ps)
        f.add_term((algebra.index("vw", od(j), s), algebra.index("vw", od(m - j + 1), t)), -ps)
    return f


def pe_scalar_product(
    algebra: AlgebraDescriptor, s: SuperIndex, t: SuperIndex
) -> Polynomial:
    """Odd-form pairing: the sign (-1)^{p(s)} rides only the summand whose
    first factor is even-indexed (the placement forced by invariance)."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    n = v_range.even_count
    f = algebra.zero()
    ps = (-1) ** s.parity
    for i in range(1, n + 1):
        f.add_term((algebra.index("vw", ev(i), s), algebra.index("vw", od(i), t)), ps)
        f.add_term((algebra.index("vw", od(i), s), algebra.index("vw", ev(i), t)), 1)
    return f


def scalar_products(tag: str, algebra: AlgebraDescriptor) -> list[Polynomial]:
    """The basic invariant family for gl, osp, or pe (sl and spe reuse their
    parent's products)."""
    if tag in ("gl", "sl"):
        return gl_scalar_products(algebra)
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    letters = w_range.indices()
    if tag in ("osp",):
        pairs = [(s, t) for a, s in enumerate(letters) for t in letters[a:]]
        return [osp_scalar_product(algebra, s, t) for s, t in pairs]
    if tag in ("pe", "spe"):
        pairs = [(s, t) for a, s in enumerate(letters) for t in letters[a:]]
        return [pe_scalar_product(algebra, s, t) for s, t in pairs]
    raise ValueError(f"no scalar products for family {tag!r}")


# ---------------------------------------------------------------------------
# substitution homomorphisms onto the scalar products


def gl_substitution_map(source: AlgebraDescriptor, target: AlgebraDescriptor):
    """z[r,s] goes to the gl scalar product (v_r*, v_s)."""
    from .invariants import SubstitutionMap

    v_range: IndexRange = target.v_range  # type: ignore[attr-defined]
    images = {}
    for idx, g in enumerate(source.generators):
        f = target.zero()
        for i in v_range:
            f.add_term((target.index("uv", g.row, i), target.index("vw", i, g.col)), 1)
        images[idx] = f
    return SubstitutionMap(source, target, images)


def osp_substitution_map(source: AlgebraDescriptor, target: AlgebraDescriptor):
    """Symmetric-square symbol q[s,t] goes to the orthosymplectic scalar
    product (v_s, v_t)."""
    from .invariants import SubstitutionMap

    images = {
        idx: osp_scalar_product(target, g.row, g.col)
        for idx, g in enumerate(source.generators)
    }
    return SubstitutionMap(source, target, images)


def pe_substitution_map(source: AlgebraDescriptor, target: AlgebraDescriptor):
    """Twisted symbol y[s,t] goes to the periplectic scalar product."""
    from .invariants import SubstitutionMap

    images = {
        idx: pe_scalar_product(target, g.row, g.col)
        for idx, g in enumerate(source.generators)
    }
    return SubstitutionMap(source, target, images)


# ---------------------------------------------------------------------------
# canonical projections from tensor invariants to polynomial invariants


def mixed_shadow(
    algebra: AlgebraDescriptor,
    element: TensorElement,
    I: Word,
    J: Word,
) -> Polynomial:
    """Image of an element of V-block x V*-block under the canonical algebra
    projection, paired against a u-word on the covariant block and a w-word
    on the dual block.  Each tensor word contributes
    Z_uv(I, plain letters) * Z_vw(dual letters, J)."""
    out = algebra.zero()
    for w, coeff in element.terms.items():
        plain = tuple(i for i, d in w if not d)
        dual = tuple(i for i, d in w if d)
        if len(plain) != len(I) or len(dual) != len(J):
            raise ValueError("pairing lengths do not match the word blocks")
        left = Z_of(algebra, I, plain, family="uv")
        right = Z_of(algebra, dual, J, family="vw")
        out = out + (left * right).scale(coeff)
    return out


def mixed_shadow_hat(
    algebra: AlgebraDescriptor,
    element: TensorElement,
    I: Word,
    J: Word,
) -> Polynomial:
    """Same projection for words with the dual block first: moving the
    covariant block across the dual block costs the Koszul sign of the two
    block parities."""
    out = algebra.zero()
    for w, coeff in element.terms.items():
        plain = tuple(i for i, d in w if not d)
        dual = tuple(i for i, d in w if d)
        if len(plain) != len(I) or len(dual) != len(J):
            raise ValueError("pairing lengths do not match the word blocks")
        sign = (-1) ** (parity_of_word(plain) * parity_of_word(dual))
        left = Z_of(algebra, I, plain, family="uv")
        right = Z_of(algebra, dual, J, family="vw")
        out = out + (left * right).scale(coeff * sign)
    return out


def dual_shadow(algebra: AlgebraDescriptor, element: TensorElement, J: Word) -> Polynomial:
    """Projection of a purely dual tensor against a w-word."""
    out = algebra.zero()
    for w, coeff in element.terms.items():
        letters = tuple(i for i, d in w)
        if any(not d for _, d in w):
            raise ValueError("element must be purely dual")
        out = out + Z_of(algebra, letters, J, family="vw").scale(coeff)
    return out


# ---------------------------------------------------------------------------
# special linear: the F families


@dataclass
class SlExtraGenerators:
    """Both extra families at level k, with the tableaux they came from."""

    k: int
    s: YoungTableau
    t: YoungTableau
    plus: list[Polynomial]
    minus: list[Polynomial]


def sl_extra_generators(algebra: AlgebraDescriptor, k: int) -> SlExtraGenerators:
    """The degree-raising generators of the special-linear invariant ring:
    the canonical polynomial images of the two symmetrized tensor
    invariants, paired against semistandard u- and w-words.

    The plus family pairs the plain-block element (covariant block first)
    with column-split u-words and row-split w-words; the minus family pairs
    the hat element with the tableau roles swapped, as the block sizes
    force.
    """
    from .tensors import sl_invariant_element

    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    u_range: IndexRange = algebra.u_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    n, m = v_range.even_count, v_range.odd_count
    s = split_cols_tableau(n, m, k)  # n rows, k+m columns
    t = split_rows_tableau(n, m, k)  # m columns, n+k rows

    plus: list[Polynomial] = []
    el_plus = sl_invariant_element(v_range, k, hat=False)
    for I in enumerate_semistandard(s, u_range):
        for J in enumerate_semistandard(t, w_range):
            f = mixed_shadow(algebra, el_plus, I, J)
            if f:
                plus.append(f)

    minus: list[Polynomial] = []
    el_minus = sl_invariant_element(v_range, k, hat=True)
    for Ihat in enumerate_semistandard(t, u_range):
        for Jhat in enumerate_semistandard(s, w_range):
            f = mixed_shadow_hat(algebra, el_minus, Ihat, Jhat)
            if f:
                minus.append(f)
    return SlExtraGenerators(k, s, t, plus, minus)


def sl_extra_literal(algebra: AlgebraDescriptor, k: int) -> SlExtraGenerators:
    """Literal transcription of the quoted F sums (tilde-symmetrized factor
    pairs against the auxiliary middle words); kept for the errata diff
    against the canonical construction."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    u_range: IndexRange = algebra.u_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    n, m = v_range.even_count, v_range.odd_count
    s = split_cols_tableau(n, m, k)
    t = split_rows_tableau(n, m, k)
    Ik = repeated_evens(n, k)
    Jk = blocked_odds(m, k)
    words_L = list(all_words(v_range, n * m))

    plus: list[Polynomial] = []
    for I in enumerate_semistandard(s, u_range):
        for J in enumerate_semistandard(t, w_range):
            f = algebra.zero()
            for L in words_L:
                sign = (-1) ** mutual_parity_count(L)
                left = P_t(algebra, s, I, Ik + L, variant="tilde", family="uv")
                right = P_t(algebra, t, L + Jk, J, variant="tilde", family="vw")
                f = f + (left * right).scale(sign)
            if f:
                plus.append(f)

    minus: list[Polynomial] = []
    for Ihat in enumerate_semistandard(t, u_range):
        p_ihat = parity_of_word(Ihat)
        for Jhat in enumerate_semistandard(s, w_range):
            p_jhat = parity_of_word(Jhat)
            f = algebra.zero()
            for L in words_L:
                expo = mutual_parity_count(L) + parity_of_word(L) * (p_ihat + p_jhat)
                left = P_t(algebra, s, Ik + L, Jhat, variant="plain", family="vw")
                right = P_t(algebra, t, Ihat, L + Jk, variant="plain", family="uv")
                f = f + (left * right).scale((-1) ** expo)
            if f:
                minus.append(f)
    return SlExtraGenerators(k, s, t, plus, minus)


# ---------------------------------------------------------------------------
# orthosymplectic: the relative invariants R(J)


def polynomial_shadow_dual(
    algebra: AlgebraDescriptor, element: TensorElement, J: Word
) -> Polynomial:
    """Image of a covariant tensor under the form isomorphism followed by
    the canonical projection against the word J of w-letters: each word
    v_M contributes its coefficient times Z(M~, J) with the form signs."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    out = algebra.zero()
    for w, coeff in element.terms.items():
        if any(d for _, d in w):
            raise ValueError("element must be covariant")
        letters = tuple(i for i, _ in w)
        sign = 1
        dual_letters = []
        for i in letters:
            sign *= form_sign(v_range, i)
            dual_letters.append(tilde_index(v_range, i))
        out = out + Z_of(algebra, tuple(dual_letters), J, family="vw").scale(coeff * sign)
    return out


def osp_relative_generators(
    algebra: AlgebraDescriptor, nabla: TensorElement
) -> list[Polynomial]:
    """R(J): the polynomial shadows of the constructive invariant, one per
    semistandard sequence J of w-letters over the column-split tableau."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    n, m = v_range.even_count, v_range.odd_count
    s = split_cols_tableau(n, m, 1)
    out = []
    for J in enumerate_semistandard(s, w_range):
        f = polynomial_shadow_dual(algebra, nabla, J)
        if f:
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# special periplectic: the T2 tableaux and their tensor/polynomial families


@dataclass(frozen=True)
class T2Datum:
    """One admissible square tableau: the sequence read down the columns,
    the 0/1 parity matrix, and the derived combinatorial weights."""

    word: Word
    matrix: tuple[tuple[int, ...], ...]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.matrix]


def t2_tableaux(n: int) -> list[T2Datum]:
    """Square tableaux with conjugate mirror entries, odd diagonal, and the
    (i, j) entry drawn from {i even, j odd}; enumerated off-diagonal pair by
    pair."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        grid: dict[tuple[int, int], SuperIndex] = {}
        for i in range(1, n + 1):
            grid[(i, i)] = od(i)
        for (i, j), pick in zip(pairs, choice):
            if pick:
                grid[(i, j)] = od(j)
                grid[(j, i)] = ev(j)
            else:
                grid[(i, j)] = ev(i)
                grid[(j, i)] = od(i)
        word = tuple(grid[(i, j)] for j in range(1, n + 1) for i in range(1, n + 1))
        matrix = tuple(
            tuple(grid[(i, j)].parity for j in range(1, n + 1)) for i in range(1, n + 1)
        )
        out.append(T2Datum(word, matrix))
    return out


def t2_filter_oracle(n: int) -> int:
    """Constraint-filter count over all words of the square length; used to
    validate the pairwise enumeration."""
    v_range = IndexRange(n, n)
    count = 0
    for w in all_words(v_range, n * n):
        grid = {}
        ok = True
        pos = 0
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                grid[(i, j)] = w[pos]
                pos += 1
        for i in range(1, n + 1):
            if grid[(i, i)] != od(i):
                ok = False
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                if grid[(i, j)] not in (ev(i), od(j)):
                    ok = False
                if grid[(j, i)] != grid[(i, j)].conjugate():
                    ok = False
        if ok:
            count += 1
    return count


def _t2_weights(datum: T2Datum, n: int, k: int) -> tuple[int, int, Fraction]:
    """(m(L), eps exponent, multiplicity m_k(L)) for one tableau."""
    a = {
        (i, j): datum.matrix[i - 1][j - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    }
    m_L = sum(
        datum.matrix[i - 1][j - 1]
        for i in range(2, n + 1, 2)
        for j in range(1, n + 1)
    )
    n_L = sum(1 for x in datum.word if x.parity == EVEN)
    abs_a = abs_exponent(a, n, "corrected")
    eps_exp = abs_a + n_L
    row_sums = [sum(datum.matrix[i - 1]) for i in range(1, n + 1)]
    mult = Fraction(factorial(n + k) ** n)
    for li in row_sums:
        mult /= factorial(n + k - li)
    return m_L, eps_exp, mult


def xplus_factors(dims: IndexRange) -> list[MatrixElement]:
    """The raising-block generators E[i,j'] + E[j,i'] over pairs i <= j."""
    n = dims.even_count
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            f = MatrixElement.unit(dims, ev(i), od(j))
            if i != j:
                f = f + MatrixElement.unit(dims, ev(j), od(i))
            out.append(f)
    return out


def spe_closed_form_element(
    dims: IndexRange, k: int, kind: str = "lower", convention: str = "printed"
) -> TensorElement:
    """The displayed sums over the square tableaux.

    kind "lower": coefficient (-1)^{k m(L)} eps(L) m_k(L) on v*_L x v*_{J_k},
    symmetrized by the row-split rectangle.  kind "raise": coefficient
    eps(L) m_0(L) with the even run in front, symmetrized by the column-split
    rectangle.  With convention "corrected" the tail-dependent sign
    (-1)^{k m(L)} is replaced by (-1)^{m(L)}, which is what the constructive
    route actually produces.
    """
    n = dims.even_count
    if kind == "lower":
        t = split_rows_tableau(n, n, k)
        words = [datum.word + blocked_odds(n, k) for datum in t2_tableaux(n)]
    elif kind == "raise":
        t = split_cols_tableau(n, n, k)
        words = [repeated_evens(n, k) + datum.word for datum in t2_tableaux(n)]
    else:
        raise ValueError("kind must be 'lower' or 'raise'")
    acc: Optional[TensorElement] = None
    for datum, w_letters in zip(t2_tableaux(n), words):
        m_L, eps_exp, mult = _t2_weights(datum, n, k if kind == "lower" else 0)
        if kind == "lower":
            m_factor = k * m_L if convention == "printed" else m_L
            coeff = Fraction((-1) ** (m_factor + eps_exp)) * mult
        else:
            m_factor = 0 if convention == "printed" else m_L
            coeff = Fraction((-1) ** (m_factor + eps_exp)) * mult
        term = TensorElement.from_word(dims, dual_word(w_letters), coeff)
        acc = term if acc is None else acc + term
    assert acc is not None
    e_t = young_symmetrizer(t, "plain")
    return apply_group_algebra(e_t, acc)


def spe_constructive_element(
    family: AlgebraFamily, k: int, kind: str = "lower"
) -> TensorElement:
    """The two constructive routes: the product of the lower-block
    generators applied to the symmetrized all-odd word with an odd tail, or
    the product of the raising-block generators applied to the symmetrized
    all-even word with an even head."""
    from .liealgebras import yminus_factors

    dims = family.dims
    n = dims.even_count
    if kind == "lower":
        t = split_rows_tableau(n, n, k)
        w = TensorElement.from_word(dims, dual_word(blocked_odds(n, n) + blocked_odds(n, k)))
        factors = yminus_factors(dims)
    elif kind == "raise":
        t = split_cols_tableau(n, n, k)
        w = TensorElement.from_word(dims, dual_word(repeated_evens(n, k) + repeated_evens(n, n)))
        factors = xplus_factors(dims)
    else:
        raise ValueError("kind must be 'lower' or 'raise'")
    e_t = young_symmetrizer(t, "plain")
    return act_universal_product(factors, apply_group_algebra(e_t, w))


def spe_ppf_polynomials(
    algebra: AlgebraDescriptor, family: AlgebraFamily, k: int, sign_k: int
) -> list[Polynomial]:
    """Polynomial shadows of the constructive invariant tensors, one per
    semistandard w-word: level +k (k >= 0) pairs the lower-route tensor of
    degree n(n+k) against row-split-semistandard words, level -k pairs the
    raise-route tensor of degree n(n+k+1) against column-split ones.

    Level +0 is the shadow of the bare lower element; the quoted generator
    list starts at level one and misses it, but the oracle requires it (the
    first relative invariants appear at degree n^2).
    """
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    n = v_range.even_count
    if sign_k > 0:
        t = split_rows_tableau(n, n, k)
        element = spe_constructive_element(family, k, "lower")
    else:
        if k < 1:
            raise ValueError("negative levels start at one")
        t = split_cols_tableau(n, n, k + 1)
        element = spe_constructive_element(family, k + 1, "raise")
    out: list[Polynomial] = []
    for J in enumerate_semistandard(t, w_range):
        f = dual_shadow(algebra, element, J)
        if f:
            out.append(f)
    return out


def spe_tensor_invariants(n: int, k: int) -> list[TensorElement]:
    """Both constructive tensor invariants at level k for the (n|n) family,
    re-verified by direct action on construction."""
    family = build_spe(n)
    out = []
    for kind in ("lower", "raise"):
        element = spe_constructive_element(family, k, kind)
        for x in family.basis:
            from .tensors import act_on_tensor

            if not act_on_tensor(x, element).is_zero():
                raise AssertionError("constructive element failed invariance")
        out.append(element)
    return out


def build_spe(n: int) -> AlgebraFamily:
    from .liealgebras import build_family

    return build_family("spe", IndexRange(n, n))


def spe_ppf_literal(
    algebra: AlgebraDescriptor, k: int, sign_k: int
) -> list[Polynomial]:
    """Literal transcription of the quoted level-k sums (printed signs and
    the level shift to k-1 weights); kept for the errata diff."""
    v_range: IndexRange = algebra.v_range  # type: ignore[attr-defined]
    w_range: IndexRange = algebra.w_range  # type: ignore[attr-defined]
    n = v_range.even_count
    out: list[Polynomial] = []
    if sign_k > 0:
        t = split_rows_tableau(n, n, k)
        tail = blocked_odds(n, k)
        for J in enumerate_semistandard(t, w_range):
            f = algebra.zero()
            for datum in t2_tableaux(n):
                m_L, eps_exp, mult = _t2_weights(datum, n, k - 1)
                coeff = Fraction((-1) ** ((k - 1) * m_L + eps_exp)) * mult
                f = f + P_t(
                    algebra, t, datum.word + tail, J, variant="plain", family="vw"
                ).scale(coeff)
            if f:
                out.append(f)
    else:
        t = split_rows_tableau(n, n, k + 1)
        tail = repeated_evens(n, k + 1)
        for J in enumerate_semistandard(t, w_range):
            f = algebra.zero()
            for datum in t2_tableaux(n):
                _, eps_exp, mult = _t2_weights(datum, n, 0)
                coeff = Fraction((-1) ** eps_exp) * mult
                f = f + P_t(
                    algebra, t, datum.word + tail, J, variant="plain", family="vw"
                ).scale(coeff)
            if f:
                out.append(f)
    return out
