"""Free supercommutative polynomial algebras with declared generator parities.

Monomials are sorted tuples of generator indices into an algebra descriptor;
the Koszul sign produced by sorting is absorbed into the coefficient, and odd
generators square to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .alphabet import IndexRange, SuperIndex

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """A single algebra generator: a symbol family tag, its index pair, and
    the parity it carries inside the algebra."""

    family: str
    row: SuperIndex
    col: SuperIndex
    parity: int
    label: str

    def __str__(self) -> str:
        return self.label


class AlgebraDescriptor:
    """Ordered list of generators plus lookup tables.

    The generator order (by family tag, then row, then column) fixes the
    monomial normal form.
    """

    def __init__(self, name: str, generators: Sequence[Generator]):
        self.name = name
        self.generators = tuple(generators)
        self.parities = tuple(g.parity for g in self.generators)
        self._lookup: dict[tuple[str, SuperIndex, SuperIndex], int] = {
            (g.family, g.row, g.col): i for i, g in enumerate(self.generators)
        }

    def __len__(self) -> int:
        return len(self.generators)

    def index(self, family: str, row: SuperIndex, col: SuperIndex) -> int:
        return self._lookup[(family, row, col)]

    def maybe_index(self, family: str, row: SuperIndex, col: SuperIndex) -> Optional[int]:
        return self._lookup.get((family, row, col))

    def generator(self, i: int) -> Generator:
        return self.generators[i]

    def zero(self) -> "Polynomial":
        return Polynomial(self)

    def one(self) -> "Polynomial":
        return Polynomial(self, {(): Fraction(1)})

    def gen(self, i: int) -> "Polynomial":
        return Polynomial(self, {(i,): Fraction(1)})

    def monomial_str(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        parts = []
        for idx, group in itertools.groupby(mono):
            n = len(list(group))
            lbl = self.generators[idx].label
            parts.append(lbl if n == 1 else f"{lbl}^{n}")
        return "*".join(parts)


def normalize_product(mono: Sequence[int], parities: Sequence[int]) -> Optional[tuple[int, Monomial]]:
    """Sort a generator-index word into normal form.

    Returns (sign, sorted tuple) where the sign counts odd/odd swaps, or
    None when an odd generator repeats.
    """
    items = list(mono)
    sign = 1
    # insertion sort, counting crossings of odd pairs
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            if parities[items[j - 1]] and parities[items[j]]:
                sign = -sign
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b and parities[a]:
            return None
    return sign, tuple(items)


def merge_monomials(
    left: Monomial, right: Monomial, parities: Sequence[int]
) -> Optional[tuple[int, Monomial]]:
    """Merge two normal-form monomials, tracking the Koszul sign."""
    merged: list[int] = []
    sign = 1
    i = j = 0
    odd_left_remaining = sum(1 for g in left if parities[g])
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            if parities[left[i]]:
                odd_left_remaining -= 1
            merged.append(left[i])
            i += 1
        else:
            if parities[right[j]] and odd_left_remaining % 2:
                sign = -sign
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    for a, b in zip(merged, merged[1:]):
        if a == b and parities[a]:
            return None
    return sign, tuple(merged)


class Polynomial:
    """Sparse exact-rational element of a free supercommutative algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraDescriptor, terms: dict[Monomial, Fraction] | None = None):
        self.algebra = algebra
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = Fraction(coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def copy(self) -> "Polynomial":
        return Polynomial(self.algebra, dict(self.terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if other.algebra is not self.algebra:
            raise ValueError("mixed algebras")
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, Fraction(0)) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial(self.algebra, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial(self.algebra)
        return Polynomial(self.algebra, {m: v * c for m, v in self.terms.items()})

    def add_term(self, mono: Sequence[int], coeff) -> None:
        """In-place accumulation of a not-necessarily-sorted product."""
        norm = normalize_product(mono, self.algebra.parities)
        if norm is None:
            return
        sign, key = norm
        s = self.terms.get(key, Fraction(0)) + Fraction(coeff) * sign
        if s:
            self.terms[key] = s
        else:
            self.terms.pop(key, None)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if other.algebra is not self.algebra:
            raise ValueError("mixed algebras")
        parities = self.algebra.parities
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = merge_monomials(m1, m2, parities)
                if merged is None:
                    continue
                sign, key = merged
                s = out.get(key, Fraction(0)) + c1 * c2 * sign
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.algebra, out)

    def parity(self) -> Optional[int]:
        """Parity when homogeneous, None otherwise."""
        seen = set()
        for mono in self.terms:
            seen.add(sum(self.algebra.parities[g] for g in mono) % 2)
        if not seen:
            return 0
        return seen.pop() if len(seen) == 1 else None

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def is_homogeneous_degree(self, d: int) -> bool:
        return all(len(m) == d for m in self.terms)

    def monomial_parity(self, mono: Monomial) -> int:
        return sum(self.algebra.parities[g] for g in mono) % 2

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            bits.append(f"{'+' if c > 0 else '-'} {abs(c)}*{self.algebra.monomial_str(mono)}")
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else s

    __repr__ = __str__


def power(p: Polynomial, n: int) -> Polynomial:
    out = p.algebra.one()
    for _ in range(n):
        out = out * p
    return out


# ---------------------------------------------------------------------------
# standard algebra constructions


def _pair_label(symbol: str, row: SuperIndex, col: SuperIndex) -> str:
    return f"{symbol}[{row},{col}]"


def make_mixed_algebra(
    v_range: IndexRange, u_range: IndexRange, w_range: IndexRange
) -> AlgebraDescriptor:
    """The big polynomial algebra with generators u_r x e_i ("uv" family,
    written x[r,i]) and e_i^* x w_s ("vw" family, written x*[i,s])."""
    gens: list[Generator] = []
    for r in u_range:
        for i in v_range:
            gens.append(
                Generator("uv", r, i, (r.parity + i.parity) % 2, _pair_label("x", r, i))
            )
    for i in v_range:
        for s in w_range:
            gens.append(
                Generator("vw", i, s, (i.parity + s.parity) % 2, _pair_label("x*", i, s))
            )
    d = AlgebraDescriptor(f"A[{u_range}|{v_range}|{w_range}]", gens)
    d.v_range = v_range  # type: ignore[attr-defined]
    d.u_range = u_range  # type: ignore[attr-defined]
    d.w_range = w_range  # type: ignore[attr-defined]
    return d


def make_uw_algebra(u_range: IndexRange, w_range: IndexRange) -> AlgebraDescriptor:
    """Symmetric algebra on U x W, generators z[r,s]."""
    gens = [
        Generator("zuw", r, s, (r.parity + s.parity) % 2, _pair_label("z", r, s))
        for r in u_range
        for s in w_range
    ]
    d = AlgebraDescriptor(f"S(U@W)[{u_range}|{w_range}]", gens)
    d.u_range = u_range  # type: ignore[attr-defined]
    d.w_range = w_range  # type: ignore[attr-defined]
    return d


def make_sym_square_algebra(w_range: IndexRange, twisted: bool = False) -> AlgebraDescriptor:
    """Symmetric algebra on the symmetric square of W.

    Generators q[s,t] (s <= t) with parity p(s)+p(t); odd diagonal symbols
    vanish identically and are omitted.  With `twisted` the generators pick
    up the parity shift (family "e2w", written y[s,t]), giving the exterior
    algebra on the symmetric square.
    """
    fam = "e2w" if twisted else "s2w"
    symbol = "y" if twisted else "q"
    shift = 1 if twisted else 0
    gens = []
    letters = w_range.indices()
    for a in range(len(letters)):
        for b in range(a, len(letters)):
            s, t = letters[a], letters[b]
            if a == b and s.parity:
                continue  # odd diagonal of the symmetric square is zero
            gens.append(
                Generator(fam, s, t, (s.parity + t.parity + shift) % 2, _pair_label(symbol, s, t))
            )
    d = AlgebraDescriptor(f"{'E' if twisted else 'S'}(S2W)[{w_range}]", gens)
    d.w_range = w_range  # type: ignore[attr-defined]
    d.family = fam  # type: ignore[attr-defined]
    return d


def sym_square_index(
    algebra: AlgebraDescriptor, s: SuperIndex, t: SuperIndex
) -> Optional[tuple[int, int]]:
    """Canonical generator for the symmetric-square symbol with indices
    (s, t): returns (sign, generator index) or None when the symbol is zero.

    The sign implements q[s,t] = (-1)^{p(s)p(t)} q[t,s]; it is insensitive to
    the parity twist, which only changes the symbol's algebra parity.
    """
    fam = algebra.family  # type: ignore[attr-defined]
    if s <= t:
        idx = algebra.maybe_index(fam, s, t)
        return None if idx is None else (1, idx)
    idx = algebra.maybe_index(fam, t, s)
    if idx is None:
        return None
    return ((-1) ** (s.parity * t.parity), idx)


def monomials_of_degree(
    algebra: AlgebraDescriptor, degree: int
) -> list[Monomial]:
    """All normal-form monomials of the given total degree."""
    even = [i for i, p in enumerate(algebra.parities) if p == 0]
    odd = [i for i, p in enumerate(algebra.parities) if p == 1]
    out: list[Monomial] = []
    for odd_part_size in range(min(degree, len(odd)) + 1):
        even_part_size = degree - odd_part_size
        for odd_part in itertools.combinations(odd, odd_part_size):
            for even_part in itertools.combinations_with_replacement(even, even_part_size):
                norm = normalize_product(even_part + odd_part, algebra.parities)
                assert norm is not None and norm[0] == 1
                out.append(norm[1])
    out.sort()
    return out


def multidegree(
    algebra: AlgebraDescriptor, mono: Monomial, key: Callable[[Generator], object]
) -> tuple:
    """Multiset of key values over the monomial's factors, as a sorted tuple."""
    return tuple(sorted(key(algebra.generators[g]) for g in mono))
