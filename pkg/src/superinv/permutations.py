"""Permutations, the sign cocycle on super-words, and Young symmetrizers.

Composition convention: (sigma * tau)(x) = sigma(tau(x)).  All formulas
that permute words are validated against the cocycle identity
c(I, sigma tau) = c(sigma^{-1} I, tau) c(I, sigma).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .alphabet import SuperIndex, SuperSequence, Word
from .tableaux import YoungTableau

SYMMETRIZER_TERM_CAP = 5_000_000


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0..k-1}, stored as the image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation")

    @staticmethod
    def identity(k: int) -> "Permutation":
        return Permutation(tuple(range(k)))

    @staticmethod
    def transposition(k: int, a: int, b: int) -> "Permutation":
        images = list(range(k))
        images[a], images[b] = images[b], images[a]
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def sign(self) -> int:
        inv = 0
        im = self.images
        for a in range(len(im)):
            for b in range(a + 1, len(im)):
                if im[a] > im[b]:
                    inv += 1
        return -1 if inv % 2 else 1

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Perm{self.images}"


def act_on_word(sigma: Permutation, word: Word) -> Word:
    """(sigma I)_a = I_{sigma^{-1}(a)}: the letter at position a moves to
    position sigma(a)."""
    if sigma.degree != len(word):
        raise ValueError("length mismatch")
    inv = sigma.inverse()
    return tuple(word[inv(a)] for a in range(len(word)))


def act_on_sequence(sigma: Permutation, seq: SuperSequence) -> SuperSequence:
    """Range-aware form of the word action."""
    return SuperSequence(act_on_word(sigma, seq.items), seq.range)


def cocycle(word: Sequence[SuperIndex], sigma: Permutation) -> int:
    """Sign relating the reordered supercommutative product to the original:
    the parity of the number of odd/odd inversions of sigma with respect to
    the word's parities."""
    if sigma.degree != len(word):
        raise ValueError("length mismatch")
    im = sigma.images
    pal = [word[im[a]].parity for a in range(len(word))]
    count = 0
    for a in range(len(im)):
        if not pal[a]:
            continue
        for b in range(a + 1, len(im)):
            if pal[b] and im[a] > im[b]:
                count += 1
    return -1 if count % 2 else 1


class GroupAlgebraElement:
    """Sparse rational combination of permutations of a fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict[Permutation, Fraction] | None = None):
        self.degree = degree
        self.terms: dict[Permutation, Fraction] = {}
        if terms:
            for perm, coeff in terms.items():
                if perm.degree != degree:
                    raise ValueError("degree mismatch")
                if coeff:
                    self.terms[perm] = Fraction(coeff)

    @staticmethod
    def unit(degree: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(degree, {Permutation.identity(degree): Fraction(1)})

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = dict(self.terms)
        for perm, coeff in other.terms.items():
            s = out.get(perm, Fraction(0)) + coeff
            if s:
                out[perm] = s
            else:
                out.pop(perm, None)
        return GroupAlgebraElement(self.degree, out)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(
            self.degree, {perm: coeff * c for perm, coeff in self.terms.items()}
        )

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        # convolve on raw image tuples; Permutation objects are rebuilt once
        out: dict[tuple[int, ...], Fraction] = {}
        rng = range(self.degree)
        left = [(p.images, c) for p, c in self.terms.items()]
        right = [(p.images, c) for p, c in other.terms.items()]
        for im1, c1 in left:
            for im2, c2 in right:
                prod = tuple(im1[im2[x]] for x in rng)
                s = out.get(prod, Fraction(0)) + c1 * c2
                if s:
                    out[prod] = s
                else:
                    out.pop(prod, None)
        return GroupAlgebraElement(
            self.degree, {Permutation(im): c for im, c in out.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def apply_to_word(self, word: Word) -> dict[Word, Fraction]:
        """Action on tensor words: sigma . v_I = c(I, sigma^{-1}) v_{sigma I},
        extended linearly with like-term collection."""
        if len(word) != self.degree:
            raise ValueError("length mismatch")
        out: dict[Word, Fraction] = {}
        for perm, coeff in self.terms.items():
            sign = cocycle(word, perm.inverse())
            target = act_on_word(perm, word)
            s = out.get(target, Fraction(0)) + coeff * sign
            if s:
                out[target] = s
            else:
                out.pop(target, None)
        return out


def _block_group(blocks: Iterable[Sequence[int]], degree: int) -> list[Permutation]:
    """Direct product of symmetric groups on disjoint position blocks."""
    blocks = [list(b) for b in blocks if len(b) > 0]
    perms: list[Permutation] = []
    pools = [list(itertools.permutations(b)) for b in blocks]
    for choice in itertools.product(*pools):
        images = list(range(degree))
        for block, arranged in zip(blocks, choice):
            for src, dst in zip(block, arranged):
                images[src] = dst
        perms.append(Permutation(tuple(images)))
    perms.sort()
    return perms


def row_blocks(t: YoungTableau) -> list[list[int]]:
    """0-indexed position blocks of the rows."""
    return [[v - 1 for v in row] for row in t.rows]


def column_blocks(t: YoungTableau) -> list[list[int]]:
    return [[v - 1 for v in col] for col in t.columns()]


def row_group(t: YoungTableau) -> list[Permutation]:
    return _block_group(row_blocks(t), t.size)


def column_group(t: YoungTableau) -> list[Permutation]:
    return _block_group(column_blocks(t), t.size)


def stabilizers(t: YoungTableau) -> tuple[list[Permutation], list[Permutation]]:
    """Generating transpositions for the row and column stabilizers."""

    def gens(blocks: list[list[int]]) -> list[Permutation]:
        out = []
        for block in blocks:
            for a, b in zip(block, block[1:]):
                out.append(Permutation.transposition(t.size, a, b))
        return out

    return gens(row_blocks(t)), gens(column_blocks(t))


def young_symmetrizer(
    t: YoungTableau, variant: str = "plain", cap: int = SYMMETRIZER_TERM_CAP
) -> GroupAlgebraElement:
    """Fully expanded symmetrizer: sum of eps(tau) sigma tau over the row and
    column stabilizers ("plain"), or with the factors reversed ("tilde")."""
    if variant not in ("plain", "tilde"):
        raise ValueError("variant must be 'plain' or 'tilde'")
    rows = row_group(t)
    cols = column_group(t)
    if len(rows) * len(cols) > cap:
        raise ValueError(
            f"symmetrizer would have {len(rows) * len(cols)} terms, above the cap {cap}"
        )
    terms: dict[Permutation, Fraction] = {}
    for tau in cols:
        eps = Fraction(tau.sign())
        for sigma in rows:
            prod = sigma * tau if variant == "plain" else tau * sigma
            s = terms.get(prod, Fraction(0)) + eps
            if s:
                terms[prod] = s
            else:
                terms.pop(prod, None)
    return GroupAlgebraElement(t.size, terms)


def coset_representatives(
    big: Sequence[Permutation], small: Sequence[Permutation], side: str = "right"
) -> list[Permutation]:
    """One representative per coset of `small` in `big`; for "right" the
    cosets are H*g, for "left" they are g*H.  Representatives are the
    lexicographically smallest members, listed in that order."""
    big_set = set(big)
    small_list = list(small)
    for h in small_list:
        if h not in big_set:
            raise ValueError("small is not contained in big")
    reps: list[Permutation] = []
    covered: set[Permutation] = set()
    for g in sorted(big_set):
        if g in covered:
            continue
        reps.append(g)
        for h in small_list:
            covered.add(h * g if side == "right" else g * h)
    if len(reps) * len(small_list) != len(big_set):
        raise ValueError("small is not a subgroup of big")
    return reps
