"""Catalog of verifiable claims about the invariant rings.

Each entry runs a batch of exact checks and returns typed records.  A
record's status is "pass" or "fail" for hard assertions; "errata" marks a
documented divergence between a quoted closed-form expression and the
constructive computation (errata never affect process exit status).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .alphabet import IndexRange, ev
from .liealgebras import (
    MatrixElement,
    act_on_polynomial,
    build_family,
    yminus_expansion,
)
from .invariants import (
    algebra_for,
    check_generation,
    relation_kernel_check,
    span_dimension,
)
from .generators import (
    gl_substitution_map,
    osp_relative_generators,
    osp_substitution_map,
    pe_substitution_map,
    scalar_products,
    sl_extra_generators,
    sl_extra_literal,
    spe_closed_form_element,
    spe_constructive_element,
    spe_ppf_literal,
    spe_ppf_polynomials,
)
from .named_polynomials import P_t, Pf_t, PPf_t, ppf_tableau
from .polynomials import make_sym_square_algebra, make_uw_algebra
from .tableaux import Partition, enumerate_partitions, enumerate_semistandard, fill_rows
from .tensors import (
    act_on_tensor,
    apply_group_algebra,
    invariant_operator,
    marked_tableau_operator,
    nabla_closed_form_report,
    nabla_construct,
    operator_setup,
    plain_word,
    sl_invariant_element,
    TensorElement,
)
from .permutations import young_symmetrizer
from .alphabet import all_words

KNOWN_CLAIMS = [
    "T2.1",
    "T2.2",
    "T3.3",
    "T3.4",
    "T3.6",
    "T3.8",
    "T4.3",
    "T4.4",
    "T4.5",
    "T5.1",
    "T5.2",
    "T6.2",
    "T6.3.1",
    "T6.3.2",
    "L7.1",
    "T7.2",
    "T7.3",
]


@dataclass
class CheckRecord:
    id: str
    claim_ref: str
    status: str
    dims: Optional[dict] = None
    witness: Optional[str] = None
    errata: Optional[dict] = None
    detail: Optional[dict] = None

    def as_dict(self) -> dict:
        out: dict = {"id": self.id, "claim_ref": self.claim_ref, "status": self.status}
        if self.dims is not None:
            out["dims"] = self.dims
        if self.witness is not None:
            out["witness"] = self.witness
        if self.errata is not None:
            out["errata"] = self.errata
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class ClaimOptions:
    family: str = "gl"
    dims: tuple[int, int] = (1, 1)
    pqkl: tuple[int, int, int, int] = (1, 1, 1, 1)
    udims: tuple[int, int] = (1, 1)
    wdims: tuple[int, int] = (1, 1)
    max_degree: int = 4
    n: int = 2
    k: int = 1
    monomial_cap: int = 20_000


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _generation_records(
    claim: str, tag: str, vdims, algebra, gens, degrees, expect: str = "equal"
) -> list[CheckRecord]:
    family = build_family(tag, IndexRange(*vdims))
    verdicts = check_generation(family, algebra, gens, degrees)
    out = []
    for v in verdicts:
        ok = v.verdict == expect
        out.append(
            CheckRecord(
                id=f"{claim}:{tag}{vdims}:deg{v.degree}",
                claim_ref=claim,
                status=_status(ok),
                dims={"oracle": v.oracle_dim, "generated": v.generated_dim},
                witness=str(v.witness) if v.witness is not None else None,
            )
        )
    return out


def run_t21(opts: ClaimOptions) -> list[CheckRecord]:
    """Scalar products generate the general-linear invariants."""
    p, q, k, l = opts.pqkl
    family = build_family("gl", IndexRange(*opts.dims))
    algebra = algebra_for(family, p, q, k, l)
    gens = [g for g in scalar_products("gl", algebra) if g]
    return _generation_records(
        "T2.1", "gl", opts.dims, algebra, gens, range(1, opts.max_degree + 1)
    )


def run_t22(opts: ClaimOptions) -> list[CheckRecord]:
    """Rectangle relations span the kernel of the scalar-product map."""
    n, m = opts.dims
    family = build_family("gl", IndexRange(*opts.dims))
    U, W = IndexRange(*opts.udims), IndexRange(*opts.wdims)
    target = algebra_for(family, W.even_count, W.odd_count, U.even_count, U.odd_count)
    source = make_uw_algebra(U, W)
    subs = gl_substitution_map(source, target)
    shape = Partition(((m + 1),) * (n + 1))
    t = fill_rows(shape)
    rels = []
    for I in enumerate_semistandard(t, U):
        for J in enumerate_semistandard(t, W):
            f = P_t(source, t, I, J)
            if f:
                rels.append(f)
    rep = relation_kernel_check(subs, rels, shape.size, monomial_cap=opts.monomial_cap)
    rid = f"T2.2:gl{opts.dims}:U{opts.udims}:W{opts.wdims}"
    return [
        CheckRecord(
            id=rid + ":substitution",
            claim_ref="T2.2",
            status=_status(rep.all_substitute_to_zero),
            detail={"relations": rep.relations_checked},
        ),
        CheckRecord(
            id=rid + ":kernel",
            claim_ref="T2.2",
            status=_status(rep.kernel_matches_span),
            dims={"oracle": rep.kernel_dim, "generated": rep.relation_span_dim},
        ),
    ]


def _tensor_invariance_records(claim: str, opts: ClaimOptions, hat: bool) -> list[CheckRecord]:
    dims = IndexRange(*opts.dims)
    sl = build_family("sl", dims)
    el = sl_invariant_element(dims, opts.k, hat=hat)
    inv = bool(el) and all(act_on_tensor(x, el).is_zero() for x in sl.basis)
    weight = MatrixElement.unit(dims, ev(1), ev(1))
    relative = bool(el) and not act_on_tensor(weight, el).is_zero()
    base = f"{claim}:dims{opts.dims}:k{opts.k}"
    return [
        CheckRecord(base + ":sl-invariant", claim, _status(inv)),
        CheckRecord(base + ":not-gl-invariant", claim, _status(relative)),
    ]


def run_t33(opts: ClaimOptions) -> list[CheckRecord]:
    """The hat-side symmetrized canonical element is a special-linear
    invariant but not a general-linear one."""
    return _tensor_invariance_records("T3.3", opts, hat=True)


def run_t34(opts: ClaimOptions) -> list[CheckRecord]:
    return _tensor_invariance_records("T3.4", opts, hat=False)


def run_t36(opts: ClaimOptions) -> list[CheckRecord]:
    """Scalar products alone must leave a gap at the extra generators'
    degree; adding both extra families closes every degree up to the bound."""
    p, q, k, l = opts.pqkl
    vdims = opts.dims
    family = build_family("sl", IndexRange(*vdims))
    algebra = algebra_for(family, p, q, k, l)
    base = [g for g in scalar_products("sl", algebra) if g]
    extra = sl_extra_generators(algebra, opts.k)
    n, m = vdims
    f_degree = n * (opts.k + m) + m * (n + opts.k)
    records = []
    verdicts = check_generation(family, algebra, base, [f_degree])
    v = verdicts[0]
    records.append(
        CheckRecord(
            id=f"T3.6:sl{vdims}:scalars-only:deg{f_degree}",
            claim_ref="T3.6",
            status=_status(v.verdict == "strict-subspace" and v.witness is not None),
            dims={"oracle": v.oracle_dim, "generated": v.generated_dim},
            witness=str(v.witness) if v.witness is not None else None,
        )
    )
    soundness = all(
        act_on_polynomial(x, f).is_zero()
        for f in extra.plus + extra.minus
        for x in family.basis
    )
    records.append(
        CheckRecord(
            id=f"T3.6:sl{vdims}:extra-family-invariance",
            claim_ref="T3.6",
            status=_status(soundness and bool(extra.plus) and bool(extra.minus)),
            detail={"plus": len(extra.plus), "minus": len(extra.minus)},
        )
    )
    records.extend(
        _generation_records(
            "T3.6",
            "sl",
            vdims,
            algebra,
            base + extra.plus + extra.minus,
            range(1, opts.max_degree + 1),
        )
    )
    # errata: the quoted sum for the minus family differs from the canonical
    # projection (the plus family agrees literally)
    literal = sl_extra_literal(algebra, opts.k)
    lit_minus_invariant = all(
        act_on_polynomial(x, f).is_zero() for f in literal.minus for x in family.basis
    )
    if not lit_minus_invariant:
        records.append(
            CheckRecord(
                id=f"T3.6:sl{vdims}:literal-minus-formula",
                claim_ref="T3.6",
                status="errata",
                errata={
                    "issue": "the quoted sign factor on the minus family fails "
                    "invariance; the canonical projection of the hat-side tensor "
                    "invariant is used instead",
                    "literal_members": len(literal.minus),
                },
            )
        )
    return records


def run_t38(opts: ClaimOptions) -> list[CheckRecord]:
    """Marked-tableau closed form versus the first-principles operator,
    under the quoted sign data and under the corrected convention that adds
    the contraction's head-parity sign."""
    dims = IndexRange(*opts.dims)
    setup = operator_setup(dims, 1)
    et = young_symmetrizer(setup.t, "plain")

    def compare(convention: str) -> tuple[bool, dict[str, str]]:
        ratios: dict[str, str] = {}
        uniform = True
        reference: Optional[Fraction] = None
        for L in all_words(dims, setup.m * (setup.n + 1)):
            w = TensorElement.from_word(dims, plain_word(L))
            direct = invariant_operator(setup, apply_group_algebra(et, w), "direct")
            marked = marked_tableau_operator(setup, L, convention)
            key = "".join(str(x) for x in L)
            if direct.is_zero() and marked.is_zero():
                continue
            if direct.is_zero() != marked.is_zero():
                ratios[key] = "zero-mismatch"
                uniform = False
                continue
            wd = next(iter(direct.terms))
            c = marked.terms.get(wd)
            if c is None or marked.scale(direct.terms[wd] / c) != direct:
                ratios[key] = "shape-mismatch"
                uniform = False
                continue
            r = direct.terms[wd] / c
            ratios[key] = str(r)
            if reference is None:
                reference = r
            elif r != reference:
                uniform = False
        return uniform and bool(ratios), ratios

    corrected_ok, corrected_ratios = compare("corrected")
    printed_ok, printed_ratios = compare("printed")
    base = f"T3.8:dims{opts.dims}"
    records = [
        CheckRecord(
            id=base + ":corrected-convention",
            claim_ref="T3.8",
            status=_status(corrected_ok),
            detail={"words_compared": len(corrected_ratios)},
        )
    ]
    if printed_ok:
        records.append(
            CheckRecord(base + ":printed-signs", "T3.8", "pass", detail={"ratios": printed_ratios})
        )
    else:
        records.append(
            CheckRecord(
                id=base + ":printed-signs",
                claim_ref="T3.8",
                status="errata",
                errata={
                    "issue": "the quoted sign data is not a single global "
                    "constant across word contents; adding the contraction's "
                    "head-parity sign makes it one; per-word ratios recorded",
                    "ratios": printed_ratios,
                },
            )
        )
    return records


def run_t43(opts: ClaimOptions) -> list[CheckRecord]:
    """Orthosymplectic scalar products: invariance, and generation of the
    even-degree (extension-invariant) part; odd-degree gaps belong to the
    relative theory."""
    family = build_family("osp", IndexRange(*opts.dims))
    p, q = opts.wdims
    algebra = algebra_for(family, p, q, 0, 0)
    gens = [g for g in scalar_products("osp", algebra) if g]
    sound = all(act_on_polynomial(x, f).is_zero() for f in gens for x in family.basis)
    records = [
        CheckRecord(
            id=f"T4.3:osp{opts.dims}:W{opts.wdims}:invariance",
            claim_ref="T4.3",
            status=_status(sound),
            detail={"generators": len(gens)},
        )
    ]
    even_degrees = [d for d in range(1, opts.max_degree + 1) if d % 2 == 0]
    records.extend(
        _generation_records("T4.3", "osp", opts.dims, algebra, gens, even_degrees)
    )
    return records


def run_t44(opts: ClaimOptions) -> list[CheckRecord]:
    """Even-Pfaffian families over even-row shapes are linearly independent."""
    W = IndexRange(*opts.wdims)
    sq = make_sym_square_algebra(W, twisted=False)
    records = []
    for size in range(2, opts.max_degree + 1, 2):
        for shape in enumerate_partitions(size):
            if any(part % 2 for part in shape.parts):
                continue
            t = fill_rows(shape)
            fam = [Pf_t(sq, t, I) for I in enumerate_semistandard(t, W)]
            rank = span_dimension(fam)
            records.append(
                CheckRecord(
                    id=f"T4.4:W{opts.wdims}:shape{shape}",
                    claim_ref="T4.4",
                    status=_status(rank == len(fam)),
                    dims={"oracle": len(fam), "generated": rank},
                )
            )
    return records


def run_t45(opts: ClaimOptions) -> list[CheckRecord]:
    """Rectangle Pfaffians generate the relation ideal of the
    orthosymplectic scalar products."""
    n, m = opts.dims
    r = m // 2
    family = build_family("osp", IndexRange(*opts.dims))
    W = IndexRange(*opts.wdims)
    target = algebra_for(family, W.even_count, W.odd_count, 0, 0)
    source = make_sym_square_algebra(W, twisted=False)
    subs = osp_substitution_map(source, target)
    shape = Partition(((2 * r + 2),) * (n + 1))
    t = fill_rows(shape)
    rels = [f for I in enumerate_semistandard(t, W) if (f := Pf_t(source, t, I))]
    # each quadratic symbol absorbs two word letters
    rep = relation_kernel_check(subs, rels, shape.size // 2, monomial_cap=opts.monomial_cap)
    rid = f"T4.5:osp{opts.dims}:W{opts.wdims}"
    return [
        CheckRecord(
            rid + ":substitution",
            "T4.5",
            _status(rep.all_substitute_to_zero),
            detail={"relations": rep.relations_checked},
        ),
        CheckRecord(
            rid + ":kernel",
            "T4.5",
            _status(rep.kernel_matches_span),
            dims={"oracle": rep.kernel_dim, "generated": rep.relation_span_dim},
        ),
    ]


def run_t51(opts: ClaimOptions) -> list[CheckRecord]:
    """The constructive relative invariant: nonzero, annihilated by the
    orthosymplectic family, not by the general linear one; the quoted
    closed-form coefficients are compared and recorded."""
    dims = IndexRange(*opts.dims)
    family = build_family("osp", dims)
    nab = nabla_construct(dims)
    invariant = bool(nab) and all(act_on_tensor(x, nab).is_zero() for x in family.basis)
    weight = MatrixElement.unit(dims, ev(1), ev(1))
    relative = bool(nab) and not act_on_tensor(weight, nab).is_zero()
    base = f"T5.1:osp{opts.dims}"
    records = [
        CheckRecord(base + ":nonzero-invariant", "T5.1", _status(invariant),
                    detail={"terms": len(nab.terms)}),
        CheckRecord(base + ":not-gl-invariant", "T5.1", _status(relative)),
    ]
    report = nabla_closed_form_report(dims)
    matches = report.get("single_global_ratio", False)
    records.append(
        CheckRecord(
            base + ":closed-form-coefficients",
            "T5.1",
            "pass" if matches else "errata",
            errata=None
            if matches
            else {
                "issue": "closed-form coefficients (undefined summation bound "
                "read as zero, exclusion set as empty) do not fit the "
                "constructive invariant",
                "report": report,
            },
        )
    )
    return records


def run_t52(opts: ClaimOptions) -> list[CheckRecord]:
    """Constructive relative generators: the shadows of the invariant tensor
    are invariant and, together with the scalar products, generate through
    the degree bound."""
    dims = IndexRange(*opts.dims)
    family = build_family("osp", dims)
    p, q = opts.wdims
    algebra = algebra_for(family, p, q, 0, 0)
    nab = nabla_construct(dims)
    relative = osp_relative_generators(algebra, nab)
    sound = all(
        act_on_polynomial(x, f).is_zero() for f in relative for x in family.basis
    )
    records = [
        CheckRecord(
            id=f"T5.2:osp{opts.dims}:W{opts.wdims}:relative-invariance",
            claim_ref="T5.2",
            status=_status(sound and bool(relative)),
            detail={"generators": len(relative)},
        )
    ]
    gens = [g for g in scalar_products("osp", algebra) if g] + relative
    records.extend(
        _generation_records(
            "T5.2", "osp", opts.dims, algebra, gens, range(1, opts.max_degree + 1)
        )
    )
    return records


def run_t62(opts: ClaimOptions) -> list[CheckRecord]:
    """Periplectic scalar products: invariance and generation."""
    family = build_family("pe", IndexRange(*opts.dims))
    p, q = opts.wdims
    algebra = algebra_for(family, p, q, 0, 0)
    gens = [g for g in scalar_products("pe", algebra) if g]
    sound = all(act_on_polynomial(x, f).is_zero() for f in gens for x in family.basis)
    records = [
        CheckRecord(
            id=f"T6.2:pe{opts.dims}:W{opts.wdims}:invariance",
            claim_ref="T6.2",
            status=_status(sound),
            detail={"generators": len(gens)},
        )
    ]
    records.extend(
        _generation_records(
            "T6.2", "pe", opts.dims, algebra, gens, range(1, opts.max_degree + 1)
        )
    )
    return records


def run_t631(opts: ClaimOptions) -> list[CheckRecord]:
    """Periplectic Pfaffian families over the smallest hook shapes are
    linearly independent."""
    W = IndexRange(*opts.wdims)
    esq = make_sym_square_algebra(W, twisted=True)
    records = []
    for alphas in [(1,), (2,)]:
        t = ppf_tableau(alphas)
        fam = [PPf_t(esq, t, I) for I in enumerate_semistandard(t, W)]
        rank = span_dimension(fam)
        records.append(
            CheckRecord(
                id=f"T6.3.1:W{opts.wdims}:shape{t.shape}",
                claim_ref="T6.3.1",
                status=_status(rank == len(fam)),
                dims={"oracle": len(fam), "generated": rank},
            )
        )
    return records


def run_t632(opts: ClaimOptions) -> list[CheckRecord]:
    """Rectangle periplectic Pfaffians generate the relation ideal."""
    n = opts.dims[0]
    family = build_family("pe", IndexRange(n, n))
    W = IndexRange(*opts.wdims)
    target = algebra_for(family, W.even_count, W.odd_count, 0, 0)
    source = make_sym_square_algebra(W, twisted=True)
    subs = pe_substitution_map(source, target)
    alphas = tuple(n + 2 - i for i in range(1, n + 2))
    t = ppf_tableau(alphas)
    rels = [f for I in enumerate_semistandard(t, W) if (f := PPf_t(source, t, I))]
    rep = relation_kernel_check(subs, rels, t.size // 2, monomial_cap=opts.monomial_cap)
    rid = f"T6.3.2:pe({n}|{n}):W{opts.wdims}"
    return [
        CheckRecord(
            rid + ":substitution",
            "T6.3.2",
            _status(rep.all_substitute_to_zero),
            detail={"relations": rep.relations_checked},
        ),
        CheckRecord(
            rid + ":kernel",
            "T6.3.2",
            _status(rep.kernel_matches_span),
            dims={"oracle": rep.kernel_dim, "generated": rep.relation_span_dim},
        ),
    ]


def run_l71(opts: ClaimOptions) -> list[CheckRecord]:
    """Expansion of the lower-block product: term count, and the signed sum
    over admissible matrices under the literal and corrected conventions."""
    n = opts.n
    rep = yminus_expansion(n)
    expected_terms = 2 ** (n * (n - 1) // 2)
    base = f"L7.1:n{n}"
    records = [
        CheckRecord(
            base + ":term-count",
            "L7.1",
            _status(rep["term_count"] == expected_terms),
            dims={"oracle": expected_terms, "generated": rep["term_count"]},
        ),
        CheckRecord(
            base + ":corrected-convention",
            "L7.1",
            _status(rep["diff_corrected"].is_zero()),
            detail={"diff_terms": len(rep["diff_corrected"].terms)},
        ),
    ]
    literal_diff = rep["diff_literal"]
    records.append(
        CheckRecord(
            base + ":literal-convention",
            "L7.1",
            "errata" if not literal_diff.is_zero() else "pass",
            errata=None
            if literal_diff.is_zero()
            else {
                "issue": "the stated recursion (zero base case, whole-matrix "
                "lower count per level, cubic constant) disagrees with the "
                "product expansion; the corrected convention (base equal to "
                "the lower entry, last-row count per level, crossing constant) "
                "matches exactly",
                "mismatched_terms": len(literal_diff.terms),
            },
        )
    )
    return records


def run_t72(opts: ClaimOptions) -> list[CheckRecord]:
    """Constructive special-periplectic tensor invariants, with the quoted
    closed-form coefficients compared under both sign conventions."""
    n, k = opts.n, opts.k
    dims = IndexRange(n, n)
    family = build_family("spe", dims)
    records = []
    for kind in ("lower", "raise"):
        w = spe_constructive_element(family, k, kind)
        inv = bool(w) and all(act_on_tensor(x, w).is_zero() for x in family.basis)
        base = f"T7.2:spe({n}|{n}):k{k}:{kind}"
        records.append(
            CheckRecord(
                base + ":constructive-invariant",
                "T7.2",
                _status(inv),
                detail={"terms": len(w.terms)},
            )
        )
        corrected = spe_closed_form_element(dims, k, kind, "corrected")
        printed = spe_closed_form_element(dims, k, kind, "printed")

        def proportional(a: TensorElement, b: TensorElement) -> bool:
            if a.is_zero() or b.is_zero():
                return a.is_zero() == b.is_zero()
            wd = next(iter(a.terms))
            c = b.terms.get(wd)
            return c is not None and b.scale(a.terms[wd] / c) == a

        corr_ok = proportional(w, corrected)
        printed_ok = proportional(w, printed)
        records.append(
            CheckRecord(
                base + ":corrected-coefficients",
                "T7.2",
                _status(corr_ok),
            )
        )
        records.append(
            CheckRecord(
                base + ":printed-coefficients",
                "T7.2",
                "pass" if printed_ok else "errata",
                errata=None
                if printed_ok
                else {
                    "issue": "the tail-dependent sign exponent does not match "
                    "the constructive element; replacing it with the plain "
                    "row-sum parity makes the coefficients exact",
                },
            )
        )
    return records


def run_t73(opts: ClaimOptions) -> list[CheckRecord]:
    """Polynomial shadows of the special-periplectic invariants are
    invariant; the level tower closes the graded gaps over the all-odd
    letter space; the quoted level-shifted sums are compared as errata."""
    n, k = opts.n, opts.k
    dims = IndexRange(n, n)
    family = build_family("spe", dims)
    p, q = opts.wdims
    algebra = algebra_for(family, p, q, 0, 0)
    records = []
    for sign_k in (1, -1):
        fam = spe_ppf_polynomials(algebra, family, k, sign_k)
        sound = all(
            act_on_polynomial(x, f).is_zero() for f in fam for x in family.basis
        )
        base = f"T7.3:spe({n}|{n}):W{opts.wdims}:k{sign_k * k:+d}"
        records.append(
            CheckRecord(
                base + ":family-invariance",
                "T7.3",
                _status(sound),
                detail={"members": len(fam)},
            )
        )
        literal = spe_ppf_literal(algebra, k, sign_k)
        lit_ok = bool(literal) and all(
            act_on_polynomial(x, f).is_zero() for f in literal for x in family.basis
        )
        if literal and not lit_ok:
            records.append(
                CheckRecord(
                    base + ":literal-formula",
                    "T7.3",
                    "errata",
                    errata={
                        "issue": "the quoted level-shifted coefficients fail "
                        "invariance; the canonical shadows of the constructive "
                        "tensors are used instead",
                        "literal_members": len(literal),
                    },
                )
            )
    # generation tower over an all-odd letter space: scalars at degree 2,
    # then one new level per even degree up to n(n+k)
    tower_w = (0, n)
    tower_alg = algebra_for(family, *tower_w, 0, 0)
    gens = [g for g in scalar_products("spe", tower_alg) if g]
    for level in range(0, k + 1):
        gens.extend(spe_ppf_polynomials(tower_alg, family, level, 1))
    degrees = list(range(2, n * (n + k) + 1, 2))
    verdicts = check_generation(family, tower_alg, gens, degrees)
    for v in verdicts:
        records.append(
            CheckRecord(
                id=f"T7.3:spe({n}|{n}):W(0, {n}):tower:deg{v.degree}",
                claim_ref="T7.3",
                status=_status(v.equal),
                dims={"oracle": v.oracle_dim, "generated": v.generated_dim},
            )
        )
    return records


CLAIM_RUNNERS: dict[str, Callable[[ClaimOptions], list[CheckRecord]]] = {
    "T2.1": run_t21,
    "T2.2": run_t22,
    "T3.3": run_t33,
    "T3.4": run_t34,
    "T3.6": run_t36,
    "T3.8": run_t38,
    "T4.3": run_t43,
    "T4.4": run_t44,
    "T4.5": run_t45,
    "T5.1": run_t51,
    "T5.2": run_t52,
    "T6.2": run_t62,
    "T6.3.1": run_t631,
    "T6.3.2": run_t632,
    "L7.1": run_l71,
    "T7.2": run_t72,
    "T7.3": run_t73,
}

CLAIM_DEFAULTS: dict[str, ClaimOptions] = {
    "T2.1": ClaimOptions(family="gl", dims=(1, 1), pqkl=(1, 1, 1, 1), max_degree=3),
    "T2.2": ClaimOptions(family="gl", dims=(1, 1), udims=(1, 1), wdims=(1, 1)),
    "T3.3": ClaimOptions(dims=(1, 1), k=1),
    "T3.4": ClaimOptions(dims=(1, 1), k=1),
    "T3.6": ClaimOptions(family="sl", dims=(1, 1), pqkl=(1, 1, 1, 1), k=1, max_degree=4),
    "T3.8": ClaimOptions(dims=(1, 1)),
    "T4.3": ClaimOptions(family="osp", dims=(1, 2), wdims=(2, 1), max_degree=4),
    "T4.4": ClaimOptions(wdims=(2, 1), max_degree=4),
    "T4.5": ClaimOptions(family="osp", dims=(1, 2), wdims=(2, 1)),
    "T5.1": ClaimOptions(family="osp", dims=(1, 2)),
    "T5.2": ClaimOptions(family="osp", dims=(1, 2), wdims=(1, 0), max_degree=4),
    "T6.2": ClaimOptions(family="pe", dims=(1, 1), wdims=(2, 1), max_degree=4),
    "T6.3.1": ClaimOptions(wdims=(2, 1)),
    "T6.3.2": ClaimOptions(family="pe", dims=(1, 1), wdims=(2, 1)),
    "L7.1": ClaimOptions(n=2),
    "T7.2": ClaimOptions(n=2, k=1),
    "T7.3": ClaimOptions(n=2, k=1, wdims=(2, 2)),
}


def run_claim(theorem_id: str, opts: Optional[ClaimOptions] = None) -> list[CheckRecord]:
    key = theorem_id.strip()
    if key.endswith("(constructive)"):
        key = key[: -len("(constructive)")]
    if key not in CLAIM_RUNNERS:
        raise KeyError(f"unknown claim id {theorem_id!r}")
    if opts is None:
        opts = CLAIM_DEFAULTS[key]
    return CLAIM_RUNNERS[key](opts)
