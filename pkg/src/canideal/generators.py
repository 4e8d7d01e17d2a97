"""Construction of the generating families.

Binomials pair every monomial of a multidegree class with the class minimum;
the per-fibre trinomial-type families attach, to each anchor point, shifted
class minima weighted by the coefficient tables of powers of a(x).  The
relative family's lam-power coefficients are produced by exact cyclotomic
division and a reduction map back onto the special-fibre family is provided.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralCoefficient, NotDivisible
from .exactalg import (
    CycloElement,
    PrimeFieldElement,
    SparsePoly,
    divide_by_lambda_power,
    reduce_mod_lambda,
    ring_one_like,
)
from .family import FamilyParams, a_power_coefficients, deformation_symbols
from .indexsets import (
    MinkowskiPoint,
    anchor_set,
    build_index_set,
    minimal_monomial,
    minkowski_sum_brute,
    monomials_at,
)
from .termorder import TIE_BREAK_DEFAULT, Monomial, compare, format_monomial

GENERIC = "generic"
SPECIAL = "special"
RELATIVE = "relative"
ANY_FIBRE = "any"

BINOMIAL = "binomial"
TRINOMIAL = "trinomial"


@dataclass(frozen=True)
class GeneratorPoly:
    """A homogeneous degree-2 polynomial in the indexed variables.

    ``terms`` maps monomials to coefficient polynomials in the deformation
    symbols; the coefficient ring depends on the fibre (cyclotomic for the
    generic and relative fibres, prime field for the special fibre, plain
    integers for the fibre-agnostic binomials).
    """

    fibre: str
    provenance: str
    anchor: MinkowskiPoint | None
    terms: tuple[tuple[SparsePoly, Monomial], ...]
    tie_break: str

    def degree(self) -> int:
        return self.terms[0][1].degree if self.terms else 0

    def is_homogeneous_degree2(self) -> bool:
        return bool(self.terms) and all(m.degree == 2 for _, m in self.terms)

    def monomials(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def __repr__(self):
        head = f"{self.provenance}/{self.fibre}"
        body = " + ".join(f"({c!r})*{format_monomial(m)}" for c, m in self.terms)
        return f"<{head}: {body}>"


def _sorted_terms(term_map: dict[Monomial, SparsePoly], tie_break: str):
    """Order-descending tuple of (coefficient, monomial), zero coefficients dropped."""
    monos = [m for m, c in term_map.items() if c]
    monos.sort(key=functools.cmp_to_key(lambda a, b: compare(a, b, tie_break)), reverse=True)
    return tuple((term_map[m], m) for m in monos)


def binomial_generators(
    params: FamilyParams,
    fibre: str = ANY_FIBRE,
    all_pairs: bool = False,
    tie_break: str = TIE_BREAK_DEFAULT,
) -> list[GeneratorPoly]:
    """Binomials m1 - m2 for monomials of equal multidegree.

    Default is the spanning subset pairing every non-minimal monomial of a
    class with the class minimum, so the count over all classes is
    g(g+1)/2 - |Minkowski sum|.  With all_pairs=True the full family of all
    unordered pairs within each class is emitted instead.
    """
    syms = deformation_symbols(params)
    one = SparsePoly.constant(syms, 1)
    out = []
    for pt in minkowski_sum_brute(build_index_set(params)):
        group = monomials_at(params, pt, tie_break)
        if all_pairs:
            pairs = [
                (group[j], group[i]) for i in range(len(group)) for j in range(i + 1, len(group))
            ]
        else:
            pairs = [(m, group[0]) for m in group[1:]]
        for big, small in pairs:
            out.append(
                GeneratorPoly(
                    fibre=fibre,
                    provenance=BINOMIAL,
                    anchor=pt,
                    terms=_sorted_terms({big: one, small: -one}, tie_break),
                    tie_break=tie_break,
                )
            )
    return out


def _trinomial_slots(params: FamilyParams, fibre: str) -> list[tuple[int, int, SparsePoly]]:
    """Per-anchor slot layout of one trinomial-type generator.

    Each slot is (rho-shift, T-shift, coefficient polynomial); the implicit
    leading slot (0, 0, 1) is not listed.
    """
    p, q, ell = params.p, params.q, params.ell
    syms = deformation_symbols(params)
    if fibre == GENERIC:
        ring_int = lambda n: CycloElement.from_int(p, n)
        lam_p = SparsePoly.constant(syms, CycloElement.lam(p) ** p)
        slots = [(ell, p, -lam_p)]
        for j, poly in sorted(a_power_coefficients(params, 0).items()):
            slots.append((j, p, -poly.map_coefficients(ring_int)))
        return slots
    if fibre == SPECIAL:
        ring_int = lambda n: PrimeFieldElement(n, p)
        one = SparsePoly.constant(syms, ring_int(1))
        slots = [(ell, p, -one)]
        for j, poly in sorted(a_power_coefficients(params, 1).items()):
            slots.append((j, p - 1, -poly.map_coefficients(ring_int)))
        return slots
    if fibre == RELATIVE:
        ring_int = lambda n: CycloElement.from_int(p, n)
        one = SparsePoly.constant(syms, ring_int(1))
        slots = [(ell, p, -one)]
        for i in range(1, p):
            lam_coeff = relative_lambda_coefficient(params, i)
            for j, poly in sorted(a_power_coefficients(params, i).items()):
                slots.append((j, p - i, poly.map_coefficients(ring_int).scale(lam_coeff)))
        return slots
    raise ValueError(f"unknown fibre {fibre!r}")


def _anchored_generator(
    params: FamilyParams, fibre: str, pt: MinkowskiPoint, tie_break: str
) -> GeneratorPoly:
    syms = deformation_symbols(params)
    sample = next(iter(_trinomial_slots(params, fibre)[0][2].terms.values()))
    one = SparsePoly.constant(syms, ring_one_like(sample))

    def sigma(rho: int, T: int) -> Monomial:
        return minimal_monomial(params, MinkowskiPoint(rho, T), tie_break)

    terms: dict[Monomial, SparsePoly] = {sigma(pt.rho, pt.T): one}
    for dr, dt, coeff in _trinomial_slots(params, fibre):
        _accumulate(terms, sigma(pt.rho + dr, pt.T + dt), coeff)
    gen = GeneratorPoly(
        fibre=fibre,
        provenance=TRINOMIAL,
        anchor=pt,
        terms=_sorted_terms(terms, tie_break),
        tie_break=tie_break,
    )
    assert gen.terms[0][1] == sigma(pt.rho, pt.T)
    return gen


def generic_generators(params: FamilyParams, tie_break: str = TIE_BREAK_DEFAULT) -> list[GeneratorPoly]:
    """One generator per i = 0 anchor: class minimum minus lam^p times the
    (ell, p)-shifted minimum minus the a(x)^p-weighted (j, p)-shifted minima."""
    return [_anchored_generator(params, GENERIC, pt, tie_break) for pt in anchor_set(params, 0)]


def special_generators(
    params: FamilyParams,
    anchors=None,
    tie_break: str = TIE_BREAK_DEFAULT,
) -> list[GeneratorPoly]:
    """One generator per i = 1 anchor (or per supplied anchor), with the
    a(x)^(p-1) coefficient table reduced into the prime field."""
    if anchors is None:
        anchors = anchor_set(params, 1)
    return [_anchored_generator(params, SPECIAL, pt, tie_break) for pt in anchors]


def relative_lambda_coefficient(params: FamilyParams, i: int) -> CycloElement:
    """lam^(i-p) * binom(p, i), computed by exact cyclotomic division.

    Raises NonIntegralCoefficient if the division fails, which would mean the
    lam-adic congruences underlying the construction are wrong.
    """
    p = params.p
    try:
        return divide_by_lambda_power(CycloElement.from_int(p, math.comb(p, i)), p - i)
    except NotDivisible as exc:
        raise NonIntegralCoefficient(f"lam^{i - p} * binom({p},{i}) is not integral") from exc


def relative_generators(params: FamilyParams, tie_break: str = TIE_BREAK_DEFAULT) -> list[GeneratorPoly]:
    """One generator per i = 0 anchor over the cyclotomic ring.

    Terms: class minimum, minus the (ell, p)-shifted minimum, plus
    lam^(i-p)*binom(p,i)*c_{j,p-i} times the (j, p-i)-shifted minima for
    1 <= i <= p-1.
    """
    return [_anchored_generator(params, RELATIVE, pt, tie_break) for pt in anchor_set(params, 0)]


def trinomial_variants(params: FamilyParams, fibre: str, pt: MinkowskiPoint, tie_break: str = TIE_BREAK_DEFAULT):
    """Iterate over ALL admissible representatives of the generator at one anchor.

    The emitted families pick the class minimum in every slot; any other
    choice of a monomial with the same multidegree gives an equally valid
    generator.  Lazily yields every combination (testing hook).
    """
    slots = _trinomial_slots(params, fibre)
    choice_lists = [monomials_at(params, pt, tie_break)]
    for dr, dt, _ in slots:
        choice_lists.append(monomials_at(params, MinkowskiPoint(pt.rho + dr, pt.T + dt), tie_break))
    syms = deformation_symbols(params)
    sample = next(iter(slots[0][2].terms.values()))
    one = SparsePoly.constant(syms, ring_one_like(sample))
    for picks in itertools.product(*choice_lists):
        terms: dict[Monomial, SparsePoly] = {picks[0]: one}
        for (_, _, coeff), mono in zip(slots, picks[1:]):
            _accumulate(terms, mono, coeff)
        yield GeneratorPoly(
            fibre=fibre,
            provenance=TRINOMIAL,
            anchor=pt,
            terms=_sorted_terms(terms, tie_break),
            tie_break=tie_break,
        )


def _accumulate(terms: dict, mono: Monomial, coeff: SparsePoly):
    cur = terms.get(mono)
    terms[mono] = coeff if cur is None else cur + coeff


def reduce_relative_to_special(params: FamilyParams, gens) -> list[GeneratorPoly]:
    """Reduce every cyclotomic coefficient into the prime field.

    Only the i = 1 block survives; the output must coincide term-for-term
    with the special-fibre family built on the same anchors, and this is
    asserted.
    """
    reduced = []
    for gen in gens:
        if gen.fibre != RELATIVE:
            raise ValueError("reduction applies to relative generators")
        term_map: dict[Monomial, SparsePoly] = {}
        for coeff, mono in gen.terms:
            for c in coeff.terms.values():
                if not c.is_integral():
                    raise NonIntegralCoefficient(f"non-integral coefficient in {gen!r}")
            term_map[mono] = coeff.map_coefficients(reduce_mod_lambda)
        reduced.append(
            GeneratorPoly(
                fibre=SPECIAL,
                provenance=TRINOMIAL,
                anchor=gen.anchor,
                terms=_sorted_terms(term_map, gen.tie_break),
                tie_break=gen.tie_break,
            )
        )
    anchors = [g.anchor for g in gens]
    expected = special_generators(params, anchors=anchors, tie_break=gens[0].tie_break if gens else TIE_BREAK_DEFAULT)
    if [g.terms for g in reduced] != [g.terms for g in expected]:
        raise AssertionError("reduction of the relative family does not match the special family")
    return reduced


def corrupt_generator(gen: GeneratorPoly, bump: int = 1) -> GeneratorPoly:
    """Negative-control hook: add a constant to one non-leading coefficient."""
    coeff, mono = gen.terms[-1]
    one = ring_one_like(next(iter(coeff.terms.values()))) if coeff.terms else 1
    bumped = coeff + SparsePoly.constant(coeff.vars, one * bump)
    terms = tuple(
        (bumped if m == mono and c is coeff else c, m) for c, m in gen.terms
    )
    return GeneratorPoly(
        fibre=gen.fibre,
        provenance=gen.provenance,
        anchor=gen.anchor,
        terms=terms,
        tie_break=gen.tie_break,
    )


# ---------------------------------------------------------------------------
# Serialization


def _coefficient_jsonable(c) -> dict:
    if isinstance(c, CycloElement):
        return {"lambda_coeffs": [_rational_str(v) for v in c.coeffs]}
    if isinstance(c, PrimeFieldElement):
        return {"mod_p": c.value}
    if isinstance(c, Fraction):
        return {"rational": _rational_str(c)}
    return {"int": c}


def _rational_str(v) -> str:
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def generator_to_jsonable(gen: GeneratorPoly) -> dict:
    return {
        "fibre": gen.fibre,
        "provenance": gen.provenance,
        "anchor": [gen.anchor.rho, gen.anchor.T] if gen.anchor else None,
        "terms": [
            {
                "monomial": [[f.N, f.mu] for f in mono.factors],
                "coefficient": {
                    "terms": [
                        {"exps": list(e), **_coefficient_jsonable(c)}
                        for e, c in coeff.sorted_terms()
                    ],
                    "symbols": list(coeff.vars),
                },
            }
            for coeff, mono in gen.terms
        ],
    }


def generators_document(params: FamilyParams, gens, fibre: str, tie_break: str) -> dict:
    """Stable, versioned serialization of a generator family."""
    return {
        "schema": "canideal.generators/1",
        "params": {"p": params.p, "q": params.q, "ell": params.ell, "m": params.m, "genus": params.genus},
        "fibre": fibre,
        "tie_break": tie_break,
        "count": len(gens),
        "generators": [generator_to_jsonable(g) for g in gens],
    }
