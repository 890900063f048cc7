"""Generator ledgers and Poincare series for K(Z/2, n + sigma).

Starting from K_sigma = P(c, d)/(c^2 = ac + ud), each Borel step takes a simple
system of generators of the fibre and transgresses it, adding 1 to the
trivial part of every degree.  Generator names are operator trees; degrees
carry all the checkable content.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .coefficients import Laurent, LaurentMonomial, PosMonomial, xor_into
from .grading import (
    ONE,
    RHO,
    SIGMA,
    BigradedSeries,
    RepDegree,
    collapse,
    polynomial_series1,
    series1_mul,
    series_product,
)
from .report import CheckReport
from .steenrod import act_on_u_power, admissible_basis, cartan_terms, excess


@dataclass(frozen=True)
class Symbol:
    name: str
    degree: RepDegree

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Power:
    """s_{V,l}(arg): the 2^l-th power of a class in degree V."""

    v: RepDegree
    l: int
    arg: "Expr"

    def render(self) -> str:
        return f"s_{{{self.v.pretty()},{self.l}}}({self.arg.render()})"


Expr = Union[Symbol, Power]


def fundamental(d: RepDegree) -> Symbol:
    return Symbol(f"x_{{{d.pretty()}}}", d)


@dataclass(frozen=True)
class Generator:
    name: Expr
    degree: RepDegree

    def __str__(self) -> str:
        return self.name.render()

    def to_json(self) -> dict:
        return {"name": self.name.render(), "degree": self.degree.to_json()}


@dataclass(frozen=True)
class Relation:
    """generator^2 = sum of coeff * generator."""

    lhs: Generator
    rhs: tuple  # of (PosMonomial, Generator)

    def is_homogeneous(self) -> bool:
        target = self.lhs.degree * 2
        return all(c.degree + g.degree == target for c, g in self.rhs)

    def __str__(self) -> str:
        terms = [(f"{c}*" if c != PosMonomial(0, 0) else "") + str(g) for c, g in self.rhs]
        return f"{self.lhs}^2 = " + (" + ".join(terms) or "0")

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs),
                "rhs": [{"coeff": c.to_json(), "generator": str(g)} for c, g in self.rhs]}


@dataclass(frozen=True)
class AlgebraPresentation:
    generators: tuple
    relations: tuple = ()
    label: str = ""

    def bound(self) -> set:
        """Generators whose square is rewritten by a relation."""
        return {r.lhs for r in self.relations}

    def degrees(self) -> list[RepDegree]:
        return sorted(g.degree for g in self.generators)

    def to_json(self) -> dict:
        return {"label": self.label,
                "generators": [g.to_json() for g in self.generators],
                "relations": [r.to_json() for r in self.relations]}


def base_case(v: RepDegree) -> AlgebraPresentation:
    if v == ONE:
        return AlgebraPresentation((Generator(fundamental(ONE), ONE),), (), "K_1")
    if v == SIGMA:
        c = Generator(Symbol("c", SIGMA), SIGMA)
        d = Generator(Symbol("d", RHO), RHO)
        rel = Relation(c, ((PosMonomial(1, 0), c), (PosMonomial(0, 1), d)))
        return AlgebraPresentation((c, d), (rel,), "K_sigma")
    raise ValueError(f"no base case for degree {v.pretty()}; only 1 and sigma are supported")


def simple_system(p: AlgebraPresentation, cutoff: int) -> list[Generator]:
    """Relation-bound generators once, free generators as all g^(2^l)."""
    bound = p.bound()
    out = []
    for g in p.generators:
        if g in bound:
            if g.degree.p <= cutoff:
                out.append(g)
            continue
        l = 0
        while (g.degree * 2**l).p <= cutoff:
            name = g.name if l == 0 else Power(g.degree, l, g.name)
            out.append(Generator(name, g.degree * 2**l))
            l += 1
    return out


def _shift_innermost(e: Expr) -> Expr:
    """Replace the innermost symbol by the fundamental class one degree up."""
    if isinstance(e, Power):
        return Power(e.v, e.l, _shift_innermost(e.arg))
    return fundamental(e.degree + ONE)


def transgress(g: Generator) -> Generator:
    return Generator(_shift_innermost(g.name), g.degree + ONE)


def borel_step(simple: list[Generator], label: str = "") -> AlgebraPresentation:
    return AlgebraPresentation(tuple(transgress(g) for g in simple), (), label)


def _label(v: RepDegree) -> str:
    return f"K_{{{v.pretty()}}}"


def em_ledger(n: int, cutoff: int, start: RepDegree = SIGMA) -> list[AlgebraPresentation]:
    """Presentations of K_start, K_{start+1}, ..., K_{start+n}."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = base_case(start)
    out = [p]
    for step in range(1, n + 1):
        p = borel_step(simple_system(p, cutoff - 1), _label(start + ONE * step))
        out.append(p)
    return out


def em_presentation(n: int, cutoff: int, start: RepDegree = SIGMA) -> AlgebraPresentation:
    return em_ledger(n, cutoff, start)[-1]


def poincare(p: AlgebraPresentation, cutoff: int) -> BigradedSeries:
    bound = p.bound()
    factors = [
        BigradedSeries.geometric(g.degree, cutoff, 1 if g in bound else None)
        for g in p.generators
        if g.degree.p <= cutoff
    ]
    return series_product(factors, cutoff)


def em_series(n: int, cutoff: int) -> BigradedSeries:
    return poincare(em_presentation(n, cutoff), cutoff)


def fixed_cutoff(cutoff: int) -> int:
    """Total cutoff that determines every term with s <= cutoff.

    Every generator has r <= s apart from c (r = s + 1, exponent at most 1),
    so a monomial with s <= C has total degree at most 2C + 1.
    """
    return 2 * cutoff + 1


def em_collapsed(n: int, cutoff: int, mode: str) -> dict[int, int]:
    if mode == "total":
        return collapse(em_series(n, cutoff), "total")
    big = fixed_cutoff(cutoff)
    return collapse(em_series(n, big), "fixed", upto=cutoff)


# classical oracles


def classical_serre(m: int, cutoff: int) -> dict[int, int]:
    """Poincare series of H^*(K(Z/2, m)) through degree ``cutoff``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return {0: 2}
    degrees = [m + sum(w) for w in admissible_basis(bound=max(cutoff - m, 0)) if excess(w).p < m]
    return polynomial_series1([d for d in degrees if d <= cutoff], cutoff)


def caruso_fixed_series(n: int, cutoff: int) -> dict[int, int]:
    return series1_mul(classical_serre(n, cutoff), classical_serre(n + 1, cutoff), cutoff)


# squaring expressions


@dataclass(frozen=True)
class SquareExpression:
    """x^2 as a sum of Laurent coefficients times Sq^k(x)."""

    v: RepDegree
    terms: tuple  # of (k, Laurent), k descending

    def __str__(self) -> str:
        parts = []
        for k, c in self.terms:
            for m in c.monomials():
                parts.append(f"Sq[{k}]" if m == LaurentMonomial(0, 0) else f"{m}*Sq[{k}]")
        return " + ".join(parts) or "0"

    def as_dict(self) -> dict[int, Laurent]:
        return dict(self.terms)

    def to_json(self) -> dict:
        return {"degree": self.v.to_json(),
                "terms": [{"square": k, "coeff": c.to_json()} for k, c in self.terms]}


def square_expression(v: RepDegree) -> SquareExpression:
    """x^2 = u^(2 r1) Sq^(a+b)(u^(-r1) x) for x in degree a + b sigma."""
    a, b = v.s, v.r
    if b < 0:
        raise ValueError(f"degree {v.pretty()} has negative sign part")
    total = a + b
    if total < 0:
        raise ValueError(f"degree {v.pretty()} has negative total degree")
    r1 = b - total // 2
    acc: dict[int, set] = {}
    for t, x, y in cartan_terms(total):
        for m in act_on_u_power(-r1, x).terms:
            mono = LaurentMonomial(t.i + m.i, t.j + m.j + 2 * r1)
            xor_into(acc.setdefault(y, set()), mono)
    terms = tuple((k, Laurent(frozenset(s))) for k, s in sorted(acc.items(), reverse=True) if s)
    return SquareExpression(v, terms)


# conjecture data


class ConjectureDegrees(list):
    """Degrees predicted by a conjecture; never fed into borel_step."""

    label = "CONJECTURE"

    def __repr__(self) -> str:
        return f"CONJECTURE{list.__repr__(self)}"


def conjecture1_generators(k: int) -> ConjectureDegrees:
    """Predicted generator degrees of H(K_{1 + k(sigma - 1)})."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    degs = [ONE]
    for step in range(1, k + 1):
        degs = [d + SIGMA - ONE for d in degs] + [RepDegree(step, 2**step - step)]
    return ConjectureDegrees(degs)


# checks


def em_sigma_eilenberg_moore_check(cutoff: int) -> CheckReport:
    """Exterior algebra on sigma, rho, 2 rho, 4 rho, ... against K_sigma."""
    degs = [SIGMA]
    i = 0
    while (RHO * 2**i).p <= cutoff:
        degs.append(RHO * 2**i)
        i += 1
    e_inf = series_product((BigradedSeries.geometric(d, cutoff, 1) for d in degs), cutoff)
    direct = poincare(base_case(SIGMA), cutoff)
    ok = e_inf == direct
    return CheckReport("Eilenberg-Moore E_infinity for K_sigma", ok, f"cutoff {cutoff}")


def borel_degree_law(ledger: list[AlgebraPresentation], cutoff: int) -> CheckReport:
    for prev, cur in zip(ledger, ledger[1:]):
        expect = sorted(g.degree + ONE for g in simple_system(prev, cutoff - 1))
        if cur.degrees() != expect:
            return CheckReport("Borel degree law", False, cur.label)
    return CheckReport("Borel degree law", True, f"{len(ledger) - 1} steps")


def relations_homogeneous(p: AlgebraPresentation) -> bool:
    return all(r.is_homogeneous() for r in p.relations)


@dataclass(frozen=True)
class SeriesComparison:
    n: int
    cutoff: int
    mode: str
    engine: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.engine == self.oracle


def compare_with_oracles(n: int, cutoff: int) -> list[SeriesComparison]:
    return [
        SeriesComparison(n, cutoff, "total", em_collapsed(n, cutoff, "total"), classical_serre(n + 1, cutoff)),
        SeriesComparison(n, cutoff, "fixed", em_collapsed(n, cutoff, "fixed"), caruso_fixed_series(n, cutoff)),
    ]
