"""The dual C2-equivariant Steenrod algebra on generators xi_i, tau_i.

Degrees are homological: |xi_i| = (2^i - 1) rho, |tau_i| = 1 + |xi_i|,
|a| = -sigma, |u| = 1 - sigma.  Monomials are kept tau-reduced via

    tau_i^2 = a tau_{i+1} + u xi_{i+1} + a tau_0 xi_{i+1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .coefficients import PosMonomial, xor_into
from .grading import ONE, RHO, ParseError, RepDegree
from .report import CheckReport


def xi_degree(i: int) -> RepDegree:
    return RHO * (2**i - 1)


def tau_degree(i: int) -> RepDegree:
    return ONE + xi_degree(i)


def coeff_degree(c: PosMonomial) -> RepDegree:
    return RepDegree(-c.i - c.j, c.j)


def _trim(xi: Iterable[int]) -> tuple[int, ...]:
    xi = list(xi)
    while xi and xi[-1] == 0:
        xi.pop()
    return tuple(xi)


def _add_xi(x: tuple, y: tuple) -> tuple:
    n = max(len(x), len(y))
    return _trim((x[t] if t < len(x) else 0) + (y[t] if t < len(y) else 0) for t in range(n))


@dataclass(frozen=True, order=True)
class DualMonomial:
    """coeff * prod xi_{t+1}^{xi[t]} * prod_{i in tau} tau_i."""

    xi: tuple = ()
    tau: frozenset = frozenset()
    coeff: PosMonomial = PosMonomial(0, 0)

    def __post_init__(self):
        object.__setattr__(self, "xi", _trim(self.xi))
        object.__setattr__(self, "tau", frozenset(self.tau))

    @property
    def degree(self) -> RepDegree:
        d = coeff_degree(self.coeff)
        for t, e in enumerate(self.xi):
            d = d + xi_degree(t + 1) * e
        for i in self.tau:
            d = d + tau_degree(i)
        return d

    def sort_key(self):
        return (self.xi, tuple(sorted(self.tau)), self.coeff.i, self.coeff.j)

    def __str__(self) -> str:
        parts = []
        if self.coeff != PosMonomial(0, 0):
            parts.append(str(self.coeff))
        for t, e in enumerate(self.xi):
            if e:
                parts.append(f"xi{t + 1}" + (f"^{e}" if e > 1 else ""))
        parts += [f"tau{i}" for i in sorted(self.tau)]
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        return {"xi_exponents": list(self.xi), "tau_flags": sorted(self.tau),
                "coeff": {"i": self.coeff.i, "j": self.coeff.j}}

    @classmethod
    def parse(cls, text: str) -> DualMonomial:
        xi: tuple = ()
        tau: set = set()
        ci = cj = 0
        src = text.replace(" ", "")
        if src == "1":
            return cls()
        for f in src.split("*"):
            m = _DUAL_FACTOR.match(f)
            if not m:
                raise ParseError(f"unexpected token {f!r}", f)
            name, idx, exp = m.group("name"), m.group("idx"), int(m.group("exp") or 1)
            if name == "xi":
                if idx is None or int(idx) == 0:
                    raise ParseError(f"xi needs a positive index: {f!r}", f)
                xi = _add_xi(xi, (0,) * (int(idx) - 1) + (exp,))
            elif name == "tau":
                if idx is None or exp != 1 or int(idx) in tau:
                    raise ParseError(f"tau factors appear at most once: {f!r}", f)
                tau.add(int(idx))
            elif name == "a":
                ci += exp
            else:
                cj += exp
        return cls(xi, frozenset(tau), PosMonomial(ci, cj))


_DUAL_FACTOR = re.compile(r"^(?P<name>xi|tau|a|u)(?P<idx>\d+)?(?:\^(?P<exp>\d+))?$")


def _mono_mul(x: DualMonomial, y: DualMonomial) -> frozenset:
    c = PosMonomial(x.coeff.i + y.coeff.i, x.coeff.j + y.coeff.j)
    base = DualMonomial(_add_xi(x.xi, y.xi), x.tau ^ y.tau, c)
    out = frozenset({base})
    for i in sorted(x.tau & y.tau):
        out = dual_mul(out, tau_square_reduce(i))
    return out


def dual_mul(x: Iterable[DualMonomial], y: Iterable[DualMonomial]) -> frozenset:
    acc: set = set()
    for m in x:
        for n in y:
            for p in _mono_mul(m, n):
                xor_into(acc, p)
    return frozenset(acc)


def tau_square_reduce(i: int) -> frozenset:
    """tau_i^2 as a set of DualMonomials."""
    nxt = (0,) * i + (1,)
    return frozenset({
        DualMonomial((), {i + 1}, PosMonomial(1, 0)),
        DualMonomial(nxt, (), PosMonomial(0, 1)),
        DualMonomial(nxt, {0}, PosMonomial(1, 0)),
    })


def format_sum(monos: Iterable[DualMonomial]) -> str:
    return " + ".join(str(m) for m in sorted(monos, key=DualMonomial.sort_key)) or "0"


# coproduct on coefficient-free monomials; a tensor term is a tuple of slots
# and each slot is a coefficient-free DualMonomial


def _slot_mul(x: DualMonomial, y: DualMonomial) -> DualMonomial:
    if x.tau & y.tau:
        raise ValueError("tau collision inside a tensor slot")
    return DualMonomial(_add_xi(x.xi, y.xi), x.tau | y.tau)


def tensor_mul(x: frozenset, y: frozenset) -> frozenset:
    acc: set = set()
    for s in x:
        for t in y:
            xor_into(acc, tuple(_slot_mul(p, q) for p, q in zip(s, t)))
    return frozenset(acc)


def xi_power(i: int, e: int) -> DualMonomial:
    return DualMonomial((0,) * (i - 1) + (e,)) if i else DualMonomial()


def dual_coproduct(gen: str, i: int) -> frozenset:
    """Delta of xi_i or tau_i as a set of (left, right) slot pairs."""
    if gen == "xi":
        if i == 0:
            return frozenset({(DualMonomial(), DualMonomial())})
        return frozenset((xi_power(i - j, 2**j), xi_power(j, 1)) for j in range(i + 1))
    if gen == "tau":
        terms = {(DualMonomial((), {i}), DualMonomial())}
        for j in range(i + 1):
            xor_into(terms, (xi_power(i - j, 2**j), DualMonomial((), {j})))
        return frozenset(terms)
    raise ValueError(f"unknown generator {gen!r}")


def coproduct_monomial(m: DualMonomial) -> frozenset:
    """Delta extended multiplicatively to a coefficient-free monomial."""
    if m.coeff != PosMonomial(0, 0):
        raise ValueError("coproduct is only extended to coefficient-free monomials")
    out = frozenset({(DualMonomial(), DualMonomial())})
    for t, e in enumerate(m.xi):
        for _ in range(e):
            out = tensor_mul(out, dual_coproduct("xi", t + 1))
    for i in sorted(m.tau):
        out = tensor_mul(out, dual_coproduct("tau", i))
    return out


def _apply_left(terms: frozenset) -> frozenset:
    """(Delta (x) 1) on pairs, producing triples."""
    acc: set = set()
    for x, y in terms:
        for p, q in coproduct_monomial(x):
            xor_into(acc, (p, q, y))
    return frozenset(acc)


def _apply_right(terms: frozenset) -> frozenset:
    acc: set = set()
    for x, y in terms:
        for p, q in coproduct_monomial(y):
            xor_into(acc, (x, p, q))
    return frozenset(acc)


def generators(bound: int) -> list[tuple[str, int]]:
    return [("xi", i) for i in range(1, bound + 1)] + [("tau", i) for i in range(bound + 1)]


def check_coassociativity(bound: int) -> CheckReport:
    for gen, i in generators(bound):
        delta = dual_coproduct(gen, i)
        left, right = _apply_left(delta), _apply_right(delta)
        if left != right:
            diff = sorted(left ^ right, key=lambda t: tuple(s.sort_key() for s in t))[0]
            shown = " (x) ".join(str(s) for s in diff)
            return CheckReport("dual coassociativity", False, f"{gen}{i}: {shown}")
    return CheckReport("dual coassociativity", True, f"generators up to index {bound}")


def check_counit(bound: int) -> CheckReport:
    one = DualMonomial()
    for gen, i in generators(bound):
        g = DualMonomial((), {i}) if gen == "tau" else xi_power(i, 1)
        delta = dual_coproduct(gen, i)
        left = frozenset(y for x, y in delta if x == one)
        right = frozenset(x for x, y in delta if y == one)
        if left != {g} or right != {g}:
            return CheckReport("dual counit", False, f"{gen}{i}")
    return CheckReport("dual counit", True, f"generators up to index {bound}")


def check_homogeneity(bound: int) -> CheckReport:
    for gen, i in generators(bound):
        d = tau_degree(i) if gen == "tau" else xi_degree(i)
        for x, y in dual_coproduct(gen, i):
            if x.degree + y.degree != d:
                return CheckReport("dual homogeneity", False, f"Delta {gen}{i}: {x} (x) {y}")
    for i in range(bound + 1):
        for m in tau_square_reduce(i):
            if m.degree != tau_degree(i) * 2:
                return CheckReport("dual homogeneity", False, f"tau{i}^2: {m}")
    return CheckReport("dual homogeneity", True, f"coproducts and tau relations up to index {bound}")


def dual_check(bound: int) -> list[CheckReport]:
    return [check_coassociativity(bound), check_counit(bound), check_homogeneity(bound)]


def format_tensor(terms: frozenset) -> str:
    key = lambda t: tuple(s.sort_key() for s in t)  # noqa: E731
    return " + ".join(" (x) ".join(str(s) for s in t) for t in sorted(terms, key=key)) or "0"

