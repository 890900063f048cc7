"""The coefficient ring of a point and its Laurent extension F2[u^{+-1}, a].

Elements are sets of monomials: over F2 a term is either present or not, so
addition is symmetric difference.  The monomial classes are dataclasses rather
than tuples so that u^0 a^0 and theta never compare equal.

    a has degree sigma, u has degree sigma - 1.
    theta/(a^i u^j) sits at r = -2-i-j, s = j+2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .grading import ParseError, RepDegree


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas, valid for negative n (2-adic digits).

    Python's infinite two's complement gives the 2-adic expansion of a
    negative integer, so the usual bit test works verbatim.
    """
    if k < 0:
        return 0
    return int((n & k) == k)


def xor_into(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


@dataclass(frozen=True, order=True)
class PosMonomial:
    i: int  # exponent of a
    j: int  # exponent of u

    @property
    def degree(self) -> RepDegree:
        return RepDegree(self.i + self.j, -self.j)

    def __str__(self) -> str:
        return _mono_str([("u", self.j), ("a", self.i)])

    def to_json(self) -> dict:
        return {"cone": "pos", "i": self.i, "j": self.j}


@dataclass(frozen=True, order=True)
class NegMonomial:
    i: int
    j: int

    @property
    def degree(self) -> RepDegree:
        return RepDegree(-2 - self.i - self.j, self.j + 2)

    def __str__(self) -> str:
        den = _mono_str([("a", self.i), ("u", self.j)])
        return "theta" if den == "1" else f"theta/({den})"

    def to_json(self) -> dict:
        return {"cone": "neg", "i": self.i, "j": self.j}


@dataclass(frozen=True, order=True)
class LaurentMonomial:
    i: int  # exponent of a, >= 0
    j: int  # exponent of u, any sign

    @property
    def degree(self) -> RepDegree:
        return RepDegree(self.i + self.j, -self.j)

    def __str__(self) -> str:
        return _mono_str([("a", self.i), ("u", self.j)])


def _mono_str(factors) -> str:
    parts = []
    for name, e in factors:
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _sort_key(m):
    d = m.degree
    return (d.r, d.s, m.i, m.j)


def monomial_mul(x, y):
    """Product of two basis monomials of the point ring; None means zero."""
    if isinstance(x, NegMonomial):
        x, y = y, x
    if isinstance(x, NegMonomial):
        return None
    if isinstance(y, PosMonomial):
        return PosMonomial(x.i + y.i, x.j + y.j)
    if x.i <= y.i and x.j <= y.j:
        return NegMonomial(y.i - x.i, y.j - x.j)
    return None


@dataclass(frozen=True)
class CoeffElement:
    """F2-combination of point-ring basis elements."""

    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    @classmethod
    def of(cls, *monos) -> CoeffElement:
        acc: set = set()
        for m in monos:
            xor_into(acc, m)
        return cls(frozenset(m for m in acc if isinstance(m, PosMonomial)),
                   frozenset(m for m in acc if isinstance(m, NegMonomial)))

    def monomials(self) -> list:
        return sorted(self.pos | self.neg, key=_sort_key)

    def __bool__(self) -> bool:
        return bool(self.pos or self.neg)

    def __add__(self, other: CoeffElement) -> CoeffElement:
        return CoeffElement(self.pos ^ other.pos, self.neg ^ other.neg)

    def __mul__(self, other: CoeffElement) -> CoeffElement:
        return m2_mul(self, other)

    def degrees(self) -> set[RepDegree]:
        return {m.degree for m in self.pos | self.neg}

    def __str__(self) -> str:
        return " + ".join(str(m) for m in self.monomials()) or "0"

    def to_json(self) -> list:
        return [m.to_json() for m in self.monomials()]

    @classmethod
    def from_json(cls, items) -> CoeffElement:
        monos = []
        for it in items:
            kind = {"pos": PosMonomial, "neg": NegMonomial}[it["cone"]]
            monos.append(kind(int(it["i"]), int(it["j"])))
        return cls.of(*monos)

    @classmethod
    def parse(cls, text: str) -> CoeffElement:
        monos = []
        for chunk in _split_sum(text):
            i, j, neg = _parse_monomial(chunk)
            if i < 0 or j < 0:
                raise ParseError(f"negative exponent in {chunk!r}", chunk)
            monos.append(NegMonomial(i, j) if neg else PosMonomial(i, j))
        return cls.of(*monos)


ONE = CoeffElement.of(PosMonomial(0, 0))


def m2_mul(x: CoeffElement, y: CoeffElement) -> CoeffElement:
    acc: set = set()
    for m in x.pos | x.neg:
        for n in y.pos | y.neg:
            p = monomial_mul(m, n)
            if p is not None:
                xor_into(acc, p)
    return CoeffElement.of(*acc)


@dataclass(frozen=True)
class Laurent:
    """F2-combination of LaurentMonomials."""

    terms: frozenset = frozenset()

    @classmethod
    def of(cls, *monos: LaurentMonomial) -> Laurent:
        acc: set = set()
        for m in monos:
            xor_into(acc, m)
        return cls(frozenset(acc))

    @classmethod
    def mono(cls, i: int = 0, j: int = 0) -> Laurent:
        return cls(frozenset({LaurentMonomial(i, j)}))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Laurent) -> Laurent:
        return Laurent(self.terms ^ other.terms)

    def __mul__(self, other: Laurent) -> Laurent:
        return laurent_mul(self, other)

    def monomials(self) -> list[LaurentMonomial]:
        return sorted(self.terms, key=_sort_key)

    def __str__(self) -> str:
        return " + ".join(str(m) for m in self.monomials()) or "0"

    def to_json(self) -> list:
        return [{"i": m.i, "j": m.j} for m in self.monomials()]

    @classmethod
    def parse(cls, text: str) -> Laurent:
        monos = []
        for chunk in _split_sum(text):
            i, j, neg = _parse_monomial(chunk)
            if neg:
                raise ParseError(f"theta terms are not Laurent monomials: {chunk!r}", chunk)
            if i < 0:
                raise ParseError(f"negative power of a in {chunk!r}", chunk)
            monos.append(LaurentMonomial(i, j))
        return cls.of(*monos)


def laurent_mul(x: Laurent, y: Laurent) -> Laurent:
    acc: set = set()
    for m in x.terms:
        for n in y.terms:
            xor_into(acc, LaurentMonomial(m.i + n.i, m.j + n.j))
    return Laurent(frozenset(acc))


def laurent_from_pos(c: CoeffElement) -> Laurent:
    if c.neg:
        raise ValueError("negative-cone elements have no Laurent image")
    return Laurent.of(*(LaurentMonomial(m.i, m.j) for m in c.pos))


# parsing helpers

_FACTOR = re.compile(r"^(?P<var>[au])(?:\^(?P<exp>-?\d+))?$")


def _split_sum(text: str) -> list[str]:
    src = text.replace(" ", "")
    if src in ("", "0"):
        return []
    chunks = src.split("+")
    for c in chunks:
        if not c:
            raise ParseError(f"empty summand in {text!r}", "+")
    return chunks


def _parse_product(src: str) -> tuple[int, int]:
    i = j = 0
    if src == "1":
        return 0, 0
    for f in src.split("*"):
        m = _FACTOR.match(f)
        if not m:
            raise ParseError(f"unexpected token {f!r}", f)
        e = int(m.group("exp") or 1)
        if m.group("var") == "a":
            i += e
        else:
            j += e
    return i, j


def _parse_monomial(src: str) -> tuple[int, int, bool]:
    """Returns (a-exponent, u-exponent, is_negative_cone)."""
    if src.startswith("theta"):
        rest = src[len("theta"):]
        if not rest:
            return 0, 0, True
        if not (rest.startswith("/(") and rest.endswith(")")):
            if rest.startswith("/") and _FACTOR.match(rest[1:]):
                i, j = _parse_product(rest[1:])
                return i, j, True
            raise ParseError(f"unexpected token {rest!r}", rest)
        i, j = _parse_product(rest[2:-1])
        return i, j, True
    i, j = _parse_product(src)
    return i, j, False


def all_degrees_rank_one(monos: Iterable) -> bool:
    """Each RepDegree holds at most one basis element."""
    seen = set()
    for m in monos:
        if m.degree in seen:
            return False
        seen.add(m.degree)
    return True
