"""RO(C2) degrees and truncated bigraded counting series.

A degree ``r*sigma + s`` is stored as ``RepDegree(r, s)``.  The total degree
is ``p = r + s`` and the weight is ``q = r``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class ParseError(ValueError):
    """Raised when textual input cannot be parsed; ``token`` is the culprit."""

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True, order=True)
class RepDegree:
    r: int = 0
    s: int = 0

    @property
    def p(self) -> int:
        return self.r + self.s

    @property
    def q(self) -> int:
        return self.r

    def __add__(self, other: RepDegree) -> RepDegree:
        return RepDegree(self.r + other.r, self.s + other.s)

    def __sub__(self, other: RepDegree) -> RepDegree:
        return RepDegree(self.r - other.r, self.s - other.s)

    def __neg__(self) -> RepDegree:
        return RepDegree(-self.r, -self.s)

    def __mul__(self, k: int) -> RepDegree:
        return RepDegree(k * self.r, k * self.s)

    __rmul__ = __mul__

    def is_actual(self) -> bool:
        return self.r >= 0 and self.s >= 0

    def __str__(self) -> str:
        sign = "+" if self.r >= 0 else "-"
        return f"{self.s}{sign}{abs(self.r)}*sigma"

    def pretty(self) -> str:
        """Render in the ``m+n*rho`` style when possible (``1+4rho``, ``sigma``)."""
        r, s = self.r, self.s
        if 0 < r <= s:
            head = "rho" if r == 1 else f"{r}rho"
            return head if s == r else f"{s - r}+{head}"
        parts = []
        if r:
            parts.append("sigma" if r == 1 else "-sigma" if r == -1 else f"{r}sigma")
        if s or not parts:
            parts.append(f"{s:+d}" if parts else str(s))
        return "".join(parts)

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s}

    @classmethod
    def from_json(cls, obj: Mapping) -> RepDegree:
        return cls(int(obj["r"]), int(obj["s"]))

    @classmethod
    def parse(cls, text: str) -> RepDegree:
        """Parse ``"3+1*sigma"``, ``"sigma"``, ``"2*rho+1"``, ``"-2+3*sigma"``..."""
        src = text.replace(" ", "")
        if not src:
            raise ParseError("empty degree", text)
        r = s = 0
        pos = 0
        for m in _DEG_TERM.finditer(src):
            if m.start() != pos:
                raise ParseError(f"unexpected token {src[pos:m.start()]!r}", src[pos:m.start()])
            if m.start() > 0 and not m.group("sign"):
                raise ParseError(f"missing sign before {m.group(0)!r}", m.group(0))
            pos = m.end()
            sign = -1 if m.group("sign") == "-" else 1
            coef = m.group("coef")
            unit = m.group("unit")
            k = sign * (int(coef) if coef is not None else 1)
            if unit is None:
                s += k
            elif unit == "sigma":
                r += k
            else:
                r += k
                s += k
        if pos != len(src):
            raise ParseError(f"unexpected token {src[pos:]!r}", src[pos:])
        return cls(r, s)


# the lookahead forbids empty matches, so gaps in finditer are parse errors
_DEG_TERM = re.compile(r"(?P<sign>[+-]?)(?=\d|sigma|rho)(?:(?P<coef>\d+)\*?)?(?P<unit>sigma|rho)?")

ZERO = RepDegree(0, 0)
ONE = RepDegree(0, 1)
SIGMA = RepDegree(1, 0)
RHO = RepDegree(1, 1)


def actual_leq(v: RepDegree, w: RepDegree, strict: bool = False) -> bool:
    """Order where ``v <= w`` iff ``w - v`` is an actual representation.

    The strict form also asks for positive total degree of the difference.
    """
    d = w - v
    if not d.is_actual():
        return False
    return d.p > 0 if strict else True


def rho_times_total(v: RepDegree) -> RepDegree:
    """``rho(r*sigma + s) = (r + s) * rho``."""
    return RHO * v.p


@dataclass(frozen=True)
class BigradedSeries:
    """Ranks per RepDegree, truncated at total degree ``cutoff``."""

    cutoff: int
    terms: Mapping[RepDegree, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {d: n for d, n in self.terms.items() if n and d.p <= self.cutoff}
        if any(n < 0 for n in clean.values()):
            raise ValueError("ranks must be nonnegative")
        object.__setattr__(self, "terms", clean)

    def __getitem__(self, d: RepDegree) -> int:
        return self.terms.get(d, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigradedSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and dict(self.terms) == dict(other.terms)

    def __mul__(self, other: BigradedSeries) -> BigradedSeries:
        return series_mul(self, other)

    def truncate(self, cutoff: int) -> BigradedSeries:
        return BigradedSeries(min(cutoff, self.cutoff), self.terms)

    def items(self):
        return sorted(self.terms.items())

    @classmethod
    def unit(cls, cutoff: int) -> BigradedSeries:
        return cls(cutoff, {ZERO: 1})

    @classmethod
    def geometric(cls, d: RepDegree, cutoff: int, max_exponent: int | None = None) -> BigradedSeries:
        """``1 + t^d + t^(2d) + ...`` (optionally stopping at ``max_exponent``)."""
        if d.p <= 0:
            raise ValueError(f"generator degree {d} must have positive total degree")
        terms = {}
        k = 0
        while k * d.p <= cutoff and (max_exponent is None or k <= max_exponent):
            terms[d * k] = 1
            k += 1
        return cls(cutoff, terms)

    def to_json(self) -> dict:
        return {"series": [{"degree": d.to_json(), "rank": n} for d, n in self.items()]}


def series_mul(x: BigradedSeries, y: BigradedSeries) -> BigradedSeries:
    cutoff = min(x.cutoff, y.cutoff)
    out: dict[RepDegree, int] = {}
    for dx, nx in x.terms.items():
        if dx.p > cutoff:
            continue
        for dy, ny in y.terms.items():
            d = dx + dy
            if d.p <= cutoff:
                out[d] = out.get(d, 0) + nx * ny
    return BigradedSeries(cutoff, out)


def series_product(factors: Iterable[BigradedSeries], cutoff: int) -> BigradedSeries:
    acc = BigradedSeries.unit(cutoff)
    for f in factors:
        acc = series_mul(acc, f)
    return acc


def collapse(x: BigradedSeries, mode: str, upto: int | None = None) -> dict[int, int]:
    """Forget to one grading: ``total`` keeps ``p = r + s``, ``fixed`` keeps ``s``.

    Only degrees ``<= upto`` (default: the cutoff) are returned.  For ``fixed``
    the caller is responsible for supplying a series whose cutoff is large
    enough that no term with small ``s`` was truncated away.
    """
    if mode not in ("total", "fixed"):
        raise ValueError(f"unknown collapse mode {mode!r}")
    upto = x.cutoff if upto is None else upto
    out: dict[int, int] = {}
    for d, n in x.terms.items():
        key = d.p if mode == "total" else d.s
        if key <= upto:
            out[key] = out.get(key, 0) + n
    return dict(sorted(out.items()))


# single-variable series are plain {degree: rank} dicts


def series1_mul(x: Mapping[int, int], y: Mapping[int, int], cutoff: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, m in x.items():
        for b, n in y.items():
            if a + b <= cutoff:
                out[a + b] = out.get(a + b, 0) + m * n
    return {k: v for k, v in sorted(out.items()) if v}


def polynomial_series1(degrees: Iterable[int], cutoff: int) -> dict[int, int]:
    """Poincare series of a polynomial algebra on generators of the given degrees."""
    acc = [0] * (cutoff + 1)
    acc[0] = 1
    for g in degrees:
        if g <= 0:
            raise ValueError("generator degrees must be positive")
        for t in range(g, cutoff + 1):
            acc[t] += acc[t - g]
    return {t: n for t, n in enumerate(acc) if n}
