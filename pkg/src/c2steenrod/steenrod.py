"""The C2-equivariant Steenrod algebra over F2[u, a].

A term is a pair ``(PosMonomial, word)`` with ``word`` a tuple of positive
square indices, and an element is a frozenset of terms.  Coefficients sit on
the left of words, so moving a coefficient past a square means acting on it
with part of the Cartan formula.

Two versions of the odd Adem correction are available (see ``Config``):

* ``printed`` reproduces the closed-form tables for Sq^1 Sq^n, Sq^2 Sq^n and
  Sq^3 Sq^n exactly, but the resulting rewriting system is not confluent.
* ``coherent`` uses the binomial C(j-1-k, i-2k) for the a-terms when j is odd.
  Rewriting is then confluent and the product associative.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .coefficients import (
    Laurent,
    LaurentMonomial,
    PosMonomial,
    binom_mod2,
    xor_into,
)
from .grading import ONE, RHO, ZERO, ParseError, RepDegree, actual_leq, rho_times_total

Word = tuple
UNIT = PosMonomial(0, 0)
U = PosMonomial(0, 1)
A = PosMonomial(1, 0)


@dataclass(frozen=True)
class Config:
    sq_on_a: str = "trivial"  # or "frobenius": Sq^1 a = a^2 in act_element
    relations: str = "printed"  # or "coherent"

    def __post_init__(self):
        if self.sq_on_a not in ("trivial", "frobenius"):
            raise ValueError(f"unknown sq_on_a rule {self.sq_on_a!r}")
        if self.relations not in ("printed", "coherent"):
            raise ValueError(f"unknown relations variant {self.relations!r}")


DEFAULT = Config()


def pmul(x: PosMonomial, y: PosMonomial) -> PosMonomial:
    return PosMonomial(x.i + y.i, x.j + y.j)


# degrees and admissibility


def sq_degree(k: int) -> RepDegree:
    if k < 0:
        raise ValueError("square index must be nonnegative")
    return RHO * (k // 2) + ONE * (k % 2)


def word_degree(word: Sequence[int]) -> RepDegree:
    d = ZERO
    for k in word:
        d = d + sq_degree(k)
    return d


def is_admissible(word: Sequence[int]) -> bool:
    return all(word[t] >= 2 * word[t + 1] for t in range(len(word) - 1))


def normalize_word(word: Iterable[int]) -> Word:
    """Drop Sq^0 letters; reject negative indices."""
    out = []
    for k in word:
        if k < 0:
            raise ValueError(f"negative square index {k}")
        if k:
            out.append(k)
    return tuple(out)


def admissible_words(n: int, max_first: int | None = None) -> Iterator[Word]:
    """Admissible words of index sum ``n``, in lexicographic order."""
    if n == 0:
        yield ()
        return
    top = n if max_first is None else min(n, max_first)
    for f in range(1, top + 1):
        for rest in admissible_words(n - f, f // 2):
            yield (f,) + rest


def admissible_basis(
    degree: RepDegree | None = None,
    *,
    index_sum: int | None = None,
    bound: int | None = None,
) -> list[Word]:
    """Admissible words of a given RepDegree, index sum, or index sum <= bound."""
    if sum(x is not None for x in (degree, index_sum, bound)) != 1:
        raise ValueError("give exactly one of degree, index_sum, bound")
    if bound is not None:
        return sorted(w for n in range(bound + 1) for w in admissible_words(n))
    if index_sum is not None:
        return sorted(admissible_words(index_sum)) if index_sum >= 0 else []
    if degree.p < 0:
        return []
    return sorted(w for w in admissible_words(degree.p) if word_degree(w) == degree)


def module_basis(degree: RepDegree) -> list[tuple[PosMonomial, Word]]:
    """Pairs (u^j a^i, admissible word) of total RepDegree ``degree``.

    Coefficients have total degree i, so the index sum is at most ``degree.p``.
    """
    out = []
    for n in range(max(degree.p, -1) + 1):
        for w in admissible_words(n):
            rest = degree - word_degree(w)
            i = rest.p
            j = -rest.s
            if i >= 0 and j >= 0:
                out.append((PosMonomial(i, j), w))
    return sorted(out, key=lambda t: (t[1], t[0]))


# elements


def _term_key(term):
    c, w = term
    d = c.degree + word_degree(w)
    return (d.r, d.s, w, c.i, c.j)


def word_str(word: Sequence[int]) -> str:
    return "Sq[" + ",".join(str(k) for k in word) + "]"


@dataclass(frozen=True)
class SteenrodElement:
    terms: frozenset = frozenset()

    def __post_init__(self):
        for c, w in self.terms:
            if not is_admissible(w) or 0 in w:
                raise ValueError(f"stored word {w} is not admissible")

    @classmethod
    def of(cls, pairs: Iterable[tuple[PosMonomial, Word]]) -> SteenrodElement:
        acc: set = set()
        for t in pairs:
            xor_into(acc, t)
        return cls(frozenset(acc))

    @classmethod
    def word(cls, *indices: int, coeff: PosMonomial = UNIT) -> SteenrodElement:
        w = normalize_word(indices)
        if not is_admissible(w):
            raise ValueError(f"{w} is not admissible; use adem_reduce")
        return cls(frozenset({(coeff, w)}))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SteenrodElement) -> SteenrodElement:
        return SteenrodElement(self.terms ^ other.terms)

    def __mul__(self, other: SteenrodElement) -> SteenrodElement:
        return multiply(self, other)

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=_term_key)

    def degrees(self) -> set[RepDegree]:
        return {c.degree + word_degree(w) for c, w in self.terms}

    def __str__(self) -> str:
        return " + ".join(term_str(c, w) for c, w in self.sorted_terms()) or "0"

    def to_json(self) -> list:
        return [{"coeff": c.to_json(), "word": list(w)} for c, w in self.sorted_terms()]

    @classmethod
    def from_json(cls, items) -> SteenrodElement:
        return cls.of(
            (PosMonomial(int(it["coeff"]["i"]), int(it["coeff"]["j"])), tuple(it["word"])) for it in items
        )


def term_str(c: PosMonomial, w: Word) -> str:
    return word_str(w) if c == UNIT else f"{c}*{word_str(w)}"


ZERO_ELEMENT = SteenrodElement()
IDENTITY = SteenrodElement(frozenset({(UNIT, ())}))


@dataclass(frozen=True)
class TensorElement:
    """Terms are triples (coefficient, left word, right word)."""

    terms: frozenset = frozenset()

    @classmethod
    def of(cls, triples) -> TensorElement:
        acc: set = set()
        for t in triples:
            xor_into(acc, t)
        return cls(frozenset(acc))

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=lambda t: (t[1], t[2], t[0].i, t[0].j))

    def __str__(self) -> str:
        parts = []
        for c, x, y in self.sorted_terms():
            body = f"{word_str(x)}(x){word_str(y)}"
            parts.append(body if c == UNIT else f"{c}*{body}")
        return " + ".join(parts) or "0"

    def to_json(self) -> list:
        return [{"coeff": c.to_json(), "left": list(x), "right": list(y)} for c, x, y in self.sorted_terms()]


# Cartan terms, coproduct and the action on coefficients


def cartan_terms(k: int, with_a: bool = True) -> tuple[tuple[PosMonomial, int, int], ...]:
    """Terms (t, A, B) of Sq^k(xy) = sum t Sq^A(x) Sq^B(y).

    ``with_a=False`` drops the a-correction of the odd case, which gives the
    coproduct of Sq^k.
    """
    out = []
    half = k // 2
    if k % 2 == 0:
        out += [(UNIT, 2 * r, k - 2 * r) for r in range(half + 1)]
        out += [(U, 2 * s + 1, k - 2 * s - 1) for s in range(half)]
    else:
        out += [(UNIT, r, k - r) for r in range(k + 1)]
        if with_a:
            out += [(A, 2 * s + 1, 2 * half - 2 * s - 1) for s in range(half)]
    return tuple(out)


def coproduct(k: int) -> TensorElement:
    return TensorElement.of(
        (c, normalize_word([x]), normalize_word([y])) for c, x, y in cartan_terms(k, with_a=False)
    )


def act_on_u_power(n: int, k: int) -> Laurent:
    """Sq^k(u^n) = C(n, k) a^k u^(n - m - d) where k = 2m + d."""
    if k < 0:
        raise ValueError("square index must be nonnegative")
    if not binom_mod2(n, k):
        return Laurent()
    return Laurent.mono(k, n - k // 2 - k % 2)


@lru_cache(maxsize=None)
def _a_power_action(m: int, k: int, rule: str) -> frozenset:
    """Sq^k(a^m) under the chosen rule, as a frozenset of LaurentMonomials."""
    if k == 0:
        return frozenset({LaurentMonomial(m, 0)})
    if rule == "trivial" or m == 0:
        return frozenset()
    acc: set = set()
    for t, x, y in cartan_terms(k):
        if x > 1:
            continue
        first = LaurentMonomial(1 + x, 0)  # Sq^0 a = a, Sq^1 a = a^2
        for rest in _a_power_action(m - 1, y, rule):
            xor_into(acc, LaurentMonomial(t.i + first.i + rest.i, t.j + first.j + rest.j))
    return frozenset(acc)


def act_on_monomial(mono: LaurentMonomial, k: int, config: Config = DEFAULT) -> Laurent:
    """Sq^k(a^i u^j) via the twisted Cartan formula on u^j times a^i."""
    if k == 0:
        return Laurent.of(mono)
    acc: set = set()
    for t, x, y in cartan_terms(k):
        left = act_on_u_power(mono.j, x)
        if not left:
            continue
        for r in _a_power_action(mono.i, y, config.sq_on_a):
            for l in left.terms:
                xor_into(acc, LaurentMonomial(t.i + l.i + r.i, t.j + l.j + r.j))
    return Laurent(frozenset(acc))


def act_square(x: Laurent, k: int, config: Config = DEFAULT) -> Laurent:
    out = Laurent()
    for m in x.terms:
        out = out + act_on_monomial(m, k, config)
    return out


def act_word(x: Laurent, word: Sequence[int], config: Config = DEFAULT) -> Laurent:
    """Right action: (x)Sq^{i1}Sq^{i2} = ((x)Sq^{i1})Sq^{i2}."""
    for k in word:
        x = act_square(x, k, config)
        if not x:
            break
    return x


def act_element(x: Laurent, element, config: Config = DEFAULT) -> Laurent:
    """Right action of an element (or raw word) on a Laurent combination.

    A coefficient c on a word scales the result: (x)(c W) = c ((x) W).
    """
    if isinstance(element, tuple):
        return act_word(x, element, config)
    out = Laurent()
    for c, w in element.terms:
        out = out + Laurent.mono(c.i, c.j) * act_word(x, w, config)
    return out


@lru_cache(maxsize=None)
def true_left_action(k: int, i: int, j: int) -> frozenset:
    """Sq^k(a^i u^j), j >= 0, from Sq u = u + a and the Cartan formula.

    Here a is inert.  This is the action used to move coefficients past
    squares inside the algebra; it differs from ``act_on_u_power`` from
    Sq^3(u^2) on.  Returns a frozenset of PosMonomials.
    """
    if k == 0:
        return frozenset({PosMonomial(i, j)})
    if j == 0:
        return frozenset()
    acc: set = set()
    for t, x, y in cartan_terms(k):
        if x == 0:
            first = U
        elif x == 1:
            first = A
        else:
            continue
        for rest in true_left_action(y, i, j - 1):
            xor_into(acc, pmul(pmul(t, first), rest))
    return frozenset(acc)


# Adem relations and reduction


def adem_relation(i: int, j: int, config: Config = DEFAULT) -> frozenset:
    """Right-hand side of Sq^i Sq^j for 0 < i < 2j, as a set of terms."""
    if not (0 < i < 2 * j):
        raise ValueError(f"Sq^{i}Sq^{j} is already admissible")
    acc: set = set()
    if (i + j) % 2 == 0:
        for k in range(i // 2 + 1):
            if binom_mod2(j - 1 - k, i - 2 * k):
                eps = int(k % 2 == 1 and i % 2 == 0 and j % 2 == 0)
                xor_into(acc, (PosMonomial(0, eps), normalize_word([i + j - k, k])))
    else:
        for k in range(i // 2 + 1):
            if binom_mod2(j - 1 - k, i - 2 * k):
                xor_into(acc, (UNIT, normalize_word([i + j - k, k])))
        for k in range(1, i + 1, 2):
            if i % 2 == 1 or config.relations == "printed":
                c = binom_mod2(j - 1 - k, i - 2 * k - 1)
            else:
                c = binom_mod2(j - 1 - k, i - 2 * k)
            if c:
                xor_into(acc, (A, normalize_word([i + j - k - 1, k])))
    return frozenset(acc)


@lru_cache(maxsize=None)
def _commute(word: Word, coeff: PosMonomial, relations: str) -> frozenset:
    """word * coeff as a set of (coeff', word') with coefficients on the left."""
    if coeff == UNIT or not word:
        return frozenset({(coeff, word)})
    k, prefix = word[-1], word[:-1]
    acc: set = set()
    for t, x, y in cartan_terms(k):
        tail = (y,) if y else ()
        for c in true_left_action(x, coeff.i, coeff.j):
            for c2, w2 in _commute(prefix, pmul(c, t), relations):
                xor_into(acc, (c2, w2 + tail))
    return frozenset(acc)


def commute(word: Sequence[int], coeff: PosMonomial, config: Config = DEFAULT) -> frozenset:
    return _commute(normalize_word(word), coeff, config.relations)


@lru_cache(maxsize=None)
def _reduce(word: Word, relations: str, strategy: str) -> frozenset:
    bad = [t for t in range(len(word) - 1) if word[t] < 2 * word[t + 1]]
    if not bad:
        return frozenset({(UNIT, word)})
    t = bad[0] if strategy == "leftmost" else bad[-1]
    prefix, suffix = word[:t], word[t + 2:]
    config = Config(relations=relations)
    acc: set = set()
    for c, w in adem_relation(word[t], word[t + 1], config):
        for c2, w2 in _commute(prefix, c, relations):
            for c3, w3 in _reduce(w2 + w + suffix, relations, strategy):
                xor_into(acc, (pmul(c2, c3), w3))
    return frozenset(acc)


def adem_reduce(
    word: Sequence[int],
    coeff: PosMonomial = UNIT,
    config: Config = DEFAULT,
    strategy: str = "leftmost",
) -> SteenrodElement:
    """Admissible normal form of ``coeff * Sq^word``."""
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    reduced = _reduce(normalize_word(word), config.relations, strategy)
    return SteenrodElement.of((pmul(coeff, c), w) for c, w in reduced)


def multiply(x: SteenrodElement, y: SteenrodElement, config: Config = DEFAULT) -> SteenrodElement:
    acc: set = set()
    for c1, w1 in x.terms:
        for c2, w2 in y.terms:
            for c3, w3 in _commute(w1, c2, config.relations):
                for c4, w4 in _reduce(w3 + w2, config.relations, "leftmost"):
                    xor_into(acc, (pmul(pmul(c1, c3), c4), w4))
    return SteenrodElement(frozenset(acc))


def sq(k: int) -> SteenrodElement:
    return IDENTITY if k == 0 else SteenrodElement.word(k)


def conjugate(k: int, config: Config = DEFAULT) -> SteenrodElement:
    """chi(Sq^k) from sum c Sq^A chi(Sq^B) = 0 over the coproduct terms."""
    return _conjugate(k, config)


@lru_cache(maxsize=None)
def _conjugate(k: int, config: Config) -> SteenrodElement:
    if k == 0:
        return IDENTITY
    out = ZERO_ELEMENT
    for c, x, y in cartan_terms(k, with_a=False):
        if x == 0:
            continue
        lead = SteenrodElement(frozenset({(c, (x,))}))
        out = out + multiply(lead, _conjugate(y, config), config)
    return out


# classical shadow, excess and instability


def classical_specialize(x: SteenrodElement) -> frozenset:
    """Set u = 1 and a = 0; the result is a set of admissible words."""
    acc: set = set()
    for c, w in x.terms:
        if c.i == 0:
            xor_into(acc, w)
    return frozenset(acc)


def excess(word: Sequence[int]) -> RepDegree:
    w = normalize_word(word)
    if not is_admissible(w):
        raise ValueError(f"excess is only defined on admissible words, got {list(w)}")
    total = ZERO
    padded = list(w) + [0]
    for t in range(len(w)):
        total = total + sq_degree(padded[t]) - rho_times_total(sq_degree(padded[t + 1]))
    return total


def excess_filter(value: RepDegree | int, bound: int) -> list[Word]:
    """Admissible words of index sum <= bound with the given excess.

    An ``int`` value matches the total degree of the excess.
    """
    if isinstance(value, int):
        keep = lambda w: excess(w).p == value  # noqa: E731
    else:
        keep = lambda w: excess(w) == value  # noqa: E731
    return [w for w in admissible_basis(bound=bound) if keep(w)]


def t_word(j: int, k: int) -> Word:
    """(j 2^(k-1), ..., 2j, j); empty for k = 0."""
    return tuple(j * 2 ** (k - 1 - x) for x in range(k))


def word_survives(word: Sequence[int], v: RepDegree) -> bool:
    """False if some letter of Sq^word(x), x in degree v, is killed by instability.

    Letters apply right to left.  Sq^{2k} dies when its input degree is
    strictly below k*rho, and Sq^{2k+1} = Sq^1 Sq^{2k} dies with its even part.
    """
    d = v
    for k in reversed(normalize_word(word)):
        half = k // 2
        if half and actual_leq(d, RHO * half, strict=True):
            return False
        d = d + sq_degree(k)
    return True


def instability_filter(x: SteenrodElement, v: RepDegree) -> SteenrodElement:
    return SteenrodElement(frozenset(t for t in x.terms if word_survives(t[1], v)))


# parsing

_WORD = re.compile(r"^Sq\[(?P<body>[^\]]*)\]$")


def parse_word(text: str) -> Word:
    src = text.replace(" ", "")
    m = _WORD.match(src)
    if not m:
        raise ParseError(f"expected Sq[i1,i2,...], got {src!r}", src)
    body = m.group("body")
    if not body:
        return ()
    out = []
    for tok in body.split(","):
        if not tok.isdigit():
            raise ParseError(f"bad square index {tok!r}", tok)
        out.append(int(tok))
    return tuple(out)


def parse_terms(text: str) -> list[tuple[PosMonomial, Word]]:
    """Parse ``u^j*a^i*Sq[...] + ...`` into raw (possibly inadmissible) terms."""
    from .coefficients import _parse_product, _split_sum

    out = []
    for chunk in _split_sum(text):
        idx = chunk.find("Sq[")
        if idx < 0:
            coeff_src, word = chunk, ()
        else:
            word = parse_word(chunk[idx:])
            coeff_src = chunk[:idx]
            if coeff_src:
                if not coeff_src.endswith("*"):
                    raise ParseError(f"unexpected token {coeff_src!r}", coeff_src)
                coeff_src = coeff_src[:-1]
            else:
                coeff_src = "1"
        i, j = _parse_product(coeff_src)
        if i < 0 or j < 0:
            raise ParseError(f"coefficients must lie in F2[u,a]: {coeff_src!r}", coeff_src)
        out.append((PosMonomial(i, j), normalize_word(word)))
    return out


def parse_element(text: str, config: Config = DEFAULT) -> SteenrodElement:
    out = ZERO_ELEMENT
    for c, w in parse_terms(text):
        out = out + adem_reduce(w, c, config)
    return out


def all_words(max_len: int, max_index: int) -> Iterator[Word]:
    """Every word with letters in 1..max_index and length <= max_len."""
    for n in range(max_len + 1):
        yield from itertools.product(range(1, max_index + 1), repeat=n)
