"""Noncommutative rewriting engine.

An algebra is described by a `Presentation`: an ordered list of generators,
a set of rewrite rules whose patterns are two-letter words, an optional
involution, and a grading.  Elements are `NCPoly` values, finite maps from
words (tuples of generator indices) to `Scalar` coefficients.  Normal forms
are computed by leftmost rewriting to a fixed point under a step budget.

The rule orientation stored in each catalog entry is chosen so that every
rule strictly decreases an admissible term order; `check_overlaps` verifies
confluence exhaustively on all words up to a given length.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .scalars import ONE, ZERO, Scalar

Word = tuple[int, ...]

DEFAULT_STEP_BUDGET = 10 ** 6


class RewriteError(Exception):
    pass


def _budget() -> int:
    raw = os.environ.get("QDOM_STEP_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_STEP_BUDGET


class NCPoly:
    """Finite Scalar-linear combination of words; zero coefficients absent."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[tuple(w)] = c

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def unit(c=ONE) -> "NCPoly":
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        return NCPoly({(): c}) if not c.is_zero() else NCPoly()

    @staticmethod
    def word(w: Iterable[int], c=ONE) -> "NCPoly":
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        return NCPoly({tuple(w): c}) if not c.is_zero() else NCPoly()

    def is_zero(self) -> bool:
        return not self.terms

    def copy(self) -> "NCPoly":
        out = NCPoly()
        out.terms = dict(self.terms)
        return out

    def add_term(self, w: Word, c: Scalar) -> None:
        cur = self.terms.get(w)
        new = c if cur is None else cur + c
        if new.is_zero():
            self.terms.pop(w, None)
        else:
            self.terms[w] = new

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = self.copy()
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = self.copy()
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NCPoly":
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_fraction(c)
        if c.is_zero():
            return NCPoly()
        return NCPoly({w: c * x for w, x in self.terms.items()})

    def concat(self, other: "NCPoly") -> "NCPoly":
        """Free product of words, no rewriting."""
        out = NCPoly()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.add_term(w1 + w2, c1 * c2)
        return out

    def coeff(self, w: Iterable[int]) -> Scalar:
        return self.terms.get(tuple(w), ZERO)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            bits.append("%r:%r" % (list(w), self.terms[w]))
        return "NCPoly{%s}" % ", ".join(bits)


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    parity: int = 0                      # 1 for differentials
    degree: tuple[int, ...] = (1,)       # multi-degree
    # position in the normal order is the index in Presentation.generators


@dataclass
class Presentation:
    """Generators, two-letter rewrite rules, optional involution and d-map."""

    name: str
    generators: list[GeneratorInfo]
    rules: dict[tuple[int, int], NCPoly] = field(default_factory=dict)
    # involution: generator index -> (Scalar, Word)
    involution: Optional[dict[int, tuple[Scalar, Word]]] = None
    # differential: generator index -> NCPoly image of d(gen)
    dmap: Optional[dict[int, NCPoly]] = None

    def __post_init__(self):
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise ValueError("duplicate generator names in %s" % self.name)

    # -- basic access ----------------------------------------------------

    def gen(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError("unknown generator %r in algebra %s" % (name, self.name))

    def g(self, name: str) -> NCPoly:
        return NCPoly.word((self.gen(name),))

    def word_name(self, w: Word) -> list[str]:
        return [self.generators[i].name for i in w]

    def check_word(self, w: Word) -> None:
        for i in w:
            if not (0 <= i < len(self.generators)):
                raise RewriteError("generator index %d outside %s" % (i, self.name))

    # -- rewriting ---------------------------------------------------------

    def normal_form(self, p: NCPoly, budget: Optional[int] = None) -> NCPoly:
        if budget is None:
            budget = _budget()
        rules = self.rules
        out = NCPoly()
        stack = [(w, c) for w, c in p.terms.items()]
        steps = 0
        while stack:
            w, c = stack.pop()
            self.check_word(w)
            steps += 1
            if steps > budget:
                raise RewriteError(
                    "step budget exceeded while reducing in %s" % self.name)
            hit = -1
            for i in range(len(w) - 1):
                if (w[i], w[i + 1]) in rules:
                    hit = i
                    break
            if hit < 0:
                out.add_term(w, c)
                continue
            left, right = w[:hit], w[hit + 2:]
            for rw, rc in rules[(w[hit], w[hit + 1])].terms.items():
                stack.append((left + rw + right, c * rc))
        return out

    def is_normal(self, w: Word) -> bool:
        return all((w[i], w[i + 1]) not in self.rules for i in range(len(w) - 1))

    def mul(self, p1: NCPoly, p2: NCPoly) -> NCPoly:
        return self.normal_form(p1.concat(p2))

    def mul_many(self, *ps: NCPoly) -> NCPoly:
        acc = NCPoly.unit()
        for p in ps:
            acc = self.mul(acc, p)
        return acc

    def power(self, p: NCPoly, k: int) -> NCPoly:
        acc = NCPoly.unit()
        for _ in range(k):
            acc = self.mul(acc, p)
        return acc

    # -- involution ----------------------------------------------------------

    def star(self, p: NCPoly) -> NCPoly:
        if self.involution is None:
            raise RewriteError("algebra %s has no involution" % self.name)
        out = NCPoly()
        for w, c in p.terms.items():
            img_word: Word = ()
            img_c = c
            for i in reversed(w):
                s, iw = self.involution[i]
                img_c = img_c * s
                img_word = img_word + iw
            out.add_term(img_word, img_c)
        return self.normal_form(out)

    # -- differential ----------------------------------------------------------

    def d(self, p: NCPoly) -> NCPoly:
        """Graded Leibniz extension of the generator d-map."""
        if self.dmap is None:
            raise RewriteError("algebra %s has no differential" % self.name)
        out = NCPoly()
        for w, c in p.terms.items():
            sign = 1
            for i, letter in enumerate(w):
                dg = self.dmap.get(letter)
                if dg is not None and not dg.is_zero():
                    piece = NCPoly.word(w[:i]).concat(dg).concat(NCPoly.word(w[i + 1:]))
                    out = out + piece.scale(c if sign > 0 else -c)
                if self.generators[letter].parity:
                    sign = -sign
        return self.normal_form(out)

    # -- grading ----------------------------------------------------------------

    def multidegree(self, w: Word) -> tuple[int, ...]:
        if not self.generators:
            return ()
        n = len(self.generators[0].degree)
        acc = [0] * n
        for i in w:
            for k, d in enumerate(self.generators[i].degree):
                acc[k] += d
        return tuple(acc)

    # -- diamond check ------------------------------------------------------------

    def one_step_reducts(self, w: Word) -> list[NCPoly]:
        outs = []
        for i in range(len(w) - 1):
            rule = self.rules.get((w[i], w[i + 1]))
            if rule is None:
                continue
            piece = NCPoly()
            for rw, rc in rule.terms.items():
                piece.add_term(w[:i] + rw + w[i + 2:], rc)
            outs.append(piece)
        return outs

    def words(self, max_len: int) -> Iterable[Word]:
        n = len(self.generators)
        for length in range(max_len + 1):
            yield from itertools.product(range(n), repeat=length)


def normal_form(p: NCPoly, pres: Presentation) -> NCPoly:
    return pres.normal_form(p)


def multiply(p1: NCPoly, p2: NCPoly, pres: Presentation) -> NCPoly:
    return pres.mul(p1, p2)


def star(p: NCPoly, pres: Presentation) -> NCPoly:
    return pres.star(p)


@dataclass
class OverlapReport:
    algebra: str
    max_len: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_overlaps(pres: Presentation, max_len: int) -> OverlapReport:
    """Desk-scale diamond lemma: all one-step divergences rejoin.

    Every word of length <= max_len is reduced along each of its one-step
    rewrites and the full normal forms are compared.
    """
    report = OverlapReport(pres.name, max_len)
    for w in pres.words(max_len):
        reducts = pres.one_step_reducts(w)
        if len(reducts) < 2:
            report.checked += 1
            continue
        nfs = [pres.normal_form(r) for r in reducts]
        base = nfs[0]
        for other in nfs[1:]:
            if other != base:
                report.failures.append((w, base, other))
                break
        report.checked += 1
    return report


def grading_report(pres: Presentation) -> list:
    """Rules whose replacement does not preserve the multi-degree."""
    bad = []
    for (a, b), rhs in pres.rules.items():
        d0 = pres.multidegree((a, b))
        for w in rhs.terms:
            if pres.multidegree(w) != d0:
                bad.append(((a, b), w))
    return bad


# ---------------------------------------------------------------------------
# linear algebra over Scalar, used to invert bimodule relation systems and
# for exact rank computations
# ---------------------------------------------------------------------------

def solve_linear(rows: list[list[Scalar]], rhs: list[list[Scalar]]):
    """Gauss-Jordan over the Scalar field; returns solution of A x = b.

    `rows` is a square matrix, `rhs` a list of right-hand-side vectors
    (given as rows).  Raises RewriteError if the matrix is singular.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    b = [list(r) for r in rhs]
    m = len(b)
    perm = list(range(n))
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise RewriteError("singular relation system")
        a[col], a[piv] = a[piv], a[col]
        for k in range(m):
            b[k][col], b[k][piv] = b[k][piv], b[k][col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for k in range(m):
            b[k][col] = b[k][col] * inv
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                for k in range(m):
                    b[k][r] = b[k][r] - f * b[k][col]
    del perm
    return b


def matrix_rank(rows: list[list[Scalar]]) -> int:
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if not a[r][col].is_zero()), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = a[row][col].inverse()
        a[row] = [x * inv for x in a[row]]
        for r in range(nrows):
            if r != row and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
