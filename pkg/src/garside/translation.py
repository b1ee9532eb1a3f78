"""
Exact translation numbers and straightness predicates.

The limits t_inf(g) = lim inf(g^n)/n and t_sup(g) = lim sup(g^n)/n are
rational with denominator at most N = ||Delta||, and t_len = t_sup - t_inf
has denominator at most N^2.  Both are pinned down exactly by a single
summit computation: for n >= N^2 the value t_inf(g) is the unique rational
with denominator <= N inside the closed interval

    [ inf_s(g^n)/n ,  inf_s(g^n)/n + 1/n ],

so the whole computation is finite.  t_sup is always derived as
-t_inf(g^{-1}), never computed independently.

The translation number t_D(g) with respect to the simples follows the
three-case split on the summit invariants: t_sup if inf_s >= 0, -t_inf if
sup_s <= 0, and t_len otherwise.  It is at least 1/N for g != 1, and the
translation number of the image of g in the central quotient
G / <Delta^{m0}> equals t_len(g).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .conjugacy import summit
from .core import Element, GarsideStructure, Rational, invert, power


class MultipleCandidatesError(RuntimeError):
    """More than one bounded-denominator rational fits the interval.

    When reached from the translation computation this is an internal bug:
    the interval there has width at most 1/maxden^2, which admits at most
    one candidate.
    """


@dataclass(frozen=True)
class TranslationTriple:
    """The exact limits of inf, sup and canonical length per power."""

    t_inf: Rational
    t_sup: Rational

    @property
    def t_len(self) -> Rational:
        return self.t_sup - self.t_inf


@dataclass(frozen=True)
class QuotientContext:
    """m0 is the least positive power of Delta that is central."""

    m0: int


def rational_in_interval(lo: Rational, hi: Rational, maxden: int) -> Rational | None:
    """The unique rational with denominator <= maxden in [lo, hi], if any.

    Scans the denominators directly; returns None when no candidate exists
    and raises MultipleCandidatesError when the interval is wide enough to
    hold several.
    """
    if lo > hi:
        raise ValueError("empty interval")
    found: set[Fraction] = set()
    for q in range(1, maxden + 1):
        for p in range(ceil(lo * q), floor(hi * q) + 1):
            found.add(Fraction(p, q))
    if len(found) > 1:
        raise MultipleCandidatesError(
            f"{len(found)} rationals with denominator <= {maxden} in [{lo}, {hi}]"
        )
    return found.pop() if found else None


def _t_inf(g: Element) -> Rational:
    S = g.structure
    N = S.delta_norm()
    # Any n >= N^2 makes the bracket width 1/n small enough to isolate a
    # unique candidate; n = 2 covers the infinite-cyclic case N = 1, where
    # a width-1 closed interval would contain two integers.
    n = max(N * N, 2)
    a = summit(power(g, n)).inf_s
    lo = Fraction(a, n)
    value = rational_in_interval(lo, lo + Fraction(1, n), N)
    if value is None:
        raise AssertionError("bracket interval contained no admissible rational")
    return value


def translation_triple(g: Element) -> TranslationTriple:
    """Exact (t_inf, t_sup, t_len) for g."""
    return TranslationTriple(_t_inf(g), -_t_inf(invert(g)))


def translation_number(g: Element) -> Rational:
    """The translation number of g with respect to the simples."""
    sd = summit(g)
    triple = translation_triple(g)
    if sd.inf_s >= 0:
        return triple.t_sup
    if sd.sup_s <= 0:
        return -triple.t_inf
    return triple.t_len


def straightness(g: Element) -> tuple[bool, bool]:
    """(inf-straight, sup-straight); each detectable at the single power N."""
    N = g.structure.delta_norm()
    gN = power(g, N)
    return (gN.inf == N * g.inf, gN.sup == N * g.sup)


def conjugate_straightness(g: Element) -> tuple[bool, bool]:
    """Whether g is conjugate to an inf-straight resp. sup-straight element."""
    N = g.structure.delta_norm()
    sd = summit(g)
    sd_N = summit(power(g, N))
    return (sd_N.inf_s == N * sd.inf_s, sd_N.sup_s == N * sd.sup_s)


def delta_central_exponent(S: GarsideStructure) -> QuotientContext:
    """The least m0 with Delta^{m0} central: the order of tau on the atoms."""
    return QuotientContext(S.tau_order())


def quotient_translation_number(g: Element) -> Rational:
    """Translation number of the image of g in G / <Delta^{m0}>.

    Collapsing the central Delta power changes word lengths by at most the
    constant m0, so the per-power limit is exactly t_len(g).
    """
    return translation_triple(g).t_len
