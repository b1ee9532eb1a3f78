"""
Brute-force oracles for tests.

These are deliberately naive and share only the normal-form arithmetic with
the algorithms they audit: word lengths come from breadth-first search over
the simple generators, summit infima from exhaustive conjugation up to a
word-length cap, and translation estimates from the one-power bracket that
must contain the exact value for every n >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conjugacy import summit
from .core import Element, Rational, identity_element, invert, multiply, power, simple_element


@dataclass(frozen=True)
class Bracket:
    """A closed interval guaranteed to contain an exact translation value."""

    lo: Rational
    hi: Rational

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty bracket")

    def __contains__(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi


def _generators(S) -> list[Element]:
    """All nontrivial simples and their inverses, as elements."""
    out = []
    for s in S.enumerate_simples():
        if s.atom_norm == 0:
            continue
        elt = simple_element(s)
        out.append(elt)
        out.append(invert(elt))
    return out


def bfs_word_length(g: Element, cap: int = 8) -> int | None:
    """The true shortest word length of g over the simples and inverses.

    Breadth-first search by right multiplication; None when the length
    exceeds the cap.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    start = identity_element(g.structure)
    if g == start:
        return 0
    gens = _generators(g.structure)
    seen = {start}
    frontier = [start]
    for depth in range(1, cap + 1):
        nxt = []
        for h in frontier:
            for x in gens:
                h2 = multiply(h, x)
                if h2 in seen:
                    continue
                if h2 == g:
                    return depth
                seen.add(h2)
                nxt.append(h2)
        frontier = nxt
    return None


def brute_summit_inf(g: Element, conj_len_cap: int = 6) -> int:
    """Max of inf over all conjugates w^{-1} g w with |w| <= conj_len_cap.

    A certified lower bound for inf_s(g); on instances small enough that the
    bound is attained it equals inf_s(g) exactly.
    """
    gens = _generators(g.structure)
    pairs = [(x, invert(x)) for x in gens]
    best = g.inf
    seen = {g}
    frontier = [g]
    for _ in range(conj_len_cap):
        nxt = []
        for h in frontier:
            for x, x_inv in pairs:
                h2 = multiply(multiply(x_inv, h), x)
                if h2 in seen:
                    continue
                seen.add(h2)
                nxt.append(h2)
                if h2.inf > best:
                    best = h2.inf
        frontier = nxt
    return best


def estimate_translation(g: Element, n: int) -> Bracket:
    """The bracket [inf_s(g^n)/n, inf_s(g^n)/n + 1/n] around t_inf(g)."""
    if n < 1:
        raise ValueError("power must be at least 1")
    a = summit(power(g, n)).inf_s
    lo = Fraction(a, n)
    return Bracket(lo, lo + Fraction(1, n))
