"""
Cycling, decycling, summit invariants and conjugacy decision.

The conjugacy class of g carries the invariants inf_s (the largest inf of
any conjugate) and sup_s (the smallest sup); the conjugates realising both
simultaneously form the finite, nonempty super summit set.  Iterated
cycling raises inf, iterated decycling lowers sup, and conjugating by
simples walks the whole super summit set, which decides conjugacy.

Every positive answer carries a conjugating witness that verifies by direct
multiplication; nothing is a trust-me boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Element,
    Simple,
    StructureMismatchError,
    identity_element,
    invert,
    multiply,
    normalize,
    simple_element,
)

DEFAULT_SSS_CAP = 100_000


class ResourceLimitError(RuntimeError):
    """A search exceeded its configured cap; the question is left undecided."""


@dataclass(frozen=True)
class SummitData:
    """Summit invariants of a conjugacy class plus a realising conjugate.

    The witness w satisfies w^{-1} · g · w = representative for the queried
    element g.
    """

    inf_s: int
    sup_s: int
    representative: Element
    witness: Element


@dataclass(frozen=True)
class ConjugacyWitness:
    """A conjugator w with w^{-1} · g · w = h for the queried pair (g, h)."""

    conjugator: Element


def cycling(g: Element) -> tuple[Element, Simple]:
    """Conjugate g by a = tau^{-inf}(first factor); returns (result, a).

    Since Delta^r s_1 = a Delta^r, the result is the normal form of
    Delta^r s_2 ... s_k a, so cycling never lowers inf nor raises sup.
    Elements without factors are returned unchanged with identity conjugator.
    """
    S = g.structure
    if not g.factors:
        return g, S.identity_simple()
    a = S.tau_power(g.factors[0], -g.inf)
    return normalize(S, g.inf, g.factors[1:] + (a,)), a


def decycling(g: Element) -> tuple[Element, Simple]:
    """Conjugate g by the inverse of its final factor s_k; returns (result, s_k).

    The result is the normal form of s_k · g · s_k^{-1}, i.e. of
    Delta^r tau^r(s_k) s_1 ... s_{k-1}; the conjugator in the w^{-1} g w
    sense is s_k^{-1}.
    """
    S = g.structure
    if not g.factors:
        return g, S.identity_simple()
    s = g.factors[-1]
    return normalize(S, g.inf, (S.tau_power(s, g.inf),) + g.factors[:-1]), s


def summit(g: Element) -> SummitData:
    """Summit invariants, a representative realising both, and its witness.

    Stopping rule: once ||Delta|| consecutive cyclings fail to raise inf,
    inf is summit; likewise for decycling and sup.
    """
    S = g.structure
    window = S.delta_norm()
    h = g
    witness = identity_element(S)

    fails = 0
    while fails < window and h.factors:
        h2, a = cycling(h)
        fails = 0 if h2.inf > h.inf else fails + 1
        witness = multiply(witness, simple_element(a))
        h = h2

    fails = 0
    while fails < window and h.factors:
        h2, s = decycling(h)
        fails = 0 if h2.sup < h.sup else fails + 1
        witness = multiply(witness, invert(simple_element(s)))
        h = h2

    return SummitData(h.inf, h.sup, h, witness)


def _sss_closure(rep: Element, cap: int) -> dict[Element, Element]:
    """The super summit set as {element: witness}, witnesses rooted at rep.

    Closure of rep under conjugation by all simples, keeping exactly the
    conjugates with the same (inf, sup); each witness w satisfies
    w^{-1} · rep · w = element.
    """
    S = rep.structure
    conjugators = [
        (simple_element(s), invert(simple_element(s)))
        for s in S.enumerate_simples()
        if s.atom_norm > 0
    ]
    seen: dict[Element, Element] = {rep: identity_element(S)}
    frontier = [rep]
    while frontier:
        nxt = []
        for h in frontier:
            for s_elt, s_inv in conjugators:
                h2 = multiply(multiply(s_inv, h), s_elt)
                if h2.inf != rep.inf or h2.sup != rep.sup or h2 in seen:
                    continue
                seen[h2] = multiply(seen[h], s_elt)
                nxt.append(h2)
                if len(seen) > cap:
                    raise ResourceLimitError(
                        f"super summit set exceeds cap of {cap} elements"
                    )
        frontier = nxt
    return seen


def super_summit_set(g: Element, cap: int = DEFAULT_SSS_CAP) -> tuple[Element, ...]:
    """The full super summit set of g, in canonical order."""
    closure = _sss_closure(summit(g).representative, cap)
    return tuple(sorted(closure, key=Element.sort_key))


def are_conjugate(g: Element, h: Element, cap: int = DEFAULT_SSS_CAP) -> ConjugacyWitness | None:
    """A verified witness if g and h are conjugate, None otherwise."""
    if g.structure != h.structure:
        raise StructureMismatchError("conjugacy query across structures")
    sd_g = summit(g)
    sd_h = summit(h)
    if (sd_g.inf_s, sd_g.sup_s) != (sd_h.inf_s, sd_h.sup_s):
        return None
    closure = _sss_closure(sd_g.representative, cap)
    if sd_h.representative not in closure:
        return None
    chain = multiply(sd_g.witness, closure[sd_h.representative])
    return ConjugacyWitness(multiply(chain, invert(sd_h.witness)))
