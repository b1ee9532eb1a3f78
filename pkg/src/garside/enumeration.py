"""
Enumeration and sampling of left-weighted factor sequences.

The sequences of a given length form the paths of the "follows" graph on
proper simples (neither identity nor Delta): t may follow s exactly when the
pair (s, t) is already left-weighted.  Enumeration order is the canonical
sorted order of simples, so first hits of candidate searches are
deterministic.
"""

from __future__ import annotations

import functools
import random
from typing import Iterator

from .core import Element, GarsideStructure, Simple


@functools.cache
def proper_simples(S: GarsideStructure) -> tuple[Simple, ...]:
    """All simples except the identity and Delta, canonically ordered."""
    identity = S.identity_simple()
    delta = S.delta()
    return tuple(s for s in S.enumerate_simples() if s != identity and s != delta)


@functools.cache
def followers(S: GarsideStructure) -> dict[Simple, tuple[Simple, ...]]:
    """For each proper simple s, the proper simples t with (s, t) left-weighted."""
    identity = S.identity_simple()
    out = {}
    for s in proper_simples(S):
        comp = S.right_complement(s)
        out[s] = tuple(t for t in proper_simples(S) if S.meet(comp, t) == identity)
    return out


def factor_sequences(S: GarsideStructure, length: int) -> Iterator[tuple[Simple, ...]]:
    """All left-weighted sequences of `length` proper simples."""
    if length == 0:
        yield ()
        return
    follow = followers(S)
    stack: list[Simple] = []

    def walk() -> Iterator[tuple[Simple, ...]]:
        if len(stack) == length:
            yield tuple(stack)
            return
        options = proper_simples(S) if not stack else follow[stack[-1]]
        for s in options:
            stack.append(s)
            yield from walk()
            stack.pop()

    yield from walk()


def normal_forms(S: GarsideStructure, inf: int, length: int) -> Iterator[Element]:
    """All elements with the given inf and canonical length."""
    for factors in factor_sequences(S, length):
        yield Element(S, inf, factors)


def sample_element(
    S: GarsideStructure,
    rng: random.Random,
    max_inf: int = 2,
    max_len: int = 3,
) -> Element:
    """A random normal form with |inf| <= max_inf and length <= max_len."""
    simples = proper_simples(S)
    follow = followers(S)
    inf = rng.randint(-max_inf, max_inf)
    length = rng.randint(0, max_len) if simples else 0
    factors: list[Simple] = []
    for _ in range(length):
        options = simples if not factors else follow[factors[-1]]
        if not options:
            break
        factors.append(rng.choice(options))
    return Element(S, inf, tuple(factors))
