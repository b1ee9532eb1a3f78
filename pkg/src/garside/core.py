"""
Canonical-form arithmetic over an abstract Garside structure.

Every group element is stored in its left-weighted normal form

    Delta^r · s_1 · s_2 · ... · s_k

where each factor s_i is a simple element (a left divisor of the Garside
element Delta), no factor is the identity or Delta, and each adjacent pair
satisfies the local left-weighted condition

    right_complement(s_i)  ∧  s_{i+1}  =  identity.

The normal form is unique, so structural equality of (inf, factors) is group
equality.  All arithmetic (products, inverses, powers) renormalises through
local "slides" that move weight from a factor into its left neighbour; a
slide that fills a factor up to Delta bubbles it to the front of the word,
and a slide that empties a factor bubbles the hole to the back, so a single
fixpoint loop plus boundary trimming produces the normal form.

A `GarsideStructure` supplies the presentation-specific primitives on simple
elements (meet, complements, products, tau) at the payload level; this module
wraps them with interning, caching and validation, and implements all
element-level arithmetic on top.  Concrete structures live in `structures`.
"""

from __future__ import annotations

import abc
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

# Exact reduced fractions carry every translation number in this package.
Rational = Fraction


class StructureMismatchError(ValueError):
    """Raised when an operation mixes values owned by different structures."""


@dataclass(frozen=True)
class Atom:
    """A generator of the positive monoid: table index plus display name."""

    index: int
    name: str


@dataclass(frozen=True)
class Simple:
    """A left divisor of Delta, tagged with its atom-length norm.

    The payload is structure-specific (a permutation tuple for braids, a
    tagged exponent for torus groups, a pair of component simples for
    products) and is only ever interpreted by the owning structure.  The
    norm ||s|| is carried eagerly so length queries are O(1).
    """

    structure: "GarsideStructure" = field(repr=False)
    payload: Any
    atom_norm: int

    def __lt__(self, other: "Simple"):
        if not isinstance(other, Simple):
            return NotImplemented
        return (self.atom_norm, self.payload) < (other.atom_norm, other.payload)


class GarsideStructure(abc.ABC):
    """Primitive operations of one Garside presentation.

    Subclasses implement the payload-level primitives (prefixed with an
    underscore); this base class wraps them in interned `Simple` values,
    argument validation and caching.  All public simple-level operations are
    cached, so after warm-up the normal-form machinery runs on table lookups.
    """

    # Optional certificates a presentation may provide.
    tau_order_hint: int | None = None
    unique_root_exponent: int | None = None

    # ------------------------------------------------------------------
    # payload primitives supplied by each concrete presentation
    # ------------------------------------------------------------------

    @abc.abstractmethod
    def _atom_payloads(self) -> tuple[tuple[str, Any], ...]:
        """Pairs (display name, payload), one per atom, in table order."""

    @abc.abstractmethod
    def _identity_payload(self) -> Any: ...

    @abc.abstractmethod
    def _delta_payload(self) -> Any: ...

    @abc.abstractmethod
    def _norm(self, payload) -> int:
        """The atom-length norm ||s||."""

    @abc.abstractmethod
    def _meet(self, a, b) -> Any:
        """Greatest common left divisor of two simples."""

    @abc.abstractmethod
    def _right_complement(self, a) -> Any:
        """The simple t with a·t = Delta."""

    @abc.abstractmethod
    def _left_complement(self, a) -> Any:
        """The simple t with t·a = Delta."""

    @abc.abstractmethod
    def _product(self, a, b) -> Any:
        """a·b, assuming b divides the right complement of a."""

    @abc.abstractmethod
    def _left_divide(self, a, b) -> Any:
        """a^{-1}·b, assuming a divides b on the left."""

    @abc.abstractmethod
    def _tau(self, a) -> Any:
        """Conjugation by Delta: Delta^{-1}·a·Delta."""

    @abc.abstractmethod
    def _all_payloads(self) -> Iterator[Any]:
        """Every simple payload, identity and Delta included."""

    @abc.abstractmethod
    def _atom_word(self, payload) -> tuple[int, ...]:
        """One fixed decomposition of a simple into atom indices."""

    @abc.abstractmethod
    def descriptor(self) -> str:
        """The textual descriptor of this structure, e.g. ``braid:3``."""

    # ------------------------------------------------------------------
    # interning and constants
    # ------------------------------------------------------------------

    @functools.cache
    def make_simple(self, payload) -> Simple:
        return Simple(self, payload, self._norm(payload))

    @functools.cache
    def identity_simple(self) -> Simple:
        return self.make_simple(self._identity_payload())

    @functools.cache
    def delta(self) -> Simple:
        return self.make_simple(self._delta_payload())

    @functools.cache
    def delta_norm(self) -> int:
        return self.delta().atom_norm

    @functools.cache
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(Atom(i, name) for i, (name, _) in enumerate(self._atom_payloads()))

    @functools.cache
    def atom_simple(self, index: int) -> Simple:
        return self.make_simple(self._atom_payloads()[index][1])

    @functools.cache
    def atom_by_name(self) -> dict[str, Atom]:
        return {atom.name: atom for atom in self.atoms()}

    @functools.cache
    def enumerate_simples(self) -> tuple[Simple, ...]:
        """All simple elements, in a canonical deterministic order."""
        return tuple(sorted(self.make_simple(p) for p in self._all_payloads()))

    @functools.cache
    def tau_order(self) -> int:
        """Multiplicative order of tau on the atom set.

        tau is determined by its action on atoms, so this is also its order
        on the whole set of simples, and the least m with Delta^m central.
        """
        start = [self.atom_simple(i) for i in range(len(self.atoms()))]
        current = [self.tau_simple(s) for s in start]
        order = 1
        while current != start:
            current = [self.tau_simple(s) for s in current]
            order += 1
        hint = self.tau_order_hint
        if hint is not None and hint % order != 0:
            raise AssertionError(f"tau order {order} does not divide the declared hint {hint}")
        return order

    # ------------------------------------------------------------------
    # public simple-level operations
    # ------------------------------------------------------------------

    def _check(self, s: Simple) -> None:
        if s.structure != self:
            raise StructureMismatchError(f"simple of {s.structure!r} used with {self!r}")

    @functools.cache
    def meet(self, a: Simple, b: Simple) -> Simple:
        self._check(a)
        self._check(b)
        return self.make_simple(self._meet(a.payload, b.payload))

    @functools.cache
    def right_complement(self, s: Simple) -> Simple:
        self._check(s)
        return self.make_simple(self._right_complement(s.payload))

    @functools.cache
    def left_complement(self, s: Simple) -> Simple:
        self._check(s)
        return self.make_simple(self._left_complement(s.payload))

    @functools.cache
    def simple_product(self, a: Simple, c: Simple) -> Simple:
        """a·c for simples with c dividing the right complement of a."""
        self._check(a)
        self._check(c)
        if self.meet(self.right_complement(a), c) != c:
            raise ValueError("product of simples is not simple")
        return self.make_simple(self._product(a.payload, c.payload))

    @functools.cache
    def simple_left_divide(self, c: Simple, b: Simple) -> Simple:
        """c^{-1}·b for simples with c a left divisor of b."""
        self._check(c)
        self._check(b)
        if self.meet(c, b) != c:
            raise ValueError("left divisor expected")
        return self.make_simple(self._left_divide(c.payload, b.payload))

    @functools.cache
    def tau_simple(self, s: Simple) -> Simple:
        self._check(s)
        return self.make_simple(self._tau(s.payload))

    def tau_power(self, s: Simple, k: int) -> Simple:
        for _ in range(k % self.tau_order()):
            s = self.tau_simple(s)
        return s

    @functools.cache
    def slide(self, a: Simple, b: Simple) -> tuple[Simple, Simple]:
        """Left-weight the pair (a, b), preserving the product a·b."""
        c = self.meet(self.right_complement(a), b)
        if c.atom_norm == 0:
            return (a, b)
        return (self.simple_product(a, c), self.simple_left_divide(c, b))

    @functools.cache
    def simple_atom_names(self, s: Simple) -> tuple[str, ...]:
        """A word in atom display names spelling the simple s."""
        self._check(s)
        atoms = self.atoms()
        return tuple(atoms[i].name for i in self._atom_word(s.payload))


@dataclass(frozen=True)
class Element:
    """A group element in left-weighted normal form Delta^inf · factors."""

    structure: GarsideStructure = field(repr=False)
    inf: int
    factors: tuple[Simple, ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def sort_key(self):
        return (self.inf, self.factors)

    def inverse(self) -> "Element":
        return invert(self)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Element":
        return power(self, n)

    def __repr__(self):
        words = [" ".join(self.structure.simple_atom_names(s)) for s in self.factors]
        body = " · ".join(words) if words else "(empty)"
        return f"<{self.structure.descriptor()} D^{self.inf} · {body}>"


# ----------------------------------------------------------------------
# simple-level operations (thin wrappers over the owning structure)
# ----------------------------------------------------------------------


def simple_meet(a: Simple, b: Simple) -> Simple:
    """Greatest simple dividing both a and b on the left."""
    if a.structure != b.structure:
        raise StructureMismatchError("meet of simples from different structures")
    return a.structure.meet(a, b)


def right_complement(s: Simple) -> Simple:
    """The simple t with s·t = Delta."""
    return s.structure.right_complement(s)


def make_left_weighted_pair(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Slide weight left so the pair becomes left-weighted; product preserved."""
    if a.structure != b.structure:
        raise StructureMismatchError("pair of simples from different structures")
    return a.structure.slide(a, b)


# ----------------------------------------------------------------------
# normal-form engine
# ----------------------------------------------------------------------


def _fix_factors(S: GarsideStructure, factors: list[Simple], dirty: list[int]) -> None:
    """Slide until every adjacent pair is left-weighted.

    `dirty` holds indices p of pairs (factors[p], factors[p+1]) that may
    violate the condition; fixing a pair can only disturb its two
    neighbours, which are pushed back onto the stack.  Deltas bubble to the
    front and identity factors to the back as a side effect of the slides.
    """
    while dirty:
        p = dirty.pop()
        if p < 0 or p + 1 >= len(factors):
            continue
        a, b = factors[p], factors[p + 1]
        a2, b2 = S.slide(a, b)
        if a2 == a:
            continue
        factors[p] = a2
        factors[p + 1] = b2
        dirty.append(p - 1)
        dirty.append(p + 1)


def _finalize(S: GarsideStructure, delta_power: int, factors: list[Simple]) -> Element:
    delta = S.delta()
    identity = S.identity_simple()
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    tail = len(factors)
    while tail > lead and factors[tail - 1] == identity:
        tail -= 1
    return Element(S, delta_power + lead, tuple(factors[lead:tail]))


def normalize(structure: GarsideStructure, delta_power: int, raw_factors: Iterable[Simple]) -> Element:
    """The unique normal form of Delta^delta_power · (product of raw factors)."""
    factors = []
    for s in raw_factors:
        if s.structure != structure:
            raise StructureMismatchError("factor belongs to a different structure")
        if s.atom_norm == 0:
            continue
        factors.append(s)
    _fix_factors(structure, factors, list(range(len(factors) - 1)))
    return _finalize(structure, delta_power, factors)


def identity_element(structure: GarsideStructure) -> Element:
    return Element(structure, 0, ())


def delta_power_element(structure: GarsideStructure, k: int) -> Element:
    return Element(structure, k, ())


def simple_element(s: Simple) -> Element:
    """The element represented by a single simple (identity and Delta allowed)."""
    return normalize(s.structure, 0, (s,))


def multiply(g: Element, h: Element) -> Element:
    """Normal form of g·h.

    Uses Delta^u a Delta^v b = Delta^{u+v} tau^v(a) b, then repairs
    left-weightedness outward from the single junction: both halves are
    already normal, so only slides triggered there can propagate.
    """
    if g.structure != h.structure:
        raise StructureMismatchError("product of elements from different structures")
    S = g.structure
    if h.is_identity:
        return g
    if g.is_identity:
        return h
    left = [S.tau_power(s, h.inf) for s in g.factors]
    factors = left + list(h.factors)
    dirty = [len(left) - 1] if left and h.factors else []
    _fix_factors(S, factors, dirty)
    return _finalize(S, g.inf + h.inf, factors)


def invert(g: Element) -> Element:
    """Normal form of g^{-1}.

    (Delta^r s_1 ... s_k)^{-1} = Delta^{-r-k} · u_k ... u_1 where
    u_i = tau^{-(r+i)}(right_complement(s_i)); the sequence is then
    renormalised.
    """
    S = g.structure
    r, k = g.inf, len(g.factors)
    factors = [
        S.tau_power(S.right_complement(g.factors[i]), -(r + i + 1))
        for i in range(k - 1, -1, -1)
    ]
    _fix_factors(S, factors, list(range(len(factors) - 1)))
    return _finalize(S, -(r + k), factors)


def power(g: Element, n: int) -> Element:
    """Normal form of g^n by square and multiply; g^{-n} = (g^n)^{-1}."""
    if n < 0:
        return invert(power(g, -n))
    result = identity_element(g.structure)
    base = g
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def word_length(g: Element) -> int:
    """Shortest word length of g over the simples and their inverses."""
    if g.inf >= 0:
        return g.sup
    if g.sup <= 0:
        return -g.inf
    return g.canonical_length


def tau_element(g: Element, k: int = 1) -> Element:
    """Normal form of Delta^{-k} g Delta^{k}; preserves inf, sup and length."""
    S = g.structure
    return Element(S, g.inf, tuple(S.tau_power(s, k) for s in g.factors))


def lmax(g: Element) -> Simple:
    """The head Delta ∧ g of a positive element."""
    if g.inf < 0:
        raise ValueError("lmax is defined for positive elements only")
    if g.inf >= 1:
        return g.structure.delta()
    if g.factors:
        return g.factors[0]
    return g.structure.identity_simple()


def validate_element(g: Element) -> None:
    """Check every normal-form invariant; raises ValueError when broken."""
    S = g.structure
    identity = S.identity_simple()
    delta = S.delta()
    for s in g.factors:
        if s.structure != S:
            raise ValueError("factor owned by a different structure")
        if s == identity or s == delta:
            raise ValueError("normal form contains an identity or Delta factor")
        if s.atom_norm != S._norm(s.payload):
            raise ValueError("stale atom norm on a factor")
    for a, b in zip(g.factors, g.factors[1:]):
        if S.meet(S.right_complement(a), b) != identity:
            raise ValueError(f"adjacent pair not left-weighted: {a}, {b}")
