"""Concrete structures: constants, exhaustive primitive laws, product laws."""

import random

import pytest

from garside import (
    braid_structure,
    multiply,
    power,
    product_structure,
    simple_element,
    structure_from_descriptor,
    torus_structure,
)
from garside.structures import DescriptorError

from .conftest import random_word_element, simple_divisors


def test_braid_constants():
    assert braid_structure(3).delta_norm() == 3
    assert len(braid_structure(3).enumerate_simples()) == 6
    assert braid_structure(2).delta_norm() == 1
    assert len(braid_structure(2).enumerate_simples()) == 2
    assert braid_structure(4).delta_norm() == 6
    assert len(braid_structure(4).enumerate_simples()) == 24


def test_braid_unique_root_exponent():
    assert braid_structure(3).unique_root_exponent == 6
    assert braid_structure(4).unique_root_exponent == 12
    assert braid_structure(2).unique_root_exponent == 2


def test_braid_range_errors():
    with pytest.raises(ValueError):
        braid_structure(1)
    with pytest.raises(ValueError):
        braid_structure(9)
    braid_structure(9, max_strands=9)


def test_torus_constants():
    assert torus_structure(5, 3).delta_norm() == 5
    T22 = torus_structure(2, 2)
    assert T22.delta_norm() == 2
    payloads = {s.payload for s in T22.enumerate_simples()}
    assert payloads == {("e", 0), ("x", 1), ("y", 1), ("D", 0)}
    assert torus_structure(2, 3).delta_norm() == 3
    with pytest.raises(ValueError):
        torus_structure(1, 3)


def test_torus_complement_formulas():
    T = torus_structure(5, 3)
    for i in range(1, 5):
        assert T.right_complement(T.make_simple(("x", i))).payload in {("x", 5 - i), ("D", 0)}
        assert T.right_complement(T.make_simple(("x", i))) == T.left_complement(T.make_simple(("x", i)))
    for j in range(1, 3):
        expected = ("y", 3 - j) if 3 - j else ("D", 0)
        assert T.right_complement(T.make_simple(("y", j))).payload == expected


def test_torus_tau_is_identity():
    T = torus_structure(5, 3)
    for s in T.enumerate_simples():
        assert T.tau_simple(s) == s
    assert T.tau_order() == 1
    assert T.unique_root_exponent is None


def test_product_constants():
    H = torus_structure(2, 3)
    G = product_structure(H, H)
    assert G.delta_norm() == 6
    B2 = braid_structure(2)
    assert product_structure(B2, B2).delta_norm() == 2
    assert G.unique_root_exponent is None
    PB = product_structure(braid_structure(3), braid_structure(2))
    assert PB.unique_root_exponent == 6


def test_product_example_power():
    H = torus_structure(2, 3)
    G = product_structure(H, H)
    names = {a.name for a in G.atoms()}
    assert names == {"L.x", "L.y", "R.x", "R.y"}
    x = simple_element(G.atom_simple(0))   # L.x
    y = simple_element(G.atom_simple(3))   # R.y
    g = multiply(x, y)
    g6 = power(g, 6)
    assert g6.inf == 2
    assert g6.sup == 3


@pytest.mark.parametrize(
    "make",
    [
        lambda: braid_structure(3),
        lambda: braid_structure(4),
        lambda: torus_structure(5, 3),
        lambda: torus_structure(2, 2),
        lambda: product_structure(torus_structure(2, 3), braid_structure(2)),
    ],
    ids=["b3", "b4", "torus53", "torus22", "t23xb2"],
)
def test_primitive_laws_exhaustive(make):
    S = make()
    simples = S.enumerate_simples()
    identity, delta = S.identity_simple(), S.delta()
    assert S.right_complement(identity) == delta and S.right_complement(delta) == identity
    assert S.tau_simple(delta) == delta

    # s · (s^{-1} Delta) = Delta and tau is a bijection of the simples.
    for s in simples:
        assert S.simple_product(s, S.simple_left_divide(s, delta)) == delta
    assert sorted(S.tau_simple(s) for s in simples) == sorted(simples)

    # meet is associative, commutative, idempotent on a hashed sample.
    rng = random.Random(0)
    for _ in range(60):
        a, b, c = (rng.choice(simples) for _ in range(3))
        assert S.meet(a, b) == S.meet(b, a)
        assert S.meet(a, a) == a
        assert S.meet(S.meet(a, b), c) == S.meet(a, S.meet(b, c))


def test_meet_dominates_common_divisors_b4():
    S = braid_structure(4)
    rng = random.Random(1)
    simples = S.enumerate_simples()
    for _ in range(80):
        a, b = rng.choice(simples), rng.choice(simples)
        m = S.meet(a, b)
        div_a, div_b = simple_divisors(S, a), simple_divisors(S, b)
        assert m in div_a and m in div_b
        assert (div_a & div_b) <= simple_divisors(S, m)


def test_torus_floor_ceil_law():
    for N, M in ((5, 3), (3, 5), (2, 2), (4, 3)):
        T = torus_structure(N, M)
        x = simple_element(T.atom_simple(0))
        y = simple_element(T.atom_simple(1))
        for k in range(1, 4 * max(N, M) + 1):
            xk = power(x, k)
            assert xk.inf == k // N and xk.sup == -((-k) // N)
            yk = power(y, k)
            assert yk.inf == k // M and yk.sup == -((-k) // M)


def test_product_inf_sup_law():
    G = product_structure(torus_structure(2, 3), braid_structure(3))
    rng = random.Random(5)
    for _ in range(40):
        a = random_word_element(G.left, rng, max_letters=5)
        b = random_word_element(G.right, rng, max_letters=5)
        g = _pair_element(G, a, b)
        assert g.inf == min(a.inf, b.inf)
        assert g.sup == max(a.sup, b.sup)


def _pair_element(G, a, b):
    """Embed the component pair (a, b) into the product structure."""
    id_l, id_r = G.left.identity_simple(), G.right.identity_simple()
    out = multiply(
        power(simple_element(G.make_simple((G.left.delta(), id_r))), a.inf),
        power(simple_element(G.make_simple((id_l, G.right.delta()))), b.inf),
    )
    for s in a.factors:
        out = multiply(out, simple_element(G.make_simple((s, id_r))))
    for t in b.factors:
        out = multiply(out, simple_element(G.make_simple((id_l, t))))
    return out


@pytest.mark.parametrize(
    "make",
    [
        lambda: braid_structure(3),
        lambda: braid_structure(4),
        lambda: torus_structure(5, 3),
        lambda: product_structure(torus_structure(2, 3), torus_structure(2, 3)),
    ],
    ids=["b3", "b4", "torus53", "t23sq"],
)
def test_simple_norm_boundaries(make):
    S = make()
    N = S.delta_norm()
    for s in S.enumerate_simples():
        assert 0 <= s.atom_norm <= N
        assert (s.atom_norm == 0) == (s == S.identity_simple())
        assert (s.atom_norm == N) == (s == S.delta())


def test_descriptor_round_trip():
    for desc in ("braid:3", "torus:5:3", "product:(torus:2:3,torus:2:3)",
                 "product:(braid:4,product:(braid:2,torus:2:2))"):
        assert structure_from_descriptor(desc).descriptor() == desc


def test_descriptor_errors():
    for bad in ("braid:x", "torus:5", "product:braid:2", "product:(braid:2)", "wat:3"):
        with pytest.raises(DescriptorError):
            structure_from_descriptor(bad)
