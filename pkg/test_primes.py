"""Tests for minimal primes and symbolic powers."""
import random

import pytest

from models.errors import DomainError
from models.monomial import fiber_product_ideal, is_subideal, minimalize, power
from models.vertices import from_mask, to_mask
from services.primes import (
    SymbolicPower,
    fiber_product_primes,
    minimal_primes,
    minimal_transversals,
    prime_power_ideal,
    symbolic_membership,
    symbolic_power_by_intersection,
    symbolic_power_ideal,
)


def as_lists(primes):
    return [[v + 1 for v in from_mask(p)] for p in primes]


def random_squarefree(rng, n):
    gens = []
    for _ in range(rng.randint(1, 4)):
        chosen = rng.sample(range(n), rng.randint(1, min(3, n)))
        gens.append(tuple(1 if i in chosen else 0 for i in range(n)))
    return minimalize(gens, n=n)


def test_minimal_transversals():
    edges = [to_mask([0, 1]), to_mask([1, 2])]
    assert sorted(minimal_transversals(edges)) == sorted([to_mask([1]), to_mask([0, 2])])
    assert minimal_transversals([]) == [0]


def test_minimal_primes_of_path(ideal):
    I = ideal("n=4; x1*x2, x2*x3, x3*x4")
    assert as_lists(minimal_primes(I)) == [[1, 3], [2, 3], [2, 4]]


def test_minimal_primes_rejects_non_squarefree(ideal):
    with pytest.raises(DomainError):
        minimal_primes(ideal("n=2; x1^2"))
    with pytest.raises(DomainError):
        minimal_primes(ideal("n=2; 1"))
    with pytest.raises(DomainError):
        minimal_primes(ideal("n=2; 0"))


def test_symbolic_membership(ideal):
    triangle = ideal("n=3; x1*x2, x2*x3, x1*x3")
    # x1 x2 x3 is in the second symbolic power of the triangle but not its square.
    assert symbolic_membership(triangle, 2, (1, 1, 1))
    assert not power(triangle, 2).contains((1, 1, 1))
    assert not symbolic_membership(triangle, 2, (1, 1, 0))
    with pytest.raises(DomainError):
        symbolic_membership(triangle, 0, (1, 1, 1))
    with pytest.raises(DomainError):
        symbolic_membership(triangle, 2, (1, -1, 1))


def test_symbolic_power_of_triangle(ideal):
    triangle = ideal("n=3; x1*x2, x2*x3, x1*x3")
    assert symbolic_power_ideal(triangle, 2) == ideal("n=3; x1*x2*x3, x1^2*x2^2, x2^2*x3^2, x1^2*x3^2")
    assert symbolic_power_ideal(triangle, 1) == triangle


def test_symbolic_power_view_localizes(ideal):
    view = SymbolicPower(ideal("n=3; x1*x2, x2*x3, x1*x3"), 2)
    test = view.membership_test((1, 0, 0))
    # Inverting x2 kills the primes (x1,x2) and (x2,x3); (x1,x3) needs degree 2 in x1, x3.
    assert not test(to_mask([1]))
    assert test(to_mask([1, 2]))
    assert view.n == 3
    assert view.rho() == (2, 2, 2)
    assert view.to_ideal() == symbolic_power_ideal(view.base, 2)


def test_prime_power_ideal(ideal):
    assert prime_power_ideal(3, to_mask([0, 2]), 2) == ideal("n=3; x1^2, x1*x3, x3^2")


@pytest.mark.parametrize("seed", range(8))
def test_box_search_matches_intersection(seed):
    rng = random.Random(seed)
    I = random_squarefree(rng, rng.randint(2, 5))
    s = rng.randint(1, 3)
    assert symbolic_power_ideal(I, s) == symbolic_power_by_intersection(I, s)


def test_fiber_product_primes(ideal):
    I, J = ideal("n=4; x1*x2"), ideal("n=4; x3*x4")
    expected = minimal_primes(fiber_product_ideal(I, J, 2))
    assert fiber_product_primes(I, J, 2) == expected
    assert as_lists(expected) == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]


def test_fiber_product_primes_whole_block(ideal):
    # x1 alone has the prime (x1) = X, so X + Y is not minimal.
    I, J = ideal("n=3; x1"), ideal("n=3; x2*x3")
    assert fiber_product_primes(I, J, 1) == minimal_primes(fiber_product_ideal(I, J, 1))


@pytest.mark.parametrize("seed", range(8))
def test_symbolic_powers_are_nested(seed):
    rng = random.Random(seed)
    I = random_squarefree(rng, rng.randint(2, 5))
    symbolic = {s: symbolic_power_ideal(I, s) for s in range(1, 4)}
    for s in range(1, 4):
        assert is_subideal(power(I, s), symbolic[s])
        for t in range(1, s + 1):
            assert is_subideal(symbolic[s], symbolic[t]), (s, t)
