"""Buchberger engine: frozen examples, determinism, and oracle cross-checks.

The reduced monic basis is the canonical certificate everything downstream
trusts, so the tests here hammer on uniqueness (permute and rescale the
generators, shuffle reduction order) and on agreement with a brute-force
membership oracle that knows nothing about S-polynomials.
"""

import random

import pytest

from spinring import (
    ContextMismatch,
    GroebnerBasis,
    Ideal,
    Polynomial,
    RingContext,
    RingError,
    buchberger,
    builtin,
    divide,
    groebner_basis,
    is_member,
    normal_form,
    s_polynomial,
)

from oracles import brute_force_member, random_ideal, random_member, random_polynomial

XY = RingContext(("x", "y"))
X, Y = XY.variable("x"), XY.variable("y")


def small_ideal() -> Ideal:
    return Ideal(XY, (X**2 - Y, X * Y - 1))


def test_small_example_frozen():
    gb = buchberger(small_ideal())
    assert [str(g) for g in gb] == ["x^2 - y", "x*y - 1", "y^2 - x"]


def test_s_polynomial_example():
    s = s_polynomial(X**2 - Y, X * Y - 1)
    assert s == X - Y**2
    assert str(s) == "-y^2 + x"


def test_s_polynomial_context_mismatch():
    other = RingContext(("x", "y"), order="lex")
    with pytest.raises(ContextMismatch):
        s_polynomial(X, other.variable("x"))


def test_ideal_rejects_zero_generator():
    with pytest.raises(RingError, match="nonzero"):
        Ideal(XY, (X, XY.zero()))


def test_ideal_rejects_foreign_generator():
    other = RingContext(("x", "y"), order="lex")
    with pytest.raises(ContextMismatch):
        Ideal(XY, (other.variable("x"),))


def test_buchberger_requires_generators():
    with pytest.raises(RingError, match="at least one generator"):
        buchberger(Ideal(XY, ()))


def reduced_invariants(gb: GroebnerBasis) -> None:
    ctx = gb.context
    lms = gb.leading_monomials()
    assert list(lms) == sorted(lms, key=ctx.sort_key, reverse=True)
    for g in gb:
        assert g.leading_coefficient() == 1
    for i, g in enumerate(gb.elements):
        others = [h for j, h in enumerate(gb.elements) if j != i]
        assert normal_form(g, others) == g  # no term reducible elsewhere


def test_builtin_bases_are_reduced():
    for component in ("even", "odd"):
        reduced_invariants(groebner_basis(component))


def test_idempotent_on_own_elements():
    for ideal in (small_ideal(), builtin("even").ideal, builtin("odd").ideal):
        gb = buchberger(ideal)
        again = buchberger(Ideal(ideal.context, gb.elements))
        assert again == gb


def test_unique_under_permutation_and_rescaling():
    rng = random.Random(20260819)
    for ideal in (small_ideal(), builtin("even").ideal, builtin("odd").ideal):
        reference = buchberger(ideal)
        gens = list(ideal.generators)
        for _ in range(4):
            rng.shuffle(gens)
            scaled = tuple(g * rng.choice([2, -1, 3, -5, 7]) for g in gens)
            assert buchberger(Ideal(ideal.context, scaled)) == reference


def test_normal_form_confluent_under_basis_shuffle():
    rng = random.Random(7)
    gb = groebner_basis("even")
    ctx = gb.context
    for _ in range(30):
        f = random_polynomial(rng, ctx, max_degree=4, max_terms=6)
        reference = gb.normal_form(f)
        basis = list(gb.elements)
        for _ in range(5):
            rng.shuffle(basis)
            assert normal_form(f, basis) == reference


def test_division_re_expands():
    rng = random.Random(11)
    gb = groebner_basis("odd")
    ctx = gb.context
    for _ in range(40):
        f = random_polynomial(rng, ctx, max_degree=4, max_terms=6)
        quotients, remainder = divide(f, gb.elements)
        total = remainder
        for q, g in zip(quotients, gb.elements):
            total = total + q * g
        assert total == f


def test_normal_form_idempotent():
    rng = random.Random(13)
    gb = groebner_basis("even")
    for _ in range(30):
        f = random_polynomial(rng, gb.context, max_degree=4, max_terms=6)
        r = gb.normal_form(f)
        assert gb.normal_form(r) == r


def test_basis_elements_reduce_to_zero():
    for component in ("even", "odd"):
        ideal = builtin(component).ideal
        gb = groebner_basis(component)
        for g in ideal.generators:
            assert gb.contains(g)


def test_membership_agrees_with_brute_force():
    rng = random.Random(424242)
    for _ in range(20):
        ideal = random_ideal(rng)
        member = random_member(rng, ideal)
        assert is_member(member, ideal)
        assert brute_force_member(member, ideal)
        probe = random_polynomial(rng, ideal.context, max_degree=2, max_terms=3)
        assert is_member(probe, ideal) == brute_force_member(probe, ideal)


def test_principal_ideal_membership():
    rng = random.Random(99)
    g = X**2 + 3 * X * Y - Y
    ideal = Ideal(XY, (g,))
    for _ in range(10):
        f = random_polynomial(rng, XY, max_degree=3, max_terms=4)
        assert is_member(f * g, ideal)
    assert not is_member(X, ideal)


def test_normal_form_of_zero():
    gb = groebner_basis("even")
    assert gb.normal_form(gb.context.zero()).is_zero


def test_lex_order_eliminates():
    ctx = RingContext(("x", "y"), order="lex")
    x, y = ctx.variable("x"), ctx.variable("y")
    gb = buchberger(Ideal(ctx, (x**2 - y, x * y - 1)))
    assert [str(g) for g in gb] == ["x - y^2", "y^3 - 1"]
    assert gb.contains(x**2 - y)
    assert gb.contains(x * y - 1)
