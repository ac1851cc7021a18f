import pytest

from torz.checker import Environment, check, normalize, normalize_by_steps
from torz.syntax import alpha_equal, parse_term
from torz.syntax.terms import App, Global
from torz.testkit import (
    Lit, Minus, Neg, Plus, Pred, Succ, decode_numeral, encode, enumerate_typed,
    enumerate_z_exprs, expected_iteration, gen_typed_term, gen_z_expr, int_term,
    negative_cases, typed_sample, z_oracle_eval, z_sample,
)
from torz.testkit.zexpr import decode_nat, nat_term, size

E = Environment("jne")


class TestIntegerOracle:
    @pytest.mark.parametrize("expr,value", [
        (Succ(Lit(-1)), 0),
        (Neg(Neg(Lit(7))), 7),
        (Minus(Lit(3), Lit(5)), -2),
        (Plus(Pred(Lit(0)), Lit(4)), 3),
    ])
    def test_examples(self, expr, value):
        assert z_oracle_eval(expr) == value

    def test_literal_bound(self):
        Lit(10 ** 6)
        with pytest.raises(ValueError):
            Lit(-(10 ** 6) - 1)

    def test_numerals(self):
        assert int_term(0) == Global("zZero")
        assert int_term(1) == App(Global("zPos"), Global("zeroN"))
        assert int_term(-2) == App(Global("zNeg"), App(Global("succN"), Global("zeroN")))
        for n in range(-30, 31):
            assert decode_numeral(int_term(n)) == n

    @pytest.mark.parametrize("src", ["zPos", "succN zeroN", "zPos zZero", "zNeg x"])
    def test_decode_rejects_non_canonical(self, src):
        with pytest.raises(ValueError):
            decode_numeral(parse_term(src, scope=["x"]))

    def test_decode_nat(self):
        assert decode_nat(nat_term(5)) == 5
        with pytest.raises(ValueError):
            decode_nat(Global("zZero"))

    def test_encode(self):
        assert encode(Minus(Lit(1), Lit(0))) == App(App(Global("minusZ"), int_term(1)), int_term(0))


class TestZGeneration:
    def test_deterministic(self):
        assert gen_z_expr(42, 7) == gen_z_expr(42, 7)
        assert list(z_sample(60, seed=3)) == list(z_sample(60, seed=3))

    def test_requested_size(self):
        for seed in range(50):
            assert size(gen_z_expr(seed, 6)) == 6

    def test_size_bounds(self):
        with pytest.raises(ValueError):
            gen_z_expr(0, 201)

    def test_enumeration_counts(self):
        lits = 5
        # one operation: a unary op on a literal, or a binary op on two literals
        one = 3 * lits + 2 * lits * lits
        assert len(list(enumerate_z_exprs(1))) == lits + one

    def test_sample_starts_exhaustive(self):
        small = list(enumerate_z_exprs(2))
        got = list(z_sample(len(small) + 10))
        assert got[:len(small)] == small and len(got) == len(small) + 10


class TestTypedGeneration:
    def test_deterministic(self):
        assert gen_typed_term(9, 3) == gen_typed_term(9, 3)

    def test_well_typed_and_reduction_agrees(self):
        for ctx, t, ty in typed_sample(120, seed=1):
            check(E, list(ctx), t, ty)
            nf = normalize(E, list(ctx), t)
            assert alpha_equal(nf, normalize_by_steps(E, t)) or alpha_equal(
                normalize(E, list(ctx), normalize_by_steps(E, t)), nf)

    def test_enumeration_is_complete_for_fuel_zero(self):
        # closed natural numbers without eliminations: just zeroN under fuel 0
        got = [t for _, t, _ in enumerate_typed(0)]
        assert got and all(isinstance(t, (Global, App)) for t in got)


class TestOtherOracles:
    def test_iteration(self):
        p0 = Global("p0")
        assert expected_iteration(2, p0) == App(Global("succN"), App(Global("succN"), p0))
        assert expected_iteration(-1, p0) == App(Global("predN"), p0)
        assert expected_iteration(0, p0) == p0

    def test_negative_corpus_metadata(self):
        cases = negative_cases()
        assert len(cases) >= 20
        for c in cases:
            assert c.path.exists() and c.line >= 1 and c.col >= 1
            assert c.exit_code == (2 if c.code.startswith("parse/") else 1)
