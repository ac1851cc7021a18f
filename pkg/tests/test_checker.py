import pytest

from conftest import deep, term
from torz.checker import (
    FIRED, Environment, check, check_declaration, convertible, infer, normalize, whnf,
)
from torz.diagnostics import TypeCheckError
from torz.syntax import alpha_equal, parse_file, parse_term, print_term
from torz.syntax.terms import App, Global, unapply
from torz.testkit import int_term

E = Environment("jne")
EJ = Environment("jde")


def p(src, scope=(), env=E):
    return term(env, src, scope)


def ctx_of(*pairs, env=E):
    """Context from (name, type source) pairs, outermost first."""
    out, names = [], []
    for n, src in pairs:
        out.append((n, p(src, names, env)))
        names.append(n)
    return out, names


class TestInfer:
    def test_polymorphic_identity(self):
        ty = infer(E, [], p("fun (A : Type 0) (x : A) => x"))
        assert alpha_equal(ty, p("(A : Type 0) -> A -> A"))

    def test_one(self):
        assert infer(E, [], p("zPos zeroN")) == Global("Z")

    def test_not_a_function(self):
        with pytest.raises(TypeCheckError) as e:
            infer(E, [], p("Type 0 Type 0"))
        assert e.value.code == "type/not-a-function"

    def test_universe_rule(self):
        ty = infer(E, [], p("(A : Type 1) -> Type 0"))
        assert alpha_equal(ty, p("Type 2"))
        ty = infer(E, [], p("(A : Type 0) * Type 2"))
        assert alpha_equal(ty, p("Type 3"))

    def test_level_arity(self):
        with pytest.raises(TypeCheckError) as e:
            infer(E, [], App(Global("Id", ()), Global("Nat")))
        assert e.value.code == "type/level-arity"

    def test_unbound_global(self):
        with pytest.raises(TypeCheckError) as e:
            infer(E, [], Global("nowhere"))
        assert e.value.code == "type/unbound-global"

    def test_pair_without_expected_type(self):
        ty = infer(E, [], p("<zeroN, zZero>"))
        assert alpha_equal(ty, p("Nat * Z"))

    def test_snd_depends_on_fst(self):
        ctx, names = ctx_of(("q", "(n : Nat) * Id {0} Nat n n"))
        ty = infer(E, ctx, p("snd q", names))
        assert alpha_equal(ty, p("Id {0} Nat (fst q) (fst q)", names))


class TestCheck:
    def test_lambda(self):
        check(E, [], p("fun (x : Nat) => x"), p("Nat -> Nat"))

    def test_point_constructor(self):
        check(E, [], p("tr {0} Nat zeroN"), p("Trunc {0} Nat"))

    def test_mismatch_reports_both_types(self):
        with pytest.raises(TypeCheckError) as e:
            check(E, [], p("zZero"), p("Nat"))
        d = e.value.diagnostic
        assert d.code == "type/mismatch"
        assert "expected: Nat" in d.message and "inferred: Z" in d.message
        assert "normal form" in d.message

    def test_pair_against_dependent_sigma(self):
        check(E, [], p("<zeroN, refl {0} Nat zeroN>"), p("(n : Nat) * Id {0} Nat n zeroN"))

    def test_no_cumulativity(self):
        with pytest.raises(TypeCheckError):
            check(E, [], p("Nat"), p("Type 1"))

    def test_type_in_type_rejected(self):
        with pytest.raises(TypeCheckError) as e:
            check(E, [], p("Type 0"), p("Type 0"))
        assert e.value.code == "type/universe-mismatch"

    def test_check_up_to_conversion(self, env_int):
        check(env_int, [], p("refl {0} Z zZero", env=env_int),
              p("Id {0} Z (succZ (zNeg zeroN)) zZero", env=env_int))


class TestWhnf:
    def test_zind_iota(self):
        ctx, names = ctx_of(("P", "Z -> Type 0"), ("pz", "P zZero"), ("pp", "(n : Nat) -> P (zPos n)"),
                            ("pn", "(n : Nat) -> P (zNeg n)"), ("k", "Nat"))
        t = p("zInd {0} P pz pp pn (zPos k)", names)
        assert whnf(E, t) == p("pp k", names)

    def _trunc_ctx(self):
        return ctx_of(("A", "Type 0"), ("P", "Type 0"), ("B", "Trunc {0} A -> Type 0"),
                      ("hP", "(x y : P) -> Id {0} P x y"),
                      ("hB", "(z : Trunc {0} A) (x y : B z) -> Id {0} (B z) x y"),
                      ("g", "A -> P"), ("gB", "(a : A) -> B (tr {0} A a)"), ("a", "A"))

    def test_trunc_rec_computes_in_both_modes(self):
        _, names = self._trunc_ctx()
        t = p("truncRec {0 0} A P hP g (tr {0} A a)", names)
        for env in (E, EJ):
            assert whnf(env, t) == p("g a", names)

    def test_trunc_ind_only_in_jde(self):
        _, names = self._trunc_ctx()
        t = p("truncInd {0 0} A B hB gB (tr {0} A a)", names)
        FIRED.clear()
        assert whnf(E, t) == t
        assert FIRED["truncInd"] == 0
        assert whnf(EJ, t) == p("gB a", names)
        assert FIRED["truncInd"] == 1

    def test_no_k(self):
        _, names = ctx_of(("A", "Type 0"), ("a", "A"), ("C", "(y : A) -> Id {0} A a y -> Type 0"),
                          ("c", "C a (refl {0} A a)"), ("p", "Id {0} A a a"))
        t = p("J {0 0} A a C c a p", names)
        assert whnf(E, t) == t
        assert whnf(E, p("J {0 0} A a C c a (refl {0} A a)", names)) == p("c", names)

    def test_nat_iota(self):
        _, names = ctx_of(("P", "Nat -> Type 0"), ("z", "P zeroN"), ("s", "(n : Nat) -> P n -> P (succN n)"),
                          ("n", "Nat"))
        t = p("natInd {0} P z s (succN n)", names)
        assert whnf(E, t) == p("s n (natInd {0} P z s n)", names)

    def test_delta(self, env_int):
        assert whnf(env_int, Global("one")) == p("zPos zeroN")


class TestNormalize:
    def test_successor_of_minus_one(self, env_int):
        t = p("succZ (zNeg zeroN)", env=env_int)
        assert normalize(env_int, [], t) == Global("zZero")

    def test_one_plus_one(self, env_int):
        t = p("plusZ one one", env=env_int)
        assert normalize(env_int, [], t) == p("zPos (succN zeroN)")

    def test_negation_involutive_on_closed_terms(self, env_int):
        for n in range(-50, 50):
            x = int_term(n)
            t = App(Global("negZ"), App(Global("negZ"), x))
            assert normalize(env_int, [], t) == normalize(env_int, [], x)

    def test_idempotent(self, env_int):
        t = p("fun (z : Z) => plusZ z two", env=env_int)
        n1 = normalize(env_int, [], t)
        assert alpha_equal(normalize(env_int, [], n1), n1)

    def test_open_terms_stay_stuck(self):
        _, names = ctx_of(("n", "Nat"))
        t = p("natInd {0} (fun (_ : Nat) => Nat) zeroN (fun (m : Nat) (r : Nat) => succN r) n", names)
        assert normalize(E, [("n", Global("Nat"))], t) == t


class TestConvertible:
    def test_eta_functions(self):
        ctx, names = ctx_of(("A", "Type 0"), ("f", "A -> A"))
        assert convertible(E, ctx, p("fun (x : A) => f x", names), p("f", names))

    def test_eta_pairs(self):
        ctx, names = ctx_of(("q", "Nat * Nat"))
        assert convertible(E, ctx, p("<fst q, snd q>", names), p("q", names))

    def test_j_iota(self):
        ctx, names = ctx_of(("A", "Type 0"), ("a", "A"), ("C", "(y : A) -> Id {0} A a y -> Type 0"),
                            ("c", "C a (refl {0} A a)"))
        assert convertible(E, ctx, p("J {0 0} A a C c a (refl {0} A a)", names), p("c", names))

    def test_distinct_constructors(self):
        assert not convertible(E, [], p("zZero"), p("zPos zeroN"))

    def test_levels_compared_normalized(self):
        assert convertible(E, [], p("Type (max 0 1)"), p("Type 1"))
        assert not convertible(E, [], p("Type 0"), p("Type 1"))

    def test_trunc_ind_conversion_depends_on_mode(self):
        ctx, names = ctx_of(("A", "Type 0"), ("B", "Trunc {0} A -> Type 0"),
                            ("h", "(z : Trunc {0} A) (x y : B z) -> Id {0} (B z) x y"),
                            ("g", "(a : A) -> B (tr {0} A a)"), ("a", "A"))
        lhs = p("truncInd {0 0} A B h g (tr {0} A a)", names)
        assert not convertible(E, ctx, lhs, p("g a", names))
        ctxj, _ = ctx_of(("A", "Type 0"), ("B", "Trunc {0} A -> Type 0"),
                         ("h", "(z : Trunc {0} A) (x y : B z) -> Id {0} (B z) x y"),
                         ("g", "(a : A) -> B (tr {0} A a)"), ("a", "A"), env=EJ)
        assert convertible(EJ, ctxj, lhs, p("g a", names))


class TestDeclarations:
    def test_extend(self):
        [d] = parse_file("def id {i} : (A : Type i) -> A -> A := fun (A : Type i) (x : A) => x")
        env2 = check_declaration(E, d)
        assert "id" in env2 and "id" not in E
        assert env2["id"].kind == "def" and len(env2) == len(E) + 1

    def test_axiom_is_flagged(self):
        src = ("axiom funext {i j} : (A : Type i) (B : A -> Type j) (f g : (x : A) -> B x) ->\n"
               "  ((x : A) -> Id {j} (B x) (f x) (g x)) -> Id {(max i j)} ((x : A) -> B x) f g")
        [d] = parse_file(src)
        env2 = check_declaration(E, d)
        assert env2["funext"].is_axiom_like and env2["funext"].body is None

    def test_self_reference(self):
        [d] = parse_file("def spin : Nat := succN spin")
        with pytest.raises(TypeCheckError) as e:
            check_declaration(E, d)
        assert e.value.code == "type/unbound-global"
        assert e.value.diagnostic.definition == "spin"

    def test_duplicate(self):
        [d] = parse_file("def x : Nat := zeroN")
        env2 = check_declaration(E, d)
        with pytest.raises(TypeCheckError) as e:
            check_declaration(env2, d)
        assert e.value.code == "type/duplicate-name"

    def test_level_variables_are_opaque(self):
        # Type i is not Type 0 even though 0 is a possible instance
        [d] = parse_file("def bad {i} : Type (i +1) := Type 0")
        with pytest.raises(TypeCheckError):
            check_declaration(E, d)

    def test_level_instantiation(self):
        [d] = parse_file("def id {i} : (A : Type i) -> A -> A := fun (A : Type i) (x : A) => x")
        env2 = check_declaration(E, d)
        t = term(env2, "id {1} (Type 0) Nat")
        assert alpha_equal(infer(env2, [], t), p("Type 0"))
        with pytest.raises(TypeCheckError):
            infer(env2, [], term(env2, "id {0} (Type 0) Nat"))

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            Environment("jxe")

    def test_with_mode_shares_declarations(self, env_int):
        j = env_int.with_mode("jde")
        assert j.mode == "jde" and list(j.order) == list(env_int.order)
