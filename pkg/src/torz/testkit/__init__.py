"""Oracles, generators and the negative corpus used by the test suites."""
from .negative import NegativeCase, negative_cases, negative_dir
from .oracles import expected_iteration, iterate_term
from .terms import (
    enumerate_typed, gen_raw_decl, gen_typed_sample, gen_typed_term, typed_sample,
)
from .zexpr import (
    Lit, Minus, Neg, Plus, Pred, Succ, ZExpr, decode_numeral, encode, enumerate_z_exprs,
    gen_z_expr, int_term, z_oracle_eval, z_sample,
)

__all__ = [
    "NegativeCase", "negative_cases", "negative_dir",
    "expected_iteration", "iterate_term",
    "enumerate_typed", "gen_raw_decl", "gen_typed_sample", "gen_typed_term", "typed_sample",
    "Lit", "Minus", "Neg", "Plus", "Pred", "Succ", "ZExpr", "decode_numeral", "encode",
    "enumerate_z_exprs", "gen_z_expr", "int_term", "z_oracle_eval", "z_sample",
]
