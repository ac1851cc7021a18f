from .levels import LMax, LNum, LSucc, LVar, level_eq, normalize_level
from .parse import parse_file, parse_term, tokenize
from .pretty import print_decl, print_term
from .terms import (
    App, Declaration, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Span, Var,
    alpha_equal, instantiate, shift, subst_levels,
)
