"""Lexer and recursive-descent parser for the kernel's concrete syntax.

Identifiers are resolved while parsing: bound names become de Bruijn
indices, everything else must name a known global (a primitive, a name from
the caller-supplied environment, or a declaration anywhere in the file).
Whether a global is *defined yet* is the checker's business.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional

from ..diagnostics import Diagnostic, ParseError
from .levels import LMax, LNum, LSucc, LVar
from .terms import (
    App, Declaration, Fst, Global, Lam, Pair, Pi, Sigma, Snd, Sort, Span, Var, shift,
)

KEYWORDS = {"def", "axiom", "fun", "Type", "fst", "snd"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<sym>:=|->|=>|\+1|[(){}<>,:*])
  | (?P<nat>[0-9]+)
  | (?P<id>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

_OPEN = {"(": ")", "{": "}", "<": ">"}
_CLOSE = {v: k for k, v in _OPEN.items()}


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "id" | "nat" | "sym" | "eof"
    text: str
    line: int
    col: int


def tokenize(source: str, file: Optional[str] = None) -> List[Token]:
    toks: List[Token] = []
    line, col, pos = 1, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if not m:
            raise ParseError(Diagnostic(file, line, col, None, "parse/lexical",
                                        f"unexpected character {source[pos]!r}"))
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind in ("sym", "nat", "id"):
                toks.append(Token(kind, text, line, col))
            col += len(text)
        pos = m.end()
    toks.append(Token("eof", "", line, col))
    return toks


def _check_balance(toks: List[Token], file) -> None:
    stack: List[Token] = []
    for t in toks:
        if t.kind != "sym":
            continue
        if t.text in _OPEN:
            stack.append(t)
        elif t.text in _CLOSE:
            if not stack or stack[-1].text != _CLOSE[t.text]:
                raise ParseError(Diagnostic(file, t.line, t.col, None, "parse/unbalanced",
                                            f"unmatched {t.text!r}"))
            stack.pop()
    if stack:
        t = stack[-1]
        raise ParseError(Diagnostic(file, t.line, t.col, None, "parse/unbalanced",
                                    f"unclosed {t.text!r}"))


def scan_declared_names(toks: List[Token]) -> dict:
    """Map of ``name -> level arity`` for every declaration header in a token stream."""
    out = {}
    for i, t in enumerate(toks):
        if t.kind == "id" and t.text in ("def", "axiom") and toks[i + 1].kind == "id":
            arity = 0
            j = i + 2
            if toks[j].text == "{":
                j += 1
                while toks[j].kind == "id":
                    arity += 1
                    j += 1
            out.setdefault(toks[i + 1].text, arity)
    return out


class Parser:
    def __init__(self, toks: List[Token], file: Optional[str], known: Mapping[str, int]):
        self.toks = toks
        self.i = 0
        self.file = file
        self.known = known
        self.scope: List[Optional[str]] = []
        self.level_names: tuple = ()
        self.current: Optional[str] = None

    # -- token helpers -------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, code: str, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        return ParseError(Diagnostic(self.file, tok.line, tok.col, self.current, code, msg))

    def unexpected(self, what: str):
        if self.tok.kind == "eof":
            return self.error("parse/unexpected-eof", f"unexpected end of input, expected {what}")
        return self.error("parse/unexpected-token", f"expected {what}, found {self.tok.text!r}")

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("sym", "id") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.unexpected(repr(text))
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> Token:
        t = self.tok
        if t.kind != "id" or t.text in KEYWORDS:
            raise self.unexpected("an identifier")
        self.i += 1
        return t

    def span(self, t: Token) -> Span:
        return Span(t.line, t.col)

    # -- declarations --------------------------------------------------
    def parse_decls(self) -> List[Declaration]:
        decls: List[Declaration] = []
        seen = set()
        while self.tok.kind != "eof":
            start = self.tok
            if not (self.at("def") or self.at("axiom")):
                raise self.unexpected("'def' or 'axiom'")
            kind = self.tok.text
            self.i += 1
            name_tok = self.ident()
            name = name_tok.text
            self.current = name
            if name in seen:
                raise self.error("parse/duplicate-name", f"duplicate declaration {name!r}", name_tok)
            seen.add(name)
            lvl = []
            if self.at("{"):
                self.i += 1
                while not self.at("}"):
                    t = self.ident()
                    if t.text in lvl:
                        raise self.error("parse/duplicate-name", f"duplicate level variable {t.text!r}", t)
                    lvl.append(t.text)
                self.expect("}")
                if not lvl:
                    raise self.error("parse/unexpected-token", "empty level parameter list")
            self.level_names = tuple(lvl)
            self.expect(":")
            ty = self.parse_term()
            body = None
            if kind == "def":
                self.expect(":=")
                body = self.parse_term()
            elif self.at(":="):
                raise self.error("parse/unexpected-token", "an axiom has no body")
            decls.append(Declaration(name, tuple(lvl), kind, ty, body,
                                     self.span(start), self.file))
            self.current = None
        return decls

    # -- levels --------------------------------------------------------
    def parse_level(self):
        t = self.tok
        if t.kind == "nat":
            self.i += 1
            return LNum(int(t.text))
        if t.kind == "id" and t.text not in KEYWORDS and t.text != "max":
            self.i += 1
            if t.text not in self.level_names:
                raise self.error("parse/unknown-level", f"unknown level variable {t.text!r}", t)
            return LVar(self.level_names.index(t.text))
        if self.at("("):
            self.i += 1
            if self.at("max"):
                self.i += 1
                a = self.parse_level()
                b = self.parse_level()
                self.expect(")")
                return LMax(a, b)
            a = self.parse_level()
            self.expect("+1")
            self.expect(")")
            return LSucc(a)
        raise self.unexpected("a level")

    # -- terms ---------------------------------------------------------
    def lookup(self, tok: Token):
        name = tok.text
        for k in range(len(self.scope) - 1, -1, -1):
            if self.scope[k] == name:
                return Var(len(self.scope) - 1 - k, self.span(tok))
        if name not in self.known:
            raise self.error("parse/unknown-identifier", f"unknown identifier {name!r}", tok)
        arity = self.known[name]
        levels = ()
        if self.at("{"):
            self.i += 1
            ls = []
            while not self.at("}"):
                ls.append(self.parse_level())
            self.expect("}")
            levels = tuple(ls)
        if len(levels) != arity:
            raise self.error("parse/level-arity",
                             f"{name!r} takes {arity} level argument(s), got {len(levels)}", tok)
        return Global(name, levels, self.span(tok))

    def is_binder_group(self) -> bool:
        if not self.at("("):
            return False
        k = 1
        while self.peek(k).kind == "id" and self.peek(k).text not in KEYWORDS:
            k += 1
        return k > 1 and self.peek(k).kind == "sym" and self.peek(k).text == ":"

    def parse_binder_group(self):
        self.expect("(")
        names = []
        while not self.at(":"):
            names.append(self.ident())
        self.expect(":")
        ty = self.parse_term()
        self.expect(")")
        return names, ty

    def parse_telescope(self):
        """Binder groups; pushes names onto scope; returns [(name, type, tok)]."""
        out = []
        while self.is_binder_group():
            names, ty = self.parse_binder_group()
            for k, n in enumerate(names):
                # the shared type was parsed before any of these names were bound
                out.append((n.text, shift(ty, k), n))
                self.scope.append(n.text)
        return out

    def parse_term(self):
        start = self.tok
        if self.at("fun"):
            self.i += 1
            if not self.is_binder_group():
                raise self.unexpected("a binder '(x : A)'")
            tele = self.parse_telescope()
            self.expect("=>")
            body = self.parse_term()
            for n, ty, tok in reversed(tele):
                self.scope.pop()
                body = Lam(n, ty, body, self.span(tok))
            return body
        if self.is_binder_group():
            save_i, save_scope = self.i, list(self.scope)
            tele = self.parse_telescope()
            if self.at("->") or self.at("*"):
                op = self.tok.text
                self.i += 1
                body = self.parse_term()
                ctor = Pi if op == "->" else Sigma
                for n, ty, tok in reversed(tele):
                    self.scope.pop()
                    body = ctor(n, ty, body, self.span(tok))
                return body
            # a parenthesised annotation-looking term that is not a binder
            self.i, self.scope = save_i, save_scope
            raise self.unexpected("'->' or '*' after binder")
        lhs = self.parse_prod()
        if self.at("->"):
            self.i += 1
            self.scope.append(None)
            rhs = self.parse_term()
            self.scope.pop()
            return Pi("_", lhs, rhs, self.span(start))
        return lhs

    def parse_prod(self):
        start = self.tok
        lhs = self.parse_app()
        if self.at("*"):
            self.i += 1
            self.scope.append(None)
            rhs = self.parse_prod_rhs()
            self.scope.pop()
            return Sigma("_", lhs, rhs, self.span(start))
        return lhs

    def parse_prod_rhs(self):
        if self.is_binder_group():
            return self.parse_term()
        return self.parse_prod()

    def starts_atom(self) -> bool:
        t = self.tok
        if t.kind == "id":
            return t.text not in ("def", "axiom", "fun")
        return t.kind == "sym" and t.text in ("(", "<")

    def parse_app(self):
        if not self.starts_atom():
            raise self.unexpected("a term")
        head = self.parse_atom()
        while self.starts_atom():
            arg = self.parse_atom()
            head = App(head, arg, head.span)
        return head

    def parse_atom(self):
        t = self.tok
        if t.kind == "id":
            if t.text == "Type":
                self.i += 1
                return Sort(self.parse_level(), self.span(t))
            if t.text in ("fst", "snd"):
                self.i += 1
                if not self.starts_atom():
                    raise self.unexpected(f"an argument to {t.text}")
                arg = self.parse_atom()
                return (Fst if t.text == "fst" else Snd)(arg, self.span(t))
            if t.text in KEYWORDS:
                raise self.unexpected("a term")
            self.i += 1
            return self.lookup(t)
        if self.at("("):
            self.i += 1
            inner = self.parse_term()
            self.expect(")")
            return inner
        if self.at("<"):
            self.i += 1
            a = self.parse_term()
            self.expect(",")
            b = self.parse_term()
            self.expect(">")
            return Pair(a, b, self.span(t))
        raise self.unexpected("a term")


def _default_known() -> dict:
    from ..checker.primitives import PRIMITIVE_ARITY
    return dict(PRIMITIVE_ARITY)


def parse_file(source: str, file_name: Optional[str] = None,
               known: Optional[Mapping[str, int]] = None) -> List[Declaration]:
    """Parse a whole file of declarations.

    ``known`` maps already-available global names to their level arity; the
    primitives are always included, and so is every name declared in the file.
    Raises :class:`ParseError` on failure.
    """
    toks = tokenize(source, file_name)
    _check_balance(toks, file_name)
    names = _default_known()
    if known:
        names.update(known)
    names.update(scan_declared_names(toks))
    return Parser(toks, file_name, names).parse_decls()


def parse_term(source: str, scope: Iterable[str] = (), known: Optional[Mapping[str, int]] = None,
               level_names: Iterable[str] = (), file_name: Optional[str] = None):
    """Parse a single term in a context of bound names (outermost first)."""
    toks = tokenize(source, file_name)
    _check_balance(toks, file_name)
    names = _default_known()
    if known:
        names.update(known)
    p = Parser(toks, file_name, names)
    p.scope = list(scope)
    p.level_names = tuple(level_names)
    t = p.parse_term()
    if p.tok.kind != "eof":
        raise p.unexpected("end of input")
    return t
