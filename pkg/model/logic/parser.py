"""
Surface syntax for formulas.

    bot | top | ibd(N) | forall x. P | P \\/ Q | P /\\ Q | P => Q
    gamma(P, Q) | const(NAME) | x | (P)

N is -inf, inf or a natural number. ``=>`` binds weakest and associates to
the right; ``forall`` extends as far right as possible.
"""

import re
from typing import List, Mapping, Optional, Tuple

from model.errors import FormulaSyntaxError
from model.logic.formula import (And, Bottom, ConstSubterminal, ForallOmega, Formula, Implies, Or, Top, Var,
                                 gamma, ibd)
from model.order import parse_extended
from model.presheaf.omega import ObjectSieve

_TOKEN = re.compile(r"\s*(?:(?P<op>=>|\\/|/\\|[(),.])|(?P<num>-?inf\b|\d+)|(?P<word>[A-Za-z_][\w']*))")
_KEYWORDS = {"bot", "top", "ibd", "forall", "gamma", "const"}


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, sieves: Mapping[str, ObjectSieve]):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.sieves = sieves

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def accept(self, value: str) -> bool:
        token = self.peek()
        if token is not None and token[1] == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            token = self.peek()
            where = f"{token[1]!r} at offset {token[2]}" if token else "end of input"
            raise FormulaSyntaxError(f"expected {value!r}, found {where}")

    def word(self) -> str:
        token = self.peek()
        if token is None or token[0] != "word" or token[1] in _KEYWORDS:
            raise FormulaSyntaxError(f"expected a name in {self.text!r}")
        self.pos += 1
        return token[1]

    def parse(self) -> Formula:
        phi = self.implication()
        if self.peek() is not None:
            token = self.peek()
            raise FormulaSyntaxError(f"unexpected {token[1]!r} at offset {token[2]}")
        return phi

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.accept("=>"):
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        phi = self.conjunction()
        while self.accept("\\/"):
            phi = Or(phi, self.conjunction())
        return phi

    def conjunction(self) -> Formula:
        phi = self.unary()
        while self.accept("/\\"):
            phi = And(phi, self.unary())
        return phi

    def unary(self) -> Formula:
        if self.accept("forall"):
            var = self.word()
            self.expect(".")
            return ForallOmega(var, self.implication())
        return self.atom()

    def atom(self) -> Formula:
        token = self.peek()
        if token is None:
            raise FormulaSyntaxError("unexpected end of formula")
        kind, value, offset = token
        if self.accept("("):
            phi = self.implication()
            self.expect(")")
            return phi
        if kind != "word":
            raise FormulaSyntaxError(f"unexpected {value!r} at offset {offset}")
        self.pos += 1
        if value == "bot":
            return Bottom()
        if value == "top":
            return Top()
        if value == "ibd":
            self.expect("(")
            number = self.peek()
            if number is None or number[0] != "num":
                raise FormulaSyntaxError("ibd needs -inf, inf or a natural number")
            self.pos += 1
            self.expect(")")
            return ibd(parse_extended(number[1]))
        if value == "gamma":
            self.expect("(")
            left = self.implication()
            self.expect(",")
            right = self.implication()
            self.expect(")")
            return gamma(left, right)
        if value == "const":
            self.expect("(")
            name = self.word()
            self.expect(")")
            if name not in self.sieves:
                raise FormulaSyntaxError(f"unknown object sieve {name!r}")
            return ConstSubterminal(self.sieves[name], name)
        if value == "forall":
            raise FormulaSyntaxError(f"misplaced forall at offset {offset}")
        return Var(value)


def parse_formula(text: str, sieves: Optional[Mapping[str, ObjectSieve]] = None) -> Formula:
    """
    Parse the surface syntax.

    Raises:
        FormulaSyntaxError: malformed text or an unknown const(...) name
    """
    return _Parser(text, sieves or {}).parse()
