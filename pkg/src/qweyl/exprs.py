"""A small expression grammar for algebra elements on the command line.

Tokens: generators x1..xn, y1..yn, the normal elements z0..zn, the formal
variables of the coefficient ring (c, q, declared unit names), the root of
unity e, and integers.  Operators: +, -, *, ^ and parentheses; ^ binds
tightest, then *, then +/-.  Example: "x1^2*y1 + (-2)*e^3*z1".
"""

import re

from .polyring import MPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([()^*+-]))")


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos and not text[pos:].strip():
            break
        if not m.group(0).strip():
            pos = m.end()
            continue
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError("unexpected input at %r" % text[pos:].strip())
    return out


class _Parser:
    def __init__(self, tokens, algebra):
        self.toks = tokens
        self.i = 0
        self.A = algebra

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            node = node * self.factor()
        return node

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            neg = False
            if (kind, val) == ("op", "-"):
                neg = True
                kind, val = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer")
            if neg:
                if len(base.terms) != 1:
                    raise ParseError("negative power of a sum")
                return base ** 0 * _invert_scalar(base, self.A) ** val
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if (kind, val) == ("op", "("):
            node = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
            return node
        if (kind, val) == ("op", "-"):
            return -self.factor()
        if kind == "int":
            return self.A.scalar(val)
        if kind == "name":
            return self.name(val)
        raise ParseError("unexpected token %r" % (val,))

    def name(self, name):
        A = self.A
        m = re.fullmatch(r"([xyz])(\d+)", name)
        if m:
            which, j = m.group(1), int(m.group(2))
            try:
                if which == "z":
                    return A.z_element(j)
                return A.generator(which, j)
            except IndexError:
                raise ParseError("index out of range in %r" % name)
        if name == "e":
            return A.scalar(A.root_pow(1))
        if name in A.coeff_ring.names:
            return A.scalar(MPoly.variable(A.coeff_ring, name, A.D))
        raise ParseError("unknown symbol %r" % name)


def _invert_scalar(el, algebra):
    key = next(iter(el.terms))
    if any(key[0]) or any(key[1]):
        raise ParseError("negative power of a non-scalar")
    inv = el.terms[key].mono_inverse()
    if inv is None:
        raise ParseError("scalar is not invertible")
    return algebra.scalar(inv)


def parse_element(text, algebra):
    """Parse an expression into a WeylElem of the given algebra."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    p = _Parser(toks, algebra)
    node = p.expr()
    if p.i != len(toks):
        raise ParseError("trailing input after expression")
    return node


def parse_scalar(text, algebra):
    """Parse an expression that must reduce to a coefficient."""
    el = parse_element(text, algebra)
    if el.is_zero:
        return MPoly.zero(algebra.coeff_ring)
    key = next(iter(el.terms))
    if len(el.terms) != 1 or any(key[0]) or any(key[1]):
        raise ParseError("expected a scalar expression")
    return el.terms[key]
