"""Exact multivariate Laurent polynomials with half-integer exponents.

Exponents are stored doubled, so ``x^(1/2)`` has exponent vector ``(1,)``
and ``x`` has ``(2,)``.  Coefficients are Python integers.  Values in a
quadratic field ``Q(sqrt(rho))`` are handled by :class:`QuadValue`.

Text grammar::

    poly  := ["-"] term (("+" | "-") term)*
    term  := INT ("*" power)* | power ("*" power)*
    power := NAME ["^" exp]
    exp   := ["-"] INT | "(" ["-"] INT ["/" INT] ")"      denominator 1 or 2
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import EvaluationError, InputError, ParseError

Exponents = tuple[int, ...]


class LaurentPoly:
    """Immutable Laurent polynomial over a fixed ordered list of variable names."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, int] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(x) for x in exps)
            if len(exps) != n:
                raise InputError(f"exponent vector {exps} does not match variables {self.variables}")
            if c:
                clean[exps] = int(c)
        self.terms: dict[Exponents, int] = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> LaurentPoly:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: int) -> LaurentPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> LaurentPoly:
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], powers: Mapping[str, Fraction | int], coeff: int = 1):
        """Monomial from real exponents, e.g. ``{"x": Fraction(1, 2)}``."""
        variables = tuple(variables)
        exps = [0] * len(variables)
        for name, p in powers.items():
            if name not in variables:
                raise InputError(f"unknown variable {name!r}")
            doubled = Fraction(p) * 2
            if doubled.denominator != 1:
                raise InputError(f"exponent {p} of {name} is not a half-integer")
            exps[variables.index(name)] += int(doubled)
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def gen(cls, variables: Sequence[str], name: str) -> LaurentPoly:
        return cls.monomial(variables, {name: 1})

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise InputError(f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1 or abs(next(iter(self.terms.values()))) != 1:
                raise EvaluationError("only unit monomials can be inverted")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(x * n for x in e): c ** -n})
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, variables={self.variables})"

    def __str__(self):
        return format_poly(self)

    # -- inspection -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def exponents(self, name: str) -> list[Fraction]:
        i = self.variables.index(name)
        return sorted({Fraction(e[i], 2) for e in self.terms})

    def coefficient(self, powers: Mapping[str, Fraction | int]) -> int:
        m = LaurentPoly.monomial(self.variables, powers)
        (e, _), = m.terms.items()
        return self.terms.get(e, 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- homomorphisms ----------------------------------------------------

    def substitute(self, assignment: Mapping[str, LaurentPoly | str], target: Sequence[str]) -> LaurentPoly:
        return substitute(self, assignment, target)

    def eval_quad(self, point: Mapping[str, QuadValue | Fraction | int], radicand: Fraction | int) -> QuadValue:
        return eval_quad(self, point, radicand)

    def rename(self, variables: Sequence[str]) -> LaurentPoly:
        if len(variables) != len(self.variables):
            raise InputError("arity mismatch in rename")
        return LaurentPoly(variables, self.terms)


def substitute(p: LaurentPoly, assignment: Mapping[str, LaurentPoly | str], target: Sequence[str]) -> LaurentPoly:
    """Ring map sending each variable of ``p`` to a polynomial over ``target``.

    Unit-monomial images accept half-integer exponents.  Any other image
    (``x - 1`` say) needs the matching exponent to be a nonnegative integer.
    """
    target = tuple(target)
    images: list[LaurentPoly] = []
    for name in p.variables:
        if name not in assignment:
            raise InputError(f"no image given for variable {name!r}")
        m = assignment[name]
        if isinstance(m, str):
            m = parse_poly(m, target)
        if m.variables != target:
            raise InputError(f"image of {name!r} is not over {target}")
        images.append(m)
    if all(len(m.terms) == 1 and next(iter(m.terms.values())) == 1 for m in images):
        return _substitute_monomial(p, [next(iter(m.terms)) for m in images], target)
    total = LaurentPoly.zero(target)
    for exps, c in p.terms.items():
        term = LaurentPoly.constant(target, c)
        for name, e, img in zip(p.variables, exps, images):
            if not e:
                continue
            unit = len(img.terms) == 1 and abs(next(iter(img.terms.values()))) == 1
            if e % 2 or (e < 0 and not unit):
                raise InputError(f"exponent {Fraction(e, 2)} of {name!r} cannot be applied to its image")
            term = term * img ** (e // 2)
        total = total + term
    return total


def _substitute_monomial(p: LaurentPoly, images: list[Exponents], target: tuple[str, ...]) -> LaurentPoly:
    terms: dict[Exponents, int] = {}
    for exps, c in p.terms.items():
        out = []
        for t in range(len(target)):
            # both factors are doubled, so the product is quadrupled
            q = sum(e * img[t] for e, img in zip(exps, images))
            if q % 2:
                raise InputError(f"substitution produces a quarter-integer exponent of {target[t]}")
            out.append(q // 2)
        out = tuple(out)
        terms[out] = terms.get(out, 0) + c
    return LaurentPoly(target, terms)


# -- quadratic field values ---------------------------------------------------


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True, eq=False)
class QuadValue:
    """Exact ``u + w*sqrt(radicand)``; folded to a rational when the radicand is a square."""

    u: Fraction
    w: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    def __post_init__(self):
        u, w, r = Fraction(self.u), Fraction(self.w), Fraction(self.radicand)
        if r < 0:
            raise InputError("radicand must be nonnegative")
        root = _rational_sqrt(r)
        if root is not None:
            u, w = u + w * root, Fraction(0)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "radicand", r)

    @classmethod
    def sqrt(cls, radicand) -> QuadValue:
        return cls(Fraction(0), Fraction(1), Fraction(radicand))

    def _coerce(self, other) -> QuadValue:
        if isinstance(other, QuadValue):
            if self.w and other.w and self.radicand != other.radicand:
                raise InputError("values live in different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadValue(Fraction(other), Fraction(0), self.radicand)
        return NotImplemented

    def _field(self, other: QuadValue) -> Fraction:
        return self.radicand if self.w else other.radicand

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadValue(self.u + other.u, self.w + other.w, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.u, -self.w, self.radicand)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = self._field(other)
        return QuadValue(self.u * other.u + self.w * other.w * r, self.u * other.w + self.w * other.u, r)

    __rmul__ = __mul__

    def inverse(self) -> QuadValue:
        norm = self.u * self.u - self.w * self.w * self.radicand
        if norm == 0:
            raise EvaluationError("division by zero in quadratic field")
        return QuadValue(self.u / norm, -self.w / norm, self.radicand)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadValue:
        base = self if n >= 0 else self.inverse()
        result = QuadValue(Fraction(1), Fraction(0), self.radicand)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.w or other.w:
            return self.u == other.u and self.w == other.w and self.radicand == other.radicand
        return self.u == other.u

    def __hash__(self):
        return hash((self.u, self.w, self.radicand if self.w else 0))

    def __repr__(self):
        if not self.w:
            return f"QuadValue({self.u})"
        return f"QuadValue({self.u} + {self.w}*sqrt({self.radicand}))"


def eval_quad(p: LaurentPoly, point: Mapping[str, QuadValue | Fraction | int], radicand) -> QuadValue:
    """Evaluate ``p`` exactly in ``Q(sqrt(radicand))``; exponents must be integers."""
    radicand = Fraction(radicand)
    values = []
    for name in p.variables:
        if name not in point:
            raise InputError(f"no value given for variable {name!r}")
        val = point[name]
        if not isinstance(val, QuadValue):
            val = QuadValue(Fraction(val), Fraction(0), radicand)
        values.append(val)
    powers: list[dict[int, QuadValue]] = [{} for _ in values]
    total = QuadValue(Fraction(0), Fraction(0), radicand)
    for exps, c in p.terms.items():
        term = QuadValue(Fraction(c), Fraction(0), radicand)
        for i, e in enumerate(exps):
            if e % 2:
                raise EvaluationError(f"half-integer power of {p.variables[i]} cannot be evaluated")
            if e:
                if e not in powers[i]:
                    powers[i][e] = values[i] ** (e // 2)
                term = term * powers[i][e]
        total = total + term
    return total


# -- text format --------------------------------------------------------------


def _format_power(name: str, doubled: int) -> str:
    if doubled % 2:
        return f"{name}^({doubled}/2)"
    n = doubled // 2
    return name if n == 1 else f"{name}^{n}"


def format_poly(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for i, (exps, c) in enumerate(p.sorted_terms()):
        powers = [_format_power(v, e) for v, e in zip(p.variables, exps) if e]
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not powers else []) + powers)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                ws = len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[pos + ws]!r}", position=pos + ws)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self, value: str | None = None, kind: str | None = None) -> bool:
        if self.i >= len(self.tokens):
            return False
        k, v, _ = self.tokens[self.i]
        return (value is None or v == value) and (kind is None or k == kind)

    def position(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def take(self, value: str | None = None, kind: str | None = None) -> str:
        if not self.peek(value, kind):
            found = repr(self.tokens[self.i][1]) if self.i < len(self.tokens) else "end of input"
            raise ParseError(f"expected {value or kind}, found {found}", position=self.position())
        v = self.tokens[self.i][1]
        self.i += 1
        return v


def parse_poly(text: str, variables: Sequence[str] | None = None) -> LaurentPoly:
    """Parse the polynomial grammar.

    With ``variables=None`` the variable list is the sorted set of names used.
    """
    p = _Parser(text)
    raw: list[tuple[int, dict[str, int]]] = []
    sign = 1
    if p.peek("-"):
        p.take("-")
        sign = -1
    elif p.peek("+"):
        p.take("+")
    while True:
        raw.append(_parse_term(p, sign, variables))
        if p.peek("+"):
            p.take("+")
            sign = 1
        elif p.peek("-"):
            p.take("-")
            sign = -1
        elif p.i < len(p.tokens):
            raise ParseError(f"unexpected {p.tokens[p.i][1]!r}", position=p.position())
        else:
            break
    if variables is None:
        variables = sorted({name for _, powers in raw for name in powers})
    variables = tuple(variables)
    terms: dict[Exponents, int] = {}
    for c, powers in raw:
        e = tuple(powers.get(v, 0) for v in variables)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(variables, terms)


def _parse_term(p: _Parser, sign: int, variables) -> tuple[int, dict[str, int]]:
    coeff = 1
    powers: dict[str, int] = {}
    if p.peek(kind="int"):
        coeff = int(p.take(kind="int"))
        if not p.peek("*"):
            return sign * coeff, powers
        p.take("*")
    while True:
        pos = p.position()
        name = p.take(kind="name")
        if variables is not None and name not in variables:
            raise ParseError(f"unknown variable {name!r}", position=pos)
        doubled = 2
        if p.peek("^"):
            p.take("^")
            doubled = _parse_exponent(p)
        powers[name] = powers.get(name, 0) + doubled
        if not p.peek("*"):
            return sign * coeff, powers
        p.take("*")


def _parse_exponent(p: _Parser) -> int:
    if not p.peek("("):
        neg = p.peek("-")
        if neg:
            p.take("-")
        n = int(p.take(kind="int"))
        return -2 * n if neg else 2 * n
    p.take("(")
    neg = p.peek("-")
    if neg:
        p.take("-")
    num = int(p.take(kind="int"))
    den = 1
    if p.peek("/"):
        p.take("/")
        pos = p.position()
        den = int(p.take(kind="int"))
        if den not in (1, 2):
            raise ParseError(f"exponent denominator must be 1 or 2, got {den}", position=pos)
    p.take(")")
    doubled = num * 2 // den
    return -doubled if neg else doubled

