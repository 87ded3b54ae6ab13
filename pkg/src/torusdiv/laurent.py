"""Integer Laurent polynomials in N variables and their text grammar.

A polynomial is a finite map from exponent vectors in Z^N to nonzero
coefficients.  Coefficients are ints for the exact integer layer; the
symbolic layer reuses the same container with SymPoly coefficients.

Text grammar (used by the CLI, caches and tests):
    terms joined by '+' / '-'
    term := [integer] {'*' var}
    var  := 'X' index ['^' integer]
e.g. "X1 + X1^-1 + X2 + X2^-1 + 5".
"""

import re

from .errors import ParseError
from .mpoly import SymPoly


class LaurentPoly:
    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs: dict):
        self.arity = arity
        clean = {}
        for exps, c in coeffs.items():
            if isinstance(c, SymPoly) and not c:
                continue
            if not isinstance(c, SymPoly) and c == 0:
                continue
            if len(exps) != arity:
                raise ValueError("exponent vector length does not match arity")
            clean[tuple(int(e) for e in exps)] = c
        self.coeffs = clean

    def support(self):
        """The monomial support, sorted."""
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exps):
        return self.coeffs.get(tuple(exps), 0)

    def sum_of_coeffs(self):
        """The value at the identity point (1, ..., 1)."""
        total = 0
        for c in self.coeffs.values():
            total = total + c
        return total

    def one_norm(self) -> int:
        """Sum of absolute coefficient values (integer coefficients only)."""
        return sum(abs(c) for c in self.coeffs.values())

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.arity == other.arity and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.arity, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            out = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, 0) + c1 * c2
            return LaurentPoly(self.arity, out)
        return LaurentPoly(
            self.arity, {e: c * other for e, c in self.coeffs.items()}
        )

    __rmul__ = __mul__

    def transform_monomials(self, matrix) -> "LaurentPoly":
        """Monomial substitution x_i -> prod_j w_j^(matrix[j][i]).

        matrix is r x N; the result lives in r variables.  Coefficients are
        unchanged; exponent vectors map linearly.
        """
        r = len(matrix)
        out = {}
        for exps, c in self.coeffs.items():
            new = tuple(
                sum(matrix[j][i] * exps[i] for i in range(self.arity))
                for j in range(r)
            )
            out[new] = out.get(new, 0) + c
        return LaurentPoly(r, out)

    def cleared(self):
        """(dict with nonnegative exponents, clearing vector e >= 0).

        Multiplying by X^e clears all negative exponents; only negative
        exponents are shifted, so the cleared dict equals X^e * self.
        """
        shift = [0] * self.arity
        for exps in self.coeffs:
            for i, e in enumerate(exps):
                if -e > shift[i]:
                    shift[i] = -e
        out = {
            tuple(e + s for e, s in zip(exps, shift)): c
            for exps, c in self.coeffs.items()
        }
        return out, tuple(shift)

    def as_dense_univariate(self):
        """For arity 1: (dense list g~ low-to-high, clearing exponent e)."""
        if self.arity != 1:
            raise ValueError("not a univariate polynomial")
        cleared, shift = self.cleared()
        top = max(e[0] for e in cleared) if cleared else 0
        dense = [0] * (top + 1)
        for (e,), c in cleared.items():
            dense[e] = c
        return dense, shift[0]

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([Xx]\d+)|(\^-?\d+)|(\*)|(\+)|(-)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, var, caret, star, plus, minus, junk = m.groups()
        if junk is not None:
            raise ParseError(f"bad character {junk!r} in polynomial text")
        if num is not None:
            tokens.append(("int", int(num)))
        elif var is not None:
            tokens.append(("var", int(var[1:])))
        elif caret is not None:
            tokens.append(("pow", int(caret[1:])))
        elif star is not None:
            tokens.append(("mul", None))
        elif plus is not None:
            tokens.append(("add", None))
        else:
            tokens.append(("sub", None))
    return tokens


def parse_poly(text: str, arity: int | None = None) -> LaurentPoly:
    """Parse the polynomial grammar; raises ParseError on malformed input."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms = []
    i = 0
    max_var = 0

    def parse_factor(coeff, exps):
        nonlocal i, max_var
        kind, value = tokens[i]
        if kind == "int":
            i += 1
            return coeff * value, exps
        if kind == "var":
            if value < 1:
                raise ParseError("variable index must be >= 1")
            max_var = max(max_var, value)
            i += 1
            e = 1
            if i < len(tokens) and tokens[i][0] == "pow":
                e = tokens[i][1]
                i += 1
            exps[value] = exps.get(value, 0) + e
            return coeff, exps
        raise ParseError(f"expected a coefficient or variable in {text!r}")

    while i < len(tokens):
        sign = 1
        if terms:
            kind = tokens[i][0]
            if kind == "add":
                i += 1
            elif kind == "sub":
                sign = -1
                i += 1
            else:
                raise ParseError(f"missing '+' or '-' between terms in {text!r}")
        while i < len(tokens) and tokens[i][0] in ("add", "sub"):
            if tokens[i][0] == "sub":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError(f"dangling operator in {text!r}")
        coeff, exps = parse_factor(1, {})
        while i < len(tokens) and tokens[i][0] == "mul":
            i += 1
            if i >= len(tokens):
                raise ParseError(f"dangling '*' in {text!r}")
            coeff, exps = parse_factor(coeff, exps)
        terms.append((sign * coeff, exps))
    n = arity if arity is not None else max(max_var, 1)
    if max_var > n:
        raise ParseError(f"variable X{max_var} exceeds arity {n}")
    coeffs: dict[tuple, int] = {}
    for c, exps in terms:
        key = tuple(exps.get(k + 1, 0) for k in range(n))
        coeffs[key] = coeffs.get(key, 0) + c
    return LaurentPoly(n, coeffs)


def _format_term(exps, c) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        if e == 1:
            parts.append(f"X{i + 1}")
        else:
            parts.append(f"X{i + 1}^{e}")
    if not parts:
        return str(c)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    if isinstance(c, SymPoly):
        return f"({c})*{body}"
    return f"{c}*{body}"


def format_poly(f: LaurentPoly) -> str:
    """Canonical text: terms in descending exponent order."""
    if f.is_zero():
        return "0"
    items = sorted(f.coeffs.items(), key=lambda kv: kv[0], reverse=True)
    out = _format_term(*items[0])
    for exps, c in items[1:]:
        s = _format_term(exps, c)
        if s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out
