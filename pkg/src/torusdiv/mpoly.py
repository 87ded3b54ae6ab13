"""Sparse multivariate polynomials with exact rational coefficients.

SymPoly is the symbolic workhorse: coefficients are int or Fraction, terms
map exponent tuples (one slot per variable, nonnegative) to coefficients,
and the variable list is kept sorted so equal polynomials compare equal.
Used for generic-coefficient computations and the one-parameter family in
the symbolic module, and as the coefficient ring when eliminating torus
variables one at a time.
"""

from fractions import Fraction


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SymPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _norm_coeff(c)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def constant(cls, c):
        c = _norm_coeff(c)
        if c == 0:
            return cls((), {})
        return cls((), {(): c})

    @classmethod
    def variable(cls, name: str):
        return cls((name,), {(1,): 1})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, SymPoly):
            return value
        return cls.constant(value)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def _aligned(self, other):
        """Common sorted variable tuple and both term dicts remapped to it."""
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = tuple(sorted(set(self.vars) | set(other.vars)))
        return vs, self._remap(vs), other._remap(vs)

    def _remap(self, vs):
        idx = [vs.index(v) for v in self.vars]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(vs)
            for pos, e in zip(idx, exps):
                new[pos] = e
            out[tuple(new)] = c
        return out

    def __add__(self, other):
        other = SymPoly.coerce(other)
        vs, a, b = self._aligned(other)
        out = dict(a)
        for exps, c in b.items():
            out[exps] = out.get(exps, 0) + c
        return SymPoly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-SymPoly.coerce(other))

    def __rsub__(self, other):
        return SymPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return SymPoly(self.vars, {})
            return SymPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = SymPoly.coerce(other)
        vs, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return SymPoly(vs, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = SymPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.constant(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        vs, a, b = self._aligned(other)
        return a == b

    def _canonical(self):
        """(live variables, terms) with unused variable slots dropped."""
        live = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        vs = tuple(self.vars[i] for i in live)
        terms = {}
        for exps, c in self.terms.items():
            terms[tuple(exps[i] for i in live)] = c
        return vs, terms

    def __hash__(self):
        vs, terms = self._canonical()
        return hash((vs, tuple(sorted(terms.items()))))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def substitute(self, mapping: dict):
        """Substitute polynomials or numbers for variables by name."""
        result = SymPoly.constant(0)
        for exps, c in self.terms.items():
            term = SymPoly.constant(c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                repl = mapping.get(v)
                if repl is None:
                    repl = SymPoly.variable(v)
                term = term * SymPoly.coerce(repl) ** e
            result = result + term
        return result

    def coeffs_in(self, name: str):
        """Dense coefficient list of self viewed in Q[rest][name]."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        top = self.degree_in(name)
        buckets = [dict() for _ in range(top + 1)]
        for exps, c in self.terms.items():
            key = tuple(e for j, e in enumerate(exps) if j != i)
            buckets[exps[i]][key] = buckets[exps[i]].get(key, 0) + c
        return [SymPoly(rest, b) for b in buckets]

    @classmethod
    def from_dense(cls, name: str, coeffs):
        x = cls.variable(name)
        result = cls.constant(0)
        for e, c in enumerate(coeffs):
            result = result + cls.coerce(c) * x**e
        return result

    def to_dense(self, name: str):
        """Dense numeric coefficient list; requires a univariate polynomial."""
        coeffs = self.coeffs_in(name)
        out = []
        for c in coeffs:
            out.append(c.constant_value())
        return out

    def _term_str(self, exps, c):
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                parts.append(v)
            elif e != 0:
                parts.append(f"{v}^{e}")
        if not parts:
            return str(c)
        body = "*".join(parts)
        if c == 1:
            return body
        if c == -1:
            return f"-{body}"
        return f"{c}*{body}"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)
        out = self._term_str(*items[0])
        for exps, c in items[1:]:
            s = self._term_str(exps, c)
            if s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out

    def __repr__(self):
        return f"SymPoly({self})"
