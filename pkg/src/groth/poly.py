"""Dense multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero Fraction coefficients
over an ordered tuple of variable names. Only small instances are expanded
(a handful of variables, low degree), so plain dicts are enough.
"""

import heapq
from operator import add
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InexactDivision, UnboundVariable
from .exact import EvaluationPoint, scalar


def _coeff(c):
    # integral coefficients are kept as int for speed; equality with Fraction is exact
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        nvars = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {self.variables}")
            c = clean.get(exps, 0) + _coeff(scalar(c))
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        # trusted internal path: exponents valid, coefficients normalized
        self = object.__new__(cls)
        self.variables = variables
        self.terms = {e: _coeff(c) for e, c in terms.items() if c}
        return self

    # -- constructors --

    @classmethod
    def constant(cls, c, variables=()):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]):
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise UnboundVariable(name)
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> dict:
        return {v: cls.var(v, variables) for v in variables}

    # -- variable alignment --

    def extend(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over ``variables`` (must contain every variable in use)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exps):
                if e:
                    if v not in index:
                        raise UnboundVariable(v)
                    new[index[v]] = e
            terms[tuple(new)] = c
        return MultiPoly(variables, terms)

    def _aligned(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.variables)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.extend(merged), other.extend(merged)

    # -- ring operations --

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = scalar(other)
            return MultiPoly._raw(self.variables, {e: c * v for e, v in self.terms.items()})
        a, b = self._aligned(other)
        terms = {}
        get = terms.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(map(add, e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.constant(other, self.variables)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(
            (frozenset((v, e) for v, e in zip(self.variables, exps) if e), c)
            for exps, c in self.terms.items()))

    # -- inspection --

    def is_zero(self) -> bool:
        return not self.terms

    def used(self) -> "MultiPoly":
        """Drop variables that never occur with a positive exponent."""
        keep = [i for i in range(len(self.variables))
                if any(e[i] for e in self.terms)]
        return MultiPoly([self.variables[i] for i in keep],
                         {tuple(e[i] for i in keep): c for e, c in self.terms.items()})

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point) -> Fraction:
        if isinstance(point, EvaluationPoint):
            point = point.as_dict()
        used = [i for i, v in enumerate(self.variables) if any(e[i] for e in self.terms)]
        for i in used:
            if self.variables[i] not in point:
                raise UnboundVariable(self.variables[i])
        vals = {i: scalar(point[self.variables[i]]) for i in used}
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for i in used:
                if exps[i]:
                    t *= vals[i] ** exps[i]
            total += t
        return total

    # -- exact division --

    def _leading(self):
        exps = max(self.terms)
        return exps, self.terms[exps]

    def divmod(self, divisor: "MultiPoly"):
        """Lexicographic multivariate division by a single polynomial.

        The remainder is zero exactly when ``divisor`` divides ``self``.
        """
        a, d = self._aligned(divisor)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = d._leading()
        quotient = {}
        remainder = {}
        work = dict(a.terms)
        # max-heap of exponents via negation; stale entries are skipped
        heap = [tuple(-x for x in e) for e in work]
        heapq.heapify(heap)
        while heap:
            e = tuple(-x for x in heapq.heappop(heap))
            if e not in work:
                continue
            c = work.pop(e)
            if all(x >= y for x, y in zip(e, lead_e)):
                qe = tuple(x - y for x, y in zip(e, lead_e))
                qc = _coeff(Fraction(c) / lead_c)
                quotient[qe] = quotient.get(qe, 0) + qc
                for de, dc in d.terms.items():
                    if de == lead_e:
                        continue
                    te = tuple(x + y for x, y in zip(qe, de))
                    old = work.get(te)
                    nv = (old or 0) - qc * dc
                    if nv:
                        if old is None:
                            heapq.heappush(heap, tuple(-x for x in te))
                        work[te] = nv
                    else:
                        work.pop(te, None)
            else:
                remainder[e] = c
        return MultiPoly._raw(a.variables, quotient), MultiPoly._raw(a.variables, remainder)

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"nonzero remainder with {len(r.terms)} terms")
        return q

    # -- rendering --

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}"
                            for v, e in zip(self.variables, exps) if e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.variables}, {str(self)!r})"


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: MultiPoly, pt) -> Fraction:
    return p.evaluate(pt)


def poly_equal(p: MultiPoly, q: MultiPoly) -> bool:
    return p == q
