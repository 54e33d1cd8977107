from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import sympy

from superfg.utils.misc_utils import as_fraction, natural_sort_key

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Laurent polynomial with exact rational coefficients in named variables.

    Variables are kept naturally sorted and variables that appear in no
    term are dropped, so two equal polynomials have identical fields.
    """

    variables: Tuple[str, ...] = ()
    terms: Dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Repeated variable names: {variables=}")
        merged: Dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(
                    f"Exponent length mismatch: {exps=}, {variables=}"
                )
            merged[exps] = merged.get(exps, Fraction(0)) + as_fraction(coeff)
        merged = {e: c for e, c in merged.items() if c != 0}

        used = [
            i for i in range(len(variables)) if any(e[i] != 0 for e in merged)
        ]
        order = sorted(used, key=lambda i: natural_sort_key(variables[i]))
        object.__setattr__(self, "variables", tuple(variables[i] for i in order))
        object.__setattr__(
            self,
            "terms",
            {tuple(e[i] for i in order): c for e, c in merged.items()},
        )

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls((), {(): as_fraction(c)})

    @classmethod
    def variable(cls, name: str) -> "LaurentPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(
        cls, exponents: Mapping[str, int], coeff: Scalar = 1
    ) -> "LaurentPoly":
        names = tuple(exponents)
        return cls(names, {tuple(exponents[n] for n in names): as_fraction(coeff)})

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __repr__(self):
        from superfg.sfrat.io import format_poly

        return f"LaurentPoly({format_poly(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        assert self.is_constant()
        return self.terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def exponent_map(self, exps: Exponent) -> Dict[str, int]:
        return {v: e for v, e in zip(self.variables, exps) if e != 0}

    def items(self) -> Iterable[Tuple[Dict[str, int], Fraction]]:
        for exps, c in self.terms.items():
            yield self.exponent_map(exps), c

    def extend(self, variables: Tuple[str, ...]) -> Dict[Exponent, Fraction]:
        """Terms re-indexed against a superset of this polynomial's variables."""
        index = [variables.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            full = [0] * len(variables)
            for i, e in zip(index, exps):
                full[i] = e
            out[tuple(full)] = c
        return out

    def _merged_variables(self, other: "LaurentPoly") -> Tuple[str, ...]:
        names = set(self.variables) | set(other.variables)
        return tuple(sorted(names, key=natural_sort_key))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        variables = self._merged_variables(other)
        terms = self.extend(variables)
        for exps, c in other.extend(variables).items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return LaurentPoly(variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        variables = self._merged_variables(other)
        a = self.extend(variables)
        b = other.extend(variables)
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, Fraction(0)) + ca * cb
        return LaurentPoly(variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError(f"Integer exponent required: {k=}")
        if k < 0:
            if not self.is_monomial():
                raise ValueError(
                    f"Negative power of a non-monomial Laurent polynomial: {self}"
                )
            (exps, c), = self.terms.items()
            return LaurentPoly(
                self.variables, {tuple(e * k for e in exps): c ** k}
            )
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = as_fraction(c)
        return LaurentPoly(self.variables, {e: c * x for e, x in self.terms.items()})

    def shift(self, exponents: Mapping[str, int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponents."""
        return self * LaurentPoly.monomial(exponents)

    def min_exponents(self) -> Dict[str, int]:
        """Exponents of the greatest monomial dividing every term."""
        if not self.terms:
            return {}
        mins = [min(e[i] for e in self.terms) for i in range(len(self.variables))]
        return {v: m for v, m in zip(self.variables, mins) if m != 0}

    def degree(self, name: Optional[str] = None) -> int:
        """Total degree (or degree in one variable) after clearing monomial content."""
        if not self.terms:
            return 0
        if name is not None:
            if name not in self.variables:
                return 0
            i = self.variables.index(name)
            col = [e[i] for e in self.terms]
            return max(col) - min(col)
        mins = self.min_exponents()
        shifted = [
            sum(e[i] - mins.get(v, 0) for i, v in enumerate(self.variables))
            for e in self.terms
        ]
        return max(shifted)

    def leading(self) -> Tuple[Exponent, Fraction]:
        """Lexicographically largest exponent and its coefficient."""
        exps = max(self.terms)
        return exps, self.terms[exps]

    def euler_derivative(self, name: str) -> "LaurentPoly":
        """x d/dx in the named variable."""
        if name not in self.variables:
            return LaurentPoly()
        i = self.variables.index(name)
        return LaurentPoly(
            self.variables, {e: c * e[i] for e, c in self.terms.items()}
        )

    def coefficient_in(self, name: str) -> Dict[int, "LaurentPoly"]:
        """Split into powers of one variable."""
        if name not in self.variables:
            return {0: self}
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        groups: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {p: LaurentPoly(rest, t) for p, t in groups.items()}

    def evaluate(self, point: Mapping[str, Union[Scalar, float, complex]]):
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"Missing assignment for variables: {missing=}")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(self.variables, exps):
                if e:
                    term = term * point[v] ** e
            total = total + term
        return total

    def to_sympy(self, symbols: Optional[Mapping[str, sympy.Symbol]] = None):
        symbols = symbols or {v: sympy.Symbol(v) for v in self.variables}
        expr = sympy.Integer(0)
        for exps, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for v, e in zip(self.variables, exps):
                term = term * symbols[v] ** e
            expr = expr + term
        return expr

    def to_sympy_poly(self, variables: Tuple[str, ...]) -> sympy.Poly:
        """Polynomial over QQ; exponents must be nonnegative."""
        gens = [sympy.Symbol(v) for v in variables]
        rep = {}
        for exps, c in self.extend(variables).items():
            if any(e < 0 for e in exps):
                raise ValueError(f"Negative exponent in polynomial conversion: {exps=}")
            rep[exps] = sympy.Rational(c.numerator, c.denominator)
        if not rep:
            return sympy.Poly(0, *gens, domain="QQ")
        return sympy.Poly.from_dict(rep, *gens, domain="QQ")

    @classmethod
    def from_sympy_poly(
        cls, poly: sympy.Poly, variables: Tuple[str, ...]
    ) -> "LaurentPoly":
        terms = {}
        for monom, coeff in poly.terms():
            coeff = sympy.Rational(coeff)
            terms[tuple(monom)] = Fraction(int(coeff.p), int(coeff.q))
        return cls(variables, terms)

    @classmethod
    def from_sympy(cls, expr) -> "LaurentPoly":
        """Laurent polynomial from an expanded sympy expression."""
        expr = sympy.expand(sympy.sympify(expr))
        names = sorted({str(s) for s in expr.free_symbols}, key=natural_sort_key)
        terms: Dict[Exponent, Fraction] = {}
        for term in sympy.Add.make_args(expr):
            coeff, rest = term.as_coeff_Mul()
            if not coeff.is_Rational:
                raise ValueError(f"Non-rational coefficient: {term=}")
            exps = [0] * len(names)
            for factor in sympy.Mul.make_args(rest):
                if factor == 1:
                    continue
                base, power = factor.as_base_exp()
                if not (base.is_Symbol and power.is_Integer):
                    raise ValueError(f"Not a Laurent monomial: {factor=}")
                exps[names.index(str(base))] += int(power)
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(
                int(coeff.p), int(coeff.q)
            )
        return cls(tuple(names), terms)


def _coerce(x) -> Optional[LaurentPoly]:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return None
