import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional, Union

from superfg.sfrat.laurent import LaurentPoly
from superfg.utils.misc_utils import natural_sort_key

logger = logging.getLogger(__name__)

# cancel by polynomial gcd when deg(num) + deg(den) is within this bound
GCD_DEGREE_BOUND = 16

Number = Union[int, Fraction, float]


@dataclass(frozen=True, eq=False)
class SFRat:
    """Ratio of Laurent polynomials, canonicalized on construction.

    The denominator carries no monomial factor and has leading coefficient 1.
    `sf_flag` is set when every stored coefficient is nonnegative, which makes
    the value strictly positive at every positive point.
    """

    num: LaurentPoly
    den: LaurentPoly
    sf_flag: bool = True

    def __post_init__(self):
        num, den = _canonical(self.num, self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(
            self, "sf_flag", num.is_nonnegative() and den.is_nonnegative()
        )

    @classmethod
    def const(cls, c: Union[int, Fraction]) -> "SFRat":
        return cls(LaurentPoly.constant(c), LaurentPoly.constant(1))

    @classmethod
    def var(cls, name: str) -> "SFRat":
        return cls(LaurentPoly.variable(name), LaurentPoly.constant(1))

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff=1) -> "SFRat":
        return cls(LaurentPoly.monomial(exponents, coeff), LaurentPoly.constant(1))

    @classmethod
    def from_poly(cls, num: LaurentPoly, den: Optional[LaurentPoly] = None) -> "SFRat":
        return cls(num, den if den is not None else LaurentPoly.constant(1))

    @property
    def variables(self):
        names = set(self.num.variables) | set(self.den.variables)
        return tuple(sorted(names, key=natural_sort_key))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"Not a constant: {self}")
        return self.num.constant_value() / self.den.constant_value()

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def __repr__(self):
        from superfg.sfrat.io import format_sfrat

        return f"SFRat({format_sfrat(self)!r})"

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return SFRat(self.num + other.num, self.den)
        return SFRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return SFRat(-self.num, self.den)

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
        return SFRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError(f"Division by the zero function: {self} / 0")
        return SFRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError(f"Integer exponent required: {k=}")
        if k >= 0:
            return SFRat(self.num ** k, self.den ** k)
        if self.is_zero():
            raise ZeroDivisionError("Negative power of the zero function")
        return SFRat(self.den ** (-k), self.num ** (-k))

    def equals(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return False
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def eval(self, point: Mapping[str, Number]):
        """Exact Fraction for exact input, float otherwise."""
        point = {
            k: Fraction(v) if isinstance(v, int) else v for k, v in point.items()
        }
        num = self.num.evaluate(point)
        den = self.den.evaluate(point)
        if den == 0:
            raise ZeroDivisionError(f"Pole of {self} at {point=}")
        return num / den

    def eval_positive(self, point: Mapping[str, Number]):
        bad = {v: point[v] for v in self.variables if v in point and not point[v] > 0}
        if bad:
            raise ValueError(f"Nonpositive input at a positive evaluation: {bad=}")
        value = self.eval(point)
        if self.sf_flag:
            assert value > 0, f"subtraction-free value not positive: {value=}"
        return value

    def euler_derivative(self, name: str) -> "SFRat":
        """x d/dx applied to num/den."""
        dn = self.num.euler_derivative(name)
        dd = self.den.euler_derivative(name)
        if dd.is_zero():
            return SFRat(dn, self.den)
        return SFRat(dn * self.den - self.num * dd, self.den * self.den)

    def substitute(self, mapping: Mapping[str, "SFRat"]) -> "SFRat":
        """Replace named variables by SFRat expressions."""
        return _substitute_poly(self.num, mapping) / _substitute_poly(
            self.den, mapping
        )

    def order_at_zero(self, name: str) -> int:
        """Exponent of the leading power of `name` as it tends to zero."""
        lo_num = min(self.num.coefficient_in(name))
        lo_den = min(self.den.coefficient_in(name))
        return lo_num - lo_den

    def substitute_zero(self, name: str) -> Optional["SFRat"]:
        """Restriction to name = 0, or None at a pole."""
        if self.is_zero():
            return self
        order = self.order_at_zero(name)
        if order < 0:
            return None
        if order > 0:
            return SFRat.const(0)
        num = self.num.coefficient_in(name)
        den = self.den.coefficient_in(name)
        return SFRat(num[min(num)], den[min(den)])


class ArithOp(NamedTuple):
    name: str
    k: int = 0


def arith(a: SFRat, b: Optional[SFRat], op: Union[str, ArithOp]) -> SFRat:
    """Apply one of add, mul, div, neg or pow."""
    if isinstance(op, str):
        op = ArithOp(op)
    if op.name == "add":
        return a + b
    if op.name == "mul":
        return a * b
    if op.name == "div":
        return a / b
    if op.name == "neg":
        return -a
    if op.name == "pow":
        return a ** op.k
    raise ValueError(f"Unknown arithmetic operation: {op=}")


def _coerce(x) -> Optional[SFRat]:
    if isinstance(x, SFRat):
        return x
    if isinstance(x, (int, Fraction)):
        return SFRat.const(x)
    if isinstance(x, LaurentPoly):
        return SFRat.from_poly(x)
    return None


def _substitute_poly(poly: LaurentPoly, mapping: Mapping[str, SFRat]) -> SFRat:
    total = SFRat.const(0)
    for exps, coeff in poly.items():
        term = SFRat.const(coeff)
        for name, e in exps.items():
            base = mapping[name] if name in mapping else SFRat.var(name)
            term = term * base ** e
        total = total + term
    return total


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise ZeroDivisionError("SFRat with zero denominator")
    if num.is_zero():
        return LaurentPoly(), LaurentPoly.constant(1)
    if den.is_constant():
        return num.scale(1 / den.constant_value()), LaurentPoly.constant(1)

    # move monomial content of the denominator into the numerator
    content = den.min_exponents()
    inverse = {v: -e for v, e in content.items()}
    num, den = num.shift(inverse), den.shift(inverse)

    if not den.is_constant() and not num.is_zero():
        reduced = _gcd_reduce(num, den)
        if reduced is not None:
            rnum, rden = reduced
            if (rnum.is_nonnegative() and rden.is_nonnegative()) or not (
                num.is_nonnegative() and den.is_nonnegative()
            ):
                num, den = rnum, rden
            else:
                logger.debug("kept unreduced form to preserve subtraction-freeness")

    _, lead = den.leading()
    return num.scale(1 / lead), den.scale(1 / lead)


def _gcd_reduce(num: LaurentPoly, den: LaurentPoly):
    if num.degree() + den.degree() > GCD_DEGREE_BOUND:
        logger.debug(
            "skipped gcd above degree bound %d: %d + %d",
            GCD_DEGREE_BOUND,
            num.degree(),
            den.degree(),
        )
        return None
    num_content = num.min_exponents()
    num_poly = num.shift({v: -e for v, e in num_content.items()})
    names = set(num_poly.variables) | set(den.variables) | set(num_content)
    variables = tuple(sorted(names, key=natural_sort_key))

    p = num_poly.to_sympy_poly(variables)
    q = den.to_sympy_poly(variables)
    g = p.gcd(q)
    if g.total_degree() == 0:
        return None
    p = LaurentPoly.from_sympy_poly(p.exquo(g), variables)
    q = LaurentPoly.from_sympy_poly(q.exquo(g), variables)
    return p.shift(num_content), q
