"""Exterior algebra on named odd generators."""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from superfg.utils.linalg_utils import cofactor_det, permutation_sign
from superfg.utils.misc_utils import natural_sort_key

Monomial = Tuple[str, ...]


def sort_with_sign(gens: Sequence[str]) -> Tuple[int, Monomial]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    if len(set(gens)) != len(gens):
        return 0, ()
    order = sorted(range(len(gens)), key=lambda i: natural_sort_key(gens[i]))
    return permutation_sign(order), tuple(gens[i] for i in order)


@dataclass(frozen=True, eq=False)
class ExtElem:
    terms: Dict[Monomial, object] = field(default_factory=dict)

    def __post_init__(self):
        merged: Dict[Monomial, object] = {}
        for gens, coeff in self.terms.items():
            s, key = sort_with_sign(tuple(gens))
            if s == 0:
                continue
            term = coeff if s > 0 else -coeff
            merged[key] = merged[key] + term if key in merged else term
        object.__setattr__(self, "terms", {k: c for k, c in merged.items() if not c == 0})

    @classmethod
    def gen(cls, name: str, coeff=1) -> "ExtElem":
        return cls({(name,): coeff})

    @classmethod
    def scalar(cls, coeff) -> "ExtElem":
        return cls({(): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({len(k) for k in self.terms})

    def homogeneous(self, degree: int) -> "ExtElem":
        return ExtElem({k: c for k, c in self.terms.items() if len(k) == degree})

    def generators(self) -> List[str]:
        names = {g for k in self.terms for g in k}
        return sorted(names, key=natural_sort_key)

    def __add__(self, other: "ExtElem") -> "ExtElem":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return ExtElem(terms)

    def __neg__(self):
        return ExtElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ExtElem") -> "ExtElem":
        return self + (-other)

    def scale(self, c) -> "ExtElem":
        return ExtElem({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExtElem):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, ExtElem):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def coefficient(self, gens: Iterable[str]):
        s, key = sort_with_sign(tuple(gens))
        if s == 0 or key not in self.terms:
            return 0
        return s * self.terms[key]

    def __repr__(self):
        body = " + ".join(
            f"({c})*{'*'.join(k) if k else '1'}" for k, c in sorted(self.terms.items())
        )
        return f"ExtElem({body or '0'})"


def wedge(a: ExtElem, b: ExtElem) -> ExtElem:
    """Graded-commutative product; Koszul signs come from sorting the concatenation."""
    out: Dict[Monomial, object] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            s, key = sort_with_sign(ka + kb)
            if s == 0:
                continue
            term = ca * cb if s > 0 else -(ca * cb)
            out[key] = out[key] + term if key in out else term
    return ExtElem(out)


def linear_form(row: Sequence, gens: Sequence[str]) -> ExtElem:
    out = ExtElem()
    for g, c in zip(gens, row):
        if not c == 0:
            out = out + ExtElem.gen(g, c)
    return out


def berezin_delta(M: Sequence[Sequence], gens: Sequence[str]) -> ExtElem:
    """Ordered product of the r linear forms (M eta)_alpha."""
    if M and len(M) > len(gens):
        raise ValueError(f"Berezin delta needs r <= f: r={len(M)}, f={len(gens)}")
    out = ExtElem.scalar(Fraction(1))
    for row in M:
        out = wedge(out, linear_form(row, gens))
    return out


def top_coefficient(e: ExtElem, ordered_gens: Sequence[str]):
    """Coefficient of the top wedge taken in the given orientation."""
    return e.coefficient(ordered_gens)


def cauchy_binet_expansion(M: Sequence[Sequence], gens: Sequence[str]) -> ExtElem:
    """Sum over r-subsets T of det(M|_T) eta^T."""
    r = len(M)
    terms = {}
    for cols in itertools.combinations(range(len(gens)), r):
        sub = [[row[j] for j in cols] for row in M]
        terms[tuple(gens[j] for j in cols)] = cofactor_det(sub)
    return ExtElem(terms)


def linear_substitute(e: ExtElem, S: Sequence[Sequence], gens: Sequence[str]) -> ExtElem:
    """Algebra map gens[j] -> sum_l S[j][l] gens[l]."""
    images = {g: linear_form(S[j], gens) for j, g in enumerate(gens)}
    out = ExtElem()
    for key, c in e.terms.items():
        term = ExtElem.scalar(c)
        for g in key:
            term = wedge(term, images[g] if g in images else ExtElem.gen(g))
        out = out + term
    return out
