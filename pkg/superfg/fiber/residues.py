import logging
from typing import List, Optional, Sequence

from superfg.fiber.dataclasses import ResidueResult
from superfg.sfrat import SFRat

logger = logging.getLogger(__name__)


def coordinate_name(letter: Optional[SFRat]) -> str:
    """Name of the variable a letter is equal to; other letters have no supported residue."""
    if letter is not None and letter.den == 1 and len(letter.num.terms) == 1:
        exps, coeff = next(iter(letter.num.terms.items()))
        if exps == (1,) and coeff == 1:
            return letter.num.variables[0]
    raise ValueError(f"Residue along a non-coordinate letter is not supported: {letter=}")


def residue_dlog(letters: Sequence[Optional[SFRat]], a: int) -> ResidueResult:
    """Residue of dlog l_0 ^ ... ^ dlog l_{n-1} along l_a = 0."""
    if not 0 <= a < len(letters):
        raise ValueError(f"Residue index out of range: {a=}, {len(letters)=}")
    name = coordinate_name(letters[a])
    sign = -1 if a % 2 else 1
    remaining: List[Optional[SFRat]] = []
    for b, letter in enumerate(letters):
        if b == a:
            continue
        remaining.append(None if letter is None else letter.substitute_zero(name))
    poles = [i for i, r in enumerate(remaining) if r is None or r.is_zero()]
    if poles:
        logger.debug("residue along %s leaves singular letters at %s", name, poles)
    return ResidueResult(sign, remaining, poles)


def iterated_residue(letters: Sequence[Optional[SFRat]], order: Sequence[int]) -> ResidueResult:
    """Residues taken in turn; `order` indexes the original letter list."""
    if len(set(order)) != len(order):
        raise ValueError(f"Repeated residue index: {order=}")
    alive = list(range(len(letters)))
    current = list(letters)
    sign = 1
    result = ResidueResult(1, current, [])
    for a in order:
        if a not in alive:
            raise ValueError(f"Residue index out of range: {a=}")
        pos = alive.index(a)
        result = residue_dlog(current, pos)
        sign *= result.sign
        alive.pop(pos)
        current = result.remaining
    return ResidueResult(sign, current, result.poles)
