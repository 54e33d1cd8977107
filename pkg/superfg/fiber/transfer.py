import logging
from typing import Mapping, Sequence, Tuple, Union

from superfg.fiber.dataclasses import TransferWeight

logger = logging.getLogger(__name__)

SignedProduct = Sequence[Tuple[TransferWeight, int]]


def eval_letter(letter: Union[TransferWeight, SignedProduct], X: Mapping[str, float]):
    """Value of a transfer weight, or of a closed product of weights traversed with signs +-1."""
    if isinstance(letter, TransferWeight):
        letter = [(letter, 1)]
    value = 1
    for weight, sign in letter:
        if sign not in (1, -1):
            raise ValueError(f"Traversal sign must be +1 or -1: {sign=}")
        value = value * weight.to_sfrat().eval_positive(X) ** sign
    return value


def flip_update(gamma: TransferWeight, k: str, B_k: int, A_k: int, sigma: int) -> TransferWeight:
    """gamma X_k^{B_k} (1 + X_k^sigma)^{A_k}, written against the sign already stored for X_k."""
    if sigma not in (1, -1):
        raise ValueError(f"Tropical sign must be +1 or -1: {sigma=}")
    B = dict(gamma.B_exponents)
    A = dict(gamma.A_exponents)
    signs = dict(gamma.signs)
    if A.get(k) and signs[k] != sigma:
        # (1 + X^s)^a = X^{s a} (1 + X^{-s})^a
        B_k += sigma * A_k
        sigma = signs[k]
    B[k] = B.get(k, 0) + B_k
    if A_k:
        A[k] = A.get(k, 0) + A_k
        signs[k] = sigma
    B = {name: b for name, b in B.items() if b}
    A = {name: a for name, a in A.items() if a}
    signs = {name: s for name, s in signs.items() if name in A}
    logger.debug("flip update at %s: B=%s A=%s", k, B, A)
    return TransferWeight(B, A, signs)
