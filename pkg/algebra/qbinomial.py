"""Gaussian (q-)binomial coefficients."""

from functools import lru_cache

from algebra.rational_functions import QLaurent, QRational, as_laurent
from errors import InternalArithmeticError, NegativeN, NotLaurentIntegral

_ONE = QRational.one()


@lru_cache(maxsize=None)
def qbinom(top: int, bottom: int) -> QLaurent:
    """Compute [top over bottom] from the product formula.

    The top entry may be any integer; negative tops give Laurent polynomials,
    e.g. qbinom(-1, 1) = -q^-1.

    Args:
        top: M, any integer
        bottom: N >= 0

    Returns:
        prod_{j<N}(q^(M-j) - 1) / prod_{j=1..N}(q^j - 1) as a Laurent polynomial

    Raises:
        NegativeN: If bottom < 0
        InternalArithmeticError: If the quotient does not reduce to a Laurent polynomial
    """
    if bottom < 0:
        raise NegativeN(bottom)
    value = _ONE
    for j in range(bottom):
        value = value * (QRational.q_power(top - j) - _ONE)
        value = value / (QRational.q_power(j + 1) - _ONE)
    try:
        return as_laurent(value)
    except NotLaurentIntegral as exc:
        raise InternalArithmeticError(f"qbinom({top}, {bottom}) = {value}") from exc
