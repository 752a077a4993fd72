"""Exception hierarchy shared by every package."""

from typing import Any, Sequence


class QuiverWallcrossError(Exception):
    """Base exception for all library errors."""

    pass


class ConfigurationError(QuiverWallcrossError):
    """Exception raised when a run configuration or input file is invalid."""

    pass


# Exact arithmetic


class ArithmeticDomainError(QuiverWallcrossError):
    """Base exception for exact arithmetic errors."""

    pass


class DivisionByZero(ArithmeticDomainError):
    """Exception raised when dividing by the zero rational function."""

    pass


class NegativeN(ArithmeticDomainError):
    """Exception raised for a q-binomial with negative bottom entry."""

    def __init__(self, n: int):
        super().__init__(f"q-binomial bottom entry must be >= 0, got {n}")
        self.n = n


class PoleAt(ArithmeticDomainError):
    """Exception raised when evaluating a rational function at a pole."""

    def __init__(self, point: Any):
        super().__init__(f"rational function has a pole at q={point}")
        self.point = point


class NotLaurentIntegral(ArithmeticDomainError):
    """Exception raised when a rational function is not in Z[q, q^-1]."""

    def __init__(self, witness: str):
        super().__init__(
            f"not a Laurent polynomial with integer coefficients: {witness}"
        )
        self.witness = witness


class InternalArithmeticError(ArithmeticDomainError):
    """Exception raised when an identity that must hold exactly does not."""

    pass


# Quivers


class QuiverError(QuiverWallcrossError):
    """Base exception for quiver data errors."""

    pass


class CyclicQuiver(QuiverError):
    """Exception raised when the arrows contain an oriented cycle."""

    def __init__(self, cycle: Sequence[str]):
        super().__init__(f"quiver has an oriented cycle: {' -> '.join(cycle)}")
        self.cycle = list(cycle)


class UnknownVertex(QuiverError):
    """Exception raised when an arrow or weight names a vertex that does not exist."""

    def __init__(self, vertex: str):
        super().__init__(f"unknown vertex: {vertex!r}")
        self.vertex = vertex


class ZeroDimVector(QuiverError):
    """Exception raised when an operation needs a non-zero dimension vector."""

    pass


class NotDynkin(QuiverError):
    """Exception raised when the Tits form is not positive definite."""

    def __init__(self, witness: Any):
        super().__init__(f"Tits form is not positive definite, witness {witness}")
        self.witness = witness


class NotRealRoot(QuiverError):
    """Exception raised when <d, d> != 1."""

    def __init__(self, dim_vector: Any, value: int):
        super().__init__(f"{dim_vector} is not a real root: <d,d> = {value}")
        self.dim_vector = dim_vector
        self.value = value


class NotCoprime(QuiverError):
    """Exception raised when a dimension vector has a proper subvector of its slope."""

    def __init__(self, dim_vector: Any, witness: Any):
        super().__init__(f"{dim_vector} is not coprime, witness {witness}")
        self.dim_vector = dim_vector
        self.witness = witness


# Series


class SeriesError(QuiverWallcrossError):
    """Base exception for truncated series errors."""

    pass


class IncompatibleSeries(SeriesError):
    """Exception raised when combining series over different quivers or orders."""

    pass


class NonUnitConstantTerm(SeriesError):
    """Exception raised when a series that must be a unit has constant term != 1."""

    pass


class UnnormalizedFactor(SeriesError):
    """Exception raised when a descending-product factor has constant term != 1."""

    def __init__(self, slope: Any):
        super().__init__(f"factor at slope {slope} does not have constant term 1")
        self.slope = slope


class MixedSlopeFactor(SeriesError):
    """Exception raised when a descending-product factor leaves its slope class."""

    def __init__(self, slope: Any, dim_vector: Any):
        super().__init__(f"factor at slope {slope} has a term at {dim_vector}")
        self.slope = slope
        self.dim_vector = dim_vector


class PoleAtOne(SeriesError):
    """Exception raised when specializing a coefficient with a pole at q=1."""

    def __init__(self, dim_vector: Any):
        super().__init__(f"coefficient at {dim_vector} has a pole at q=1")
        self.dim_vector = dim_vector


# Certification


class CertificationError(QuiverWallcrossError):
    """Base exception for integrality certification failures."""

    pass


class IntegralityFailure(CertificationError):
    """Exception raised when a conjugation series coefficient fails certification."""

    def __init__(self, dim_vector: Any, coefficient: Any, reason: str):
        super().__init__(
            f"coefficient at {dim_vector} fails certification ({reason}): {coefficient}"
        )
        self.dim_vector = dim_vector
        self.coefficient = coefficient
        self.reason = reason


class NonIntegerExponent(CertificationError):
    """Exception raised when a (1 + y^k) factorization needs a non-integer exponent."""

    def __init__(self, k: int, value: Any):
        super().__init__(f"exponent c({k}) = {value} is not an integer")
        self.k = k
        self.value = value


class PreconditionViolation(CertificationError):
    """Exception raised when a check is called outside its hypotheses."""

    pass


# Scenarios


class ScenarioError(QuiverWallcrossError):
    """Base exception for worked-example scenarios."""

    pass


class NonGenericStability(ScenarioError):
    """Exception raised when a slope class does not isolate a single positive root."""

    def __init__(self, slope: Any, roots: Sequence[Any]):
        super().__init__(f"slope class {slope} contains roots {list(roots)}")
        self.slope = slope
        self.roots = list(roots)


# Finite-field oracle


class OracleError(QuiverWallcrossError):
    """Base exception for brute-force counting errors."""

    pass


class BudgetExceeded(OracleError):
    """Exception raised when an enumeration would exceed its configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what} needs {required} points, budget is {budget}")
        self.what = what
        self.required = required
        self.budget = budget


class NotSemistable(OracleError):
    """Exception raised when a framed count is asked of an unstable representation."""

    pass
