"""Guess counting, adequacy against an attacker model, and the bound chain.

All counts are exact big integers and the sequence-to-string ratio is an
exact rational; every floating-point field is presentation only.

The central quantities, for an alphabet of size ``a`` and password length
``n``:

* ``total_strings(a, n)``            = a^n
* ``injective_sequence_count(p, n)`` = p * (p-1) * ... * (p-n+1)
* ``ratio(a, n)``                    = injective / total, with two reference
  expressions: the power bound (1 - (n-1)/a)^n, which the exact ratio always
  dominates for n <= a, and the asymptotic form e^(-(n-1)^2 / a), which
  approximates the power bound (not the exact ratio) when a >> n.

A password is adequate for an attacker model when the expected number of
guesses, ceil(a^n / 2), takes strictly longer than the model's time frame
at its guessing rate.

``enumerate_oracle`` cross-checks the combinatorics by brute force at desk
scale: it walks every injective cell sequence of a given length over a
small diagram and counts the distinct password strings they produce.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, validate_diagram
from .errors import AnalysisError, BudgetError

DEFAULT_ORACLE_BUDGET = 10_000_000

SECONDS_PER_YEAR = 3600 * 24 * 365


@dataclass(frozen=True)
class AttackerModel:
    """Brute-force guessing rate and the time frame it must be held off for."""

    guesses_per_second: float
    time_frame_seconds: float

    def __post_init__(self):
        for name in ("guesses_per_second", "time_frame_seconds"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise AnalysisError(f"{name} must be positive and finite, got {value}")

    @property
    def guess_capacity(self) -> Fraction:
        """Exact number of guesses the model affords within its time frame."""
        return Fraction(self.guesses_per_second) * Fraction(self.time_frame_seconds)


@dataclass(frozen=True)
class RatioBounds:
    exact: Fraction
    power_bound: float
    exp_approx: float


@dataclass(frozen=True)
class AdequacyResult:
    adequate: bool
    expected_time_seconds: float
    min_adequate_length: int


@dataclass(frozen=True)
class EntropyComparison:
    english_bits: float
    typical_password_bits: float
    ascii_bits: float


@dataclass(frozen=True)
class StrengthReport:
    """Counts plus the ratio chain and adequacy verdict.

    The ratio fields are None when length exceeds the alphabet size: no
    injective reading can be that long, so the chain does not apply (the
    strict ``ratio`` operation rejects such lengths outright, but adequacy
    is still a meaningful question and the report answers it).
    """

    alphabet_size: int
    length: int
    total_strings: int
    expected_guesses: int
    injective_sequences: int
    ratio_exact: Fraction | None
    bound_power: float | None
    bound_exp_approx: float | None
    adequate: bool
    min_adequate_length: int
    expected_time_seconds: float

    def to_dict(self) -> dict:
        return {
            "alphabet_size": self.alphabet_size,
            "length": self.length,
            "total_strings": self.total_strings,
            "expected_guesses": self.expected_guesses,
            "injective_sequences": self.injective_sequences,
            "ratio_exact": (
                f"{self.ratio_exact.numerator}/{self.ratio_exact.denominator}"
                if self.ratio_exact is not None
                else None
            ),
            "bound_power": self.bound_power,
            "bound_exp_approx": self.bound_exp_approx,
            "adequate": self.adequate,
            "min_adequate_length": self.min_adequate_length,
            "expected_time_seconds": self.expected_time_seconds,
        }


@dataclass(frozen=True)
class OracleReport:
    n: int
    sequence_count: int
    distinct_passwords: int
    lower_bound: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "sequence_count": self.sequence_count,
            "distinct_passwords": self.distinct_passwords,
            "lower_bound": self.lower_bound,
        }


def total_strings(alphabet_size: int, n: int) -> int:
    """Exact count of length-n strings over the alphabet."""
    if alphabet_size < 2:
        raise AnalysisError(f"alphabet size must be >= 2, got {alphabet_size}")
    if n < 0:
        raise AnalysisError(f"length must be >= 0, got {n}")
    return alphabet_size ** n

def injective_sequence_count(pool_size: int, n: int) -> int:
    """Falling factorial: ordered selections of n distinct items from the pool."""
    if pool_size < 0 or n < 0:
        raise AnalysisError(f"pool size and length must be >= 0, got {pool_size}, {n}")
    if n > pool_size:
        return 0
    count = 1
    for j in range(n):
        count *= pool_size - j
    return count


def ratio(alphabet_size: int, n: int) -> RatioBounds:
    """Fraction of the full string space reachable without repeating a cell.

    ``exact`` is injective / total as a rational.  ``power_bound`` is
    (1 - (n-1)/a)^n, a lower bound the exact value dominates termwise.
    ``exp_approx`` is e^(-(n-1)^2 / a), the asymptotic form of the power
    bound for a >> n (at n = 1 both reference values are exactly 1).
    """
    if alphabet_size < 2:
        raise AnalysisError(f"alphabet size must be >= 2, got {alphabet_size}")
    if n < 1:
        raise AnalysisError(f"length must be >= 1, got {n}")
    if n > alphabet_size:
        raise AnalysisError(
            f"length {n} exceeds alphabet size {alphabet_size}; "
            "an injective reading cannot be that long"
        )
    exact = Fraction(
        injective_sequence_count(alphabet_size, n), total_strings(alphabet_size, n)
    )
    power = (1 - (n - 1) / alphabet_size) ** n
    approx = math.exp(-((n - 1) ** 2) / alphabet_size)
    return RatioBounds(exact=exact, power_bound=power, exp_approx=approx)


def adequacy(alphabet_size: int, n: int, model: AttackerModel) -> AdequacyResult:
    """Does brute force on average outlast the model's time frame?

    Expected guesses are ceil(a^n / 2); adequacy is the strict comparison
    expected_time > time_frame, evaluated exactly.  ``min_adequate_length``
    is the smallest length that passes the same test.
    """
    if alphabet_size < 2:
        raise AnalysisError(f"alphabet size must be >= 2, got {alphabet_size}")
    if n < 1:
        raise AnalysisError(f"length must be >= 1, got {n}")
    capacity = model.guess_capacity

    def adequate_at(m: int) -> bool:
        return expected_guesses(alphabet_size, m) > capacity

    m = 1
    while not adequate_at(m):
        m += 1
    try:
        seconds = float(
            Fraction(expected_guesses(alphabet_size, n))
            / Fraction(model.guesses_per_second)
        )
    except OverflowError:
        seconds = math.inf
    return AdequacyResult(
        adequate=adequate_at(n),
        expected_time_seconds=seconds,
        min_adequate_length=m,
    )


def expected_guesses(alphabet_size: int, n: int) -> int:
    """ceil(a^n / 2): average attempts to hit one uniformly random string."""
    return (total_strings(alphabet_size, n) + 1) // 2


def bits_of_strength(alphabet_size: int, n: int, injective: bool = False) -> float:
    """log2 of the string count (or of the injective sequence count)."""
    if alphabet_size < 2:
        raise AnalysisError(f"alphabet size must be >= 2, got {alphabet_size}")
    if n < 0:
        raise AnalysisError(f"length must be >= 0, got {n}")
    if injective:
        if n > alphabet_size:
            raise AnalysisError(
                f"length {n} exceeds alphabet size {alphabet_size}; no injective sequences"
            )
        return math.log2(injective_sequence_count(alphabet_size, n)) if n else 0.0
    return math.log2(total_strings(alphabet_size, n)) if n else 0.0


def compensation_length(alphabet_size: int, n: int) -> int | None:
    """Smallest m whose injective sequence count reaches a^n, if any.

    Scans m = 0..a; the falling factorial is nondecreasing in m, so the
    first hit is minimal.  Returns None when even m = a (that is, a!) falls
    short, which happens once n is no longer small next to the alphabet.
    """
    if alphabet_size < 2:
        raise AnalysisError(f"alphabet size must be >= 2, got {alphabet_size}")
    if n < 0:
        raise AnalysisError(f"length must be >= 0, got {n}")
    target = total_strings(alphabet_size, n)
    count = 1
    for m in range(alphabet_size + 1):
        if m > 0:
            count *= alphabet_size - (m - 1)
        if count >= target:
            return m
    return None


def entropy_comparison(n: int) -> EntropyComparison:
    """Literature reference figures for n characters.

    Upper estimates per character: 1.3 bits for standard English text,
    4 bits for typical human-chosen passwords, 8 bits for a full ASCII
    byte.  Comparative yardsticks, not measurements.
    """
    if n < 0:
        raise AnalysisError(f"length must be >= 0, got {n}")
    return EntropyComparison(
        english_bits=1.3 * n,
        typical_password_bits=4.0 * n,
        ascii_bits=8.0 * n,
    )


def strength_report(alphabet_size: int, n: int, model: AttackerModel) -> StrengthReport:
    """Full report combining the counts, the ratio chain, and adequacy."""
    bounds = ratio(alphabet_size, n) if n <= alphabet_size else None
    result = adequacy(alphabet_size, n, model)
    return StrengthReport(
        alphabet_size=alphabet_size,
        length=n,
        total_strings=total_strings(alphabet_size, n),
        expected_guesses=expected_guesses(alphabet_size, n),
        injective_sequences=injective_sequence_count(alphabet_size, n),
        ratio_exact=bounds.exact if bounds else None,
        bound_power=bounds.power_bound if bounds else None,
        bound_exp_approx=bounds.exp_approx if bounds else None,
        adequate=result.adequate,
        min_adequate_length=result.min_adequate_length,
        expected_time_seconds=result.expected_time_seconds,
    )


def enumerate_oracle(
    d: Diagram, n: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> OracleReport:
    """Brute-force walk of every injective cell sequence of length n.

    Counts the sequences one by one (independently of the closed-form
    falling factorial), collects the distinct password strings they read
    off the diagram, and reports the reference lower bound computed from
    the number of distinct letters actually present in the grid.
    """
    if n < 0:
        raise AnalysisError(f"length must be >= 0, got {n}")
    cell_count = d.rows * d.cols
    if injective_sequence_count(cell_count, n) > budget:
        raise BudgetError(
            f"enumerating length-{n} sequences over {cell_count} cells exceeds "
            f"the budget of {budget} sequences"
        )
    letters = [tok for row in d.token_rows() for tok in row]
    sequence_count = 0
    seen: set[str] = set()
    for combo in itertools.permutations(range(cell_count), n):
        sequence_count += 1
        seen.add("".join(letters[i] for i in combo))

    present = validate_diagram(d).present_count
    lower = 1
    for j in range(n):
        lower *= max(present - j, 0)
    return OracleReport(
        n=n,
        sequence_count=sequence_count,
        distinct_passwords=len(seen),
        lower_bound=lower,
    )
