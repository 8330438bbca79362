"""Exact arithmetic, the game definition, and agent decision primitives.

Every probability, utility and performance value in the solvers is an exact
rational.  Exactness is not cosmetic: an agent that is exactly indifferent
between its two options falls back to its preference type, so equality of
expected utilities has to be decidable.  Floats appear only in Monte Carlo
estimation and in formatted output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

try:
    from gmpy2 import mpq as _mpq

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = None
    HAVE_GMPY2 = False


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------

ZERO = _mpq(0) if HAVE_GMPY2 else Fraction(0)
ONE = _mpq(1) if HAVE_GMPY2 else Fraction(1)


def rat(numerator, denominator=1):
    """Exact rational from ints (or anything Fraction accepts)."""
    if HAVE_GMPY2:
        return _mpq(numerator, denominator)
    return Fraction(numerator, denominator)


def parse_rational(text: str):
    """Parse "a/b", an integer, or a decimal literal, exactly.

    Decimal strings are read digit-by-digit ("0.45" -> 45/100), never through
    binary floating point.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num, den = int(num_s), int(den_s)
        if den <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return rat(num, den)
    if "e" in s.lower():
        raise ValueError(f"scientific notation not supported: {text!r}")
    if "." in s:
        int_part, frac_part = s.split(".", 1)
        if not frac_part.isdigit():
            raise ValueError(f"bad decimal literal {text!r}")
        sign = -1 if int_part.lstrip().startswith("-") else 1
        whole = int(int_part) if int_part not in ("", "-", "+") else 0
        scale = 10 ** len(frac_part)
        return rat(whole * scale + sign * int(frac_part), scale)
    return rat(int(s))


def format_rational(r) -> str:
    """Canonical "num/den" form, including "0/1" and "3/1"."""
    return f"{int(r.numerator)}/{int(r.denominator)}"


def round_half_up(r, digits: int):
    """Exact half-up rounding of a rational to a decimal Fraction."""
    scale = 10**digits
    scaled = r * scale + rat(1, 2)
    import math

    return rat(math.floor(scaled), scale)


# ---------------------------------------------------------------------------
# Choices
# ---------------------------------------------------------------------------

Y = "Y"
N = "N"
U = "U"  # undecided marker inside situations
CHOICES = (Y, N)

Choice = str
Situation = tuple  # per-node value in {Y, N, U}
TypeVector = tuple  # per-node preference type in {Y, N}


def other(c: Choice) -> Choice:
    """The complement choice; other(other(c)) == c."""
    if c == Y:
        return N
    if c == N:
        return Y
    raise ValueError(f"not a choice: {c!r}")


def empty_situation(n: int) -> Situation:
    return (U,) * n


def decided(sit: Situation) -> int:
    return sum(1 for c in sit if c != U)


# ---------------------------------------------------------------------------
# Game definition
# ---------------------------------------------------------------------------


class GameValidationError(ValueError):
    pass


@dataclass(frozen=True)
class GameSpec:
    """A game: a graph, the Y-type probability p, and the type bonus pi.

    ``p`` must lie in (0, 1/2); ``p == 1/2`` is admitted only when
    ``allow_half_p`` is set (used by symmetry tests at the boundary).
    ``pi`` must be positive but may exceed the maximum degree, in which case
    every agent simply chooses its type.
    """

    graph: object
    p: object
    pi: object
    allow_half_p: bool = False

    def __post_init__(self):
        object.__setattr__(self, "p", rat(self.p) if isinstance(self.p, int) else self.p)
        object.__setattr__(self, "pi", rat(self.pi) if isinstance(self.pi, int) else self.pi)
        half = rat(1, 2)
        if not (0 < self.p):
            raise GameValidationError(f"p must be positive, got {self.p}")
        if self.p > half or (self.p == half and not self.allow_half_p):
            raise GameValidationError(
                f"p must be < 1/2 (p = 1/2 requires allow_half_p), got {self.p}"
            )
        if not (self.pi > 0):
            raise GameValidationError(f"pi must be > 0, got {self.pi}")
        if getattr(self.graph, "n", 0) <= 0:
            raise GameValidationError("graph must be nonempty")

    @property
    def n(self) -> int:
        return self.graph.n


# ---------------------------------------------------------------------------
# Decision primitives
# ---------------------------------------------------------------------------


def utility(t: Choice, c: Choice, neighbor_choices: Iterable[Choice], pi):
    """Realized utility: pi if the choice matches the type, plus one per
    neighbor that made the same choice."""
    matches = sum(1 for nc in neighbor_choices if nc == c)
    return (pi if c == t else ZERO) + matches


def myopic_decision(t: Choice, m_y: int, m_n: int, pi) -> Choice:
    """Myopic rule: follow type while |m_y - m_n| <= pi, else the majority."""
    d = m_y - m_n
    if abs(d) <= pi:
        return t
    return Y if d > 0 else N


def tie_break(t: Choice, u_y, u_n) -> Choice:
    """Strict expected-utility comparison; exact ties go to the agent's type."""
    if u_y > u_n:
        return Y
    if u_n > u_y:
        return N
    return t


@dataclass(frozen=True)
class PerformanceResult:
    """Expected number of Y-choosers, exact, with the node count it is over."""

    count: object
    n: int

    @property
    def fraction(self):
        return self.count / self.n

    def to_json(self) -> dict:
        return {
            "count": format_rational(rat(self.count)),
            "fraction": format_rational(rat(self.fraction)),
            "float": float(self.fraction),
            "n": self.n,
        }
