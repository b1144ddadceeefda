"""Integer sequences attached to mu = 15 + 4*sqrt(14) and nu = 15 - 4*sqrt(14).

Everything that looks irrational in the closed forms is carried through the
integer pair

    S_k = mu**k + nu**k            T_k = (mu**k - nu**k) / (8*sqrt(14))

which both satisfy ``x_{k+1} = 30 x_k - x_{k-1}``.  Since ``mu * nu = 1`` they
obey ``S_k**2 - 896 T_k**2 = 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .graphs import Variant

RADICAND = 14


@dataclass(frozen=True)
class QuadFieldElement:
    """``a + b*sqrt(14)`` with rational ``a``, ``b``."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _coerce(x) -> "QuadFieldElement":
        if isinstance(x, QuadFieldElement):
            return x
        if isinstance(x, (int, Rational)):
            return QuadFieldElement(Fraction(x))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadFieldElement(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElement(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadFieldElement(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadFieldElement(
            self.a * o.a + RADICAND * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result, base = QuadFieldElement(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QuadFieldElement":
        return QuadFieldElement(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - RADICAND * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def to_integer(self) -> int:
        """Exact integer value; raises if a sqrt(14) part or fraction remains."""
        if self.b != 0 or self.a.denominator != 1:
            raise ArithmeticError(f"{self} is not an integer")
        return self.a.numerator

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * RADICAND**0.5

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({RADICAND})"


MU = QuadFieldElement(15, 4)
NU = QuadFieldElement(15, -4)


@lru_cache(maxsize=None)
def lucas(k: int) -> tuple[int, int]:
    """``(S_k, T_k)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    s_prev, s, t_prev, t = 2, 30, 0, 1
    if k == 0:
        return s_prev, t_prev
    for _ in range(k - 1):
        s_prev, s = s, 30 * s - s_prev
        t_prev, t = t, 30 * t - t_prev
    return s, t


def lucas_from_power(k: int) -> tuple[int, int]:
    """``(S_k, T_k)`` read off ``mu**k = S_k/2 + 4 T_k sqrt(14)``."""
    p = MU**k
    s, t = 2 * p.a, p.b / 4
    if s.denominator != 1 or t.denominator != 1:
        raise ArithmeticError("mu**k has unexpected form")
    return s.numerator, t.numerator


# q_j = c * mu**(j // 4) + conj(c) * nu**(j // 4), with c indexed by j mod 4
_CLOSED_COEFFS = {
    "standard": {
        0: QuadFieldElement(Fraction(1, 2), Fraction(9, 56)),
        1: QuadFieldElement(2, Fraction(31, 56)),
        2: QuadFieldElement(Fraction(7, 2), Fraction(53, 56)),
        3: QuadFieldElement(5, Fraction(75, 56)),
    },
    "primed": {
        0: QuadFieldElement(Fraction(1, 2), Fraction(11, 56)),
        1: QuadFieldElement(1, Fraction(17, 56)),
        2: QuadFieldElement(Fraction(3, 2), Fraction(23, 56)),
        3: QuadFieldElement(5, Fraction(75, 56)),
    },
}

# diagonal entry 4 (instead of 2) at these residues of j mod 4
_HEAVY = {"standard": (0, 1), "primed": (3, 0)}


def _check_which(which: str) -> str:
    if which not in _HEAVY:
        raise ValueError(f"which must be 'standard' or 'primed', got {which!r}")
    return which


@lru_cache(maxsize=8)
def _recurrence_table(which: str, upto: int) -> tuple[int, ...]:
    heavy = _HEAVY[which]
    q = [1]
    for j in range(1, upto + 1):
        d = 4 if j % 4 in heavy else 2
        q.append(d * q[j - 1] - (q[j - 2] if j >= 2 else 0))
    return tuple(q)


def q_recurrence(j: int, which: str = "standard") -> int:
    if j < 0:
        raise ValueError("j must be >= 0")
    _check_which(which)
    # grow the cached table in chunks so repeated calls stay cheap
    upto = max(64, 1 << (j.bit_length()))
    return _recurrence_table(which, upto)[j]


def q_closed(j: int, which: str = "standard") -> int:
    """``q_j`` from the mu/nu closed form, evaluated exactly in Q(sqrt 14)."""
    if j < 1:
        if j == 0:
            return 1
        raise ValueError("j must be >= 0")
    c = _CLOSED_COEFFS[_check_which(which)][j % 4]
    k = j // 4
    return (c * MU**k + c.conjugate() * NU**k).to_integer()


def q_value(j: int, which: str = "standard") -> int:
    """Leading ``j x j`` minor; the two evaluation routes must agree."""
    r = q_recurrence(j, which)
    c = q_closed(j, which)
    if r != c:
        raise ArithmeticError(f"q_{j} ({which}): recurrence {r} != closed form {c}")
    return r


def residue_views(k: int) -> dict[str, int]:
    """``a_k, b_k, c_k, d_k = q_{4k}, q_{4k+1}, q_{4k+2}, q_{4k+3}``."""
    return {
        "a": q_recurrence(4 * k),
        "b": q_recurrence(4 * k + 1),
        "c": q_recurrence(4 * k + 2),
        "d": q_recurrence(4 * k + 3),
    }


_DET_SHIFT = {Variant.MOBIUS: 2, Variant.CYLINDER: -2}


def det_ls(n: int, variant: "str | Variant") -> int:
    """``det L_S = S_n + 2`` (mobius) or ``S_n - 2`` (cylinder).

    Cross-checked against the cofactor expansion
    ``q_{4n} - q'_{4n-2} +/- 2``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    variant = Variant.parse(variant)
    shift = _DET_SHIFT[variant]
    via_lucas = lucas(n)[0] + shift
    via_minors = q_recurrence(4 * n) - q_recurrence(4 * n - 2, "primed") + shift
    if via_lucas != via_minors:
        raise ArithmeticError(f"det L_S mismatch at n={n}: {via_lucas} vs {via_minors}")
    return via_lucas


def minor_sum(n: int) -> int:
    """Sum of the ``4n`` principal ``(4n-1)``-minors of ``L_S``: ``72 n T_n``.

    The same for both variants.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return 72 * n * lucas(n)[1]


def minor_subtotals(n: int) -> dict[int, int]:
    """Minor sums split by the residue of the deleted index ``j mod 4``.

    Returns ``{0: 10nT, 1: 10nT, 2: 26nT, 3: 26nT}``, each computed from the
    q-sequences and checked against the T_n form.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = q_recurrence
    m = 4 * n

    def qp(j):
        return q_recurrence(j, "primed")

    via_q = {
        0: n * q(m - 1),
        1: n * qp(m - 1),
        2: n * (2 * (4 * q(m - 3) - qp(m - 4)) - q(m - 3)),
        3: n * (4 * q(m - 2) - qp(m - 3)),
    }
    t = lucas(n)[1]
    via_t = {0: 10 * n * t, 1: 10 * n * t, 2: 26 * n * t, 3: 26 * n * t}
    if via_q != via_t:
        raise ArithmeticError(f"minor subtotals disagree at n={n}: {via_q} vs {via_t}")
    return via_t
