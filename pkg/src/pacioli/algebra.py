"""Two-sided account arithmetic over unsigned integer vectors.

The central object is the T-term ``[debit // credit]``: an ordered pair of
equal-length vectors of unsigned integers.  T-terms add componentwise side
by side, and two T-terms count as equal when their cross-sums agree
(``[x // y] == [w // z]`` iff ``x + z == y + w``).  Under those definitions
the T-terms form a commutative group -- the group of differences, or
Pacioli group -- even though no negative number is ever stored: the inverse
of ``[x // y]`` is simply ``[y // x]``.

Signed vectors enter and leave the system only through the two encodings:
a debit-balance reading maps ``[x // y]`` to ``x - y`` and a credit-balance
reading maps it to ``y - x``.  Going the other way, a signed vector splits
into its disjoint positive and negative parts (Jordan decomposition) and
lands on one side or the other of a T-term.

Everything here is immutable and pure; dimensions are checked on every
binary operation.  Components are plain Python ints, so magnitudes are
unbounded and no overflow handling is needed.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["DimensionMismatch", "NatVec", "IntVec", "TTerm"]


class DimensionMismatch(ValueError):
    """An operation mixed vectors of different lengths."""


def _same_dimension(a, b) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )


def _checked_components(components, *, signed: bool) -> tuple[int, ...]:
    items = tuple(components)
    if not items:
        raise ValueError("a vector needs at least one component")
    for c in items:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"vector component {c!r} is not an int")
        if not signed and c < 0:
            raise ValueError(f"negative component {c} in an unsigned vector")
    return items


@dataclass(frozen=True)
class NatVec:
    """An ordered tuple of unsigned integers (dimension >= 1)."""

    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", _checked_components(self.components, signed=False)
        )

    @classmethod
    def of(cls, *components: int) -> "NatVec":
        return cls(components)

    @classmethod
    def zeros(cls, dimension: int) -> "NatVec":
        return cls((0,) * dimension)

    @property
    def dimension(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, index: int) -> int:
        return self.components[index]

    def __add__(self, other: "NatVec") -> "NatVec":
        _same_dimension(self, other)
        return NatVec(tuple(a + b for a, b in zip(self.components, other.components)))

    def minimum(self, other: "NatVec") -> "NatVec":
        """Componentwise minimum."""
        _same_dimension(self, other)
        return NatVec(tuple(map(min, self.components, other.components)))

    def maximum(self, other: "NatVec") -> "NatVec":
        """Componentwise maximum."""
        _same_dimension(self, other)
        return NatVec(tuple(map(max, self.components, other.components)))

    def is_disjoint(self, other: "NatVec") -> bool:
        """True when the componentwise minimum is the zero vector."""
        _same_dimension(self, other)
        return all(min(a, b) == 0 for a, b in zip(self.components, other.components))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)

    def to_signed(self) -> "IntVec":
        return IntVec(self.components)

    def __str__(self) -> str:
        if len(self.components) == 1:
            return str(self.components[0])
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class IntVec:
    """An ordered tuple of signed integers (dimension >= 1)."""

    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", _checked_components(self.components, signed=True)
        )

    @classmethod
    def of(cls, *components: int) -> "IntVec":
        return cls(components)

    @classmethod
    def zeros(cls, dimension: int) -> "IntVec":
        return cls((0,) * dimension)

    @classmethod
    def total(cls, vectors: Iterable["IntVec"], dimension: int) -> "IntVec":
        """Signed sum of `vectors`; the zero vector of `dimension` if empty."""
        result = cls.zeros(dimension)
        for v in vectors:
            result = result + v
        return result

    @property
    def dimension(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, index: int) -> int:
        return self.components[index]

    def __add__(self, other: "IntVec") -> "IntVec":
        _same_dimension(self, other)
        return IntVec(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "IntVec") -> "IntVec":
        _same_dimension(self, other)
        return IntVec(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "IntVec":
        return IntVec(tuple(-c for c in self.components))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components)

    def jordan(self) -> tuple[NatVec, NatVec]:
        """Split into disjoint unsigned positive and negative parts.

        Returns ``(pos, neg)`` with ``pos - neg == self`` and
        ``pos.is_disjoint(neg)``; the pair is the unique one with both
        properties.
        """
        pos = NatVec(tuple(max(c, 0) for c in self.components))
        neg = NatVec(tuple(-min(c, 0) for c in self.components))
        return pos, neg

    def to_unsigned(self) -> NatVec:
        """Reinterpret as unsigned; raises if any component is negative."""
        return NatVec(self.components)

    def __str__(self) -> str:
        if len(self.components) == 1:
            return str(self.components[0])
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class TTerm:
    """A two-sided account value ``[debit // credit]``.

    ``==`` (and hashing) is structural: both sides componentwise identical.
    Group equality -- the thing that makes ``[12 // 5]`` the same balance as
    ``[7 // 0]`` -- is :meth:`equivalent`.  Keep structural identity for
    container keys and serialization, and `equivalent` for the mathematics.
    """

    debit: NatVec
    credit: NatVec

    def __post_init__(self):
        _same_dimension(self.debit, self.credit)

    @classmethod
    def zero(cls, dimension: int) -> "TTerm":
        return cls(NatVec.zeros(dimension), NatVec.zeros(dimension))

    @classmethod
    def from_debit_balance(cls, value: IntVec) -> "TTerm":
        """Encode a signed vector as a debit-balance T-term ``[v+ // v-]``.

        The result is reduced, and :meth:`debit_balance` inverts it.
        """
        pos, neg = value.jordan()
        return cls(pos, neg)

    @classmethod
    def from_credit_balance(cls, value: IntVec) -> "TTerm":
        """Encode a signed vector as a credit-balance T-term ``[v- // v+]``."""
        pos, neg = value.jordan()
        return cls(neg, pos)

    @property
    def dimension(self) -> int:
        return self.debit.dimension

    def __add__(self, other: "TTerm") -> "TTerm":
        return TTerm(self.debit + other.debit, self.credit + other.credit)

    def __neg__(self) -> "TTerm":
        return TTerm(self.credit, self.debit)

    def equivalent(self, other: "TTerm") -> bool:
        """Group equality: the cross-sums agree componentwise."""
        _same_dimension(self, other)
        return self.debit + other.credit == other.debit + self.credit

    def is_zero(self) -> bool:
        """True when debit equals credit componentwise (a zero-term)."""
        return self.debit == self.credit

    def is_reduced(self) -> bool:
        return self.debit.is_disjoint(self.credit)

    def reduced(self) -> "TTerm":
        """The unique equivalent T-term with disjoint sides.

        Subtracts the componentwise minimum from both sides; this is the
        only subtraction in the whole system, and it cannot go negative.
        """
        m = self.debit.minimum(self.credit)
        return TTerm(
            NatVec(tuple(a - b for a, b in zip(self.debit, m))),
            NatVec(tuple(a - b for a, b in zip(self.credit, m))),
        )

    def debit_balance(self) -> IntVec:
        """Signed value under the debit reading: debit - credit."""
        return self.debit.to_signed() - self.credit.to_signed()

    def credit_balance(self) -> IntVec:
        """Signed value under the credit reading: credit - debit."""
        return self.credit.to_signed() - self.debit.to_signed()

    def __str__(self) -> str:
        return f"[{self.debit} // {self.credit}]"
