"""Compositions, partitions and straightening of composition Schur functions.

A composition ``L`` indexes the determinant ``s_L = det(h[L_i - i + j])``.
Every such determinant is zero or plus/minus an ordinary Schur function;
:func:`straighten` computes which one by sorting the row values, and
:func:`straighten_by_raises` reaches the same answer through a chain of
raising operations.

Part indices in the public API are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ValidationError(ValueError):
    """Raised for malformed input such as a non-positive part."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


class Composition(tuple):
    """An immutable sequence of positive integers.

    >>> Composition([4, 1])
    Composition(4, 1)
    >>> Composition([4, 1]).size
    5
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for idx, p in enumerate(parts, start=1):
            if isinstance(p, bool) or not isinstance(p, int):
                raise ValidationError(f"part {idx} is not an integer: {p!r}", idx)
            if p < 1:
                raise ValidationError(f"part {idx} must be >= 1, got {p}", idx)
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def sort_key(self) -> tuple:
        """Canonical order: size, then length, then lexicographic."""
        return (sum(self), len(self), tuple(self))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for i in range(1, len(self)):
            if self[i - 1] < self[i]:
                raise ValidationError(
                    f"partition parts must weakly decrease; part {i + 1} "
                    f"({self[i]}) exceeds part {i} ({self[i - 1]})",
                    i + 1,
                )
        return self


@dataclass(frozen=True)
class SignedPartition:
    """Either zero or ``sign * s_shape`` with ``sign`` in {+1, -1}.

    The zero value is stored as ``sign == 0`` with no shape; use :data:`ZERO`.
    """

    sign: int
    shape: Partition | None = None

    def __post_init__(self):
        if self.sign == 0:
            if self.shape is not None:
                raise ValidationError("zero signed partition carries no shape")
        elif self.sign in (1, -1):
            if self.shape is None:
                raise ValidationError("non-zero signed partition needs a shape")
            object.__setattr__(self, "shape", Partition(self.shape))
        else:
            raise ValidationError(f"sign must be +1, -1 or 0, got {self.sign}")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __neg__(self) -> SignedPartition:
        if self.is_zero:
            return self
        return SignedPartition(-self.sign, self.shape)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ("+ " if self.sign > 0 else "- ") + "s[" + ",".join(map(str, self.shape)) + "]"


ZERO = SignedPartition(0)


def negate(sp: SignedPartition) -> SignedPartition:
    return -sp


def make_composition(parts: Iterable[int]) -> Composition:
    return Composition(parts)


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i - 1] >= parts[i] for i in range(1, len(parts))
    )


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic order (largest first part last)."""
    if n < 0:
        return
    if n == 0:
        yield Composition()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield Composition((first,) + rest)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest)


def raise_part(L: Iterable[int], i: int) -> Composition:
    """Return ``L^(i)``: replace ``(L[i-1], L[i])`` by ``(L[i] - 1, L[i-1] + 1)``.

    ``i`` is 1-based and must satisfy ``2 <= i <= len(L)`` with ``L[i] >= 2``.

    >>> raise_part((5, 2, 2), 3)
    Composition(5, 1, 3)
    """
    L = Composition(L)
    k = len(L)
    if not 2 <= i <= k:
        raise DomainError(f"raise index {i} out of range 2..{k}")
    a, b = L[i - 2], L[i - 1]
    if b < 2:
        raise DomainError(f"raise at {i} needs part {i} >= 2, got {b}")
    return Composition(L[: i - 2] + (b - 1, a + 1) + L[i:])


def _row_values(L) -> list[int]:
    return [p - i for i, p in enumerate(L, start=1)]


def _from_values(values: list[int]) -> SignedPartition | None:
    # strictly decreasing values -> shape, or None if a row is identically zero
    parts = [v + j for j, v in enumerate(values, start=1)]
    while parts and parts[-1] == 0:
        parts.pop()
    if parts and parts[-1] < 0:
        return None
    return Partition(parts)


def straighten(L: Iterable[int]) -> SignedPartition:
    """Normal form of ``s_L`` by sorting the rows of its Jacobi-Trudi matrix.

    >>> str(straighten((1, 4)))
    '- s[3,2]'
    >>> straighten((2, 3)).is_zero
    True
    """
    L = tuple(L)
    values = _row_values(L)
    if len(set(values)) < len(values):
        return ZERO
    order = sorted(range(len(values)), key=lambda r: -values[r])
    shape = _from_values([values[r] for r in order])
    if shape is None:
        return ZERO
    return SignedPartition(_permutation_sign(order), shape)


def _permutation_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class RaiseStep:
    index: int
    before: Composition
    after: Composition


@dataclass(frozen=True)
class RaiseChain:
    start: Composition
    steps: tuple[RaiseStep, ...]
    result: SignedPartition
    # 1-based index i with L^(i) == L when the chain stopped at zero
    fixed_index: int | None = None


def raise_chain(L: Iterable[int]) -> RaiseChain:
    """Straighten ``L`` by repeated raising, always at the smallest index.

    Each raise swaps two adjacent row values and flips the sign.  The chain
    stops at zero as soon as two adjacent values agree, since then
    ``L^(i) == L``.
    """
    start = Composition(L)
    current = start
    steps = []
    sign = 1
    while True:
        values = _row_values(current)
        for i in range(2, len(values) + 1):
            if values[i - 2] == values[i - 1]:
                return RaiseChain(start, tuple(steps), ZERO, fixed_index=i)
        up = next((i for i in range(2, len(values) + 1) if values[i - 2] < values[i - 1]), None)
        if up is None:
            break
        nxt = raise_part(current, up)
        steps.append(RaiseStep(up, current, nxt))
        current = nxt
        sign = -sign
    shape = _from_values(_row_values(current))
    if shape is None:
        return RaiseChain(start, tuple(steps), ZERO)
    return RaiseChain(start, tuple(steps), SignedPartition(sign, shape))


def straighten_by_raises(L: Iterable[int]) -> SignedPartition:
    return raise_chain(L).result
