"""Standard Young tableaux, descent compositions, runs and the involution theta.

Tableaux use English notation: row 1 is the top row and rows are numbered
from 1 downward.  theta pairs non-superstandard standard tableaux of a shape
so that the straightened descent compositions of the two partners cancel,
and a tableau that theta fixes straightens to zero.

theta is not total.  It skips the complete superstandard rows at the top and
then acts on the first two runs of what is left.  Those two runs can
themselves be a superstandard two-row block, e.g. ``[[1, 4], [2], [3]]``,
and then there is nothing to apply.  Such tableaux raise
:class:`ThetaUndefined`.  Moreover no sign-reversing involution that agrees
with theta where theta is defined can cover them: in shape (4,1,1) the
tableau ``[[1, 2, 5, 6], [3], [4]]`` has only one admissible partner and
theta already uses that partner.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .combinat import (
    Composition,
    DomainError,
    Partition,
    SignedPartition,
    ValidationError,
    raise_part,
    straighten,
)


class ThetaUndefined(DomainError):
    """theta meets a superstandard two-run block below the superstandard rows."""


class Tableau(tuple):
    """Rows of distinct positive integers, increasing along rows and columns.

    Entries need not be ``1..n``.  See :class:`StandardTableau` for that case.
    """

    def __new__(cls, rows: Iterable[Iterable[int]] = ()):
        rows = tuple(tuple(r) for r in rows)
        self = super().__new__(cls, rows)
        self._validate()
        return self

    def _validate(self) -> None:
        seen = set()
        for r, row in enumerate(self, start=1):
            if not row:
                raise ValidationError(f"row {r} is empty", r)
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                    raise ValidationError(f"row {r} has invalid entry {x!r}", r)
                if x in seen:
                    raise ValidationError(f"entry {x} appears twice", r)
                seen.add(x)
            if any(row[c - 1] >= row[c] for c in range(1, len(row))):
                raise ValidationError(f"row {r} is not strictly increasing", r)
            if r > 1:
                above = self[r - 2]
                if len(row) > len(above):
                    raise ValidationError(f"row {r} is longer than row {r - 1}", r)
                if any(above[c] >= row[c] for c in range(len(row))):
                    raise ValidationError(f"a column fails to increase at row {r}", r)

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self)

    def entries(self) -> list[int]:
        return sorted(x for row in self for x in row)

    def positions(self) -> dict[int, tuple[int, int]]:
        """Map entry -> (row, column), both 1-based."""
        return {x: (r, c) for r, row in enumerate(self, 1) for c, x in enumerate(row, 1)}

    def reading_word(self) -> tuple[int, ...]:
        """Entries read row by row from the top."""
        return tuple(x for row in self for x in row)

    def relabel(self, mapping) -> Tableau:
        return Tableau([[mapping[x] for x in row] for row in self])

    def standardize(self) -> tuple[StandardTableau, list[int]]:
        """Order-isomorphic relabelling to ``1..n``; also return the sorted entries."""
        values = self.entries()
        rank = {x: i for i, x in enumerate(values, start=1)}
        return StandardTableau([[rank[x] for x in row] for row in self]), values

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_list()})"

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self) + "]"


class StandardTableau(Tableau):
    """A tableau whose entries are exactly ``1..n``."""

    def _validate(self) -> None:
        super()._validate()
        n = self.size
        if self.entries() != list(range(1, n + 1)):
            raise ValidationError(f"entries of a standard tableau must be 1..{n}")


def as_standard(T) -> StandardTableau:
    return T if isinstance(T, StandardTableau) else StandardTableau(T)


def enumerate_syt(shape: Iterable[int]) -> list[StandardTableau]:
    """All standard tableaux of ``shape``, sorted by row-reading word.

    Entries ``1, 2, ...`` are placed in turn into an addable cell, trying rows
    from the top down; the superstandard tableau always comes first.
    """
    shape = Partition(shape)
    n = shape.size
    rows: list[list[int]] = [[] for _ in shape]
    out: list[StandardTableau] = []

    def place(m: int) -> None:
        if m > n:
            out.append(StandardTableau(rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(m)
                place(m + 1)
                rows[r].pop()

    place(1)
    out.sort(key=Tableau.reading_word)
    return out


@dataclass(frozen=True)
class DescentData:
    descents: tuple[int, ...]
    composition: Composition


def descent_data(T) -> DescentData:
    """Descents ``i`` (``i + 1`` sits in a lower row) and the descent composition.

    >>> descent_data([[1, 2, 3, 4, 5], [6, 7, 9], [8]]).composition
    Composition(5, 2, 2)
    """
    T = as_standard(T)
    n = T.size
    pos = T.positions()
    descents = tuple(i for i in range(1, n) if pos[i + 1][0] > pos[i][0])
    cuts = (0,) + descents + (n,)
    comp = Composition(cuts[k + 1] - cuts[k] for k in range(len(cuts) - 1)) if n else Composition()
    return DescentData(descents, comp)


def descent_composition(T) -> Composition:
    return descent_data(T).composition


class Cell(NamedTuple):
    entry: int
    row: int
    col: int


def runs(T) -> list[tuple[Cell, ...]]:
    """Split ``T`` into maximal blocks of consecutive entries between descents.

    Each run is a tuple of cells in increasing entry order.
    """
    T = as_standard(T)
    pos = T.positions()
    data = descent_data(T)
    cuts = (0,) + data.descents + (T.size,)
    out = []
    for k in range(len(cuts) - 1):
        out.append(tuple(Cell(x, *pos[x]) for x in range(cuts[k] + 1, cuts[k + 1] + 1)))
    return [r for r in out if r]


def superstandard(shape: Iterable[int]) -> StandardTableau:
    shape = Partition(shape)
    rows, start = [], 1
    for part in shape:
        rows.append(list(range(start, start + part)))
        start += part
    return StandardTableau(rows)


def is_superstandard(T) -> bool:
    T = as_standard(T)
    return T == superstandard(T.shape)


def superstandard_prefix_length(T) -> int:
    """Largest ``k`` such that the top ``k`` rows hold ``1..λ1+...+λk`` row by row."""
    T = as_standard(T)
    if is_superstandard(T):
        raise DomainError("superstandard tableau has no non-superstandard rows")
    k, start = 0, 1
    for row in T:
        if row != tuple(range(start, start + len(row))):
            break
        start += len(row)
        k += 1
    assert len(T) >= k + 2, "non-superstandard suffix must span two rows"
    return k


def _two_run_tableau(shape: Partition, j: int) -> StandardTableau:
    # T_j: first row 1..j then j+l2+1..n, second row j+1..j+l2
    l1, l2 = shape
    n = l1 + l2
    return StandardTableau([
        list(range(1, j + 1)) + list(range(j + l2 + 1, n + 1)),
        list(range(j + 1, j + l2 + 1)),
    ])


def two_run_index(T2) -> int:
    """The first-run length ``j`` of a two-row tableau with exactly two runs."""
    T2 = Tableau(T2)
    std, _ = T2.standardize()
    if len(std) != 2:
        raise DomainError(f"expected a two-row tableau, got {len(std)} rows")
    comp = descent_composition(std)
    if len(comp) != 2:
        raise DomainError(f"expected exactly two runs, got {len(comp)}")
    j = comp[0]
    l1, l2 = std.shape
    assert l2 <= j <= l1 and std == _two_run_tableau(std.shape, j)
    return j


def theta_two_run(T2) -> Tableau:
    """Send ``T_j`` to ``T_{n-j-1}``, where ``j`` is the first-run length.

    Works on any distinct entries by relabelling to ``1..n`` and back.
    """
    T2 = Tableau(T2)
    j = two_run_index(T2)
    std, values = T2.standardize()
    l1, l2 = std.shape
    if j == l1:
        raise DomainError("superstandard: theta undefined")
    n = l1 + l2
    image = _two_run_tableau(std.shape, n - j - 1)
    return image.relabel({i: v for i, v in enumerate(values, start=1)})


@dataclass(frozen=True)
class ThetaResult:
    tableau: StandardTableau
    image: StandardTableau
    prefix_rows: int
    # C(image) == raise_part(C(tableau), raise_index)
    raise_index: int

    @property
    def is_fixed(self) -> bool:
        return self.tableau == self.image


def theta_trace(T) -> ThetaResult:
    """theta with the bookkeeping: prefix length ``k`` and raising index.

    Raises :class:`ThetaUndefined` where theta has no definition.
    """
    T = as_standard(T)
    if is_superstandard(T):
        raise DomainError("superstandard: theta undefined")
    k = superstandard_prefix_length(T)
    sub = Tableau(T[k:])
    std_sub, values = sub.standardize()
    sub_runs = runs(std_sub)
    if len(sub_runs) < 2:
        raise AssertionError("subtableau below the superstandard prefix has one run")
    first, second = sub_runs[0], sub_runs[1]

    # the first two runs must fill a straight two-row shape in the top of sub
    top = [c for c in first + second if c.row == 1]
    bottom = [c for c in first + second if c.row == 2]
    if (
        any(c.row != 1 for c in first)
        or len(top) + len(bottom) != len(first) + len(second)
        or [c.col for c in top] != list(range(1, len(top) + 1))
        or [c.col for c in bottom] != list(range(1, len(bottom) + 1))
    ):
        raise AssertionError(f"first two runs of {sub} do not form a two-row shape")

    label = {i: v for i, v in enumerate(values, start=1)}
    fragment = Tableau([[label[c.entry] for c in top], [label[c.entry] for c in bottom]])
    if len(top) == len(first):
        raise ThetaUndefined(
            f"theta undefined on {T}: runs {k + 1} and {k + 2} form the "
            f"superstandard block {fragment}"
        )
    new_fragment = theta_two_run(fragment)

    rows = [list(r) for r in T]
    for r, frag_row in enumerate(new_fragment):
        rows[k + r][: len(frag_row)] = frag_row
    image = StandardTableau(rows)
    i = k + 2
    assert descent_composition(image) == raise_part(descent_composition(T), i)
    return ThetaResult(T, image, k, i)


def theta(T) -> StandardTableau:
    """The sign-reversing involution on non-superstandard standard tableaux.

    >>> theta([[1, 2, 3, 4, 5], [6, 7, 9], [8]])
    StandardTableau([[1, 2, 3, 4, 5], [6, 8, 9], [7]])
    """
    return theta_trace(T).image


@dataclass(frozen=True)
class PairingEntry:
    tableau: StandardTableau
    composition: Composition
    value: SignedPartition
    status: str  # "superstandard", "fixed", "paired" or "undefined"
    partner: int | None = None
    raise_index: int | None = None


@dataclass(frozen=True)
class PairingReport:
    shape: Partition
    entries: tuple[PairingEntry, ...]
    total: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict[str, int]:
        out = {"superstandard": 0, "fixed": 0, "paired": 0, "undefined": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(i, e.partner) for i, e in enumerate(self.entries)
                if e.status == "paired" and i < e.partner]

    @property
    def sum_ok(self) -> bool:
        """The signed sum over all tableaux is exactly ``s_shape``."""
        return self.total == {self.shape: 1}

    @property
    def theta_ok(self) -> bool:
        """theta is defined everywhere off the superstandard tableau and cancels correctly."""
        if self.counts["superstandard"] != 1 or self.counts["undefined"]:
            return False
        for i, e in enumerate(self.entries):
            if e.status == "fixed" and not e.value.is_zero:
                return False
            if e.status == "paired":
                other = self.entries[e.partner]
                if other.partner != i or other.value != -e.value:
                    return False
        return True


def signed_sum(values: Iterable[SignedPartition]) -> dict[Partition, int]:
    total: dict[Partition, int] = {}
    for v in values:
        if not v.is_zero:
            total[v.shape] = total.get(v.shape, 0) + v.sign
    return {k: c for k, c in total.items() if c}


def cancellation_pairing(shape: Sequence[int]) -> PairingReport:
    """Classify every standard tableau of ``shape`` under theta."""
    shape = Partition(shape)
    tableaux = enumerate_syt(shape)
    index = {T: i for i, T in enumerate(tableaux)}
    entries = []
    for T in tableaux:
        comp = descent_composition(T)
        value = straighten(comp)
        if is_superstandard(T):
            entries.append(PairingEntry(T, comp, value, "superstandard"))
            continue
        try:
            res = theta_trace(T)
        except ThetaUndefined:
            entries.append(PairingEntry(T, comp, value, "undefined"))
            continue
        status = "fixed" if res.is_fixed else "paired"
        partner = None if res.is_fixed else index[res.image]
        entries.append(PairingEntry(T, comp, value, status, partner, res.raise_index))
    return PairingReport(shape, tuple(entries), signed_sum(e.value for e in entries))
