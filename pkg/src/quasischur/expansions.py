"""F-basis and Schur-basis expansions, and a monomial polynomial oracle.

:func:`F_to_schur` rewrites ``sum c_L F_L`` as ``sum c_L s_L`` and
straightens each ``s_L``.  The answer is only meaningful when the input is
symmetric, which :func:`verified_convert` checks by re-expanding.

The oracle half of the module (:class:`SparsePolynomial`, :func:`h_poly`,
:func:`F_poly`, :func:`jacobi_trudi_poly`) works with honest polynomials in
finitely many variables.  It shares no code with the straightening path, so
identities checked through it are independent confirmations.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .combinat import Composition, Partition, ValidationError, straighten
from .tableaux import descent_composition, enumerate_syt


class _Expansion(Mapping):
    """Immutable sparse integer combination of basis elements."""

    basis = "?"
    _key_type = Composition

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise ValidationError(f"coefficient of {key} is not an integer: {coeff!r}")
            key = self._key_type(key)
            acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: acc[k] for k in sorted(acc, key=Composition.sort_key) if acc[k]}

    def __getitem__(self, key):
        return self._terms[tuple(key)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __hash__(self):
        return hash((self.basis, tuple(self._terms.items())))

    def __eq__(self, other):
        if isinstance(other, _Expansion):
            return self.basis == other.basis and self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def _check(self, other):
        if not isinstance(other, type(self)):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        return type(self)(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.items()})

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({k: scalar * c for k, c in self.items()})

    __rmul__ = __mul__

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self})

    def homogeneous_part(self, degree: int):
        return type(self)({k: c for k, c in self.items() if sum(k) == degree})

    def to_json(self) -> list[dict]:
        return [{"basis": self.basis, "index": list(k), "coeff": c} for k, c in self.items()]

    def __str__(self) -> str:
        if not self:
            return "0"
        pieces = []
        for n, (k, c) in enumerate(self.items()):
            atom = self.basis + "[" + ",".join(map(str, k)) + "]"
            mag = abs(c)
            body = atom if mag == 1 else f"{mag}*{atom}"
            if n == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({ {tuple(k): c for k, c in self.items()} })"


class FExpansion(_Expansion):
    """Integer combination of fundamental quasi-symmetric functions ``F_L``."""

    basis = "F"
    _key_type = Composition


class SchurExpansion(_Expansion):
    """Integer combination of Schur functions ``s_λ`` indexed by partitions."""

    basis = "s"
    _key_type = Partition


# -- conversions -------------------------------------------------------------

def schur_to_F(shape: Iterable[int]) -> FExpansion:
    """``s_λ`` as the sum of ``F_C(T)`` over standard tableaux ``T`` of shape λ."""
    return FExpansion((descent_composition(T), 1) for T in enumerate_syt(shape))


def schur_expansion_to_F(g: SchurExpansion) -> FExpansion:
    terms = []
    for shape, c in g.items():
        terms.extend((comp, c * m) for comp, m in schur_to_F(shape).items())
    return FExpansion(terms)


def F_to_schur(f: FExpansion | Mapping) -> SchurExpansion:
    """Replace each ``F_L`` by ``s_L`` and straighten.

    Total on all inputs; for a non-symmetric ``f`` the result is only formal.
    """
    terms = []
    for comp, c in f.items():
        value = straighten(comp)
        if not value.is_zero:
            terms.append((value.shape, value.sign * c))
    return SchurExpansion(terms)


def straighten_schur_terms(terms: Mapping) -> SchurExpansion:
    """Collect ``sum c_L s_L`` over arbitrary compositions ``L`` into partitions."""
    return F_to_schur(terms)


@dataclass(frozen=True)
class ConversionReport:
    schur: SchurExpansion
    symmetric: bool
    # f minus the re-expansion of the Schur result; empty when symmetric
    discrepancy: FExpansion
    first_mismatch: Composition | None = None

    def __str__(self) -> str:
        if self.symmetric:
            return "symmetric: confirmed"
        return f"not symmetric: discrepancy at composition {self.first_mismatch}"


def verified_convert(f: FExpansion | Mapping) -> ConversionReport:
    """:func:`F_to_schur` plus a round-trip check that ``f`` is symmetric.

    The check is done one homogeneous degree at a time, lowest first, so the
    reported mismatch is the canonically first differing composition.
    """
    f = f if isinstance(f, FExpansion) else FExpansion(f)
    g = F_to_schur(f)
    diff = FExpansion()
    for d in f.degrees():
        diff = diff + (f.homogeneous_part(d) - schur_expansion_to_F(g.homogeneous_part(d)))
    first = next(iter(diff), None)
    return ConversionReport(g, not diff, diff, first)


# -- polynomial oracle -------------------------------------------------------

class SparsePolynomial:
    """Integer polynomial in ``nvars`` variables stored as {exponent tuple: coeff}."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms=()):
        if nvars < 0:
            raise ValidationError("nvars must be >= 0")
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValidationError(f"bad exponent vector {exp} for {nvars} variables")
            acc[exp] = acc.get(exp, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> SparsePolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def _same_ring(self, other: SparsePolynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._same_ring(other)
        return SparsePolynomial(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {e: other * c for e, c in self._terms.items()})
        self._same_ring(other)
        # monomials packed into one int so that multiplying them is addition
        width = max(self.degree(), other.degree()).bit_length() + 1
        left = [(_pack(e, width), c) for e, c in self._terms.items()]
        right = [(_pack(e, width), c) for e, c in other._terms.items()]
        acc: dict[int, int] = {}
        for k1, c1 in left:
            for k2, c2 in right:
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        out = SparsePolynomial(self.nvars)
        out._terms = {_unpack(k, width, self.nvars): c for k, c in acc.items() if c}
        return out

    __rmul__ = __mul__

    def swap(self, i: int, j: int) -> SparsePolynomial:
        """Exchange variables ``i`` and ``j`` (0-based)."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return SparsePolynomial(self.nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms()]}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for n, (exp, c) in enumerate(self.sorted_terms()):
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}"
                       for i, e in enumerate(exp, start=1) if e]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}*{mono}"
            if n == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {self._terms})"


def _pack(exp: tuple[int, ...], width: int) -> int:
    key = 0
    for e in exp:
        key = (key << width) | e
    return key


def _unpack(key: int, width: int, nvars: int) -> tuple[int, ...]:
    mask = (1 << width) - 1
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & mask
        key >>= width
    return tuple(out)


def _monomial(indices: Iterable[int], nvars: int) -> tuple[int, ...]:
    exp = [0] * nvars
    for i in indices:
        exp[i] += 1
    return tuple(exp)


@lru_cache(maxsize=None)
def h_poly(k: int, nvars: int) -> SparsePolynomial:
    """Complete homogeneous symmetric polynomial; zero for ``k < 0``."""
    if k < 0:
        return SparsePolynomial(nvars)
    return SparsePolynomial(
        nvars, ((_monomial(idx, nvars), 1) for idx in combinations_with_replacement(range(nvars), k))
    )


def F_poly(L: Iterable[int], nvars: int) -> SparsePolynomial:
    """Fundamental quasi-symmetric polynomial ``F_L`` in ``nvars`` variables.

    Sums over weakly increasing index sequences that increase strictly
    right after each partial sum ``L_1, L_1 + L_2, ...``.
    """
    L = Composition(L)
    n = L.size
    strict = set()
    acc = 0
    for part in L[:-1]:
        acc += part
        strict.add(acc)
    terms: dict[tuple[int, ...], int] = {}
    for idx in combinations_with_replacement(range(nvars), n):
        if all(idx[j - 1] < idx[j] for j in strict):
            m = _monomial(idx, nvars)
            terms[m] = terms.get(m, 0) + 1
    return SparsePolynomial(nvars, terms)


def jacobi_trudi_poly(L: Iterable[int], nvars: int) -> SparsePolynomial:
    """``det(h[L_i - i + j])`` expanded over permutations, skipping zero entries."""
    L = tuple(L)
    k = len(L)
    total = SparsePolynomial.constant(nvars, 0)

    def expand(row: int, used: list[bool], sign: int, acc: SparsePolynomial) -> None:
        nonlocal total
        if row == k:
            total = total + acc * sign
            return
        # number of unused columns left of col, for the permutation sign
        smaller = 0
        for col in range(k):
            if used[col]:
                continue
            entry = h_poly(L[row] - (row + 1) + (col + 1), nvars)
            if not entry.is_zero():
                used[col] = True
                expand(row + 1, used, sign * (-1) ** smaller, acc * entry)
                used[col] = False
            smaller += 1

    expand(0, [False] * k, 1, SparsePolynomial.constant(nvars))
    return total


def schur_poly(shape: Iterable[int], nvars: int) -> SparsePolynomial:
    return jacobi_trudi_poly(Partition(shape), nvars)


def expansion_poly(e: _Expansion, nvars: int | None = None) -> SparsePolynomial:
    """Polynomial image of an expansion; ``nvars`` defaults to its top degree."""
    if nvars is None:
        nvars = max(e.degrees(), default=0)
    basis_poly = F_poly if isinstance(e, FExpansion) else jacobi_trudi_poly
    total = SparsePolynomial(nvars)
    for key, c in e.items():
        total = total + basis_poly(key, nvars) * c
    return total


def is_symmetric_poly(p: SparsePolynomial) -> bool:
    return all(p.swap(i, i + 1) == p for i in range(p.nvars - 1))
