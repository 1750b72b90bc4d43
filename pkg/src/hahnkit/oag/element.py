"""Finite-support vectors ``sum s_i 1_i`` ordered lexicographically.

The same class represents group elements and elements of the divisible
hull; whether a vector belongs to a particular group is a question for the
group descriptor (:meth:`GroupDescriptor.contains`).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..arith import rational_str, to_rational
from ..errors import DomainError, ParseError


class Element:
    """Immutable finite-support map index -> nonzero rational."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coords: Union[Mapping, Iterable, None] = None):
        acc = {}
        if coords is not None:
            pairs = coords.items() if isinstance(coords, Mapping) else coords
            for index, value in pairs:
                if not isinstance(index, int) or isinstance(index, bool):
                    raise DomainError(f"index must be an integer, got {index!r}")
                acc[index] = acc.get(index, 0) + to_rational(value)
        self._items = tuple(sorted((i, v) for i, v in acc.items() if v != 0))
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._items = items
        obj._hash = None
        return obj

    @classmethod
    def unit(cls, index: int, value=1) -> "Element":
        """``value * 1_index``."""
        return cls({index: value})

    @classmethod
    def from_values(cls, values, start: int = 0) -> "Element":
        """Dense coordinate list placed at indices ``start, start+1, ...``."""
        return cls({start + k: v for k, v in enumerate(values)})

    # access -----------------------------------------------------------
    def items(self):
        return self._items

    @property
    def support(self):
        return tuple(i for i, _ in self._items)

    def __getitem__(self, index: int) -> Fraction:
        for i, v in self._items:
            if i == index:
                return v
            if i > index:
                break
        return Fraction(0)

    def __bool__(self):
        return bool(self._items)

    def __len__(self):
        return len(self._items)

    @property
    def nat_val(self) -> int:
        """Natural valuation: the least index in the support."""
        if not self._items:
            raise DomainError("natural valuation of zero is undefined")
        return self._items[0][0]

    @property
    def sign(self) -> int:
        if not self._items:
            return 0
        return 1 if self._items[0][1] > 0 else -1

    def truncate(self, index: int) -> "Element":
        """Coordinates strictly below ``index``."""
        return Element._raw(tuple(p for p in self._items if p[0] < index))

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if not other._items:
            return self
        if not self._items:
            return other
        acc = dict(self._items)
        for i, v in other._items:
            acc[i] = acc.get(i, 0) + v
        return Element._raw(tuple(sorted((i, v) for i, v in acc.items() if v != 0)))

    def __neg__(self):
        return Element._raw(tuple((i, -v) for i, v in self._items))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        k = to_rational(k) if not isinstance(k, Fraction) else k
        if k == 0:
            return ZERO
        return Element._raw(tuple((i, v * k) for i, v in self._items))

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = to_rational(k)
        if k == 0:
            raise DomainError("division by zero")
        return self * (1 / k)

    def __abs__(self):
        return -self if self.sign < 0 else self

    # order ------------------------------------------------------------
    def compare(self, other: "Element") -> int:
        """-1, 0 or 1 by the least index where the two vectors differ."""
        a, b = self._items, other._items
        ia = ib = 0
        while ia < len(a) or ib < len(b):
            if ib == len(b) or (ia < len(a) and a[ia][0] < b[ib][0]):
                return 1 if a[ia][1] > 0 else -1
            if ia == len(a) or b[ib][0] < a[ia][0]:
                return -1 if b[ib][1] > 0 else 1
            va, vb = a[ia][1], b[ib][1]
            if va != vb:
                return 1 if va > vb else -1
            ia += 1
            ib += 1
        return 0

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    # encoding ---------------------------------------------------------
    def to_json(self):
        return {"support": [{"index": i, "value": rational_str(v)} for i, v in self._items]}

    @classmethod
    def from_json(cls, data) -> "Element":
        if isinstance(data, dict):
            if "support" not in data:
                raise ParseError("element object needs a 'support' key")
            data = data["support"]
        if not isinstance(data, list):
            raise ParseError(f"bad element: {data!r}")
        pairs = []
        for entry in data:
            if not isinstance(entry, dict) or set(entry) != {"index", "value"}:
                raise ParseError(f"bad support entry: {entry!r}")
            index = entry["index"]
            if not isinstance(index, int) or isinstance(index, bool):
                raise ParseError(f"index must be an integer: {index!r}")
            value = entry["value"]
            pairs.append((index, to_rational(value if isinstance(value, (str, int)) else str(value))))
        return cls(pairs)

    def __repr__(self):
        inner = ", ".join(f"{i}: {rational_str(v)}" for i, v in self._items)
        return f"Element({{{inner}}})"


ZERO = Element()
