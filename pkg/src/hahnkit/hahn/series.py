"""Finite-support formal series ``sum c_g t^g`` with exponents in a lexicographic group."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from ..arith import rational_str, to_rational
from ..errors import DomainError, ParseError
from ..oag.element import ZERO, Element


class Series:
    """Immutable; terms are kept sorted by increasing exponent with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for exp, c in pairs:
                if not isinstance(exp, Element):
                    raise DomainError(f"exponent must be an Element, got {exp!r}")
                acc[exp] = acc.get(exp, 0) + to_rational(c)
        self._terms = _sorted_terms(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff, exp: Element = ZERO) -> "Series":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c) -> "Series":
        return cls({ZERO: c})

    # access -----------------------------------------------------------
    @property
    def terms(self):
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def exponents(self):
        return [e for e, _ in self._terms]

    def coefficient(self, exp: Element) -> Fraction:
        for e, c in self._terms:
            if e == exp:
                return c
        return Fraction(0)

    @property
    def vmin(self) -> Element:
        if not self._terms:
            raise DomainError("vmin of the zero series is undefined")
        return self._terms[0][0]

    @property
    def leading(self):
        """(exponent, coefficient) of the least term."""
        if not self._terms:
            raise DomainError("the zero series has no leading term")
        return self._terms[0]

    @property
    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[0][1] > 0 else -1

    def truncate(self, bound: Optional[Element]) -> "Series":
        """Terms with exponent strictly below ``bound`` (None keeps everything)."""
        if bound is None:
            return self
        return Series._raw(tuple(t for t in self._terms if t[0] < bound))

    def filter(self, keep) -> "Series":
        return Series._raw(tuple(t for t in self._terms if keep(t[0])))

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return Series._raw(_sorted_terms(acc))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return Series()
            return Series._raw(tuple((e, c * other) for e, c in self._terms))
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return Series._raw(_sorted_terms(acc))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are supported")
        out, base = Series.constant(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, g: Element) -> "Series":
        """Multiply by ``t^g``."""
        return Series._raw(tuple((e + g, c) for e, c in self._terms))

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other):
        return (self - other).sign < 0

    def __gt__(self, other):
        return (self - other).sign > 0

    def __le__(self, other):
        return (self - other).sign <= 0

    def __ge__(self, other):
        return (self - other).sign >= 0

    # encoding ---------------------------------------------------------
    def to_json(self):
        return {"coeffs": [{"exp": e.to_json(), "value": rational_str(c)} for e, c in self._terms]}

    @classmethod
    def from_json(cls, data) -> "Series":
        if not isinstance(data, dict) or not isinstance(data.get("coeffs"), list):
            raise ParseError("series JSON needs a 'coeffs' list")
        pairs = []
        for entry in data["coeffs"]:
            if not isinstance(entry, dict) or "exp" not in entry or "value" not in entry:
                raise ParseError(f"bad series term: {entry!r}")
            pairs.append((Element.from_json(entry["exp"]), to_rational(str(entry["value"]))))
        return cls(pairs)

    def __repr__(self):
        return f"Series({list(self._terms)!r})"


def _sorted_terms(acc):
    items = [(e, c) for e, c in acc.items() if c != 0]
    items.sort(key=_ExpKey)
    return tuple(items)


class _ExpKey:
    __slots__ = ("e",)

    def __init__(self, item):
        self.e = item[0]

    def __lt__(self, other):
        return self.e.compare(other.e) < 0


def _coerce(x) -> Optional[Series]:
    if isinstance(x, Series):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Series.constant(x)
    return None


class TruncatedSeries:
    """A series known exactly below ``bound``; ``bound=None`` means exact.

    Arithmetic keeps the largest bound it can guarantee.
    """

    __slots__ = ("body", "bound")

    def __init__(self, body: Series, bound: Optional[Element] = None):
        self.body = body.truncate(bound)
        self.bound = bound

    @property
    def exact(self) -> bool:
        return self.bound is None

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = _as_truncated(other)
        return TruncatedSeries(self.body + other.body, _min_bound(self.bound, other.bound))

    def __neg__(self):
        return TruncatedSeries(-self.body, self.bound)

    def __sub__(self, other):
        return self + (-_as_truncated(other))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        # (a + O(t^p)) (b + O(t^q)) = ab + O(t^min(p + v(b), q + v(a)))
        other = _as_truncated(other)
        cands = []
        if self.bound is not None:
            cands.append(self.bound + other.body.vmin if other.body else other.bound)
        if other.bound is not None:
            cands.append(other.bound + self.body.vmin if self.body else self.bound)
        bound = None
        for c in cands:
            bound = _min_bound(bound, c)
        if bound is None and (self.bound is not None or other.bound is not None):
            bound = _min_bound(self.bound, other.bound)
        return TruncatedSeries(self.body * other.body, bound)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.body == other.body and self.bound == other.bound

    def to_json(self):
        out = self.body.to_json()
        if self.bound is not None:
            out["bound"] = self.bound.to_json()
        return out

    def __repr__(self):
        return f"TruncatedSeries({self.body!r}, bound={self.bound!r})"


def _as_truncated(x) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    s = _coerce(x)
    if s is None:
        raise DomainError(f"cannot use {x!r} as a series")
    return TruncatedSeries(s)


def _min_bound(a: Optional[Element], b: Optional[Element]) -> Optional[Element]:
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b
