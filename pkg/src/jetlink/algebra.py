"""Exact Laurent polynomial arithmetic and partition utilities.

Three polynomial types share one sparse implementation:

* :class:`ZPoly` -- integer Laurent polynomials in ``z``,
* :class:`AZPoly` -- integer Laurent polynomials in ``a`` and ``z``,
* :class:`SkeinElement` -- polynomials in ``a``, ``z`` and the basic-front
  generators ``A_1, A_2, ...``, stored in the partition basis ``A_lambda``.

All values are immutable.  Coefficients are Python integers, so there is no
overflow.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from typing import Iterable, Mapping

Partition = tuple


class ZeroPolynomialError(ValueError):
    """Raised when a degree is requested for the zero polynomial."""


def partition(parts: Iterable[int] = ()) -> tuple[int, ...]:
    """Return ``parts`` as a partition: a weakly decreasing tuple of positive ints."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return tuple(sorted(parts, reverse=True))


def partition_concat(mu: Iterable[int], lam: Iterable[int]) -> tuple[int, ...]:
    """Multiset union of the parts of ``mu`` and ``lam``."""
    return partition(tuple(mu) + tuple(lam))


def multiplicities(lam: Iterable[int]) -> dict[int, int]:
    """Map part size -> number of occurrences."""
    return dict(Counter(lam))


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of ``n`` (largest part first, reverse lex order)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


class _Sparse:
    """Sparse polynomial over a commutative monomial monoid.

    Subclasses define the monomial product and how monomials print.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = int(c)
                if c:
                    clean[self._key(key)] = c
        self._terms = clean
        self._hash = None

    # -- subclass hooks ------------------------------------------------------
    @staticmethod
    def _key(key):
        return key

    @staticmethod
    def _mono_mul(k1, k2):
        raise NotImplementedError

    _one_key = None

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, int):
            return cls({cls._one_key: other})
        return NotImplemented

    # -- container protocol --------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(self._key(key), 0)

    def is_zero(self) -> bool:
        return not self._terms

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = self._mono_mul(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use .monomial()")
        result = type(self)({self._one_key: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int):
        return type(self)({k: c * v for k, v in self._terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"


# ---------------------------------------------------------------------------
# text format helpers

_TERM_SPLIT = re.compile(r"\s+\+\s+")


def _fmt_factors(c: int, factors: list[str]) -> str:
    return "*".join([str(c)] + factors)


def _parse_terms(text: str):
    """Yield ``(coefficient, {"a": i, "z": j}, parts)`` for each term of ``text``."""
    text = text.strip()
    if text in ("", "0"):
        return
    for raw in _TERM_SPLIT.split(text):
        raw = raw.strip()
        c = 1
        exps = {"a": 0, "z": 0}
        parts: list[int] = []
        for fac in raw.split("*"):
            fac = fac.strip()
            if re.fullmatch(r"-?\d+", fac):
                c *= int(fac)
            elif fac == "-":
                c = -c
            elif m := re.fullmatch(r"(-?)([az])(?:\^(-?\d+))?", fac):
                if m.group(1):
                    c = -c
                exps[m.group(2)] += int(m.group(3)) if m.group(3) else 1
            elif m := re.fullmatch(r"(-?)A_(\d+)", fac):
                if m.group(1):
                    c = -c
                parts.append(int(m.group(2)))
            else:
                raise ValueError(f"cannot parse factor {fac!r} in {raw!r}")
        yield c, exps, parts


class ZPoly(_Sparse):
    """Integer Laurent polynomial in ``z``; keys are z-exponents."""

    __slots__ = ()
    _one_key = 0

    @staticmethod
    def _key(key):
        return int(key)

    @staticmethod
    def _mono_mul(k1, k2):
        return k1 + k2

    @classmethod
    def z(cls, j: int = 1, c: int = 1) -> "ZPoly":
        return cls({j: c})

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            _fmt_factors(c, [f"z^{j}"] if j else []) for j, c in self.sorted_terms()
        )

    @classmethod
    def parse(cls, text: str) -> "ZPoly":
        out: dict[int, int] = {}
        for c, exps, parts in _parse_terms(text):
            if exps["a"] or parts:
                raise ValueError(f"not a polynomial in z alone: {text!r}")
            out[exps["z"]] = out.get(exps["z"], 0) + c
        return cls(out)

    def to_json(self) -> dict:
        return {"terms": [{"z": j, "c": c} for j, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "ZPoly":
        if isinstance(obj, str):
            return cls.parse(obj)
        out: dict[int, int] = {}
        for t in obj["terms"]:
            out[int(t.get("z", 0))] = out.get(int(t.get("z", 0)), 0) + int(t["c"])
        return cls(out)


class AZPoly(_Sparse):
    """Integer Laurent polynomial in ``a`` and ``z``; keys are ``(i, j)`` for ``a^i z^j``."""

    __slots__ = ()
    _one_key = (0, 0)

    @staticmethod
    def _key(key):
        i, j = key
        return (int(i), int(j))

    @staticmethod
    def _mono_mul(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def mono(cls, i: int = 0, j: int = 0, c: int = 1) -> "AZPoly":
        return cls({(i, j): c})

    @classmethod
    def from_z(cls, p: ZPoly, a_exp: int = 0) -> "AZPoly":
        return cls({(a_exp, j): c for j, c in p.items()})

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for (i, j), c in self.sorted_terms():
            f = []
            if i:
                f.append(f"a^{i}")
            if j:
                f.append(f"z^{j}")
            out.append(_fmt_factors(c, f))
        return " + ".join(out)

    @classmethod
    def parse(cls, text: str) -> "AZPoly":
        out: dict = {}
        for c, exps, parts in _parse_terms(text):
            if parts:
                raise ValueError(f"unexpected basis generator in {text!r}")
            k = (exps["a"], exps["z"])
            out[k] = out.get(k, 0) + c
        return cls(out)

    def to_json(self) -> dict:
        return {"terms": [{"a": i, "z": j, "c": c} for (i, j), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "AZPoly":
        if isinstance(obj, str):
            return cls.parse(obj)
        out: dict = {}
        for t in obj["terms"]:
            k = (int(t.get("a", 0)), int(t.get("z", 0)))
            out[k] = out.get(k, 0) + int(t["c"])
        return cls(out)


class SkeinElement(_Sparse):
    """Element of the Kauffman skein algebra ``R[A_1, A_2, ...]`` in the partition basis.

    Keys are ``(partition, i, j)`` for the monomial ``a^i z^j A_partition``.  The
    empty partition indexes the scalar part.
    """

    __slots__ = ()
    _one_key = ((), 0, 0)

    @staticmethod
    def _key(key):
        lam, i, j = key
        return (partition(lam), int(i), int(j))

    @staticmethod
    def _mono_mul(k1, k2):
        return (partition_concat(k1[0], k2[0]), k1[1] + k2[1], k1[2] + k2[2])

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, AZPoly):
            return cls.from_az(other)
        return super()._coerce(other)

    @classmethod
    def basis(cls, lam: Iterable[int] = (), c: int = 1) -> "SkeinElement":
        """The basis element ``c * A_lam``."""
        return cls({(tuple(lam), 0, 0): c})

    @classmethod
    def from_az(cls, p: AZPoly, lam: Iterable[int] = ()) -> "SkeinElement":
        lam = partition(lam)
        return cls({(lam, i, j): c for (i, j), c in p.items()})

    def by_partition(self) -> dict[tuple[int, ...], AZPoly]:
        """Split into ``{partition: coefficient}``."""
        groups: dict = {}
        for (lam, i, j), c in self._terms.items():
            groups.setdefault(lam, {})[(i, j)] = c
        return {lam: AZPoly(t) for lam, t in groups.items()}

    def z_coefficients(self) -> dict[tuple[int, ...], ZPoly]:
        """For an element with no ``a`` dependence, ``{partition: ZPoly}``."""
        out: dict = {}
        for (lam, i, j), c in self._terms.items():
            if i:
                raise ValueError("element depends on a; take coeff_a first")
            out.setdefault(lam, {})[j] = c
        return {lam: ZPoly(t) for lam, t in out.items()}

    def sorted_terms(self):
        by_lam = sorted(self._terms.items(), key=lambda kv: kv[0][0], reverse=True)
        return sorted(by_lam, key=lambda kv: (-kv[0][1], kv[0][2]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for (lam, i, j), c in self.sorted_terms():
            f = []
            if i:
                f.append(f"a^{i}")
            if j:
                f.append(f"z^{j}")
            f.extend(f"A_{p}" for p in lam)
            out.append(_fmt_factors(c, f))
        return " + ".join(out)

    @classmethod
    def parse(cls, text: str) -> "SkeinElement":
        out: dict = {}
        for c, exps, parts in _parse_terms(text):
            k = (partition(parts), exps["a"], exps["z"])
            out[k] = out.get(k, 0) + c
        return cls(out)

    def to_json(self) -> dict:
        terms = []
        for (lam, i, j), c in self.sorted_terms():
            t = {"a": i, "z": j, "c": c}
            if lam:
                t = {"partition": list(lam), **t}
            terms.append(t)
        return {"terms": terms}

    @classmethod
    def from_json(cls, obj) -> "SkeinElement":
        if isinstance(obj, str):
            return cls.parse(obj)
        out: dict = {}
        for t in obj["terms"]:
            k = (partition(t.get("partition", ())), int(t.get("a", 0)), int(t.get("z", 0)))
            out[k] = out.get(k, 0) + int(t["c"])
        return cls(out)


def poly_mul(p, q):
    """Exact product of two polynomials of the same family."""
    return p * q


def coeff_a(p, e: int):
    """Collect the terms of ``p`` whose ``a``-exponent is exactly ``e``.

    For an :class:`AZPoly` the result is a :class:`ZPoly`; for a
    :class:`SkeinElement` it is a :class:`SkeinElement` with no ``a`` dependence.
    """
    if isinstance(p, SkeinElement):
        return SkeinElement({(lam, 0, j): c for (lam, i, j), c in p.items() if i == e})
    if isinstance(p, AZPoly):
        return ZPoly({j: c for (i, j), c in p.items() if i == e})
    raise TypeError(f"coeff_a expects AZPoly or SkeinElement, got {type(p).__name__}")


def a_degree(p) -> int:
    """Largest ``a``-exponent occurring in ``p``."""
    if not p:
        raise ZeroPolynomialError("a_degree of the zero polynomial is undefined")
    if isinstance(p, SkeinElement):
        return max(i for (_, i, _) in p)
    if isinstance(p, AZPoly):
        return max(i for (i, _) in p)
    raise TypeError(f"a_degree expects AZPoly or SkeinElement, got {type(p).__name__}")


def a_shift(p, e: int):
    """Multiply by ``a^e``."""
    if isinstance(p, SkeinElement):
        return SkeinElement({(lam, i + e, j): c for (lam, i, j), c in p.items()})
    return AZPoly({(i + e, j): c for (i, j), c in p.items()})


def dumps(p) -> str:
    """JSON text for any of the three polynomial types."""
    return json.dumps(p.to_json())
