"""Permutations of {1..d} and exhaustively enumerated permutation groups.

Conventions used throughout the package:

* ``p * q`` applies ``p`` first, then ``q`` (points are written ``x^p``).
* conjugation is ``a^b = b^-1 a b``.
* the commutator is ``[a, b] = a^-1 b^-1 a b``; longer commutators are
  left-normed, ``[a, b, c] = [[a, b], c]``.
"""
from __future__ import annotations

import math
import re
from collections import deque
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 10000


class DegreeMismatch(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Raised when a closure grows past the configured enumeration cap."""

    def __init__(self, cap: int, reached: int):
        super().__init__(f"group order exceeds cap {cap} (reached {reached} elements)")
        self.cap = cap
        self.reached = reached


class CycleSyntaxError(ValueError):
    """Malformed cycle notation. ``pos`` is the 0-based column of the problem."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (column {pos + 1})")
        self.pos = pos


class Permutation:
    """A bijection of {1..d}.

    Constructed from the 1-based image list, so ``Permutation([2, 1, 3])``
    swaps 1 and 2 on three points. Instances are immutable and hashable;
    ordering is lexicographic on images, which is the canonical element order
    used by every group algorithm.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        self._set(img)

    def _set(self, img: tuple[int, ...]) -> None:
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        p = cls.__new__(cls)
        p._set(img)
        return p

    def __getstate__(self):
        return self._img

    def __setstate__(self, img):
        self._set(img)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} out of range 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        return cls.from_cycles(parse_cycles(text, degree), degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> list[int]:
        return [i + 1 for i in self._img]

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, n: int) -> Permutation:
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, 1-based."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self._img[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self._img[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def _check(p: Permutation, q: Permutation) -> None:
    if len(p._img) != len(q._img):
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p``, then ``q``."""
    _check(p, q)
    qi = q._img
    return Permutation._raw(tuple(qi[i] for i in p._img))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p._img)
    for i, j in enumerate(p._img):
        inv[j] = i
    return Permutation._raw(tuple(inv))


def conjugate(a: Permutation, b: Permutation) -> Permutation:
    """``a^b = b^-1 a b``."""
    _check(a, b)
    return compose(compose(inverse(b), a), b)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``[a, b] = a^-1 b^-1 a b = a^-1 a^b``."""
    _check(a, b)
    return compose(inverse(a), conjugate(a, b))


def left_normed(*elements: Permutation) -> Permutation:
    """``[a1, a2, ..., ar]`` folded from the left."""
    return reduce(commutator, elements)


_TOKEN = re.compile(r"\s*(\(|\)|\d+|[^\s\d()]+)")


def parse_cycles(text: str, degree: int) -> list[tuple[int, ...]]:
    """Parse ``"(1 2)(3 4)"`` into cycles; ``"()"``, ``"id"`` or blank mean identity."""
    s = text.strip()
    if s in ("", "()", "id"):
        return []
    cycles: list[tuple[int, ...]] = []
    seen: set[int] = set()
    current: list[int] | None = None
    pos = 0
    offset = len(text) - len(text.lstrip())
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            break
        tok = m.group(1)
        col = offset + m.start(1)
        pos = m.end()
        if tok == "(":
            if current is not None:
                raise CycleSyntaxError("nested '('", col)
            current = []
        elif tok == ")":
            if current is None:
                raise CycleSyntaxError("unmatched ')'", col)
            if current:
                cycles.append(tuple(current))
            current = None
        elif tok.isdigit():
            if current is None:
                raise CycleSyntaxError("point outside a cycle", col)
            pt = int(tok)
            if not 1 <= pt <= degree:
                raise CycleSyntaxError(f"point {pt} out of range 1..{degree}", col)
            if pt in seen:
                raise CycleSyntaxError(f"duplicate point {pt}", col)
            seen.add(pt)
            current.append(pt)
        else:
            raise CycleSyntaxError(f"unexpected {tok!r}", col)
        if pos < len(s) and s[pos:].strip() == "":
            pos = len(s)
    if current is not None:
        raise CycleSyntaxError("unclosed '('", offset + len(s))
    return cycles


def enumerate_elements(gens: Sequence[Permutation], degree: int | None = None,
                       max_order: int = DEFAULT_MAX_ORDER) -> list[Permutation]:
    """Breadth-first closure of ``gens``; returned in canonical (sorted) order."""
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
    gimgs = list(dict.fromkeys(g._img for g in gens))
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gimgs:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > max_order:
                    raise CapExceeded(max_order, len(seen))
                queue.append(y)
    return [Permutation._raw(t) for t in sorted(seen)]


def _row_keys(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


class GroupHandle:
    """A finite permutation group with all elements materialized.

    Elements are held in canonical order and addressed by index; index 0 is
    always the identity. A Cayley table ``mul[a, b]`` (index of ``a * b``),
    the inverse map ``inv`` and element orders are built once here, and are
    what the subgroup and Engel kernels operate on.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 label: str | None = None, max_order: int = DEFAULT_MAX_ORDER):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required for a group with no generators")
            degree = generators[0].degree
        self.degree = degree
        self.generators = tuple(generators)
        self.label = label
        self.max_order = max_order
        self.elements: tuple[Permutation, ...] = tuple(
            enumerate_elements(generators, degree, max_order))
        self.order = len(self.elements)
        self._index = {p._img: i for i, p in enumerate(self.elements)}

        dtype = np.uint8 if degree <= 256 else np.uint16
        E = np.array([p._img for p in self.elements], dtype=dtype).reshape(self.order, degree)
        keys = _row_keys(E)
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        self._E = E

        itype = np.int16 if self.order < 2**15 else np.int32
        mul = np.empty((self.order, self.order), dtype=itype)
        for a in range(self.order):
            # row a: b -> a*b, i.e. b[a[i]]
            mul[a] = self._lookup(E[:, E[a]])
        self.mul = mul
        self.mul.flags.writeable = False
        inv = np.argmin(mul, axis=1).astype(itype)
        inv.flags.writeable = False
        self.inv = inv
        self.orders = np.array([p.order() for p in self.elements], dtype=np.int64)
        self.orders.flags.writeable = False
        self._whole = None

    def _lookup(self, rows: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self._sorted_keys, _row_keys(rows))
        return self._key_order[pos]

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p._img]
        except KeyError:
            raise ValueError(f"{p} is not an element of {self.name}") from None

    def __contains__(self, p: Permutation) -> bool:
        return p._img in self._index

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    @property
    def name(self) -> str:
        return self.label or f"<group of order {self.order} on {self.degree} points>"

    def power(self, idx: np.ndarray | int, k: int) -> np.ndarray:
        """Indices of ``x**k`` for each index ``x`` (``k >= 0``)."""
        idx = np.asarray(idx)
        result = np.zeros_like(idx)
        base = idx
        while k:
            if k & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            k >>= 1
        return result

    @property
    def whole(self):
        """This group viewed as a subgroup of itself."""
        if self._whole is None:
            from .subgroups import Subgroup
            self._whole = Subgroup._from_mask(self, np.ones(self.order, dtype=bool),
                                              self.generators, label=self.label)
        return self._whole

    def __repr__(self) -> str:
        return f"GroupHandle({self.name}, order={self.order})"

    def __reduce__(self):
        return (GroupHandle, (self.generators, self.degree, self.label, self.max_order))
