"""Subgroups as index sets inside a materialized parent, and coset-action quotients.

Every function here accepts either a :class:`GroupHandle` or a
:class:`Subgroup` wherever an ambient group is expected; results are always
subgroups of the same parent handle.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from .perm import GroupHandle, Permutation


class ParentMismatch(ValueError):
    pass


class NotNormal(ValueError):
    pass


class NotPGroup(ValueError):
    pass


class Subgroup:
    """A subgroup of ``parent``, stored as a boolean membership mask.

    ``gens`` is a (reduced) generating set. Two subgroups compare equal when
    they have the same parent handle and the same elements.
    """

    __slots__ = ("parent", "gens", "mask", "indices", "order", "label", "_set")

    def __init__(self, parent: GroupHandle, gens: Sequence[Permutation] = ()):
        sub = subgroup(parent, gens)
        for name in Subgroup.__slots__:
            setattr(self, name, getattr(sub, name))

    @classmethod
    def _from_mask(cls, parent: GroupHandle, mask: np.ndarray,
                   gens: Sequence[Permutation], label: str | None = None) -> Subgroup:
        s = cls.__new__(cls)
        s.parent = parent
        s.mask = mask
        s.mask.flags.writeable = False
        s.indices = np.flatnonzero(mask)
        s.order = int(s.indices.size)
        s.gens = tuple(gens)
        s.label = label
        s._set = None
        return s

    @property
    def elements(self) -> tuple[Permutation, ...]:
        els = self.parent.elements
        return tuple(els[i] for i in self.indices)

    @property
    def index_set(self) -> frozenset[int]:
        if self._set is None:
            self._set = frozenset(self.indices.tolist())
        return self._set

    def __contains__(self, x) -> bool:
        if isinstance(x, Permutation):
            return x in self.parent and bool(self.mask[self.parent.index(x)])
        return bool(self.mask[x])

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.order == other.order and bool(np.array_equal(self.mask, other.mask)))

    def __hash__(self) -> int:
        return hash((id(self.parent), self.order, self.indices[:8].tobytes()))

    def __le__(self, other: Subgroup) -> bool:
        _same_parent(self, other)
        return bool(np.all(other.mask[self.indices]))

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.order < other.order

    def __repr__(self) -> str:
        name = self.label or "Subgroup"
        return f"<{name} of order {self.order} in {self.parent.name}>"

    def __reduce__(self):
        return (_rebuild_subgroup, (self.parent, self.indices, self.gens, self.label))


def _rebuild_subgroup(parent, indices, gens, label):
    mask = np.zeros(parent.order, dtype=bool)
    mask[indices] = True
    return Subgroup._from_mask(parent, mask, gens, label)


Groupish = Union[GroupHandle, Subgroup]


def as_subgroup(G: Groupish) -> Subgroup:
    return G.whole if isinstance(G, GroupHandle) else G


def _same_parent(*subs: Subgroup) -> GroupHandle:
    parent = subs[0].parent
    for s in subs[1:]:
        if s.parent is not parent:
            raise ParentMismatch("subgroups live in different parent groups")
    return parent


def _close(parent: GroupHandle, gen_idx: Iterable[int],
           base: Subgroup | None = None) -> tuple[np.ndarray, list[int]]:
    """Closure of ``base`` and ``gen_idx``; returns (mask, generators actually used)."""
    mul = parent.mul
    if base is None:
        mask = np.zeros(parent.order, dtype=bool)
        mask[0] = True
        used: list[int] = []
    else:
        mask = base.mask.copy()
        used = [parent.index(g) for g in base.gens]
    for g in np.unique(gen_idx).tolist():
        if mask[g]:
            continue
        used.append(g)
        eff = np.array(used)
        frontier = mul[np.flatnonzero(mask), g]
        frontier = np.unique(frontier[~mask[frontier]])
        mask[frontier] = True
        while frontier.size:
            nxt = mul[np.ix_(frontier, eff)].ravel()
            nxt = np.unique(nxt[~mask[nxt]])
            mask[nxt] = True
            frontier = nxt
    return mask, used


def _from_indices(parent: GroupHandle, gen_idx: Iterable[int],
                  base: Subgroup | None = None, label: str | None = None) -> Subgroup:
    if not isinstance(gen_idx, np.ndarray):
        gen_idx = np.fromiter(gen_idx, dtype=np.int64)
    mask, used = _close(parent, gen_idx, base)
    return Subgroup._from_mask(parent, mask, [parent.elements[i] for i in used], label)


def subgroup(parent: Groupish, gens: Sequence[Permutation] = (), label: str | None = None) -> Subgroup:
    """``<gens>`` inside ``parent``."""
    amb = as_subgroup(parent)
    P = amb.parent
    idx = []
    for g in gens:
        if g not in amb:
            raise ValueError(f"generator {g} is not in {amb!r}")
        idx.append(P.index(g))
    return _from_indices(P, idx, label=label)


def trivial(G: Groupish) -> Subgroup:
    return _from_indices(as_subgroup(G).parent, [])


def join(*subs: Subgroup) -> Subgroup:
    """Subgroup generated by all the arguments."""
    if not subs:
        raise ValueError("join of nothing")
    P = _same_parent(*subs)
    base = max(subs, key=lambda s: s.order)
    extra = np.unique(np.concatenate([s.indices for s in subs if s is not base] or [np.zeros(0, int)]))
    return _from_indices(P, extra, base=base)


def conjugates_of(P: GroupHandle, idx: np.ndarray, by: np.ndarray) -> np.ndarray:
    """Matrix ``[i, j] = idx[j] ^ by[i]`` of indices."""
    mul, inv = P.mul, P.inv
    left = mul[np.ix_(inv[by], idx)]
    return mul[left, by[:, None]]


def commutators_of(P: GroupHandle, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix ``[i, j] = [a[i], b[j]]`` of indices."""
    mul, inv = P.mul, P.inv
    return mul[mul[np.ix_(inv[a], inv[b])], mul[np.ix_(a, b)]]


def normal_closure(G: Groupish, S: Subgroup) -> Subgroup:
    """Smallest subgroup of ``G`` that contains ``S`` and is normalized by ``G``."""
    amb = as_subgroup(G)
    P = _same_parent(amb, S)
    gens = np.array([P.index(g) for g in S.gens], dtype=np.int64)
    if gens.size == 0:
        return trivial(P)
    conj = conjugates_of(P, gens, amb.indices)
    return _from_indices(P, conj.ravel())


def commutator_subgroup(A: Groupish, B: Groupish) -> Subgroup:
    """``[A, B]``, generated by ``[a, b]`` over all element pairs."""
    A, B = as_subgroup(A), as_subgroup(B)
    P = _same_parent(A, B)
    return _from_indices(P, commutators_of(P, A.indices, B.indices).ravel())


def derived_subgroup(G: Groupish) -> Subgroup:
    return commutator_subgroup(G, G)


def centralizer(G: Groupish, S: Groupish) -> Subgroup:
    """Elements of ``G`` commuting with every element of ``S``."""
    amb, S = as_subgroup(G), as_subgroup(S)
    P = _same_parent(amb, S)
    els = amb.indices
    keep = np.ones(els.size, dtype=bool)
    for g in S.gens:
        s = P.index(g)
        keep &= P.mul[els, s] == P.mul[s, els]
    mask = np.zeros(P.order, dtype=bool)
    mask[els[keep]] = True
    return _with_gens(P, mask)


def center(G: Groupish) -> Subgroup:
    return centralizer(G, G)


def normalizer(G: Groupish, S: Subgroup) -> Subgroup:
    amb = as_subgroup(G)
    P = _same_parent(amb, S)
    gens = np.array([P.index(g) for g in S.gens], dtype=np.int64)
    if gens.size == 0:
        return amb
    conj = conjugates_of(P, gens, amb.indices)
    keep = np.all(S.mask[conj], axis=1)
    mask = np.zeros(P.order, dtype=bool)
    mask[amb.indices[keep]] = True
    return _with_gens(P, mask)


def _with_gens(P: GroupHandle, mask: np.ndarray, label: str | None = None) -> Subgroup:
    """Wrap a mask already known to be a subgroup, picking generators for it."""
    sub = _from_indices(P, np.flatnonzero(mask))
    if sub.order != int(mask.sum()):
        raise AssertionError("mask is not closed under multiplication")
    sub.label = label
    return sub


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    P = _same_parent(A, B)
    return _with_gens(P, A.mask & B.mask)


def conjugate_subgroup(S: Subgroup, x: int | Permutation) -> Subgroup:
    P = S.parent
    if isinstance(x, Permutation):
        x = P.index(x)
    idx = conjugates_of(P, S.indices, np.array([x]))[0]
    mask = np.zeros(P.order, dtype=bool)
    mask[idx] = True
    gens = [P.elements[i] for i in conjugates_of(P, np.array([P.index(g) for g in S.gens], dtype=np.int64),
                                                  np.array([x]))[0]] if S.gens else []
    return Subgroup._from_mask(P, mask, gens)


def is_normal(G: Groupish, N: Subgroup) -> bool:
    amb = as_subgroup(G)
    P = _same_parent(amb, N)
    if not N.gens:
        return True
    gens = np.array([P.index(g) for g in N.gens], dtype=np.int64)
    return bool(np.all(N.mask[conjugates_of(P, gens, amb.indices)]))


def is_subgroup_mask(P: GroupHandle, mask: np.ndarray) -> bool:
    idx = np.flatnonzero(mask)
    if idx.size == 0 or not mask[0]:
        return False
    return bool(np.all(mask[P.mul[np.ix_(idx, idx)]]))


def power_subgroup(G: Groupish, k: int) -> Subgroup:
    """``<x**k : x in G>``."""
    amb = as_subgroup(G)
    P = amb.parent
    return _from_indices(P, np.unique(P.power(amb.indices, k)))


def _prime_of(n: int) -> int | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def frattini_p(P_: Subgroup) -> Subgroup:
    """Frattini subgroup ``P' P^p`` of a p-group."""
    P_ = as_subgroup(P_)
    if P_.order == 1:
        return P_
    p = _prime_of(P_.order)
    if p is None:
        raise NotPGroup(f"order {P_.order} is not a prime power")
    return join(derived_subgroup(P_), power_subgroup(P_, p))


class QuotientGroup:
    """``G/N`` realized as the permutation action of ``G`` on the cosets of ``N``.

    Cosets are numbered 0..k-1 in order of their smallest element index;
    ``action`` is a :class:`GroupHandle` of degree ``k`` (coset ``i`` is
    point ``i + 1``).
    """

    def __init__(self, G: Groupish, N: Subgroup):
        amb = as_subgroup(G)
        P = _same_parent(amb, N)
        if not N <= amb:
            raise ValueError("kernel is not contained in the group")
        if not is_normal(amb, N):
            raise NotNormal(f"{N!r} is not normal in {amb!r}")
        self.parent = amb
        self.kernel = N
        coset_of = np.full(P.order, -1, dtype=np.int64)
        reps = []
        for x in amb.indices:
            if coset_of[x] >= 0:
                continue
            coset_of[P.mul[N.indices, x]] = len(reps)
            reps.append(int(x))
        self.coset_of = coset_of
        self.reps = np.array(reps, dtype=np.int64)
        self.index = len(reps)
        self.cosets = tuple(P.elements[i] for i in reps)

        def act(x: int) -> Permutation:
            return Permutation._raw(tuple(coset_of[P.mul[self.reps, x]].tolist()))

        gens = [act(P.index(g)) for g in amb.gens]
        label = None
        if amb.label and N.label:
            label = f"{amb.label}/{N.label}"
        self.action = GroupHandle(gens, degree=self.index, label=label, max_order=P.max_order)
        if self.action.order != self.index:
            raise AssertionError("coset action has the wrong order")
        # action index of every ambient element
        imgs = coset_of[P.mul[np.ix_(self.reps, amb.indices)]].T
        dtype = self.action._E.dtype
        proj = np.full(P.order, -1, dtype=np.int64)
        proj[amb.indices] = self.action._lookup(imgs.astype(dtype))
        self._proj = proj
        self._section = np.empty(self.index, dtype=np.int64)
        self._section[proj[self.reps]] = self.reps

    def project(self, x: Permutation | int) -> Permutation:
        """Image of an element of the parent in ``action``."""
        i = self.parent.parent.index(x) if isinstance(x, Permutation) else x
        j = self._proj[i]
        if j < 0:
            raise ValueError("element is not in the quotient's parent group")
        return self.action.elements[j]

    def coset_index(self, x: Permutation | int) -> int:
        i = self.parent.parent.index(x) if isinstance(x, Permutation) else x
        return int(self.coset_of[i])

    def section(self, i: int) -> Permutation:
        """Representative of coset ``i``."""
        return self.parent.parent.elements[self.reps[i]]

    def lift(self, y: Permutation | int) -> Permutation:
        """Representative in the parent of an element of ``action``."""
        j = self.action.index(y) if isinstance(y, Permutation) else y
        return self.parent.parent.elements[self._section[j]]

    @property
    def order(self) -> int:
        return self.action.order


def quotient(G: Groupish, N: Subgroup) -> QuotientGroup:
    return QuotientGroup(G, N)


def image_in_quotient(Q: QuotientGroup, S: Groupish) -> Subgroup:
    S = as_subgroup(S)
    _same_parent(Q.parent, S)
    if not S <= Q.parent:
        raise ParentMismatch("subgroup is not inside the quotient's parent")
    return _from_indices(Q.action, np.unique(Q._proj[S.indices]))


def preimage(Q: QuotientGroup, S: Subgroup) -> Subgroup:
    """Full inverse image in the parent of a subgroup of ``Q.action``."""
    if S.parent is not Q.action:
        raise ParentMismatch("subgroup is not in the quotient")
    P = Q.parent.parent
    mask = np.zeros(P.order, dtype=bool)
    amb = Q.parent.indices
    mask[amb] = S.mask[Q._proj[amb]]
    sub = _from_indices(P, np.array([P.index(g) for g in Q.kernel.gens] +
                                    Q._section[S.indices].tolist(), dtype=np.int64))
    if sub.order != int(mask.sum()):
        raise AssertionError("preimage is not a subgroup")
    return sub
