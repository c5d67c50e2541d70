"""Series and characteristic subgroups: lower central and derived series,
nilpotent residual, Sylow subgroups, p-cores, the Fitting series, Hall
q'-subgroups and exponents."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator

import numpy as np

from .perm import GroupHandle, Permutation
from .subgroups import (Groupish, Subgroup, _from_indices, as_subgroup, commutator_subgroup,
                        commutators_of, conjugates_of, join, normalizer, preimage, quotient, trivial)


class NotSolvable(ValueError):
    pass


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


@dataclass
class SeriesRecord:
    kind: str
    terms: list[Subgroup] = field(default_factory=list)
    stabilized: bool = True

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def lower_central_series(G: Groupish) -> SeriesRecord:
    """``G = γ_1 ≥ γ_2 ≥ ...``, stopped once two consecutive terms agree
    (the repeated term is kept as the last entry)."""
    amb = as_subgroup(G)
    terms = [amb]
    while True:
        nxt = commutator_subgroup(terms[-1], amb)
        terms.append(nxt)
        if nxt == terms[-2]:
            return SeriesRecord("lower_central", terms)


def derived_series(G: Groupish) -> SeriesRecord:
    amb = as_subgroup(G)
    terms = [amb]
    while True:
        nxt = commutator_subgroup(terms[-1], terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            return SeriesRecord("derived", terms)


def lower_central_term(G: Groupish, i: int) -> Subgroup:
    """``γ_i(G)`` with ``γ_1 = G``."""
    amb = as_subgroup(G)
    term = amb
    for _ in range(i - 1):
        nxt = commutator_subgroup(term, amb)
        if nxt == term:
            break
        term = nxt
    return term


def nilpotent_residual(G: Groupish) -> Subgroup:
    return lower_central_series(G).terms[-1]


def nilpotency_class(G: Groupish) -> int | None:
    """Least ``c`` with ``γ_{c+1}(G) = 1`` (0 for the trivial group), or None."""
    terms = lower_central_series(G).terms
    if not terms[-1].is_trivial():
        return None
    return next(i for i, t in enumerate(terms) if t.is_trivial())


def is_nilpotent(G: Groupish) -> bool:
    return nilpotent_residual(G).is_trivial()


def is_solvable(G: Groupish) -> bool:
    return derived_series(G).terms[-1].is_trivial()


def is_abelian(G: Groupish) -> bool:
    amb = as_subgroup(G)
    P = amb.parent
    g = np.array([P.index(x) for x in amb.gens], dtype=np.int64)
    return bool(np.all(P.mul[np.ix_(g, g)] == P.mul[np.ix_(g, g)].T))


def sylow(G: Groupish, p: int, seed: int | None = None) -> Subgroup:
    """A Sylow ``p``-subgroup, grown one normalizer step at a time.

    Deterministic for ``seed=None`` (canonical scan order); otherwise the scan
    order is shuffled by ``seed``, which may yield a different conjugate.
    """
    amb = as_subgroup(G)
    P = amb.parent
    target = p_part(amb.order, p)
    if target == 1:
        return trivial(P)
    els = amb.indices
    if seed is not None:
        els = np.random.default_rng(seed).permutation(els)
    x = next(int(i) for i in els if P.orders[i] % p == 0)
    k = int(P.orders[x])
    y = int(P.power(x, k // p_part(k, p)))
    H = _from_indices(P, [y])
    while H.order < target:
        cand = normalizer(amb, H).indices
        if seed is not None:
            cand = np.random.default_rng(seed + H.order).permutation(cand)
        ok = ~H.mask[cand] & H.mask[P.power(cand, p)]
        if not ok.any():
            raise AssertionError("no p-element in the normalizer; Sylow growth failed")
        t = int(cand[np.argmax(ok)])
        H = _from_indices(P, [t], base=H)
    H.label = f"Syl{p}"
    return H


def p_core(G: Groupish, p: int) -> Subgroup:
    """``O_p(G)``: elements of a Sylow subgroup all of whose conjugates stay in it."""
    amb = as_subgroup(G)
    S = sylow(amb, p)
    if S.order == 1:
        return S
    conj = conjugates_of(amb.parent, S.indices, amb.indices)
    keep = np.all(S.mask[conj], axis=0)
    core = _from_indices(amb.parent, S.indices[keep])
    core.label = f"O{p}"
    return core


def fitting(G: Groupish) -> Subgroup:
    amb = as_subgroup(G)
    cores = [p_core(amb, p) for p in prime_factors(amb.order)]
    F = join(*cores) if cores else trivial(amb)
    F.label = "F"
    return F


def fitting_series(G: Groupish) -> SeriesRecord:
    """``F_1 = F(G)``, ``F_{i+1}`` the preimage of ``F(G/F_i)``; ascending."""
    amb = as_subgroup(G)
    terms = [fitting(amb)]
    while terms[-1] != amb:
        Q = quotient(amb, terms[-1])
        nxt = preimage(Q, fitting(Q.action))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesRecord("fitting", terms)


def fitting_height(G: Groupish) -> int | None:
    amb = as_subgroup(G)
    terms = fitting_series(amb).terms
    return len(terms) if terms[-1] == amb else None


def hall_qprime(G: Groupish, q: int, budget: int = 2000, seed: int = 0,
                batch: int = 4) -> Subgroup | None:
    """A Hall ``q'``-subgroup found by seeded random closure, or None.

    q'-elements are drawn at random and adjoined one at a time, keeping the
    closure while it stays a q'-group; after ``batch`` adjunctions without
    reaching the target order, or on overshoot, the attempt restarts.
    ``budget`` bounds the total number of closures.
    """
    amb = as_subgroup(G)
    if not is_solvable(amb):
        raise NotSolvable(f"{amb!r} is not solvable")
    target = amb.order // p_part(amb.order, q)
    if target == amb.order:
        return amb
    P = amb.parent
    if target == 1:
        return trivial(P)
    pool = [int(i) for i in amb.indices if P.orders[i] % q != 0 and i != 0]
    rng = random.Random(seed)
    closures = 0
    while closures < budget:
        H = trivial(P)
        for _ in range(batch):
            x = rng.choice(pool)
            if H.mask[x]:
                continue
            nxt = _from_indices(P, [x], base=H)
            closures += 1
            if nxt.order % q == 0 or target % nxt.order:
                break
            H = nxt
            if H.order == target:
                H.label = f"Hall{q}'"
                return H
            if closures >= budget:
                break
    return None


def element_order(x: Permutation) -> int:
    return x.order()


def exponent(G: Groupish) -> int:
    amb = as_subgroup(G)
    return reduce(math.lcm, amb.parent.orders[amb.indices].tolist(), 1)


def coprime_order_pairs(G: Groupish) -> Iterator[tuple[Permutation, Permutation]]:
    amb = as_subgroup(G)
    P = amb.parent
    for x in amb.indices:
        for y in amb.indices:
            if math.gcd(int(P.orders[x]), int(P.orders[y])) == 1:
                yield P.elements[x], P.elements[y]


def coprime_commutator_subgroup(G: Groupish) -> Subgroup:
    """``<[x, y] : gcd(|x|, |y|) = 1>``."""
    amb = as_subgroup(G)
    P = amb.parent
    els = amb.indices
    orders = P.orders[els]
    cop = np.gcd.outer(orders, orders) == 1
    comm = commutators_of(P, els, els)
    return _from_indices(P, np.unique(comm[cop]))


def conjugacy_class_reps(G: Groupish) -> list[int]:
    """Smallest index of each conjugacy class of ``G``, ascending."""
    amb = as_subgroup(G)
    P = amb.parent
    seen = np.zeros(P.order, dtype=bool)
    reps = []
    for x in amb.indices:
        if seen[x]:
            continue
        reps.append(int(x))
        seen[conjugates_of(P, np.array([x]), amb.indices).ravel()] = True
    return reps
