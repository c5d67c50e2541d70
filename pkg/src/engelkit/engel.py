"""Engel chains and the subgroups ``E_n(g) = <[x, g, ..., g] : x in G>``.

For a fixed ``g`` the map ``w -> [w, g]`` sends the generating set
``W_n = {[x, g (n times)] : x in G}`` to ``W_{n+1}``. The sets are iterated
until one repeats; the subgroup chain ``E_1(g) ≥ E_2(g) ≥ ...`` is
non-increasing, so every ``<W_n>`` on the detected cycle equals the stable
subgroup ``E(g)``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .perm import Permutation
from .subgroups import Groupish, Subgroup, _close, _from_indices, as_subgroup


@dataclass
class ChainResult:
    terminates: bool
    steps: int
    trace: list[Permutation]


@dataclass
class EngelRecord:
    g: Permutation
    n_stab: int
    E_order: int
    E_subgroup: Subgroup
    is_engel: bool
    chain_orders: list[int] = field(default_factory=list)


@dataclass
class EngelProfile:
    group: Subgroup
    records: list[EngelRecord]

    @property
    def m(self) -> int:
        return max(r.E_order for r in self.records)

    def record(self, g: Permutation) -> EngelRecord:
        for r in self.records:
            if r.g == g:
                return r
        raise KeyError(str(g))

    @property
    def engel_elements(self) -> list[Permutation]:
        return [r.g for r in self.records if r.is_engel]


def _resolve(g, G: Groupish) -> tuple[Subgroup, int]:
    amb = as_subgroup(G)
    P = amb.parent
    gi = P.index(g) if isinstance(g, Permutation) else int(g)
    if not amb.mask[gi]:
        raise ValueError(f"{P.elements[gi]} is not an element of {amb!r}")
    return amb, gi


def _step_map(amb: Subgroup, gi: int) -> np.ndarray:
    """Array ``f`` over parent indices with ``f[x] = [x, g]`` (valid on ``amb``)."""
    P = amb.parent
    mul, inv = P.mul, P.inv
    x = np.arange(P.order)
    return mul[mul[mul[inv[x], inv[gi]], x], gi].astype(np.int64)


def engel_chain(x, g, G: Groupish) -> ChainResult:
    """Follow ``x, [x, g], [x, g, g], ...`` until the identity or a repeat."""
    amb, gi = _resolve(g, G)
    _, xi = _resolve(x, amb)
    P = amb.parent
    f = _step_map(amb, gi)
    trace = [xi]
    seen = {xi}
    cur = xi
    steps = 0
    while cur != 0 and steps < amb.order:
        cur = int(f[cur])
        steps += 1
        trace.append(cur)
        if cur in seen and cur != 0:
            return ChainResult(False, steps, [P.elements[i] for i in trace])
        seen.add(cur)
    return ChainResult(cur == 0, steps, [P.elements[i] for i in trace])


def _engel_by_chains(amb: Subgroup, gi: int) -> bool:
    f = _step_map(amb, gi)
    # f fixes the identity, so x reaches it iff f^(2^k)(x) = 1 once 2^k >= |G|
    span = 1
    while span < amb.order:
        f = f[f]
        span *= 2
    return bool(np.all(f[amb.indices] == 0))


def is_engel_element(g, G: Groupish) -> bool:
    """True iff every chain ``[x, g, ..., g]``, ``x in G``, reaches the identity."""
    amb, gi = _resolve(g, G)
    return _engel_by_chains(amb, gi)


def _word_set(amb: Subgroup, gi: int, n: int) -> np.ndarray:
    f = _step_map(amb, gi)
    W = amb.indices
    for _ in range(n):
        W = np.unique(f[W])
    return W


def E_n(g, n: int, G: Groupish) -> Subgroup:
    """``E_n(g)``: generated by ``[x, g, ..., g]`` (``n`` copies of ``g``) over all ``x``."""
    if n < 1:
        raise ValueError("n must be positive")
    amb, gi = _resolve(g, G)
    E = _from_indices(amb.parent, _word_set(amb, gi, n))
    E.label = f"E_{n}"
    return E


def _stable(amb: Subgroup, gi: int) -> tuple[np.ndarray, int, list[int]]:
    """Stable generating set, n_stab, and |E_n| for n = 1..n_stab (+1 if nontrivial)."""
    f = _step_map(amb, gi)
    history: dict[bytes, int] = {}
    sets = []
    W = np.unique(f[amb.indices])
    n = 1
    while True:
        key = W.tobytes()
        if key in history:
            first = history[key]
            break
        history[key] = n
        sets.append(W)
        W = np.unique(f[W])
        n += 1
    stable_mask, _ = _closure_mask(amb, sets[first - 1])
    target = int(stable_mask.sum())
    orders = []
    n_stab = first
    for i, Wi in enumerate(sets[:first]):
        order = int(_closure_mask(amb, Wi)[0].sum())
        orders.append(order)
        if order == target:
            n_stab = i + 1
            break
    if target > 1:
        nxt = sets[n_stab] if n_stab < len(sets) else sets[-1]
        orders.append(int(_closure_mask(amb, nxt)[0].sum()))
    return sets[first - 1], n_stab, orders


def _closure_mask(amb: Subgroup, W: np.ndarray):
    return _close(amb.parent, W)


def E_stable(g, G: Groupish) -> tuple[Subgroup, int]:
    """``(E(g), n_stab)`` where ``n_stab`` is the first ``n`` with ``E_n(g) = E(g)``."""
    amb, gi = _resolve(g, G)
    W, n_stab, _ = _stable(amb, gi)
    E = _from_indices(amb.parent, W)
    E.label = "E"
    return E, n_stab


def chain_orders(g, G: Groupish) -> list[int]:
    """``|E_n(g)|`` for ``n = 1..n_stab``, plus one more term when ``E(g) ≠ 1``
    to show the chain has settled."""
    amb, gi = _resolve(g, G)
    return _stable(amb, gi)[2]


def _profile_rows(amb: Subgroup, idx: list[int]) -> list[tuple]:
    rows = []
    for gi in idx:
        W, n_stab, orders = _stable(amb, gi)
        rows.append((gi, W, n_stab, orders, _engel_by_chains(amb, gi)))
    return rows


def engel_profile(G: Groupish, jobs: int = 1) -> EngelProfile:
    """E(g), n_stab and chain-based Engel status for every element of ``G``."""
    amb = as_subgroup(G)
    P = amb.parent
    idx = amb.indices.tolist()
    if jobs > 1 and len(idx) > 1:
        chunks = [idx[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_profile_rows, [amb] * len(chunks), chunks))
        rows = sorted((r for part in parts for r in part), key=lambda r: r[0])
    else:
        rows = _profile_rows(amb, idx)
    records = []
    for gi, W, n_stab, orders, engel in rows:
        E = _from_indices(P, W)
        records.append(EngelRecord(P.elements[gi], n_stab, E.order, E, engel, orders))
    return EngelProfile(amb, records)
