"""Verification suites: each checks one finite-group statement about Engel
subgroups, nilpotent residuals or Fitting subgroups on every group of a
corpus and returns PASS/FAIL/SKIP cases.

Suites are computed group by group (see :func:`run_verification`) so that a
worker pool can split the corpus; the merged report does not depend on the
number of workers.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from importlib import resources
from typing import Callable, Sequence

import numpy as np

from . import __version__
from .engel import E_n, _step_map, engel_profile
from .perm import GroupHandle
from .structure import (conjugacy_class_reps, coprime_commutator_subgroup, exponent, fitting,
                        fitting_height, hall_qprime, is_abelian, is_nilpotent, is_solvable,
                        lower_central_term, nilpotency_class, nilpotent_residual, p_core,
                        prime_factors, sylow)
from .subgroups import (Subgroup, _close, _from_indices, centralizer, commutator_subgroup,
                        commutators_of, derived_subgroup, frattini_p, image_in_quotient, intersect,
                        is_normal, is_subgroup_mask, join, normal_closure, quotient, subgroup)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"
NORMAL_SAMPLE_CAP = 25
HALL_BUDGET = 2000
CLASS_BOUND_NOTE = "class bound f(c,d) = d*c(c+1)/2 - c(c-1)/2 (reconstructed reading)"


@dataclass
class Case:
    group_label: str
    status: str
    detail: str


@dataclass
class SuiteResult:
    name: str
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.status == PASS for c in self.cases)

    @property
    def failed(self) -> int:
        return sum(c.status == FAIL for c in self.cases)

    @property
    def skipped(self) -> int:
        return sum(c.status == SKIP for c in self.cases)

    def to_dict(self) -> dict:
        return {"name": self.name, "cases": [asdict(c) for c in self.cases],
                "passed": self.passed, "failed": self.failed, "skipped": self.skipped}


@dataclass
class BoundTableRow:
    group_label: str
    order: int
    m: int
    gamma_inf_order: int
    fitting_index: int
    quotient_exponent: int
    fitting_height: int | None
    nilpotent: bool

    def csv_fields(self) -> list[str]:
        return [self.group_label, str(self.order), str(self.m), str(self.gamma_inf_order),
                str(self.fitting_index), str(self.quotient_exponent),
                "NONE" if self.fitting_height is None else str(self.fitting_height),
                "true" if self.nilpotent else "false"]


TABLE_HEADER = ["group", "order", "m", "gamma_inf", "fitting_index", "quotient_exponent",
                "fitting_height", "nilpotent"]


class GroupContext:
    """Lazily computed invariants of one group, shared by all suites."""

    def __init__(self, G: GroupHandle, seed: int = 0):
        self.G = G
        self.amb = G.whole
        self.seed = seed
        self.label = G.label or G.name
        self._quotients: dict[bytes, object] = {}

    @cached_property
    def profile(self):
        return engel_profile(self.G)

    @cached_property
    def m(self) -> int:
        return self.profile.m

    @cached_property
    def fitting(self) -> Subgroup:
        return fitting(self.G)

    @cached_property
    def gamma_inf(self) -> Subgroup:
        return nilpotent_residual(self.G)

    @cached_property
    def height(self) -> int | None:
        return fitting_height(self.G)

    @cached_property
    def solvable(self) -> bool:
        return is_solvable(self.G)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.G)

    @cached_property
    def class_reps(self) -> list[int]:
        return conjugacy_class_reps(self.G)

    @cached_property
    def normal_sample(self) -> list[Subgroup]:
        """Nontrivial normal closures of single elements, then joins of two, capped."""
        singles: list[Subgroup] = []
        for x in self.class_reps[1:]:
            N = normal_closure(self.G, _from_indices(self.G, [x]))
            if N not in singles:
                singles.append(N)
        sample = list(singles)
        for i in range(len(singles)):
            for j in range(i + 1, len(singles)):
                if len(sample) >= NORMAL_SAMPLE_CAP:
                    break
                N = join(singles[i], singles[j])
                if N not in sample:
                    sample.append(N)
        sample = sample[:NORMAL_SAMPLE_CAP]
        sample.sort(key=lambda N: (N.order, N.indices.tobytes()))
        return sample

    def quotient(self, N: Subgroup):
        key = N.mask.tobytes()
        if key not in self._quotients:
            self._quotients[key] = quotient(self.G, N)
        return self._quotients[key]

    @cached_property
    def row(self) -> BoundTableRow:
        F = self.fitting
        Q = self.quotient(F)
        return BoundTableRow(self.label, self.G.order, self.m, self.gamma_inf.order,
                             self.G.order // F.order, exponent(Q.action), self.height,
                             self.nilpotent)


def _case(ctx: GroupContext, problems: list[str], ok_detail: str) -> Case:
    if problems:
        shown = "; ".join(problems[:5])
        more = f" (+{len(problems) - 5} more)" if len(problems) > 5 else ""
        return Case(ctx.label, FAIL, shown + more)
    return Case(ctx.label, PASS, ok_detail)


# --- per-group suite bodies ---------------------------------------------------

def cases_baer(ctx: GroupContext) -> list[Case]:
    """Engel element <=> in F(G) <=> E(g) = 1, element by element."""
    problems = []
    for r in ctx.profile.records:
        in_F = r.g in ctx.fitting
        if not (r.is_engel == in_F == (r.E_order == 1)):
            problems.append(f"g={r.g}: engel={r.is_engel} inF={in_F} |E|={r.E_order}")
    engel_count = sum(r.is_engel for r in ctx.profile.records)
    return [_case(ctx, problems, f"Engel set = F(G), |F(G)| = {ctx.fitting.order}, "
                                 f"{engel_count} Engel elements")]


def cases_zorn(ctx: GroupContext) -> list[Case]:
    """m(G) = 1 <=> G nilpotent <=> gamma_inf(G) = 1."""
    a, b, c = ctx.m == 1, ctx.nilpotent, ctx.gamma_inf.is_trivial()
    problems = [] if a == b == c else [f"m=1:{a} nilpotent:{b} gamma_inf=1:{c}"]
    return [_case(ctx, problems, f"m = {ctx.m}, nilpotent = {str(b).lower()}")]


def cases_chain(ctx: GroupContext) -> list[Case]:
    """Monotone chain, g-invariance, E_1(g) = [G, g] normal, quotient compatibility."""
    G, amb = ctx.G, ctx.amb
    problems = []
    plateaus = []
    checked = 0
    quotients = [ctx.quotient(N) for N in ctx.normal_sample if N.order < G.order]
    for r in ctx.profile.records:
        gi = G.index(r.g)
        f = _step_map(amb, gi)
        W = np.unique(f[amb.indices])
        prev_mask = None
        orders = []
        for n in range(1, r.n_stab + 5):
            mask, _ = _close(G, W)
            orders.append(int(mask.sum()))
            if prev_mask is not None and np.any(mask & ~prev_mask):
                problems.append(f"g={r.g}: E_{n} not inside E_{n - 1}")
            if n <= r.n_stab + 3:
                checked += 1
                conj = G.mul[G.mul[G.inv[gi], np.flatnonzero(mask)], gi]
                if not np.all(mask[conj]):
                    problems.append(f"g={r.g}: E_{n} not g-invariant")
            if n == 1:
                direct = commutator_subgroup(G, subgroup(G, [r.g]))
                if not np.array_equal(mask, direct.mask):
                    problems.append(f"g={r.g}: E_1 != [G,g]")
                elif not is_normal(G, direct):
                    problems.append(f"g={r.g}: E_1 not normal")
            prev_mask = mask
            W = np.unique(f[W])
        drops = [i for i in range(1, len(orders) - 1)
                 if orders[i] == orders[i - 1] and any(o < orders[i] for o in orders[i + 1:])]
        if drops:
            plateaus.append(f"g={r.g} orders={orders}")
        for Q in quotients:
            gbar = Q.project(gi)
            for n in range(1, r.n_stab + 2):
                img = image_in_quotient(Q, E_n(r.g, n, G))
                if img != E_n(gbar, n, Q.action):
                    problems.append(f"g={r.g}: image of E_{n} != E_{n}(g bar) mod |N|={Q.kernel.order}")
    detail = f"{checked} (g, n) pairs, {len(quotients)} quotients"
    if plateaus:
        detail += "; plateau-then-drop observed: " + "; ".join(plateaus[:3])
    return [_case(ctx, problems, detail)]


def cases_residual(ctx: GroupContext) -> list[Case]:
    """gamma_inf = <coprime-order commutators>; gamma_inf(G/N) = image of gamma_inf(G)."""
    problems = []
    cop = coprime_commutator_subgroup(ctx.G)
    if cop != ctx.gamma_inf:
        problems.append(f"(a) |<coprime commutators>| = {cop.order} != |gamma_inf| = {ctx.gamma_inf.order}")
    for N in ctx.normal_sample:
        Q = ctx.quotient(N)
        img = image_in_quotient(Q, ctx.gamma_inf)
        res = nilpotent_residual(Q.action)
        if img != res:
            problems.append(f"(b) N of order {N.order}: image order {img.order} != {res.order}")
    return [_case(ctx, problems, f"(a) |gamma_inf| = {ctx.gamma_inf.order}; "
                                 f"(b) {len(ctx.normal_sample)} normal subgroups")]


def cases_l0(ctx: GroupContext) -> list[Case]:
    """[O_p(G), g] <= E(g) for every p'-element g."""
    G = ctx.G
    problems = []
    checked = 0
    for p in prime_factors(G.order):
        P = p_core(G, p)
        if P.is_trivial():
            continue
        for r in ctx.profile.records:
            if r.g.order() % p == 0:
                continue
            checked += 1
            comm = commutator_subgroup(P, subgroup(G, [r.g]))
            if not comm <= r.E_subgroup:
                problems.append(f"p={p} g={r.g}: |[P,g]| = {comm.order} not in E(g) (|E| = {r.E_order})")
    if not checked:
        return [Case(ctx.label, PASS, "no nontrivial p-core with p'-elements")]
    return [_case(ctx, problems, f"{checked} (p, g) pairs")]


def l2_instances(ctx: GroupContext) -> list[tuple[int, Subgroup, str, Subgroup]]:
    """(q, P, U-name, U): P = Sylow q of F(G), U a q'-subgroup of G."""
    G = ctx.G
    out = []
    for q in prime_factors(ctx.fitting.order):
        P = sylow(ctx.fitting, q)
        Us = []
        if ctx.solvable:
            H = hall_qprime(G, q, budget=HALL_BUDGET, seed=ctx.seed)
            if H is not None:
                Us.append((f"Hall {q}'", H))
        for r in prime_factors(G.order):
            if r != q:
                Us.append((f"Sylow {r}", sylow(G, r)))
        if not Us:
            Us.append(("trivial", subgroup(G, [])))
        for name, U in Us:
            out.append((q, P, name, U))
    return out


def cases_l2(ctx: GroupContext) -> list[Case]:
    """[V, U] = <[V, u] : u in U> on the Frattini quotient V of a Sylow of F(G)."""
    cases = []
    for q, P, uname, U in l2_instances(ctx):
        Phi = frattini_p(P)
        Q = ctx.quotient(Phi)
        V = image_in_quotient(Q, P)
        Ub = image_in_quotient(Q, U)
        problems = []
        if not (is_abelian(V) and all(V.parent.orders[V.indices] <= q)):
            problems.append("V not elementary abelian")
        per_u = []
        for u in Ub.elements:
            Vu = commutator_subgroup(V, subgroup(Q.action, [u]))
            CVu = centralizer(V, subgroup(Q.action, [u]))
            if Vu.order * CVu.order != V.order:
                problems.append(f"u={u}: |[V,u]||C_V(u)| != |V|")
            per_u.append(Vu)
        joined = join(*per_u)
        direct = commutator_subgroup(V, Ub)
        if joined != direct:
            problems.append(f"<[V,u]> has order {joined.order}, [V,U] has {direct.order}")
        m_loc = max(s.order for s in per_u)
        label = f"q={q} |V|={V.order} U={uname}"
        cases.append(Case(ctx.label, FAIL if problems else PASS,
                          f"{label}: " + ("; ".join(problems) if problems else
                                          f"m_loc={m_loc} |[V,U]|={direct.order} |U|={Ub.order}")))
    if not cases:
        cases.append(Case(ctx.label, PASS, "F(G) trivial, no instances"))
    return cases


def cases_metan(ctx: GroupContext) -> list[Case]:
    """Fitting height <= 2: gamma_inf(G) = prod_q [F_q, G_q'] over q dividing |F(G)|."""
    if not ctx.solvable:
        return [Case(ctx.label, SKIP, "non-solvable: Fitting height undefined")]
    if ctx.height > 2:
        return [Case(ctx.label, SKIP, f"Fitting height {ctx.height} > 2")]
    G = ctx.G
    results = []
    for seed in (ctx.seed, ctx.seed + 1):
        parts = []
        for q in prime_factors(ctx.fitting.order):
            H = hall_qprime(G, q, budget=HALL_BUDGET, seed=seed)
            if H is None:
                return [Case(ctx.label, SKIP, f"Hall {q}'-subgroup NOT_FOUND within budget "
                                              f"{HALL_BUDGET} (seed {seed})")]
            parts.append(commutator_subgroup(sylow(ctx.fitting, q), H))
        results.append(join(*parts) if parts else subgroup(G, []))
    problems = []
    if results[0] != ctx.gamma_inf:
        problems.append(f"product order {results[0].order} != |gamma_inf| = {ctx.gamma_inf.order}")
    agree = results[0] == results[1]
    detail = (f"height {ctx.height}, |gamma_inf| = {ctx.gamma_inf.order}; "
              f"Hall choices for seeds {ctx.seed},{ctx.seed + 1} "
              + ("agree" if agree else f"DISAGREE ({results[0].order} vs {results[1].order})"))
    return [_case(ctx, problems, detail)]


def cases_coprime(ctx: GroupContext) -> list[Case]:
    """Coprime action of <alpha> on a normal B: [B,A] = [[B,A],A]; abelian B splits;
    centralizers pass to quotients B/N."""
    G = ctx.G
    problems = []
    pairs = 0
    normals = ctx.normal_sample
    for a in range(1, G.order):
        A = _from_indices(G, [a])
        alpha = G.elements[a]
        for B in normals:
            if math.gcd(int(G.orders[a]), B.order) != 1:
                continue
            pairs += 1
            BA = commutator_subgroup(B, A)
            if commutator_subgroup(BA, A) != BA:
                problems.append(f"alpha={alpha} |B|={B.order}: [B,A] != [[B,A],A]")
            CB = centralizer(B, A)
            if is_abelian(B):
                if BA.order * CB.order != B.order:
                    problems.append(f"alpha={alpha} |B|={B.order}: |[B,A]||C_B(A)| != |B|")
                if not intersect(BA, CB).is_trivial():
                    problems.append(f"alpha={alpha} |B|={B.order}: [B,A] meets C_B(A)")
            for N in normals:
                if not N < B:
                    continue
                Q = ctx.quotient(N)
                lhs = centralizer(image_in_quotient(Q, B), image_in_quotient(Q, A))
                rhs = image_in_quotient(Q, join(CB, N))
                if lhs != rhs:
                    problems.append(f"alpha={alpha} |B|={B.order} |N|={N.order}: "
                                    f"C_(B/N)(A) != C_B(A)N/N")
    return [_case(ctx, problems, f"{pairs} coprime (alpha, B) pairs")]


def class_bound(c: int, d: int) -> int:
    return d * c * (c + 1) // 2 - c * (c - 1) // 2


def hall_instances(ctx: GroupContext, max_order: int = 60) -> list[tuple[Subgroup, str, int]]:
    """(B, description, d) with B = F(G) nontrivial, d = 1..4."""
    if ctx.G.order > max_order or ctx.fitting.is_trivial():
        return []
    return [(ctx.fitting, "F(A)", d) for d in range(1, 5)]


def hall_case(label: str, A: GroupHandle, B: Subgroup, bname: str, d: int) -> Case:
    c = nilpotency_class(B)
    if c is None or not is_normal(A, B):
        return Case(label, FAIL, f"B={bname} is not a normal nilpotent subgroup")
    Bp = derived_subgroup(B)
    gd = lower_central_term(A, d)
    mask = np.ones(A.order, dtype=bool)
    for w in gd.gens:
        mask &= Bp.mask[commutators_of(A, np.array([A.index(w)]), np.arange(A.order))[0]]
    head = f"B={bname} c={c} d={d}"
    if not is_subgroup_mask(A, mask):
        return Case(label, FAIL, f"{head}: C is not a subgroup")
    C = _from_indices(A, np.flatnonzero(mask))
    cls = nilpotency_class(C)
    k = image_in_quotient(quotient(A, Bp), gd).order
    bound = class_bound(c, d)
    index = A.order // C.order
    detail = (f"{head}: class(C)={cls} f(c,d)={bound} [A:C]={index} "
              f"|gamma_d(A/B')|={k}; {CLASS_BOUND_NOTE}")
    ok = cls is not None and cls <= bound and index <= math.factorial(k)
    return Case(label, PASS if ok else FAIL, detail)


def cases_hall(ctx: GroupContext) -> list[Case]:
    return [hall_case(ctx.label, ctx.G, B, bname, d) for B, bname, d in hall_instances(ctx)]


def cases_theorem(ctx: GroupContext, baseline: dict[str, list[str]] | None = None) -> list[Case]:
    """Degenerate case m = 1 and consistency of the bound-table row."""
    row = ctx.row
    problems = []
    if row.m == 1 and not (row.gamma_inf_order == 1 and row.fitting_index == 1):
        problems.append("m = 1 but gamma_inf or [G:F] nontrivial")
    if not ((row.m == 1) == row.nilpotent == (row.gamma_inf_order == 1)):
        problems.append("nilpotent / m = 1 / gamma_inf = 1 disagree")
    Q = ctx.quotient(ctx.gamma_inf)
    if row.gamma_inf_order * Q.order != row.order:
        problems.append("|gamma_inf| * |G/gamma_inf| != |G|")
    if row.order % row.gamma_inf_order:
        problems.append("|gamma_inf| does not divide |G|")
    if baseline is not None and row.group_label in baseline:
        if baseline[row.group_label] != row.csv_fields():
            problems.append(f"row {row.csv_fields()} differs from baseline {baseline[row.group_label]}")
    return [_case(ctx, problems, ",".join(row.csv_fields()))]


def cases_inheritance(ctx: GroupContext) -> list[Case]:
    """m(section) <= m(G); E(g) computed in H lies inside E(g) computed in G."""
    G = ctx.G
    problems = []
    for N in ctx.normal_sample:
        mq = engel_profile(ctx.quotient(N).action).m
        if mq > ctx.m:
            problems.append(f"m(G/N) = {mq} > m(G) = {ctx.m} for |N| = {N.order}")
    subs: list[Subgroup] = []
    for x in ctx.class_reps[1:9]:
        cyc = _from_indices(G, [x])
        for H in (cyc, join(ctx.fitting, cyc)):
            if H not in subs and H.order < G.order:
                subs.append(H)
    for H in [ctx.gamma_inf] + [sylow(G, p) for p in prime_factors(G.order)]:
        if H not in subs and 1 < H.order < G.order:
            subs.append(H)
    for H in subs:
        prof = engel_profile(H)
        if prof.m > ctx.m:
            problems.append(f"m(H) = {prof.m} > m(G) for |H| = {H.order}")
        for r in prof.records:
            if not r.E_subgroup <= ctx.profile.record(r.g).E_subgroup:
                problems.append(f"|H| = {H.order}, g = {r.g}: E_H(g) not inside E_G(g)")
                break
    return [_case(ctx, problems, f"m(G) = {ctx.m}; {len(ctx.normal_sample)} quotients, "
                                 f"{len(subs)} subgroups")]


SUITES: dict[str, Callable[..., list[Case]]] = {
    "baer": cases_baer,
    "zorn": cases_zorn,
    "chain": cases_chain,
    "residual": cases_residual,
    "l0": cases_l0,
    "l2": cases_l2,
    "metan": cases_metan,
    "coprime": cases_coprime,
    "hall": cases_hall,
    "theorem": cases_theorem,
    "inheritance": cases_inheritance,
}


# --- baseline and table -------------------------------------------------------

def load_baseline(text: str | None = None) -> dict[str, list[str]]:
    """Committed bound-table rows keyed by group label."""
    if text is None:
        text = resources.files("engelkit").joinpath("data/baseline_table.csv").read_text("utf-8")
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != TABLE_HEADER:
        raise ValueError(f"unexpected baseline header {rows[0]}")
    return {r[0]: r for r in rows[1:]}


def table_csv(rows: Sequence[BoundTableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def envelope(rows: Sequence[BoundTableRow]) -> dict[int, int]:
    """Largest |gamma_inf| seen among groups with m(G) <= m, for each observed m."""
    env = {}
    best = 0
    for m in sorted({r.m for r in rows}):
        best = max([best] + [r.gamma_inf_order for r in rows if r.m == m])
        env[m] = best
    return env


def envelope_case(rows: Sequence[BoundTableRow], baseline: dict[str, list[str]] | None) -> Case:
    env = envelope(rows)
    problems = []
    if baseline:
        base_rows = [BoundTableRow(r[0], int(r[1]), int(r[2]), int(r[3]), int(r[4]), int(r[5]),
                                   None if r[6] == "NONE" else int(r[6]), r[7] == "true")
                     for r in baseline.values()]
        base_env = envelope(base_rows)
        for r in rows:
            allowed = max((v for m, v in base_env.items() if m <= r.m), default=None)
            if allowed is not None and r.gamma_inf_order > allowed:
                problems.append(f"{r.group_label}: |gamma_inf| = {r.gamma_inf_order} exceeds "
                                f"baseline envelope {allowed} at m = {r.m}")
    detail = "envelope " + " ".join(f"m<={m}:{v}" for m, v in env.items())
    if problems:
        return Case("*corpus*", FAIL, "; ".join(problems))
    return Case("*corpus*", PASS, detail)


def theorem_table(corpus: Sequence[GroupHandle], seed: int = 0,
                  baseline: dict[str, list[str]] | None = None):
    """Bound-table rows for the corpus plus the theorem-suite verdicts."""
    ctxs = [GroupContext(G, seed) for G in corpus]
    rows = [c.row for c in ctxs]
    cases = [case for c in ctxs for case in cases_theorem(c, baseline)]
    cases.append(envelope_case(rows, baseline))
    return rows, SuiteResult("theorem", cases)


# --- running ------------------------------------------------------------------

def _group_worker(G: GroupHandle, names: Sequence[str], seed: int,
                  baseline: dict[str, list[str]] | None):
    ctx = GroupContext(G, seed)
    out = {}
    for name in names:
        fn = SUITES[name]
        out[name] = fn(ctx, baseline) if name == "theorem" else fn(ctx)
    row = ctx.row if "theorem" in names else None
    return out, row


def resolve_suites(names: Sequence[str]) -> list[str]:
    if not names or "all" in names:
        return list(SUITES)
    bad = [n for n in names if n not in SUITES]
    if bad:
        raise KeyError(", ".join(bad))
    return [n for n in SUITES if n in names]


def run_suites(corpus: Sequence[GroupHandle], names: Sequence[str], seed: int = 0, jobs: int = 1,
               baseline: dict[str, list[str]] | None = None) -> tuple[list[SuiteResult], list[BoundTableRow]]:
    names = resolve_suites(names)
    args = [(G, names, seed, baseline) for G in corpus]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_group_worker, *zip(*args)))
    else:
        parts = [_group_worker(*a) for a in args]
    suites = []
    for name in names:
        res = SuiteResult(name, [c for part, _ in parts for c in part[name]])
        suites.append(res)
    rows = [row for _, row in parts if row is not None]
    if "theorem" in names:
        next(s for s in suites if s.name == "theorem").cases.append(envelope_case(rows, baseline))
    return suites, rows


def run_verification(corpus: Sequence[GroupHandle], names: Sequence[str] = ("all",), seed: int = 0,
                     jobs: int = 1, baseline: dict[str, list[str]] | None = None,
                     max_order: int | None = None) -> dict:
    """Run suites and return the JSON-ready report."""
    suites, _ = run_suites(corpus, names, seed, jobs, baseline)
    return {
        "tool_version": __version__,
        "seed": seed,
        "max_order": max_order if max_order is not None else (corpus[0].max_order if corpus else None),
        "corpus": [G.label or G.name for G in corpus],
        "suites": [s.to_dict() for s in suites],
    }


def _single(name: str, corpus: Sequence[GroupHandle], seed: int = 0) -> SuiteResult:
    return run_suites(corpus, [name], seed)[0][0]


def suite_baer_zorn(corpus, seed: int = 0) -> list[SuiteResult]:
    return run_suites(corpus, ["baer", "zorn"], seed)[0]


def suite_residual(corpus, seed: int = 0) -> SuiteResult:
    return _single("residual", corpus, seed)


def suite_l0(corpus, seed: int = 0) -> SuiteResult:
    return _single("l0", corpus, seed)


def suite_l2(corpus, seed: int = 0) -> SuiteResult:
    return _single("l2", corpus, seed)


def suite_metan(corpus, seed: int = 0) -> SuiteResult:
    return _single("metan", corpus, seed)


def suite_coprime(corpus, seed: int = 0) -> SuiteResult:
    return _single("coprime", corpus, seed)


def suite_hall_nilpotency(instances, seed: int = 0) -> SuiteResult:
    """``instances``: iterable of (A, B, d) or a corpus of groups (B = F(A))."""
    cases = []
    for inst in instances:
        if isinstance(inst, GroupHandle):
            cases.extend(cases_hall(GroupContext(inst, seed)))
        else:
            A, B, d = inst
            cases.append(hall_case(A.label or A.name, A, B, B.label or "B", d))
    return SuiteResult("hall", cases)


def suite_inheritance(corpus, seed: int = 0) -> SuiteResult:
    return _single("inheritance", corpus, seed)
