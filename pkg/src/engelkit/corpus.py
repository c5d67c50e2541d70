"""Built-in permutation groups, the shipped corpus, and the group file format.

A group file is UTF-8 text with ``key=value`` lines::

    # comment
    name=T
    degree=3
    gens=(1 2),(1 2 3)
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path

from .perm import DEFAULT_MAX_ORDER, CycleSyntaxError, GroupHandle, Permutation, parse_cycles


class GroupFileError(ValueError):
    def __init__(self, msg: str, line: int, col: int | None = None):
        where = f"line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.col = col


class UnknownGroup(ValueError):
    pass


@dataclass
class GroupSpec:
    label: str
    degree: int
    generator_strings: list[str] = field(default_factory=list)


def _cycle(points, degree) -> Permutation:
    return Permutation.from_cycles([tuple(points)], degree)


def cyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    gens = [_cycle(range(1, n + 1), n)] if n > 1 else []
    return GroupHandle(gens, degree=n, label=f"C{n}", max_order=max_order)


def dihedral(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Symmetries of the n-gon, order 2n."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    rot = _cycle(range(1, n + 1), n)
    refl = Permutation([((-i) % n) + 1 for i in range(n)])
    return GroupHandle([rot, refl], label=f"D{2 * n}", max_order=max_order)


def symmetric(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    if not 1 <= n <= 6:
        raise ValueError("symmetric(n) supports 1 <= n <= 6")
    gens = []
    if n >= 2:
        gens.append(_cycle((1, 2), n))
    if n >= 3:
        gens.append(_cycle(range(1, n + 1), n))
    return GroupHandle(gens, degree=n, label=f"S{n}", max_order=max_order)


def alternating(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    if not 1 <= n <= 6:
        raise ValueError("alternating(n) supports 1 <= n <= 6")
    gens = [_cycle((1, 2, k), n) for k in range(3, n + 1)]
    return GroupHandle(gens, degree=n, label=f"A{n}", max_order=max_order)


def klein4(max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    gens = [Permutation.parse("(1 2)(3 4)", 4), Permutation.parse("(1 3)(2 4)", 4)]
    return GroupHandle(gens, label="V4", max_order=max_order)


def quaternion8(max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Right regular representation of Q8 on 8 points."""
    # elements as (sign, unit) with unit in 1, i, j, k
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def times(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    def right(g):
        return Permutation([elems.index(times(x, g)) + 1 for x in elems])

    return GroupHandle([right((1, "i")), right((1, "j"))], label="Q8", max_order=max_order)


def elem_abelian(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Regular representation of (Z_p)^k by translations."""
    if not 1 <= k <= 3 or len(_primes_upto(p)) == 0 or _primes_upto(p)[-1] != p:
        raise ValueError("elem_abelian(p, k) needs p prime and 1 <= k <= 3")
    vecs = list(itertools.product(range(p), repeat=k))
    pos = {v: i for i, v in enumerate(vecs)}
    gens = []
    for axis in range(k):
        gens.append(Permutation([pos[tuple((c + (j == axis)) % p for j, c in enumerate(v))] + 1
                                 for v in vecs]))
    return GroupHandle(gens, degree=len(vecs), label=f"E{p}^{k}", max_order=max_order)


def _primes_upto(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if all(q % r for r in range(2, int(q ** 0.5) + 1))]


def frobenius(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Affine maps ``x -> a x + b`` on Z_p with ``a`` in the order-k subgroup of units."""
    if p > 13 or p not in _primes_upto(p):
        raise ValueError("frobenius(p, k) needs a prime p <= 13")
    if k < 1 or (p - 1) % k:
        raise ValueError(f"frobenius({p}, {k}): k must divide p - 1")
    a = next(a for a in range(1, p) if _mult_order(a, p) == k)
    shift = Permutation([(x + 1) % p + 1 for x in range(p)])
    scale = Permutation([(a * x) % p + 1 for x in range(p)])
    gens = [shift] + ([scale] if k > 1 else [])
    return GroupHandle(gens, degree=p, label=f"Frob{p}:{k}", max_order=max_order)


def _mult_order(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def direct_product(a: GroupHandle, b: GroupHandle, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Product acting on the disjoint union of the two point sets."""
    da, db = a.degree, b.degree
    gens = [Permutation(g.images + list(range(da + 1, da + db + 1))) for g in a.generators]
    gens += [Permutation(list(range(1, da + 1)) + [i + da for i in g.images]) for g in b.generators]
    return GroupHandle(gens, degree=da + db, label=f"{a.label}x{b.label}", max_order=max_order)


def wreath_c2_c2(max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    gens = [Permutation.parse("(1 2)", 4), Permutation.parse("(1 3)(2 4)", 4)]
    return GroupHandle(gens, label="C2wrC2", max_order=max_order)


BUILTINS = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "klein4": klein4,
    "quaternion8": quaternion8,
    "elem_abelian": elem_abelian,
    "frobenius": frobenius,
    "direct_product": direct_product,
    "wreath_c2_c2": wreath_c2_c2,
}


def builtin(name: str, *params, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    try:
        ctor = BUILTINS[name]
    except KeyError:
        raise UnknownGroup(f"unknown built-in group {name!r}") from None
    return ctor(*params, max_order=max_order)


_LABEL_PATTERNS = [
    (re.compile(r"C(\d+)"), lambda m, c: cyclic(int(m[1]), c)),
    (re.compile(r"D(\d+)"), lambda m, c: dihedral(int(m[1]) // 2, c) if int(m[1]) % 2 == 0 else None),
    (re.compile(r"S(\d+)"), lambda m, c: symmetric(int(m[1]), c)),
    (re.compile(r"A(\d+)"), lambda m, c: alternating(int(m[1]), c)),
    (re.compile(r"V4"), lambda m, c: klein4(c)),
    (re.compile(r"Q8"), lambda m, c: quaternion8(c)),
    (re.compile(r"E(\d+)\^(\d+)"), lambda m, c: elem_abelian(int(m[1]), int(m[2]), c)),
    (re.compile(r"Frob(\d+):(\d+)"), lambda m, c: frobenius(int(m[1]), int(m[2]), c)),
    (re.compile(r"C2wrC2"), lambda m, c: wreath_c2_c2(c)),
]

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$")


def from_label(label: str, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """Build a group from a corpus-style label such as ``S4``, ``Frob7:3`` or ``D8xS3``."""
    for pat, build in _LABEL_PATTERNS:
        m = pat.fullmatch(label)
        if m:
            G = build(m, max_order)
            if G is not None:
                return G
    if "x" in label:
        left, _, right = label.partition("x")
        return direct_product(from_label(left, max_order), from_label(right, max_order), max_order)
    raise UnknownGroup(f"unknown group label {label!r}")


def _split_args(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def resolve(selector: str, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    """A group from a file path, a call like ``frobenius(7,3)``, or a label like ``S4``."""
    path = Path(selector)
    if path.suffix or path.exists():
        if path.exists():
            return load(parse_group_file(path.read_text(encoding="utf-8")), max_order)
    m = _CALL.match(selector)
    if m and m[1] in BUILTINS:
        args = []
        for a in _split_args(m[2] or ""):
            args.append(int(a) if a.lstrip("-").isdigit() else resolve(a, max_order))
        try:
            return builtin(m[1], *args, max_order=max_order)
        except TypeError as e:
            raise UnknownGroup(f"bad parameters for {m[1]}: {e}") from None
    return from_label(selector, max_order)


def _perm_spans(text: str, base_col: int) -> list[tuple[str, int]]:
    """Split ``gens`` value on commas outside parentheses, keeping start columns."""
    spans, start, depth = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth <= 0:
            spans.append((text[start:i], base_col + start))
            start = i + 1
            depth = 0
    spans.append((text[start:], base_col + start))
    return spans


def parse_group_file(text: str) -> GroupSpec:
    label, degree = None, None
    gens: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise GroupFileError(f"expected key=value, got {line.strip()!r}", lineno, 1)
        key = key.strip()
        vcol = len(key) + 1 + (len(line) - len(line.lstrip()))
        if key == "name":
            label = value.strip()
        elif key == "degree":
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"degree must be an integer, got {value.strip()!r}",
                                     lineno, vcol + 1) from None
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno, vcol + 1)
        elif key == "gens":
            for chunk, col in _perm_spans(value, vcol):
                gens.append((chunk, lineno, col))
        else:
            raise GroupFileError(f"unknown key {key!r}", lineno, 1)
    if not gens:
        raise GroupFileError("missing gens= line", len(text.splitlines()) or 1)
    bound = degree if degree is not None else 10**6
    top = 1
    strings = []
    for chunk, lineno, col in gens:
        lead = len(chunk) - len(chunk.lstrip())
        try:
            cycles = parse_cycles(chunk, bound)
        except CycleSyntaxError as e:
            raise GroupFileError(str(e).rsplit(" (column", 1)[0], lineno, col + e.pos + 1) from None
        if not chunk.strip():
            raise GroupFileError("empty generator", lineno, col + lead + 1)
        top = max([top] + [pt for c in cycles for pt in c])
        strings.append(chunk.strip())
    return GroupSpec(label or "G", degree if degree is not None else top, strings)


def render(spec: GroupSpec) -> str:
    return f"name={spec.label}\ndegree={spec.degree}\ngens={','.join(spec.generator_strings)}\n"


def load(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> GroupHandle:
    gens = [Permutation.parse(s, spec.degree) for s in spec.generator_strings]
    return GroupHandle(gens, degree=spec.degree, label=spec.label, max_order=max_order)


CORPUS_LABELS = (
    "C2", "C3", "C4", "C6", "C12",
    "D8", "D10", "D12", "D16",
    "S3", "S4", "S5", "S6",
    "A4", "A5", "A6",
    "V4", "Q8", "E2^2", "E2^3", "E3^2",
    "Frob5:2", "Frob5:4", "Frob7:3", "Frob7:6", "Frob11:5", "Frob13:3", "Frob13:4",
    "S3xC2", "D8xS3", "A4xC2", "C2wrC2",
)

CLOSED_FORM_ORDERS = {
    "C2": 2, "C3": 3, "C4": 4, "C6": 6, "C12": 12,
    "D8": 8, "D10": 10, "D12": 12, "D16": 16,
    "S3": 6, "S4": 24, "S5": 120, "S6": 720,
    "A4": 12, "A5": 60, "A6": 360,
    "V4": 4, "Q8": 8, "E2^2": 4, "E2^3": 8, "E3^2": 9,
    "Frob5:2": 10, "Frob5:4": 20, "Frob7:3": 21, "Frob7:6": 42, "Frob11:5": 55,
    "Frob13:3": 39, "Frob13:4": 52,
    "S3xC2": 12, "D8xS3": 48, "A4xC2": 24, "C2wrC2": 8,
}


def default_corpus(max_order: int = DEFAULT_MAX_ORDER) -> list[GroupHandle]:
    return [from_label(label, max_order) for label in CORPUS_LABELS]
