"""Hypothesis strategies for permutations and small permutation groups."""
from hypothesis import strategies as st

from engelkit import Permutation, from_label

SMALL_LABELS = ["C4", "C6", "D8", "D10", "D12", "S3", "S4", "A4", "V4", "Q8", "E3^2",
                "Frob5:4", "Frob7:3", "S3xC2", "A4xC2", "C2wrC2"]

_cache = {}


def group(label):
    if label not in _cache:
        _cache[label] = from_label(label)
    return _cache[label]


def perms(degree):
    return st.permutations(list(range(1, degree + 1))).map(Permutation)


@st.composite
def same_degree(draw, k=2, max_degree=7):
    d = draw(st.integers(1, max_degree))
    return tuple(draw(perms(d)) for _ in range(k))


small_groups = st.sampled_from(SMALL_LABELS).map(group)


@st.composite
def group_and_elements(draw, k=1):
    G = draw(small_groups)
    idx = [draw(st.integers(0, G.order - 1)) for _ in range(k)]
    return G, idx


def tup(p):
    return tuple(i - 1 for i in p.images)


def as_set(H):
    return frozenset(tup(x) for x in H.elements)


def oracle_group(G):
    return frozenset(tup(x) for x in G.elements), G.degree
