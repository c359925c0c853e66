"""Compositions, number-partitions, set-partitions and the merged-set encoding.

A composition of n is a tuple of positive parts; its merged set is the subset
of positions i in [n-1] where slots i and i+1 of [n] fall in the same part
(the complement of the partial-sum set).  Coarsening a composition by merging
adjacent parts corresponds exactly to enlarging the merged set, which turns
the refinement order into plain set inclusion.

The poset of common coarsenings of all compositions of a fixed type, with the
one-part composition excluded, and the simplicial complex generated by their
partial-sum faces both live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .homology import HomologyResult, SimplicialComplex, simplicial_homology
from .posets import Poset, are_isomorphic, closure_image, order_complex


def as_composition(parts):
    parts = tuple(int(a) for a in parts)
    if any(a < 1 for a in parts):
        raise ValueError("composition parts must be positive: %r" % (parts,))
    return parts


def as_partition(parts):
    """Normalize to an ascending tuple (the type of a composition)."""
    return tuple(sorted(as_composition(parts)))


def parse_parts(text):
    """Comma-separated part syntax, e.g. '1,1,2'."""
    try:
        return as_composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError("cannot parse %r as comma-separated parts" % text) from exc


def weight(parts):
    return sum(parts)


def multiplicities(partition):
    """Multiplicity e_i of each part value i, as a dict."""
    out = {}
    for a in partition:
        out[a] = out.get(a, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Merged-set encoding


def partial_sums(parts):
    """The proper partial sums P_1, ..., P_{t-1} as a frozenset."""
    acc, out = 0, []
    for a in parts[:-1]:
        acc += a
        out.append(acc)
    return frozenset(out)


def merged_set(parts):
    """Positions i of [n-1] merged by the composition (complement of partial sums)."""
    n = weight(parts)
    return frozenset(range(1, n)) - partial_sums(parts)


def composition_from_merged_set(n, positions):
    positions = frozenset(int(p) for p in positions)
    if any(p < 1 or p >= n for p in positions):
        raise ValueError("merged positions must lie in 1..%d" % (n - 1))
    cuts = sorted(set(range(1, n)) - positions)
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def composition_from_partial_sums(n, sums):
    cuts = sorted(set(int(s) for s in sums))
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError("partial sums out of range")
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def coarsenings(parts):
    """All compositions obtainable by merging adjacent parts (including parts)."""
    n = weight(parts)
    base = merged_set(parts)
    free = sorted(set(range(1, n)) - base)
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            out.append(composition_from_merged_set(n, base | set(extra)))
    return out


def compositions_of(n):
    """All 2^(n-1) compositions of n."""
    out = []
    positions = list(range(1, n))
    for k in range(n):
        for merged in combinations(positions, k):
            out.append(composition_from_merged_set(n, merged))
    return out


def compositions_of_type(partition):
    """Distinct orderings of the part multiset, lexicographically."""
    partition = as_partition(partition)
    counts = sorted(multiplicities(partition).items())
    out = []

    def rec(prefix, remaining):
        if not any(c for _, c in remaining):
            out.append(tuple(prefix))
            return
        for k, (value, c) in enumerate(remaining):
            if c:
                rec(
                    prefix + [value],
                    remaining[:k] + [(value, c - 1)] + remaining[k + 1 :],
                )

    rec([], counts)
    return out


# ---------------------------------------------------------------------------
# Set partitions


def as_set_partition(blocks, ground=None):
    blocks = frozenset(frozenset(b) for b in blocks)
    if any(not b for b in blocks):
        raise ValueError("empty block")
    elems = [x for b in blocks for x in b]
    if len(elems) != len(set(elems)):
        raise ValueError("blocks are not disjoint")
    if ground is not None and set(elems) != set(ground):
        raise ValueError("blocks do not cover the ground set")
    return blocks


def partition_join(pi, rho):
    """Join in the partition lattice: components of the union of block relations."""
    pi, rho = as_set_partition(pi), as_set_partition(rho)
    ground_pi = {x for b in pi for x in b}
    ground_rho = {x for b in rho for x in b}
    if ground_pi != ground_rho:
        raise ValueError("ground-set mismatch")
    parent = {x: x for x in ground_pi}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for block in list(pi) + list(rho):
        first = min(block)
        for x in block:
            union(first, x)
    out = {}
    for x in ground_pi:
        out.setdefault(find(x), set()).add(x)
    return as_set_partition(out.values())


def is_interval_partition(blocks):
    """True iff blocks can be ordered so each is an interval below the next."""
    blocks = as_set_partition(blocks)
    return all(max(b) - min(b) + 1 == len(b) for b in blocks)


def set_partition_of_composition(parts):
    """The interval set-partition |1..a1|a1+1..a1+a2|... of [n]."""
    blocks, start = [], 1
    for a in parts:
        blocks.append(frozenset(range(start, start + a)))
        start += a
    return as_set_partition(blocks)


def composition_of_interval_partition(blocks):
    blocks = sorted(as_set_partition(blocks), key=min)
    if not is_interval_partition(blocks):
        raise ValueError("not an interval partition")
    return tuple(len(b) for b in blocks)


# ---------------------------------------------------------------------------
# The coarsening poset of a type


def type_merged_sets(partition):
    partition = as_partition(partition)
    return {merged_set(c) for c in compositions_of_type(partition)}


def _union_closure(generators):
    closure = set(generators)
    frontier = set(generators)
    while frontier:
        new = set()
        for a in frontier:
            for b in closure:
                u = a | b
                if u not in closure and u not in new:
                    new.add(u)
        closure |= new
        frontier = new
    return closure


def _poset_of_merged_sets(n, sets):
    sets = sorted(sets, key=lambda s: (len(s), sorted(s)))
    elements = [composition_from_merged_set(n, s) for s in sets]
    by_key = dict(zip(elements, sets))
    return Poset.from_le(elements, lambda x, y: by_key[x] <= by_key[y])


def c_lambda_poset(partition):
    """Poset of unions of type merged sets, ordered by inclusion.

    The fully merged position set (the one-part composition) is excluded;
    element keys are the corresponding compositions.
    """
    partition = as_partition(partition)
    n = weight(partition)
    full = frozenset(range(1, n))
    return _poset_of_merged_sets(
        n, _union_closure(type_merged_sets(partition)) - {full}
    )


def coarsening_poset(partition):
    """All coarsenings of the type compositions except the one-part composition.

    This up-closure contains the union-generated poset and is homotopy
    equivalent to it (sending a composition to the union of the type merged
    sets below it is a homotopy equivalence), but the two differ as posets
    whenever a part repeats: a coarsening need not be a union of type merged
    sets.  The quotient of the permutahedron face poset by the Young subgroup
    matches this poset, not the union-generated one.
    """
    partition = as_partition(partition)
    n = weight(partition)
    full = frozenset(range(1, n))
    sets = set()
    for c in compositions_of_type(partition):
        for b in coarsenings(c):
            sets.add(merged_set(b))
    sets.discard(full)
    return _poset_of_merged_sets(n, sets)


# ---------------------------------------------------------------------------
# The partial-sum face complex of a type


@dataclass(frozen=True)
class LabeledComplex:
    """A simplicial complex whose faces carry composition labels."""

    complex: SimplicialComplex
    labels: dict  # face tuple (of vertex indices) -> composition

    def label_of(self, face):
        return self.labels[tuple(sorted(face))]


def delta_lambda_complex(partition):
    """Downward closure of the partial-sum faces of all type compositions.

    Vertex i (0-based index) stands for position i+1 of [n-1].  The face of a
    composition with t >= 2 parts is its partial-sum set; the all-ones
    composition contributes the full top face, so the complex is a subcomplex
    of the full simplex on [n-1].
    """
    partition = as_partition(partition)
    n = weight(partition)
    if n < 2:
        raise ValueError("need weight >= 2")
    vertices = tuple(range(1, n))
    tops = [
        tuple(sorted(p - 1 for p in partial_sums(c)))
        for c in compositions_of_type(partition)
        if len(c) >= 2
    ]
    complex_ = SimplicialComplex.generated(vertices, tops)
    labels = {
        face: composition_from_partial_sums(n, {i + 1 for i in face})
        for face in complex_.faces
    }
    return LabeledComplex(complex_, labels)


def facet_labels_join(delta, face):
    """Join of the interval partitions labelling the facets containing a face."""
    face = tuple(sorted(face))
    facets = [f for f in delta.complex.facets() if set(face) <= set(f)]
    join = None
    for f in facets:
        blocks = set_partition_of_composition(delta.labels[f])
        join = blocks if join is None else partition_join(join, blocks)
    return join


# ---------------------------------------------------------------------------
# Collapsing the face poset onto the coarsening poset


@dataclass(frozen=True)
class CollapseReport:
    partition: tuple
    isomorphism: dict | None
    face_poset_homology: HomologyResult
    c_lambda_homology: HomologyResult

    @property
    def homology_match(self):
        return self.face_poset_homology == self.c_lambda_homology

    @property
    def passed(self):
        return self.isomorphism is not None and self.homology_match


def closure_collapse_report(partition):
    """Collapse the face poset of the partial-sum complex onto its facet skeleton.

    The operator sends a face to the intersection of all facets containing it;
    this is a closure operator on the inclusion-ordered face poset, and its
    image must be the coarsening poset with the order reversed, with equal
    reduced homology of the order complexes on both sides.
    """
    partition = as_partition(partition)
    delta = delta_lambda_complex(partition)
    faces = sorted(delta.complex.faces, key=lambda f: (len(f), f))
    if faces:
        face_poset = Poset.from_le(faces, lambda x, y: set(x) <= set(y))
    else:
        face_poset = Poset((), set())
    facets = delta.complex.facets()
    facet_sets = [set(f) for f in facets]

    def closure(face):
        fs = set(face)
        acc = None
        for g in facet_sets:
            if fs <= g:
                acc = set(g) if acc is None else acc & g
        return tuple(sorted(acc))

    image = closure_image(face_poset, closure) if faces else face_poset
    c_poset = c_lambda_poset(partition)
    iso = are_isomorphic(image, c_poset.dual())
    return CollapseReport(
        partition,
        iso,
        simplicial_homology(order_complex(face_poset)),
        simplicial_homology(order_complex(c_poset)),
    )
