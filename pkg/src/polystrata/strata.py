"""Cellular chain complexes for closures of root-multiplicity strata.

A cell is a composition of some weight m tagged with an ambient degree n of
the same parity; it has dimension t + (n - m) for t parts (t real-root
coordinates plus (n - m)/2 conjugate pairs).  The closure of the cells of a
fixed type is generated by two moves: merging adjacent parts, and inserting
a new part equal to 2 while weight + 2 <= n (a conjugate pair colliding on
the real axis).

The boundary operator combines the alternating merge signs with a sign for
each insertion that depends on the run of 2's the new part lands in: the
coefficient vanishes when the run has even length and equals (-1)^(j1-1)
for a run starting at part j1 of odd length.  The even/odd convention is the
one under which d(d(x)) = 0 holds; the other parity is kept behind a flag
for regression tests (see boundary()).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from . import compositions as comps
from .homology import ChainComplex, HomologyResult, chain_homology
from .posets import Poset


class StratumError(Exception):
    pass


@dataclass(frozen=True, order=True)
class StratumCell:
    """A composition together with its ambient polynomial degree."""

    parts: tuple
    ambient: int

    def __post_init__(self):
        object.__setattr__(self, "parts", comps.as_composition(self.parts))
        m = sum(self.parts)
        if m > self.ambient:
            raise StratumError("weight %d exceeds ambient degree %d" % (m, self.ambient))
        if (self.ambient - m) % 2:
            raise StratumError("ambient minus weight must be even")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def dimension(self):
        return len(self.parts) + (self.ambient - self.weight)

    def __str__(self):
        return "(%s)@%d" % (",".join(map(str, self.parts)), self.ambient)


def closure_cells(partition, n):
    """All cells in the closure of the type's cells in ambient degree n.

    Breadth-first closure under merging adjacent parts and inserting a part 2;
    each move drops the dimension by exactly one.
    """
    partition = comps.as_partition(partition)
    l = sum(partition)
    if l > n:
        raise StratumError("partition weight %d exceeds ambient degree %d" % (l, n))
    if (n - l) % 2:
        raise StratumError("ambient minus weight must be even")
    seeds = [StratumCell(c, n) for c in comps.compositions_of_type(partition)]
    if not partition:
        seeds = [StratumCell((), n)]
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        cell = frontier.pop()
        for nxt in _moves(cell):
            assert nxt.dimension == cell.dimension - 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def _moves(cell):
    parts, n = cell.parts, cell.ambient
    out = []
    for i in range(len(parts) - 1):
        merged = parts[:i] + (parts[i] + parts[i + 1],) + parts[i + 2 :]
        out.append(StratumCell(merged, n))
    if sum(parts) + 2 <= n:
        for slot in range(len(parts) + 1):
            out.append(StratumCell(parts[:slot] + (2,) + parts[slot:], n))
    return out


def _runs_of_twos(parts):
    """Maximal runs of 2's as (start, end) part indices, 1-based inclusive."""
    runs, start = [], None
    for k, a in enumerate(parts):
        if a == 2:
            if start is None:
                start = k
        elif start is not None:
            runs.append((start + 1, k))
            start = None
    if start is not None:
        runs.append((start + 1, len(parts)))
    return runs


def boundary(cell, literal_parity=False):
    """Formal integer boundary of a cell, as a {cell: coefficient} dict.

    With ``literal_parity`` the insertion coefficient vanishes for runs with
    j2 - j1 even instead of runs of even length; that variant fails
    d(d(x)) = 0 and exists only for regression diagnostics.
    """
    parts, n = cell.parts, cell.ambient
    out = {}
    for i in range(1, len(parts)):
        merged = parts[: i - 1] + (parts[i - 1] + parts[i],) + parts[i + 1 :]
        target = StratumCell(merged, n)
        out[target] = out.get(target, 0) + (-1) ** i
    if sum(parts) + 2 <= n:
        inserted = {
            parts[:slot] + (2,) + parts[slot:] for slot in range(len(parts) + 1)
        }
        for b in sorted(inserted):
            matches = []
            for j1, j2 in _runs_of_twos(b):
                # deleting one 2 of the run must recover the original parts
                recovered = b[: j1 - 1] + (2,) * (j2 - j1) + b[j2:]
                if recovered == parts:
                    matches.append((j1, j2))
            if len(matches) != 1:
                raise StratumError(
                    "insertion target %r recovered from %d runs of %r"
                    % (b, len(matches), parts)
                )
            j1, j2 = matches[0]
            if literal_parity:
                vanishes = (j2 - j1) % 2 == 0
            else:
                vanishes = (j2 - j1 + 1) % 2 == 0
            if not vanishes:
                target = StratumCell(b, n)
                out[target] = out.get(target, 0) + (-1) ** (j1 - 1)
    return {c: v for c, v in out.items() if v}


def boundary_of_chain(chain, literal_parity=False):
    """Boundary of a formal sum {cell: coefficient}."""
    out = {}
    for cell, coeff in chain.items():
        for target, v in boundary(cell, literal_parity).items():
            out[target] = out.get(target, 0) + coeff * v
    return {c: v for c, v in out.items() if v}


def pol_chain_complex(partition, n):
    """Chain complex on the closure cells, graded by cell dimension."""
    cells = sorted(closure_cells(partition, n), key=lambda c: (c.dimension, c.parts))
    by_dim = {}
    for cell in cells:
        by_dim.setdefault(cell.dimension, []).append(cell)
    index = {
        d: {cell: i for i, cell in enumerate(cs)} for d, cs in by_dim.items()
    }
    generators = {d: tuple(cs) for d, cs in by_dim.items()}
    boundaries = {}
    for d, cs in by_dim.items():
        lower = index.get(d - 1, {})
        cols = {}
        for c, cell in enumerate(cs):
            col = {}
            for target, v in boundary(cell).items():
                assert target.dimension == d - 1
                col[lower[target]] = v
            if col:
                cols[c] = col
        if cols:
            boundaries[d] = cols
    return ChainComplex(generators, boundaries)


def pol_homology(partition, n):
    """Reduced homology of the one-point compactified closure, by cell degree."""
    return chain_homology(pol_chain_complex(partition, n))


def closure_poset(partition, n):
    """The closure cells ordered by boundary containment (for export)."""
    cells = sorted(closure_cells(partition, n), key=lambda c: (-c.dimension, c.parts))
    cell_set = set(cells)
    covers = set()
    index = {c: i for i, c in enumerate(cells)}
    for cell in cells:
        for nxt in _moves(cell):
            if nxt in cell_set:
                covers.add((index[nxt], index[cell]))
    return Poset(cells, covers)


def _total_cell_count(n):
    total = 0
    for m in range(n % 2, n + 1, 2):
        total += 1 if m == 0 else 2 ** (m - 1)
    return total


def complement_cohomology(partition, n):
    """Reduced cohomology table of the complement of the closed stratum.

    Duality inside the n-sphere: degree q of the complement reads off degree
    n - q - 1 of the compactified closure, with torsion shifted one degree
    down by universal coefficients.  Rejects closures filling the whole
    coefficient space, where the complement is empty.
    """
    cells = closure_cells(partition, n)
    if len(cells) == _total_cell_count(n):
        raise StratumError(
            "closure of %r fills the whole degree-%d space" % (tuple(partition), n)
        )
    h = pol_homology(partition, n)
    groups = {}
    for q in range(0, n):
        betti = h.betti(n - q - 1)
        torsion = h.torsion(n - q - 2)
        if betti or torsion:
            groups[q] = (betti, torsion)
    return HomologyResult.of(groups)


@dataclass(frozen=True)
class StabilizationReport:
    partition: tuple
    ambients: tuple
    tables: tuple  # HomologyResult per ambient
    first_unstable: tuple  # per consecutive pair: lowest differing degree or None
    union_poset: Poset

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "degree", "betti", "torsion"])
        for n, table in zip(self.ambients, self.tables):
            for q, b, t in table.groups:
                writer.writerow([n, q, b, ";".join(map(str, t))])
        return buf.getvalue()


def stabilization_report(partition, n_min, n_max):
    """Complement tables for ambient degrees n_min, n_min+2, ..., side by side."""
    partition = comps.as_partition(partition)
    l = sum(partition)
    if n_min < l or (n_min - l) % 2:
        raise StratumError("n_min must be weight + 2k")
    ambients = tuple(range(n_min, n_max + 1, 2))
    if not ambients:
        raise StratumError("empty ambient range")
    tables = tuple(complement_cohomology(partition, n) for n in ambients)
    unstable = []
    for t1, t2 in zip(tables, tables[1:]):
        degrees = sorted(
            {q for q, _, _ in t1.groups} | {q for q, _, _ in t2.groups}
        )
        diff = None
        for q in degrees:
            if t1.betti(q) != t2.betti(q) or t1.torsion(q) != t2.torsion(q):
                diff = q
                break
        unstable.append(diff)
    return StabilizationReport(
        partition,
        ambients,
        tables,
        tuple(unstable),
        closure_poset(partition, ambients[-1]),
    )
