"""Length-two indecomposables: construction, canonical sets, enumeration,
variety of bristle lines, maximal bristled submodule, saturation.

A bristle is determined by a nonzero coefficient tuple up to scaling; points
are normalized so the first nonzero coordinate is 1, making equality a plain
tuple comparison.  Enumeration over a finite field is exhaustive and in
lexicographic order of the normalized coordinates, so downstream reports are
reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .linalg import FieldSpec, Matrix, Subspace, kernel_basis, subspace_intersection
from .modules import (
    KroneckerModule,
    SubmodulePair,
    ext1_dim,
    quotient,
    trace_submodule,
)


@dataclass(frozen=True)
class BristlePoint:
    """Point of the projective space indexing a bristle; first nonzero is 1."""

    n: int
    field: FieldSpec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        if all(c == 0 for c in self.coords):
            raise ValueError("bristle coordinates must not all vanish")
        lead = next(c for c in self.coords if c != 0)
        if lead != self.field.one():
            raise ValueError("coordinates not normalized; use bristle_point()")

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def bristle_point(n: int, field: FieldSpec, coords: Sequence) -> BristlePoint:
    """Normalize raw coordinates to the canonical representative."""
    raw = [field.normalize(c) for c in coords]
    if len(raw) != n:
        raise ValueError(f"expected {n} coordinates, got {len(raw)}")
    lead = next((c for c in raw if c != 0), None)
    if lead is None:
        raise ValueError("bristle coordinates must not all vanish")
    inv = field.inv(lead)
    return BristlePoint(n, field, tuple(field.mul(inv, c) for c in raw))


def unit_point(n: int, field: FieldSpec, r: int) -> BristlePoint:
    """The point with a single 1 in slot r (1-indexed)."""
    return bristle_point(n, field, [field.one() if i == r - 1 else field.zero()
                                    for i in range(n)])


def pair_point(n: int, field: FieldSpec, r: int, s: int) -> BristlePoint:
    """The point with 1 in slots r and s (1-indexed, r != s)."""
    if r == s:
        raise ValueError("pair point needs two distinct slots")
    return bristle_point(n, field, [field.one() if i + 1 in (r, s) else field.zero()
                                    for i in range(n)])


def bristle(point: BristlePoint) -> KroneckerModule:
    """The module (k, k) whose i-th map is multiplication by the i-th coordinate."""
    f = point.field
    alphas = tuple(Matrix.from_rows(f, [[c]], cols=1) for c in point.coords)
    return KroneckerModule(point.n, f, 1, 1, alphas)


def canonical_set(name: str, n: int, field: FieldSpec) -> list:
    """The distinguished bristle sets used throughout.

    "B0": the two unit points at n-1 and n plus the consecutive pair points
    (r, r+1) for r = 1..n (indices mod n), n+2 points in all.  "B0prime"
    drops the pair (n-1, n).  "B1prime" is the unit point at 1 plus all the
    consecutive pairs.
    """
    if n < 3:
        raise ValueError("canonical bristle sets are defined for n >= 3")
    pairs = [pair_point(n, field, r, r % n + 1) for r in range(1, n + 1)]
    if name == "B0":
        return [unit_point(n, field, n - 1), unit_point(n, field, n)] + pairs
    if name == "B0prime":
        return [unit_point(n, field, n - 1), unit_point(n, field, n)] + \
            [p for p in pairs if p != pair_point(n, field, n - 1, n)]
    if name == "B1prime":
        return [unit_point(n, field, 1)] + pairs
    raise ValueError(f"unknown canonical set {name!r}")


def enumerate_bristles(n: int, field: FieldSpec) -> list:
    """All (q^n - 1)/(q - 1) points, lexicographic by normalized coordinates."""
    if not field.is_finite:
        raise ValueError("enumeration requires a finite field")
    pts = []
    for lead in range(n):
        prefix = [field.zero()] * lead + [field.one()]
        for tail in itertools.product(list(field.elements()), repeat=n - 1 - lead):
            pts.append(BristlePoint(n, field, tuple(prefix) + tail))
    pts.sort(key=lambda p: p.coords)
    return pts


def bristle_count(n: int, q: int) -> int:
    return (q ** n - 1) // (q - 1)


# -- bristle vectors and the variety of bristle lines ------------------------

def is_bristle_vector(M: KroneckerModule, u: Sequence) -> bool:
    """True iff the images of u under the structure maps span one dimension."""
    if all(x == 0 for x in u):
        raise ValueError("bristle vectors must be nonzero")
    images = [a.apply(u) for a in M.alphas]
    span = Subspace.from_spanning(M.field, M.dim2, images)
    return span.dim == 1


def bristle_type_of(M: KroneckerModule, u: Sequence) -> BristlePoint:
    """The point indexing the bristle generated by u (requires is_bristle_vector)."""
    f = M.field
    images = [a.apply(u) for a in M.alphas]
    gen = next((w for w in images if any(x != 0 for x in w)), None)
    if gen is None:
        raise ValueError("u generates no bristle: all images vanish")
    line = Subspace.from_spanning(f, M.dim2, [gen])
    coeffs = []
    for w in images:
        coords = line.coordinates(w)
        if coords is None:
            raise ValueError("u is not a bristle vector: images span more than a line")
        coeffs.append(coords[0])
    return bristle_point(M.n, f, coeffs)


def _normalized_vectors(field: FieldSpec, dim: int):
    """One representative per line of k^dim, lexicographic, first nonzero 1."""
    vecs = []
    for lead in range(dim):
        prefix = [field.zero()] * lead + [field.one()]
        for tail in itertools.product(list(field.elements()), repeat=dim - 1 - lead):
            vecs.append(tuple(prefix) + tail)
    vecs.sort()
    return vecs


def s1_generated_submodule(M: KroneckerModule) -> SubmodulePair:
    """Largest submodule generated by the simple at vertex 1: (cap of kernels, 0)."""
    soc1 = Subspace.full(M.field, M.dim1)
    for a in M.alphas:
        soc1 = subspace_intersection(soc1, kernel_basis(a))
    return SubmodulePair(M, soc1, Subspace.zero(M.field, M.dim2))


def bristle_variety(M: KroneckerModule) -> list:
    """All bristle lines of M (after splitting off the vertex-1 socle).

    Returns (normalized generator in the reduced module, bristle type) pairs
    in lexicographic order of the generator.  Finite fields only; over the
    rationals use is_bristle_vector as a membership test instead.
    """
    if not M.field.is_finite:
        raise ValueError("variety enumeration requires a finite field; "
                         "use is_bristle_vector for membership over the rationals")
    reduced, _ = quotient(M, s1_generated_submodule(M))
    out = []
    for u in _normalized_vectors(M.field, reduced.dim1):
        if is_bristle_vector(reduced, u):
            out.append((u, bristle_type_of(reduced, u)))
    return out


# -- bristled modules and saturation ------------------------------------------

def maximal_bristled_submodule(M: KroneckerModule) -> SubmodulePair:
    """Trace of all bristles plus the full vertex-2 space."""
    if not M.field.is_finite:
        raise ValueError("maximal bristled submodule requires a finite field")
    gens = [bristle(p) for p in enumerate_bristles(M.n, M.field)]
    tr = trace_submodule(gens, M)
    return SubmodulePair(M, tr.U1, Subspace.full(M.field, M.dim2))


def is_bristled(M: KroneckerModule) -> bool:
    """True iff M is a factor of a direct sum of length-two modules."""
    return maximal_bristled_submodule(M).is_full()


def is_saturated(M: KroneckerModule) -> bool:
    """True iff Ext^1(B, M) = 0 for every bristle B over the (finite) field."""
    if not M.field.is_finite:
        raise ValueError("saturation requires finite-field enumeration; "
                         "test ext1_dim against an explicit list instead")
    return all(ext1_dim(bristle(p), M) == 0 for p in enumerate_bristles(M.n, M.field))
