"""Named module families: the two countable series outside the regular part,
the explicit two-arrow family with its geometric-series generators, and the
pair of (3,2)-dimensional fixtures that have equal dimension vectors but
different bristled behaviour.
"""

from __future__ import annotations

from typing import Union

from .bristles import bristle_point
from .linalg import FieldSpec, Matrix, Scalar
from .modules import (
    KroneckerModule,
    ar_translate,
    dual,
    injective_module,
    simple_module,
)


class _Infinity:
    """Distinguished tag for the slope-infinity bristle index (not a scalar)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()


def preinjective(n: int, t: int, field: FieldSpec) -> KroneckerModule:
    """The t-th indecomposable preinjective: the simple at vertex 1 for t = 0,
    the injective at vertex 2 for t = 1, and translates from there.
    """
    if t < 0:
        raise ValueError("index must be nonnegative")
    M = simple_module(n, field, 1) if t % 2 == 0 else injective_module(n, field, 2)
    for _ in range(t // 2):
        M = ar_translate(M, "tau")
    return M


def preprojective(n: int, t: int, field: FieldSpec) -> KroneckerModule:
    """The t-th indecomposable preprojective, as the dual of the t-th preinjective."""
    return dual(preinjective(n, t, field))


def n2_preinjective(t: int, field: FieldSpec) -> KroneckerModule:
    """Explicit two-arrow preinjective of dimension (t+1, t).

    Basis e_0..e_t upstairs, e'_1..e'_t downstairs; the first map shifts
    e_i -> e'_{i+1} (killing e_t), the second truncates e_i -> e'_i
    (killing e_0).
    """
    if t < 0:
        raise ValueError("index must be nonnegative")
    one, zero = field.one(), field.zero()
    a1 = Matrix.from_rows(field, [[one if c == r else zero for c in range(t + 1)]
                                  for r in range(t)], cols=t + 1)
    a2 = Matrix.from_rows(field, [[one if c == r + 1 else zero for c in range(t + 1)]
                                  for r in range(t)], cols=t + 1)
    return KroneckerModule(2, field, t + 1, t, (a1, a2))


def n2_bristle_generator(t: int, c: Union[Scalar, _Infinity], field: FieldSpec) -> tuple:
    """Vector of n2_preinjective(t) generating the bristle of slope c.

    For a scalar c this is the geometric series (1, c, c^2, ..., c^t); the
    INF tag selects the last basis vector e_t instead.
    """
    if c is INF:
        return tuple(field.one() if i == t else field.zero() for i in range(t + 1))
    c = field.normalize(c)
    out = []
    acc = field.one()
    for _ in range(t + 1):
        out.append(acc)
        acc = field.mul(acc, c)
    return tuple(out)


def n2_bristle_index_to_point(c: Union[Scalar, _Infinity], field: FieldSpec):
    """Slope index c (or INF) as a projective point (1:c) resp. (0:1)."""
    if c is INF:
        return bristle_point(2, field, [field.zero(), field.one()])
    return bristle_point(2, field, [field.one(), field.normalize(c)])


def dim32_bristled(field: FieldSpec) -> KroneckerModule:
    """Zig-zag fixture of dimension (3,2) that is bristled.

    Three generators u0, u1, u2 over v1, v2: the first map sends u0 to v1,
    the second sends u1 to v1 + v2, the third sends u2 to v2.
    """
    o, z = field.one(), field.zero()
    a1 = Matrix.from_rows(field, [[o, z, z], [z, z, z]], cols=3)
    a2 = Matrix.from_rows(field, [[z, o, z], [z, o, z]], cols=3)
    a3 = Matrix.from_rows(field, [[z, z, z], [z, z, o]], cols=3)
    return KroneckerModule(3, field, 3, 2, (a1, a2, a3))


def dim32_not_bristled(field: FieldSpec) -> KroneckerModule:
    """Companion fixture of the same dimension (3,2) that is not bristled.

    Generators w0, w1, w2 over x1, x2: the first map sends w0 to x1 and
    w2 to x2, the second sends w1 to x1, the third sends w2 to x1.
    """
    o, z = field.one(), field.zero()
    a1 = Matrix.from_rows(field, [[o, z, z], [z, z, o]], cols=3)
    a2 = Matrix.from_rows(field, [[z, o, z], [z, z, z]], cols=3)
    a3 = Matrix.from_rows(field, [[z, z, o], [z, z, z]], cols=3)
    return KroneckerModule(3, field, 3, 2, (a1, a2, a3))
