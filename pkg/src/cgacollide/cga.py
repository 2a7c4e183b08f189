"""Dense multivector arithmetic for the 5-dimensional conformal algebra.

A multivector is a flat array of 32 coefficients, one per basis blade,
indexed by bitmask over the ordered basis (e1, e2, e3, e0, einf): bit k
holds basis vector k+1, so e1 -> mask 1, e2 -> mask 2, e3 -> mask 4,
e0 -> mask 8, einf -> mask 16.

e0 (origin) and einf (infinity) are the null vectors: both square to zero
and contract to -1 against each other.  They relate to an auxiliary
orthogonal pair e+, e- with squares +1 and -1 by

    e0 = 0.5 * (e- - e+)        einf = e- + e+

and the product tables are built exactly through that diagonal frame
(signature +,+,+,+,-), then re-expressed over (e1, e2, e3, e0, einf).
Working directly in the null frame keeps conformal-point coefficients at
coordinate scale (a point stores 1 on e0 and 0.5*|p|^2 on einf), which is
what lets the inner-product distance identity hold to ~1e-9 relative even
for coordinates of 1e4 mm; storing points over e+/e- instead would cancel
~1e16-scale products and lose eight digits.

The mixed-grade inner product is the left contraction; on grade-1 inputs it
reduces to the metric dot product, which is the only behaviour the rest of
the package relies on.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

DIMENSION = 5
BLADE_COUNT = 1 << DIMENSION  # 32

# Diagonal metric of the auxiliary orthogonal frame (e1, e2, e3, e+, e-).
SIGNATURE = (1.0, 1.0, 1.0, 1.0, -1.0)

# Vector change of basis between the frames, by vector index 0..4.
# Null frame order: (e1, e2, e3, e0, einf); diagonal order: (e1, e2, e3, e+, e-).
_NULL_TO_DIAG = {0: {0: 1.0}, 1: {1: 1.0}, 2: {2: 1.0},
                 3: {3: -0.5, 4: 0.5}, 4: {3: 1.0, 4: 1.0}}
_DIAG_TO_NULL = {0: {0: 1.0}, 1: {1: 1.0}, 2: {2: 1.0},
                 3: {3: -1.0, 4: 0.5}, 4: {3: 1.0, 4: 0.5}}


def _reorder_sign(a: int, b: int) -> int:
    """Sign from counting the transpositions that merge two blade bitmasks."""
    a >>= 1
    total = 0
    while a:
        total += (a & b).bit_count()
        a >>= 1
    return -1 if total & 1 else 1


def _diag_tables(signature):
    """Blade-level products in the diagonal frame, as (i, j) -> (k, weight)."""
    gp, op, ip = {}, {}, {}
    for i in range(BLADE_COUNT):
        for j in range(BLADE_COUNT):
            weight = float(_reorder_sign(i, j))
            shared = i & j
            for bit in range(DIMENSION):
                if shared & (1 << bit):
                    weight *= signature[bit]
            k = i ^ j
            gp[(i, j)] = (k, weight)
            if shared == 0:  # disjoint blades: the grade-raising part
                op[(i, j)] = (k, weight)
            if i & ~j == 0:  # left blade inside right one: left contraction
                ip[(i, j)] = (k, weight)
    return {"geometric": gp, "outer": op, "inner": ip}


def _wedge_into(acc: np.ndarray, vector: dict) -> np.ndarray:
    """Metric-free wedge of a blade-coefficient vector with a frame vector."""
    out = np.zeros(BLADE_COUNT)
    for mask in np.nonzero(acc)[0]:
        for bit, coeff in vector.items():
            vmask = 1 << bit
            if mask & vmask:
                continue
            out[mask | vmask] += acc[mask] * coeff * _reorder_sign(int(mask), vmask)
    return out


def _blade_lift(vector_map) -> np.ndarray:
    """Extend a vector change of basis to all 32 blades (column per blade)."""
    lift = np.zeros((BLADE_COUNT, BLADE_COUNT))
    for src in range(BLADE_COUNT):
        acc = np.zeros(BLADE_COUNT)
        acc[0] = 1.0
        for bit in range(DIMENSION):
            if src & (1 << bit):
                acc = _wedge_into(acc, vector_map[bit])
        lift[:, src] = acc
    return lift


def _build_tables(signature=SIGNATURE):
    """Precompute sparse product tables over the null-frame blades.

    Returns a dict with keys "geometric", "outer", "inner"; each value is a
    (left_idx, right_idx, out_idx, weight) quadruple of aligned arrays,
    ordered by (left_idx, right_idx).  All construction arithmetic is on
    dyadic rationals, so the tables are exact.
    """
    diag = _diag_tables(signature)
    to_diag = _blade_lift(_NULL_TO_DIAG)    # null blade -> diag coefficients
    to_null = _blade_lift(_DIAG_TO_NULL)    # diag blade -> null coefficients

    tables = {}
    for kind, blade_product in diag.items():
        ii, jj, kk, ww = [], [], [], []
        for i in range(BLADE_COUNT):
            a = to_diag[:, i]
            for j in range(BLADE_COUNT):
                b = to_diag[:, j]
                diag_out = np.zeros(BLADE_COUNT)
                for ia in np.nonzero(a)[0]:
                    for jb in np.nonzero(b)[0]:
                        hit = blade_product.get((int(ia), int(jb)))
                        if hit is None:
                            continue
                        k, w = hit
                        diag_out[k] += a[ia] * b[jb] * w
                null_out = to_null @ diag_out
                for k in np.nonzero(null_out)[0]:
                    ii.append(i), jj.append(j), kk.append(int(k)), ww.append(null_out[k])
        tables[kind] = (
            np.asarray(ii, dtype=np.intp),
            np.asarray(jj, dtype=np.intp),
            np.asarray(kk, dtype=np.intp),
            np.asarray(ww, dtype=np.float64),
        )
    return tables


_TABLES = _build_tables()

GRADE = np.array([mask.bit_count() for mask in range(BLADE_COUNT)])


def _product(a: np.ndarray, b: np.ndarray, table) -> np.ndarray:
    left, right, out, weight = table
    return np.bincount(out, weights=a[left] * b[right] * weight, minlength=BLADE_COUNT)


class Multivector:
    """Immutable element of the 5D conformal algebra (32 blade coefficients).

    Operators: ``*`` geometric product, ``^`` outer product, ``|`` inner
    product (left contraction), ``+``/``-`` linear combination, and scalar
    multiplication from either side.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.shape != (BLADE_COUNT,):
            raise ValueError(f"expected {BLADE_COUNT} blade coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("multivector coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def _raw(cls, arr: np.ndarray) -> "Multivector":
        mv = object.__new__(cls)
        arr.flags.writeable = False
        object.__setattr__(mv, "coeffs", arr)
        return mv

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # --- linear structure ------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(self.coeffs + other.coeffs)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(self.coeffs - other.coeffs)
        return NotImplemented

    def __neg__(self):
        return Multivector._raw(-self.coeffs)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector._raw(float(other) * self.coeffs)
        return NotImplemented

    # --- products ----------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(_product(self.coeffs, other.coeffs, _TABLES["geometric"]))
        if isinstance(other, (int, float)):
            return Multivector._raw(self.coeffs * float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(_product(self.coeffs, other.coeffs, _TABLES["outer"]))
        return NotImplemented

    def __or__(self, other):
        if isinstance(other, Multivector):
            return Multivector._raw(_product(self.coeffs, other.coeffs, _TABLES["inner"]))
        return NotImplemented

    # --- structure -----------------------------------------------------------
    def grade(self, k: int) -> "Multivector":
        """Project onto the grade-k part."""
        out = np.where(GRADE == k, self.coeffs, 0.0)
        return Multivector._raw(out)

    @property
    def scalar(self) -> float:
        return float(self.coeffs[0])

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.norm_inf() <= tol

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return bool(np.array_equal(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        terms = []
        names = _blade_names()
        for mask in range(BLADE_COUNT):
            c = self.coeffs[mask]
            if c != 0.0:
                terms.append(f"{c:g}*{names[mask]}" if mask else f"{c:g}")
        return "Multivector(" + (" + ".join(terms) if terms else "0") + ")"


def _blade_names():
    vec = ("e1", "e2", "e3", "e0", "einf")
    out = []
    for mask in range(BLADE_COUNT):
        parts = [vec[b] for b in range(DIMENSION) if mask & (1 << b)]
        out.append("^".join(parts) if parts else "1")
    return out


def zero() -> Multivector:
    return Multivector._raw(np.zeros(BLADE_COUNT))


def scalar(value: float) -> Multivector:
    out = np.zeros(BLADE_COUNT)
    out[0] = float(value)
    return Multivector._raw(out)


def mbasis(indices: Iterable[int] = ()) -> Multivector:
    """Basis blade for a subset of {1..5}; the empty set gives the scalar 1.

    mbasis({1}) is e1, mbasis({4}) is e0, mbasis({5}) is einf,
    mbasis({1, 2}) is e1^e2, and so on.
    """
    mask = 0
    for idx in indices:
        if not 1 <= idx <= DIMENSION:
            raise ValueError(f"basis index {idx} outside 1..{DIMENSION}")
        mask |= 1 << (idx - 1)
    out = np.zeros(BLADE_COUNT)
    out[mask] = 1.0
    return Multivector._raw(out)


def null_zero() -> Multivector:
    """Origin null vector e0."""
    return mbasis({4})


def null_inf() -> Multivector:
    """Infinity null vector einf."""
    return mbasis({5})


def e_plus() -> Multivector:
    """Auxiliary vector e+ = 0.5*einf - e0; squares to +1."""
    out = np.zeros(BLADE_COUNT)
    out[0b01000] = -1.0
    out[0b10000] = 0.5
    return Multivector._raw(out)


def e_minus() -> Multivector:
    """Auxiliary vector e- = e0 + 0.5*einf; squares to -1."""
    out = np.zeros(BLADE_COUNT)
    out[0b01000] = 1.0
    out[0b10000] = 0.5
    return Multivector._raw(out)


def outer(a: Multivector, b: Multivector) -> Multivector:
    return a ^ b


def inner(a: Multivector, b: Multivector) -> Multivector:
    return a | b


def geometric(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def scalar_part(a: Multivector) -> float:
    return a.scalar
