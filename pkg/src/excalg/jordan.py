"""Cubic Jordan algebras of Hermitian 3x3 matrices over a composition
algebra, including the degenerate diagonal case a = 0.

Elements are stored as coordinate vectors over the basis (three diagonal
units, then the three off-diagonal slots tensored with the algebra basis);
the lower triangle is conjugate-determined and never stored.  Matrix powers
always use the symmetrized product.  The dual space is identified with the
algebra through the trace pairing, which makes the derivative of the cubic
determinant an element again; derivative extraction is exact interpolation
at t in {-1, 0, 1, 2}, never symbolic differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .composition import CompAlgebra, canonical_octonions, named_algebra
from .linalg import (
    Matrix,
    Subspace,
    is_zero_vec,
    rank as mat_rank,
    solve,
    unit_vec,
    vec_add,
    vec_dot,
    vec_scale,
    zero_vec,
)
from .scalar import ONE, ZERO, Scalar, sc

_OFF_SLOTS = ((0, 1), (0, 2), (1, 2))


class JordanAlgebra:
    """H3 over a composition algebra (or the diagonal algebra at a = 0)."""

    def __init__(self, base: Optional[CompAlgebra], name: str = ""):
        self.base = base
        self.a = base.dim if base is not None else 0
        self.dim = 3 + 3 * self.a
        self.name = name or f"H3(a={self.a})"
        self._table: Dict[Tuple[int, int], List[Scalar]] = {}
        self._build_table()
        self.trace_vec = [ONE, ONE, ONE] + [ZERO] * (3 * self.a)
        self.trace_gram = Matrix(
            [
                [self._trace(self._table[(i, j)]) for j in range(self.dim)]
                for i in range(self.dim)
            ]
        )
        self.trace_gram_inv = self.trace_gram.inverse()
        self._basis_adjugates = None

    # -- basis bookkeeping ---------------------------------------------------

    def off_index(self, slot: int, t: int) -> int:
        return 3 + slot * self.a + t

    def _to_full(self, coords: Sequence[Scalar]):
        """3x3 matrix of algebra coordinate vectors (full Hermitian)."""
        a = self.a
        base = self.base
        unit = unit_vec(max(a, 1), 0)
        m = [[None] * 3 for _ in range(3)]
        for d in range(3):
            m[d][d] = vec_scale(coords[d], unit if a else [ONE])
        if a == 0:
            for (r, c) in _OFF_SLOTS:
                m[r][c] = [ZERO]
                m[c][r] = [ZERO]
            return m
        for s, (r, c) in enumerate(_OFF_SLOTS):
            v = [coords[self.off_index(s, t)] for t in range(a)]
            m[r][c] = v
            m[c][r] = base.conj_coords(v)
        return m

    def _mul_entry(self, x, y):
        if self.a == 0:
            return [x[0] * y[0]]
        return self.base.mul_coords(x, y)

    def _from_full(self, m) -> List[Scalar]:
        a = self.a
        coords = zero_vec(self.dim)
        for d in range(3):
            entry = m[d][d]
            coords[d] = entry[0]
            if any(not c.is_zero() for c in entry[1:]):
                raise AssertionError("diagonal entry is not scalar")
        for s, (r, c) in enumerate(_OFF_SLOTS):
            for t in range(a):
                coords[self.off_index(s, t)] = m[r][c][t]
        return coords

    def _build_table(self):
        dim = self.dim
        for i in range(dim):
            mi = self._to_full(unit_vec(dim, i))
            for j in range(i, dim):
                mj = self._to_full(unit_vec(dim, j))
                prod = self._symmetrized(mi, mj)
                coords = self._from_full(prod)
                self._table[(i, j)] = coords
                self._table[(j, i)] = coords

    def _symmetrized(self, x, y):
        out = [[None] * 3 for _ in range(3)]
        for r in range(3):
            for c in range(3):
                acc = None
                for k in range(3):
                    t1 = self._mul_entry(x[r][k], y[k][c])
                    t2 = self._mul_entry(y[r][k], x[k][c])
                    s = vec_add(t1, t2)
                    acc = s if acc is None else vec_add(acc, s)
                out[r][c] = [v / sc(2) for v in acc]
        return out

    def _trace(self, coords: Sequence[Scalar]) -> Scalar:
        return coords[0] + coords[1] + coords[2]

    # -- public table access ---------------------------------------------------

    def basis_product(self, i: int, j: int) -> List[Scalar]:
        return list(self._table[(i, j)])

    def product_coords(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        out = zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                cell = self._table[(i, j)]
                out = [o + c * t if not t.is_zero() else o for o, t in zip(out, cell)]
        return out

    def element(self, coords: Sequence) -> "JordanElement":
        return JordanElement(self, [sc(c) for c in coords])

    def from_parts(self, diag: Sequence, off: Optional[Sequence[Sequence]] = None):
        coords = [sc(c) for c in diag]
        if len(coords) != 3:
            raise ValueError("need three diagonal entries")
        if self.a == 0:
            if off and any(any(sc(c) for c in slot) for slot in off):
                raise ValueError("a = 0 has no off-diagonal part")
            return self.element(coords)
        out = coords + [ZERO] * (3 * self.a)
        if off is not None:
            for s, slot in enumerate(off):
                for t, c in enumerate(slot):
                    out[self.off_index(s, t)] = sc(c)
        return self.element(out)

    def identity(self) -> "JordanElement":
        return self.from_parts([1, 1, 1])

    def random_element(self, rng, height: int = 2) -> "JordanElement":
        from .scalar import rand_scalar

        return self.element(
            [rand_scalar(rng, height, gaussian=False) for _ in range(self.dim)]
        )

    def basis_adjugates(self) -> List[List[Scalar]]:
        if self._basis_adjugates is None:
            self._basis_adjugates = [
                list(adjugate(self.element(unit_vec(self.dim, i))).coords)
                for i in range(self.dim)
            ]
        return self._basis_adjugates

    def __repr__(self):
        return f"JordanAlgebra({self.name})"


@lru_cache(maxsize=None)
def jordan_algebra(a: int) -> JordanAlgebra:
    """The Hermitian 3x3 algebra over the composition algebra of dimension
    a, for a in {0, 1, 2, 4, 8}."""
    if a == 0:
        return JordanAlgebra(None)
    if a == 8:
        return JordanAlgebra(canonical_octonions())
    names = {1: "r", 2: "c", 4: "h"}
    if a not in names:
        raise ValueError("a must be one of 0, 1, 2, 4, 8")
    return JordanAlgebra(named_algebra(names[a]))


@dataclass(frozen=True)
class JordanElement:
    algebra: JordanAlgebra
    coords: tuple

    def __init__(self, algebra: JordanAlgebra, coords: Sequence):
        cs = tuple(sc(c) for c in coords)
        if len(cs) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", cs)

    # diagonal and off-diagonal accessors
    @property
    def diag(self) -> tuple:
        return self.coords[:3]

    def off_slot(self, s: int) -> tuple:
        a = self.algebra.a
        return self.coords[3 + s * a : 3 + (s + 1) * a]

    def __add__(self, other):
        return JordanElement(self.algebra, vec_add(list(self.coords), list(other.coords)))

    def __sub__(self, other):
        return self + other.scale(sc(-1))

    def scale(self, c):
        return JordanElement(self.algebra, vec_scale(sc(c), list(self.coords)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, JordanElement)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )

    def to_json(self) -> dict:
        a = self.algebra.a
        return {
            "a": a,
            "diag": [str(c) for c in self.diag],
            "off": [[str(c) for c in self.off_slot(s)] for s in range(3)]
            if a
            else [],
        }

    @staticmethod
    def from_json(data: dict) -> "JordanElement":
        alg = jordan_algebra(data["a"])
        off = data.get("off") or None
        return alg.from_parts(data["diag"], off)


# -- operations --------------------------------------------------------------------


def jordan_product(x: JordanElement, y: JordanElement) -> JordanElement:
    """(XY + YX) / 2, computed entrywise over the base algebra."""
    if x.algebra is not y.algebra:
        raise ValueError("elements of different algebras")
    return JordanElement(x.algebra, x.algebra.product_coords(x.coords, y.coords))


def trace(x: JordanElement) -> Scalar:
    return x.coords[0] + x.coords[1] + x.coords[2]


def trace_pairing(x: JordanElement, y: JordanElement) -> Scalar:
    """tr(x o y): the invariant pairing identifying the algebra with its
    dual."""
    alg = x.algebra
    return vec_dot(list(x.coords), alg.trace_gram.apply(list(y.coords)))


def det_cubic(x: JordanElement) -> Scalar:
    """The cubic determinant tr(M^3)/3 - tr(M) tr(M^2)/2 + tr(M)^3/6 with
    powers taken in the symmetrized product."""
    t1 = trace(x)
    m2 = jordan_product(x, x)
    t2 = trace(m2)
    t3 = trace_pairing(x, m2)
    return t3 / sc(3) - t1 * t2 / sc(2) + t1 * t1 * t1 / sc(6)


class _LineContext:
    """Shared pieces of the cubic restricted to lines through a fixed
    element: the square, its traces, and their pairings."""

    __slots__ = ("alg", "xc", "m2", "trm", "trm2", "t_xm2")

    def __init__(self, x: JordanElement):
        self.alg = x.algebra
        self.xc = list(x.coords)
        self.m2 = self.alg.product_coords(self.xc, self.xc)
        self.trm = _tr(self.alg, self.xc)
        self.trm2 = _tr(self.alg, self.m2)
        self.t_xm2 = _pair(self.alg, self.xc, self.m2)


def _det_along_line(ctx: _LineContext, e: int) -> List[Scalar]:
    """Values of t -> Det(x + t E_e) at the interpolation nodes -1, 0, 1, 2.
    """
    alg = ctx.alg
    q = alg.product_coords(ctx.xc, list(unit_vec(alg.dim, e)))
    r = alg.basis_product(e, e)
    trq, trr = _tr(alg, q), _tr(alg, r)
    tre = alg.trace_vec[e]
    # tr((x+tE)^2) = trm2 + 2t trq + t^2 trr
    # tr((x+tE)^3) = T(x+tE, (x+tE)^2)
    ebase = unit_vec(alg.dim, e)
    t_em2 = _pair(alg, ebase, ctx.m2)
    t_xq = _pair(alg, ctx.xc, q)
    t_xr = _pair(alg, ctx.xc, r)
    t_eq = _pair(alg, ebase, q)
    t_er = _pair(alg, ebase, r)
    c0 = ctx.t_xm2
    c1 = t_em2 + sc(2) * t_xq
    c2 = t_xr + sc(2) * t_eq
    c3 = t_er
    values = []
    for t in (sc(-1), ZERO, ONE, sc(2)):
        tr1 = ctx.trm + t * tre
        tr2 = ctx.trm2 + sc(2) * t * trq + t * t * trr
        tr3 = c0 + t * (c1 + t * (c2 + t * c3))
        values.append(tr3 / sc(3) - tr1 * tr2 / sc(2) + tr1 ** 3 / sc(6))
    return values


def _tr(alg: JordanAlgebra, coords) -> Scalar:
    return coords[0] + coords[1] + coords[2]


def _pair(alg: JordanAlgebra, x, y) -> Scalar:
    return vec_dot(list(x), alg.trace_gram.apply(list(y)))


_NODES = Matrix(
    [[ONE, sc(t), sc(t) ** 2, sc(t) ** 3] for t in (-1, 0, 1, 2)]
)


def adjugate(x: JordanElement) -> JordanElement:
    """The gradient of the cubic determinant at x, re-expressed in the
    algebra via the trace pairing.

    Each directional derivative is the linear coefficient of the cubic
    t -> Det(x + tE), recovered by solving the Vandermonde system on the
    nodes -1, 0, 1, 2.
    """
    alg = x.algebra
    ctx = _LineContext(x)
    grad = []
    for e in range(alg.dim):
        values = _det_along_line(ctx, e)
        coeffs = solve(_NODES, values)
        assert coeffs is not None
        grad.append(coeffs[1])
    return JordanElement(alg, alg.trace_gram_inv.apply(grad))


def adjugate_closed_form(x: JordanElement) -> JordanElement:
    """M o M - tr(M) M + sigma2(M) Id; agrees with the interpolated
    gradient (asserted in the test suite) and is cheaper to polarize."""
    alg = x.algebra
    m2 = jordan_product(x, x)
    t1 = trace(x)
    sigma2 = (t1 * t1 - trace(m2)) / sc(2)
    return m2 - x.scale(t1) + alg.identity().scale(sigma2)


def freudenthal_cross(x: JordanElement, e: int) -> JordanElement:
    """Directional derivative of the adjugate at x along the basis element
    E_e (the polarization of the quadratic adjugate map):
    2 M o E - tr(E) M - tr(M) E + (tr(M) tr(E) - tr(M o E)) Id."""
    alg = x.algebra
    ebase = alg.element(unit_vec(alg.dim, e))
    me = jordan_product(x, ebase)
    t1, te = trace(x), trace(ebase)
    sigma_prime = t1 * te - trace(me)
    return (
        me.scale(sc(2))
        - x.scale(te)
        - ebase.scale(t1)
        + alg.identity().scale(sigma_prime)
    )


@dataclass
class CayleyHamiltonReport:
    passed: bool
    residual_is_zero: bool


def cayley_hamilton_check(x: JordanElement) -> CayleyHamiltonReport:
    """Exact verification of M^3 - tr(M) M^2 + sigma2(M) M - Det(M) Id = 0
    with sigma2 = (tr(M)^2 - tr(M^2)) / 2."""
    alg = x.algebra
    m2 = jordan_product(x, x)
    m3 = jordan_product(x, m2)
    t1 = trace(x)
    sigma2 = (t1 * t1 - trace(m2)) / sc(2)
    det = det_cubic(x)
    res = (
        m3
        - m2.scale(t1)
        + x.scale(sigma2)
        - alg.identity().scale(det)
    )
    ok = res.is_zero()
    return CayleyHamiltonReport(ok, ok)


def jordan_rank(x: JordanElement) -> int:
    """3 when Det is nonzero, else 2 when the adjugate is nonzero, else 1
    for nonzero elements, else 0."""
    if not det_cubic(x).is_zero():
        return 3
    if not adjugate(x).is_zero():
        return 2
    return 1 if not x.is_zero() else 0


def rank_one_from_pair(alg: JordanAlgebra, x_coords, y_coords) -> JordanElement:
    """The Hermitian square of the column (1, x, y): a rank-one element."""
    if alg.a == 0:
        raise ValueError("rank-one construction needs a nonzero base algebra")
    base = alg.base
    x = [sc(c) for c in x_coords]
    y = [sc(c) for c in y_coords]
    qx = base.norm_coords(x)
    qy = base.norm_coords(y)
    w = base.mul_coords(base.conj_coords(x), y)
    return alg.from_parts([ONE, qx, qy], [x, y, w])


@dataclass(frozen=True)
class FreudenthalVector:
    """An element of K + H3 + H3* + K*, the dual copy represented through
    the trace pairing."""

    algebra: JordanAlgebra
    alpha: Scalar
    m: tuple
    n: tuple
    beta: Scalar

    @property
    def total_dim(self) -> int:
        return 2 * self.algebra.dim + 2

    def flat(self) -> List[Scalar]:
        return [self.alpha, *self.m, *self.n, self.beta]


def freudenthal_vector(
    alg: JordanAlgebra, alpha, m: Sequence, n: Sequence, beta
) -> FreudenthalVector:
    return FreudenthalVector(
        alg, sc(alpha), tuple(sc(c) for c in m), tuple(sc(c) for c in n), sc(beta)
    )


def cubic_map(x: JordanElement) -> FreudenthalVector:
    """M -> [1, M, dDet(M), Det(M)], the affine chart of the twisted-cubic
    image over the Jordan algebra."""
    return FreudenthalVector(
        x.algebra, ONE, tuple(x.coords), tuple(adjugate(x).coords), det_cubic(x)
    )


def symplectic_pairing(p: FreudenthalVector, q: FreudenthalVector) -> Scalar:
    """omega(v1 + w1, v2 + w2) = w1(v2) - w2(v1) on (K + H3) + (K + H3)*,
    dual slots paired through the trace form."""
    if p.algebra is not q.algebra:
        raise ValueError("vectors over different algebras")
    alg = p.algebra
    t_pq = vec_dot(list(p.n), alg.trace_gram.apply(list(q.m)))
    t_qp = vec_dot(list(q.n), alg.trace_gram.apply(list(p.m)))
    return (t_pq - t_qp) + (p.alpha * q.beta - q.alpha * p.beta)


def symplectic_gram_rank(a: int) -> int:
    """Rank of the symplectic form on basis vectors of K + H3 + H3* + K*."""
    alg = jordan_algebra(a)
    d = alg.dim
    total = 2 * d + 2
    basis = []
    for i in range(total):
        flat = unit_vec(total, i)
        basis.append(
            FreudenthalVector(
                alg,
                flat[0],
                tuple(flat[1 : 1 + d]),
                tuple(flat[1 + d : 1 + 2 * d]),
                flat[1 + 2 * d],
            )
        )
    gram = Matrix(
        [[symplectic_pairing(u, v) for v in basis] for u in basis]
    )
    return mat_rank(gram)


@dataclass
class LegendrianReport:
    a: int
    samples: int
    tangent_dim: int
    passed: bool
    failure: Optional[str] = None


def tangent_frame(x: JordanElement) -> List[FreudenthalVector]:
    """The affine tangent frame of the cone over the cubic image at
    cubic_map(x): the point itself plus all directional derivatives."""
    alg = x.algebra
    point = cubic_map(x)
    adj = adjugate(x)
    frame = [point]
    for e in range(alg.dim):
        d_adj = freudenthal_cross(x, e)
        d_det = trace_pairing(adj, alg.element(unit_vec(alg.dim, e)))
        frame.append(
            FreudenthalVector(
                alg, ZERO, tuple(unit_vec(alg.dim, e)), tuple(d_adj.coords), d_det
            )
        )
    return frame


def legendrian_check(a: int, samples: int = 20, seed: int = 0) -> LegendrianReport:
    """For sampled M the affine tangent space at cubic_map(M) must have
    dimension dim H3 + 1 and be isotropic for the symplectic pairing."""
    import random as _random

    alg = jordan_algebra(a)
    rng = _random.Random(seed)
    expected = alg.dim + 1
    for s in range(samples):
        x = alg.random_element(rng, height=2)
        frame = tangent_frame(x)
        gram_rows = [[symplectic_pairing(u, v) for v in frame] for u in frame]
        if any(any(not c.is_zero() for c in row) for row in gram_rows):
            return LegendrianReport(a, s + 1, -1, False, "tangent space not isotropic")
        span = Subspace(frame[0].total_dim, [f.flat() for f in frame])
        if span.dim != expected:
            return LegendrianReport(
                a, s + 1, span.dim, False, f"tangent dim {span.dim} != {expected}"
            )
    return LegendrianReport(a, samples, expected, True)
