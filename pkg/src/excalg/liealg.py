"""Finite-dimensional algebras by structure constants.

Covers derivation algebras as exact kernels of the Leibniz system, Jacobi
verification (exhaustive or sampled), stabilizer subalgebras of trivectors
inside gl_n, weight decompositions relative to a designated commuting
family, and Cartan matrix extraction from an abstract root list.

Exhaustive Jacobi checking is the performance hotspot.  Structure constants
are exact rationals; verification scales them to integers and contracts the
structure tensor through float64 matrix products whose intermediate values
are proven to stay below 2**53, so the floating point arithmetic is exact
integer arithmetic.  Triples are independent, so the contraction is free to
run on BLAS threads; all algebra values are immutable and shareable.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import forms as fm
from . import intlin
from .linalg import (
    Matrix,
    Subspace,
    is_zero_vec,
    kernel,
    unit_vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .scalar import ONE, ZERO, Scalar, sc

_FLOAT_EXACT = 1 << 53


class NeedsExtension(ValueError):
    """Raised when an eigen-decomposition leaves the ground field."""


BracketTable = Dict[Tuple[int, int], Dict[int, Scalar]]


class SCAlgebra:
    """An algebra given by a sparse bracket tensor c(i,j) -> vector.

    With the skew flag the table must satisfy c(i,j) = -c(j,i); a designated
    Cartan family (coordinate vectors of commuting elements) may be attached
    for weight decompositions.
    """

    def __init__(
        self,
        dim: int,
        bracket: BracketTable,
        skew: bool = True,
        unital: bool = False,
        cartan: Optional[List[List[Scalar]]] = None,
        matrices: Optional[List[Matrix]] = None,
        name: str = "",
    ):
        self.dim = dim
        table: BracketTable = {}
        for (i, j), comp in bracket.items():
            cleaned = {k: sc(v) for k, v in comp.items() if not sc(v).is_zero()}
            if cleaned:
                table[(i, j)] = cleaned
        self.bracket = table
        self.skew = skew
        self.unital = unital
        self.matrices = matrices
        self.name = name
        self._tensor_cache = None
        if skew:
            self._check_skew()
        self.cartan = None
        if cartan is not None:
            self.cartan = [[sc(x) for x in h] for h in cartan]
            self._check_cartan_commutes()

    def _check_skew(self):
        for (i, j), comp in self.bracket.items():
            opp = self.bracket.get((j, i), {})
            for k, v in comp.items():
                if opp.get(k, ZERO) != -v:
                    raise ValueError(f"bracket not skew at ({i},{j},{k})")

    def _check_cartan_commutes(self):
        for a, b in itertools.combinations(self.cartan, 2):
            if not is_zero_vec(self.bracket_coords(a, b)):
                raise ValueError("designated Cartan elements do not commute")

    # -- evaluation -------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> Dict[int, Scalar]:
        return self.bracket.get((i, j), {})

    def basis_product(self, i: int, j: int) -> List[Scalar]:
        out = zero_vec(self.dim)
        for k, v in self.basis_bracket(i, j).items():
            out[k] = v
        return out

    def bracket_coords(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        out = zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                comp = self.bracket.get((i, j))
                if not comp:
                    continue
                c = xi * yj
                for k, v in comp.items():
                    out[k] = out[k] + c * v
        return out

    def ad_matrix(self, x: Sequence[Scalar]) -> Matrix:
        cols = [self.bracket_coords(x, unit_vec(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_cols(cols)

    # -- integer tensor ----------------------------------------------------

    def dense_tensor(self) -> tuple[np.ndarray, int, int]:
        """(C, scale, maxabs): C is the float64 structure tensor scaled to
        integers; cached."""
        if self._tensor_cache is not None:
            return self._tensor_cache
        d = self.dim
        denom = 1
        for comp in self.bracket.values():
            for v in comp.values():
                if not v.is_rational():
                    raise ValueError("dense tensor requires rational constants")
                q = int(v.re.denominator)
                denom = denom * q // math.gcd(denom, q)
        c = np.zeros((d, d, d), dtype=np.float64)
        maxabs = 0
        for (i, j), comp in self.bracket.items():
            for k, v in comp.items():
                val = int(v.re.numerator) * (denom // int(v.re.denominator))
                maxabs = max(maxabs, abs(val))
                c[i, j, k] = float(val)
        self._tensor_cache = (c, denom, maxabs)
        return self._tensor_cache

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for (i, j) in sorted(self.bracket):
            comp = self.bracket[(i, j)]
            coeffs = [str(comp.get(k, ZERO)) for k in range(self.dim)]
            entries.append([i, j, coeffs])
        return {"dim": self.dim, "skew": self.skew, "entries": entries}

    @staticmethod
    def from_json(data: dict) -> "SCAlgebra":
        bracket: BracketTable = {}
        for i, j, coeffs in data["entries"]:
            comp = {k: Scalar.parse(c) for k, c in enumerate(coeffs)}
            bracket[(i, j)] = {k: v for k, v in comp.items() if not v.is_zero()}
        return SCAlgebra(data["dim"], bracket, skew=data.get("skew", True))

    def __repr__(self):
        return f"SCAlgebra({self.name or ''} dim={self.dim})"


def commutator_closure_algebra(
    matrices: List[Matrix], name: str = "", cartan=None
) -> SCAlgebra:
    """Express pairwise commutators of a commutator-closed matrix family in
    its own span and return the structure-constant algebra.

    Rational families take a batched exact integer path: commutators and
    coordinates are integer matrix products (checked against 2**53 when run
    through float64), and the coordinate change is a single k x k inverse.
    """
    n = len(matrices)
    all_rational = all(
        matrices[0].rows == m.rows
        and all(x.is_rational() for row in m.entries for x in row)
        for m in matrices
    )
    if all_rational and n >= 16:
        return _closure_int(matrices, name, cartan)
    from .linalg import span_coordinate_map

    coords = span_coordinate_map([_flatten(m) for m in matrices])
    bracket: BracketTable = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = matrices[i] @ matrices[j] - matrices[j] @ matrices[i]
            cs = coords(_flatten(comm))
            if cs is None:
                raise ValueError("matrix family is not closed under commutators")
            comp = {k: v for k, v in enumerate(cs) if not v.is_zero()}
            if comp:
                bracket[(i, j)] = comp
                bracket[(j, i)] = {k: -v for k, v in comp.items()}
    return SCAlgebra(
        len(matrices), bracket, skew=True, matrices=matrices, name=name, cartan=cartan
    )


def _flatten(m: Matrix) -> List[Scalar]:
    return [m[i, j] for i in range(m.rows) for j in range(m.cols)]


def _closure_int(matrices: List[Matrix], name: str, cartan) -> SCAlgebra:
    n = len(matrices)
    size = matrices[0].rows
    denom = 1
    for m in matrices:
        for row in m.entries:
            for x in row:
                q = int(x.re.denominator)
                denom = denom * q // math.gcd(denom, q)
    ints = np.array(
        [
            [
                [int(x.re.numerator) * (denom // int(x.re.denominator)) for x in row]
                for row in m.entries
            ]
            for m in matrices
        ],
        dtype=np.int64,
    )
    flat = ints.reshape(n, size * size).T  # (size^2, n), columns = basis
    # pick coordinate rows S with flat[S] invertible (certified mod p)
    red, pivots = intlin._mod_p_rref(flat.T.copy() % intlin._PRIMES[0], intlin._PRIMES[0])
    if len(pivots) != n:
        raise ValueError("matrix family is linearly dependent")
    sel = pivots
    bsel = Matrix(
        [[Scalar.rational(int(flat[s, j]), denom) for j in range(n)] for s in sel]
    )
    bsel_inv = bsel.inverse()
    comms = []
    index_pairs = []
    for i in range(n):
        mi = ints[i]
        for j in range(i + 1, n):
            cm = intlin.checked_int_matmul(mi, ints[j]) - intlin.checked_int_matmul(
                ints[j], mi
            )
            comms.append(cm.reshape(size * size))
            index_pairs.append((i, j))
    bracket: BracketTable = {}
    if comms:
        stack = np.array(comms, dtype=object).T  # (size^2, npairs)
        coords_sel = stack[np.array(sel)]
        for col, (i, j) in enumerate(index_pairs):
            rhs = [
                Scalar.rational(int(coords_sel[r, col]), denom * denom)
                for r in range(n)
            ]
            cs = bsel_inv.apply(rhs)
            comp = {k: v for k, v in enumerate(cs) if not v.is_zero()}
            if comp:
                bracket[(i, j)] = comp
                bracket[(j, i)] = {k: -v for k, v in comp.items()}
        # exact residual check: stacked basis times coords reproduces comms
        _closure_verify(flat, denom, bracket, index_pairs, stack, n)
    return SCAlgebra(
        n, bracket, skew=True, matrices=matrices, name=name, cartan=cartan
    )


def _closure_verify(flat, denom, bracket, index_pairs, stack, n):
    # scale coordinates to integers columnwise and verify with one product
    cols = []
    for (i, j) in index_pairs:
        comp = bracket.get((i, j), {})
        dens = [int(v.re.denominator) for v in comp.values()] or [1]
        g = 1
        for q in dens:
            g = g * q // math.gcd(g, q)
        col = [0] * n
        for k, v in comp.items():
            col[k] = int(v.re.numerator) * (g // int(v.re.denominator))
        cols.append((col, g))
    coords_int = np.array([c for c, _ in cols], dtype=object).T
    scales = np.array([g for _, g in cols], dtype=object)
    lhs = (flat.astype(object) @ coords_int) * denom
    rhs = stack * scales[None, :]
    if not (lhs == rhs).all():
        raise ValueError("matrix family is not closed under commutators")


# -- derivations ------------------------------------------------------------------


def derivations(algebra, commutative: bool = False, name: str = "") -> SCAlgebra:
    """The Lie algebra of derivations of a finite algebra with a product
    table: the exact kernel of the Leibniz system on End, with commutator
    bracket.  The output always satisfies the Jacobi identity (checked).
    """
    d = algebra.dim
    prods = [[algebra.basis_product(i, j) for j in range(d)] for i in range(d)]
    unknowns = d * d

    def var(a, b):
        return a * d + b

    rows = []
    pair_range = (
        [(i, j) for i in range(d) for j in range(i, d)]
        if commutative
        else [(i, j) for i in range(d) for j in range(d)]
    )
    for (i, j) in pair_range:
        pvec = prods[i][j]
        for l in range(d):
            row: Dict[int, Scalar] = {}
            for m in range(d):
                c = pvec[m]
                if not c.is_zero():
                    key = var(l, m)
                    row[key] = row.get(key, ZERO) + c
            for a in range(d):
                c = prods[a][j][l]
                if not c.is_zero():
                    key = var(a, i)
                    row[key] = row.get(key, ZERO) - c
            for b in range(d):
                c = prods[i][b][l]
                if not c.is_zero():
                    key = var(b, j)
                    row[key] = row.get(key, ZERO) - c
            if row:
                rows.append(row)
    basis_vectors = _sparse_kernel(rows, unknowns)
    matrices = [
        Matrix([[v[var(a, b)] for b in range(d)] for a in range(d)])
        for v in basis_vectors
    ]
    if not matrices:
        return SCAlgebra(0, {}, skew=True, matrices=[], name=name or "der")
    out = commutator_closure_algebra(matrices, name=name or "der")
    report = jacobi_check(out, mode="full")
    if not report.passed:
        raise AssertionError("derivation algebra failed the Jacobi identity")
    return out


def _sparse_kernel(rows: List[Dict[int, Scalar]], ncols: int) -> List[List[Scalar]]:
    """Kernel of a sparse system; routes big rational systems through the
    certified integer path."""
    all_rational = all(v.is_rational() for row in rows for v in row.values())
    if ncols > 150 and all_rational:
        int_rows = []
        for row in rows:
            dens = [int(v.re.denominator) for v in row.values()]
            g = 1
            for q in dens:
                g = g * q // math.gcd(g, q)
            dense = [0] * ncols
            for k, v in row.items():
                dense[k] = int(v.re.numerator) * (g // int(v.re.denominator))
            int_rows.append(dense)
        return intlin.int_kernel(int_rows, ncols)
    dense_rows = []
    for row in rows:
        r = zero_vec(ncols)
        for k, v in row.items():
            r[k] = v
        dense_rows.append(r)
    ker = kernel(Matrix(dense_rows)) if dense_rows else Subspace.full(ncols)
    return [list(v) for v in ker.basis]


# -- Jacobi verification ------------------------------------------------------------


@dataclass
class JacobiReport:
    passed: bool
    checked: int
    witness: Optional[tuple] = None  # (i, j, k, coordinate values)


def _jacobi_witness(g: SCAlgebra, i: int, j: int, k: int) -> Optional[list]:
    ei, ej, ek = (unit_vec(g.dim, t) for t in (i, j, k))
    s = g.bracket_coords(g.bracket_coords(ei, ej), ek)
    s = vec_add(s, g.bracket_coords(g.bracket_coords(ej, ek), ei))
    s = vec_add(s, g.bracket_coords(g.bracket_coords(ek, ei), ej))
    return None if is_zero_vec(s) else s


def jacobi_check(
    g: SCAlgebra,
    mode: str = "full",
    samples: int = 100000,
    seed: int = 0,
) -> JacobiReport:
    """Verify the Jacobi identity on all basis triples (full) or on seeded
    random triples (sampled).  Reports the first failing triple, if any."""
    if not g.skew:
        raise ValueError("jacobi_check requires the skew flag")
    d = g.dim
    if d == 0:
        return JacobiReport(True, 0)
    c, _, maxabs = g.dense_tensor()
    if 3 * d * maxabs * maxabs >= _FLOAT_EXACT:
        raise ValueError("structure constants too large for exact float check")
    cmat = c.reshape(d, d * d)
    cflat = c.reshape(d * d, d)
    if mode == "full":
        # Jacobi holds iff ad is a homomorphism: for every basis element i,
        # ad([e_i, e_j]) = [ad e_i, ad e_j] for all j.  Each side is one
        # GEMM over the structure tensor.
        ct = np.ascontiguousarray(c.transpose(1, 0, 2)).reshape(d, d * d)
        checked = 0
        for i in range(d):
            ci = c[i]
            lhs = (ci @ cmat).reshape(d, d, d)  # sum_m C[i,j,m] C[m,k,l]
            t1 = (cflat @ ci).reshape(d, d, d)  # sum_m C[j,k,m] C[i,m,l]
            # sum_m C[i,k,m] C[j,m,l], produced in (k,j,l) layout
            t2 = (ci @ ct).reshape(d, d, d)
            diff = lhs - t1 + t2.transpose(1, 0, 2)
            checked += d * d
            if diff.any():
                idx = np.argwhere(diff)[0]
                wit = _jacobi_witness(g, i, int(idx[0]), int(idx[1]))
                return JacobiReport(False, checked, (i, int(idx[0]), int(idx[1]), wit))
        return JacobiReport(True, checked)
    if mode == "sampled":
        rng = np.random.default_rng(seed)
        ii = rng.integers(0, d, size=samples)
        jj = rng.integers(0, d, size=samples)
        kk = rng.integers(0, d, size=samples)
        buf = np.zeros((samples, d))
        # sum_m C[a,b,m] C[m,x,l], grouped by the middle index x so each
        # group is one small matmul against the slice C[:,x,:]
        for (aa, bb, xx) in ((ii, jj, kk), (jj, kk, ii), (kk, ii, jj)):
            v = c[aa, bb, :]
            order = np.argsort(xx, kind="stable")
            sx = xx[order]
            bounds = np.flatnonzero(np.diff(sx)) + 1
            for grp in np.split(order, bounds):
                if grp.size == 0:
                    continue
                x = int(xx[grp[0]])
                buf[grp] += v[grp] @ c[:, x, :]
        bad = np.flatnonzero(buf.any(axis=1))
        if bad.size:
            t = int(bad[0])
            wit = _jacobi_witness(g, int(ii[t]), int(jj[t]), int(kk[t]))
            return JacobiReport(
                False, samples, (int(ii[t]), int(jj[t]), int(kk[t]), wit)
            )
        return JacobiReport(True, samples)
    raise ValueError(f"unknown mode {mode!r}")


def killing_gram_int(g: SCAlgebra) -> np.ndarray:
    """Killing form Gram matrix of the integer-scaled bracket (int64)."""
    c, _, maxabs = g.dense_tensor()
    d = g.dim
    if d * maxabs * maxabs >= _FLOAT_EXACT:
        raise ValueError("structure constants too large for exact float contraction")
    left = c.reshape(d, d * d)
    right = c.transpose(0, 2, 1).reshape(d, d * d)
    k = left @ right.T
    out = np.empty((d, d), dtype=np.int64)
    np.rint(k, k)
    out[:] = k
    return out


def killing_nondegenerate(g: SCAlgebra) -> bool:
    k = killing_gram_int(g)
    return intlin.has_full_rank(k.tolist(), g.dim)


def derived_dimension(g: SCAlgebra) -> int:
    """Dimension of the span of all basis brackets (certified lower bound
    equals the true value when it reaches dim g)."""
    rows = []
    for comp in g.bracket.values():
        row = zero_vec(g.dim)
        for k, v in comp.items():
            row[k] = v
        rows.append(row)
    if not rows:
        return 0
    return Subspace(g.dim, rows).dim


# -- stabilizers in gl_n ----------------------------------------------------------


def stabilizer_in_gl(n: int, form: fm.KForm) -> SCAlgebra:
    """The annihilator subalgebra { X in gl_n : X . form = 0 } with
    commutator bracket."""
    from .threeform import action_matrix

    ker = kernel(action_matrix(n, form))
    matrices = [
        Matrix([[v[a * n + b] for b in range(n)] for a in range(n)])
        for v in ker.basis
    ]
    if not matrices:
        return SCAlgebra(0, {}, skew=True, matrices=[], name="stab")
    return commutator_closure_algebra(matrices, name="stab")


# -- weight decompositions -----------------------------------------------------------


@dataclass
class ModuleRep:
    """A representation by explicit matrices, one per algebra basis element."""

    dim: int
    matrices: List[Matrix]


def adjoint_module(g: SCAlgebra) -> ModuleRep:
    return ModuleRep(
        g.dim, [g.ad_matrix(unit_vec(g.dim, i)) for i in range(g.dim)]
    )


def _charpoly(m: Matrix) -> List[Scalar]:
    """Coefficients of det(tI - m), low degree first, by interpolation."""
    s = m.rows
    pts = [sc(t) for t in range(s + 1)]
    vals = [
        (Matrix.identity(s).scale(t) - m).det() for t in pts
    ]
    vander = Matrix([[t ** k if k else ONE for k in range(s + 1)] for t in pts])
    from .linalg import solve

    coeffs = solve(vander, vals)
    assert coeffs is not None
    return coeffs


def _poly_eval(coeffs: List[Scalar], x: Scalar) -> Scalar:
    total = ZERO
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _rational_eigenvalues(m: Matrix) -> Optional[List[Scalar]]:
    """All eigenvalues when they lie in Q(i) (counted with multiplicity);
    None when some root leaves the field.  Candidates are divisor-bounded
    rationals and small Gaussian integers."""
    s = m.rows
    coeffs = _charpoly(m)
    roots: List[Scalar] = []
    current = coeffs

    def deflate(cs, r):
        # synthetic division by (x - r); cs low-first
        deg = len(cs) - 1
        out = [ZERO] * deg
        acc = cs[deg]
        for k in range(deg - 1, -1, -1):
            out[k] = acc
            acc = cs[k] + r * acc
        assert acc.is_zero()
        return out

    candidates: List[Scalar] = [ZERO]
    for a in range(-12, 13):
        for b in range(-12, 13):
            if a or b:
                candidates.append(Scalar.rational(a) + Scalar.rational(b) * sc("i"))
    for num in (1, 2, 3, 5):
        for den in (2, 3, 4, 6):
            candidates.append(Scalar.rational(num, den))
            candidates.append(Scalar.rational(-num, den))
    while len(current) > 1:
        lead_zero = all(c.is_zero() for c in current[1:])
        found = None
        for cand in candidates:
            if _poly_eval(current, cand).is_zero():
                found = cand
                break
        if found is None:
            return None
        roots.append(found)
        current = deflate(current, found)
    return roots


def weight_decomposition(
    g: SCAlgebra, module: ModuleRep
) -> List[Tuple[tuple, int]]:
    """Joint eigenspace decomposition of the designated Cartan family on a
    module; returns (weight tuple, multiplicity) pairs sorted by weight.

    Raises NeedsExtension when an action is not diagonalizable over Q(i).
    """
    if g.cartan is None:
        raise ValueError("algebra carries no designated Cartan")
    h_mats = []
    for h in g.cartan:
        m = Matrix.zero(module.dim, module.dim)
        acc = [[ZERO] * module.dim for _ in range(module.dim)]
        for i, c in enumerate(h):
            if c.is_zero():
                continue
            mi = module.matrices[i]
            for r in range(module.dim):
                for cc in range(module.dim):
                    acc[r][cc] = acc[r][cc] + c * mi[r, cc]
        h_mats.append(Matrix(acc))
    # iteratively refine joint eigenspaces
    spaces: List[Tuple[tuple, List[List[Scalar]]]] = [
        ((), [unit_vec(module.dim, j) for j in range(module.dim)])
    ]
    for hm in h_mats:
        refined: List[Tuple[tuple, List[List[Scalar]]]] = []
        for weight, basis in spaces:
            bmat = Matrix.from_cols(basis)
            span = Subspace(module.dim, basis)
            restricted_cols = []
            for b in basis:
                img = hm.apply(b)
                coords = _coords_in(span, basis, img)
                if coords is None:
                    raise NeedsExtension("family does not preserve the subspace")
                restricted_cols.append(coords)
            rmat = Matrix.from_cols(restricted_cols)
            eigs = _rational_eigenvalues(rmat)
            if eigs is None:
                raise NeedsExtension("eigenvalue outside Q(i)")
            total = 0
            for lam in sorted(set(eigs), key=str):
                ker = kernel(rmat - Matrix.identity(rmat.rows).scale(lam))
                if ker.dim == 0:
                    continue
                new_basis = []
                for w in ker.basis:
                    v = zero_vec(module.dim)
                    for cc, b in zip(w, basis):
                        v = vec_add(v, vec_scale(cc, b))
                    new_basis.append(v)
                refined.append((weight + (lam,), new_basis))
                total += ker.dim
            if total != len(basis):
                raise NeedsExtension("action not diagonalizable over Q(i)")
        spaces = refined
    out = [(w, len(b)) for w, b in spaces]
    return sorted(out, key=lambda t: tuple(str(x) for x in t[0]))


def _coords_in(span: Subspace, basis: List[List[Scalar]], v) -> Optional[List[Scalar]]:
    from .linalg import solve

    return solve(Matrix.from_cols(basis), list(v))


# -- Cartan matrices from roots ---------------------------------------------------


def cartan_matrix_from_roots(roots: Sequence[tuple]) -> Matrix:
    """Cartan matrix of a finite root list closed under negation.

    Simple roots are the indecomposable positive roots for a generic linear
    functional; pairings come from root strings, so no inner product is
    assumed on the coordinates.
    """
    root_set = {tuple(sc(x) for x in r) for r in roots}
    if not root_set:
        raise ValueError("empty root list")
    for r in root_set:
        if tuple(-x for x in r) not in root_set:
            raise ValueError("root list not closed under negation")
    rank_guess = len(next(iter(root_set)))

    def functional(weights):
        def f(r):
            total = ZERO
            for w, x in zip(weights, r):
                total = total + sc(w) * x
            return total

        return f

    f = None
    for n in range(1, 200):
        cand = functional([n ** k for k in range(rank_guess)])
        vals = [cand(r) for r in root_set]
        if all(not v.is_zero() for v in vals):
            f = cand
            break
    if f is None:
        raise ValueError("no generic functional found")

    def positive(r):
        v = f(r)
        if not v.re.numerator == 0:
            return v.re > 0
        return v.im > 0

    positives = [r for r in root_set if positive(r)]

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    pos_set = set(positives)
    simple = []
    for r in positives:
        decomposable = any(
            add(a, b) == r for a in pos_set for b in pos_set if a != r and b != r
        )
        if not decomposable:
            simple.append(r)
    simple.sort(key=lambda r: tuple(str(x) for x in r))

    def string_pairing(alpha, beta):
        # beta-string through alpha: alpha - p beta ... alpha + q beta
        p = 0
        cur = alpha
        while True:
            cur = tuple(x - y for x, y in zip(cur, beta))
            if cur in root_set:
                p += 1
            else:
                break
        q = 0
        cur = alpha
        while True:
            cur = add(cur, beta)
            if cur in root_set:
                q += 1
            else:
                break
        return p - q

    n = len(simple)
    ent = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            ent[i][j] = sc(2) if i == j else sc(string_pairing(simple[i], simple[j]))
    m = Matrix(ent)
    for i in range(n):
        for j in range(n):
            if i != j and not m[i, j].is_rational():
                raise ValueError("input is not a root system")
    return m


def cartan_matrices_equivalent(a: Matrix, b: Matrix) -> bool:
    """Equality up to simultaneous permutation of rows and columns."""
    if a.rows != b.rows:
        return False
    n = a.rows
    for perm in itertools.permutations(range(n)):
        if all(
            a[i, j] == b[perm[i], perm[j]] for i in range(n) for j in range(n)
        ):
            return True
    return False
