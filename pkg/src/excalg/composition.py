"""Composition algebras: Cayley-Dickson doubling, the octonions from the
Fano plane, identity checkers, cross products, and the pointwise geometry
of the complex octonions (zero divisors, null-planes, subalgebra types,
sextonions).

Over Q(i) the same multiplication table serves both the real algebra and
its complexification, so there is a single algebra type.  Tables are
immutable and shared read-only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import forms as fm
from .linalg import (
    Matrix,
    Subspace,
    is_zero_vec,
    kernel,
    unit_vec,
    vec_add,
    vec_dot,
    vec_scale,
    zero_vec,
)
from .scalar import I, ONE, ZERO, Scalar, sc

STANDARD = "standard"
SPLIT = "split"

ALTERNATIVE = "alternative"
MOUFANG = "moufang"
NORM_MULT = "norm_mult"
ASSOCIATIVE = "associative"


class NonIsotropic(ValueError):
    """Raised when an operation requires a nonzero element of norm zero."""


class NotSubalgebra(ValueError):
    """Raised when a subspace fails closure under multiplication."""


class NeedsExtension(ValueError):
    """Raised when a construction requires irrational scalars."""


# Oriented lines of the Fano plane, matching the invariant three-form
# e^123 + e^365 + e^541 + e^264 + e^176 + e^572 + e^374.
FANO_LINES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (3, 6, 5),
    (5, 4, 1),
    (2, 6, 4),
    (1, 7, 6),
    (5, 7, 2),
    (3, 7, 4),
)


class CompAlgebra:
    """A unital algebra with conjugation and its norm bilinear form.

    ``table[i][j]`` is the coordinate vector of e_i * e_j.  Basis element 0
    is the two-sided unit; conjugation is diagonal with signature +1 on the
    unit and -1 on the remaining basis elements.  The constructor verifies
    that conjugation is an antiautomorphism of the table and that
    x * conj(x) = q(x) * 1 on basis elements.  The bilinear form may be
    degenerate (the sextonions), in which case the algebra is unital with
    conjugation but not a composition algebra.
    """

    __slots__ = ("dim", "table", "conj_signs", "gram", "name")

    def __init__(self, table, conj_signs=None, name: str = "", check: bool = True):
        d = len(table)
        self.dim = d
        self.table = tuple(
            tuple(tuple(sc(x) for x in cell) for cell in row) for row in table
        )
        self.conj_signs = tuple(
            conj_signs if conj_signs is not None else [1] + [-1] * (d - 1)
        )
        self.name = name
        gram = [[ZERO] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                # <x,y> = (x conj(y) + y conj(x)) / 2, unit coordinate
                a = self._mul_basis_conj(i, j)
                b = self._mul_basis_conj(j, i)
                gram[i][j] = (a + b) / sc(2)
        self.gram = Matrix(gram)
        if check:
            self._check_invariants()

    def _mul_basis_conj(self, i: int, j: int) -> Scalar:
        # unit coordinate of e_i * conj(e_j)
        cell = self.table[i][j]
        return sc(self.conj_signs[j]) * cell[0]

    def _check_invariants(self):
        d = self.dim
        for i in range(d):
            if list(self.table[0][i]) != unit_vec(d, i) or list(
                self.table[i][0]
            ) != unit_vec(d, i):
                raise ValueError("basis element 0 must be a two-sided unit")
        for i in range(d):
            for j in range(d):
                # conj(e_i e_j) == conj(e_j) conj(e_i)
                lhs = [sc(self.conj_signs[k]) * c for k, c in enumerate(self.table[i][j])]
                rhs = vec_scale(
                    sc(self.conj_signs[i] * self.conj_signs[j]), self.table[j][i]
                )
                if lhs != rhs:
                    raise ValueError("conjugation is not an antiautomorphism")
        for i in range(d):
            prod = self.mul_coords(unit_vec(d, i), self.conj_coords(unit_vec(d, i)))
            expected = vec_scale(self.gram[i, i], unit_vec(d, 0))
            if prod != expected:
                raise ValueError("x * conj(x) != q(x) * 1 on the basis")

    # -- coordinate-level operations --------------------------------------

    def mul_coords(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        d = self.dim
        out = zero_vec(d)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                cell = row[j]
                out = [o + c * t if not t.is_zero() else o for o, t in zip(out, cell)]
        return out

    def conj_coords(self, x: Sequence[Scalar]) -> List[Scalar]:
        return [sc(s) * v for s, v in zip(self.conj_signs, x)]

    def bilinear(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        return vec_dot(x, self.gram.apply(list(y)))

    def norm_coords(self, x: Sequence[Scalar]) -> Scalar:
        return self.bilinear(x, x)

    # -- elements -----------------------------------------------------------

    def element(self, coords: Sequence) -> "AlgElement":
        return AlgElement(self, [sc(c) for c in coords])

    def unit(self) -> "AlgElement":
        return self.element(unit_vec(self.dim, 0))

    def basis(self, i: int) -> "AlgElement":
        return self.element(unit_vec(self.dim, i))

    def basis_product(self, i: int, j: int) -> List[Scalar]:
        """Product table access shared with the derivation solver."""
        return list(self.table[i][j])

    def random_element(self, rng, height: int = 3, gaussian: bool = True) -> "AlgElement":
        from .scalar import rand_scalar

        return self.element(
            [rand_scalar(rng, height, gaussian) for _ in range(self.dim)]
        )

    def table_json(self) -> list:
        return [
            [[str(c) for c in cell] for cell in row] for row in self.table
        ]

    def __repr__(self):
        return f"CompAlgebra({self.name or self.dim})"


@dataclass(frozen=True)
class AlgElement:
    """An element of a CompAlgebra, as a coordinate vector."""

    algebra: CompAlgebra
    coords: tuple

    def __init__(self, algebra: CompAlgebra, coords: Sequence):
        cs = tuple(sc(c) for c in coords)
        if len(cs) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", cs)

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        return AlgElement(
            self.algebra, self.algebra.mul_coords(self.coords, other.coords)
        )

    def __add__(self, other: "AlgElement") -> "AlgElement":
        return AlgElement(self.algebra, vec_add(list(self.coords), list(other.coords)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + other.scale(sc(-1))

    def scale(self, c) -> "AlgElement":
        return AlgElement(self.algebra, vec_scale(sc(c), list(self.coords)))

    def conj(self) -> "AlgElement":
        return AlgElement(self.algebra, self.algebra.conj_coords(self.coords))

    def norm(self) -> Scalar:
        return self.algebra.norm_coords(self.coords)

    def real_part(self) -> Scalar:
        return self.algebra.bilinear(self.coords, unit_vec(self.algebra.dim, 0))

    def imaginary_part(self) -> "AlgElement":
        r = self.real_part()
        out = list(self.coords)
        out[0] = out[0] - r
        return AlgElement(self.algebra, out)

    def is_imaginary(self) -> bool:
        return self.real_part().is_zero()

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, AlgElement)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )


# -- constructions -------------------------------------------------------------


def ground_field_algebra() -> CompAlgebra:
    """The one-dimensional algebra: the ground field itself."""
    return CompAlgebra([[(ONE,)]], conj_signs=[1], name="R")


def cayley_dickson(base: CompAlgebra, sign: str = STANDARD) -> CompAlgebra:
    """Double a unital algebra with conjugation.

    Product on pairs: (a,b)(c,d) = (ac - conj(d) b, b conj(c) + d a) for the
    standard sign, and (ac + conj(d) b, b conj(c) + d a) for the split sign.
    Conjugation doubles as (a,b) -> (conj(a), -b).
    """
    if sign not in (STANDARD, SPLIT):
        raise ValueError(f"unknown doubling sign {sign!r}")
    d = base.dim
    dd = 2 * d
    eps = -1 if sign == STANDARD else 1

    def half(v, which):
        return v[:d] if which == 0 else v[d:]

    table = [[None] * dd for _ in range(dd)]
    for i in range(dd):
        for j in range(dd):
            a = unit_vec(d, i) if i < d else zero_vec(d)
            b = zero_vec(d) if i < d else unit_vec(d, i - d)
            c = unit_vec(d, j) if j < d else zero_vec(d)
            e = zero_vec(d) if j < d else unit_vec(d, j - d)
            ac = base.mul_coords(a, c)
            db = base.mul_coords(base.conj_coords(e), b)
            first = [x + sc(eps) * y for x, y in zip(ac, db)]
            bc = base.mul_coords(b, base.conj_coords(c))
            da = base.mul_coords(e, a)
            second = vec_add(bc, da)
            table[i][j] = first + second
    signs = [1] + [-1] * (dd - 1)
    suffix = "'" if sign == SPLIT else ""
    return CompAlgebra(table, conj_signs=signs, name=f"CD({base.name}){suffix}")


def canonical_octonions() -> CompAlgebra:
    """The octonions with the multiplication read off the oriented Fano
    lines; the bilinear form is the standard orthonormal one."""
    d = 8
    table = [[zero_vec(d) for _ in range(d)] for _ in range(d)]
    for i in range(d):
        table[0][i] = unit_vec(d, i)
        table[i][0] = unit_vec(d, i)
    for i in range(1, d):
        v = zero_vec(d)
        v[0] = sc(-1)
        table[i][i] = v
    for (i, j, k) in FANO_LINES:
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            v = zero_vec(d)
            v[0] = ZERO
            v[c] = ONE
            table[a][b] = v
            w = zero_vec(d)
            w[c] = sc(-1)
            table[b][a] = w
    return CompAlgebra(table, name="O")


def named_algebra(name: str) -> CompAlgebra:
    """Build one of R, C, H, O, split-C, split-H, split-O, sedenion."""
    key = name.strip().lower()
    r = ground_field_algebra()
    if key == "r":
        return r
    if key in ("c", "h", "o", "sedenion"):
        steps = {"c": 1, "h": 2, "o": 3, "sedenion": 4}[key]
        alg = r
        for _ in range(steps):
            alg = cayley_dickson(alg, STANDARD)
        pretty = {"c": "C", "h": "H", "o": "O", "sedenion": "sedenion"}[key]
        return CompAlgebra(alg.table, alg.conj_signs, name=pretty, check=False)
    if key in ("split-c", "split-h", "split-o"):
        steps = {"split-c": 1, "split-h": 2, "split-o": 3}[key]
        alg = r
        for _ in range(steps):
            alg = cayley_dickson(alg, SPLIT)
        return CompAlgebra(alg.table, alg.conj_signs, name=name, check=False)
    if key == "sextonion":
        oct8 = canonical_octonions()
        return sextonions(oct8, standard_null_plane(oct8)).algebra
    raise ValueError(f"unknown algebra name {name!r}")


# -- identity checking -----------------------------------------------------------


@dataclass
class IdentityReport:
    identity: str
    passed: bool
    checked: int
    witness: Optional[tuple] = None


def _identity_arity(which: str) -> int:
    return 2 if which in (ALTERNATIVE, NORM_MULT) else 3


def _identity_holds(alg: CompAlgebra, which: str, elems) -> bool:
    if which == ALTERNATIVE:
        x, y = elems
        xx = x * x
        return (
            (x * (x * y)) == (xx * y)
            and ((y * x) * x) == (y * xx)
            and ((x * y) * x) == (x * (y * x))
        )
    if which == MOUFANG:
        x, y, z = elems
        return (
            z * (x * (z * y)) == ((z * x) * z) * y
            and x * (z * (y * z)) == ((x * z) * y) * z
            and (z * x) * (y * z) == (z * (x * y)) * z
        )
    if which == NORM_MULT:
        u, v = elems
        return (u * v).norm() == u.norm() * v.norm()
    if which == ASSOCIATIVE:
        x, y, z = elems
        return (x * y) * z == x * (y * z)
    raise ValueError(f"unknown identity {which!r}")


def check_identities(
    alg: CompAlgebra, which: str, samples: int = 100, seed: int = 0
) -> IdentityReport:
    """Check an identity on all basis tuples plus seeded random elements.

    Returns a pass report or the first counterexample witness found.
    """
    arity = _identity_arity(which)
    rng = random.Random(seed)
    checked = 0
    d = alg.dim

    def run(elems):
        nonlocal checked
        checked += 1
        if not _identity_holds(alg, which, elems):
            return tuple(tuple(str(c) for c in e.coords) for e in elems)
        return None

    if arity == 2:
        for i in range(d):
            for j in range(d):
                w = run((alg.basis(i), alg.basis(j)))
                if w:
                    return IdentityReport(which, False, checked, w)
    else:
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    w = run((alg.basis(i), alg.basis(j), alg.basis(k)))
                    if w:
                        return IdentityReport(which, False, checked, w)
    for _ in range(samples):
        elems = tuple(alg.random_element(rng, 2) for _ in range(arity))
        w = run(elems)
        if w:
            return IdentityReport(which, False, checked, w)
    return IdentityReport(which, True, checked)


# -- cross products ----------------------------------------------------------------


def cross_product(alg: CompAlgebra, u: AlgElement, v: AlgElement) -> AlgElement:
    """Im(uv) for imaginary u, v."""
    if not (u.is_imaginary() and v.is_imaginary()):
        raise ValueError("cross_product requires imaginary arguments")
    return (u * v).imaginary_part()


@dataclass
class CrossProductData:
    """A totally skew product on a quadratic space, by table."""

    dim: int
    gram: Matrix
    table: tuple  # table[i][j] = coords of e_i x e_j

    @staticmethod
    def from_algebra(alg: CompAlgebra) -> "CrossProductData":
        m = alg.dim - 1
        table = []
        for i in range(1, alg.dim):
            row = []
            for j in range(1, alg.dim):
                prod = cross_product(alg, alg.basis(i), alg.basis(j))
                row.append(tuple(prod.coords[1:]))
            table.append(tuple(row))
        gram = Matrix(
            [[alg.gram[i, j] for j in range(1, alg.dim)] for i in range(1, alg.dim)]
        )
        return CrossProductData(m, gram, tuple(table))


def algebra_from_cross(cross: CrossProductData) -> CompAlgebra:
    """The unital algebra on K + V with product
    (s,u)(t,v) = (st - <u,v>, sv + tu + u x v)."""
    m = cross.dim
    d = m + 1
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            s = ONE if i == 0 else ZERO
            t = ONE if j == 0 else ZERO
            u = zero_vec(m) if i == 0 else unit_vec(m, i - 1)
            v = zero_vec(m) if j == 0 else unit_vec(m, j - 1)
            pair = vec_dot(u, cross.gram.apply(v))
            head = s * t - pair
            tail = vec_add(vec_scale(s, v), vec_scale(t, u))
            if i > 0 and j > 0:
                tail = vec_add(tail, list(cross.table[i - 1][j - 1]))
            table[i][j] = [head] + tail
    return CompAlgebra(table, name="from-cross")


# -- octonionic geometry -------------------------------------------------------------


def _imaginary_to_full(alg: CompAlgebra, v7: Sequence[Scalar]) -> List[Scalar]:
    return [ZERO] + list(v7)


def _full_to_imaginary(v: Sequence[Scalar]) -> List[Scalar]:
    if not v[0].is_zero():
        raise ValueError("vector is not imaginary")
    return list(v[1:])


def left_mult_matrix(alg: CompAlgebra, x: AlgElement) -> Matrix:
    cols = [alg.mul_coords(x.coords, unit_vec(alg.dim, j)) for j in range(alg.dim)]
    return Matrix.from_cols(cols)


def right_mult_matrix(alg: CompAlgebra, x: AlgElement) -> Matrix:
    cols = [alg.mul_coords(unit_vec(alg.dim, j), x.coords) for j in range(alg.dim)]
    return Matrix.from_cols(cols)


def left_mult_kernel(
    alg: CompAlgebra, x: AlgElement, restrict_to_imaginary: bool = False
) -> Subspace:
    """Kernel of left multiplication by an isotropic element.

    With ``restrict_to_imaginary`` the kernel K_x of L_x on the imaginary
    part is returned, in imaginary coordinates (ambient dim - 1).
    """
    if x.is_zero() or not x.norm().is_zero():
        raise NonIsotropic("left_mult_kernel requires a nonzero norm-zero element")
    m = left_mult_matrix(alg, x)
    if not restrict_to_imaginary:
        return kernel(m)
    # domain restricted to imaginary coordinates, range projected off nothing
    sub = Matrix([[m[i, j] for j in range(1, alg.dim)] for i in range(alg.dim)])
    return kernel(sub)


def is_null_plane(alg: CompAlgebra, plane: Subspace) -> bool:
    """True iff all products of a basis of the two-plane vanish."""
    if plane.dim != 2:
        raise ValueError("is_null_plane expects a two-dimensional subspace")
    basis = _subspace_basis_full(alg, plane)
    # bilinearity: vanishing on a basis is sufficient
    for u in basis:
        for v in basis:
            if not is_zero_vec(alg.mul_coords(u, v)):
                return False
    return True


def _subspace_basis_full(alg: CompAlgebra, space: Subspace) -> List[List[Scalar]]:
    if space.ambient == alg.dim:
        return [list(v) for v in space.basis]
    if space.ambient == alg.dim - 1:
        return [_imaginary_to_full(alg, v) for v in space.basis]
    raise ValueError("subspace ambient dimension matches neither A nor Im A")


def standard_null_plane(alg: CompAlgebra) -> Subspace:
    """The reference null-plane span{e4 + i e5, e6 - i e7} of the complex
    octonions (for the Fano-plane table used here)."""
    v1 = zero_vec(8)
    v1[4] = ONE
    v1[5] = I
    v2 = zero_vec(8)
    v2[6] = ONE
    v2[7] = -I
    return Subspace(8, [v1, v2])


R4_QUATERNION = "R4_QUATERNION"
R2_NULLPLANE = "R2_NULLPLANE"
R1_LINE = "R1_LINE"


@dataclass
class FourSubalgebraClass:
    label: str
    q_rank: int
    witness: Optional[Subspace] = None


def classify_four_subalgebra(alg: CompAlgebra, sub: Subspace) -> FourSubalgebraClass:
    """Classify a four-dimensional unital subalgebra by the rank of the
    restricted norm form; the witness is the unique null-plane (rank 2) or
    isotropic line (rank 1)."""
    if sub.ambient != alg.dim or sub.dim != 4:
        raise ValueError("expected a four-dimensional subspace of the algebra")
    if not sub.contains(unit_vec(alg.dim, 0)):
        raise NotSubalgebra("subalgebra must contain the unit")
    basis = [list(v) for v in sub.basis]
    for u in basis:
        for v in basis:
            if not sub.contains(alg.mul_coords(u, v)):
                raise NotSubalgebra("subspace is not closed under multiplication")
    gram = Matrix([[alg.bilinear(u, v) for v in basis] for u in basis])
    from .linalg import rank as _rank

    r = _rank(gram)
    if r == 4:
        return FourSubalgebraClass(R4_QUATERNION, 4)
    rad = kernel(gram)
    rad_vectors = []
    for w in rad.basis:
        x = zero_vec(alg.dim)
        for c, b in zip(w, basis):
            x = vec_add(x, vec_scale(c, b))
        rad_vectors.append(x)
    radical = Subspace(alg.dim, rad_vectors)
    if r == 2:
        return FourSubalgebraClass(R2_NULLPLANE, 2, witness=radical)
    if r == 1:
        # the line annihilating Im(A) by multiplication
        im_basis = [v for v in basis if ZERO == alg.bilinear(v, unit_vec(alg.dim, 0))]
        # solve for y in the radical with y * Im(A) = 0
        cols = rad_vectors
        eqs = []
        for target in im_basis:
            prod_cols = [alg.mul_coords(x, target) for x in cols]
            for coord in range(alg.dim):
                eqs.append([pc[coord] for pc in prod_cols])
        line_coeff = kernel(Matrix(eqs))
        line_vectors = []
        for w in line_coeff.basis:
            x = zero_vec(alg.dim)
            for c, col in zip(w, cols):
                x = vec_add(x, vec_scale(c, col))
            line_vectors.append(x)
        return FourSubalgebraClass(R1_LINE, 1, witness=Subspace(alg.dim, line_vectors))
    raise NotSubalgebra(f"norm rank {r} does not occur for a 4-dim subalgebra")


def is_lie_two_plane(alg: CompAlgebra, plane: Subspace) -> bool:
    """True iff a plane P = <x,y> in the imaginary part is closed under the
    skew product: xy lies in span{1, x, y}.

    Cross-checked against the rank-drop criterion: the two-form obtained by
    contracting the coassociative four-form with x and y has rank at most 2
    exactly on such planes.
    """
    if plane.dim != 2:
        raise ValueError("expected a two-dimensional subspace")
    basis = _subspace_basis_full(alg, plane)
    for v in basis:
        if not v[0].is_zero():
            raise ValueError("plane must lie in the imaginary part")
    x, y = basis
    span = Subspace(alg.dim, [unit_vec(alg.dim, 0), x, y])
    primary = span.contains(alg.mul_coords(x, y))

    star = coassociative_form(alg)
    x7 = _full_to_imaginary(x)
    y7 = _full_to_imaginary(y)
    gamma = fm.contract(y7, fm.contract(x7, star))
    rank_drop = fm.two_form_rank(gamma) <= 2
    if primary != rank_drop:
        raise AssertionError("rank-drop criterion disagrees with closure test")
    return primary


def associative_form(alg: CompAlgebra) -> fm.KForm:
    """The invariant three-form <Im(xy), z> on the imaginary part."""
    if alg.dim != 8:
        raise ValueError("associative_form expects an eight-dimensional algebra")
    items = []
    for i in range(1, 8):
        for j in range(i + 1, 8):
            prod = alg.mul_coords(unit_vec(8, i), unit_vec(8, j))
            for k in range(j + 1, 8):
                c = alg.bilinear(prod, unit_vec(8, k))
                if not c.is_zero():
                    items.append(((i, j, k), c))
    return fm.KForm.from_terms(3, 7, items)


def coassociative_form(alg: CompAlgebra) -> fm.KForm:
    return fm.hodge_star(associative_form(alg))


@dataclass
class SextonionResult:
    algebra: CompAlgebra
    inclusion: Matrix  # columns embed the 6-dim algebra into the octonions
    q_rank: int
    model_iso: Optional[Matrix]  # basis map onto the 2x2-matrix model


def model_sextonion_product(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
    """Product on M2 + K^2 coordinates (A11,A12,A21,A22,v1,v2):
    (A,v)(B,w) = (AB, tr(A)w - Aw + Bv)."""
    a11, a12, a21, a22, v1, v2 = a
    b11, b12, b21, b22, w1, w2 = b
    c11 = a11 * b11 + a12 * b21
    c12 = a11 * b12 + a12 * b22
    c21 = a21 * b11 + a22 * b21
    c22 = a21 * b12 + a22 * b22
    tr_a = a11 + a22
    u1 = tr_a * w1 - (a11 * w1 + a12 * w2) + (b11 * v1 + b12 * v2)
    u2 = tr_a * w2 - (a21 * w1 + a22 * w2) + (b21 * v1 + b22 * v2)
    return [c11, c12, c21, c22, u1, u2]


def sextonions(alg: CompAlgebra, null_plane: Subspace) -> SextonionResult:
    """The six-dimensional subalgebra orthogonal to a null-plane.

    Verifies closure, returns the multiplication table on a basis
    (unit, quaternion frame, null-plane), the rank of the restricted norm,
    and an explicit isomorphism onto the matrix model when a rational
    quaternion frame exists.
    """
    if not is_null_plane(alg, null_plane):
        raise ValueError("sextonions requires a null-plane")
    d = alg.dim
    np_full = Subspace(d, _subspace_basis_full(alg, null_plane))
    # orthogonal complement w.r.t. the bilinear form
    rows = [alg.gram.apply(list(v)) for v in np_full.basis]
    s_space = kernel(Matrix(rows))
    if s_space.dim != 6:
        raise ValueError("null-plane complement has unexpected dimension")
    # closure
    sb = [list(v) for v in s_space.basis]
    for u in sb:
        for v in sb:
            if not s_space.contains(alg.mul_coords(u, v)):
                raise NotSubalgebra("N-perp is not closed under multiplication")
    frame = _quaternion_frame_in(alg, s_space)
    basis = [unit_vec(d, 0)] + frame + [list(v) for v in np_full.basis]
    # change to the chosen basis must still span S
    if Subspace(d, basis).dim != 6:
        raise NeedsExtension("could not assemble a rational basis of the sextonions")
    coords_of = _coordinate_solver(basis)
    table = []
    for u in basis:
        row = []
        for v in basis:
            prod = alg.mul_coords(u, v)
            c = coords_of(prod)
            if c is None:
                raise NotSubalgebra("product left the subalgebra")
            row.append(c)
        table.append(row)
    sub = CompAlgebra(table, name="sextonion")
    from .linalg import rank as _rank

    q_rank = _rank(Matrix([[alg.bilinear(u, v) for v in basis] for u in basis]))
    iso = _sextonion_model_iso(sub)
    return SextonionResult(sub, Matrix.from_cols(basis), q_rank, iso)


def _coordinate_solver(basis: List[List[Scalar]]):
    m = Matrix.from_cols(basis)

    def coords(v) -> Optional[List[Scalar]]:
        from .linalg import solve as _solve

        return _solve(m, v)

    return coords


def _quaternion_frame_in(alg: CompAlgebra, s_space: Subspace) -> List[List[Scalar]]:
    """Search a frame u1, u2, u3 = u1 u2 of unit-norm imaginary elements
    inside the subalgebra; raises NeedsExtension when no small rational
    frame exists."""
    d = alg.dim
    unit = unit_vec(d, 0)
    im_basis = []
    for v in s_space.basis:
        w = list(v)
        # project off the unit direction
        r = alg.bilinear(w, unit)
        w[0] = w[0] - r
        if not is_zero_vec(w):
            im_basis.append(w)
    im_space = Subspace(d, im_basis)
    candidates = []
    coeff_choices = [ZERO, ONE, sc(-1), I, -I]
    base = [list(v) for v in im_space.basis]
    for i, v in enumerate(base):
        for c in coeff_choices[1:]:
            candidates.append(vec_scale(c, v))
        for j in range(i + 1, len(base)):
            for c in coeff_choices[1:3]:
                candidates.append(vec_add(v, vec_scale(c, base[j])))
    found = []
    for v in candidates:
        if alg.norm_coords(v) == ONE and alg.bilinear(v, unit).is_zero():
            ok_orth = all(alg.bilinear(v, u).is_zero() for u in found)
            if ok_orth and Subspace(d, found + [v]).dim == len(found) + 1:
                found.append(v)
        if len(found) == 2:
            break
    if len(found) < 2:
        raise NeedsExtension("no rational quaternion frame in the subalgebra")
    u1, u2 = found
    u3 = alg.mul_coords(u1, u2)
    return [u1, u2, u3]


def _sextonion_model_iso(sub: CompAlgebra) -> Optional[Matrix]:
    """Solve for a basis map from the (1, u1, u2, u3, n1, n2) table onto the
    matrix model; None when the linear system has no invertible solution."""
    # images of the quaternion part: 1, i sigma_z, i sigma_y, i sigma_x
    q_images = {
        0: [ONE, ZERO, ZERO, ONE],
        1: [I, ZERO, ZERO, -I],
        2: [ZERO, ONE, sc(-1), ZERO],
        3: [ZERO, I, I, ZERO],
    }
    # unknown phi: 2x2 matrix sending (n1, n2) coordinates to model K^2
    # equations: phi(h * n) = (tr(Ah) I - Ah) phi(n), phi(n * h) = Bh phi(n)
    rows = []
    for h in range(4):
        a = q_images[h]
        tr_minus = [
            a[3],        # tr - a11
            -a[1],
            -a[2],
            a[0],        # tr - a22
        ]
        for n in (4, 5):
            prod = sub.basis_product(h, n)
            if any(not prod[k].is_zero() for k in range(4)):
                return None
            # phi(prod)_r = sum_s M_r_s(phi columns)...
            for r in range(2):
                # unknowns phi[r][c] for c in 0,1 stacked as [p00,p01,p10,p11]
                row = [ZERO] * 4
                # lhs: phi applied to prod (coords in n-basis)
                for c, src in enumerate((4, 5)):
                    row[2 * r + c] = row[2 * r + c] + prod[src]
                # rhs: (trA - A) e_{n-col} selects phi column (n-4)
                m = tr_minus
                coeff = [m[2 * r], m[2 * r + 1]]
                for rr in range(2):
                    row[2 * rr + (n - 4)] = row[2 * rr + (n - 4)] - coeff[rr]
                rows.append(row)
            prod2 = sub.basis_product(n, h)
            if any(not prod2[k].is_zero() for k in range(4)):
                return None
            for r in range(2):
                row = [ZERO] * 4
                for c, src in enumerate((4, 5)):
                    row[2 * r + c] = row[2 * r + c] + prod2[src]
                bm = a
                coeff = [bm[2 * r], bm[2 * r + 1]]
                for rr in range(2):
                    row[2 * rr + (n - 4)] = row[2 * rr + (n - 4)] - coeff[rr]
                rows.append(row)
    phi_space = kernel(Matrix(rows))
    for w in phi_space.basis:
        phi = Matrix([[w[0], w[1]], [w[2], w[3]]])
        if not phi.det().is_zero():
            cols = []
            for b in range(6):
                if b < 4:
                    img = q_images[b] + [ZERO, ZERO]
                else:
                    img = [ZERO] * 4 + [phi[0, b - 4], phi[1, b - 4]]
                cols.append(img)
            iso = Matrix.from_cols(cols)
            if _check_model_iso(sub, iso):
                return iso
    return None


def _check_model_iso(sub: CompAlgebra, iso: Matrix) -> bool:
    for i in range(6):
        for j in range(6):
            lhs = iso.apply(sub.basis_product(i, j))
            rhs = model_sextonion_product(iso.col(i), iso.col(j))
            if lhs != rhs:
                return False
    return True


def maximal_isotropic_from_divisor(
    alg: CompAlgebra, p: AlgElement, side: str = "left"
) -> Subspace:
    """Image of left or right multiplication by a zero divisor: a maximal
    isotropic subspace."""
    if p.is_zero() or not p.norm().is_zero():
        raise NonIsotropic("requires a nonzero norm-zero element")
    m = left_mult_matrix(alg, p) if side == "left" else right_mult_matrix(alg, p)
    cols = [m.col(j) for j in range(alg.dim)]
    return Subspace(alg.dim, cols)


def basic_triple_isomorphism(
    alg: CompAlgebra, x: AlgElement, y: AlgElement, z: AlgElement
) -> Matrix:
    """The isomorphism onto the canonical octonion table generated by a
    basic triple: unit-norm imaginary x, y orthogonal, z orthogonal to the
    subalgebra generated by x and y.  Verified entrywise."""
    canon = canonical_octonions()
    images = [
        alg.unit(),
        x,
        y,
        x * y,
        z,
        z * x,
        z * y,
        z * (x * y),
    ]
    iso = Matrix.from_cols([list(e.coords) for e in images])
    for i in range(8):
        for j in range(8):
            lhs = alg.mul_coords(list(images[i].coords), list(images[j].coords))
            rhs = zero_vec(8)
            for k, c in enumerate(canon.table[i][j]):
                if not c.is_zero():
                    rhs = vec_add(rhs, vec_scale(c, list(images[k].coords)))
            if lhs != rhs:
                raise ValueError("not a basic triple: table mismatch")
    return iso


def random_isotropic_imaginary(alg: CompAlgebra, rng, height: int = 4) -> AlgElement:
    """A random nonzero isotropic imaginary element, via the line
    parametrization of the quadric through a fixed rational point."""
    d = alg.dim
    p0 = zero_vec(d)
    p0[4] = ONE
    p0[5] = I
    from .scalar import rand_scalar

    while True:
        y = [ZERO] + [rand_scalar(rng, height, gaussian=True) for _ in range(d - 1)]
        qy = alg.norm_coords(y)
        if qy.is_zero():
            continue
        t = sc(-2) * alg.bilinear(p0, y) / qy
        if t.is_zero():
            continue
        x = vec_add(p0, vec_scale(t, y))
        if not is_zero_vec(x):
            assert alg.norm_coords(x).is_zero()
            return alg.element(x)
