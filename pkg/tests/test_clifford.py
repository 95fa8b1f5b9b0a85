import random

import pytest

from excalg import clifford as cl
from excalg import threeform as tf
from excalg.linalg import Matrix, gram_matrix, rank, unit_vec
from excalg.scalar import sc


class TestCliffordAction:
    def test_relation_exhaustive(self):
        assert cl.clifford_relation_holds() == 392

    def test_wedge_on_vacuum(self):
        f1 = [0, 0, 0, 1, 0, 0, 0]
        got = cl.clifford_act(f1, cl.Spinor.vacuum())
        assert got.coords == cl.Spinor.basis((1,)).coords

    def test_contraction_pairs_to_scalar(self):
        e1 = [1, 0, 0, 0, 0, 0, 0]
        got = cl.clifford_act(e1, cl.Spinor.basis((1,)))
        # e(f s) + f(e s) = 2B(e,f)s = -s with s the vacuum
        assert got.coords == cl.Spinor.vacuum().scale(-1).coords

    def test_pairing_invariance(self):
        assert cl.pairing_invariance_holds()


class TestKernels:
    def test_vacua(self):
        kv = cl.pure_spinor_kernel(cl.Spinor.vacuum())
        kt = cl.pure_spinor_kernel(cl.Spinor.top())
        assert kv.dim == 3 and kt.dim == 3
        assert kv.intersect(kt).dim == 0
        g = cl.bilinear_gram()
        assert rank(gram_matrix(g, [list(v) for v in kv.basis])) == 0
        assert rank(gram_matrix(g, [list(v) for v in kt.basis])) == 0

    def test_generic_spinor_kernel_trivial(self):
        chi = cl.Spinor.vacuum() + cl.Spinor.top()
        assert cl.pure_spinor_kernel(chi).dim == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            cl.pure_spinor_kernel(cl.Spinor([0] * 8))


class TestOmegaChi:
    def test_generic_orbit(self):
        chi = cl.Spinor.vacuum() + cl.Spinor.top()
        w = cl.omega_chi(chi)
        assert tf.classify(w).label == tf.W5
        assert tf.stabilizer_dim(w) == 14

    def test_vacuum_degenerate(self):
        w = cl.omega_chi(cl.Spinor.vacuum())
        assert w.is_zero() or tf.classify(w).label != tf.W5

    def test_quadratic_scaling(self):
        chi = cl.Spinor.vacuum() + cl.Spinor.top()
        assert cl.omega_chi(chi.scale(5)) == cl.omega_chi(chi).scale(25)

    def test_random_spinors_generic(self):
        rng = random.Random(0)
        from excalg.scalar import rand_scalar

        hits = 0
        for _ in range(5):
            s = cl.Spinor([rand_scalar(rng, 3, gaussian=True) for _ in range(8)])
            if tf.classify(cl.omega_chi(s)).label == tf.W5:
                hits += 1
        assert hits >= 4
