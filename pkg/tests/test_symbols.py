import numpy as np
import pytest

from ercd.algebras import a32, extended_gammas, pd_gammas, pgi8
from ercd.operators import GeneralOp
from ercd.symbols import (MomentumSymbol, anticommutator_symbol,
                          check_equation_symmetry, commutator_symbol,
                          dirac_hamiltonian, fw_hamiltonian, fw_transform,
                          max_residual, omega, pd_spin, sample_momenta,
                          spin_matrices_complex, symbol_norm, tilde_gammas,
                          to_complex_matrix)

M = 1.0
TOL = 1e-12
SAMPLES = sample_momenta(100, seed=42, radius=10.0)


def _const(op, label=""):
    return MomentumSymbol.constant(op, M, label)


IDENT = _const(GeneralOp.identity(), "I")


def test_sampling_is_deterministic_and_bounded():
    a = sample_momenta(50, seed=1)
    b = sample_momenta(50, seed=1)
    assert a == b
    assert a[0] == (0.0, 0.0, 0.0)
    assert all(np.linalg.norm(q) <= 10.0 + 1e-12 for q in a)
    assert sample_momenta(50, seed=2) != a


def test_hamiltonian_values_at_rest():
    g0 = to_complex_matrix(pd_gammas().get("g0").A)
    h, _ = fw_hamiltonian(M).symbol.value_at((0.0, 0.0, 0.0))
    assert np.allclose(h, g0)
    h, _ = dirac_hamiltonian(M).symbol.value_at((0.0, 0.0, 0.0))
    assert np.allclose(h, g0)


def test_hamiltonians_hermitian_with_light_cone_spectrum():
    hd = dirac_hamiltonian(M)
    for q in SAMPLES[:25]:
        h = hd.hamiltonian(q)
        assert np.allclose(h, h.conj().T, atol=TOL)
        w = float(np.sqrt(np.dot(q, q) + M * M))
        assert np.allclose(np.sort(np.linalg.eigvalsh(h)),
                           [-w, -w, w, w], atol=1e-10)


def test_negative_mass_rejected():
    with pytest.raises(ValueError):
        fw_hamiltonian(-1.0)
    with pytest.raises(ValueError):
        dirac_hamiltonian(-0.5)


def test_transform_requires_positive_mass():
    with pytest.raises(ValueError):
        fw_transform(0.0)
    with pytest.raises(ValueError):
        pd_spin(0.0)
    with pytest.raises(ValueError):
        tilde_gammas(0.0)


def test_transform_is_identity_at_rest():
    vp = fw_transform(M, +1)
    a, b = vp.value_at((0.0, 0.0, 0.0))
    assert np.allclose(a, np.eye(4)) and not b.any()


def test_transforms_are_mutually_inverse():
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    assert max_residual(vp @ vm, IDENT, SAMPLES) < TOL
    assert max_residual(vm @ vp, IDENT, SAMPLES) < TOL


def test_hamiltonian_conjugation_identity():
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    lhs = vp @ fw_hamiltonian(M).symbol @ vm
    assert max_residual(lhs, dirac_hamiltonian(M).symbol, SAMPLES) < TOL


def test_nonlocal_spin_at_rest_is_constant_spin():
    sv = spin_matrices_complex()
    for j, s in enumerate(pd_spin(M)):
        a, _ = s.value_at((0.0, 0.0, 0.0))
        assert np.allclose(a, sv[j], atol=TOL)


def test_nonlocal_spin_commutes_with_local_hamiltonian():
    hd = dirac_hamiltonian(M).symbol
    samples = sample_momenta(200, seed=9, radius=10.0)
    for s in pd_spin(M):
        comm = commutator_symbol(s, hd)
        worst = max(symbol_norm(comm.value_at(q)) for q in samples)
        assert worst < TOL


def test_nonlocal_spin_equals_conjugated_spin():
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    sv = spin_matrices_complex()
    for j, s in enumerate(pd_spin(M)):
        conj = vp @ MomentumSymbol.linear_matrix(lambda q, jj=j: sv[jj], M) @ vm
        assert max_residual(s, conj, SAMPLES) < TOL


def test_tilde_vector_at_rest():
    tgs = dict(tilde_gammas(M))
    g4 = to_complex_matrix(pd_gammas().get("g4").A)
    a, _ = tgs["tg4"].value_at((0.0, 0.0, 0.0))
    assert np.allclose(a, g4, atol=TOL)


def test_tilde_set_satisfies_minus_two_delta():
    tgs = dict(tilde_gammas(M))
    labels = [f"tg{k}" for k in range(1, 8)]
    for q in SAMPLES[:12]:
        for a in range(7):
            for b in range(a, 7):
                ac = anticommutator_symbol(tgs[labels[a]], tgs[labels[b]])
                va, vb = ac.value_at(q)
                target = -2.0 * np.eye(4) if a == b else 0.0
                assert float(np.max(np.abs(va - target))) < TOL
                assert float(np.max(np.abs(vb))) < TOL


def test_tilde_operators_match_conjugation():
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    ext = extended_gammas()
    fundamentals = {f"tg{k}": _const(ext.get(f"g{k}")) for k in range(1, 8)}
    fundamentals["tg0"] = _const(pd_gammas().get("g0"))
    fundamentals["tC"] = _const(GeneralOp.conjugation())
    for lbl, sym in tilde_gammas(M):
        conj = vp @ fundamentals[lbl] @ vm
        assert max_residual(sym, conj, SAMPLES[:40]) < TOL, lbl


def test_conjugation_preserves_anticommutators():
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    ext = extended_gammas()
    pairs = [("g1", "g2"), ("g5", "g6"), ("g4", "g7"), ("g5", "g5")]
    for la, lb in pairs:
        xa = vp @ _const(ext.get(la)) @ vm
        xb = vp @ _const(ext.get(lb)) @ vm
        ac = anticommutator_symbol(xa, xb)
        target = -2.0 * np.eye(4) if la == lb else 0.0
        for q in SAMPLES[:10]:
            va, vb = ac.value_at(q)
            assert float(np.max(np.abs(va - target))) < TOL
            assert float(np.max(np.abs(vb))) < TOL


def test_flip_composition_is_associative():
    rng = np.random.default_rng(3)

    def random_symbol():
        # O(1) entries over the sample ball so triple products stay O(1)
        c0 = 0.3 * (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        c1 = 0.03 * (rng.normal(size=(3, 4, 4)) + 1j * rng.normal(size=(3, 4, 4)))
        d0 = 0.3 * (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))

        def fn(q):
            a = c0 + sum(q[k] * c1[k] for k in range(3))
            return a, d0 * (1.0 + 0.01 * q[0] * q[0])

        return MomentumSymbol(fn, M, "rand")

    for _ in range(6):
        x, y, z = random_symbol(), random_symbol(), random_symbol()
        lhs = (x @ y) @ z
        rhs = x @ (y @ z)
        assert max_residual(lhs, rhs, SAMPLES[:15]) < 1e-12


def test_constant_embedding_is_a_homomorphism():
    ext = extended_gammas()
    for la, lb in (("g1", "g5"), ("g5", "g6"), ("g7", "g5"), ("g2", "g3")):
        xa, xb = ext.get(la), ext.get(lb)
        lhs = _const(xa) @ _const(xb)
        rhs = _const(xa @ xb)
        assert max_residual(lhs, rhs, SAMPLES[:10]) < TOL


def test_omega_is_even():
    for q in SAMPLES[:20]:
        neg = tuple(-c for c in q)
        assert omega(q, M) == omega(neg, M)


def test_a32_elements_are_exact_symmetries():
    fw = fw_hamiltonian(M)
    for lbl, op in a32():
        rep = check_equation_symmetry(op, fw, label=lbl)
        assert rep.exact and rep.is_symmetry, lbl
        assert rep.max_residual == 0.0


def test_pgi_elements_are_massless_symmetries():
    massless = dirac_hamiltonian(0.0)
    for lbl, op in pgi8():
        assert check_equation_symmetry(op, massless).is_symmetry, lbl


def test_space_generator_is_not_a_symmetry():
    fw = fw_hamiltonian(M)
    g1 = pd_gammas().get("g1")
    assert not check_equation_symmetry(g1, fw).is_symmetry


def test_chiral_elements_fail_with_mass():
    # the massless invariances that anticommute with the mass term drop out
    massive = dirac_hamiltonian(M)
    g4 = pd_gammas().get("g4")
    assert not check_equation_symmetry(g4, massive).is_symmetry


def test_momentum_symbol_symmetry_check_numeric_path():
    fw = fw_hamiltonian(M)
    vp, vm = fw_transform(M, +1), fw_transform(M, -1)
    # conjugated constant symmetry stays a symmetry of the local equation
    hd = dirac_hamiltonian(M)
    sym = vp @ _const(extended_gammas().get("g7")) @ vm
    rep = check_equation_symmetry(sym, hd, samples=SAMPLES[:25])
    assert not rep.exact and rep.is_symmetry
