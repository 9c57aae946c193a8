"""Hamiltonian text format, random generation, locality statistics."""
import numpy as np
import pytest

from framesim import (HamTerm, Hamiltonian, HamiltonianParseError, PauliString,
                      candidate_count, parse_hamiltonian, random_hamiltonian)
from framesim.hamiltonian import sample_term


def test_parse_dense_with_unicode_minus():
    h = parse_hamiltonian("qubits: 2\n0.5 ZZ\n−0.25 XI\n")
    assert len(h) == 2
    assert h.terms[0].coeff == 0.5
    assert h.terms[1].coeff == -0.25
    assert h.locality_stats()[2] == 2


def test_parse_without_header_and_comments():
    h = parse_hamiltonian("# a comment\n\n1.0 XZ  # trailing note\n-2e-3 YI\n")
    assert h.num_qubits == 2
    assert [t.coeff for t in h.terms] == [1.0, -0.002]


def test_parse_sparse_form():
    h = parse_hamiltonian("qubits: 5\n0.5 X0 Z3\n-0.5 Y1\n")
    assert h.terms[0].pauli == PauliString.from_sparse("X0 Z3", 5)
    assert h.terms[1].pauli.to_label(signed=False) == "IIIYI"


def test_parse_errors_carry_line_numbers():
    with pytest.raises(HamiltonianParseError, match="line 2"):
        parse_hamiltonian("qubits: 2\n0.5 Q0\n")
    with pytest.raises(HamiltonianParseError, match="line 1"):
        parse_hamiltonian("abc ZZ\n")
    with pytest.raises(HamiltonianParseError, match="duplicate"):
        parse_hamiltonian("0.5 ZZ\n0.25 ZZ\n")
    with pytest.raises(HamiltonianParseError, match="line 2"):
        parse_hamiltonian("qubits: 2\n0.5 X7\n")
    with pytest.raises(HamiltonianParseError):
        parse_hamiltonian("0.5 X0 Z1\n")  # sparse without header
    with pytest.raises(HamiltonianParseError):
        parse_hamiltonian("qubits: 3\n0.5 ZZ\n")  # dense length mismatch
    with pytest.raises(HamiltonianParseError):
        parse_hamiltonian("")


def test_dump_parse_round_trip():
    rng = np.random.default_rng(40)
    for seed in range(100):
        n = int(rng.integers(2, 12))
        k = int(rng.integers(1, n + 1))
        n_terms = min(int(rng.integers(1, 20)), candidate_count(n, k))
        h = random_hamiltonian(n, k, n_terms, seed=seed)
        back = parse_hamiltonian(h.dump_text(), name=h.name)
        assert back == h


def test_candidate_count_example():
    assert candidate_count(8, 4) == 70 * 81 == 5670


def test_random_hamiltonian_exact_weight_full_locality():
    h = random_hamiltonian(24, 24, 100, seed=3)
    assert all(t.pauli.weight == 24 for t in h.terms)
    assert len({(t.pauli.x_bits, t.pauli.z_bits) for t in h.terms}) == 100


def test_random_hamiltonian_determinism():
    a = random_hamiltonian(10, 4, 50, seed=17)
    b = random_hamiltonian(10, 4, 50, seed=17)
    assert a == b
    c = random_hamiltonian(10, 4, 50, seed=18)
    assert a != c


def test_random_hamiltonian_bounds():
    with pytest.raises(ValueError):
        random_hamiltonian(4, 5, 1, seed=0)
    with pytest.raises(ValueError):
        random_hamiltonian(3, 2, candidate_count(3, 2) + 1, seed=0)
    # exactly exhausting the candidate set is allowed
    h = random_hamiltonian(3, 2, candidate_count(3, 2), seed=0)
    assert len(h) == candidate_count(3, 2)


def test_one_norm_normalization():
    for seed in range(10):
        h = random_hamiltonian(8, 3, 25, seed=seed)
        assert abs(h.one_norm() - 1.0) < 1e-12


def test_locality_stats():
    zz = Hamiltonian(2, [HamTerm(0.7, PauliString.from_label("ZZ"))])
    assert zz.locality_stats() == (2.0, 0.0, 2)
    gen = random_hamiltonian(10, 6, 50, seed=1)
    assert gen.locality_stats() == (6.0, 0.0, 6)
    mixed = Hamiltonian(3, [HamTerm(1.0, PauliString.from_label("ZII")),
                            HamTerm(1.0, PauliString.from_label("XYZ"))])
    mean, std, mx = mixed.locality_stats()
    assert (mean, mx) == (2.0, 3)
    assert std == pytest.approx(1.0)
    with pytest.raises(ValueError):
        Hamiltonian(2, []).locality_stats()


def test_duplicate_terms_rejected():
    t = HamTerm(0.1, PauliString.from_label("XZ"))
    with pytest.raises(ValueError):
        Hamiltonian(2, [t, HamTerm(0.2, PauliString.from_label("XZ"))])


def test_term_validation():
    with pytest.raises(ValueError):
        HamTerm(float("inf"), PauliString.from_label("Z"))
    with pytest.raises(ValueError):
        HamTerm(0.5, PauliString.from_label("-Z"))


def test_sampler_uniform_over_supports():
    # 1e5 draws at n=5, k=2: each of the C(5,2)=10 support sets within 5 sigma
    rng = np.random.default_rng(99)
    n, k, draws = 5, 2, 100_000
    counts = {}
    for _ in range(draws):
        p = sample_term(rng, n, k)
        counts[p.x_bits | p.z_bits] = counts.get(p.x_bits | p.z_bits, 0) + 1
    assert len(counts) == 10
    expected = draws / 10
    sigma = np.sqrt(draws * 0.1 * 0.9)
    for support, c in counts.items():
        assert abs(c - expected) < 5 * sigma, (bin(support), c)
