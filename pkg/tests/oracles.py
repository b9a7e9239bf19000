"""Independent brute-force oracles for the test suite.

Everything here is deliberately written the slow, obvious way (explicit
loops and closed forms) and never calls back into the code paths it
checks.
"""

import math

import numpy as np


def tensor_oracle(v, w):
    """Tensor product by explicit double loop."""
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    out = np.zeros(v.size * w.size, dtype=complex)
    for i in range(v.size):
        for j in range(w.size):
            out[i * w.size + j] = v[i] * w[j]
    return out


def outer_oracle(v):
    """Projector entries by explicit multiplication."""
    v = np.asarray(v, dtype=complex)
    out = np.zeros((v.size, v.size), dtype=complex)
    for i in range(v.size):
        for j in range(v.size):
            out[i, j] = v[i] * np.conj(v[j])
    return out


def partial_trace_oracle(rho, dims, keep):
    """Reduced operator by explicit sum over the traced index."""
    rho = np.asarray(rho, dtype=complex)
    d_s, d_a = dims
    if keep == "S":
        out = np.zeros((d_s, d_s), dtype=complex)
        for i in range(d_s):
            for j in range(d_s):
                for k in range(d_a):
                    out[i, j] += rho[i * d_a + k, j * d_a + k]
        return out
    out = np.zeros((d_a, d_a), dtype=complex)
    for i in range(d_a):
        for j in range(d_a):
            for k in range(d_s):
                out[i, j] += rho[k * d_a + i, k * d_a + j]
    return out


def gram_singular_values(mat):
    """Singular values as square roots of the Gram matrix eigenvalues."""
    mat = np.asarray(mat, dtype=complex)
    eigvals = np.linalg.eigvalsh(mat @ mat.conj().T)
    eigvals = np.clip(eigvals, 0.0, None)
    return np.sqrt(eigvals)[::-1]


def cosine_correlation(phi_s, phi_a):
    """Closed-form fringe law for the balanced entangled ensemble."""
    return math.cos(phi_s - phi_a)


def chsh_cosine_sum(a, a_prime, b, b_prime):
    """CHSH combination straight from the cosine law."""
    return (
        cosine_correlation(a, b)
        + cosine_correlation(a, b_prime)
        + cosine_correlation(a_prime, b)
        - cosine_correlation(a_prime, b_prime)
    )


def marginal_oracle(probs, side):
    """Detector marginals by explicit sums over the joint outcomes."""
    p11, p12, p21, p22 = probs
    if side == "S":
        return (p11 + p12, p21 + p22)
    return (p11 + p21, p12 + p22)


def visibility_closed_form(c1, c2, gamma):
    """Which-path fringe visibility ``2 |c1 c2 gamma|``."""
    return 2.0 * abs(c1) * abs(c2) * abs(gamma)


def control_fringe_closed_form(phi):
    """Single-photon detector-1 probability of the balanced interferometer.

    The symmetric splitter convention puts the fringe maximum a quarter
    wave past the dial zero: ``cos^2((phi - pi/2) / 2)``.
    """
    return math.cos((phi - math.pi / 2.0) / 2.0) ** 2


def random_state(rng, dim):
    """Haar-ish random normalised complex vector."""
    vec = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return vec / np.linalg.norm(vec)


def random_density(rng, dim, rank=None):
    """Random mixed state as a convex mix of random projectors."""
    rank = rank or dim
    weights = rng.random(rank)
    weights = weights / weights.sum()
    rho = np.zeros((dim, dim), dtype=complex)
    for w in weights:
        v = random_state(rng, dim)
        rho += w * np.outer(v, v.conj())
    return rho


def random_amplitude_pair(rng):
    """Random normalised complex pair (c1, c2)."""
    vec = random_state(rng, 2)
    return complex(vec[0]), complex(vec[1])
