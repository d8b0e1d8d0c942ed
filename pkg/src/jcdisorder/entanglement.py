"""Entanglement measures and density-matrix utilities.

Two-qubit matrices use the fixed basis order |11>, |10>, |01>, |00| for the
atom pair (A, B); every matrix is transcribed into this order once, at
construction. Eigenvalues within 1e-10 of the valid range are clamped;
anything more negative than -1e-8 raises instead of being hidden.
"""

from __future__ import annotations

import numpy as np

from .errors import EigensolverError, NumericalError, ValidationError

CLAMP = 1e-10
HARD = 1e-8

# sigma_y (x) sigma_y in the |11>,|10>,|01>,|00> order: antidiagonal -1,1,1,-1
_YY = np.zeros((4, 4))
_YY[0, 3] = _YY[3, 0] = -1.0
_YY[1, 2] = _YY[2, 1] = 1.0


def _as_density(rho, dim: int, tol: float) -> np.ndarray:
    m = np.asarray(rho, dtype=complex)
    if m.shape != (dim, dim):
        raise ValidationError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValidationError("density matrix contains non-finite entries")
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise ValidationError(f"matrix is not Hermitian within {tol}")
    if abs(np.trace(m).real - 1.0) > tol or abs(np.trace(m).imag) > tol:
        raise ValidationError(f"trace must be 1 within {tol}")
    return m


def _clamped_unit_spectrum(eigs: np.ndarray) -> np.ndarray:
    if np.min(eigs) < -HARD:
        raise ValidationError(f"eigenvalue {np.min(eigs):.3e} below -{HARD}; state is not positive")
    lam = np.where(eigs < CLAMP, 0.0, eigs)
    return np.where(lam > 1.0, np.minimum(lam, 1.0 + CLAMP) - CLAMP, lam)


def von_neumann_entropy(rho) -> float:
    """Entropy in bits of a single-qubit density matrix, 0*log0 = 0."""
    m = _as_density(rho, 2, 1e-12)
    lam = _clamped_unit_spectrum(np.linalg.eigvalsh(m))
    nz = lam[lam > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def qubit_entropy(a, b) -> np.ndarray:
    """Vectorized entropy of the qubit state [[a, i*b], [-i*b, 1-a]].

    a is the ground-state population, b the (real) magnitude of the
    imaginary coherence. The Bloch radius is r = sqrt((2a-1)^2 + 4b^2) and
    the spectrum {(1-r)/2, (1+r)/2}; radii within 1e-10 of 1 are snapped to
    1 so that pure states give exactly 0.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    r = np.sqrt((2.0 * a - 1.0) ** 2 + 4.0 * b * b)
    r = np.where(r > 1.0 - CLAMP, 1.0, r)
    lo = 0.5 * (1.0 - r)
    hi = 0.5 * (1.0 + r)
    out = np.zeros(np.broadcast(a, b).shape)
    mask = lo > 0.0
    lo_m = np.where(mask, lo, 0.5)
    hi_m = np.where(mask, hi, 0.5)
    ent = -(lo_m * np.log2(lo_m) + hi_m * np.log2(hi_m))
    out = np.where(mask, ent, 0.0)
    return out if out.ndim else float(out)


def concurrence_general(rho) -> float:
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} with l_i the
    descending eigenvalues of rho * (YY rho^* YY).
    """
    m = _as_density(rho, 4, 1e-10)
    tilde = _YY @ m.conj() @ _YY
    try:
        eigs = np.linalg.eigvals(m @ tilde)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver failed: {exc}", matrix=m) from exc
    if np.max(np.abs(eigs.imag)) > HARD:
        raise NumericalError(
            f"rho*rho_tilde spectrum has imaginary part {np.max(np.abs(eigs.imag)):.3e}"
        )
    lam = eigs.real
    if np.min(lam) < -HARD:
        raise NumericalError(f"rho*rho_tilde eigenvalue {np.min(lam):.3e} below -{HARD}")
    lam = np.sqrt(np.sort(np.maximum(lam, 0.0))[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def xstate_concurrence_values(p11, p10, p01, p00, corner_abs, center_abs):
    """Closed-form X-state concurrence from populations and |coherences|.

    Vectorized and unvalidated; the public wrapper checks invariants.
    """
    return 2.0 * np.maximum(
        0.0,
        np.maximum(
            corner_abs - np.sqrt(np.maximum(p10 * p01, 0.0)),
            center_abs - np.sqrt(np.maximum(p11 * p00, 0.0)),
        ),
    )


def concurrence_xstate(diag, corner=0j, center=0j) -> float:
    """Concurrence of an X-shaped two-qubit state.

    diag holds the populations (p11, p10, p01, p00) in basis order; corner
    is the <11|rho|00> element and center the <10|rho|01> element. X states
    carry at most these two independent coherences, which pair with
    sqrt(p10*p01) and sqrt(p11*p00) respectively.
    """
    p = np.asarray(diag, dtype=float)
    if p.shape != (4,):
        raise ValidationError(f"diag must hold 4 populations, got shape {p.shape}")
    if np.min(p) < -CLAMP:
        raise ValidationError(f"negative population {np.min(p):.3e}")
    p = np.maximum(p, 0.0)
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValidationError(f"populations sum to {p.sum()!r}, expected 1")
    corner = complex(corner)
    center = complex(center)
    # positivity of the two 2x2 blocks, with roundoff slack
    if abs(corner) ** 2 > p[0] * p[3] + HARD:
        raise ValidationError("corner coherence exceeds sqrt(p11*p00); matrix not positive")
    if abs(center) ** 2 > p[1] * p[2] + HARD:
        raise ValidationError("center coherence exceeds sqrt(p10*p01); matrix not positive")
    return float(xstate_concurrence_values(p[0], p[1], p[2], p[3], abs(corner), abs(center)))


def partial_trace_cavities(amplitudes, labels) -> np.ndarray:
    """Two-atom reduced density matrix of a pure truncated state.

    labels is the ordered list of (atomA, atomB, cavA, cavB) occupation
    tuples naming each amplitude. Cavity modes are summed over; the result
    is in the |11>,|10>,|01>,|00> atom basis.
    """
    psi = np.asarray(amplitudes, dtype=complex)
    labels = list(labels)
    if psi.shape != (len(labels),):
        raise ValidationError(f"state has {psi.shape} amplitudes for {len(labels)} labels")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-12:
        raise ValidationError(f"state norm {norm!r} is not 1 within 1e-12")
    rho = np.zeros((4, 4), dtype=complex)
    for i, (aa, ab, na, nb) in enumerate(labels):
        ii = (1 - aa) * 2 + (1 - ab)
        for j, (ba, bb, ma, mb) in enumerate(labels):
            if (na, nb) != (ma, mb):
                continue
            jj = (1 - ba) * 2 + (1 - bb)
            rho[ii, jj] += psi[i] * np.conj(psi[j])
    return rho
