"""Lift spectra three ways, plus eigenvector construction and comparison.

The default route maps the quotient matrix through each irreducible
representation and solves the resulting small dense eigenproblems. The
character route recovers eigenvalues from power sums (Newton's identities,
cross-checked against a determinant formula), and the brute-force route
diagonalizes the explicit lift. All three must agree, and the test suite
holds them to that.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .groups import GroupTable
from .reps import CharacterTable, Irrep, IrrepSet
from .voltage import (
    GroupAlgebraMatrix,
    LiftDigraph,
    VoltageDigraph,
    algebra_matmul,
    associated_matrix,
    build_lift,
)

# Power-sum root recovery is ill-conditioned as the degree grows; refuse
# above the hard cap and warn above the soft one.
CHARSUM_HARD_CAP = 32
CHARSUM_WARN_DEGREE = 12

EIG_RESIDUAL_FACTOR = 1e-8
ZERO_VECTOR_NORM = 1e-12
DEFECTIVE_COND_LIMIT = 1e12


class SpectrumError(ValueError):
    """Raised for eigensolver failures, size caps, and inconsistent inputs."""


# ---------------------------------------------------------------------------
# Spectrum multisets


@dataclass(frozen=True)
class SpectrumMultiset:
    """Clustered eigenvalues with multiplicities.

    Entries are sorted by descending real part, then ascending imaginary
    part; total multiplicity equals the matrix dimension.
    """

    entries: tuple  # of (complex value, int multiplicity)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> np.ndarray:
        """All eigenvalues with repetition, in entry order."""
        return np.concatenate(
            [np.full(m, v, dtype=complex) for v, m in self.entries]
        ) if self.entries else np.empty(0, dtype=complex)

    def __str__(self):
        return ", ".join(f"{format_eigenvalue(v)}^{m}" for v, m in self.entries)


def format_eigenvalue(z: complex) -> str:
    """Compact text form: integers stay integers, reals drop the imag part."""
    def fmt_real(x):
        r = round(x)
        return str(int(r)) if abs(x - r) < 1e-9 else f"{x:.10g}"

    if abs(z.imag) < 1e-9:
        return fmt_real(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt_real(z.real)}{sign}{fmt_real(abs(z.imag))}i"


def cluster_spectrum(values: Sequence[complex], tol: float) -> SpectrumMultiset:
    """Single-linkage clustering of eigenvalues in the complex plane.

    Any two values within tol are linked; each cluster is reported at its
    mean, which for a smeared multiple eigenvalue is far more accurate
    than the individual values (the sum is trace-exact). O(m^2) pairwise
    linking; fine at desk scale.
    """
    vals = sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))
    m = len(vals)
    if not m:
        return SpectrumMultiset(entries=())
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    arr = np.asarray(vals, dtype=complex)
    for i in range(m):
        # values are sorted by real part: once the real gap alone exceeds
        # tol, no later value can link to i
        for j in range(i + 1, m):
            if arr[j].real - arr[i].real >= tol:
                break
            if abs(arr[j] - arr[i]) < tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(vals[i])
    entries = [(complex(np.mean(c)), len(c)) for c in groups.values()]
    entries.sort(key=lambda e: (-e[0].real, e[0].imag))
    return SpectrumMultiset(entries=tuple(entries))


def _sorted(vals):
    return sorted(vals, key=lambda z: (complex(z).real, complex(z).imag))


@dataclass(frozen=True)
class MatchReport:
    """Result of a tolerance-aware multiset comparison."""

    matched: bool
    worst_distance: float
    count_left: int
    count_right: int
    message: str = ""

    def __str__(self):
        verdict = "MATCH" if self.matched else "MISMATCH"
        extra = f" ({self.message})" if self.message else ""
        return f"{verdict} (worst {self.worst_distance:.1e}){extra}"


def spectra_equal(a: SpectrumMultiset, b: SpectrumMultiset, tol: float) -> MatchReport:
    """Greedy minimal-distance matching of two eigenvalue multisets.

    Both sides are sorted, then each left value grabs its nearest unused
    right value. Adequate whenever tol is far below the eigenvalue gaps;
    mismatch is reported, never raised.
    """
    va = _sorted(a.values())
    vb = _sorted(b.values())
    if len(va) != len(vb):
        return MatchReport(
            matched=False,
            worst_distance=float("inf"),
            count_left=len(va),
            count_right=len(vb),
            message=f"sizes differ: {len(va)} vs {len(vb)}",
        )
    if not va:
        return MatchReport(True, 0.0, 0, 0)
    vb_arr = np.asarray(vb, dtype=complex)
    used = np.zeros(len(vb), dtype=bool)
    worst = 0.0
    for x in va:
        dist = np.abs(vb_arr - complex(x))
        dist[used] = np.inf
        j = int(np.argmin(dist))
        used[j] = True
        worst = max(worst, float(dist[j]))
    return MatchReport(
        matched=worst <= tol,
        worst_distance=worst,
        count_left=len(va),
        count_right=len(vb),
    )


def default_cluster_tol(d: VoltageDigraph) -> float:
    """1e-9 * (1 + the lift adjacency 1-norm), computed from the base."""
    # the 1-norm of the lift adjacency equals the maximum in-degree of the
    # base (each lift column replicates one base column's count)
    max_in = int(d.in_degrees().max()) if d.arcs else 0
    return 1e-9 * (1 + max_in)


# ---------------------------------------------------------------------------
# Dense eigensolver wrapper


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs plus per-pair residuals.

    ``vector_ok[i]`` marks pairs whose residual meets the bound
    1e-8 * (1 + ||M||); eigenvalues are always reported, but vectors of
    defective matrices may fail the bound and are flagged instead of
    trusted.
    """

    dim: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns paired with eigenvalues
    residuals: np.ndarray
    residual_bound: float
    vector_ok: np.ndarray


def eig(m: np.ndarray) -> EigenDecomposition:
    """Eigenpairs of a general dense complex matrix, residual-checked."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectrumError(f"matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise SpectrumError("matrix has non-finite entries")
    try:
        vals, vecs = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(f"eigensolver did not converge: {exc}") from exc
    if m.size:
        res = np.linalg.norm(m @ vecs - vecs * vals, axis=0)
        scale = np.maximum(np.linalg.norm(vecs, axis=0), 1e-300)
        res = res / scale
    else:
        res = np.empty(0)
    bound = EIG_RESIDUAL_FACTOR * (1 + np.linalg.norm(m, 2)) if m.size else 0.0
    return EigenDecomposition(
        dim=m.shape[0],
        eigenvalues=vals,
        eigenvectors=vecs,
        residuals=res,
        residual_bound=bound,
        vector_ok=res <= bound,
    )


# ---------------------------------------------------------------------------
# Representation route


def rho_matrix(b: GroupAlgebraMatrix, irrep: Irrep) -> np.ndarray:
    """Apply an irrep entrywise: each algebra entry becomes a d x d block."""
    r = b.size
    d = irrep.dim
    out = np.zeros((r * d, r * d), dtype=complex)
    for u in range(r):
        for v in range(r):
            block = np.zeros((d, d), dtype=complex)
            for g, c in enumerate(b.entry(u, v).coeffs):
                if c:
                    block += c * irrep.matrices[g]
            out[u * d:(u + 1) * d, v * d:(v + 1) * d] = block
    return out


def lift_spectrum_repr(
    d: VoltageDigraph, s: IrrepSet, tol: Optional[float] = None
) -> SpectrumMultiset:
    """Full lift spectrum from the per-irrep quotient eigenproblems.

    Each eigenvalue of the image of the quotient matrix under irrep i is
    inserted with multiplicity dim_i.
    """
    if s.group.order != d.group.order:
        raise SpectrumError("irrep set and digraph use different groups")
    tol = default_cluster_tol(d) if tol is None else tol
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    b = associated_matrix(d)
    values: List[complex] = []
    for irrep in s.irreps:
        dec = eig(rho_matrix(b, irrep))
        for v in dec.eigenvalues:
            values.extend([complex(v)] * irrep.dim)
    spectrum = cluster_spectrum(values, tol)
    assert spectrum.total == d.order * d.group.order
    return spectrum


def lift_spectrum_bruteforce(
    d: VoltageDigraph, tol: Optional[float] = None, max_order: int = 2000
) -> SpectrumMultiset:
    """Spectrum of the explicit lift adjacency matrix (the oracle path)."""
    tol = default_cluster_tol(d) if tol is None else tol
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    rn = d.order * d.group.order
    if rn > max_order:
        raise SpectrumError(f"lift order {rn} exceeds brute-force cap {max_order}")
    lift = build_lift(d)
    dec = eig(lift.adjacency.astype(float))
    return cluster_spectrum(dec.eigenvalues, tol)


# ---------------------------------------------------------------------------
# Character / power-sum route


@dataclass(frozen=True)
class PowerSums:
    """Power sums s_1..s_L of a degree-d multiset of complex numbers."""

    sums: tuple
    degree: int

    def __post_init__(self):
        if len(self.sums) < self.degree:
            raise SpectrumError(
                f"need at least {self.degree} power sums, got {len(self.sums)}"
            )


def power_sums_from_characters(
    b: GroupAlgebraMatrix, chi: np.ndarray, length: int
) -> PowerSums:
    """s_l = chi(trace(B^l)) for l = 1..length, exact in the group algebra."""
    chi = np.asarray(chi, dtype=complex)
    sums = []
    power = b
    for _ in range(length):
        sums.append(power.trace().apply_character(chi))
        power = algebra_matmul(power, b)
    return PowerSums(sums=tuple(sums), degree=length)


def power_sums_by_walk_enumeration(
    d: VoltageDigraph, chi: np.ndarray, length: int
) -> tuple:
    """Independent oracle: sum chi over all closed walks' net voltages.

    Enumerates every closed walk of each length directly; exponential, so
    only sensible for very short lengths.
    """
    chi = np.asarray(chi, dtype=complex)
    group = d.group
    out_arcs: List[List[Tuple[int, int]]] = [[] for _ in range(d.order)]
    for u, v, x in d.arcs:
        out_arcs[u].append((v, x))
    sums = []
    for ell in range(1, length + 1):
        total = 0j
        for start in range(d.order):
            stack = [(start, group.identity, 0)]
            while stack:
                vertex, voltage, steps = stack.pop()
                if steps == ell:
                    if vertex == start:
                        total += chi[voltage]
                    continue
                for head, x in out_arcs[vertex]:
                    stack.append((head, group.mul_idx(voltage, x), steps + 1))
        sums.append(complex(total))
    return tuple(sums)


def _newton_poly_coeffs(sums: Sequence[complex], degree: int) -> np.ndarray:
    """Monic polynomial coefficients (highest power first) via Newton's
    identities: k*e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} s_j."""
    e = [1.0 + 0j]
    for k in range(1, degree + 1):
        acc = 0j
        for j in range(1, k + 1):
            acc += (-1) ** (j - 1) * e[k - j] * sums[j - 1]
        e.append(acc / k)
    return np.array([(-1) ** k * e[k] for k in range(degree + 1)], dtype=complex)


def _determinant_poly_coeffs(sums: Sequence[complex], degree: int) -> np.ndarray:
    """Same polynomial from the (d+1) x (d+1) power-sum determinant.

    Row 0 holds z^d .. z, 1; row k holds (s_k, s_{k-1}, ..., s_1, k, 0, ...).
    Cofactor expansion along row 0 gives each coefficient as a numeric
    minor determinant; dividing by d! makes the polynomial monic.
    """
    d = degree
    c = np.zeros((d + 1, d + 1), dtype=complex)
    for k in range(1, d + 1):
        for col in range(k):
            c[k, col] = sums[k - 1 - col]
        c[k, k] = k
    coeffs = np.empty(d + 1, dtype=complex)
    for j in range(d + 1):
        minor = np.delete(np.delete(c, 0, axis=0), j, axis=1)
        det = np.linalg.det(minor) if minor.size else 1.0
        coeffs[j] = (-1) ** j * det / factorial(d)
    return coeffs


def roots_from_power_sums(p: PowerSums, max_degree: int = CHARSUM_HARD_CAP) -> np.ndarray:
    """Recover the unique multiset with the given power sums.

    Both the Newton-identity recurrence and the determinant formula are
    evaluated and must agree coefficientwise; roots come from the Newton
    polynomial via a companion-matrix eigensolve.
    """
    d = p.degree
    if d < 1:
        raise SpectrumError("degree must be >= 1")
    if d > max_degree:
        raise SpectrumError(f"degree {d} exceeds cap {max_degree}")
    sums = p.sums[:d]
    newton = _newton_poly_coeffs(sums, d)
    determinant = _determinant_poly_coeffs(sums, d)
    smax = max(1.0, max(abs(s) for s in sums))
    if np.abs(newton - determinant).max() > 1e-8 * smax ** d:
        raise SpectrumError(
            "Newton-identity and determinant polynomials disagree: "
            f"max coefficient gap {np.abs(newton - determinant).max():.3e}"
        )
    roots = np.roots(newton)
    # residual check: the recovered roots must reproduce the input sums
    recomputed = [complex(np.sum(roots ** k)) for k in range(1, d + 1)]
    worst = max(abs(a - b) for a, b in zip(recomputed, sums))
    if worst > 1e-5 * smax:
        raise SpectrumError(
            f"inconsistent power sums: round-trip error {worst:.3e}"
        )
    return roots


def lift_spectrum_charsum(
    d: VoltageDigraph, t: CharacterTable, tol: Optional[float] = None
) -> SpectrumMultiset:
    """Lift spectrum from character power sums and root recovery."""
    if t.group.order != d.group.order:
        raise SpectrumError("character table and digraph use different groups")
    tol = default_cluster_tol(d) if tol is None else tol
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    r = d.order
    dims = t.dims
    for di in dims:
        if r * di > CHARSUM_HARD_CAP:
            raise SpectrumError(
                f"power-sum degree {r * di} exceeds conditioning cap {CHARSUM_HARD_CAP}"
            )
        if r * di > CHARSUM_WARN_DEGREE:
            warnings.warn(
                f"power-sum degree {r * di} above {CHARSUM_WARN_DEGREE}; "
                "root recovery may lose accuracy",
                stacklevel=2,
            )
    b = associated_matrix(d)
    values: List[complex] = []
    for chi, di in zip(t.rows, dims):
        sums = power_sums_from_characters(b, chi, r * di)
        roots = roots_from_power_sums(sums)
        for z in roots:
            values.extend([complex(z)] * di)
    spectrum = cluster_spectrum(values, tol)
    assert spectrum.total == r * d.group.order
    return spectrum


# ---------------------------------------------------------------------------
# Eigenvectors of the lift


@dataclass(frozen=True)
class LiftEigenvectors:
    """Eigenpairs of the lift plus bookkeeping about exclusions.

    ``pairs`` holds (eigenvalue, vector) with vectors indexed in lift
    vertex order (vertex-major, element-index minor). Irreps whose quotient
    image is defective are skipped and listed in ``skipped_irreps``.
    """

    pairs: tuple
    zero_vectors_excluded: int
    skipped_irreps: tuple


def lift_eigenvectors(d: VoltageDigraph, s: IrrepSet) -> LiftEigenvectors:
    """Lift eigenvectors assembled from quotient eigenvectors.

    For each irrep, each eigencolumn of the quotient image, and each of the
    dim coordinate slots, the lift vector takes value (rho(h) x_v c)_k at
    lift vertex (v, h), where x_v is vertex v's row block of the quotient
    eigenvector matrix.
    """
    group = d.group
    n = group.order
    r = d.order
    b = associated_matrix(d)
    pairs = []
    skipped = []
    zeros = 0
    for i, irrep in enumerate(s.irreps):
        di = irrep.dim
        m = rho_matrix(b, irrep)
        dec = eig(m)
        u_mat = dec.eigenvectors
        if m.size:
            cond = np.linalg.cond(u_mat)
            if (
                not np.isfinite(cond)
                or cond > DEFECTIVE_COND_LIMIT
                or not np.all(dec.vector_ok)
            ):
                skipped.append(i)
                continue
        # x_blocks[v] is the di x (r*di) row block for base vertex v
        for c in range(r * di):
            mu = complex(dec.eigenvalues[c])
            col = u_mat[:, c]
            # value at lift vertex (v, h), all h at once: rho(h) @ x_v_col
            fibers = np.empty((r, n, di), dtype=complex)
            for v in range(r):
                xc = col[v * di:(v + 1) * di]
                fibers[v] = np.einsum("hij,j->hi", irrep.matrices, xc)
            for k in range(di):
                w = fibers[:, :, k].reshape(r * n)
                if np.linalg.norm(w) < ZERO_VECTOR_NORM:
                    zeros += 1
                    continue
                pairs.append((mu, w))
    return LiftEigenvectors(
        pairs=tuple(pairs),
        zero_vectors_excluded=zeros,
        skipped_irreps=tuple(skipped),
    )


# ---------------------------------------------------------------------------
# JSON output


def spectrum_to_json(spectrum: SpectrumMultiset, method: str) -> dict:
    return {
        "order": spectrum.total,
        "eigenvalues": [
            {"re": v.real, "im": v.imag, "mult": m} for v, m in spectrum.entries
        ],
        "method": method,
    }


def spectrum_to_text(spectrum: SpectrumMultiset) -> str:
    return "\n".join(f"{format_eigenvalue(v)}^{m}" for v, m in spectrum.entries)
