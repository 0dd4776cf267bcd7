"""DFT-consistent coordinate and differentiation matrices.

The coordinate-multiplication matrix built here is not the naive
``diag(u_k)``: multiplying samples by their raw coordinate values is the
continuum operation, and transplanting it verbatim onto a finite periodic
grid breaks the exact Fourier duality that the scaling construction
depends on.  Instead the diagonal is the sinc-corrected form

    U[n, n] = (sqrt(N)/pi) * sin(pi*n/N),

which agrees with ``n*h`` to O((n/N)^3) for central samples but bends the
coordinate ramp onto the circulant topology of the grid.  Its Fourier
dual

    D = F^-1 U F

is then an exact differentiation-operator analogue by construction: U
and D are precisely Fourier duals of each other, in both directions, to
machine precision.

The discrete scaling generator is the symmetrized product
``(U D + D U)/2``.  Algebraically this is Hermitian whenever U and D
are; numerically it is re-Hermitized as ``(G + G^H)/2`` to scrub the
last ulp of rounding asymmetry, keeping downstream unitarity guarantees
tight.

The asymmetric forward-difference alternative (which is *not* symmetric,
hence not Hermitian, hence useless as a generator) is deliberately not
provided here; the test suite constructs it locally as a documented
negative example justifying this design.

Odd-N centered grids have an asymmetric index interval; they are
supported, but symmetry-based identities (zero trace of U, for example)
are suspended there, and :class:`OperatorSet` flags them via
``grid_symmetric``.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from .dft import IndexScheme, SampleGrid, dft_matrix, index_grid
from .linalg import HermitianEigenDecomposition, hermitian_eig

__all__ = [
    "coord_matrix",
    "diff_matrix",
    "scaling_generator",
    "OperatorSet",
    "operator_set",
]


def coord_matrix(grid: SampleGrid) -> np.ndarray:
    """Sinc-corrected coordinate-multiplication matrix for ``grid``.

    Returns a real diagonal N x N matrix with
    ``U[n, n] = (sqrt(N)/pi) * sin(pi*n/N)`` for each index label n of the
    grid; off-diagonal entries are exactly zero.
    """
    n = grid.indices
    big_n = grid.n_samples
    diag = (np.sqrt(big_n) / np.pi) * np.sin(np.pi * n / big_n)
    return np.diag(diag)


def diff_matrix(ops_f: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Differentiation matrix ``D = F^-1 U F`` dual to the coordinate matrix.

    Parameters
    ----------
    ops_f : numpy.ndarray
        Unitary DFT matrix (unitarity checked to 1e-10).
    u : numpy.ndarray
        Real diagonal coordinate matrix, conformable with ``ops_f``.

    Returns
    -------
    numpy.ndarray
        Hermitian matrix ``F^H U F`` (``F^-1 = F^H`` for unitary F).
    """
    f = np.asarray(ops_f)
    u = np.asarray(u)
    if f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ValueError(f"DFT matrix must be square, got {f.shape}")
    if u.shape != f.shape:
        raise ValueError(f"shape mismatch: F is {f.shape}, U is {u.shape}")
    n = f.shape[0]
    unit_resid = abs(f @ f.conj().T - np.eye(n)).max()
    if unit_resid >= 1e-10:
        raise ValueError(
            f"diff_matrix requires a unitary F: max|F F^H - I| = {unit_resid:.3e}"
        )
    offdiag = u - np.diag(np.diag(u))
    if np.any(offdiag != 0):
        raise ValueError("coordinate matrix must be diagonal")
    if np.iscomplexobj(u) and np.any(np.diag(u).imag != 0):
        raise ValueError("coordinate matrix must be real")
    return f.conj().T @ u @ f


def scaling_generator(u: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Hermitian scaling generator ``(U D + D U)/2``.

    The anticommutator is formed exactly as written and then explicitly
    re-Hermitized with ``(G + G^H)/2``.
    """
    u = np.asarray(u)
    d = np.asarray(d)
    if u.shape != d.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"size mismatch: U is {u.shape}, D is {d.shape}")
    g = (u @ d + d @ u) / 2.0
    return (g + g.conj().T) / 2.0


class OperatorSet:
    """The matrix family ``(F, U, D, generator)`` for one ``(N, scheme)``.

    Instances are built through :func:`operator_set`, which memoizes them
    per ``(n_samples, scheme)``; all held arrays are read-only.

    Attributes
    ----------
    n_samples : int
    scheme : IndexScheme
    grid : SampleGrid
        The sampling grid the operators act on.
    f : numpy.ndarray
        Unitary DFT matrix.
    u : numpy.ndarray
        Real diagonal coordinate matrix.
    d : numpy.ndarray
        Differentiation matrix ``F^-1 U F``.
    generator : numpy.ndarray
        Hermitian scaling generator ``(U D + D U)/2``.
    grid_symmetric : bool
        True when the index set is closed under negation (symmetry-based
        identities apply); False for odd-N centered grids.
    """

    def __init__(self, grid: SampleGrid, f, u, d, generator):
        self.grid = grid
        self.n_samples = grid.n_samples
        self.scheme = grid.scheme
        self.f = f
        self.u = u
        self.d = d
        self.generator = generator
        self.grid_symmetric = bool(
            np.array_equal(np.sort(-grid.indices), grid.indices)
        )

    @cached_property
    def generator_eig(self) -> HermitianEigenDecomposition:
        """Spectral decomposition of the generator (computed once, cached)."""
        return hermitian_eig(self.generator)

    def __repr__(self) -> str:
        return (
            f"OperatorSet(n_samples={self.n_samples}, "
            f"scheme={self.scheme.value!r}, grid_symmetric={self.grid_symmetric})"
        )


@lru_cache(maxsize=None)
def operator_set(n_samples: int, scheme: IndexScheme) -> OperatorSet:
    """Build (or fetch the cached) :class:`OperatorSet` for ``(N, scheme)``."""
    grid = index_grid(n_samples, IndexScheme(scheme))
    f = dft_matrix(grid.n_samples, grid.scheme)
    u = coord_matrix(grid)
    d = diff_matrix(f, u)
    g = scaling_generator(u, d)
    for arr in (u, d, g):
        arr.setflags(write=False)
    return OperatorSet(grid, f, u, d, g)
