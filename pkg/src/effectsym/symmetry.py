"""Canonical symmetries of the effect interval and their representations.

A :class:`SymmetryDescriptor` is the closed form every admissible
transformation reduces to: conjugation by a unitary ``U`` (kind
"unitary"), or by ``U`` composed with entrywise conjugation in the
canonical basis (kind "antiunitary"), optionally precomposed with the
orthocomplement ``A -> I - A`` (the affine family) or postcomposed with
an overall sign flip (the Hermitian triple family).  ``complement`` and
``sign`` are never both nontrivial.

Descriptors carry a gauge: ``U`` and ``exp(i theta) U`` act identically,
so :func:`gauge_normalize` pins the phase by making the first
sufficiently large entry of the first column real positive, which makes
descriptors directly comparable.

The same maps can be flattened to a :class:`AffineMapRep`: affine maps
on Hermitian matrices are real-linear in the coordinates of the
trace-orthonormal basis from :func:`hermitian_basis`, so a real
``dim^2 x dim^2`` matrix plus a constant is a faithful, serializable
black-box format.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .linalg import adjoint, as_square_array, frobenius_norm, hermitize
from .rng import Stream
from .sampling import haar_unitary

UNITARY = "unitary"
ANTIUNITARY = "antiunitary"

UNITARITY_TOL = 1e-10
GAUGE_CUTOFF = 1e-8

AFFINE = "affine"
TRIPLE_EFFECTS = "triple_effects"
TRIPLE_HERMITIAN = "triple_hermitian"
FAMILIES = (AFFINE, TRIPLE_EFFECTS, TRIPLE_HERMITIAN)


@lru_cache(maxsize=None)
def hermitian_basis(dim: int) -> np.ndarray:
    """Trace-orthonormal basis of Hermitian dim x dim matrices.

    Order: E_kk for k = 0..dim-1, then for each pair k < l (lexicographic)
    the symmetric element (E_kl + E_lk)/sqrt(2) followed by the
    antisymmetric element (i E_kl - i E_lk)/sqrt(2).  Shape
    ``(dim**2, dim, dim)``; the array is read-only and cached.
    """
    if dim < 1:
        raise ValueError("dim must be at least 1")
    mats = np.zeros((dim * dim, dim, dim), dtype=complex)
    for k in range(dim):
        mats[k, k, k] = 1.0
    idx = dim
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for k in range(dim):
        for l in range(k + 1, dim):
            mats[idx, k, l] = inv_sqrt2
            mats[idx, l, k] = inv_sqrt2
            idx += 1
            mats[idx, k, l] = 1j * inv_sqrt2
            mats[idx, l, k] = -1j * inv_sqrt2
            idx += 1
    mats.setflags(write=False)
    return mats


def encode_hermitian(a, basis: np.ndarray | None = None) -> np.ndarray:
    """Real coordinates c_k = tr(B_k A) of a Hermitian matrix."""
    m = as_square_array(a)
    if basis is None:
        basis = hermitian_basis(m.shape[0])
    return np.einsum("kij,ji->k", basis, m).real


def decode_hermitian(coords, dim: int) -> np.ndarray:
    """Inverse of :func:`encode_hermitian`."""
    c = np.asarray(coords, dtype=float)
    if c.shape != (dim * dim,):
        raise ValueError(f"expected {dim * dim} coordinates, got shape {c.shape}")
    return np.einsum("k,kij->ij", c, hermitian_basis(dim))


@dataclass(frozen=True)
class SymmetryDescriptor:
    """Closed form of a canonical symmetry; see the module docstring."""

    kind: str
    unitary: np.ndarray
    complement: bool = False
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (UNITARY, ANTIUNITARY):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.complement and self.sign == -1:
            raise ValueError("complement and sign flip cannot both be set")
        u = as_square_array(self.unitary)
        n = u.shape[0]
        defect = frobenius_norm(adjoint(u) @ u - np.eye(n))
        if defect > UNITARITY_TOL * n:
            raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
        u = u.copy()
        u.setflags(write=False)
        object.__setattr__(self, "unitary", u)

    @property
    def dim(self) -> int:
        return self.unitary.shape[0]


def apply_symmetry(d: SymmetryDescriptor, a) -> np.ndarray:
    """Evaluate the symmetry on a Hermitian matrix.

    The complement is applied inside the conjugation (the map is
    ``A -> Phi(I - A)``), the sign outside.
    """
    m = as_square_array(a)
    if m.shape[0] != d.dim:
        raise ValueError(f"dimension mismatch: descriptor {d.dim}, input {m.shape[0]}")
    if d.complement:
        m = np.eye(d.dim, dtype=complex) - m
    if d.kind == ANTIUNITARY:
        m = np.conj(m)
    out = d.unitary @ m @ adjoint(d.unitary)
    return d.sign * out


def gauge_normalize(d: SymmetryDescriptor) -> SymmetryDescriptor:
    """Fix the global phase of ``U``: first entry of column 0 with modulus
    above the cutoff becomes real positive.  The action is unchanged."""
    col = d.unitary[:, 0]
    big = np.flatnonzero(np.abs(col) > GAUGE_CUTOFF)
    z = col[big[0]]
    return replace(d, unitary=d.unitary * (np.conj(z) / abs(z)))


def compose(d1: SymmetryDescriptor, d2: SymmetryDescriptor) -> SymmetryDescriptor:
    """Descriptor of ``A -> d1(d2(A))``.

    Both inputs must live in one family: the result may carry a
    complement or a sign flip, never both.
    """
    if d1.dim != d2.dim:
        raise ValueError(f"dimension mismatch: {d1.dim} vs {d2.dim}")
    comp = d1.complement ^ d2.complement
    sign = d1.sign * d2.sign
    if comp and sign == -1:
        raise ValueError("cannot compose across families (complement with sign flip)")
    if d1.kind == ANTIUNITARY:
        u = d1.unitary @ np.conj(d2.unitary)
    else:
        u = d1.unitary @ d2.unitary
    kind = UNITARY if d1.kind == d2.kind else ANTIUNITARY
    return gauge_normalize(SymmetryDescriptor(kind, u, complement=comp, sign=sign))


def inverse(d: SymmetryDescriptor) -> SymmetryDescriptor:
    """Descriptor undoing ``d`` (kind, complement and sign are involutive).

    The undoing conjugation uses U* for the unitary kind and the plain
    transpose for the antiunitary kind (so that V conj(U) = I).
    """
    u = d.unitary.T if d.kind == ANTIUNITARY else adjoint(d.unitary)
    return gauge_normalize(SymmetryDescriptor(d.kind, u, complement=d.complement, sign=d.sign))


@dataclass(frozen=True)
class AffineMapRep:
    """Affine map on Hermitian matrices in coordinate form.

    ``linear`` is real of shape ``(dim^2, dim^2)`` acting on
    :func:`hermitian_basis` coordinates; ``constant`` is Hermitian.  The
    represented map is ``A -> decode(linear @ encode(A)) + constant``.
    """

    linear: np.ndarray
    constant: np.ndarray

    def __post_init__(self):
        c = as_square_array(self.constant)
        n = c.shape[0]
        lin = np.asarray(self.linear, dtype=float)
        if lin.shape != (n * n, n * n):
            raise ValueError(
                f"linear part has shape {lin.shape}, expected {(n * n, n * n)}"
            )
        if not np.all(np.isfinite(lin)):
            raise ValueError("linear part has non-finite entries")
        lin = lin.copy()
        lin.setflags(write=False)
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "constant", c)

    @property
    def dim(self) -> int:
        return self.constant.shape[0]


def apply_affine_rep(rep: AffineMapRep, a) -> np.ndarray:
    m = as_square_array(a)
    if m.shape[0] != rep.dim:
        raise ValueError(f"dimension mismatch: rep {rep.dim}, input {m.shape[0]}")
    return decode_hermitian(rep.linear @ encode_hermitian(m), rep.dim) + rep.constant


def to_affine_rep(d: SymmetryDescriptor) -> AffineMapRep:
    """Flatten a descriptor to coordinates by evaluating it on the basis."""
    basis = hermitian_basis(d.dim)
    const = hermitize(apply_symmetry(d, np.zeros((d.dim, d.dim))))
    cols = [encode_hermitian(apply_symmetry(d, b) - const, basis) for b in basis]
    return AffineMapRep(linear=np.column_stack(cols), constant=const)


def random_symmetry(
    dim: int,
    seed: int,
    family: str = AFFINE,
    kind: str | None = None,
    complement: bool | None = None,
    sign: int | None = None,
) -> SymmetryDescriptor:
    """Seeded random descriptor with a Haar unitary, legal for ``family``.

    Unspecified flags are drawn from the stream (only where the family
    permits a choice).  Draw order: Haar seed, then kind, then the free
    flag.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    s = Stream(seed)
    u = haar_unitary(dim, s.next_u64())
    if kind is None:
        kind = UNITARY if s.integer(2) == 0 else ANTIUNITARY
    if family == AFFINE:
        if sign not in (None, 1):
            raise ValueError("affine-family descriptors have sign +1")
        if complement is None:
            complement = s.integer(2) == 1
        return gauge_normalize(SymmetryDescriptor(kind, u, complement=complement, sign=1))
    if family == TRIPLE_EFFECTS:
        if complement not in (None, False) or sign not in (None, 1):
            raise ValueError("triple-family descriptors have no complement or sign")
        return gauge_normalize(SymmetryDescriptor(kind, u))
    if complement not in (None, False):
        raise ValueError("Hermitian-family descriptors have no complement")
    if sign is None:
        sign = 1 if s.integer(2) == 0 else -1
    return gauge_normalize(SymmetryDescriptor(kind, u, sign=sign))
