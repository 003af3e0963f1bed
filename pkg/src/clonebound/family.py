"""The covariant cloner output family and its constraint diagnostics.

A universal symmetric 1 -> 2 cloner sends the pure input direction m to
a two-qubit output of the form

    rho_out(m) = (1/4)(I + eta (m.sigma (x) I + I (x) m.sigma)
                       + sum_jk t_jk sigma_j (x) sigma_k).

`GeneralClonerParams` carries the full 3x3 t-matrix of that expansion.
Demanding covariance under rotations about m forces, in the frame where
m = z, the structure t_xx = t_yy, t_xy = -t_yx and vanishing x-z / y-z
cross terms; demanding that opposite-axis mixtures be indistinguishable
further forces t_zz = t_xx = t_yy.  `ClonerParams` is that constrained
family, parameterized by (eta, t, t_xy).

Unless stated otherwise the output for a general direction m is defined
by rotating the z-frame template with the fixed zhat -> m rotation
(`rotate_output`), i.e. the correlation matrix co-rotates with the
input direction, which is what universality means operationally.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidBlochError
from .pauli import (
    ALGEBRA_TOL,
    IDENTITY,
    SIGMA,
    STATE_TOL,
    bloch_rotation_matrix,
    su2_rotation,
    tensor,
    trace_distance,
)

#: axis pairs used by default when probing the opposite-mixture identity
CANONICAL_AXIS_PAIRS = (
    ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0)),
    ((0.0, 0.0, 1.0), (0.0, 1.0, 0.0)),
    ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)),
)


def _check_magnitude(name, value):
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    if abs(value) > 1.0 + ALGEBRA_TOL:
        raise ValueError(f"|{name}| must be <= 1, got {value!r}")
    return value


@dataclass(frozen=True)
class ClonerParams:
    """Constrained family point (eta, t, t_xy).

    t is the common diagonal correlation t_xx = t_yy = t_zz; t_xy is
    the antisymmetric off-diagonal pair (t_xy = -t_yx).
    """

    eta: float
    t: float
    t_xy: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "eta", _check_magnitude("eta", self.eta))
        object.__setattr__(self, "t", _check_magnitude("t", self.t))
        object.__setattr__(self, "t_xy", _check_magnitude("t_xy", self.t_xy))

    def as_matrix(self) -> np.ndarray:
        """The 3x3 correlation matrix in the z frame."""
        mat = self.t * np.eye(3)
        mat[0, 1] = self.t_xy
        mat[1, 0] = -self.t_xy
        return mat

    def to_json_dict(self) -> dict:
        return {"eta": self.eta, "t": self.t, "t_xy": self.t_xy}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClonerParams":
        return cls(eta=data["eta"], t=data["t"], t_xy=data.get("t_xy", 0.0))


@dataclass(frozen=True)
class GeneralClonerParams:
    """Unconstrained family point: eta plus the full 3x3 correlation matrix."""

    eta: float
    t: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eta", _check_magnitude("eta", self.eta))
        mat = np.array(self.t, dtype=float)
        if mat.shape != (3, 3):
            raise ValueError(f"t must be a 3x3 matrix, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise ValueError("t contains non-finite entries")
        if np.max(np.abs(mat)) > 1.0 + ALGEBRA_TOL:
            raise ValueError("all |t_jk| must be <= 1")
        mat.flags.writeable = False
        object.__setattr__(self, "t", mat)

    def to_json_dict(self) -> dict:
        return {"eta": self.eta, "t": [[float(v) for v in row] for row in self.t]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GeneralClonerParams":
        return cls(eta=data["eta"], t=np.asarray(data["t"], dtype=float))


@dataclass(frozen=True)
class PositivityEigenvalues:
    """The four closed-form output eigenvalues of a family point, descending."""

    lam1: float
    lam2: float
    lam3: float
    lam4: float

    def as_array(self) -> np.ndarray:
        return np.array([self.lam1, self.lam2, self.lam3, self.lam4])

    def min(self) -> float:
        return self.lam4


def _require_unit_axis(m, what="direction"):
    vec = np.asarray(m, dtype=float)
    if vec.shape != (3,) or not np.all(np.isfinite(vec)):
        raise InvalidBlochError(f"{what} must be a finite 3-vector, got {m!r}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > STATE_TOL:
        raise InvalidBlochError(f"{what} must be unit length, |m| = {norm}")
    return vec


def general_output_state(params, m) -> np.ndarray:
    """Literal family output for direction m with the t-matrix as given.

    The eta terms point along m while the correlation matrix stays in
    the lab frame; no rotation is applied to it.  `ClonerParams` inputs
    use their z-frame matrix.
    """
    vec = _require_unit_axis(m)
    tmat = params.as_matrix() if isinstance(params, ClonerParams) else params.t
    ms = vec[0] * SIGMA[0] + vec[1] * SIGMA[1] + vec[2] * SIGMA[2]
    out = tensor(IDENTITY, IDENTITY) + params.eta * (
        tensor(ms, IDENTITY) + tensor(IDENTITY, ms)
    )
    for j in range(3):
        for k in range(3):
            if tmat[j, k] != 0.0:
                out = out + tmat[j, k] * tensor(SIGMA[j], SIGMA[k])
    return out / 4.0


def output_state_z(params: ClonerParams) -> np.ndarray:
    """Constrained family output for m = z, written out entry by entry.

    Basis order |00>, |01>, |10>, |11>:

        (1/4) * [[1+2*eta+t, 0,            0,            0         ],
                 [0,         1-t,          2t+2i*t_xy,   0         ],
                 [0,         2t-2i*t_xy,   1-t,          0         ],
                 [0,         0,            0,            1-2*eta+t ]]
    """
    eta, t, t_xy = params.eta, params.t, params.t_xy
    out = np.zeros((4, 4), dtype=complex)
    out[0, 0] = 1.0 + 2.0 * eta + t
    out[1, 1] = 1.0 - t
    out[2, 2] = 1.0 - t
    out[3, 3] = 1.0 - 2.0 * eta + t
    out[1, 2] = 2.0 * t + 2.0j * t_xy
    out[2, 1] = 2.0 * t - 2.0j * t_xy
    return out / 4.0


def rotation_taking_z_to(m) -> np.ndarray:
    """The fixed SU(2) element mapping zhat to the unit vector m.

    Minimal-geodesic convention: rotate about zhat x m by arccos(m_z).
    Two special cases: m = zhat gives the identity, m = -zhat rotates
    by pi about xhat.
    """
    vec = _require_unit_axis(m)
    axis = np.array([-vec[1], vec[0], 0.0])  # zhat x m
    if np.linalg.norm(axis) < STATE_TOL:
        if vec[2] > 0.0:
            return IDENTITY.copy()
        return su2_rotation((1.0, 0.0, 0.0), np.pi)
    return su2_rotation(axis, np.arccos(np.clip(vec[2], -1.0, 1.0)))


def rotate_output(rho_z, m) -> np.ndarray:
    """Conjugate a z-frame output by U (x) U, with U = rotation_taking_z_to(m)."""
    arr = np.asarray(rho_z, dtype=complex)
    u = rotation_taking_z_to(m)
    w = tensor(u, u)
    return w @ arr @ w.conj().T


def template_state_z(params) -> np.ndarray:
    """The z-frame template state of either parameter type."""
    if isinstance(params, ClonerParams):
        return output_state_z(params)
    return general_output_state(params, (0.0, 0.0, 1.0))


def output_state(params, m) -> np.ndarray:
    """Family output for direction m with the co-rotating correlation matrix."""
    return rotate_output(template_state_z(params), m)


def embed(params: ClonerParams, m=(0.0, 0.0, 1.0)) -> GeneralClonerParams:
    """Express a constrained point as general parameters in the frame of m.

    The correlation matrix is conjugated by the zhat -> m rotation, so
    general_output_state(embed(p, m), m) equals
    rotate_output(output_state_z(p), m).
    """
    rot = bloch_rotation_matrix(rotation_taking_z_to(m))
    return GeneralClonerParams(eta=params.eta, t=rot @ params.as_matrix() @ rot.T)


def axial_covariance_residual(rho, m, n_angles: int = 32) -> float:
    """Largest commutator norm between rho and rotations about m.

    Samples n_angles equally spaced angles alpha in [0, 2pi) and
    returns max_alpha || [E (x) E, rho] ||_F with E = exp(i alpha
    m.sigma).  Zero (within tolerance) for every family member about
    its own axis.
    """
    if n_angles < 1:
        raise ValueError(f"n_angles must be >= 1, got {n_angles}")
    vec = _require_unit_axis(m)
    arr = np.asarray(rho, dtype=complex)
    ms = vec[0] * SIGMA[0] + vec[1] * SIGMA[1] + vec[2] * SIGMA[2]
    worst = 0.0
    for alpha in np.arange(n_angles) * (2.0 * np.pi / n_angles):
        e = np.cos(alpha) * IDENTITY + 1.0j * np.sin(alpha) * ms
        k = tensor(e, e)
        worst = max(worst, float(np.linalg.norm(k @ arr - arr @ k)))
    return worst


def covariance_constraint_residual(t) -> float:
    """How far a 3x3 correlation matrix is from the covariant z-frame form.

    Returns the max of |t_xx - t_yy|, |t_xy + t_yx|, |t_xz|, |t_zx|,
    |t_yz|, |t_zy|; zero exactly on matrices of the allowed structure.
    """
    mat = np.asarray(t.t if isinstance(t, GeneralClonerParams) else t, dtype=float)
    if mat.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {mat.shape}")
    return float(
        max(
            abs(mat[0, 0] - mat[1, 1]),
            abs(mat[0, 1] + mat[1, 0]),
            abs(mat[0, 2]),
            abs(mat[2, 0]),
            abs(mat[1, 2]),
            abs(mat[2, 1]),
        )
    )


def no_signaling_residual(params, axis_a, axis_b) -> float:
    """Distinguishability of the two opposite-outcome output sums.

    Builds rho_out(+a) + rho_out(-a) and rho_out(+b) + rho_out(-b)
    (each output by `output_state`, i.e. the rotated template) and
    returns the trace distance between the two sums.  For diagonal
    correlation matrices and axes (zhat, xhat) this equals
    |t_zz - t_xx|; it vanishes for every constrained family point and
    every axis pair.
    """
    a = _require_unit_axis(axis_a, "axis_a")
    b = _require_unit_axis(axis_b, "axis_b")
    template = template_state_z(params)
    side_a = rotate_output(template, a) + rotate_output(template, -a)
    side_b = rotate_output(template, b) + rotate_output(template, -b)
    return trace_distance(side_a, side_b)


def positivity_eigenvalues(params: ClonerParams) -> PositivityEigenvalues:
    """Closed-form eigenvalues of the constrained output, descending.

    The z-frame matrix block-diagonalizes: the outer levels are
    (1 +- 2 eta + t)/4 and the central 2x2 block contributes
    (1 - t +- 2 sqrt(t^2 + t_xy^2))/4.
    """
    eta, t, t_xy = params.eta, params.t, params.t_xy
    pair = 2.0 * np.hypot(t, t_xy)
    values = sorted(
        (
            (1.0 + 2.0 * eta + t) / 4.0,
            (1.0 - 2.0 * eta + t) / 4.0,
            (1.0 - t + pair) / 4.0,
            (1.0 - t - pair) / 4.0,
        ),
        reverse=True,
    )
    return PositivityEigenvalues(*values)


def clone_fidelity(params) -> float:
    """Fidelity (1 + eta)/2 of each clone against a pure input."""
    return (1.0 + params.eta) / 2.0
