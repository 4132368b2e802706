//! Rigid maps, the flow of a screw field, and its inverse.
//!
//! Integrating a screw field for a time `t` gives a rigid map; conversely
//! every rigid map is the time-one flow of some screw (Chasles). [`exp`]
//! computes the flow in closed form and [`log`] recovers the screw on the
//! principal branch, rotation angle in `[0, π]`.

use core::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::screw::{Screw, ScrewAxis};
use crate::vector::{Mat3, Point, Vec3};

/// Bound on `RᵀR − I` and `det R − 1` accepted by [`RigidMap::new`].
pub const ROTATION_TOL: f64 = 1e-10;

/// Rotation angles below this are treated as pure translations by [`log`].
pub const SMALL_ANGLE: f64 = 1e-8;

/// Switch to truncated series for the trigonometric coefficients.
const SERIES_ANGLE: f64 = 1e-2;

/// `P ↦ R (P − O) + O + t` for the global origin `O`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMap {
    rotation: Mat3,
    translation: Vec3,
}

impl RigidMap {
    pub const IDENTITY: RigidMap = RigidMap {
        rotation: Mat3::IDENTITY,
        translation: Vec3::ZERO,
    };

    /// Validates `R` without re-normalizing it.
    pub fn new(rotation: Mat3, translation: Vec3) -> Result<Self> {
        if rotation.to_row_major().iter().any(|x| !x.is_finite()) || !translation.is_finite() {
            return Err(Error::NonFinite);
        }
        if rotation.orthonormality_defect() > ROTATION_TOL
            || (rotation.determinant() - 1.0).abs() > ROTATION_TOL
        {
            return Err(Error::InvalidRotation);
        }
        Ok(RigidMap {
            rotation,
            translation,
        })
    }

    pub fn from_translation(t: Vec3) -> Self {
        RigidMap {
            rotation: Mat3::IDENTITY,
            translation: t,
        }
    }

    pub fn rotation(&self) -> Mat3 {
        self.rotation
    }

    pub fn translation(&self) -> Vec3 {
        self.translation
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::from_coords(self.rotation * p.coords + self.translation)
    }

    /// Rotates a free vector.
    pub fn apply_vector(&self, v: Vec3) -> Vec3 {
        self.rotation * v
    }

    pub fn inverse(&self) -> RigidMap {
        let rt = self.rotation.transpose();
        RigidMap {
            rotation: rt,
            translation: -(rt * self.translation),
        }
    }

    pub fn approx_eq(&self, other: &RigidMap, tol: f64) -> bool {
        self.rotation.approx_eq(&other.rotation, tol)
            && self.translation.approx_eq(other.translation, tol)
    }
}

/// `g2 ∘ g1`: first `g1`, then `g2`.
pub fn compose(g2: &RigidMap, g1: &RigidMap) -> RigidMap {
    RigidMap {
        rotation: g2.rotation * g1.rotation,
        translation: g2.rotation * g1.translation + g2.translation,
    }
}

/// Coefficients `sinθ/θ`, `(1 − cosθ)/θ²`, `(θ − sinθ)/θ³`.
fn rodrigues_coefficients(theta: f64) -> (f64, f64, f64) {
    if theta < SERIES_ANGLE {
        let t2 = theta * theta;
        let t4 = t2 * t2;
        (
            1.0 - t2 / 6.0 + t4 / 120.0,
            0.5 - t2 / 24.0 + t4 / 720.0,
            1.0 / 6.0 - t2 / 120.0 + t4 / 5040.0,
        )
    } else {
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        let t2 = theta * theta;
        (s / theta, (1.0 - c) / t2, (theta - s) / (t2 * theta))
    }
}

/// Rotation by `|ω|` about the direction of `ω`.
pub fn rotation_exp(omega: Vec3) -> Mat3 {
    let (a, b, _) = rodrigues_coefficients(omega.norm());
    let k = Mat3::skew(omega);
    Mat3::IDENTITY + k * a + k * k * b
}

/// Time-`t` flow of the screw field.
///
/// For resultant `ω` and field `v` at the origin, the flow of
/// `P' = v + ω × P` is `P ↦ R P + V v t` with `R = exp([ωt]×)` and
/// `V = I + B [ωt]× + C [ωt]×²`. Equivalently a rotation by `|ω|t` about
/// the screw axis followed by a slide `𝓈 t` along it.
pub fn exp(s: &Screw, t: f64) -> RigidMap {
    let omega = s.resultant() * t;
    let v = s.moment_at_origin() * t;
    let (a, b, c) = rodrigues_coefficients(omega.norm());
    let k = Mat3::skew(omega);
    let k2 = k * k;
    let rotation = Mat3::IDENTITY + k * a + k2 * b;
    let v_mat = Mat3::IDENTITY + k * b + k2 * c;
    RigidMap {
        rotation,
        translation: v_mat * v,
    }
}

/// Result of [`log`]: a rotation about `axis` by `angle` composed with a
/// translation `slide` along it, or a plain translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaslesDecomposition {
    pub axis: ScrewAxis,
    /// Radians in `[0, π]`.
    pub angle: f64,
    /// Signed translation along the axis direction.
    pub slide: f64,
    /// Set exactly when the rotation is (numerically) the identity.
    pub pure_translation: Option<Vec3>,
}

impl ChaslesDecomposition {
    /// The screw whose time-one flow is the decomposed map.
    pub fn screw(&self) -> Screw {
        if let Some(t) = self.pure_translation {
            return Screw::from_free_vector(t);
        }
        match self.axis {
            ScrewAxis::Line { point, direction } => {
                Screw::from_motor(point, direction * self.angle, direction * self.slide)
            }
            ScrewAxis::Degenerate => Screw::ZERO,
        }
    }
}

fn vee_antisymmetric(r: &Mat3) -> Vec3 {
    let m = &r.rows;
    Vec3::new(m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]) * 0.5
}

/// Unit rotation axis for angles past `π/2`, read from the symmetric part
/// `(R + Rᵀ)/2 − cosθ I = (1 − cosθ) e eᵀ`.
fn axis_from_symmetric_part(r: &Mat3, cos_theta: f64, w: Vec3) -> Vec3 {
    let sym = (*r + r.transpose()) * 0.5 - Mat3::IDENTITY * cos_theta;
    let k = (0..3)
        .max_by(|&i, &j| sym.rows[i][i].total_cmp(&sym.rows[j][j]))
        .unwrap_or(0);
    let e = sym.column(k);
    let e = e / e.norm();
    if e.dot(w) < 0.0 {
        -e
    } else {
        e
    }
}

/// Chasles decomposition of a rigid map.
pub fn log(g: &RigidMap) -> Result<ChaslesDecomposition> {
    let g = RigidMap::new(g.rotation, g.translation)?;
    let r = g.rotation;
    let cos_theta = ((r.trace() - 1.0) * 0.5).clamp(-1.0, 1.0);
    let w = vee_antisymmetric(&r);
    let theta = libm::atan2(w.norm(), cos_theta);

    if theta < SMALL_ANGLE {
        return Ok(ChaslesDecomposition {
            axis: ScrewAxis::Degenerate,
            angle: 0.0,
            slide: 0.0,
            pure_translation: Some(g.translation),
        });
    }

    let e = if theta < FRAC_PI_2 {
        w / w.norm()
    } else {
        axis_from_symmetric_part(&r, cos_theta, w)
    };
    let omega = e * theta;

    // V⁻¹ = I − ½[ω]× + D [ω]×², D = (1 − (θ sinθ) / (2(1 − cosθ))) / θ²
    let d = if theta < SERIES_ANGLE {
        let t2 = theta * theta;
        1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0
    } else {
        let half = theta * 0.5;
        (1.0 - half * libm::cos(half) / libm::sin(half)) / (theta * theta)
    };
    let k = Mat3::skew(omega);
    let v_inv = Mat3::IDENTITY - k * 0.5 + k * k * d;
    let v = v_inv * g.translation;

    let screw = Screw::new(omega, v);
    Ok(ChaslesDecomposition {
        axis: screw.axis(),
        angle: theta,
        slide: v.dot(e),
        pure_translation: None,
    })
}
