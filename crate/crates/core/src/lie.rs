//! Lie-algebraic structure of the screw space.
//!
//! The bracket is the Lie bracket of screws as vector fields. Some texts use
//! the opposite sign; with ours, `[s₁, s₂]` has resultant `−s⃗₁ × s⃗₂`.
//!
//! Coordinates only enter through a [`Frame`]: it identifies screws with
//! [`Screw6`] (resultant components first, field at the frame origin last)
//! and linear forms with [`Dual6`].

use core::ops::{Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};
use crate::screw::Screw;
use crate::vector::{Mat3, Point, Vec3};

const FRAME_TOL: f64 = 1e-12;

/// `⟨s₁, s₂⟩ = s⃗₁·s₂(P) + s⃗₂·s₁(P)`, independent of `P`.
pub fn klein_product(s1: &Screw, s2: &Screw) -> f64 {
    s1.resultant().dot(s2.moment_at_origin()) + s2.resultant().dot(s1.moment_at_origin())
}

/// Lie bracket: the screw `P ↦ s⃗₂ × s₁(P) − s⃗₁ × s₂(P)`.
pub fn commutator(s1: &Screw, s2: &Screw) -> Screw {
    let (r1, r2) = (s1.resultant(), s2.resultant());
    Screw::new(
        -r1.cross(r2),
        r2.cross(s1.moment_at_origin()) - r1.cross(s2.moment_at_origin()),
    )
}

/// `trace(ad_x ad_y)`, in closed form `−4 x⃗·y⃗`.
pub fn killing_form(x: &Screw, y: &Screw) -> f64 {
    -4.0 * x.resultant().dot(y.resultant())
}

/// Origin plus a positively oriented orthonormal basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    origin: Point,
    basis: [Vec3; 3],
}

impl Frame {
    pub const IDENTITY: Frame = Frame {
        origin: Point::ORIGIN,
        basis: [Vec3::X, Vec3::Y, Vec3::Z],
    };

    pub fn new(origin: Point, basis: [Vec3; 3]) -> Result<Self> {
        if !origin.coords.is_finite() || basis.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite);
        }
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                if (basis[i].dot(basis[j]) - target).abs() > FRAME_TOL {
                    return Err(Error::InvalidFrame);
                }
            }
        }
        if (basis[0].cross(basis[1]).dot(basis[2]) - 1.0).abs() > FRAME_TOL {
            return Err(Error::InvalidFrame);
        }
        Ok(Frame { origin, basis })
    }

    /// Frame whose basis is the columns of a rotation matrix.
    pub fn from_rotation(origin: Point, rotation: &Mat3) -> Result<Self> {
        Frame::new(
            origin,
            [rotation.column(0), rotation.column(1), rotation.column(2)],
        )
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn basis(&self) -> [Vec3; 3] {
        self.basis
    }

    /// Components of a free vector in this basis.
    pub fn components(&self, v: Vec3) -> [f64; 3] {
        [
            self.basis[0].dot(v),
            self.basis[1].dot(v),
            self.basis[2].dot(v),
        ]
    }

    pub fn vector_from(&self, c: [f64; 3]) -> Vec3 {
        self.basis[0] * c[0] + self.basis[1] * c[1] + self.basis[2] * c[2]
    }
}

/// Screw coordinates in a frame: `a` resultant, `b` field at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Screw6 {
    pub a: [f64; 3],
    pub b: [f64; 3],
}

/// Coefficients of a linear form on the basis dual to `{fᵢ, mᵢ}`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual6 {
    pub c: [f64; 3],
    pub d: [f64; 3],
}

impl Screw6 {
    pub fn to_array(self) -> [f64; 6] {
        let (a, b) = (self.a, self.b);
        [a[0], a[1], a[2], b[0], b[1], b[2]]
    }

    pub fn from_array(v: [f64; 6]) -> Self {
        Screw6 {
            a: [v[0], v[1], v[2]],
            b: [v[3], v[4], v[5]],
        }
    }
}

impl Dual6 {
    pub fn to_array(self) -> [f64; 6] {
        let (c, d) = (self.c, self.d);
        [c[0], c[1], c[2], d[0], d[1], d[2]]
    }

    pub fn from_array(v: [f64; 6]) -> Self {
        Dual6 {
            c: [v[0], v[1], v[2]],
            d: [v[3], v[4], v[5]],
        }
    }

    /// Evaluates the form on screw coordinates expressed in the same frame.
    pub fn pair(&self, s: &Screw6) -> f64 {
        self.to_array()
            .iter()
            .zip(s.to_array().iter())
            .map(|(x, y)| x * y)
            .sum()
    }
}

pub fn to_frame(s: &Screw, frame: &Frame) -> Screw6 {
    Screw6 {
        a: frame.components(s.resultant()),
        b: frame.components(s.evaluate(frame.origin)),
    }
}

pub fn from_frame(v: &Screw6, frame: &Frame) -> Screw {
    Screw::from_motor(frame.origin, frame.vector_from(v.a), frame.vector_from(v.b))
}

/// The form `⟨s, ·⟩` in the frame's dual coordinates: a swap of the two
/// halves of [`to_frame`].
pub fn to_dual(s: &Screw, frame: &Frame) -> Dual6 {
    let v = to_frame(s, frame);
    Dual6 { c: v.b, d: v.a }
}

/// The involution relating screw and dual coordinates.
pub fn swap_halves(v: [f64; 6]) -> [f64; 6] {
    [v[3], v[4], v[5], v[0], v[1], v[2]]
}

/// `[f₁, f₂, f₃, m₁, m₂, m₃]`: unit applied vectors along the basis at the
/// frame origin, then the unit free vectors.
pub fn basis_screws(frame: &Frame) -> [Screw; 6] {
    let [e1, e2, e3] = frame.basis;
    let o = frame.origin;
    [
        Screw::from_applied_vector(o, e1),
        Screw::from_applied_vector(o, e2),
        Screw::from_applied_vector(o, e3),
        Screw::from_free_vector(e1),
        Screw::from_free_vector(e2),
        Screw::from_free_vector(e3),
    ]
}

/// Row-major 6×6 matrix acting on [`Screw6`] coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat6(pub [[f64; 6]; 6]);

impl Mat6 {
    pub const ZERO: Mat6 = Mat6([[0.0; 6]; 6]);

    pub fn identity() -> Self {
        let mut m = Mat6::ZERO;
        (0..6).for_each(|i| m.0[i][i] = 1.0);
        m
    }

    /// Assembles `[[ul, ur], [ll, lr]]`.
    pub fn from_blocks(ul: &Mat3, ur: &Mat3, ll: &Mat3, lr: &Mat3) -> Self {
        let mut m = Mat6::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = ul.rows[i][j];
                m.0[i][j + 3] = ur.rows[i][j];
                m.0[i + 3][j] = ll.rows[i][j];
                m.0[i + 3][j + 3] = lr.rows[i][j];
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..6).map(|i| self.0[i][i]).sum()
    }

    pub fn apply(&self, v: &Screw6) -> Screw6 {
        let x = v.to_array();
        let mut y = [0.0; 6];
        for (yi, row) in y.iter_mut().zip(self.0.iter()) {
            *yi = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        }
        Screw6::from_array(y)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

impl Index<(usize, usize)> for Mat6 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat6 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Mul for Mat6 {
    type Output = Mat6;
    fn mul(self, o: Mat6) -> Mat6 {
        let mut m = Mat6::ZERO;
        for i in 0..6 {
            for j in 0..6 {
                m.0[i][j] = (0..6).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        m
    }
}

impl Sub for Mat6 {
    type Output = Mat6;
    fn sub(self, o: Mat6) -> Mat6 {
        let mut m = self;
        for i in 0..6 {
            for j in 0..6 {
                m.0[i][j] -= o.0[i][j];
            }
        }
        m
    }
}

/// Matrix of `s' ↦ [s, s']` in the frame's coordinates:
/// `[[−s⃗×, 0], [−s(O)×, −s⃗×]]`.
pub fn ad(s: &Screw, frame: &Frame) -> Mat6 {
    let v = to_frame(s, frame);
    let neg_res = Mat3::skew(Vec3::from_array(v.a)) * -1.0;
    let neg_mom = Mat3::skew(Vec3::from_array(v.b)) * -1.0;
    Mat6::from_blocks(&neg_res, &Mat3::ZERO, &neg_mom, &neg_res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(i: usize, j: usize, k: usize) -> f64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
            _ => 0.0,
        }
    }

    fn tilted_frame() -> Frame {
        let c = libm::cos(0.4);
        let s = libm::sin(0.4);
        let r = Mat3::from_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]);
        Frame::from_rotation(Point::new(1.0, -2.0, 0.5), &r).unwrap()
    }

    #[test]
    fn frame_validation() {
        assert!(Frame::new(Point::ORIGIN, [Vec3::X, Vec3::Y, Vec3::Z]).is_ok());
        assert_eq!(
            Frame::new(Point::ORIGIN, [Vec3::Y, Vec3::X, Vec3::Z]),
            Err(Error::InvalidFrame)
        );
        assert_eq!(
            Frame::new(Point::ORIGIN, [Vec3::X * 2.0, Vec3::Y, Vec3::Z]),
            Err(Error::InvalidFrame)
        );
        assert_eq!(
            Frame::new(Point::new(f64::NAN, 0.0, 0.0), [Vec3::X, Vec3::Y, Vec3::Z]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn klein_pairing_of_basis() {
        let f = tilted_frame();
        let b = basis_screws(&f);
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { 1.0 } else { 0.0 };
                assert!((klein_product(&b[i], &b[j + 3]) - delta).abs() < 1e-14);
                assert!(klein_product(&b[i + 3], &b[j + 3]).abs() < 1e-14);
                assert!(klein_product(&b[i], &b[j]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn commutation_table() {
        let f = tilted_frame();
        let b = basis_screws(&f);
        for i in 0..3 {
            for j in 0..3 {
                assert!(commutator(&b[i + 3], &b[j + 3]).approx_eq(&Screw::ZERO, 1e-14));
                let mut ff = Screw::ZERO;
                let mut fm = Screw::ZERO;
                for k in 0..3 {
                    ff = ff - b[k] * eps(i, j, k);
                    fm = fm - b[k + 3] * eps(i, j, k);
                }
                assert!(commutator(&b[i], &b[j]).approx_eq(&ff, 1e-14));
                assert!(commutator(&b[i], &b[j + 3]).approx_eq(&fm, 1e-14));
                assert!(commutator(&b[j + 3], &b[i]).approx_eq(&(-fm), 1e-14));
            }
        }
    }

    #[test]
    fn named_brackets() {
        let b = basis_screws(&Frame::IDENTITY);
        assert_eq!(commutator(&b[0], &b[1]), -b[2]);
        assert_eq!(commutator(&b[0], &b[4]), -b[5]);
        assert_eq!(commutator(&b[3], &b[4]), Screw::ZERO);
    }

    #[test]
    fn ad_matches_commutator_on_basis() {
        let f = Frame::IDENTITY;
        let b = basis_screws(&f);
        assert_eq!(ad(&Screw::ZERO, &f).max_abs(), 0.0);
        // [f₃, m₁] = −ε₃₁₂ m₂ = −m₂
        let got = ad(&b[2], &f).apply(&to_frame(&b[3], &f));
        assert_eq!(got, to_frame(&(-b[4]), &f));
    }

    #[test]
    fn killing_examples() {
        let b = basis_screws(&tilted_frame());
        assert!((killing_form(&b[0], &b[0]) + 4.0).abs() < 1e-14);
        let s = Screw::new(Vec3::new(1.0, 2.0, 3.0), Vec3::new(-1.0, 0.0, 4.0));
        for m in &b[3..] {
            assert_eq!(killing_form(m, &s), 0.0);
        }
    }

    #[test]
    fn frame_round_trip_and_dual() {
        let f = tilted_frame();
        let s = Screw::new(Vec3::new(0.3, -1.0, 2.0), Vec3::new(1.5, 0.25, -0.75));
        let back = from_frame(&to_frame(&s, &f), &f);
        assert!(back.approx_eq(&s, 1e-14));

        let id = to_frame(&s, &Frame::IDENTITY);
        assert_eq!(id.a, s.resultant().to_array());
        assert_eq!(id.b, s.moment_at_origin().to_array());

        let d = to_dual(&s, &f);
        assert!((d.pair(&to_frame(&s, &f)) - 2.0 * s.scalar_invariant()).abs() < 1e-13);
        let v = to_frame(&s, &f).to_array();
        assert_eq!(swap_halves(swap_halves(v)), v);

        let b = basis_screws(&f);
        assert!((to_dual(&b[0], &f).pair(&to_frame(&b[3], &f)) - 1.0).abs() < 1e-14);
    }
}
