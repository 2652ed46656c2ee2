// Copyright contributors to the ftqc-bench project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! 2×2 complex matrices for single-qubit gates.

use core::ops::Mul;

use num_complex::Complex64;

use crate::angle::Angle;
use crate::circuit::{Gate, GateKind};

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `e^{iθ}`
#[inline]
pub(crate) fn cis(theta: f64) -> Complex64 {
    c(libm::cos(theta), libm::sin(theta))
}

/// Row-major 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ]]);

    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Mat2 {
        Mat2([[m00, m01], [m10, m11]])
    }

    pub fn adjoint(&self) -> Mat2 {
        let m = &self.0;
        Mat2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        let m = &self.0;
        Mat2::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for col in 0..2 {
                worst = worst.max((self.0[r][col] - other.0[r][col]).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self.adjoint() * *self).max_diff(&Mat2::IDENTITY) <= tol
    }

    /// Equality up to a global phase, aligned on the largest entry of `self`.
    pub fn approx_eq_up_to_phase(&self, other: &Mat2, tol: f64) -> bool {
        let (mut best, mut at) = (0.0, (0, 0));
        for r in 0..2 {
            for col in 0..2 {
                let n = self.0[r][col].norm();
                if n > best {
                    best = n;
                    at = (r, col);
                }
            }
        }
        if best == 0.0 {
            return other.max_diff(&Mat2::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0))) <= tol;
        }
        let ratio = other.0[at.0][at.1] / self.0[at.0][at.1];
        let norm = ratio.norm();
        if norm == 0.0 {
            return false;
        }
        self.scale(ratio / norm).max_diff(other) <= tol
    }

    pub fn rx(theta: f64) -> Mat2 {
        let (co, si) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
        Mat2::new(c(co, 0.0), c(0.0, -si), c(0.0, -si), c(co, 0.0))
    }

    pub fn ry(theta: f64) -> Mat2 {
        let (co, si) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
        Mat2::new(c(co, 0.0), c(-si, 0.0), c(si, 0.0), c(co, 0.0))
    }

    pub fn rz(theta: f64) -> Mat2 {
        Mat2::new(cis(-theta / 2.0), c(0.0, 0.0), c(0.0, 0.0), cis(theta / 2.0))
    }

    pub fn u3(theta: f64, phi: f64, lambda: f64) -> Mat2 {
        let (co, si) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
        Mat2::new(
            c(co, 0.0),
            -cis(lambda) * si,
            cis(phi) * si,
            cis(phi + lambda) * co,
        )
    }

    /// Matrix of a fixed or parameterized single-qubit gate kind.
    pub fn of_kind(kind: GateKind, angles: &[Angle]) -> Option<Mat2> {
        let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
        let h = FRAC_1_SQRT_2;
        Some(match kind {
            GateKind::H => Mat2::new(c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)),
            GateKind::X => Mat2::new(z, o, o, z),
            GateKind::Y => Mat2::new(z, c(0.0, -1.0), c(0.0, 1.0), z),
            GateKind::Z => Mat2::new(o, z, z, -o),
            GateKind::S => Mat2::new(o, z, z, c(0.0, 1.0)),
            GateKind::Sdg => Mat2::new(o, z, z, c(0.0, -1.0)),
            GateKind::T => Mat2::new(o, z, z, c(h, h)),
            GateKind::Tdg => Mat2::new(o, z, z, c(h, -h)),
            GateKind::SX => Mat2::new(c(0.5, 0.5), c(0.5, -0.5), c(0.5, -0.5), c(0.5, 0.5)),
            GateKind::RX => Mat2::rx(angles[0].radians()),
            GateKind::RY => Mat2::ry(angles[0].radians()),
            GateKind::RZ => Mat2::rz(angles[0].radians()),
            GateKind::U3 => Mat2::u3(angles[0].radians(), angles[1].radians(), angles[2].radians()),
            _ => return None,
        })
    }

    /// Matrix of a single-qubit unitary gate.
    pub fn of_gate(gate: &Gate) -> Option<Mat2> {
        if !gate.is_single_qubit_unitary() {
            return None;
        }
        Mat2::of_kind(gate.kind(), gate.angles())
    }

    /// Product of a run of single-qubit gates given in circuit order.
    pub fn of_sequence<'a>(gates: impl IntoIterator<Item = &'a Gate>) -> Option<Mat2> {
        gates.into_iter().try_fold(Mat2::IDENTITY, |acc, g| Mat2::of_gate(g).map(|m| m * acc))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (col, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][col] + a[r][1] * b[1][col];
            }
        }
        Mat2(out)
    }
}
