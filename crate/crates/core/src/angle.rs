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

//! Rotation angles as exact rational multiples of π, with a float fallback.
//!
//! Clifford / T / arbitrary classification has to be decision-exact, so any
//! angle that is recognizably `(n/d)·π` is kept as a reduced fraction. Float
//! angles only exist when a value is not within [`SNAP_TOLERANCE`] of such a
//! fraction.

use core::f64::consts::PI;
use core::fmt;
use core::ops::{Add, Neg};

/// Radians within which a float is considered equal to an exact angle.
pub const SNAP_TOLERANCE: f64 = 1e-10;

/// Denominators tried when recognizing a float as a multiple of π.
const SNAP_DENOMINATORS: [u64; 47] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26,
    27, 28, 29, 30, 31, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384, 32768, 65536,
    131072, 262144, 524288, 1048576,
];

/// Cost class of a rotation angle under a Clifford+T resource model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AngleClass {
    /// Congruent to 0 mod 2π.
    Identity,
    /// A nonzero multiple of π/2.
    Clifford,
    /// An odd multiple of π/4.
    TLike,
    /// Anything else.
    Arbitrary,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Repr {
    /// `num/den · π`, in lowest terms, with `num` in `(-den, den]`.
    Pi { num: i64, den: u64 },
    Radians(f64),
}

/// A rotation angle, normalized modulo 2π into `(-π, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Angle(Repr);

impl Angle {
    pub const ZERO: Angle = Angle(Repr::Pi { num: 0, den: 1 });
    pub const PI: Angle = Angle(Repr::Pi { num: 1, den: 1 });

    /// `(num/den)·π`, reduced and normalized.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn pi_fraction(num: i64, den: u64) -> Angle {
        assert!(den > 0, "angle denominator must be positive");
        normalize_fraction(num as i128, den as i128)
    }

    /// A float angle, snapped to an exact multiple of π when within
    /// [`SNAP_TOLERANCE`] of one.
    pub fn from_radians(radians: f64) -> Angle {
        if !radians.is_finite() {
            return Angle(Repr::Radians(radians));
        }
        match snap(radians) {
            Some(exact) => exact,
            None => Angle(Repr::Radians(normalize_radians(radians))),
        }
    }

    pub fn radians(self) -> f64 {
        match self.0 {
            Repr::Pi { num, den } => num as f64 * PI / den as f64,
            Repr::Radians(r) => r,
        }
    }

    /// `(num, den)` such that the angle is `num/den · π`, if exact.
    pub fn as_pi_fraction(self) -> Option<(i64, u64)> {
        match self.0 {
            Repr::Pi { num, den } => Some((num, den)),
            Repr::Radians(_) => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self.0, Repr::Pi { .. })
    }

    pub fn class(self) -> AngleClass {
        classify_angle(self)
    }

    pub fn is_identity(self) -> bool {
        self.class() == AngleClass::Identity
    }

    /// Half of this angle's `(-π, π]` representative.
    pub fn half(self) -> Angle {
        match self.0 {
            Repr::Pi { num, den } => normalize_fraction(num as i128, 2 * den as i128),
            Repr::Radians(r) => Angle::from_radians(r / 2.0),
        }
    }

    /// Integer multiple of the angle.
    pub fn scale(self, factor: i64) -> Angle {
        match self.0 {
            Repr::Pi { num, den } => normalize_fraction(num as i128 * factor as i128, den as i128),
            Repr::Radians(r) => Angle::from_radians(r * factor as f64),
        }
    }
}

impl Default for Angle {
    fn default() -> Self {
        Angle::ZERO
    }
}

impl Neg for Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        match self.0 {
            Repr::Pi { num, den } => normalize_fraction(-(num as i128), den as i128),
            Repr::Radians(r) => Angle::from_radians(-r),
        }
    }
}

impl Add for Angle {
    type Output = Angle;

    fn add(self, rhs: Angle) -> Angle {
        add_angles(self, rhs)
    }
}

/// Classifies an angle by its cost under a Clifford+T model.
pub fn classify_angle(angle: Angle) -> AngleClass {
    match angle.0 {
        Repr::Pi { num, den } => class_of_fraction(num, den),
        Repr::Radians(r) => {
            if !r.is_finite() {
                return AngleClass::Arbitrary;
            }
            let quarters = libm::round(r / (PI / 4.0));
            if libm::fabs(r - quarters * PI / 4.0) <= SNAP_TOLERANCE {
                let q = (quarters as i64).rem_euclid(8);
                class_of_fraction(q, 4)
            } else {
                AngleClass::Arbitrary
            }
        }
    }
}

/// Sum of two angles modulo 2π. Exact operands give an exact sum; a float
/// operand makes the result a float unless the sum snaps to an exact value.
pub fn add_angles(a: Angle, b: Angle) -> Angle {
    match (a.0, b.0) {
        (Repr::Pi { num: n1, den: d1 }, Repr::Pi { num: n2, den: d2 }) => {
            let (n1, d1, n2, d2) = (n1 as i128, d1 as i128, n2 as i128, d2 as i128);
            normalize_fraction(n1 * d2 + n2 * d1, d1 * d2)
        }
        _ => Angle::from_radians(a.radians() + b.radians()),
    }
}

fn class_of_fraction(num: i64, den: u64) -> AngleClass {
    let num = (num as i128).rem_euclid(2 * den as i128);
    let den = den as i128;
    if num == 0 {
        AngleClass::Identity
    } else if (2 * num) % den == 0 {
        AngleClass::Clifford
    } else if (4 * num) % den == 0 {
        AngleClass::TLike
    } else {
        AngleClass::Arbitrary
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn normalize_fraction(num: i128, den: i128) -> Angle {
    debug_assert!(den > 0);
    let period = 2 * den;
    let mut num = num.rem_euclid(period);
    if num > den {
        num -= period;
    }
    let g = gcd(num, den).max(1);
    let (num, den) = (num / g, den / g);
    match (i64::try_from(num), u64::try_from(den)) {
        (Ok(num), Ok(den)) if den <= i64::MAX as u64 => Angle(Repr::Pi { num, den }),
        // Only reachable for denominators beyond 2^63.
        _ => Angle(Repr::Radians(normalize_radians(num as f64 * PI / den as f64))),
    }
}

/// Maps a finite float into `(-π, π]`, leaving in-range values bit-identical.
fn normalize_radians(r: f64) -> f64 {
    if r > -PI && r <= PI {
        return r;
    }
    let mut y = libm::remainder(r, 2.0 * PI);
    if y <= -PI {
        y += 2.0 * PI;
    } else if y > PI {
        y -= 2.0 * PI;
    }
    y
}

fn snap(radians: f64) -> Option<Angle> {
    let turns = radians / PI;
    SNAP_DENOMINATORS.iter().find_map(|&den| {
        let num = libm::round(turns * den as f64);
        if libm::fabs(num) > 1e15 {
            return None;
        }
        let exact = num * PI / den as f64;
        (libm::fabs(radians - exact) <= SNAP_TOLERANCE)
            .then(|| normalize_fraction(num as i128, den as i128))
    })
}

/// Formats the angle as an OpenQASM 2 expression: exact angles as
/// `pi`-expressions (`-3*pi/4`), floats with 17 significant digits.
impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Pi { num: 0, .. } => f.write_str("0"),
            Repr::Pi { num, den } => {
                if num < 0 {
                    f.write_str("-")?;
                }
                let abs = num.unsigned_abs();
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                f.write_str("pi")?;
                if den != 1 {
                    write!(f, "/{den}")?;
                }
                Ok(())
            }
            Repr::Radians(r) => write!(f, "{r:.16e}"),
        }
    }
}
