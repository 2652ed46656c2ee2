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

//! Single-qubit resynthesis: Clifford lookup first, ZXZ Euler angles otherwise.

use alloc::vec::Vec;
use num_complex::Complex64;

use super::SynthesisError;
use crate::angle::Angle;
use crate::circuit::{Gate, GateKind};
use crate::matrix::{c, Mat2};

const UNITARITY_TOLERANCE: f64 = 1e-8;
const CLIFFORD_MATCH_TOLERANCE: f64 = 1e-9;

/// Generators of the Clifford words, in tie-break order.
pub const CLIFFORD_GENERATORS: [GateKind; 6] =
    [GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z];

/// Longest generator word considered by the search.
pub const MAX_CLIFFORD_WORD: usize = 6;

use GateKind::{Sdg, H, S, X, Y, Z};

/// The shortest word (circuit order) for each of the 24 single-qubit Clifford
/// operators modulo phase, ties broken lexicographically by gate kind.
/// Produced by [`search_clifford_words`].
pub const CLIFFORD_WORDS: [&[GateKind]; 24] = [
    &[],
    &[H],
    &[S],
    &[Sdg],
    &[X],
    &[Y],
    &[Z],
    &[H, S],
    &[H, Sdg],
    &[H, X],
    &[H, Y],
    &[H, Z],
    &[S, H],
    &[S, X],
    &[S, Y],
    &[Sdg, H],
    &[H, S, H],
    &[H, S, X],
    &[H, S, Y],
    &[H, Sdg, H],
    &[S, H, Sdg],
    &[S, H, Y],
    &[S, H, Z],
    &[Sdg, H, S],
];

fn word_matrix(word: &[GateKind]) -> Mat2 {
    word.iter().fold(Mat2::IDENTITY, |acc, &k| Mat2::of_kind(k, &[]).unwrap() * acc)
}

/// Breadth-first search over generator words up to [`MAX_CLIFFORD_WORD`],
/// keeping the first word found for each new operator. Words of each length
/// are extended in lexicographic order, so the first hit is the
/// lexicographically smallest among the shortest.
pub fn search_clifford_words() -> Vec<Vec<GateKind>> {
    let mut found: Vec<(Vec<GateKind>, Mat2)> = alloc::vec![(Vec::new(), Mat2::IDENTITY)];
    let mut frontier = 0..1;
    for _ in 0..MAX_CLIFFORD_WORD {
        let start = found.len();
        for i in frontier.clone() {
            for &g in &CLIFFORD_GENERATORS {
                let m = Mat2::of_kind(g, &[]).unwrap() * found[i].1;
                if found.iter().any(|(_, seen)| seen.approx_eq_up_to_phase(&m, CLIFFORD_MATCH_TOLERANCE)) {
                    continue;
                }
                let mut word = found[i].0.clone();
                word.push(g);
                found.push((word, m));
            }
        }
        frontier = start..found.len();
    }
    found.into_iter().map(|(w, _)| w).collect()
}

/// The Clifford word equal to `u` up to phase, if `u` is Clifford.
pub fn clifford_word(u: &Mat2) -> Option<&'static [GateKind]> {
    CLIFFORD_WORDS.iter().copied().find(|w| word_matrix(w).approx_eq_up_to_phase(u, CLIFFORD_MATCH_TOLERANCE))
}

fn arg(z: Complex64) -> f64 {
    libm::atan2(z.im, z.re)
}

/// `(α, β, γ)` with `u ∝ RZ(α)·RX(β)·RZ(γ)` and `β ∈ [0, π]`; `γ = 0` when
/// `β` is 0 or π.
fn zxz_angles(u: &Mat2) -> (Angle, Angle, Angle) {
    let v = u.scale(u.det().sqrt().inv());
    let [[v00, _], [v10, v11]] = v.0;
    let beta = Angle::from_radians(2.0 * libm::atan2(v10.norm(), v00.norm()));
    // v11 = cos(β/2)·e^{i(α+γ)/2},  i·v10 = sin(β/2)·e^{i(α-γ)/2}
    let sum = 2.0 * arg(v11);
    let diff = 2.0 * arg(c(0.0, 1.0) * v10);
    if beta == Angle::ZERO {
        (Angle::from_radians(sum), beta, Angle::ZERO)
    } else if beta == Angle::PI {
        (Angle::from_radians(diff), beta, Angle::ZERO)
    } else {
        (Angle::from_radians((sum + diff) / 2.0), beta, Angle::from_radians((sum - diff) / 2.0))
    }
}

fn euler_gates(alpha: Angle, beta: Angle, gamma: Angle, qubit: usize) -> Vec<Gate> {
    [Gate::rz(gamma, qubit), Gate::rx(beta, qubit), Gate::rz(alpha, qubit)]
        .into_iter()
        .filter(|g| !g.angle().is_some_and(Angle::is_identity))
        .collect()
}

/// Rewrites a single-qubit unitary as the shortest Clifford word when it is
/// Clifford, else as `RZ(γ), RX(β), RZ(α)` in circuit order with identity
/// rotations dropped. Both ZXZ forms `(α, β, γ)` and `(α+π, -β, γ-π)` are
/// considered and the one with fewer gates wins, preferring `β ≥ 0`.
pub fn resynthesize_1q(u: &Mat2, qubit: usize) -> Result<Vec<Gate>, SynthesisError> {
    if !u.is_unitary(UNITARITY_TOLERANCE) {
        return Err(SynthesisError::NonUnitary);
    }
    if let Some(word) = clifford_word(u) {
        return Ok(word.iter().map(|&k| Gate::new(k, Vec::new(), alloc::vec![qubit]).unwrap()).collect());
    }
    let (alpha, beta, gamma) = zxz_angles(u);
    let primary = euler_gates(alpha, beta, gamma, qubit);
    let flipped = euler_gates(alpha + Angle::PI, -beta, gamma + Angle::PI, qubit);
    Ok(if flipped.len() < primary.len() { flipped } else { primary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use crate::circuit::Circuit;
    use crate::sim::equivalent_up_to_global_phase;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(u: &Mat2, gates: &[Gate]) {
        let m = Mat2::of_sequence(gates).unwrap();
        assert!(m.approx_eq_up_to_phase(u, 1e-8), "{gates:?}");
    }

    #[test]
    fn table_matches_search() {
        let searched = search_clifford_words();
        assert_eq!(searched.len(), 24);
        let table: Vec<Vec<GateKind>> = CLIFFORD_WORDS.iter().map(|w| w.to_vec()).collect();
        assert_eq!(searched, table);
    }

    #[test]
    fn identity_and_hadamard() {
        assert!(resynthesize_1q(&Mat2::IDENTITY, 0).unwrap().is_empty());
        let h = Mat2::of_kind(GateKind::H, &[]).unwrap();
        assert_eq!(resynthesize_1q(&h, 0).unwrap(), [Gate::h(0)]);
    }

    #[test]
    fn single_rotation_stays_single() {
        let out = resynthesize_1q(&Mat2::rz(0.3), 2).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].kind(), GateKind::RZ);
        assert!((out[0].angle().unwrap().radians() - 0.3).abs() < 1e-12);
        check(&Mat2::rz(0.3), &out);
    }

    #[test]
    fn exact_inputs_come_back_exact() {
        // T·H·S resynthesizes to RX(-π/2) then RZ(-π/4).
        let u = Mat2::of_sequence(&[Gate::s(0), Gate::h(0), Gate::t(0)]).unwrap();
        let out = resynthesize_1q(&u, 0).unwrap();
        assert_eq!(out, [Gate::rx(Angle::pi_fraction(-1, 2), 0), Gate::rz(Angle::pi_fraction(-1, 4), 0)]);
    }

    #[test]
    fn rejects_non_unitary() {
        let m = Mat2::IDENTITY.scale(c(2.0, 0.0));
        assert_eq!(resynthesize_1q(&m, 0), Err(SynthesisError::NonUnitary));
    }

    #[test]
    fn every_clifford_maps_to_its_word() {
        for word in CLIFFORD_WORDS {
            let u = word_matrix(word);
            let out = resynthesize_1q(&u, 0).unwrap();
            assert_eq!(out.iter().map(Gate::kind).collect::<Vec<_>>(), word);
        }
    }

    #[test]
    fn random_unitaries_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let (t, p, l) = (rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
            let u = Mat2::u3(t, p, l);
            let out = resynthesize_1q(&u, 0).unwrap();
            assert!(out.len() <= 3);
            check(&u, &out);
            let a = Circuit::with_gates(1, "u", [Gate::u3(Angle::from_radians(t), Angle::from_radians(p), Angle::from_radians(l), 0)]).unwrap();
            let b = Circuit::with_gates(1, "r", out).unwrap();
            assert!(equivalent_up_to_global_phase(&a, &b, 1e-8).unwrap());
        }
    }

    #[test]
    fn degenerate_euler_cases() {
        for u in [Mat2::rx(0.7), Mat2::rz(-1.2) * Mat2::rx(PI), Mat2::rx(PI) * Mat2::rz(0.4), Mat2::rz(2.0) * Mat2::rx(1e-13)] {
            let out = resynthesize_1q(&u, 0).unwrap();
            check(&u, &out);
        }
        assert_eq!(resynthesize_1q(&Mat2::rx(0.7), 0).unwrap().len(), 1);
    }
}
