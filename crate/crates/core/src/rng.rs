//! Seed derivation and the point stream.
//!
//! Every graph draws its points from a PCG-XSL-RR 128/64 generator
//! (`rand_pcg::Pcg64`). The 128-bit state is built from two splitmix64
//! finalizer outputs of the 64-bit seed, so the stream depends on nothing but
//! that seed. Uniform reals take the top 53 bits of each output:
//! `(next_u64 >> 11) * 2^-53`, which lies in `[0, 1)`.
//!
//! Trial `i` of an experiment with master seed `m` uses
//! `trial_seed(m, i) = mix64(m + (i + 1) * 0x9E3779B97F4A7C15)`.

use rand_pcg::rand_core::Rng;
use rand_pcg::Pcg64;

use crate::geometry::Point;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const PCG_STREAM: u128 = 0x5851_f42d_4c95_7f2d_1405_7b7e_f767_814f;

/// The splitmix64 output finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    mix64(master_seed.wrapping_add(trial.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// Deterministic uniform stream for one seed.
pub struct PointStream {
    rng: Pcg64,
}

impl PointStream {
    pub fn new(seed: u64) -> Self {
        let hi = mix64(seed.wrapping_add(GOLDEN_GAMMA));
        let lo = mix64(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(2)));
        let state = (u128::from(hi) << 64) | u128::from(lo);
        PointStream {
            rng: Pcg64::new(state, PCG_STREAM),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn next_unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound` (Lemire's multiply-shift with rejection).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let m = u128::from(self.rng.next_u64()) * u128::from(bound);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    pub fn next_point(&mut self) -> Point {
        let x = self.next_unit();
        let y = self.next_unit();
        Point::new_unchecked(x, y)
    }
}

/// `n` i.i.d. uniform points, x before y for each point.
pub fn uniform_points(n: usize, seed: u64) -> Vec<Point> {
    let mut stream = PointStream::new(seed);
    (0..n).map(|_| stream.next_point()).collect()
}
