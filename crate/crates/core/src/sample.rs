//! Deterministic seeded generation of test matrices and index choices.
//!
//! The generator is fully specified so that runs are reproducible by any
//! implementation:
//!
//! * State: ChaCha with 8 rounds, as in `rand_chacha` 0.9 `ChaCha8Rng`. The
//!   256-bit key comes from `seed_from_u64(seed)` of `rand_core` 0.9 (a PCG32
//!   expansion of the 64-bit seed); the 64-bit stream id is set to the trial
//!   index `t`, and the word position starts at 0. Trial `t` therefore depends
//!   only on `(seed, t)`.
//! * Draws: `next_u64` takes two consecutive 32-bit output words, low word
//!   first.
//! * Uniform `[0, s)`: draw `x`; reject while `x ≥ ⌊(2⁶⁴−1)/s⌋·s`; return
//!   `x mod s`.
//! * Integer in `[lo, hi]`: `lo + uniform(hi − lo + 1)`.
//! * Matrix: entries drawn row-major.
//! * k-subset of `1..=n`: partial Fisher–Yates on `[1, …, n]`: for `i` in
//!   `0..k`, swap position `i` with `i + uniform(n − i)`; sort the first `k`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::matrix::{IndexSet, Matrix};
use crate::pfaffian::AntisymmetricMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct TrialRng(ChaCha8Rng);

impl TrialRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        TrialRng(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, span)`. Panics if `span` is zero.
    pub fn below(&mut self, span: u64) -> u64 {
        assert!(span > 0, "empty range");
        let zone = (u64::MAX / span) * span;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % span;
            }
        }
    }

    /// Uniform in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = hi.abs_diff(lo).checked_add(1).expect("range too wide");
        lo.wrapping_add(self.below(span) as i64)
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    /// Integer entries uniform in `[−bound, bound]`.
    pub fn matrix(&mut self, rows: usize, cols: usize, bound: i64) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| Scalar::from_int(self.int_in(-bound, bound)))
    }

    pub fn column(&mut self, len: usize, bound: i64) -> Vec<Scalar> {
        (0..len).map(|_| Scalar::from_int(self.int_in(-bound, bound))).collect()
    }

    /// Antisymmetric matrix with strict-upper entries drawn row-major.
    pub fn antisymmetric(&mut self, order: usize, bound: i64) -> AntisymmetricMatrix {
        let upper = (0..order * order.saturating_sub(1) / 2)
            .map(|_| Scalar::from_int(self.int_in(-bound, bound)))
            .collect();
        AntisymmetricMatrix::from_upper(order, upper).expect("even order")
    }

    pub fn subset(&mut self, n: usize, k: usize) -> IndexSet {
        assert!(k <= n);
        let mut pool: Vec<usize> = (1..=n).collect();
        for i in 0..k {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut chosen = pool[..k].to_vec();
        chosen.sort_unstable();
        IndexSet::new(chosen).expect("distinct indices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map({ let mut r = TrialRng::new(42, 3); move |_| r.next_u64() }).collect();
        let b: Vec<u64> = (0..4).map({ let mut r = TrialRng::new(42, 3); move |_| r.next_u64() }).collect();
        let c: Vec<u64> = (0..4).map({ let mut r = TrialRng::new(42, 4); move |_| r.next_u64() }).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn draws_stay_in_range() {
        let mut rng = TrialRng::new(7, 0);
        let mut seen = [false; 19];
        for _ in 0..2000 {
            let x = rng.int_in(-9, 9);
            assert!((-9..=9).contains(&x));
            seen[(x + 9) as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        for _ in 0..100 {
            let s = rng.subset(7, 3);
            assert_eq!(s.len(), 3);
            s.check_within(7).unwrap();
        }
        assert_eq!(rng.int_in(i64::MIN, i64::MIN), i64::MIN);
    }

    // Frozen first draws, so a change to the generator shows up here.
    #[test]
    fn golden_prefix() {
        let mut rng = TrialRng::new(42, 0);
        let m = rng.matrix(2, 2, 9);
        let frozen = m.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut again = TrialRng::new(42, 0);
        assert_eq!(again.matrix(2, 2, 9), m);
        // Same values from tools/trial_rng_reference.py.
        assert_eq!(frozen, "-8 -9 -6 4");
        let mut rng = TrialRng::new(42, 3);
        let draws: Vec<i64> = (0..6).map(|_| rng.int_in(-9, 9)).collect();
        assert_eq!(draws, [-6, 8, 7, 6, 2, 3]);
    }
}
