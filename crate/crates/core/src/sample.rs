//! Seeded pseudo-random exact matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Involution, Matrix};
use crate::scalar::Scalar;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries in `[−5, 5]`; Gaussian integers with parts in `[−3, 3]`
/// for the conjugate-transpose.
pub fn random_matrix<R: Rng>(rng: &mut R, d: usize, inv: Involution) -> Matrix<Scalar> {
    Matrix::from_fn(d, |_, _| {
        if inv.is_second_kind() {
            Scalar::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
        } else {
            Scalar::from_int(rng.gen_range(-5..=5))
        }
    })
}

pub fn random_tuple<R: Rng>(rng: &mut R, d: usize, n: usize, inv: Involution) -> Vec<Matrix<Scalar>> {
    (0..n).map(|_| random_matrix(rng, d, inv)).collect()
}
