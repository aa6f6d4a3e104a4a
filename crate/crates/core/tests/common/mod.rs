#![allow(dead_code)]

use nctrace::{Letter, Matrix, NcPolynomial, Scalar, Word};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

pub fn p(s: &str) -> NcPolynomial {
    s.parse().expect("test polynomial parses")
}

pub fn random_word<R: Rng>(rng: &mut R, vars: u32, max_len: usize, star: bool) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(1..=vars), star && rng.gen_bool(0.5)))
            .collect(),
    )
}

/// Up to `max_terms` terms with integer coefficients in `[−3, 3]`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    vars: u32,
    max_terms: usize,
    max_deg: usize,
    star: bool,
) -> NcPolynomial {
    let terms = rng.gen_range(1..=max_terms);
    NcPolynomial::from_terms((0..terms).map(|_| {
        (
            random_word(rng, vars, max_deg, star),
            Scalar::from_int(rng.gen_range(-3..=3)),
        )
    }))
}

/// `Σ [g_k, h_k]` with small random `g_k, h_k`.
pub fn random_commutator_sum<R: Rng>(rng: &mut R, vars: u32, pairs: usize, star: bool) -> NcPolynomial {
    (0..pairs).fold(NcPolynomial::zero(), |acc, _| {
        let g = random_poly(rng, vars, 2, 2, star);
        let h = random_poly(rng, vars, 2, 2, star);
        &acc + &g.commutator(&h)
    })
}

pub fn arb_word(vars: u32, max_len: usize, star: bool) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=vars, any::<bool>()), 0..=max_len)
        .prop_map(move |v| Word::new(v.into_iter().map(|(i, s)| Letter::new(i, star && s)).collect()))
}

pub fn arb_poly(
    vars: u32,
    max_terms: usize,
    max_deg: usize,
    star: bool,
) -> impl Strategy<Value = NcPolynomial> {
    prop::collection::vec((arb_word(vars, max_deg, star), -3i64..=3), 0..=max_terms)
        .prop_map(|ts| NcPolynomial::from_terms(ts.into_iter().map(|(w, c)| (w, Scalar::from_int(c)))))
}

pub fn arb_matrix(d: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    prop::collection::vec(-5i64..=5, d * d)
        .prop_map(move |v| Matrix::from_fn(d, |i, j| Scalar::from_int(v[i * d + j])))
}

/// Rational square matrices as plain nested vectors, for oracles that avoid
/// the crate's matrix type.
pub type Plain = Vec<Vec<BigRational>>;

pub fn plain_from(m: &Matrix<Scalar>) -> Plain {
    m.rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|s| {
                    assert!(s.im().is_zero(), "plain oracle is rational only");
                    s.re().clone()
                })
                .collect()
        })
        .collect()
}

pub fn plain_identity(d: usize) -> Plain {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i == j {
                        BigRational::from_integer(1.into())
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn plain_mul(a: &Plain, b: &Plain) -> Plain {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn plain_transpose(a: &Plain) -> Plain {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| a[j][i].clone()).collect())
        .collect()
}

/// Evaluates a rational polynomial word by word; stars act by `star`.
pub fn plain_eval(f: &NcPolynomial, mats: &[Plain], star: impl Fn(&Plain) -> Plain) -> Plain {
    let d = mats[0].len();
    let mut acc = vec![vec![BigRational::zero(); d]; d];
    for (w, c) in f.terms() {
        assert!(c.im().is_zero());
        let mut prod = plain_identity(d);
        for l in w.letters() {
            let m = &mats[l.index() as usize - 1];
            let m = if l.is_star() { star(m) } else { m.clone() };
            prod = plain_mul(&prod, &m);
        }
        for i in 0..d {
            for j in 0..d {
                acc[i][j] = &acc[i][j] + c.re() * &prod[i][j];
            }
        }
    }
    acc
}

pub fn plain_trace(a: &Plain) -> BigRational {
    (0..a.len()).fold(BigRational::zero(), |acc, i| acc + &a[i][i])
}

/// Rank of a set of rational vectors by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn plain_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = BigRational::from_integer(1.into()) / &m[rank][col];
        let pivot_row: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..width {
                    let v = &m[r][c] - &factor * &pivot_row[c];
                    m[r][c] = v;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}
