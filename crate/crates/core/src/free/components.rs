use std::collections::BTreeMap;

use super::NcPolynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Splits `f` by degree vector (stars counted with their base variable).
/// Components come out ordered by degree vector and sum to `f`.
pub fn multihomog_components(f: &NcPolynomial) -> Vec<NcPolynomial> {
    let n = f.max_index() as usize;
    let mut parts: BTreeMap<Vec<usize>, NcPolynomial> = BTreeMap::new();
    for (w, c) in f.terms() {
        let mut degs = vec![0usize; n];
        for l in w.letters() {
            degs[l.index() as usize - 1] += 1;
        }
        parts.entry(degs).or_default().add_term(w.clone(), c.clone());
    }
    parts.into_values().collect()
}

/// Recovers `c_0, …, c_n` from samples `v = Σ λ^i c_i`.
///
/// Uses the first `n + 1` pairwise distinct `λ` to solve the Vandermonde
/// system exactly; any further samples must agree with the solution.
pub fn extract_components(values: &[(Scalar, Vec<Scalar>)], n: usize) -> Result<Vec<Vec<Scalar>>> {
    let mut chosen: Vec<&(Scalar, Vec<Scalar>)> = Vec::with_capacity(n + 1);
    for v in values {
        if chosen.len() == n + 1 {
            break;
        }
        if chosen.iter().all(|c| c.0 != v.0) {
            chosen.push(v);
        }
    }
    if chosen.len() < n + 1 {
        return Err(Error::Underdetermined {
            needed: n + 1,
            got: chosen.len(),
        });
    }
    let width = chosen[0].1.len();
    if let Some(bad) = values.iter().find(|v| v.1.len() != width) {
        return Err(Error::DimensionMismatch {
            expected: width,
            got: bad.1.len(),
        });
    }

    // augmented system [V | values], eliminated in place
    let size = n + 1;
    let mut rows: Vec<Vec<Scalar>> = chosen
        .iter()
        .map(|(lambda, v)| {
            let mut row: Vec<Scalar> = (0..size).map(|i| lambda.pow(i as u32)).collect();
            row.extend(v.iter().cloned());
            row
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .expect("Vandermonde matrix with distinct nodes is invertible");
        rows.swap(col, pivot);
        let inv = rows[col][col].checked_inv().unwrap();
        for x in rows[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..size {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
    }
    let comps: Vec<Vec<Scalar>> = rows.into_iter().map(|r| r[size..].to_vec()).collect();

    for (lambda, v) in values {
        for (k, x) in v.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (i, c) in comps.iter().enumerate() {
                acc = &acc + &(&lambda.pow(i as u32) * &c[k]);
            }
            if &acc != x {
                return Err(Error::Inconsistent(format!(
                    "sample at λ = {lambda} disagrees with the degree-{n} interpolant"
                )));
            }
        }
    }
    Ok(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> NcPolynomial {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn components_examples() {
        assert_eq!(multihomog_components(&p("x1 + x1*x2")), vec![p("x1"), p("x1*x2")]);
        assert_eq!(multihomog_components(&p("x1*x2*x1' + x2'*x1^2")).len(), 1);
        assert_eq!(multihomog_components(&p("x1^2 + x1*x1'")).len(), 1);
        assert!(multihomog_components(&NcPolynomial::zero()).is_empty());
    }

    #[test]
    fn extract_small_cases() {
        let v = ints(&[3, -1]);
        assert_eq!(
            extract_components(&[(Scalar::one(), v.clone())], 0).unwrap(),
            vec![v]
        );

        let (c0, c1) = (ints(&[1, 2]), ints(&[5, -7]));
        let sum: Vec<Scalar> = c0.iter().zip(&c1).map(|(a, b)| a + b).collect();
        let out = extract_components(&[(Scalar::zero(), c0.clone()), (Scalar::one(), sum)], 1).unwrap();
        assert_eq!(out, vec![c0, c1]);
    }

    #[test]
    fn extract_needs_distinct_scalars() {
        let v = ints(&[1]);
        let vals = vec![(Scalar::one(), v.clone()), (Scalar::one(), v)];
        assert_eq!(
            extract_components(&vals, 1),
            Err(Error::Underdetermined { needed: 2, got: 1 })
        );
    }

    proptest! {
        #[test]
        fn components_sum_back(ts in prop::collection::vec((prop::collection::vec(1u32..4, 0..5), -3i64..4), 0..6)) {
            let f = NcPolynomial::from_terms(ts.into_iter().map(|(w, c)| {
                (super::super::Word::new(w.into_iter().map(|i| super::super::Letter::new(i, false)).collect()), Scalar::from_int(c))
            }));
            let parts = multihomog_components(&f);
            let total = parts.iter().fold(NcPolynomial::zero(), |a, b| &a + b);
            prop_assert_eq!(total, f);
        }

        #[test]
        fn generate_then_extract(n in 0usize..5, seed in prop::collection::vec(-9i64..10, 15), extra in 0usize..3) {
            let comps: Vec<Vec<Scalar>> = (0..=n).map(|i| ints(&seed[3 * i..3 * i + 3])).collect();
            let values: Vec<(Scalar, Vec<Scalar>)> = (1..=(n + 1 + extra) as i64)
                .map(|l| {
                    let lambda = Scalar::from_int(l);
                    let v = (0..3)
                        .map(|k| (0..=n).fold(Scalar::zero(), |a, i| &a + &(&lambda.pow(i as u32) * &comps[i][k])))
                        .collect();
                    (lambda, v)
                })
                .collect();
            prop_assert_eq!(extract_components(&values, n).unwrap(), comps);
        }
    }
}
