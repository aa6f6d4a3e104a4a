//! Bundled regression fixtures.

use serde::Serialize;

use crate::classify::{self, DEFAULT_BUDGET};
use crate::error::Result;
use crate::free::{Letter, NcPolynomial, Word};
use crate::matrix::{Involution, Matrix};
use crate::scalar::Scalar;
use crate::subspace::{check_lie_closure, classify_subspace, exact_span, skew_ideal_closure, CanonicalName};

/// `s_k = Σ_σ sgn(σ) x_σ(1)⋯x_σ(k)`.
pub fn standard_polynomial(k: u32) -> NcPolynomial {
    let mut perm: Vec<u32> = (1..=k).collect();
    let mut out = NcPolynomial::zero();
    permute(&mut perm, 0, &mut out);
    out
}

fn permute(perm: &mut Vec<u32>, start: usize, out: &mut NcPolynomial) {
    if start == perm.len() {
        let inversions = (0..perm.len())
            .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let sign = if inversions % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let w = Word::new(perm.iter().map(|&i| Letter::new(i, false)).collect());
        out.add_term(w, sign);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permute(perm, start + 1, out);
        perm.swap(start, i);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFixture {
    pub name: &'static str,
    pub poly: NcPolynomial,
    pub d: usize,
    pub inv: Involution,
    pub case: &'static str,
    pub dimension: usize,
}

pub fn poly_fixtures() -> Vec<PolyFixture> {
    let fx = |name, src: &str, d, inv, case, dimension| PolyFixture {
        name,
        poly: src.parse().expect("fixture parses"),
        d,
        inv,
        case,
        dimension,
    };
    let mut out = vec![
        PolyFixture {
            name: "s4",
            poly: standard_polynomial(4),
            d: 2,
            inv: Involution::None,
            case: "(i)",
            dimension: 0,
        },
        fx("commutator-squared", "[x1,x2]^2", 2, Involution::None, "(ii)", 1),
    ];
    let t = Involution::Transpose;
    out.extend([
        fx("zero", "0", 3, t, "(i)", 0),
        fx("one", "1", 3, t, "(ii)", 1),
        fx("skew", "x1 - x1'", 3, t, "(iii)", 3),
        fx("skew-plus-central", "1 + x1 - x1'", 3, t, "(iv)", 4),
        fx("symmetric-trace-zero", "x1*x1' - x1'*x1", 3, t, "(v)", 5),
        fx("symmetric", "x1 + x1'", 3, t, "(vi)", 6),
        fx("commutator", "[x1,x2]", 3, t, "(vii)", 8),
        fx("full", "x1", 3, t, "(viii)", 9),
    ]);
    out
}

fn units_combo(d: usize, terms: &[(usize, usize, i64)]) -> Matrix<Scalar> {
    let mut m = Matrix::zeros(d);
    for &(i, j, c) in terms {
        m.set(i - 1, j - 1, Scalar::from_int(c));
    }
    m
}

/// `E11 + E12 − E21 + E22` in `M_2`.
pub fn exceptional_d2() -> Vec<Matrix<Scalar>> {
    vec![units_combo(2, &[(1, 1, 1), (1, 2, 1), (2, 1, -1), (2, 2, 1)])]
}

/// The two simple three-dimensional ideals of `K ⊂ M_4` under transpose.
pub fn exceptional_d4() -> [Vec<Matrix<Scalar>>; 2] {
    let k1 = vec![
        units_combo(4, &[(1, 2, 1), (2, 1, -1), (3, 4, 1), (4, 3, -1)]),
        units_combo(4, &[(1, 3, 1), (3, 1, -1), (4, 2, 1), (2, 4, -1)]),
        units_combo(4, &[(1, 4, 1), (4, 1, -1), (2, 3, 1), (3, 2, -1)]),
    ];
    let k2 = vec![
        units_combo(4, &[(1, 2, 1), (2, 1, -1), (3, 4, -1), (4, 3, 1)]),
        units_combo(4, &[(1, 3, 1), (3, 1, -1), (4, 2, -1), (2, 4, 1)]),
        units_combo(4, &[(1, 4, 1), (4, 1, -1), (2, 3, -1), (3, 2, 1)]),
    ];
    [k1, k2]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn run_corpus(seed: u64) -> Result<Vec<FixtureResult>> {
    let mut out = Vec::new();
    for fx in poly_fixtures() {
        let r = classify::classify(&fx.poly, fx.d, fx.inv, seed, DEFAULT_BUDGET)?;
        let closed = check_lie_closure(&r.sampled, fx.inv)?;
        let passed = r.case == fx.case && r.sampled_dimension == fx.dimension && closed;
        out.push(FixtureResult {
            name: format!("{} (d = {}, {})", fx.name, fx.d, fx.inv),
            passed,
            detail: format!(
                "case {} (expected {}), sampled dimension {} (expected {}), lie-closed {}",
                r.case, fx.case, r.sampled_dimension, fx.dimension, closed
            ),
        });
    }
    let t = Involution::Transpose;
    let seed2 = exceptional_d2();
    let l = skew_ideal_closure(&seed2, 2, t)?;
    let name = classify_subspace(&l, t)?;
    let closed = check_lie_closure(&l, t)?;
    out.push(FixtureResult {
        name: "exceptional skew-ideal (d = 2, transpose)".into(),
        passed: l.dim() == 1 && closed && name == CanonicalName::Other,
        detail: format!(
            "closure dimension {}, lie-closed {closed}, classified {name}",
            l.dim()
        ),
    });
    for (k, basis) in exceptional_d4().iter().enumerate() {
        let l = exact_span(4, basis.iter())?;
        let closed = check_lie_closure(&l, t)?;
        let name = classify_subspace(&l, t)?;
        out.push(FixtureResult {
            name: format!("exceptional K{} (d = 4, transpose)", k + 1),
            passed: l.dim() == 3 && closed && name == CanonicalName::Other,
            detail: format!("dimension {}, lie-closed {closed}, classified {name}", l.dim()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_polynomials() {
        assert_eq!(standard_polynomial(2), "x1*x2 - x2*x1".parse().unwrap());
        assert_eq!(standard_polynomial(4).num_terms(), 24);
    }

    #[test]
    fn corpus_passes() {
        for r in run_corpus(0).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
