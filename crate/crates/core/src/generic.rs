//! Generic matrices: symbolic evaluation of polynomials in `M_d(F[ζ])` and the
//! certificates read off from it.
//!
//! `X_ℓ` maps to `Y_ℓ = [ζ_ij^(ℓ)]`. The star of `Y_ℓ` is its transpose
//! (orthogonal), its symplectic star, or, for the unitary type, the transpose
//! of the conjugate generic matrix `[ζ̄_ij^(ℓ)]`. Evaluating at a numeric tuple
//! `a` assigns `ζ := a` (and `ζ̄ := ā`), which is a *-homomorphism onto
//! `M_d(Q)` or `M_d(Q(i))`.

use serde::Serialize;

use crate::cpoly::{CPoly, Point, Var};
use crate::error::{Error, Result};
use crate::free::NcPolynomial;
use crate::matrix::{Entry, Involution, Matrix};
use crate::sample;
use crate::scalar::Scalar;

pub const DEFAULT_TERM_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug)]
pub struct GenericContext {
    d: usize,
    inv: Involution,
    generics: Vec<Matrix<CPoly>>,
    stars: Vec<Matrix<CPoly>>,
    term_budget: u128,
}

impl GenericContext {
    pub fn new(d: usize, inv: Involution, n: usize) -> Result<Self> {
        inv.check_dimension(d)?;
        let mut generics = Vec::with_capacity(n);
        let mut stars = Vec::with_capacity(n);
        for l in 1..=n as u32 {
            let y = Matrix::from_fn(d, |i, j| CPoly::var(Var::new(l, i as u32 + 1, j as u32 + 1)));
            stars.push(y.star(inv)?);
            generics.push(y);
        }
        Ok(GenericContext {
            d,
            inv,
            generics,
            stars,
            term_budget: DEFAULT_TERM_BUDGET,
        })
    }

    /// Context with one generic matrix per variable index of `f`.
    pub fn for_poly(f: &NcPolynomial, d: usize, inv: Involution) -> Result<Self> {
        GenericContext::new(d, inv, f.max_index() as usize)
    }

    pub fn with_term_budget(mut self, limit: u128) -> Self {
        self.term_budget = limit;
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn involution(&self) -> Involution {
        self.inv
    }

    pub fn num_generics(&self) -> usize {
        self.generics.len()
    }

    pub fn generic(&self, l: usize) -> &Matrix<CPoly> {
        &self.generics[l - 1]
    }

    pub fn generic_star(&self, l: usize) -> &Matrix<CPoly> {
        &self.stars[l - 1]
    }

    /// The `ζ`-point induced by a numeric tuple.
    pub fn point(&self, mats: &[Matrix<Scalar>]) -> Result<Point> {
        let mut pt = Point::new();
        for (l, a) in mats.iter().enumerate() {
            if a.dim() != self.d {
                return Err(Error::DimensionMismatch {
                    expected: self.d,
                    got: a.dim(),
                });
            }
            for i in 0..self.d {
                for j in 0..self.d {
                    let (l, r, c) = (l as u32 + 1, i as u32 + 1, j as u32 + 1);
                    pt.insert(Var::new(l, r, c), a.get(i, j).clone());
                    if self.inv.is_second_kind() {
                        pt.insert(Var::conjugate_of(l, r, c), a.get(i, j).conj());
                    }
                }
            }
        }
        Ok(pt)
    }

    /// Upper bound on stored terms of the evaluation: a word of length `k`
    /// contributes at most `d^(k−1)` terms per entry.
    pub fn predicted_terms(&self, f: &NcPolynomial) -> u128 {
        let d = self.d as u128;
        f.terms()
            .map(|(w, _)| match w.len() {
                0 => d,
                k => (d * d).saturating_mul(d.saturating_pow(k as u32 - 1)),
            })
            .fold(0u128, u128::saturating_add)
    }
}

fn check_letters(f: &NcPolynomial, inv: Involution, available: usize) -> Result<()> {
    if inv == Involution::None && f.has_star() {
        return Err(Error::StarWithoutInvolution);
    }
    let top = f.max_index();
    if top as usize > available {
        return Err(Error::IndexOutOfRange {
            index: top,
            available,
        });
    }
    Ok(())
}

fn evaluate<T: Entry>(f: &NcPolynomial, d: usize, gens: &[Matrix<T>], stars: &[Matrix<T>]) -> Matrix<T> {
    let mut acc = Matrix::zeros(d);
    for (w, c) in f.terms() {
        let mut prod: Option<Matrix<T>> = None;
        for l in w.letters() {
            let k = l.index() as usize - 1;
            let m = if l.is_star() { &stars[k] } else { &gens[k] };
            prod = Some(match prod {
                None => m.clone(),
                Some(p) => p.mul(m),
            });
        }
        let term = match prod {
            None => Matrix::identity(d).scale(c),
            Some(p) => p.scale(c),
        };
        acc = acc.add(&term);
    }
    acc
}

/// Image of `f` under `X_ℓ ↦ Y_ℓ`, `X_ℓ* ↦ Y_ℓ*`.
pub fn eval_generic(f: &NcPolynomial, ctx: &GenericContext) -> Result<Matrix<CPoly>> {
    check_letters(f, ctx.inv, ctx.generics.len())?;
    let predicted = ctx.predicted_terms(f);
    if predicted > ctx.term_budget {
        return Err(Error::BudgetExceeded {
            predicted,
            limit: ctx.term_budget,
        });
    }
    Ok(evaluate(f, ctx.d, &ctx.generics, &ctx.stars))
}

/// Exact value of `f` at a numeric tuple, with stars taken by `inv`.
pub fn eval_numeric(f: &NcPolynomial, mats: &[Matrix<Scalar>], inv: Involution) -> Result<Matrix<Scalar>> {
    let needed = f.max_index() as usize;
    if mats.len() < needed {
        return Err(Error::Arity {
            expected: needed,
            got: mats.len(),
        });
    }
    let d = mats.first().map(Matrix::dim).unwrap_or(1);
    if let Some(bad) = mats.iter().find(|m| m.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.dim(),
        });
    }
    check_letters(f, inv, mats.len())?;
    let stars = mats.iter().map(|m| m.star(inv)).collect::<Result<Vec<_>>>()?;
    Ok(evaluate(f, d, mats, &stars))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Identity,
    Central,
    TraceZero,
    /// `e + e* = 0`
    Skew,
    /// `e + e* = c·I` with `c ≠ 0`
    SkewPlusCentral,
    /// `e − e* = 0`
    Symmetric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// The tested matrix is entrywise zero.
    Zero,
    /// A nonzero entry of the tested matrix.
    Entry {
        row: usize,
        col: usize,
        value: CPoly,
    },
    /// The tested matrix is `value·I`.
    Scalar {
        value: CPoly,
    },
    /// Tested matrix minus its (1,1) entry times the identity; nonzero.
    Residue {
        matrix: Matrix<CPoly>,
    },
    TracePoly {
        trace: CPoly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: Claim,
    pub verdict: bool,
    pub theorem: &'static str,
    pub statement: String,
    pub evidence: Evidence,
    pub warnings: Vec<String>,
}

pub const THEOREM_MODEL: &str = "generic-matrix-model";
pub const THEOREM_TRACE: &str = "generic-trace";
pub const THEOREM_TRACE_INVOLUTION: &str = "generic-trace-involution";
pub const THEOREM_CYCLIC: &str = "cyclic-identity";
pub const THEOREM_CYCLIC_INVOLUTION: &str = "cyclic-identity-involution";

impl Certificate {
    /// Re-derives the verdict from the evidence alone.
    pub fn recheck(&self) -> bool {
        match (&self.claim, &self.evidence) {
            (Claim::Identity | Claim::Skew | Claim::Symmetric, Evidence::Zero) => self.verdict,
            (Claim::Identity | Claim::Skew | Claim::Symmetric, Evidence::Entry { value, .. }) => {
                !self.verdict && !value.is_zero()
            }
            (Claim::Skew | Claim::Symmetric, Evidence::Residue { matrix }) => {
                !self.verdict && !matrix.is_zero()
            }
            (Claim::Central | Claim::SkewPlusCentral, Evidence::Scalar { value }) => {
                self.verdict == !value.is_zero()
            }
            (Claim::Central | Claim::SkewPlusCentral, Evidence::Residue { matrix }) => {
                !self.verdict && !matrix.is_zero()
            }
            (Claim::Central | Claim::SkewPlusCentral, Evidence::Zero) => !self.verdict,
            (Claim::TraceZero, Evidence::TracePoly { trace }) => self.verdict == trace.is_zero(),
            _ => false,
        }
    }
}

fn commutative_note(d: usize) -> Vec<String> {
    if d == 1 {
        vec!["commutative case: 1x1 matrices commute".to_string()]
    } else {
        Vec::new()
    }
}

fn zero_evidence(e: &Matrix<CPoly>) -> Evidence {
    let d = e.dim();
    for i in 0..d {
        for j in 0..d {
            if !e.get(i, j).is_zero() {
                return Evidence::Entry {
                    row: i + 1,
                    col: j + 1,
                    value: e.get(i, j).clone(),
                };
            }
        }
    }
    Evidence::Zero
}

fn scalar_evidence(e: &Matrix<CPoly>) -> Evidence {
    if e.is_zero() {
        return Evidence::Zero;
    }
    match e.as_scalar_matrix() {
        Some(c) => Evidence::Scalar { value: c },
        None => Evidence::Residue {
            matrix: e.sub(&Matrix::scalar(e.dim(), e.get(0, 0).clone())),
        },
    }
}

pub(crate) fn certify_zero(claim: Claim, m: &Matrix<CPoly>, statement: &str, d: usize) -> Certificate {
    let evidence = zero_evidence(m);
    let verdict = evidence == Evidence::Zero;
    let statement = if verdict {
        statement.to_string()
    } else {
        format!("not: {statement}")
    };
    Certificate {
        claim,
        verdict,
        theorem: THEOREM_MODEL,
        statement,
        evidence,
        warnings: commutative_note(d),
    }
}

pub(crate) fn certify_scalar(claim: Claim, m: &Matrix<CPoly>, statement: &str, d: usize) -> Certificate {
    let evidence = scalar_evidence(m);
    let verdict = matches!(evidence, Evidence::Scalar { .. });
    let statement = if verdict {
        statement.to_string()
    } else {
        format!("not: {statement}")
    };
    Certificate {
        claim,
        verdict,
        theorem: THEOREM_MODEL,
        statement,
        evidence,
        warnings: commutative_note(d),
    }
}

pub(crate) fn identity_certificate(e: &Matrix<CPoly>) -> Certificate {
    certify_zero(
        Claim::Identity,
        e,
        "f vanishes on generic matrices: f is an identity of M_d",
        e.dim(),
    )
}

pub(crate) fn central_certificate(e: &Matrix<CPoly>) -> Certificate {
    certify_scalar(
        Claim::Central,
        e,
        "f evaluates to a nonzero scalar matrix: f is a central polynomial of M_d",
        e.dim(),
    )
}

pub(crate) fn trace_certificate(f: &NcPolynomial, e: &Matrix<CPoly>, inv: Involution) -> Certificate {
    let d = e.dim();
    let trace = e.trace();
    let verdict = trace.is_zero();
    let mut warnings = commutative_note(d);
    let symmetric_needed = inv.is_first_kind() && f.star() != *f;
    if symmetric_needed {
        warnings.push(
            "first-kind involution with non-symmetric f: the cyclic-equivalence reading needs f = f*".into(),
        );
    }
    let exceptional = inv.is_first_kind() && matches!(d, 1 | 2 | 4);
    if exceptional {
        warnings.push(format!(
            "d = {d}: the cyclic-equivalence reading is not guaranteed with an involution"
        ));
    }
    let (theorem, statement) = if inv == Involution::None {
        if verdict && d >= 2 {
            (
                THEOREM_CYCLIC,
                "tr f = 0 on M_d: f is cyclically equivalent to an identity of M_d".to_string(),
            )
        } else if verdict {
            (THEOREM_TRACE, "tr f = 0 on M_d".to_string())
        } else {
            (
                THEOREM_TRACE,
                "tr f != 0 on M_d: f is not cyclically equivalent to an identity of M_d".to_string(),
            )
        }
    } else if verdict && inv.is_first_kind() && !symmetric_needed && !exceptional {
        (
            THEOREM_CYCLIC_INVOLUTION,
            "tr f = 0 on M_d with involution: f is cyclically equivalent to an identity of M_d".to_string(),
        )
    } else if verdict {
        (
            THEOREM_TRACE_INVOLUTION,
            "tr f = 0 on M_d with involution".to_string(),
        )
    } else {
        (
            THEOREM_TRACE_INVOLUTION,
            "tr f != 0 on M_d with involution".to_string(),
        )
    };
    Certificate {
        claim: Claim::TraceZero,
        verdict,
        theorem,
        statement,
        evidence: Evidence::TracePoly { trace },
        warnings,
    }
}

pub fn is_identity(f: &NcPolynomial, ctx: &GenericContext) -> Result<Certificate> {
    Ok(identity_certificate(&eval_generic(f, ctx)?))
}

pub fn is_central(f: &NcPolynomial, ctx: &GenericContext) -> Result<Certificate> {
    Ok(central_certificate(&eval_generic(f, ctx)?))
}

pub fn trace_zero(f: &NcPolynomial, ctx: &GenericContext) -> Result<Certificate> {
    Ok(trace_certificate(f, &eval_generic(f, ctx)?, ctx.inv))
}

/// Searches seeded random tuples for one with `tr f(a) ≠ 0`.
pub fn find_trace_witness(
    f: &NcPolynomial,
    d: usize,
    inv: Involution,
    seed: u64,
    tries: usize,
) -> Result<Option<Vec<Matrix<Scalar>>>> {
    inv.check_dimension(d)?;
    let mut rng = sample::rng(seed);
    let n = (f.max_index() as usize).max(1);
    for _ in 0..tries {
        let tuple = sample::random_tuple(&mut rng, d, n, inv);
        if !eval_numeric(f, &tuple, inv)?.trace().is_zero() {
            return Ok(Some(tuple));
        }
    }
    Ok(None)
}
