//! Classification of a polynomial by the span of its matrix values.
//!
//! The verdict is read off the generic evaluation `e` by a decision tree; a
//! seeded exact span sample is kept as a cross-check and must stay inside the
//! predicted canonical subspace.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::NcPolynomial;
use crate::generic::{self, Certificate, Claim, GenericContext};
use crate::matrix::{Involution, Matrix};
use crate::sample;
use crate::subspace::{canonical_subspace, classify_subspace, CanonicalName, Subspace};

pub use crate::subspace::check_lie_closure;

pub const DEFAULT_BUDGET: usize = 512;
pub const STABLE_WINDOW: usize = 8;
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Identity,
    Central,
    Skew,
    SkewPlusCentral,
    SymmetricTraceZero,
    Symmetric,
    SumOfCommutators,
    Full,
}

impl Verdict {
    pub fn span(self) -> CanonicalName {
        match self {
            Verdict::Identity => CanonicalName::Zero,
            Verdict::Central => CanonicalName::Z,
            Verdict::Skew => CanonicalName::K,
            Verdict::SkewPlusCentral => CanonicalName::ZplusK,
            Verdict::SymmetricTraceZero => CanonicalName::SK,
            Verdict::Symmetric => CanonicalName::S,
            Verdict::SumOfCommutators => CanonicalName::Comm,
            Verdict::Full => CanonicalName::Full,
        }
    }

    /// Case label in the four-way (no involution, second kind) or eight-way
    /// (first kind) list.
    pub fn case(self, inv: Involution) -> &'static str {
        if inv.is_first_kind() {
            match self {
                Verdict::Identity => "(i)",
                Verdict::Central => "(ii)",
                Verdict::Skew => "(iii)",
                Verdict::SkewPlusCentral => "(iv)",
                Verdict::SymmetricTraceZero => "(v)",
                Verdict::Symmetric => "(vi)",
                Verdict::SumOfCommutators => "(vii)",
                Verdict::Full => "(viii)",
            }
        } else {
            match self {
                Verdict::Identity => "(i)",
                Verdict::Central => "(ii)",
                Verdict::SumOfCommutators => "(iii)",
                _ => "(iv)",
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanClaim {
    pub name: CanonicalName,
    pub dimension: usize,
    pub basis: Vec<Matrix<crate::Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanSample {
    pub subspace: Subspace,
    pub samples_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub schema: u32,
    pub polynomial: NcPolynomial,
    pub d: usize,
    pub involution: &'static str,
    pub seed: u64,
    pub budget: usize,
    pub verdict: Verdict,
    pub case: &'static str,
    pub span: SpanClaim,
    pub certificates: Vec<Certificate>,
    pub samples_used: usize,
    pub sampled_dimension: usize,
    pub sampled_name: CanonicalName,
    pub sampled_lie_closed: bool,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub sampled: Subspace,
}

/// Seeded span of `f(A)`: stops once the rank has not grown for
/// `STABLE_WINDOW` samples, reaches `target`, or `budget` samples are used.
pub fn span_sample(
    f: &NcPolynomial,
    d: usize,
    inv: Involution,
    seed: u64,
    budget: usize,
    target: Option<usize>,
) -> Result<SpanSample> {
    if budget == 0 {
        return Err(Error::EmptyBudget);
    }
    inv.check_dimension(d)?;
    let n = f.max_index() as usize;
    let mut rng = sample::rng(seed);
    let mut span = Subspace::zero(d);
    let (mut used, mut stable) = (0, 0);
    while used < budget {
        if target == Some(span.dim()) || span.dim() == d * d {
            break;
        }
        let tuple = sample::random_tuple(&mut rng, d, n.max(1), inv);
        let value = generic::eval_numeric(f, &tuple, inv)?;
        used += 1;
        if span.insert(&value) {
            stable = 0;
        } else {
            stable += 1;
            if stable >= STABLE_WINDOW {
                break;
            }
        }
    }
    Ok(SpanSample {
        subspace: span,
        samples_used: used,
    })
}

struct Tree {
    verdict: Verdict,
    certificates: Vec<Certificate>,
}

fn four_way(f: &NcPolynomial, ctx: &GenericContext) -> Result<Tree> {
    let e = generic::eval_generic(f, ctx)?;
    let mut certificates = vec![generic::identity_certificate(&e)];
    if certificates[0].verdict {
        return Ok(Tree {
            verdict: Verdict::Identity,
            certificates,
        });
    }
    certificates.push(generic::central_certificate(&e));
    if certificates[1].verdict {
        return Ok(Tree {
            verdict: Verdict::Central,
            certificates,
        });
    }
    let trace = generic::trace_certificate(f, &e, ctx.involution());
    let verdict = if trace.verdict {
        Verdict::SumOfCommutators
    } else {
        Verdict::Full
    };
    certificates.push(trace);
    Ok(Tree {
        verdict,
        certificates,
    })
}

fn eight_way(f: &NcPolynomial, ctx: &GenericContext) -> Result<Tree> {
    let d = ctx.d();
    let e = generic::eval_generic(f, ctx)?;
    let es = e.star(ctx.involution())?;
    let (plus, minus) = (e.add(&es), e.sub(&es));
    let mut certificates = Vec::new();
    let mut step = |c: Certificate| {
        let v = c.verdict;
        certificates.push(c);
        v
    };
    let verdict = if step(generic::identity_certificate(&e)) {
        Verdict::Identity
    } else if step(generic::central_certificate(&e)) {
        Verdict::Central
    } else if step(generic::certify_zero(
        Claim::Skew,
        &plus,
        "e + e* = 0: f(A) lies in K",
        d,
    )) {
        Verdict::Skew
    } else if step(generic::certify_scalar(
        Claim::SkewPlusCentral,
        &plus,
        "e + e* is a nonzero scalar matrix: f(A) lies in Z + K",
        d,
    )) {
        Verdict::SkewPlusCentral
    } else {
        let symmetric = step(generic::certify_zero(
            Claim::Symmetric,
            &minus,
            "e - e* = 0: f(A) lies in S",
            d,
        ));
        let trace_zero = step(generic::trace_certificate(f, &e, ctx.involution()));
        match (symmetric, trace_zero) {
            (true, true) => Verdict::SymmetricTraceZero,
            (true, false) => Verdict::Symmetric,
            (false, true) => Verdict::SumOfCommutators,
            (false, false) => Verdict::Full,
        }
    };
    Ok(Tree {
        verdict,
        certificates,
    })
}

fn check_min_dimension(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::DimensionTooSmall { d, min: 2 });
    }
    Ok(())
}

fn report(
    f: &NcPolynomial,
    d: usize,
    inv: Involution,
    seed: u64,
    budget: usize,
    tree: Tree,
) -> Result<ClassReport> {
    let name = tree.verdict.span();
    let predicted = canonical_subspace(d, inv, name)?;
    let sample = span_sample(f, d, inv, seed, budget, Some(predicted.dim()))?;
    if !sample.subspace.is_subspace_of(&predicted) {
        return Err(Error::Inconsistent(format!(
            "sampled values of {f} leave the predicted span {name} (d = {d}, {inv})"
        )));
    }
    let mut warnings = Vec::new();
    let mut notes = Vec::new();
    if inv.is_first_kind() && matches!(d, 2 | 4) {
        warnings.push(format!(
            "d = {d}: span classification for first-kind involutions is unproven at this dimension; sampled evidence attached"
        ));
    }
    if sample.subspace.dim() < predicted.dim() {
        warnings.push(format!(
            "sampling stopped at dimension {} below the predicted {} after {} samples",
            sample.subspace.dim(),
            predicted.dim(),
            sample.samples_used
        ));
    }
    if inv != Involution::None && matches!(tree.verdict, Verdict::Central | Verdict::SkewPlusCentral) {
        notes.push("central class read as: the generic evaluation is a scalar matrix".to_string());
    }
    let sampled_name = classify_subspace(&sample.subspace, inv)?;
    let sampled_lie_closed = check_lie_closure(&sample.subspace, inv)?;
    Ok(ClassReport {
        schema: SCHEMA,
        polynomial: f.clone(),
        d,
        involution: inv.name(),
        seed,
        budget,
        verdict: tree.verdict,
        case: tree.verdict.case(inv),
        span: SpanClaim {
            name,
            dimension: predicted.dim(),
            basis: predicted.basis().to_vec(),
        },
        certificates: tree.certificates,
        samples_used: sample.samples_used,
        sampled_dimension: sample.subspace.dim(),
        sampled_name,
        sampled_lie_closed,
        warnings,
        notes,
        sampled: sample.subspace,
    })
}

pub fn classify_nostar(f: &NcPolynomial, d: usize, seed: u64, budget: usize) -> Result<ClassReport> {
    check_min_dimension(d)?;
    if f.has_star() {
        return Err(Error::StarWithoutInvolution);
    }
    let ctx = GenericContext::for_poly(f, d, Involution::None)?;
    report(f, d, Involution::None, seed, budget, four_way(f, &ctx)?)
}

pub fn classify_star_firstkind(
    f: &NcPolynomial,
    d: usize,
    inv: Involution,
    seed: u64,
    budget: usize,
) -> Result<ClassReport> {
    check_min_dimension(d)?;
    if !inv.is_first_kind() {
        return Err(Error::InvalidPairing {
            name: "first-kind classification".into(),
            involution: inv.to_string(),
        });
    }
    let ctx = GenericContext::for_poly(f, d, inv)?;
    report(f, d, inv, seed, budget, eight_way(f, &ctx)?)
}

pub fn classify_star_secondkind(f: &NcPolynomial, d: usize, seed: u64, budget: usize) -> Result<ClassReport> {
    check_min_dimension(d)?;
    let inv = Involution::ConjugateTranspose;
    let ctx = GenericContext::for_poly(f, d, inv)?;
    report(f, d, inv, seed, budget, four_way(f, &ctx)?)
}

pub fn classify(
    f: &NcPolynomial,
    d: usize,
    inv: Involution,
    seed: u64,
    budget: usize,
) -> Result<ClassReport> {
    match inv {
        Involution::None => classify_nostar(f, d, seed, budget),
        Involution::Transpose | Involution::Symplectic => classify_star_firstkind(f, d, inv, seed, budget),
        Involution::ConjugateTranspose => classify_star_secondkind(f, d, seed, budget),
    }
}
