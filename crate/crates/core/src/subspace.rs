//! Exact subspaces of `M_d` and the canonical Lie (skew-)ideals.
//!
//! Matrices are flattened row-major and kept in reduced row echelon form, so
//! two subspaces are equal iff their echelon rows are equal. All ranks are
//! computed over `Q(i)`; for rational input that coincides with the rank over
//! `Q`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{Involution, Matrix};
use crate::scalar::Scalar;

/// Reduced row echelon basis of a subspace of `F^width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    width: usize,
    // sorted by pivot column; each pivot entry is 1 and its column is zero elsewhere
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].checked_inv().unwrap();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }
}

/// A subspace of `M_d` with an independent basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    d: usize,
    basis: Vec<Matrix<Scalar>>,
    echelon: RowSpace,
}

impl Subspace {
    pub fn zero(d: usize) -> Self {
        Subspace {
            d,
            basis: Vec::new(),
            echelon: RowSpace::new(d * d),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<Scalar>] {
        &self.basis
    }

    pub fn echelon(&self) -> &RowSpace {
        &self.echelon
    }

    pub fn insert(&mut self, m: &Matrix<Scalar>) -> bool {
        assert_eq!(m.dim(), self.d, "matrix dimension mismatch");
        if self.echelon.insert(m.entries()) {
            self.basis.push(m.clone());
            true
        } else {
            false
        }
    }

    pub fn contains(&self, m: &Matrix<Scalar>) -> bool {
        m.dim() == self.d && self.echelon.contains(m.entries())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b);
        }
        s
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(d={}, dim={}, basis={:?})",
            self.d,
            self.dim(),
            self.basis
        )
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("dimension", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

/// Smallest subspace containing every input matrix.
pub fn exact_span<'a, I>(d: usize, mats: I) -> Result<Subspace>
where
    I: IntoIterator<Item = &'a Matrix<Scalar>>,
{
    let mut s = Subspace::zero(d);
    for m in mats {
        if m.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: m.dim(),
            });
        }
        s.insert(m);
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalName {
    Zero,
    Z,
    K,
    SK,
    S,
    ZplusK,
    Comm,
    Full,
    Other,
}

impl CanonicalName {
    pub const ALL: [CanonicalName; 8] = [
        CanonicalName::Zero,
        CanonicalName::Z,
        CanonicalName::K,
        CanonicalName::SK,
        CanonicalName::S,
        CanonicalName::ZplusK,
        CanonicalName::Comm,
        CanonicalName::Full,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            CanonicalName::Zero => "0",
            CanonicalName::Z => "Z",
            CanonicalName::K => "K",
            CanonicalName::SK => "[S,K]",
            CanonicalName::S => "S",
            CanonicalName::ZplusK => "Z+K",
            CanonicalName::Comm => "[A,A]",
            CanonicalName::Full => "A",
            CanonicalName::Other => "Other",
        }
    }

    /// Names that make sense for the involution.
    pub fn candidates(inv: Involution) -> &'static [CanonicalName] {
        const FOUR: [CanonicalName; 4] = [
            CanonicalName::Zero,
            CanonicalName::Z,
            CanonicalName::Comm,
            CanonicalName::Full,
        ];
        if inv.is_first_kind() {
            &CanonicalName::ALL
        } else {
            &FOUR
        }
    }
}

impl fmt::Display for CanonicalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for CanonicalName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl std::str::FromStr for CanonicalName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "0" | "zero" => CanonicalName::Zero,
            "z" => CanonicalName::Z,
            "k" => CanonicalName::K,
            "sk" | "[s,k]" => CanonicalName::SK,
            "s" => CanonicalName::S,
            "zplusk" | "z+k" => CanonicalName::ZplusK,
            "comm" | "[a,a]" => CanonicalName::Comm,
            "full" | "a" => CanonicalName::Full,
            _ => return Err(format!("unknown canonical subspace {s:?}")),
        })
    }
}

fn matrix_units(d: usize) -> Vec<Matrix<Scalar>> {
    (0..d)
        .flat_map(|i| (0..d).map(move |j| Matrix::unit(d, i, j)))
        .collect()
}

/// Basis of the skew elements `K = {x : x* = −x}`.
///
/// For the conjugate-transpose this is a `Q`-basis of the skew-hermitian
/// matrices, which is what brackets must range over; its `Q(i)`-span is all of
/// `M_d`.
pub fn skew_basis(d: usize, inv: Involution) -> Result<Vec<Matrix<Scalar>>> {
    inv.check_dimension(d)?;
    match inv {
        Involution::None => Err(Error::InvalidPairing {
            name: "K".into(),
            involution: inv.to_string(),
        }),
        Involution::ConjugateTranspose => {
            let mut out = Vec::new();
            for i in 0..d {
                out.push(Matrix::unit(d, i, i).scale(&Scalar::i()));
                for j in i + 1..d {
                    let (eij, eji) = (Matrix::<Scalar>::unit(d, i, j), Matrix::unit(d, j, i));
                    out.push(eij.sub(&eji));
                    out.push(eij.add(&eji).scale(&Scalar::i()));
                }
            }
            Ok(out)
        }
        _ => {
            let mut s = Subspace::zero(d);
            for e in matrix_units(d) {
                s.insert(&e.sub(&e.star(inv)?));
            }
            Ok(s.basis)
        }
    }
}

fn symmetric_basis(d: usize, inv: Involution) -> Result<Vec<Matrix<Scalar>>> {
    let mut s = Subspace::zero(d);
    for e in matrix_units(d) {
        s.insert(&e.add(&e.star(inv)?));
    }
    Ok(s.basis)
}

/// Explicit basis of one of the eight canonical subspaces.
pub fn canonical_subspace(d: usize, inv: Involution, name: CanonicalName) -> Result<Subspace> {
    inv.check_dimension(d)?;
    if !CanonicalName::candidates(inv).contains(&name) {
        return Err(Error::InvalidPairing {
            name: name.to_string(),
            involution: inv.to_string(),
        });
    }
    let units = matrix_units(d);
    let span = |ms: &[Matrix<Scalar>]| exact_span(d, ms.iter());
    match name {
        CanonicalName::Zero => Ok(Subspace::zero(d)),
        CanonicalName::Z => span(&[Matrix::identity(d)]),
        CanonicalName::Full => span(&units),
        CanonicalName::Comm => {
            let mut ms = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        ms.push(Matrix::unit(d, i, j));
                    }
                }
                if i + 1 < d {
                    ms.push(Matrix::unit(d, i, i).sub(&Matrix::unit(d, i + 1, i + 1)));
                }
            }
            span(&ms)
        }
        CanonicalName::K => span(&skew_basis(d, inv)?),
        CanonicalName::S => span(&symmetric_basis(d, inv)?),
        CanonicalName::ZplusK => {
            let mut ms = skew_basis(d, inv)?;
            ms.push(Matrix::identity(d));
            span(&ms)
        }
        CanonicalName::SK => {
            let (ss, ks) = (symmetric_basis(d, inv)?, skew_basis(d, inv)?);
            let mut out = Subspace::zero(d);
            for s in &ss {
                for k in &ks {
                    out.insert(&s.commutator(k));
                }
            }
            Ok(out)
        }
        CanonicalName::Other => unreachable!("Other is not a candidate"),
    }
}

fn closure<F>(d: usize, seed: &[Matrix<Scalar>], gens: &[Matrix<Scalar>], op: F) -> Result<Subspace>
where
    F: Fn(&Matrix<Scalar>, &Matrix<Scalar>) -> Matrix<Scalar>,
{
    let mut span = Subspace::zero(d);
    let mut queue = VecDeque::new();
    for m in seed {
        if m.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: m.dim(),
            });
        }
        if span.insert(m) {
            queue.push_back(m.clone());
        }
    }
    // every inserted basis vector is pushed once; op is linear in its first argument
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = op(&v, g);
            if span.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Ok(span)
}

fn seed_dim(seed: &[Matrix<Scalar>], d: Option<usize>) -> Result<usize> {
    match (seed.first(), d) {
        (Some(m), _) => Ok(m.dim()),
        (None, Some(d)) => Ok(d),
        (None, None) => Ok(1),
    }
}

/// Smallest subspace containing `seed` with `[L, K] ⊆ L`.
pub fn skew_ideal_closure(seed: &[Matrix<Scalar>], d: usize, inv: Involution) -> Result<Subspace> {
    let d = seed_dim(seed, Some(d))?;
    let ks = skew_basis(d, inv)?;
    closure(d, seed, &ks, |v, k| v.commutator(k))
}

/// Smallest Lie ideal (`[L, A] ⊆ L`) containing `seed`.
pub fn lie_ideal_closure(seed: &[Matrix<Scalar>], d: usize) -> Result<Subspace> {
    let d = seed_dim(seed, Some(d))?;
    closure(d, seed, &matrix_units(d), |v, e| v.commutator(e))
}

/// Smallest subspace containing `seed` and closed under `M ↦ MAᵗ + AM`.
pub fn congruence_closure(seed: &[Matrix<Scalar>], d: usize) -> Result<Subspace> {
    let d = seed_dim(seed, Some(d))?;
    closure(d, seed, &matrix_units(d), |m, a| {
        m.mul(&a.transpose()).add(&a.mul(m))
    })
}

/// Matches `L` against the canonical subspaces for `inv`, by exact row space.
pub fn classify_subspace(l: &Subspace, inv: Involution) -> Result<CanonicalName> {
    for &name in CanonicalName::candidates(inv) {
        let c = canonical_subspace(l.d(), inv, name)?;
        if c.dim() == l.dim() && c.echelon == l.echelon {
            return Ok(name);
        }
    }
    Ok(CanonicalName::Other)
}

/// `[L, A] ⊆ L` without involution, `[L, K] ⊆ L` with one; checked basiswise.
pub fn check_lie_closure(l: &Subspace, inv: Involution) -> Result<bool> {
    let gens = match inv {
        Involution::None => matrix_units(l.d()),
        _ => skew_basis(l.d(), inv)?,
    };
    Ok(l.basis()
        .iter()
        .all(|b| gens.iter().all(|g| l.contains(&b.commutator(g)))))
}
