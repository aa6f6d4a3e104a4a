//! Sparse commutative polynomials over [`Scalar`] in the entry variables of
//! generic matrices.
//!
//! Variables are `ζ_ij^(ℓ)` (printed `z{ℓ}_{i}{j}`) and their formal
//! conjugates `ζ̄_ij^(ℓ)` (printed `zc{ℓ}_{i}{j}`); the latter only appear in
//! generic matrices of unitary type. Terms are kept in graded lexicographic
//! order with variables ordered by `(ℓ, i, j, conjugate)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub matrix: u32,
    pub row: u32,
    pub col: u32,
    pub conjugate: bool,
}

impl Var {
    pub fn new(matrix: u32, row: u32, col: u32) -> Self {
        Var {
            matrix,
            row,
            col,
            conjugate: false,
        }
    }

    pub fn conjugate_of(matrix: u32, row: u32, col: u32) -> Self {
        Var {
            matrix,
            row,
            col,
            conjugate: true,
        }
    }

    pub fn bar(self) -> Self {
        Var {
            conjugate: !self.conjugate,
            ..self
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.conjugate { "zc" } else { "z" };
        if self.row < 10 && self.col < 10 {
            write!(f, "{prefix}{}_{}{}", self.matrix, self.row, self.col)
        } else {
            write!(f, "{prefix}{}_{}_{}", self.matrix, self.row, self.col)
        }
    }
}

/// Exponent vector, sparse and sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let e = ea.checked_add(eb).expect("exponent overflow in CPoly product");
                        out.push((va, e));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&t), None) => {
                    out.push(t);
                    a.next();
                }
                (None, Some(&&t)) => {
                    out.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    fn bar(&self) -> Monomial {
        let mut v: Vec<_> = self.0.iter().map(|&(x, e)| (x.bar(), e)).collect();
        v.sort_by_key(|&(x, _)| x);
        Monomial(v)
    }
}

impl Ord for Monomial {
    // graded lex: total degree first, then the exponent of the smallest
    // variable decides (larger exponent = larger monomial)
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&(va, ea), &(vb, eb)) in self.0.iter().zip(other.0.iter()) {
            match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Assignment of scalars to variables.
pub type Point = BTreeMap<Var, Scalar>;

/// Element of `F[ζ]`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        CPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = CPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = CPoly::zero();
        p.add_term(Monomial::var(v), Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Conjugates every coefficient and fixes every variable.
    pub fn conj_coefficients(&self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.conj())).collect(),
        }
    }

    /// The involution of the unitary model: conjugates coefficients and
    /// swaps each `ζ` with its formal conjugate `ζ̄`.
    pub fn bar(&self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(m, a)| (m.bar(), a.conj())).collect(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn eval(&self, point: &Point) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point.get(&v).ok_or(Error::Unassigned(v))?;
                t = &t * &x.pow(e);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = c.term_parts();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag, m.is_one()) {
                (None, true) => write!(f, "1")?,
                (None, false) => write!(f, "{m}")?,
                (Some(s), true) => write!(f, "{s}")?,
                (Some(s), false) => write!(f, "{s}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_cpoly(s)
    }
}

impl<'a> Add<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn add(self, o: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn sub(self, o: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a CPoly> for &'a CPoly {
    type Output = CPoly;
    fn mul(self, o: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
