//! The free algebra `F⟨X̄⟩` and the free *-algebra `F⟨X̄, X̄*⟩`.

mod components;
mod cyclic;

pub use components::{extract_components, multihomog_components};
pub use cyclic::{
    commutator_witness, cyc_class_sums, cyc_equiv, cyc_normal_form, cyclic_reduce_linear, least_rotation,
    CycWitness,
};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A generator `X_i` or its adjoint `X_i*`. Unstarred sorts before starred.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u32,
    star: bool,
}

impl Letter {
    pub fn new(index: u32, star: bool) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Letter { index, star }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_star(self) -> bool {
        self.star
    }

    pub fn starred(self) -> Self {
        Letter {
            star: !self.star,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}", self.index, if self.star { "'" } else { "" })
    }
}

/// A monomial; the empty word is the unit. Ordered by length, then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Occurrences of `X_i` or `X_i*`.
    pub fn degree_in(&self, index: u32) -> usize {
        self.0.iter().filter(|l| l.index == index).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(k % self.0.len());
        }
        Word(v)
    }

    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.starred()).collect())
    }

    pub fn split_at(&self, k: usize) -> (Word, Word) {
        (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec()))
    }

    pub fn has_star(&self) -> bool {
        self.0.iter().any(|l| l.star)
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut k = 0;
        while k < self.0.len() {
            let l = self.0[k];
            let run = self.0[k..].iter().take_while(|&&m| m == l).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{run}")?;
            }
            k += run;
        }
        Ok(())
    }
}

/// Element of the free *-algebra: a sparse map from words to nonzero scalars.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn one() -> Self {
        NcPolynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NcPolynomial::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NcPolynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        NcPolynomial::monomial(w, Scalar::one())
    }

    /// `X_i`.
    pub fn var(index: u32) -> Self {
        NcPolynomial::word(Word::letter(Letter::new(index, false)))
    }

    /// `X_i*`.
    pub fn var_star(index: u32) -> Self {
        NcPolynomial::word(Word::letter(Letter::new(index, true)))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(terms: I) -> Self {
        let mut p = NcPolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether any starred letter occurs, i.e. `f ∉ F⟨X̄⟩`.
    pub fn has_star(&self) -> bool {
        self.terms.keys().any(Word::has_star)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn degree_in(&self, index: u32) -> usize {
        self.terms.keys().map(|w| w.degree_in(index)).max().unwrap_or(0)
    }

    /// Largest variable index that occurs (0 for constants).
    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(Word::max_index).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return NcPolynomial::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = NcPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// The involution: reverses words, toggles stars, conjugates coefficients.
    pub fn star(&self) -> Self {
        NcPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.star(), c.conj())).collect(),
        }
    }

    /// `(f + f*)/2`.
    pub fn sym_part(&self) -> Self {
        (self + &self.star()).scale(&Scalar::from_ratio(1, 2))
    }

    /// `(f − f*)/2`.
    pub fn skew_part(&self) -> Self {
        (self - &self.star()).scale(&Scalar::from_ratio(1, 2))
    }

    /// Replaces `X_i` by `h` and `X_i*` by `h*`.
    pub fn substitute(&self, index: u32, h: &NcPolynomial) -> Self {
        let h_star = h.star();
        let mut out = NcPolynomial::zero();
        for (w, c) in &self.terms {
            let mut acc = NcPolynomial::constant(c.clone());
            for &l in w.letters() {
                let factor = if l.index != index {
                    NcPolynomial::word(Word::letter(l))
                } else if l.star {
                    h_star.clone()
                } else {
                    h.clone()
                };
                acc = &acc * &factor;
            }
            out = &out + &acc;
        }
        out
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.term_parts();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag, w.is_empty()) {
                (None, true) => write!(f, "1")?,
                (None, false) => write!(f, "{w}")?,
                (Some(s), true) => write!(f, "{s}")?,
                (Some(s), false) => write!(f, "{s}*{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NcPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for NcPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_poly(s)
    }
}

impl<'a> Add<&'a NcPolynomial> for &'a NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, o: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a NcPolynomial> for &'a NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, o: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a NcPolynomial> for &'a NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, o: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        NcPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NcPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn star_is_anti_automorphism() {
        assert_eq!(p("x1*x2").star(), p("x2'*x1'"));
        let (f, g) = (p("x1 + 2*x2*x1'"), p("x3^2 - i*x1"));
        assert_eq!((&f * &g).star(), &g.star() * &f.star());
        assert_eq!(f.star().star(), f);
    }

    #[test]
    fn sym_skew_split() {
        let f = p("x1");
        assert_eq!(f.sym_part(), p("1/2*x1 + 1/2*x1'"));
        let g = p("x1*x2' + 3*x2 - i");
        assert_eq!(&g.sym_part() + &g.skew_part(), g);
        assert_eq!(g.sym_part().star(), g.sym_part());
        assert_eq!(g.skew_part().star(), -&g.skew_part());
    }

    #[test]
    fn substitution() {
        assert_eq!(p("x1*x2").substitute(2, &p("x1")), p("x1^2"));
        assert_eq!(p("x2'*x1").substitute(2, &p("x1*x3")), p("x3'*x1'*x1"));
    }

    #[test]
    fn degrees_count_stars_with_base_variable() {
        let w = p("x1*x2*x1'");
        assert_eq!(w.degree_in(1), 2);
        assert_eq!(w.degree_in(2), 1);
        assert!(w.has_star());
        assert!(!p("x1*x2").has_star());
    }

    #[test]
    fn canonical_print() {
        assert_eq!(p("x2*x1 - x1*x2").to_string(), "-x1*x2 + x2*x1");
        assert_eq!(p("x1*x1*x1'").to_string(), "x1^2*x1'");
        assert_eq!(p("2 - 1/3*x1 + i*x2").to_string(), "2 - 1/3*x1 + i*x2");
        assert_eq!(p("(1+i)*x1").to_string(), "(1+i)*x1");
        assert_eq!(p("0").to_string(), "0");
    }
}
