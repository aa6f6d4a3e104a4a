//! Cyclic equivalence: `f ~ g` iff `f − g` is a sum of commutators.
//!
//! Two words are cyclically equivalent iff one is a rotation of the other, and
//! two polynomials are equivalent iff their coefficient sums agree on every
//! rotation class. Classes are represented by their least rotation.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::{NcPolynomial, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Start index of the lexicographically least rotation of `s`.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

pub fn cyc_normal_form(w: &Word) -> Word {
    w.rotate(least_rotation(w.letters()))
}

/// Coefficient sum of `f` over each rotation class, keyed by representative.
/// Classes with zero sum are omitted.
pub fn cyc_class_sums(f: &NcPolynomial) -> BTreeMap<Word, Scalar> {
    let mut sums: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in f.terms() {
        let e = sums.entry(cyc_normal_form(w)).or_default();
        *e = &*e + c;
    }
    sums.retain(|_, c| !c.is_zero());
    sums
}

pub fn cyc_equiv(f: &NcPolynomial, g: &NcPolynomial) -> bool {
    cyc_class_sums(&(f - g)).is_empty()
}

/// Pairs `(g_i, h_i)` with `Σ [g_i, h_i]` equal to the witnessed polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct CycWitness {
    pub pairs: Vec<(NcPolynomial, NcPolynomial)>,
}

impl CycWitness {
    pub fn expand(&self) -> NcPolynomial {
        self.pairs
            .iter()
            .fold(NcPolynomial::zero(), |acc, (g, h)| &acc + &g.commutator(h))
    }
}

/// Writes `f` as a sum of commutators when `f ~ 0`.
///
/// A word `w = v₁v₂` whose normal form is `v₂v₁` contributes
/// `a(v₁v₂ − v₂v₁) = [v₂, −a·v₁]`; the normal-form residue then vanishes
/// because every class sum is zero.
pub fn commutator_witness(f: &NcPolynomial) -> Option<CycWitness> {
    if !cyc_equiv(f, &NcPolynomial::zero()) {
        return None;
    }
    let mut pairs = Vec::new();
    for (w, c) in f.terms() {
        let k = least_rotation(w.letters());
        if k == 0 {
            continue;
        }
        let (v1, v2) = w.split_at(k);
        pairs.push((NcPolynomial::word(v2), NcPolynomial::monomial(v1, -c)));
    }
    let witness = CycWitness { pairs };
    if &witness.expand() != f {
        return None;
    }
    Some(witness)
}

/// For `f` linear in `X_n`, returns `(g, g')` free of `X_n` with
/// `f ~ g·X_n + X_n*·g'`.
pub fn cyclic_reduce_linear(f: &NcPolynomial, n: u32) -> Result<(NcPolynomial, NcPolynomial)> {
    let mut g = NcPolynomial::zero();
    let mut g_prime = NcPolynomial::zero();
    for (w, c) in f.terms() {
        let positions: Vec<usize> = w
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index() == n)
            .map(|(k, _)| k)
            .collect();
        let [pos] = positions[..] else {
            return Err(Error::NotLinear(n));
        };
        let (m, rest) = w.split_at(pos);
        let (x, m_tail) = rest.split_at(1);
        // m·X·m' ~ m'·m·X   and   m·X*·m' ~ X*·m'·m
        let moved = NcPolynomial::monomial(m_tail.concat(&m), c.clone());
        if x.letters()[0].is_star() {
            g_prime = &g_prime + &moved;
        } else {
            g = &g + &moved;
        }
    }
    let rebuilt = &(&g * &NcPolynomial::var(n)) + &(&NcPolynomial::var_star(n) * &g_prime);
    if !cyc_equiv(f, &rebuilt) {
        return Err(Error::Inconsistent(format!(
            "cyclic reduction of {f} in x{n} failed to re-verify"
        )));
    }
    Ok((g, g_prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::Letter;
    use proptest::prelude::*;

    fn p(s: &str) -> NcPolynomial {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Word {
        let f = p(s);
        let w = f.terms().next().unwrap().0.clone();
        w
    }

    #[test]
    fn normal_forms() {
        assert_eq!(cyc_normal_form(&word("x2*x1")), word("x1*x2"));
        assert_eq!(cyc_normal_form(&word("x1*x1'")), word("x1*x1'"));
        assert_eq!(cyc_normal_form(&word("x1'*x1")), word("x1*x1'"));
        assert_eq!(cyc_normal_form(&Word::empty()), Word::empty());
        assert_eq!(cyc_normal_form(&word("x2*x1*x2*x1*x1")), word("x1*x1*x2*x1*x2"));
    }

    #[test]
    fn equivalence_examples() {
        assert!(cyc_equiv(&p("x1*x2"), &p("x2*x1")));
        assert!(cyc_equiv(&p("x1*x2 - x2*x1"), &NcPolynomial::zero()));
        assert!(!cyc_equiv(&p("x1"), &p("x2")));
        assert!(cyc_equiv(&p("x1*x1'*x2"), &p("x2*x1*x1'")));
        assert!(!cyc_equiv(&p("x1*x1'*x2"), &p("x1'*x1*x2")));
    }

    #[test]
    fn witness_examples() {
        let w = commutator_witness(&p("x1*x2 - x2*x1")).unwrap();
        assert_eq!(w.pairs, vec![(p("x1"), p("x2"))]);
        assert_eq!(commutator_witness(&NcPolynomial::zero()).unwrap().pairs, vec![]);
        let w = commutator_witness(&p("x1*x2*x3 - x3*x1*x2")).unwrap();
        assert_eq!(w.pairs, vec![(p("x1*x2"), p("x3"))]);
        assert!(commutator_witness(&p("x1*x2")).is_none());
    }

    #[test]
    fn reduce_linear_examples() {
        // m X m' -> g = m'm
        let (g, gp) = cyclic_reduce_linear(&p("x1*x2*x3*x1^2"), 3).unwrap();
        assert_eq!(g, p("x1^2*x1*x2"));
        assert!(gp.is_zero());
        // m X* m' -> g' = m'm
        let (g, gp) = cyclic_reduce_linear(&p("x1*x2'*x1'"), 2).unwrap();
        assert!(g.is_zero());
        assert_eq!(gp, p("x1'*x1"));
        let (g, gp) = cyclic_reduce_linear(&p("x4"), 4).unwrap();
        assert_eq!(g, NcPolynomial::one());
        assert!(gp.is_zero());
        assert_eq!(cyclic_reduce_linear(&p("x1*x2*x1"), 1), Err(Error::NotLinear(1)));
        assert_eq!(cyclic_reduce_linear(&p("x1 + x2"), 1), Err(Error::NotLinear(1)));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1u32..4, any::<bool>()), 0..7)
            .prop_map(|v| Word::new(v.into_iter().map(|(i, s)| Letter::new(i, s)).collect()))
    }

    fn arb_poly() -> impl Strategy<Value = NcPolynomial> {
        prop::collection::vec((arb_word(), -3i64..4), 0..6)
            .prop_map(|ts| NcPolynomial::from_terms(ts.into_iter().map(|(w, c)| (w, Scalar::from_int(c)))))
    }

    proptest! {
        #[test]
        fn least_rotation_matches_brute_force(w in arb_word()) {
            let brute = (0..w.len().max(1)).map(|k| w.rotate(k)).min().unwrap();
            prop_assert_eq!(cyc_normal_form(&w), brute);
        }

        #[test]
        fn normal_form_is_rotation_invariant(w in arb_word(), k in 0usize..8) {
            prop_assert_eq!(cyc_normal_form(&w.rotate(k)), cyc_normal_form(&w));
        }

        #[test]
        fn equivalence_relation(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert!(cyc_equiv(&f, &f));
            prop_assert_eq!(cyc_equiv(&f, &g), cyc_equiv(&g, &f));
            prop_assert_eq!(cyc_equiv(&f, &g), cyc_equiv(&(&f - &g), &NcPolynomial::zero()));
            if cyc_equiv(&f, &g) && cyc_equiv(&g, &h) {
                prop_assert!(cyc_equiv(&f, &h));
            }
        }

        #[test]
        fn witness_re_expands(f in arb_poly(), g in arb_poly()) {
            let c = f.commutator(&g);
            let w = commutator_witness(&c).unwrap();
            prop_assert_eq!(w.expand(), c);
        }
    }
}
