mod common;

use common::*;
use nctrace::generic::eval_numeric;
use nctrace::subspace::{
    canonical_subspace, check_lie_closure, classify_subspace, congruence_closure, exact_span, skew_basis,
    skew_ideal_closure,
};
use nctrace::{corpus, CanonicalName, Involution, Letter, Matrix, NcPolynomial, Scalar, Word};
use proptest::prelude::*;

/// Random matrix pushed into one of several structured families, so closures
/// reach more than one canonical subspace.
fn shaped(m: &Matrix<Scalar>, inv: Involution, shape: u8) -> Matrix<Scalar> {
    let d = m.dim();
    let ms = m.star(inv).unwrap();
    let sym = m.add(&ms);
    let skew = m.sub(&ms);
    let scalar_part =
        |x: &Matrix<Scalar>| Matrix::identity(d).scale(&(&x.trace() / &Scalar::from_int(d as i64)));
    match shape % 7 {
        0 => m.clone(),
        1 => sym.clone(),
        2 => skew.clone(),
        3 => sym.sub(&scalar_part(&sym)),
        4 => skew.add(&Matrix::identity(d)),
        5 => m.sub(&scalar_part(m)),
        _ => Matrix::identity(d),
    }
}

fn skew_closure_is_canonical(m: Matrix<Scalar>, inv: Involution, shape: u8) -> Result<(), TestCaseError> {
    let seed = shaped(&m, inv, shape);
    let l = skew_ideal_closure(&[seed], m.dim(), inv).unwrap();
    prop_assert!(check_lie_closure(&l, inv).unwrap());
    prop_assert_ne!(classify_subspace(&l, inv).unwrap(), CanonicalName::Other);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn skew_closures_transpose_d3(m in arb_matrix(3), shape in 0u8..7) {
        skew_closure_is_canonical(m, Involution::Transpose, shape)?;
    }

    #[test]
    fn skew_closures_symplectic_d2(m in arb_matrix(2), shape in 0u8..7) {
        skew_closure_is_canonical(m, Involution::Symplectic, shape)?;
    }

    #[test]
    fn congruence_closures_land_in_four_spaces(m in arb_matrix(3), shape in 0u8..7, d in 2usize..=3) {
        let m = Matrix::from_fn(d, |i, j| m.get(i, j).clone());
        let l = congruence_closure(&[shaped(&m, Involution::Transpose, shape)], d).unwrap();
        let name = classify_subspace(&l, Involution::Transpose).unwrap();
        prop_assert!(matches!(name, CanonicalName::Zero | CanonicalName::K | CanonicalName::S | CanonicalName::Full));
    }

    #[test]
    fn star_is_trace_preserving_antiautomorphism(a in arb_matrix(4), b in arb_matrix(4)) {
        for inv in [Involution::Transpose, Involution::Symplectic] {
            prop_assert_eq!(a.mul(&b).star(inv).unwrap(), b.star(inv).unwrap().mul(&a.star(inv).unwrap()));
            prop_assert_eq!(a.star(inv).unwrap().star(inv).unwrap(), a.clone());
            prop_assert_eq!(a.star(inv).unwrap().trace(), a.trace());
        }
    }
}

const PERMS: [[u32; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn skew_closures_transpose_d5(m in arb_matrix(5), shape in 0u8..7) {
        skew_closure_is_canonical(m, Involution::Transpose, shape)?;
    }

    #[test]
    fn skew_closures_symplectic_d4(m in arb_matrix(4), shape in 0u8..7) {
        skew_closure_is_canonical(m, Involution::Symplectic, shape)?;
    }

    #[test]
    fn congruence_closures_d4(m in arb_matrix(4), shape in 0u8..7) {
        let l = congruence_closure(&[shaped(&m, Involution::Transpose, shape)], 4).unwrap();
        let name = classify_subspace(&l, Involution::Transpose).unwrap();
        prop_assert!(matches!(name, CanonicalName::Zero | CanonicalName::K | CanonicalName::S | CanonicalName::Full));
    }

    /// `[h(a), b] = Σ_i h(a_1, …, [a_i, b], …, a_n)` for multilinear `h`.
    #[test]
    fn multilinear_derivation_identity(
        perms in prop::collection::vec((prop::sample::select(PERMS.to_vec()), -3i64..=3), 1..4),
        a in prop::collection::vec(arb_matrix(2), 3),
        b in arb_matrix(2),
    ) {
        let h = NcPolynomial::from_terms(perms.into_iter().map(|(v, c)| {
            (Word::new(v.iter().map(|&i| Letter::new(i, false)).collect()), Scalar::from_int(c))
        }));
        let lhs = eval_numeric(&h, &a, Involution::None).unwrap().commutator(&b);
        let mut rhs = Matrix::zeros(2);
        for i in 0..3 {
            let mut args = a.clone();
            args[i] = a[i].commutator(&b);
            rhs = rhs.add(&eval_numeric(&h, &args, Involution::None).unwrap());
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn symplectic_dimension_table() {
    for (d, s, k) in [(2, 1, 3), (4, 6, 10), (6, 15, 21)] {
        let inv = Involution::Symplectic;
        assert_eq!(canonical_subspace(d, inv, CanonicalName::S).unwrap().dim(), s);
        assert_eq!(canonical_subspace(d, inv, CanonicalName::K).unwrap().dim(), k);
    }
    for d in 2..=5 {
        let inv = Involution::Transpose;
        assert_eq!(
            canonical_subspace(d, inv, CanonicalName::S).unwrap().dim(),
            d * (d + 1) / 2
        );
        assert_eq!(
            canonical_subspace(d, inv, CanonicalName::K).unwrap().dim(),
            d * (d - 1) / 2
        );
    }
}

#[test]
fn bracket_of_skews_generates_skews() {
    for (d, inv) in [
        (3, Involution::Transpose),
        (5, Involution::Transpose),
        (2, Involution::Symplectic),
        (4, Involution::Symplectic),
        (6, Involution::Symplectic),
    ] {
        let ks = skew_basis(d, inv).unwrap();
        let brackets: Vec<_> = ks
            .iter()
            .flat_map(|a| ks.iter().map(move |b| a.commutator(b)))
            .collect();
        let closed = skew_ideal_closure(&brackets, d, inv).unwrap();
        let k = canonical_subspace(d, inv, CanonicalName::K).unwrap();
        assert_eq!(closed.echelon(), k.echelon(), "d = {d}, {inv}");
    }
}

#[test]
fn exceptional_ideals_at_d4() {
    let [k1, k2] = corpus::exceptional_d4();
    let (l1, l2) = (
        exact_span(4, k1.iter()).unwrap(),
        exact_span(4, k2.iter()).unwrap(),
    );
    let k = canonical_subspace(4, Involution::Transpose, CanonicalName::K).unwrap();
    assert_eq!(l1.sum(&l2).echelon(), k.echelon());
    for (a, b) in k1.iter().zip(&k2) {
        assert!(a.commutator(b).is_zero());
    }
}

#[test]
fn span_of_traceless_matrices() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let mats: Vec<Matrix<Scalar>> = (0..20)
        .map(|_| {
            let m = Matrix::from_fn(3, |_, _| Scalar::from_int(rng.gen_range(-5..=5)));
            let t = m.trace();
            let mut m = m;
            let c = m.get(2, 2) - &t;
            m.set(2, 2, c);
            m
        })
        .collect();
    assert!(mats.iter().all(|m| m.trace().is_zero()));
    assert!(exact_span(3, mats.iter()).unwrap().dim() <= 8);
    assert_eq!(
        exact_span(
            3,
            [
                &Matrix::unit(3, 0, 0),
                &Matrix::unit(3, 0, 0).scale(&Scalar::from_int(2))
            ]
        )
        .unwrap()
        .dim(),
        1
    );
}
