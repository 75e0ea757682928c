use charvar::exact::{GaussianRational, Matrix, Polynomial, ScalarMatrix};
use charvar::presentation::{sigma_action, so4_generator_map};
use charvar::qinv::{pfaffian, q_form};
use charvar::sl2trace::{elementary_product, evaluate_word, reduce_trace, Elementary, TauVars};
use charvar::spin4::{phi, sigma_conjugate};
use charvar::FreeWord;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn letters(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)], 0..=max_len)
}

fn sl2() -> impl Strategy<Value = ScalarMatrix> {
    prop::collection::vec((any::<bool>(), -3i64..=3), 1..=5).prop_map(|fs| {
        let factors: Vec<(Elementary, i64)> =
            fs.into_iter().map(|(up, k)| (if up { Elementary::Upper } else { Elementary::Lower }, k)).collect();
        elementary_product(&factors)
    })
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, -5i64..=5).prop_map(|(re, im)| GaussianRational::from_parts((re, 1), (im, 1)))
}

fn square(n: usize) -> impl Strategy<Value = ScalarMatrix> {
    prop::collection::vec(gaussian(), n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
}

fn skew(n: usize) -> impl Strategy<Value = ScalarMatrix> {
    square(n).prop_map(|m| m.skew_part().unwrap())
}

fn so4_poly() -> impl Strategy<Value = Polynomial> {
    let names: Vec<String> = so4_generator_map().generators().iter().map(|v| v.name().to_owned()).collect();
    prop::collection::vec((prop::sample::select(names.clone()), prop::sample::select(names), -3i64..=3), 1..6).prop_map(
        |terms| {
            terms.iter().fold(Polynomial::zero(), |acc, (x, y, c)| {
                &acc + &(&Polynomial::named(x) * &Polynomial::named(y)).scale(&q(*c))
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_polynomial_matches_matrices(ls in letters(20), a in sl2(), b in sl2()) {
        let w = FreeWord::from_letters(&ls);
        let symbolic = reduce_trace(&w).unwrap().evaluate(&TauVars::plain().assignment(&a, &b)).unwrap();
        let direct = evaluate_word(&w, &[a, b]).unwrap().trace().unwrap();
        prop_assert_eq!(symbolic, direct);
    }

    #[test]
    fn trace_is_class_and_inverse_invariant(ls in letters(14), k in 0usize..14) {
        let w = FreeWord::from_letters(&ls);
        let t = reduce_trace(&w).unwrap();
        prop_assert_eq!(&reduce_trace(&w.inverse()).unwrap(), &t);
        let mut rotated = ls.clone();
        if !rotated.is_empty() {
            let k = k % rotated.len();
            rotated.rotate_left(k);
        }
        prop_assert_eq!(reduce_trace(&FreeWord::from_letters(&rotated)).unwrap(), t);
    }

    #[test]
    fn word_display_round_trips(ls in letters(20)) {
        let w = FreeWord::from_letters(&ls);
        prop_assert_eq!(FreeWord::parse(&w.to_string(), 2).unwrap(), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn phi_is_multiplicative(a1 in sl2(), a2 in sl2(), b1 in sl2(), b2 in sl2()) {
        let lhs = phi(&a1.mul(&a2).unwrap(), &b1.mul(&b2).unwrap()).unwrap();
        let rhs = phi(&a1, &b1).unwrap().mul(&phi(&a2, &b2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q4_is_symmetric_and_multilinear(x in square(4), y in square(4), z in square(4), c in gaussian()) {
        let qxz = q_form(&[x.clone(), z.clone()]).unwrap();
        prop_assert_eq!(&q_form(&[z.clone(), x.clone()]).unwrap(), &qxz);
        let combo = x.scale(&c).add(&y).unwrap();
        let lhs = q_form(&[combo, z.clone()]).unwrap();
        let rhs = &(&c * &qxz) + &q_form(&[y, z]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q4_sign_law(x in square(4), y in square(4)) {
        let flipped = q_form(&[sigma_conjugate(&x).unwrap(), sigma_conjugate(&y).unwrap()]).unwrap();
        prop_assert_eq!(flipped, -&q_form(&[x, y]).unwrap());
    }

    #[test]
    fn q4_ignores_symmetric_parts(x in square(4), y in square(4)) {
        let sym = x.add(&x.transpose()).unwrap();
        prop_assert!(q_form(&[sym, y]).unwrap().is_zero());
    }

    #[test]
    fn pfaffian_squares_to_determinant(s2 in skew(2), s4 in skew(4), s6 in skew(6)) {
        for s in [s2, s4, s6] {
            let pf = pfaffian(&s).unwrap();
            prop_assert_eq!(&pf * &pf, s.determinant().unwrap());
        }
    }

    #[test]
    fn polynomial_display_round_trips(p in so4_poly()) {
        prop_assert_eq!(Polynomial::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn sigma_action_is_ring_involution(p in so4_poly(), r in so4_poly()) {
        prop_assert_eq!(sigma_action(&sigma_action(&p)), p.clone());
        prop_assert_eq!(sigma_action(&(&p * &r)), &sigma_action(&p) * &sigma_action(&r));
        prop_assert_eq!(sigma_action(&(&p + &r)), &sigma_action(&p) + &sigma_action(&r));
    }
}
