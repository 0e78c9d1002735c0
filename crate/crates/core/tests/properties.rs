use fricke::numerics::{character_point, sample_rep_stream, TRACE_TOLERANCE};
use fricke::{trace_poly, Letter, PolyMap, PolyMatrix, Polynomial, Word};
use num_complex::Complex64;
use proptest::prelude::*;

const N: usize = 2;
const VARS: usize = 3;

fn poly(terms: Vec<(i64, Vec<u32>)>) -> Polynomial {
    terms
        .into_iter()
        .fold(Polynomial::zero(N), |acc, (c, exps)| {
            let m = exps
                .iter()
                .enumerate()
                .fold(Polynomial::from_int(N, c), |t, (v, &e)| {
                    &t * &Polynomial::var(N, v).pow(e)
                });
            &acc + &m
        })
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..=2, VARS)), 0..5).prop_map(poly)
}

fn arb_point() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(
        (-1.5f64..1.5, -1.5f64..1.5).prop_map(|(r, i)| Complex64::new(r, i)),
        VARS,
    )
}

fn arb_map() -> impl Strategy<Value = PolyMap> {
    prop::collection::vec(arb_poly(), VARS).prop_map(|c| PolyMap::new(N, c).unwrap())
}

fn arb_matrix(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop::collection::vec(arb_poly(), size), size)
        .prop_map(|rows| PolyMatrix::from_rows(N, rows).unwrap())
}

fn arb_word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, any::<bool>()), 0..=8).prop_map(move |ls| {
        Word::from_letters(n, ls.into_iter().map(|(g, inv)| Letter::new(g, inv))).unwrap()
    })
}

fn close(a: Complex64, b: Complex64, scale: f64) -> bool {
    (a - b).norm() <= 1e-9 * scale.max(a.norm()).max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn text_round_trip(p in arb_poly()) {
        prop_assert_eq!(Polynomial::parse(N, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), x in arb_point()) {
        let (pv, qv) = (p.evaluate(&x).unwrap(), q.evaluate(&x).unwrap());
        let scale = pv.norm() * qv.norm() + 1e3;
        prop_assert!(close((&p * &q).evaluate(&x).unwrap(), pv * qv, scale));
        prop_assert!(close((&p + &q).evaluate(&x).unwrap(), pv + qv, scale));
    }

    #[test]
    fn substitution_is_multiplicative(p in arb_poly(), q in arb_poly(), m in arb_map()) {
        let lhs = (&p * &q).substitute(&m).unwrap();
        let rhs = &p.substitute(&m).unwrap() * &q.substitute(&m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_is_multiplicative(a in arb_matrix(2), b in arb_matrix(2)) {
        let lhs = a.mul(&b).unwrap().det().unwrap();
        prop_assert_eq!(lhs, &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn elimination_agrees_with_cofactors(a in arb_matrix(3)) {
        prop_assert_eq!(a.det_bareiss().unwrap(), a.det_cofactor().unwrap());
    }

    #[test]
    fn chain_rule(f in arb_map(), g in arb_map()) {
        let lhs = f.compose(&g).unwrap().jacobian();
        let rhs = f.jacobian().substitute_all(g.components()).unwrap().mul(&g.jacobian()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_matches_matrices(w in arb_word(3), stream in 0u64..1000) {
        let rho = sample_rep_stream(3, 77, stream).unwrap();
        let (v, scale) = trace_poly(&w, 3).unwrap().evaluate_scaled(&character_point(&rho)).unwrap();
        let exact = rho.trace(&w);
        prop_assert!((v - exact).norm() <= TRACE_TOLERANCE * scale.max(exact.norm()).max(1.0));
    }

    #[test]
    fn trace_is_a_class_function(w in arb_word(3), k in 0usize..8, c in arb_word(3)) {
        let t = trace_poly(&w, 3).unwrap();
        let reduced = w.cyclically_reduced();
        prop_assert_eq!(&trace_poly(&reduced.rotated(k), 3).unwrap(), &t);
        prop_assert_eq!(&trace_poly(&w.inverse(), 3).unwrap(), &t);
        prop_assert_eq!(&trace_poly(&c.concat(&w).concat(&c.inverse()), 3).unwrap(), &t);
        prop_assert_eq!(w.canonical_rep().canonical_rep(), w.canonical_rep());
    }

    #[test]
    fn trace_polynomials_are_integral(w in arb_word(4)) {
        prop_assert!(trace_poly(&w, 4).unwrap().is_integral());
    }
}
