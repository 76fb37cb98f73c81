//! Algebraic laws checked on randomized inputs, with the dense matrix
//! oracle as the independent reference for everything matrix-shaped.

mod common;

use common::{agrees, oracle_bracket, oracle_conj, oracle_is_triple, oracle_tau};
use proptest::prelude::*;
use sl2_core::{
    bracket, poly_ext_gcd, poly_gcd, verify_triple, Field, FieldElem, MatGL2, MatSL2, Monomial,
    Poly,
};

fn arb_poly(
    field: Field,
    nvars: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Poly> {
    let term = (
        proptest::collection::vec(0..=max_deg, nvars),
        -6i64..=6i64,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |ts| {
        let mut p = Poly::zero(field, nvars);
        for (exps, c) in ts {
            p = p.add(&Poly::from_terms(
                field,
                nvars,
                [(Monomial(exps), FieldElem::from_i64(field, c))],
            ));
        }
        p
    })
}

fn arb_sl2(field: Field, nvars: usize) -> impl Strategy<Value = MatSL2> {
    (
        arb_poly(field, nvars, 2, 3),
        arb_poly(field, nvars, 2, 3),
        arb_poly(field, nvars, 2, 3),
    )
        .prop_map(|(a, b, c)| MatSL2::new(a, b, c).unwrap())
}

/// E12(r) E21(s) diag(u, 1): enough variety for conjugation laws while
/// keeping entries small.
fn arb_gl2(field: Field, nvars: usize) -> impl Strategy<Value = MatGL2> {
    // the unit stays below 5 so it is nonzero in every supported field
    (
        arb_poly(field, nvars, 2, 2),
        arb_poly(field, nvars, 2, 2),
        1i64..=4i64,
    )
        .prop_map(move |(r, s, u)| {
            let d = MatGL2::diag_units(
                field,
                nvars,
                &FieldElem::from_i64(field, u),
                &FieldElem::one(field),
            )
            .unwrap();
            MatGL2::e12(&r).mul(&MatGL2::e21(&s)).mul(&d)
        })
}

const Q: Field = Field::Q;

fn f5() -> Field {
    Field::prime(5).unwrap()
}

proptest! {
    #[test]
    fn gcd_divides_both_and_is_monic(a in arb_poly(Q, 1, 4, 4), b in arb_poly(Q, 1, 4, 4)) {
        let g = poly_gcd(&a, &b);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        if !g.is_zero() {
            prop_assert_eq!(g.leading_coeff().unwrap(), FieldElem::one(Q));
        }
        prop_assert_eq!(poly_gcd(&b, &a), g);
    }

    #[test]
    fn gcd_scales_multiplicatively(
        a in arb_poly(Q, 1, 3, 3),
        b in arb_poly(Q, 1, 3, 3),
        c in arb_poly(Q, 1, 2, 2),
    ) {
        prop_assume!(!c.is_zero());
        let lhs = poly_gcd(&a.mul(&c), &b.mul(&c));
        let rhs = poly_gcd(&a, &b).mul(&c.monic());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both_mod_p(a in arb_poly(f5(), 1, 4, 4), b in arb_poly(f5(), 1, 4, 4)) {
        let g = poly_gcd(&a, &b);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
    }

    #[test]
    fn ext_gcd_produces_a_valid_combination(a in arb_poly(Q, 1, 4, 4), b in arb_poly(Q, 1, 4, 4)) {
        let (g, r, s) = poly_ext_gcd(&a, &b).unwrap();
        prop_assert_eq!(r.mul(&a).add(&s.mul(&b)), g.clone());
        prop_assert_eq!(g, poly_gcd(&a, &b));
    }

    #[test]
    fn divexact_inverts_multiplication(a in arb_poly(Q, 2, 2, 3), b in arb_poly(Q, 2, 2, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).divexact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(
        p in arb_poly(Q, 1, 3, 3),
        q in arb_poly(Q, 1, 3, 3),
        im in arb_poly(Q, 1, 2, 2),
    ) {
        let images = [im];
        let lhs = p.add(&q).subst(&images).unwrap();
        let rhs = p.subst(&images).unwrap().add(&q.subst(&images).unwrap());
        prop_assert_eq!(lhs, rhs);
        let lhs = p.mul(&q).subst(&images).unwrap();
        let rhs = p.subst(&images).unwrap().mul(&q.subst(&images).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_matches_dense_commutator(x in arb_sl2(Q, 1), y in arb_sl2(Q, 1)) {
        prop_assert!(agrees(&oracle_bracket(&x, &y), &bracket(&x, &y)));
    }

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(
        x in arb_sl2(Q, 1),
        y in arb_sl2(Q, 1),
        z in arb_sl2(Q, 1),
    ) {
        prop_assert_eq!(bracket(&x, &y), bracket(&y, &x).neg());
        let cyc = bracket(&bracket(&x, &y), &z)
            .add(&bracket(&bracket(&y, &z), &x))
            .add(&bracket(&bracket(&z, &x), &y));
        prop_assert!(cyc.is_zero());
    }

    #[test]
    fn conjugation_matches_dense_products(p in arb_gl2(Q, 1), z in arb_sl2(Q, 1)) {
        prop_assert!(agrees(&oracle_conj(&p, &z), &p.conj(&z)));
        prop_assert!(agrees(&oracle_tau(&p, &z), &p.tau(&z)));
    }

    #[test]
    fn conjugation_composes(p in arb_gl2(Q, 1), q in arb_gl2(Q, 1), z in arb_sl2(Q, 1)) {
        let pq = p.mul(&q);
        prop_assert_eq!(pq.conj(&z), q.conj(&p.conj(&z)));
        prop_assert_eq!(pq.tau(&z), p.tau(&q.tau(&z)));
        prop_assert_eq!(p.conj(&p.tau(&z)), z.clone());
    }

    #[test]
    fn quad_is_conjugation_invariant(p in arb_gl2(Q, 1), z in arb_sl2(Q, 1)) {
        prop_assert_eq!(p.conj(&z).quad(), z.quad());
    }

    #[test]
    fn conjugated_standard_triple_verifies(p in arb_gl2(Q, 1)) {
        let field = Q;
        let x = p.tau(&MatSL2::e(field, 1));
        let h = p.tau(&MatSL2::h(field, 1));
        let y = p.tau(&MatSL2::f(field, 1));
        prop_assert!(oracle_is_triple(&x, &h, &y));
        prop_assert!(verify_triple(x, h, y).is_ok());
    }

    #[test]
    fn conjugation_laws_mod_p(p in arb_gl2(f5(), 1), z in arb_sl2(f5(), 1)) {
        prop_assert!(agrees(&oracle_conj(&p, &z), &p.conj(&z)));
        prop_assert_eq!(p.conj(&z).quad(), z.quad());
    }

    #[test]
    fn multivariate_gcd_divides(a in arb_poly(Q, 2, 2, 3), b in arb_poly(Q, 2, 2, 3), s in arb_poly(Q, 2, 1, 2)) {
        let g = poly_gcd(&a, &b);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        // a forced common factor shows up in the gcd
        prop_assume!(!s.is_zero() && !a.is_zero() && !b.is_zero());
        let gs = poly_gcd(&a.mul(&s), &b.mul(&s));
        prop_assert!(s.monic().divides(&gs));
    }
}
