use proptest::prelude::*;

use weylres::expr::{parse_bi, parse_uni, parse_weyl};
use weylres::poly::jacobian;
use weylres::theta::{theta, ThetaContext};
use weylres::weyl::Mono;
use weylres::{BiPoly, CoeffRing, FieldSpec, Gf, PerfectField, UniPoly, WeylElement, ZAut};

const FIELDS: [(u32, usize); 6] = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)];

fn field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, n)| FieldSpec::extension(p, n).unwrap())
}

fn elt(k: &FieldSpec, code: u32) -> Gf {
    k.wrap_index(code % k.order())
}

fn uni(k: &FieldSpec, codes: &[u32]) -> UniPoly<FieldSpec> {
    UniPoly::from_terms(k, codes.iter().enumerate().map(|(e, &c)| (e as u32, elt(k, c))))
}

fn bi(k: &FieldSpec, codes: &[(u32, u32, u32)]) -> BiPoly<FieldSpec> {
    BiPoly::from_terms(k, codes.iter().map(|&(i, j, c)| ((i, j), elt(k, c))))
}

/// Element of `A_1` with exponents drawn from `{0, 1, p, p+1, 2p}`, so that
/// both central and non-central monomials turn up.
fn weyl(k: &FieldSpec, codes: &[(u8, u8, u32)]) -> WeylElement<FieldSpec> {
    let p = k.p();
    let exps = [0, 1, p, p + 1, 2 * p];
    WeylElement::from_terms(
        k,
        1,
        codes.iter().map(|&(a, b, c)| {
            let mono = Mono { x: [exps[a as usize % 5], 0], d: [exps[b as usize % 5], 0] };
            (mono, elt(k, c))
        }),
    )
}

fn codes(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 0..max_len)
}

fn bicodes() -> impl Strategy<Value = Vec<(u32, u32, u32)>> {
    prop::collection::vec((0u32..3, 0u32..3, any::<u32>()), 0..5)
}

fn factorial(k: u32) -> u64 {
    (1..=k as u64).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(k in field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (elt(&k, a), elt(&k, b), elt(&k, c));
        prop_assert_eq!(k.mul(&a, &k.mul(&b, &c)), k.mul(&k.mul(&a, &b), &c));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.add(&a, &k.neg(&a)), Gf::ZERO);
        if let Some(inv) = PerfectField::inv(&k, &a) {
            prop_assert_eq!(k.mul(&a, &inv), Gf::ONE);
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn frobenius_is_a_ring_automorphism(k in field(), a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (elt(&k, a), elt(&k, b));
        prop_assert_eq!(k.frobenius(&k.add(&a, &b)), k.add(&k.frobenius(&a), &k.frobenius(&b)));
        prop_assert_eq!(k.frobenius(&k.mul(&a, &b)), k.mul(&k.frobenius(&a), &k.frobenius(&b)));
        prop_assert_eq!(k.inv_frobenius(&k.frobenius(&a)), a);
    }

    #[test]
    fn polynomial_ring_axioms(k in field(), f in codes(6), g in codes(6), h in codes(6)) {
        let (f, g, h) = (uni(&k, &f), uni(&k, &g), uni(&k, &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
    }

    #[test]
    fn derivative_is_factorial_times_divided_power(k in field(), f in codes(20), order in 0u32..10) {
        let f = uni(&k, &f);
        let scaled = f.divided_power(order).scale(&k.mul_int(&Gf::ONE, factorial(order)));
        prop_assert_eq!(f.derivative(order), scaled);
    }

    #[test]
    fn p_decompose_round_trip(k in field(), f in codes(30)) {
        let f = uni(&k, &f);
        let parts = f.p_decompose();
        prop_assert_eq!(parts.len(), k.p() as usize);
        prop_assert_eq!(UniPoly::p_recompose(&k, &parts), f);
    }

    #[test]
    fn leading_terms_multiply(k in field(), f in codes(8), g in codes(8)) {
        let (f, g) = (uni(&k, &f), uni(&k, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (df, cf) = f.leading_term().unwrap();
        let (dg, cg) = g.leading_term().unwrap();
        prop_assert_eq!((&f * &g).leading_term().unwrap(), (df + dg, k.mul(&cf, &cg)));
    }

    #[test]
    fn jacobian_chain_rule(k in field(), p in bicodes(), q in bicodes(), u in bicodes(), v in bicodes()) {
        let (p, q, u, v) = (bi(&k, &p), bi(&k, &q), bi(&k, &u), bi(&k, &v));
        let outer = jacobian(&p, &q).unwrap();
        let composite = jacobian(&p.substitute(&u, &v).unwrap(), &q.substitute(&u, &v).unwrap()).unwrap();
        let expected = &outer.substitute(&u, &v).unwrap() * &jacobian(&u, &v).unwrap();
        prop_assert_eq!(composite, expected);
    }

    #[test]
    fn weyl_multiplication_is_associative(
        k in field(),
        a in prop::collection::vec((0u8..5, 0u8..5, any::<u32>()), 0..4),
        b in prop::collection::vec((0u8..5, 0u8..5, any::<u32>()), 0..4),
        c in prop::collection::vec((0u8..5, 0u8..5, any::<u32>()), 0..4),
    ) {
        let (a, b, c) = (weyl(&k, &a), weyl(&k, &b), weyl(&k, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn centrality_tests_agree(k in field(), a in prop::collection::vec((0u8..5, 0u8..5, any::<u32>()), 0..4)) {
        let a = weyl(&k, &a);
        prop_assert_eq!(a.is_central_by_commutators(), a.is_central_by_support());
    }

    #[test]
    fn theta_is_additive(k in field(), f in codes(12), g in codes(12)) {
        let (f, g) = (uni(&k, &f), uni(&k, &g));
        prop_assert_eq!(theta(&(&f + &g)), &theta(&f) + &theta(&g));
    }

    #[test]
    fn theta_multiplies_degree_by_p(k in field(), f in codes(12)) {
        let f = uni(&k, &f);
        prop_assert_eq!(theta(&f).degree(), f.degree().map(|d| d * k.p()));
    }

    #[test]
    fn theta_round_trips(k in field(), f in codes(12), g in codes(8)) {
        let ctx = ThetaContext::new(k.clone());
        let f = uni(&k, &f);
        prop_assert_eq!(ctx.theta_inverse(&theta(&f)).unwrap(), f);
        let g = uni(&k, &g).expand_exponents(k.p());
        let back = ctx.theta_inverse(&g).unwrap();
        prop_assert_eq!(&theta(&back), &g);
        prop_assert_eq!(ctx.theta_inverse_oracle(&g).unwrap(), back);
    }

    #[test]
    fn printing_then_parsing_is_identity(
        k in field(),
        f in codes(8),
        z in bicodes(),
        w in prop::collection::vec((0u8..5, 0u8..5, any::<u32>()), 0..4),
    ) {
        let f = uni(&k, &f);
        prop_assert_eq!(parse_uni(&k, "x", &f.to_text("x")).unwrap(), f);
        let z = bi(&k, &z);
        prop_assert_eq!(parse_bi(&k, &z.to_text()).unwrap(), z);
        let w = weyl(&k, &w);
        prop_assert_eq!(parse_weyl(&k, 1, &w.to_text()).unwrap(), w);
    }

    #[test]
    fn automorphisms_print_and_parse(k in field(), seed in any::<u64>()) {
        let mut rng = weylres::random::rng(seed);
        let word = weylres::random::word(&mut rng, weylres::Target::Z, &k, 4, 3, true);
        let a = ZAut::from_word(&word).unwrap();
        prop_assert_eq!(ZAut::parse(&k, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(ZAut::parse(&k, &word.to_string()).unwrap(), a);
    }
}
