use eala_twist::liealg::{bracket, Degree, Gen, Kind};
use eala_twist::scalars::{int, Laurent};
use eala_twist::series::{compare_series, Series};
use eala_twist::twist::{Case, Oracle, TwistContext};
use eala_twist::uea::{antipode0, counit0, delta0, Tensor, UElt};
use proptest::prelude::*;

fn gen() -> impl Strategy<Value = Gen> {
    let graded = (0usize..4, -2i64..=2, -2i64..=2).prop_filter_map("g_0 and h_0 are excluded", |(k, a, b)| {
        let kind = [Kind::E, Kind::F, Kind::G, Kind::H][k];
        Gen::try_new(kind, Degree(a, b))
    });
    prop_oneof![1 => Just(Gen::D), 1 => Just(Gen::D1), 1 => Just(Gen::D2), 8 => graded]
}

fn coeff() -> impl Strategy<Value = Laurent> {
    (-3i64..=3, -2i64..=2).prop_map(|(c, k)| Laurent::monomial(int(c), k))
}

fn word() -> impl Strategy<Value = UElt> {
    (coeff(), prop::collection::vec(gen(), 0..3))
        .prop_map(|(c, gens)| gens.into_iter().fold(UElt::scalar(c), |acc, g| acc.mul_gen(g)))
}

fn elt() -> impl Strategy<Value = UElt> {
    prop::collection::vec(word(), 1..3).prop_map(|ws| ws.into_iter().fold(UElt::zero(), |a, w| &a + &w))
}

fn case() -> impl Strategy<Value = Case> {
    prop::sample::select(Case::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in elt(), b in elt(), c in elt()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn commutator_matches_bracket(a in gen(), b in gen()) {
        let (x, y) = (UElt::gen(a), UElt::gen(b));
        let commutator = &(&x * &y) - &(&y * &x);
        prop_assert_eq!(commutator, UElt::from_lie(&bracket(a, b)));
    }

    #[test]
    fn undeformed_maps_respect_products(a in elt(), b in elt()) {
        let ab = &a * &b;
        prop_assert_eq!(delta0(&ab), delta0(&a).try_mul(&delta0(&b)).unwrap());
        prop_assert_eq!(antipode0(&ab), &antipode0(&b) * &antipode0(&a));
        prop_assert_eq!(counit0(&ab), &counit0(&a) * &counit0(&b));
    }

    #[test]
    fn twisted_coproduct_is_multiplicative(c in case(), a in word(), b in word()) {
        let ctx = TwistContext::new(c, Degree(1, 1), None, 2).unwrap();
        let oracle = Oracle::new(&ctx);
        let lhs = oracle.delta(&(&a * &b));
        let rhs = oracle.delta(&a).try_mul(&oracle.delta(&b)).unwrap();
        prop_assert!(compare_series(&lhs, &rhs).is_none());
    }

    #[test]
    fn twisted_antipode_is_antimultiplicative(c in case(), a in word(), b in word()) {
        let ctx = TwistContext::new(c, Degree(0, 1), None, 2).unwrap();
        let oracle = Oracle::new(&ctx);
        let lhs = oracle.antipode(&(&a * &b));
        let rhs = oracle.antipode(&b).try_mul(&oracle.antipode(&a)).unwrap();
        prop_assert!(compare_series(&lhs, &rhs).is_none());
    }

    #[test]
    fn twist_is_inverted_by_its_series_inverse(c in case()) {
        let ctx = TwistContext::new(c, Degree(2, -1), None, 3).unwrap();
        let oracle = Oracle::new(&ctx);
        let one = Series::one(&Tensor::unit(2), 3);
        prop_assert_eq!(oracle.twist().try_mul(oracle.twist_inverse()).unwrap(), one);
    }
}
