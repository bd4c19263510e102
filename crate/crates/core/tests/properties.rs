//! Randomized invariants. Each case draws a seed and builds its input from
//! a seeded RNG, so failures are reproducible from the printed seed.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use esscert_core::group::{compose, inverse};
use esscert_core::{Scalar16, Weight};

fn run(seed: u64, check: impl Fn(&mut ChaCha8Rng) -> Outcome) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check(&mut rng).map_err(TestCaseError::fail)
}

#[test]
fn differentials_square_to_zero_on_every_window_bidegree() {
    check_dd_zero().unwrap();
}

#[test]
fn group_is_closed_with_inverses() {
    let g = group();
    for &x in g {
        let e = compose(x, inverse(x)).unwrap();
        assert!(e.is_central() && compose(e, e).unwrap() == e);
        for &y in g {
            assert!(compose(x, y).unwrap().is_valid());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn differentials_are_f_equivariant(seed in any::<u64>()) {
        run(seed, check_equivariant)?;
    }

    #[test]
    fn differentials_preserve_weight(seed in any::<u64>()) {
        run(seed, check_weight)?;
    }

    #[test]
    fn differentials_square_to_zero_on_random_elements(seed in any::<u64>()) {
        run(seed, check_dd_random)?;
    }

    #[test]
    fn product_weights_add(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_polynomial(&mut rng);
        let y = random_polynomial(&mut rng);
        if let (Weight::Exactly(a), Weight::Exactly(b)) = (x.weight_of(), y.weight_of()) {
            let xy = &x * &y;
            prop_assert!(xy.is_zero() || xy.weight_of() == Weight::Exactly((a + b) % 15));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn norm_satisfies_the_product_rule(seed in any::<u64>()) {
        run(seed, check_norm_product_rule)?;
    }

    #[test]
    fn norm_is_linear_over_f_stable_factors(seed in any::<u64>(), one in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_polynomial(&mut rng);
        let y = random_polynomial(&mut rng).norm();
        prop_assert!(y.is_f_stable());
        prop_assert_eq!((&y * &x).norm(), &y * &x.norm());
        let c = if one { Scalar16::ONE } else { Scalar16::ZERO };
        prop_assert_eq!(x.scale(c).norm(), x.norm().scale(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_witnesses_remultiply(seed in any::<u64>()) {
        run(seed, check_witnesses)?;
    }

    #[test]
    fn essentiality_is_invariant_under_f_and_scalars(seed in any::<u64>()) {
        run(seed, check_essential_symmetries)?;
    }

    #[test]
    fn essential_classes_form_an_ideal(seed in any::<u64>()) {
        run(seed, check_ideal)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn triple_products_of_essential_classes_vanish(seed in any::<u64>()) {
        run(seed, check_triple)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        run(seed, check_associative)?;
    }
}
