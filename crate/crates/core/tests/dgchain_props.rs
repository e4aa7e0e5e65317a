use proptest::prelude::*;
use wb_core::dgchain::{
    chain_maps, check_computed_on_graded_bialgebra, cycles, dg_hom_space, dg_tensor, hom_complex,
    koszul_symmetry, tensor_complex, transfer_iso_check, ChainComplex, Pairing,
};
use wb_core::random::{self, seeded};
use wb_core::structures::{groups, FinBialgebra};

const DEGREES: [i64; 3] = [-1, 0, 1];

/// `dim (X⊗Y)_n = Σ_p dim X_p · dim Y_{n−p}`.
fn oracle_tensor_dim(x: &ChainComplex, y: &ChainComplex, n: i64) -> usize {
    (x.min_deg()..=x.max_deg()).map(|p| x.dim(p) * y.dim(n - p)).sum()
}

/// `dim [X,Y]_n = Σ_p dim X_p · dim Y_{p+n}`.
fn oracle_hom_dim(x: &ChainComplex, y: &ChainComplex, n: i64) -> usize {
    (x.min_deg()..=x.max_deg()).map(|p| x.dim(p) * y.dim(p + n)).sum()
}

fn all_degrees(x: &ChainComplex) -> std::ops::RangeInclusive<i64> {
    x.min_deg()..=x.max_deg()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn tensor_and_hom_are_complexes(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random::complex(&mut rng, &DEGREES, 3);
        let y = random::complex(&mut rng, &DEGREES, 3);
        prop_assert!(x.validate().is_ok());
        let t = tensor_complex(&x, &y);
        let h = hom_complex(&x, &y);
        prop_assert!(t.validate().is_ok());
        prop_assert!(h.validate().is_ok());
        for n in -4..=4 {
            prop_assert_eq!(t.dim(n), oracle_tensor_dim(&x, &y, n));
            prop_assert_eq!(h.dim(n), oracle_hom_dim(&x, &y, n));
        }
    }

    #[test]
    fn chain_maps_are_hom_cycles(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random::complex(&mut rng, &DEGREES, 3);
        let y = random::complex(&mut rng, &DEGREES, 3);
        let maps = chain_maps(&x, &y);
        let h = hom_complex(&x, &y);
        prop_assert_eq!(maps.len(), cycles(&h, 0).cols());
        for f in &maps {
            prop_assert_eq!(&y.total_differential() * f, f * &x.total_differential());
        }
    }

    #[test]
    fn koszul_symmetry_is_involutive_chain_map(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random::complex(&mut rng, &DEGREES, 3);
        let y = random::complex(&mut rng, &DEGREES, 3);
        let (xy, yx) = (tensor_complex(&x, &y), tensor_complex(&y, &x));
        let k = koszul_symmetry(&x, &y);
        prop_assert_eq!(&yx.total_differential() * &k, &k * &xy.total_differential());
        prop_assert!((koszul_symmetry(&y, &x) * &k).is_identity());
    }

    #[test]
    fn tensor_hom_bifunctors(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random::complex(&mut rng, &DEGREES, 2);
        let y = random::complex(&mut rng, &DEGREES, 2);
        let z = random::complex(&mut rng, &DEGREES, 2);
        let left = tensor_complex(&tensor_complex(&x, &y), &z);
        let right = tensor_complex(&x, &tensor_complex(&y, &z));
        for n in all_degrees(&left) {
            prop_assert_eq!(left.dim(n), right.dim(n));
        }
        // chain maps X⊗Y → Z correspond to chain maps X → [Y,Z]
        prop_assert_eq!(
            chain_maps(&tensor_complex(&x, &y), &z).len(),
            chain_maps(&x, &hom_complex(&y, &z)).len()
        );
    }

    #[test]
    fn dg_comodules_and_tensor(seed in any::<u64>(), klein in any::<bool>()) {
        let mut rng = seeded(seed);
        let h = FinBialgebra::group(&if klein { groups::klein() } else { groups::cyclic(2) });
        let v = random::dg_comodule(&mut rng, &h, &DEGREES, 3);
        let w = random::dg_comodule(&mut rng, &h, &DEGREES, 2);
        prop_assert!(v.validate().is_ok());
        let t = dg_tensor(&v, &w).unwrap();
        prop_assert!(t.validate().is_ok());
        for f in dg_hom_space(&v, &w) {
            prop_assert_eq!(&w.complex().total_differential() * &f, &f * &v.complex().total_differential());
        }
        prop_assert!(check_computed_on_graded_bialgebra(&h, &[v.complex().clone()]).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transfer_is_iso(seed in any::<u64>(), klein in any::<bool>(), enriched in any::<bool>()) {
        let mut rng = seeded(seed);
        let h = FinBialgebra::group(&if klein { groups::klein() } else { groups::cyclic(2) });
        let z = random::dg_comodule(&mut rng, &h, &DEGREES, 3);
        let v = random::dg_comodule(&mut rng, &h, &DEGREES, 2);
        let pairing = if enriched { Pairing::Enriched } else { Pairing::Mapping };
        let check = transfer_iso_check(&h, &z, &v, pairing).unwrap();
        prop_assert!(check.is_ok(), "{:?}\n{:?}", check.hypotheses, check.conclusion);
        prop_assert!(check.mapping.validate().is_ok());
    }
}
