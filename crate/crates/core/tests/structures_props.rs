use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use wb_core::exactlin::LinMap;
use wb_core::random::{self, seeded};
use wb_core::structures::{dual_algebra, dual_coalgebra, groups, FinBialgebra, FinCoalgebra};

fn at(m: &LinMap, i: usize, j: usize) -> BigRational {
    m.get(i, j).to_big()
}

/// Coassociativity and counit laws from structure constants
/// `Δ(e_k) = Σ c[i,j;k] e_i⊗e_j`, written out index by index.
fn oracle_coalgebra(c: &FinCoalgebra) -> bool {
    let n = c.dim();
    let d = c.comult();
    let e = c.counit();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    let mut lhs = BigRational::zero();
                    let mut rhs = BigRational::zero();
                    for m in 0..n {
                        lhs += at(d, m * n + g, k) * at(d, a * n + b, m);
                        rhs += at(d, a * n + m, k) * at(d, b * n + g, m);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            let mut left = BigRational::zero();
            let mut right = BigRational::zero();
            for m in 0..n {
                left += at(e, 0, m) * at(d, m * n + a, k);
                right += at(e, 0, m) * at(d, a * n + m, k);
            }
            let delta = if a == k { BigRational::one() } else { BigRational::zero() };
            if left != delta || right != delta {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_coalgebras_valid(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let c = random::coalgebra(&mut rng, 4);
        prop_assert!(c.validate().is_ok());
        prop_assert!(oracle_coalgebra(&c));
        prop_assert_eq!(dual_coalgebra(&dual_algebra(&c)), c.clone());
        prop_assert!(dual_algebra(&c).validate().is_ok());
        for x in 1..3 {
            prop_assert!(c.check_comonad_laws(x).is_ok());
        }
    }

    #[test]
    fn random_algebras_valid(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random::algebra(&mut rng, 4);
        prop_assert!(a.validate().is_ok());
        prop_assert!(oracle_coalgebra(&dual_coalgebra(&a)));
        prop_assert_eq!(dual_algebra(&dual_coalgebra(&a)), a);
    }

    #[test]
    fn tensors_valid(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let c = random::coalgebra(&mut rng, 3);
        let d = random::coalgebra(&mut rng, 2);
        let t = c.tensor(&d);
        prop_assert!(t.validate().is_ok());
        prop_assert!(oracle_coalgebra(&t));
        let a = random::algebra(&mut rng, 2);
        let b = random::algebra(&mut rng, 3);
        prop_assert!(a.tensor(&b).validate().is_ok());
    }
}

#[test]
fn group_bialgebras_valid() {
    for table in [groups::cyclic(2), groups::cyclic(3), groups::klein(), groups::symmetric3()] {
        let h = FinBialgebra::group(&table);
        assert!(h.validate().is_ok());
        let n = table.len();
        // grouplike: Δ(e_g) = e_g⊗e_g, ε(e_g) = 1
        for g in 0..n {
            for r in 0..n * n {
                let want = if r == g * n + g { 1 } else { 0 };
                assert_eq!(at(h.coalgebra().comult(), r, g), BigRational::from_integer(want.into()));
            }
            assert!(h.coalgebra().counit().get(0, g).is_one());
        }
        // product: e_g e_h = e_{gh}
        for g in 0..n {
            for k in 0..n {
                let col = g * n + k;
                for r in 0..n {
                    let want = if r == table[g][k] { 1 } else { 0 };
                    assert_eq!(at(h.algebra().mult(), r, col), BigRational::from_integer(want.into()));
                }
            }
        }
    }
    for n in 1..5 {
        assert!(oracle_coalgebra(&FinCoalgebra::divided_power(n)));
        assert!(oracle_coalgebra(&FinCoalgebra::grouplike(n)));
    }
}
