//! Exhaustive small-rank sweeps and property tests against the brute-force
//! oracles.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use springer_core::characters::{all_characters, characters_of_order, divisors, pullback_from_levi};
use springer_core::correspondence::{full_table, lusztig_sheaf};
use springer_core::golden;
use springer_core::oracle;
use springer_core::partitions::enumerate_partitions;
use springer_core::strata::{admitting_characters, forced_v_zero_set, in_stratum, stabilizer};
use springer_core::weights::{fundamental_weight, occurs, reduced_weight, toric_relation};
use springer_core::{CentralCharacter, Partition, VanishingPattern};

#[test]
fn partitions_match_composition_search() {
    for n in 1..=14 {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n)
            .unwrap()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(ours, oracle::partitions_by_compositions(n), "n = {n}");
        let unique: BTreeSet<_> = ours.iter().collect();
        assert_eq!(unique.len(), ours.len());
        assert!(ours.iter().all(|p| p.iter().sum::<usize>() == n));
    }
}

#[test]
fn hook_length_equals_tableau_count() {
    for n in 1..=10 {
        for lam in enumerate_partitions(n).unwrap() {
            let count = lam.standard_tableaux().unwrap().len();
            assert_eq!(lam.irrep_dimension(), BigUint::from(count), "{lam}");
        }
    }
}

#[test]
fn sum_of_squared_dimensions_is_factorial() {
    for n in 1..=8 {
        let total: BigUint = enumerate_partitions(n)
            .unwrap()
            .iter()
            .map(|l| l.irrep_dimension().pow(2))
            .sum();
        assert_eq!(total, oracle::factorial(n));
    }
}

#[test]
fn irrep_dimension_exact_for_n_20() {
    let total: BigUint = enumerate_partitions(20)
        .unwrap()
        .iter()
        .map(|l| l.irrep_dimension().pow(2))
        .sum();
    assert_eq!(total, oracle::factorial(20));
}

#[test]
fn contraction_is_a_bijection() {
    for n in 1..=30 {
        for d in divisors(n) {
            let divisible: BTreeSet<Partition> = enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.divisible_by(d))
                .collect();
            let contracted: BTreeSet<Partition> =
                divisible.iter().map(|l| l.contract(d).unwrap()).collect();
            let target: BTreeSet<Partition> = enumerate_partitions(n / d).unwrap().into_iter().collect();
            assert_eq!(contracted, target, "n = {n}, d = {d}");
            assert_eq!(contracted.len(), divisible.len());
            for mu in &target {
                assert!(divisible.contains(&mu.scale(d).unwrap()));
            }
        }
    }
}

#[test]
fn kernels_match_search() {
    for n in 1..=60 {
        for chi in all_characters(n).unwrap() {
            let k = chi.exponent();
            assert_eq!(chi.kernel().elements(), oracle::kernel_by_search(n, k));
            assert_eq!(chi.order(), oracle::character_order_by_powering(n, k));
            assert_eq!(chi.kernel().size(), n / chi.order());
        }
    }
}

#[test]
fn character_orders_partition_the_group() {
    for n in 1..=60 {
        let total: usize = divisors(n)
            .into_iter()
            .map(|d| characters_of_order(n, d).unwrap().len())
            .sum();
        assert_eq!(total, n);
        for d in divisors(n) {
            let chars = characters_of_order(n, d).unwrap();
            let euler_phi = (1..=d).filter(|a| num_integer::gcd(*a, d) == 1).count();
            assert_eq!(chars.len(), euler_phi);
            assert!(chars.iter().all(|c| c.kernel() == chars[0].kernel()));
            assert_eq!(pullback_from_levi(n, d).unwrap().order(), d);
        }
    }
}

#[test]
fn occurrence_closed_form_matches_fraction_test() {
    for n in 2..=40 {
        for c in 1..n {
            for k in 1..n {
                let direct = reduced_weight(n, k).unwrap().contains_root(c).unwrap();
                assert_eq!(occurs(n, c, k).unwrap(), direct, "n={n} c={c} k={k}");
                assert_eq!(direct, oracle::occurs_by_fraction(n, c, k));
                assert_eq!(occurs(n, c, k).unwrap(), occurs(n, n - c, k).unwrap());
            }
        }
    }
}

#[test]
fn weights_agree_with_epsilon_route() {
    for n in 2..=40 {
        for k in 1..n {
            let lambda = fundamental_weight(n, k).unwrap();
            let mu = reduced_weight(n, k).unwrap();
            for c in 1..n {
                let via_eps = oracle::fundamental_coefficient_numerator(n, k, c);
                assert_eq!(lambda.numerators()[c - 1] as i64, via_eps);
                assert!(lambda.numerators()[c - 1] <= k * (n - k));
                assert!(mu.numerators()[c - 1] < n);
                // μ_k - λ_k lies in the root lattice.
                assert_eq!((lambda.numerators()[c - 1] - mu.numerators()[c - 1]) % n, 0);
            }
            let eps = lambda.scaled_epsilon_coordinates();
            assert_eq!(eps.iter().sum::<i64>(), 0);
        }
    }
}

#[test]
fn toric_relations_balance_and_are_reduced() {
    for n in 2..=40 {
        for k in 1..n {
            let rel = toric_relation(n, k).unwrap();
            let mu = reduced_weight(n, k).unwrap();
            let d = rel.degree();
            // n·(d μ_k) and n·(Σ e_i α_i) in ε-coordinates.
            let lhs: Vec<i64> = mu
                .scaled_epsilon_coordinates()
                .iter()
                .map(|x| x * d as i64)
                .collect();
            let e = |i: usize| -> i64 {
                if i == 0 || i == n {
                    0
                } else {
                    rel.exponents()[i - 1] as i64
                }
            };
            let rhs: Vec<i64> = (1..=n).map(|j| n as i64 * (e(j) - e(j - 1))).collect();
            assert_eq!(lhs, rhs, "n={n} k={k}");
            for smaller in 1..d {
                assert!(mu.numerators().iter().any(|a| (smaller * a) % n != 0));
            }
        }
    }
}

#[test]
fn stabilizers_match_search_exhaustively() {
    for n in 1..=12 {
        for vp in VanishingPattern::all(n).unwrap() {
            let stab = stabilizer(&vp);
            assert_eq!(stab.elements(), oracle::stabilizer_by_search(&vp), "n={n} {vp}");
            assert_eq!(forced_v_zero_set(&vp), oracle::v_zero_set_by_search(&vp));
            let admitted = admitting_characters(&vp);
            assert_eq!(admitted.len() * stab.size(), n);
            let exps: Vec<usize> = admitted.iter().map(|c| c.exponent()).collect();
            assert_eq!(exps, oracle::admitting_by_search(&vp));
            for chi in all_characters(n).unwrap() {
                let contained = stab.is_subgroup_of(&chi.kernel());
                assert_eq!(in_stratum(&vp, &chi).unwrap(), contained);
            }
        }
    }
}

#[test]
fn regular_locus_is_the_top_order_stratum() {
    for n in 2..=10 {
        let top = characters_of_order(n, n).unwrap()[0];
        for vp in VanishingPattern::all(n).unwrap() {
            assert_eq!(in_stratum(&vp, &top).unwrap(), vp.is_regular());
        }
    }
}

#[test]
fn steinberg_golden_counts_match_order_two_sheaf() {
    let tableaux = golden::steinberg_sl6_order2();
    let chi = CentralCharacter::new(6, 3).unwrap();
    for summand in lusztig_sheaf(chi) {
        let count = tableaux.iter().filter(|t| t.shape() == summand.orbit()).count();
        assert_eq!(BigUint::from(count), *summand.multiplicity(), "{}", summand.orbit());
    }
    let all: Vec<_> = tableaux.iter().map(|t| t.shape().clone()).collect();
    assert!(all.iter().all(|s| s.divisible_by(2)));
}

#[test]
fn table_coverage() {
    for n in 1..=12 {
        let table = full_table(n).unwrap();
        let got: BTreeSet<(Partition, usize)> = table
            .rows()
            .iter()
            .map(|s| (s.orbit().clone(), s.character().exponent()))
            .collect();
        assert_eq!(got.len(), table.rows().len(), "duplicates for n = {n}");
        let mut expected = BTreeSet::new();
        for lam in enumerate_partitions(n).unwrap() {
            let m = lam.gcd_of_parts();
            let systems: Vec<_> = all_characters(n)
                .unwrap()
                .into_iter()
                .filter(|c| m % c.order() == 0)
                .collect();
            assert_eq!(systems.len(), m);
            for c in systems {
                expected.insert((lam.clone(), c.exponent()));
            }
        }
        assert_eq!(got, expected);
        for s in table.rows() {
            let lam_bar = s.orbit().contract(s.character().order()).unwrap();
            assert_eq!(s.multiplicity(), &lam_bar.irrep_dimension());
        }

        let principal = Partition::row(n).unwrap();
        let on_principal: Vec<_> = table.rows_for_orbit(&principal).collect();
        assert_eq!(on_principal.len(), n);
        assert!(on_principal.iter().all(|s| *s.multiplicity() == BigUint::from(1u32)));
    }
}

#[test]
fn springer_column_and_per_character_totals() {
    for n in 1..=8 {
        let springer: BigUint = lusztig_sheaf(CentralCharacter::trivial(n).unwrap())
            .iter()
            .map(|s| s.multiplicity().pow(2))
            .sum();
        assert_eq!(springer, oracle::factorial(n));
    }
    for n in 1..=16 {
        for chi in all_characters(n).unwrap() {
            let m = n / chi.order();
            if m > 8 {
                continue;
            }
            let total: BigUint = lusztig_sheaf(chi).iter().map(|s| s.multiplicity().clone()).sum();
            assert_eq!(total, BigUint::from(oracle::involutions_by_search(m)), "n={n} {chi}");
        }
    }
}

#[test]
fn sheaves_depend_on_order_only() {
    for n in 1..=12 {
        for d in divisors(n) {
            let profiles: Vec<Vec<(Partition, BigUint)>> = characters_of_order(n, d)
                .unwrap()
                .into_iter()
                .map(|c| {
                    lusztig_sheaf(c)
                        .into_iter()
                        .map(|s| (s.orbit().clone(), s.multiplicity().clone()))
                        .collect()
                })
                .collect();
            assert!(profiles.windows(2).all(|w| w[0] == w[1]));
        }
    }
}

fn pattern_strategy() -> impl Strategy<Value = VanishingPattern> {
    (2usize..=48).prop_flat_map(|n| {
        proptest::collection::btree_set(1..n, 0..n.min(6))
            .prop_map(move |zeros| VanishingPattern::new(n, zeros).unwrap())
    })
}

proptest! {
    #[test]
    fn stabilizer_matches_search_for_large_ranks(vp in pattern_strategy()) {
        let stab = stabilizer(&vp);
        prop_assert_eq!(stab.elements(), oracle::stabilizer_by_search(&vp));
        prop_assert_eq!(admitting_characters(&vp).len() * stab.size(), vp.n());
    }

    #[test]
    fn stabilizer_is_monotone(vp in pattern_strategy(), extra in 1usize..48) {
        let n = vp.n();
        let mut zeros = vp.zeros().clone();
        zeros.insert(1 + (extra - 1) % (n - 1));
        let bigger = VanishingPattern::new(n, zeros).unwrap();
        prop_assert!(vp.is_subset_of(&bigger));
        prop_assert!(stabilizer(&vp).is_subgroup_of(&stabilizer(&bigger)));
    }

    #[test]
    fn stratum_depends_on_order_only(vp in pattern_strategy(), k1 in 0usize..48, k2 in 0usize..48) {
        let n = vp.n();
        let a = CentralCharacter::new(n, k1 % n).unwrap();
        let b = CentralCharacter::new(n, k2 % n).unwrap();
        if a.order() == b.order() {
            prop_assert_eq!(in_stratum(&vp, &a).unwrap(), in_stratum(&vp, &b).unwrap());
        }
    }

    #[test]
    fn partition_text_round_trips(parts in proptest::collection::vec(1usize..9, 1..10)) {
        let p = Partition::from_unsorted(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.dashed().parse::<Partition>().unwrap(), p);
    }
}
