use num_bigint::BigInt;
use num_traits::Zero;

use quantum_hurwitz::tau::{tau_coefficients, verify_tau_identity, zero_temp_tau_check};
use quantum_hurwitz::verify::{claim_registry, standard_instances, verify_all, ClaimOutcome, CLAIM_LABELS};
use quantum_hurwitz::weighted::weighted_hurwitz_series;
use quantum_hurwitz::weights::weight_eps_series;
use quantum_hurwitz::{enumerate_partitions, simple_hurwitz, Partition, Rational, Var, WeightModel};

fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn tau_identity_for_every_model() {
    let half = rat(1, 2);
    for model in [WeightModel::E, WeightModel::H] {
        for n in 1..=3 {
            for r in verify_tau_identity(&model, Some(&half), n, 2).unwrap() {
                assert!(r.all_match(), "{model} {}", r.claim.instance);
            }
        }
    }
    for model in [WeightModel::Belyi, "finite:1/2,1/3".parse().unwrap()] {
        for n in 1..=3 {
            for r in verify_tau_identity(&model, None, n, 3).unwrap() {
                assert!(r.all_match(), "{model} {}", r.claim.instance);
            }
        }
    }
}

#[test]
fn tau_slices_are_symmetric() {
    let slice = tau_coefficients(&WeightModel::EPrime, Some(&rat(1, 3)), 4, 3).unwrap();
    for (mu, nu, coeffs) in &slice.pairs {
        assert_eq!(slice.get(nu, mu).unwrap(), coeffs.as_slice());
    }
    let belyi = tau_coefficients(&WeightModel::Belyi, None, 3, 3).unwrap();
    for (_, _, coeffs) in &belyi.pairs {
        assert!(coeffs[3].is_zero());
    }
}

#[test]
fn zero_temperature_leading_term_is_belyi() {
    for r in zero_temp_tau_check(4, 2).unwrap() {
        assert!(r.all_match(), "{}", r.claim.instance);
    }
}

#[test]
fn eps_series_leading_term_is_simple_hurwitz_over_factorial() {
    let factorial = |d: u32| -> Rational { Rational::from_integer((1..=d as i64).product::<i64>().into()) };
    for model in [WeightModel::EPrime, WeightModel::E, WeightModel::H] {
        for d in 0..=3u32 {
            for mu in enumerate_partitions(4, None) {
                let nu = Partition::new(vec![2, 1, 1]).unwrap();
                let s = weighted_hurwitz_series(&model, d, &mu, &nu, Var::Eps, 1 - d as i64).unwrap();
                assert_eq!(s.coeff(-(d as i64)), simple_hurwitz(d, &mu, &nu).unwrap() / factorial(d));
            }
        }
    }
}

#[test]
fn eps_series_respect_valid_order() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let s = weight_eps_series(&WeightModel::E, &lambda, 1).unwrap();
    assert_eq!(s.valid_order(), 1);
    assert!(s.try_coeff(1).is_none());
}

#[test]
fn every_registered_claim_yields_a_report() {
    let labels: std::collections::BTreeSet<&str> = standard_instances().iter().map(|(l, _)| *l).collect();
    for (label, _) in CLAIM_LABELS {
        assert!(labels.contains(label), "{label} has no standard instance");
    }
    assert!(!claim_registry().unwrap().is_empty());
    for (label, _, outcome) in verify_all().unwrap() {
        match outcome {
            ClaimOutcome::Reports(reports) => {
                assert!(!reports.is_empty(), "{label}");
                for r in reports {
                    assert!(r.claim.claimed.keys().all(|k| r.computed.contains_key(k)), "{label}");
                }
            }
            ClaimOutcome::Dirac(r) => assert!(r.strictly_decreasing(), "{label}"),
        }
    }
}
