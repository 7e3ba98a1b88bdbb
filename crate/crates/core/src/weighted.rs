//! Weighted double Hurwitz numbers.
//!
//! `H^d_G(μ,ν) = Σ_c w_G(λ(c)) · H(c, μ, ν)` over branching configurations
//! `c` of total colength `d` in degree `n = |μ|`. Since the weight only sees
//! `λ(c)`, the sum is organised as `Σ_λ w_G(λ) S_λ(μ,ν)` with fibre sums
//! `S_λ = Σ_{λ(c) = λ} H(c, μ, ν)`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hurwitz::hurwitz;
use crate::measures::{configs_over, partition_function};
use crate::partitions::{enumerate_partitions, Partition};
use crate::series::{LaurentSeries, Rational, Var};
use crate::weights::{weight, weight_series, WeightModel};

fn check_pair(mu: &Partition, nu: &Partition) -> Result<u32> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { expected: mu.weight(), found: nu.weight() });
    }
    Ok(mu.weight())
}

/// `S_λ(μ,ν)` for every `λ ⊢ d`, in reverse-lexicographic order of `λ`.
///
/// Pure Hurwitz numbers are evaluated in parallel; the results are summed
/// in enumeration order.
pub fn fibre_hurwitz_sums(d: u32, mu: &Partition, nu: &Partition) -> Result<Vec<(Partition, Rational)>> {
    let n = check_pair(mu, nu)?;
    enumerate_partitions(d, None)
        .into_iter()
        .map(|lambda| {
            let configs = configs_over(n, &lambda);
            let values = configs
                .par_iter()
                .map(|c| {
                    let mut profiles = c.profiles().to_vec();
                    profiles.push(mu.clone());
                    profiles.push(nu.clone());
                    hurwitz(&profiles)
                })
                .collect::<Result<Vec<_>>>()?;
            let sum = values.into_iter().fold(Rational::zero(), |acc, v| acc + v);
            Ok((lambda, sum))
        })
        .collect()
}

/// `H^d_G(μ,ν)` at rational `q` (ignored for the classical models).
pub fn weighted_hurwitz(model: &WeightModel, d: u32, mu: &Partition, nu: &Partition, q: Option<&Rational>) -> Result<Rational> {
    let mut total = Rational::zero();
    for (lambda, s) in fibre_hurwitz_sums(d, mu, nu)? {
        if s.is_zero() {
            continue;
        }
        total += weight(model, &lambda, q)? * s;
    }
    Ok(total)
}

/// `H^d_G(μ,ν)` as a series in `q` or in `ε` (`q = e^{-ε}`), exact below `order`.
pub fn weighted_hurwitz_series(
    model: &WeightModel,
    d: u32,
    mu: &Partition,
    nu: &Partition,
    var: Var,
    order: i64,
) -> Result<LaurentSeries> {
    if !model.is_quantum() {
        return Err(Error::UnsupportedModel { model: model.tag(), what: "series expansion".into() });
    }
    let mut total = LaurentSeries::zero(var, order);
    for (lambda, s) in fibre_hurwitz_sums(d, mu, nu)? {
        // an ε-weight starts at ε^{-ℓ(λ)}; below that it contributes nothing
        if s.is_zero() || (var == Var::Eps && order <= -(lambda.len() as i64)) {
            continue;
        }
        let w = weight_series(model, &lambda, var, order)?;
        total = total.add(&w.scale(&s))?;
    }
    Ok(total)
}

/// `H^d_G(μ,ν) / Z_d`, the expectation of `H(·, μ, ν)` under the weight measure.
pub fn hurwitz_expectation(model: &WeightModel, d: u32, mu: &Partition, nu: &Partition, q: Option<&Rational>) -> Result<Rational> {
    let value = weighted_hurwitz(model, d, mu, nu, q)?;
    let z = partition_function(d, model, q, None)?;
    if z.is_zero() {
        return Err(Error::ZeroNormalizer);
    }
    Ok(value / z)
}
