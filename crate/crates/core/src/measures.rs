//! Branching configurations, their weight measures and partition functions.
//!
//! A configuration of total colength `d` in degree `n` is a tuple of
//! non-identity ramification profiles of `n` whose colengths add up to `d`.
//! Tuples are kept sorted by colength (largest first); profiles sharing a
//! colength stay ordered and are chosen independently, so the fibre over a
//! colength partition `λ` has exactly `Π_j p(n, n - λ_j)` elements.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partition_count, Partition};
use crate::series::{format_rational, int, LaurentSeries, Rational, Var};
use crate::weights::{weight, weight_series, WeightModel};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchingConfig {
    n: u32,
    profiles: Vec<Partition>,
}

impl BranchingConfig {
    /// Validates the profiles and sorts them by colength, largest first.
    /// Profiles of equal colength keep their relative order.
    pub fn new(n: u32, mut profiles: Vec<Partition>) -> Result<Self> {
        for p in &profiles {
            if p.weight() != n {
                return Err(Error::WeightMismatch { expected: n, found: p.weight() });
            }
            if p.colength() == 0 {
                return Err(Error::InvalidPartition(format!(
                    "identity profile ({p}) cannot be a weighted branch point"
                )));
            }
        }
        profiles.sort_by(|a, b| b.colength().cmp(&a.colength()));
        Ok(Self { n, profiles })
    }

    pub fn empty(n: u32) -> Self {
        Self { n, profiles: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn total_colength(&self) -> u32 {
        self.profiles.iter().map(Partition::colength).sum()
    }
}

/// Profiles joined by `;`, e.g. `3,1;2,1,1`.
impl fmt::Display for BranchingConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.profiles.iter().map(ToString::to_string).collect();
        f.write_str(&text.join(";"))
    }
}

impl fmt::Debug for BranchingConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for p in &self.profiles {
            write!(f, "{p:?}")?;
        }
        f.write_str(")")
    }
}

/// Partitions of `n` with colength `c`, reverse-lexicographic.
fn profiles_of_colength(n: u32, c: u32) -> Vec<Partition> {
    if c >= n {
        return Vec::new();
    }
    enumerate_partitions(n, Some((n - c) as usize))
}

/// Every configuration of total colength `d` in degree `n`, optionally with
/// exactly `k` profiles.
///
/// Order: by `k`, then by colength partition (reverse-lexicographic), then
/// lexicographically in the per-slot profile choices. `d = 0` yields the
/// single empty configuration.
pub fn enumerate_configs(n: u32, d: u32, k: Option<usize>) -> Vec<BranchingConfig> {
    if d == 0 {
        return if k.unwrap_or(0) == 0 { vec![BranchingConfig::empty(n)] } else { Vec::new() };
    }
    let lengths: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=d as usize).collect(),
    };
    let mut out = Vec::new();
    for len in lengths {
        for lambda in enumerate_partitions(d, Some(len)) {
            out.extend(configs_over(n, &lambda));
        }
    }
    out
}

/// The fibre of [`lambda_map`] over `λ`, in enumeration order.
pub fn configs_over(n: u32, lambda: &Partition) -> Vec<BranchingConfig> {
    let slots: Vec<Vec<Partition>> = lambda.parts().iter().map(|&c| profiles_of_colength(n, c)).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots.len());
    cartesian(&slots, &mut current, &mut |profiles| {
        out.push(BranchingConfig { n, profiles: profiles.to_vec() });
    });
    out
}

fn cartesian(slots: &[Vec<Partition>], current: &mut Vec<Partition>, emit: &mut impl FnMut(&[Partition])) {
    let Some((first, rest)) = slots.split_first() else {
        emit(current);
        return;
    };
    for p in first {
        current.push(p.clone());
        cartesian(rest, current, emit);
        current.pop();
    }
}

/// Colength partition of a configuration.
pub fn lambda_map(config: &BranchingConfig) -> Partition {
    Partition::new(config.profiles.iter().map(Partition::colength).collect())
        .expect("colengths are positive and sorted")
}

/// `Π_j p(n, n - λ_j)`, the size of the fibre over `λ`; requires `n ≥ 2|λ|`.
pub fn preimage_count(lambda: &Partition, n: u32) -> Result<u64> {
    let d = lambda.weight();
    if (n as u64) < 2 * d as u64 {
        return Err(Error::InvalidArgument(format!("fibre count needs n >= 2d, got n={n}, d={d}")));
    }
    Ok(lambda.parts().iter().map(|&c| partition_count(n, Some(n - c))).product())
}

/// `p(λ) = Π_j p(λ_j)`.
pub fn partition_multiplicity(lambda: &Partition) -> u64 {
    lambda.parts().iter().map(|&c| partition_count(c, None)).product()
}

/// Finite measure with exact, possibly signed, masses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteMeasure<T> {
    pub support: Vec<(T, Rational)>,
    pub normalizer: Rational,
}

impl<T: Ord + Clone> DiscreteMeasure<T> {
    pub fn dirac(point: T) -> Self {
        Self { support: vec![(point, Rational::one())], normalizer: Rational::one() }
    }

    pub fn mass(&self, point: &T) -> Rational {
        self.support
            .iter()
            .filter(|(p, _)| p == point)
            .map(|(_, m)| m.clone())
            .sum()
    }

    pub fn total_mass(&self) -> Rational {
        self.support.iter().map(|(_, m)| m.clone()).sum()
    }

    /// `Σ |mass|`; equals the total mass exactly when no mass is negative.
    pub fn absolute_mass(&self) -> Rational {
        self.support.iter().map(|(_, m)| m.abs()).sum()
    }

    pub fn is_signed(&self) -> bool {
        self.support.iter().any(|(_, m)| m.is_negative())
    }

    fn as_map(&self) -> BTreeMap<T, Rational> {
        let mut out: BTreeMap<T, Rational> = BTreeMap::new();
        for (p, m) in &self.support {
            *out.entry(p.clone()).or_insert_with(Rational::zero) += m;
        }
        out
    }
}

impl<T: fmt::Display> DiscreteMeasure<T> {
    pub fn to_json(&self) -> Value {
        json!({
            "support": self.support.iter().map(|(e, m)| json!({
                "element": e.to_string(),
                "mass": format_rational(m),
            })).collect::<Vec<_>>(),
            "normalizer": format_rational(&self.normalizer),
        })
    }
}

/// Image measure under `f`, with support sorted by the image's order.
pub fn pushforward<T, U: Ord + Clone>(m: &DiscreteMeasure<T>, f: impl Fn(&T) -> U) -> DiscreteMeasure<U> {
    let mut image: BTreeMap<U, Rational> = BTreeMap::new();
    for (p, mass) in &m.support {
        *image.entry(f(p)).or_insert_with(Rational::zero) += mass;
    }
    DiscreteMeasure { support: image.into_iter().collect(), normalizer: m.normalizer.clone() }
}

/// `Σ mass · g`.
pub fn expectation<T>(m: &DiscreteMeasure<T>, g: impl Fn(&T) -> Rational) -> Rational {
    m.support.iter().map(|(p, mass)| mass * g(p)).sum()
}

/// `½ Σ |m1 - m2|` over the union of supports.
pub fn total_variation<T: Ord + Clone>(m1: &DiscreteMeasure<T>, m2: &DiscreteMeasure<T>) -> Rational {
    let mut diff = m1.as_map();
    for (p, m) in m2.as_map() {
        *diff.entry(p).or_insert_with(Rational::zero) -= m;
    }
    diff.values().map(Signed::abs).sum::<Rational>() / int(2)
}

/// `Z_d = Σ_{λ ⊢ d} p(λ) w(λ)`, the n-independent partition function.
///
/// With `n` given, the sum is taken over the configurations of degree `n`
/// instead and must agree with the n-independent value. The value may vanish
/// for signed models (`H` at `d = 2`, `q = 1/2`); the measures then refuse to
/// normalize.
pub fn partition_function(d: u32, model: &WeightModel, q: Option<&Rational>, n: Option<u32>) -> Result<Rational> {
    if d == 0 {
        return Err(Error::InvalidArgument("partition function needs d >= 1".into()));
    }
    let z = partition_function_by_colengths(d, model, q)?;
    if let Some(n) = n {
        let by_configs = partition_function_by_configs(n, d, model, q)?;
        if by_configs != z {
            return Err(Error::Inconsistent(format!(
                "configuration sum {} differs from colength sum {} (n={n}, d={d})",
                format_rational(&by_configs),
                format_rational(&z)
            )));
        }
    }
    Ok(z)
}

fn normalizer(d: u32, model: &WeightModel, q: Option<&Rational>) -> Result<Rational> {
    let z = partition_function(d, model, q, None)?;
    if z.is_zero() {
        return Err(Error::ZeroNormalizer);
    }
    Ok(z)
}

fn partition_function_by_colengths(d: u32, model: &WeightModel, q: Option<&Rational>) -> Result<Rational> {
    let mut z = Rational::zero();
    for lambda in enumerate_partitions(d, None) {
        z += weight(model, &lambda, q)? * int(partition_multiplicity(&lambda) as i64);
    }
    Ok(z)
}

/// `Σ_{configs} w(λ(config))` over degree-`n` configurations; needs `n ≥ 2d`.
pub fn partition_function_by_configs(n: u32, d: u32, model: &WeightModel, q: Option<&Rational>) -> Result<Rational> {
    check_degree(n, d)?;
    let mut cache: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut z = Rational::zero();
    for config in enumerate_configs(n, d, None) {
        let lambda = lambda_map(&config);
        if !cache.contains_key(&lambda) {
            let w = weight(model, &lambda, q)?;
            cache.insert(lambda.clone(), w);
        }
        z += &cache[&lambda];
    }
    Ok(z)
}

/// `Σ_{λ ⊢ d} p(λ) · weight_series(λ)` in `q` or `ε`.
pub fn partition_function_series(model: &WeightModel, d: u32, var: Var, order: i64) -> Result<LaurentSeries> {
    let mut total = LaurentSeries::zero(var, order);
    for lambda in enumerate_partitions(d, None) {
        if var == Var::Eps && order <= -(lambda.len() as i64) {
            continue;
        }
        let w = weight_series(model, &lambda, var, order)?;
        total = total.add(&w.scale(&int(partition_multiplicity(&lambda) as i64)))?;
    }
    Ok(total)
}

fn check_degree(n: u32, d: u32) -> Result<()> {
    if (n as u64) < 2 * d as u64 {
        return Err(Error::InvalidArgument(format!("configuration measures need n >= 2d, got n={n}, d={d}")));
    }
    Ok(())
}

/// `ξ(λ) = p(λ) w(λ) / Z` on the partitions of `d`, in enumeration order.
pub fn xi_measure(d: u32, model: &WeightModel, q: Option<&Rational>) -> Result<DiscreteMeasure<Partition>> {
    let z = normalizer(d, model, q)?;
    let support = enumerate_partitions(d, None)
        .into_iter()
        .map(|lambda| {
            let w = weight(model, &lambda, q)? * int(partition_multiplicity(&lambda) as i64);
            Ok((lambda, w / &z))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DiscreteMeasure { support, normalizer: z })
}

/// `Θ(config) = w(λ(config)) / Z` on degree-`n` configurations.
///
/// Its pushforward under [`lambda_map`] is checked against [`xi_measure`].
pub fn theta_measure(n: u32, d: u32, model: &WeightModel, q: Option<&Rational>) -> Result<DiscreteMeasure<BranchingConfig>> {
    check_degree(n, d)?;
    let z = normalizer(d, model, q)?;
    let mut weights: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut support = Vec::new();
    for config in enumerate_configs(n, d, None) {
        let lambda = lambda_map(&config);
        if !weights.contains_key(&lambda) {
            let w = weight(model, &lambda, q)? / &z;
            weights.insert(lambda.clone(), w);
        }
        support.push((config, weights[&lambda].clone()));
    }
    let theta = DiscreteMeasure { support, normalizer: z };
    let image = pushforward(&theta, lambda_map);
    let xi = xi_measure(d, model, q)?;
    if image.as_map().into_iter().filter(|(_, m)| !m.is_zero()).ne(xi.as_map().into_iter().filter(|(_, m)| !m.is_zero())) {
        return Err(Error::Inconsistent(format!("pushforward of Θ differs from ξ (n={n}, d={d})")));
    }
    Ok(theta)
}
