//! Pure double Hurwitz numbers.
//!
//! [`hurwitz`] evaluates the Frobenius–Schur character sum
//! `H(μ¹,…,μᵏ) = Σ_λ h_λ^{k-2} Π_i z_{μⁱ}⁻¹ χ_λ(μⁱ)`, and
//! [`brute_force_hurwitz`] counts identity factorizations in `S_n` directly.

use std::collections::HashMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::character;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, special_partition, Partition};
use crate::series::{pow, Rational};

/// Largest degree [`brute_force_hurwitz`] accepts.
pub const BRUTE_FORCE_LIMIT: u32 = 6;

/// A nonempty list of ramification profiles of a common degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProfileList {
    profiles: Vec<Partition>,
}

impl ProfileList {
    pub fn new(profiles: Vec<Partition>) -> Result<Self> {
        let first = profiles
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty profile list".into()))?;
        let n = first.weight();
        if let Some(bad) = profiles.iter().find(|p| p.weight() != n) {
            return Err(Error::WeightMismatch { expected: n, found: bad.weight() });
        }
        Ok(Self { profiles })
    }

    pub fn degree(&self) -> u32 {
        self.profiles[0].weight()
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }
}

fn memo() -> &'static DashMap<Vec<Partition>, Rational> {
    static MEMO: OnceLock<DashMap<Vec<Partition>, Rational>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Frobenius–Schur evaluation; the value does not depend on profile order.
pub fn hurwitz(profiles: &[Partition]) -> Result<Rational> {
    let list = ProfileList::new(profiles.to_vec())?;
    let mut key = list.profiles;
    key.sort();
    if let Some(v) = memo().get(&key) {
        return Ok(v.clone());
    }
    let value = frobenius_schur(&key)?;
    memo().insert(key, value.clone());
    Ok(value)
}

fn frobenius_schur(profiles: &[Partition]) -> Result<Rational> {
    let n = profiles[0].weight();
    let k = profiles.len() as i64;
    let z_product: BigInt = profiles.iter().map(|m| BigInt::from(m.z_order())).product();
    let mut total = Rational::zero();
    for lambda in enumerate_partitions(n, None) {
        let mut chi_product = BigInt::one();
        for mu in profiles {
            chi_product *= character(&lambda, mu)?;
            if chi_product.is_zero() {
                break;
            }
        }
        if chi_product.is_zero() {
            continue;
        }
        let hook = Rational::from_integer(BigInt::from(lambda.hook_product()));
        total += pow(&hook, k - 2) * Rational::from_integer(chi_product);
    }
    Ok(total / Rational::from_integer(z_product))
}

/// Counts ordered tuples `(h_1,…,h_k)` with `h_i` of cycle type `μⁱ` and
/// `h_1⋯h_k = id`, divided by `n!`.
pub fn brute_force_hurwitz(profiles: &[Partition]) -> Result<Rational> {
    let list = ProfileList::new(profiles.to_vec())?;
    let n = list.degree();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::GuardExceeded { n, limit: BRUTE_FORCE_LIMIT });
    }
    let group = SymmetricGroup::cached(n as usize);
    // counts[g] = number of partial products h_1⋯h_j equal to g
    let mut counts = vec![0u64; group.elements.len()];
    counts[group.identity] = 1;
    for mu in list.profiles() {
        let class = group.class(mu);
        let mut next = vec![0u64; counts.len()];
        for (g, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &h in &class {
                next[group.product[g][h]] += c;
            }
        }
        counts = next;
    }
    let n_factorial = (1..=n as i64).product::<i64>();
    Ok(Rational::new(BigInt::from(counts[group.identity]), BigInt::from(n_factorial)))
}

struct SymmetricGroup {
    elements: Vec<Vec<u8>>,
    cycle_types: Vec<Partition>,
    product: Vec<Vec<usize>>,
    identity: usize,
}

impl SymmetricGroup {
    fn cached(n: usize) -> &'static Self {
        static GROUPS: [OnceLock<SymmetricGroup>; BRUTE_FORCE_LIMIT as usize + 1] =
            [const { OnceLock::new() }; BRUTE_FORCE_LIMIT as usize + 1];
        GROUPS[n].get_or_init(|| Self::new(n))
    }

    fn new(n: usize) -> Self {
        let mut elements = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        permute(&mut current, 0, &mut elements);
        elements.sort();
        let index: HashMap<Vec<u8>, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let product = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| {
                        // (a·b)(x) = a(b(x))
                        let ab: Vec<u8> = b.iter().map(|&x| a[x as usize]).collect();
                        index[&ab]
                    })
                    .collect()
            })
            .collect();
        let cycle_types = elements.iter().map(|p| cycle_type(p)).collect();
        let identity = index[&(0..n as u8).collect::<Vec<_>>()];
        Self { elements, cycle_types, product, identity }
    }

    fn class(&self, mu: &Partition) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| &self.cycle_types[i] == mu).collect()
    }
}

fn permute(v: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn cycle_type(perm: &[u8]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths).expect("cycle lengths are positive")
}

/// `H(2,…,2 (d times), μ, ν)` with `2 = (2, 1^{n-2})`; zero when `n < 2 ≤ d`.
pub fn simple_hurwitz(d: u32, mu: &Partition, nu: &Partition) -> Result<Rational> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { expected: mu.weight(), found: nu.weight() });
    }
    let n = mu.weight();
    if d > 0 && n < 2 {
        return Ok(Rational::zero());
    }
    let mut profiles = Vec::with_capacity(d as usize + 2);
    if d > 0 {
        let transposition = special_partition(2, 1, n)?;
        profiles.extend(std::iter::repeat(transposition).take(d as usize));
    }
    profiles.push(mu.clone());
    profiles.push(nu.clone());
    hurwitz(&profiles)
}

/// `ℓ(μ) + ℓ(ν) - d`, the Euler characteristic of the covering surface.
pub fn euler_characteristic(mu: &Partition, nu: &Partition, d: u32) -> Result<i64> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { expected: mu.weight(), found: nu.weight() });
    }
    Ok(mu.len() as i64 + nu.len() as i64 - d as i64)
}
