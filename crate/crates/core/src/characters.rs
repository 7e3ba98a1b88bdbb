//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule, run on beta-sets (first
//! column hook lengths): stripping a border strip of length `r` moves one
//! bead from position `b` to `b - r`, with sign given by the parity of the
//! beads jumped over. Intermediate values are memoized on
//! `(remaining shape, remaining cycle lengths)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::series::Rational;

type Key = (Vec<u32>, Vec<u32>);

/// Concurrent cache of character values, shared by all degrees.
///
/// Concurrent callers may compute the same entry twice; both store the same
/// value, so readers never observe an inconsistent table.
#[derive(Default)]
pub struct CharacterTable {
    memo: DashMap<Key, BigInt>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_λ(μ)`.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch { expected: lambda.weight(), found: mu.weight() });
        }
        Ok(self.strip(lambda.parts(), mu.parts()))
    }

    /// Number of memoized intermediate values.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    fn strip(&self, shape: &[u32], cycles: &[u32]) -> BigInt {
        let Some((&r, rest)) = cycles.split_first() else {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }

        let len = shape.len();
        let beta: Vec<i64> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
            .collect();
        let r = r as i64;
        let mut total = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            let target = b - r;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<u32> = moved
                .iter()
                .enumerate()
                .map(|(j, &x)| (x - (len - 1 - j) as i64) as u32)
                .filter(|&p| p > 0)
                .collect();
            let value = self.strip(&smaller, rest);
            if jumped % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn global() -> &'static CharacterTable {
    static TABLE: OnceLock<CharacterTable> = OnceLock::new();
    TABLE.get_or_init(CharacterTable::new)
}

/// `χ_λ(μ)` from the process-wide table.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    global().character(lambda, mu)
}

/// Frobenius expansion `s_λ = Σ_μ z_μ⁻¹ χ_λ(μ) p_μ`.
pub fn schur_in_powersums(lambda: &Partition) -> BTreeMap<Partition, Rational> {
    enumerate_partitions(lambda.weight(), None)
        .into_iter()
        .map(|mu| {
            let chi = character(lambda, &mu).expect("equal weights");
            let coeff = Rational::new(chi, BigInt::from(mu.z_order()));
            (mu, coeff)
        })
        .collect()
}
