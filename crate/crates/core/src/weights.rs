//! Weight models and their weights on partitions.
//!
//! A weight model is a generating function `G(z) = Π_i (1 + c_i z)` (or its
//! dual). The weight of a branching configuration depends only on the
//! partition `λ` of its colengths and is the monomial symmetric function
//! `m_λ(c)` (forgotten function with sign for `H`).
//!
//! For the quantum models the defining multisums are summed in closed form.
//! With exponents `a_1,…,a_k`, prefix sums `S_j = a_1+⋯+a_j` and tail sums
//! `b_j = a_j+⋯+a_k`:
//!
//! * `E′`: `Σ_{1≤i_1<⋯<i_k} q^{Σ i_j a_j} = Π_j 1/(q^{-S_j} - 1)`
//! * `E`:  `Σ_{0≤i_1<⋯<i_k} q^{Σ i_j a_j} = q^{Σ (j-1) a_j} Π_j 1/(1 - q^{b_j})`
//! * `H`:  `Σ_{0≤i_1≤⋯≤i_k} q^{Σ i_j a_j} = Π_j 1/(1 - q^{b_j})`
//!
//! `Φ` sums these over all `k!` orderings of `x`; the weight of `λ` is
//! `Φ(λ)/|aut(λ)|`, i.e. the same sum over distinct orderings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::report::{ExpansionClaim, VerificationReport};
use crate::series::{
    bose_factor, check_q, exp_linear, format_rational, geometric_q, int, inverse_one_minus_exp,
    inverse_one_minus_q, parse_rational, pow, LaurentSeries, Rational, Var,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeightModel {
    /// `c_i = q^i`, `G(z) = (-qz; q)_∞`.
    EPrime,
    /// `c_i = q^{i-1}`, `G(z) = (-z; q)_∞`.
    E,
    /// Dual weights on `c_i = q^{i-1}`, `G(z) = 1/(z; q)_∞`.
    H,
    /// `G(z) = e^z`; only simple branching carries weight.
    Exp,
    /// `G(z) = 1 + z`; a single weighted branch point.
    Belyi,
    /// `G(z) = Π_i (1 + c_i z)` over a finite list.
    FiniteC(Vec<Rational>),
}

impl WeightModel {
    pub fn is_quantum(&self) -> bool {
        matches!(self, WeightModel::EPrime | WeightModel::E | WeightModel::H)
    }

    pub fn tag(&self) -> String {
        self.to_string()
    }

    fn unsupported(&self, what: &str) -> Error {
        Error::UnsupportedModel { model: self.tag(), what: what.into() }
    }

    fn require_quantum(&self, what: &str) -> Result<()> {
        if self.is_quantum() {
            Ok(())
        } else {
            Err(self.unsupported(what))
        }
    }
}

impl fmt::Display for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightModel::EPrime => f.write_str("eprime"),
            WeightModel::E => f.write_str("e"),
            WeightModel::H => f.write_str("h"),
            WeightModel::Exp => f.write_str("exp"),
            WeightModel::Belyi => f.write_str("belyi"),
            WeightModel::FiniteC(c) => {
                let list: Vec<String> = c.iter().map(format_rational).collect();
                write!(f, "finite:{}", list.join(","))
            }
        }
    }
}

impl FromStr for WeightModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "eprime" => Ok(WeightModel::EPrime),
            "e" => Ok(WeightModel::E),
            "h" => Ok(WeightModel::H),
            "exp" => Ok(WeightModel::Exp),
            "belyi" => Ok(WeightModel::Belyi),
            other => {
                let Some(list) = other.strip_prefix("finite:") else {
                    return Err(Error::Parse(format!("unknown weight model {other:?}")));
                };
                let c = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?;
                Ok(WeightModel::FiniteC(c))
            }
        }
    }
}

/// All distinct orderings of a multiset, in lexicographic order.
pub fn distinct_arrangements(x: &[u32]) -> Vec<Vec<u32>> {
    let mut current = x.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Π_m (multiplicity of m)!` for an arbitrary sequence.
fn aut_order(x: &[u32]) -> BigInt {
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    let mut total = BigInt::one();
    let mut run = 0u32;
    for (i, v) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *v { run + 1 } else { 1 };
        total *= run;
    }
    total
}

fn prefix_sums(a: &[u32]) -> Vec<i64> {
    a.iter()
        .scan(0i64, |s, &x| {
            *s += x as i64;
            Some(*s)
        })
        .collect()
}

fn tail_sums(a: &[u32]) -> Vec<i64> {
    let mut out = prefix_sums(&a.iter().rev().copied().collect::<Vec<_>>());
    out.reverse();
    out
}

/// `Σ_j (j-1) a_j`.
fn shifted_moment(a: &[u32]) -> i64 {
    a.iter().enumerate().map(|(j, &x)| j as i64 * x as i64).sum()
}

/// `(-1)^{Σx - len(x)}`, the sign carried by the `H` model.
fn h_sign(x: &[u32]) -> i64 {
    let colength: i64 = x.iter().map(|&v| v as i64).sum::<i64>() - x.len() as i64;
    if colength % 2 == 0 { 1 } else { -1 }
}

fn check_entries(x: &[u32]) -> Result<()> {
    if x.contains(&0) {
        return Err(Error::InvalidArgument(format!("entries must be positive, got {x:?}")));
    }
    Ok(())
}

/// Closed-form sum over distinct orderings of `x`, including the `H` sign.
fn closed_form_over_arrangements(model: &WeightModel, x: &[u32], q: &Rational) -> Rational {
    let inv_one_minus = |b: i64| (Rational::one() - pow(q, b)).recip();
    let mut total = Rational::zero();
    for a in distinct_arrangements(x) {
        let term = match model {
            WeightModel::EPrime => prefix_sums(&a)
                .into_iter()
                .map(|s| (pow(q, -s) - Rational::one()).recip())
                .product::<Rational>(),
            WeightModel::E => {
                pow(q, shifted_moment(&a)) * tail_sums(&a).into_iter().map(inv_one_minus).product::<Rational>()
            }
            WeightModel::H => tail_sums(&a).into_iter().map(inv_one_minus).product::<Rational>(),
            _ => unreachable!("quantum models only"),
        };
        total += term;
    }
    if *model == WeightModel::H {
        total *= int(h_sign(x));
    }
    total
}

/// `Φ_model(x)`: the ordered-sum closed form at rational `q`.
pub fn phi_value(model: &WeightModel, x: &[u32], q: &Rational) -> Result<Rational> {
    model.require_quantum("Φ closed forms")?;
    check_q(q)?;
    check_entries(x)?;
    if x.is_empty() {
        return Ok(Rational::one());
    }
    Ok(closed_form_over_arrangements(model, x, q) * Rational::from_integer(aut_order(x)))
}

/// Weight of a branching configuration whose colength partition is `λ`.
///
/// `q` is required for the quantum models and ignored otherwise.
pub fn weight(model: &WeightModel, lambda: &Partition, q: Option<&Rational>) -> Result<Rational> {
    match model {
        WeightModel::EPrime | WeightModel::E | WeightModel::H => {
            let q = q.ok_or_else(|| Error::MissingQ(model.tag()))?;
            check_q(q)?;
            if lambda.is_empty() {
                return Ok(Rational::one());
            }
            Ok(closed_form_over_arrangements(model, lambda.parts(), q))
        }
        WeightModel::Exp => Ok(indicator(lambda.parts().iter().all(|&p| p == 1))),
        WeightModel::Belyi => Ok(indicator(lambda.len() <= 1)),
        WeightModel::FiniteC(c) => Ok(finite_monomial(c, lambda.parts())),
    }
}

fn indicator(b: bool) -> Rational {
    if b { Rational::one() } else { Rational::zero() }
}

/// `m_λ(c_1,…,c_N)` for a finite list.
fn finite_monomial(c: &[Rational], lambda: &[u32]) -> Rational {
    if lambda.len() > c.len() {
        return Rational::zero();
    }
    distinct_arrangements(lambda)
        .iter()
        .map(|a| strict_index_sum(a, 0..c.len() as i64, |i, e| pow(&c[i as usize], e as i64)))
        .sum()
}

/// `Σ_{i_1<⋯<i_k in range} Π_j term(i_j, a_j)`.
fn strict_index_sum(
    a: &[u32],
    range: std::ops::Range<i64>,
    term: impl Fn(i64, u32) -> Rational,
) -> Rational {
    index_sum(a, range, term, true)
}

fn index_sum(
    a: &[u32],
    range: std::ops::Range<i64>,
    term: impl Fn(i64, u32) -> Rational,
    strict: bool,
) -> Rational {
    // dp[j]: sum over index tuples for the first j exponents using the
    // indices visited so far
    let k = a.len();
    let mut dp = vec![Rational::zero(); k + 1];
    dp[0] = Rational::one();
    for i in range {
        if strict {
            for j in (1..=k).rev() {
                let add = &dp[j - 1] * term(i, a[j - 1]);
                dp[j] += add;
            }
        } else {
            for j in 1..=k {
                let add = &dp[j - 1] * term(i, a[j - 1]);
                dp[j] += add;
            }
        }
    }
    dp.pop().expect("k + 1 entries")
}

/// Direct truncated evaluation of the defining multisum of a quantum weight,
/// with indices at most `index_bound`. Converges to [`weight`] as the bound
/// grows.
pub fn multisum_oracle(model: &WeightModel, x: &[u32], q: &Rational, index_bound: u32) -> Result<Rational> {
    model.require_quantum("multisum evaluation")?;
    check_q(q)?;
    check_entries(x)?;
    if (index_bound as usize) < x.len() {
        return Err(Error::InvalidArgument(format!(
            "index bound {index_bound} is smaller than the number of parts {}",
            x.len()
        )));
    }
    let bound = index_bound as i64;
    let term = |i: i64, e: u32| pow(q, i * e as i64);
    let total: Rational = distinct_arrangements(x)
        .iter()
        .map(|a| match model {
            WeightModel::EPrime => index_sum(a, 1..bound + 1, term, true),
            WeightModel::E => index_sum(a, 0..bound + 1, term, true),
            _ => index_sum(a, 0..bound + 1, term, false),
        })
        .sum();
    Ok(if *model == WeightModel::H { total * int(h_sign(x)) } else { total })
}

/// Upper bound on `|weight - multisum_oracle|` at the same bound.
///
/// Every omitted tuple has some index `> bound`; summing the geometric series
/// in that coordinate from `bound + 1` and all others freely gives
/// `Σ_arr Σ_j q^{(bound+1) a_j}/(1-q^{a_j}) Π_{r≠j} 1/(1-q^{a_r})`.
pub fn multisum_tail_bound(model: &WeightModel, x: &[u32], q: &Rational, index_bound: u32) -> Result<Rational> {
    model.require_quantum("multisum evaluation")?;
    check_q(q)?;
    check_entries(x)?;
    let free: Rational = x.iter().map(|&a| (Rational::one() - pow(q, a as i64)).recip()).product();
    let per_arrangement: Rational = x
        .iter()
        .map(|&a| pow(q, (index_bound as i64 + 1) * a as i64))
        .sum::<Rational>()
        * free;
    Ok(per_arrangement * int(distinct_arrangements(x).len() as i64))
}

fn check_series_order(order: i64, lowest: i64) -> Result<()> {
    if order <= lowest {
        return Err(Error::InvalidArgument(format!(
            "truncation order {order} does not reach past the lowest degree {lowest}"
        )));
    }
    Ok(())
}

/// Taylor expansion in `q` of the weight of `λ`, exact below `order`.
pub fn weight_q_series(model: &WeightModel, lambda: &Partition, order: i64) -> Result<LaurentSeries> {
    model.require_quantum("q-series weights")?;
    check_series_order(order, 0)?;
    let mut total = LaurentSeries::zero(Var::Q, order);
    for a in distinct_arrangements(lambda.parts()) {
        let mut term = match model {
            WeightModel::E => LaurentSeries::monomial(Var::Q, Rational::one(), shifted_moment(&a), order),
            _ => LaurentSeries::one(Var::Q, order),
        };
        match model {
            WeightModel::EPrime => {
                for s in prefix_sums(&a) {
                    term = term.mul(&geometric_q(s, order)?)?;
                }
            }
            _ => {
                for b in tail_sums(&a) {
                    term = term.mul(&inverse_one_minus_q(b, order)?)?;
                }
            }
        }
        total = total.add(&term)?;
    }
    if *model == WeightModel::H {
        total = total.scale(&int(h_sign(lambda.parts())));
    }
    Ok(total.truncate(order))
}

/// Laurent expansion in `ε` of the weight of `λ` at `q = e^{-ε}`.
///
/// The series starts at `ε^{-ℓ(λ)}` and is exact below `order`.
pub fn weight_eps_series(model: &WeightModel, lambda: &Partition, order: i64) -> Result<LaurentSeries> {
    model.require_quantum("ε-series weights")?;
    let ell = lambda.len() as i64;
    check_series_order(order, -ell)?;
    // each factor has a simple pole, so products lose one order per factor
    let working = order + 2 * ell + 2;
    let mut total = LaurentSeries::zero(Var::Eps, working);
    for a in distinct_arrangements(lambda.parts()) {
        let mut term = match model {
            WeightModel::E => exp_linear(Var::Eps, &int(-shifted_moment(&a)), working),
            _ => LaurentSeries::one(Var::Eps, working),
        };
        match model {
            WeightModel::EPrime => {
                for s in prefix_sums(&a) {
                    term = term.mul(&bose_factor(s, working)?)?;
                }
            }
            _ => {
                for b in tail_sums(&a) {
                    term = term.mul(&inverse_one_minus_exp(b, working)?)?;
                }
            }
        }
        total = total.add(&term)?;
    }
    if *model == WeightModel::H {
        total = total.scale(&int(h_sign(lambda.parts())));
    }
    Ok(total.truncate(order))
}

/// Weight series in either `q` or `ε`.
pub fn weight_series(model: &WeightModel, lambda: &Partition, var: Var, order: i64) -> Result<LaurentSeries> {
    match var {
        Var::Q => weight_q_series(model, lambda, order),
        Var::Eps => weight_eps_series(model, lambda, order),
        other => Err(Error::InvalidArgument(format!("weights are expanded in q or eps, not {other}"))),
    }
}

/// `[z^i] G(z)` for the quantum models at rational `q`.
pub fn gen_function_coeff(model: &WeightModel, i: u32, q: &Rational) -> Result<Rational> {
    model.require_quantum("q-Pochhammer coefficients")?;
    check_q(q)?;
    let pochhammer: Rational = (1..=i as i64).map(|j| Rational::one() - pow(q, j)).product();
    let i = i as i64;
    let numerator = match model {
        WeightModel::EPrime => pow(q, i * (i + 1) / 2),
        WeightModel::E => pow(q, i * (i - 1) / 2),
        _ => Rational::one(),
    };
    Ok(numerator / pochhammer)
}

/// `g_0,…,g_{count-1}` with `G(z) = Σ g_i z^i`, for every model.
pub fn generating_coefficients(model: &WeightModel, q: Option<&Rational>, count: usize) -> Result<Vec<Rational>> {
    match model {
        WeightModel::EPrime | WeightModel::E | WeightModel::H => {
            let q = q.ok_or_else(|| Error::MissingQ(model.tag()))?;
            (0..count as u32).map(|i| gen_function_coeff(model, i, q)).collect()
        }
        WeightModel::Exp => Ok((0..count as u32)
            .map(|i| Rational::new(BigInt::one(), BigInt::from(factorial(i))))
            .collect()),
        WeightModel::Belyi => Ok((0..count).map(|i| indicator(i <= 1)).collect()),
        WeightModel::FiniteC(c) => {
            // elementary symmetric functions of c
            let mut e = vec![Rational::zero(); count.max(1)];
            e[0] = Rational::one();
            for ci in c {
                for k in (1..e.len()).rev() {
                    let add = &e[k - 1] * ci;
                    e[k] += add;
                }
            }
            e.truncate(count);
            Ok(e)
        }
    }
}

/// `Li₂(q, z) = (1-q) Σ_{k≥1} z^k / (k (1 - q^k))`, exact below `z^{order}`.
pub fn quantum_dilog(q: &Rational, order: i64) -> LaurentSeries {
    let mut coeffs = vec![Rational::zero()];
    for k in 1..order.max(1) {
        coeffs.push((Rational::one() - q) / (int(k) * (Rational::one() - pow(q, k))));
    }
    LaurentSeries::polynomial(Var::Z, &coeffs, order)
}

/// Checks the dilogarithm forms of the quantum generating functions through
/// `z^{order}`.
///
/// Three reports, in order:
/// 1. `(1+z)·E′(q,z)` against `exp(-Li₂(q,-z)/(1-q))`;
/// 2. `H(q,z)` against `exp(Li₂(q,z))`, exactly as written;
/// 3. `H(q,z)` against `exp(Li₂(q,z)/(1-q))`, informational.
///
/// The exponential side is the claim; the product side is computed from the
/// q-Pochhammer coefficients.
pub fn dilog_check(q: &Rational, order: u32) -> Result<Vec<VerificationReport>> {
    check_q(q)?;
    let valid = order as i64 + 1;
    let one_minus_q = Rational::one() - q;
    let li2 = quantum_dilog(q, valid);
    let li2_neg = {
        let coeffs: Vec<Rational> =
            (0..valid).map(|k| if k % 2 == 0 { li2.coeff(k) } else { -li2.coeff(k) }).collect();
        LaurentSeries::polynomial(Var::Z, &coeffs, valid)
    };

    let e_prime = LaurentSeries::polynomial(
        Var::Z,
        &generating_coefficients(&WeightModel::EPrime, Some(q), valid as usize)?,
        valid,
    );
    let one_plus_z = LaurentSeries::polynomial(Var::Z, &[Rational::one(), Rational::one()], valid);
    let e_side = one_plus_z.mul(&e_prime)?;
    let e_claim = li2_neg.scale(&(-one_minus_q.recip())).exp()?;

    let h_side = LaurentSeries::polynomial(
        Var::Z,
        &generating_coefficients(&WeightModel::H, Some(q), valid as usize)?,
        valid,
    );
    let h_literal = li2.exp()?;
    let h_normalized = li2.scale(&one_minus_q.recip()).exp()?;

    let q_text = format_rational(q);
    let make = |source: &str, claim: &LaurentSeries, computed: &LaurentSeries, notes: &str| {
        let coefficients = |s: &LaurentSeries| (0..valid).map(|k| (k, s.coeff(k))).collect();
        VerificationReport::compare(
            ExpansionClaim {
                source: source.into(),
                instance: format!("q={q_text} order={order}"),
                variable: Var::Z,
                scale_power: 0,
                claimed: coefficients(claim),
                validity: "0 < q < 1".into(),
            },
            coefficients(computed),
            notes,
        )
    };
    Ok(vec![
        make(
            "dilog-eprime",
            &e_claim,
            &e_side,
            "claimed: exp(-Li2(q,-z)/(1-q)); computed: (1+z) times the E' product coefficients",
        ),
        make(
            "dilog-h",
            &h_literal,
            &h_side,
            "claimed: exp(Li2(q,z)) as written; computed: coefficients 1/(q;q)_i of the H product",
        ),
        make(
            "dilog-h-normalized",
            &h_normalized,
            &h_side,
            "claimed: exp(Li2(q,z)/(1-q)); computed: coefficients 1/(q;q)_i of the H product",
        )
        .informational(true),
    ])
}

/// `true` when every status entry of a non-informational report matches.
pub fn reports_match(reports: &[VerificationReport]) -> bool {
    reports.iter().filter(|r| !r.informational).all(VerificationReport::all_match)
}
