//! Acceptance suite: one line per criterion, exit status 1 if any is red.
//!
//! Every comparison is exact (rational equality, tolerance 0). Reference
//! values come from oracles written here, independent of the engine:
//! brute-force permutation counting, characters from the alternant
//! `a_δ · p_μ`, closed-form weight sums, and a separate power-series
//! exponential.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use quantum_hurwitz::measures::{enumerate_configs, lambda_map, partition_function_by_configs, partition_function_series, xi_measure};
use quantum_hurwitz::tau::verify_tau_identity;
use quantum_hurwitz::verify::{verify_pf_semiclassical, verify_zero_temp};
use quantum_hurwitz::weighted::weighted_hurwitz_series;
use quantum_hurwitz::weights::{dilog_check, weight, weight_eps_series};
use quantum_hurwitz::{character, format_rational, hurwitz, Partition, Rational, Var, WeightModel};

const TIME_CHARACTERS: Duration = Duration::from_secs(10);
const TIME_HURWITZ: Duration = Duration::from_secs(120);
const TIME_ZERO_TEMP: Duration = Duration::from_secs(30);
const TIME_TAU: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn int(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}

fn fact(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Oracles

/// Partitions of `n` as weakly decreasing vectors, generated recursively.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn count_partitions(n: u32) -> i64 {
    partitions(n).len() as i64
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("oracle partitions are valid")
}

fn z_order(mu: &[u32]) -> i64 {
    let mut m: BTreeMap<u32, u32> = BTreeMap::new();
    for &x in mu {
        *m.entry(x).or_default() += 1;
    }
    m.iter().map(|(&k, &c)| (k as i64).pow(c) * fact(c)).product()
}

fn aut_order(parts: &[u32]) -> i64 {
    let mut m: BTreeMap<u32, u32> = BTreeMap::new();
    for &x in parts {
        *m.entry(x).or_default() += 1;
    }
    m.values().map(|&c| fact(c)).product()
}

/// All permutations of `0..n` (as images), with their signs.
fn permutations(n: usize) -> Vec<(Vec<u8>, i64)> {
    fn go(rest: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n as u8).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

fn cycle_type(p: &[u8]) -> Vec<u32> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Brute-force Hurwitz numbers: counts tuples in `S_n` with prescribed
/// cycle types and product the identity, by convolving class indicators.
struct SymmetricGroup {
    n: u32,
    elements: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    classes: BTreeMap<Vec<u32>, Vec<usize>>,
}

impl SymmetricGroup {
    fn new(n: u32) -> Self {
        let elements: Vec<Vec<u8>> = permutations(n as usize).into_iter().map(|(p, _)| p).collect();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut classes: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (i, p) in elements.iter().enumerate() {
            classes.entry(cycle_type(p)).or_default().push(i);
        }
        Self { n, elements, index, classes }
    }

    fn compose(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (&self.elements[a], &self.elements[b]);
        let c: Vec<u8> = (0..pa.len()).map(|i| pa[pb[i] as usize]).collect();
        self.index[&c]
    }

    fn hurwitz(&self, profiles: &[Vec<u32>]) -> Rational {
        let identity = self.index[&(0..self.n as u8).collect::<Vec<_>>()];
        let mut dist = vec![0u64; self.elements.len()];
        dist[identity] = 1;
        for profile in profiles {
            let class = &self.classes[profile];
            let mut next = vec![0u64; dist.len()];
            for (g, &count) in dist.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                for &h in class {
                    next[self.compose(g, h)] += count;
                }
            }
            dist = next;
        }
        Rational::new(BigInt::from(dist[identity]), BigInt::from(fact(self.n)))
    }
}

/// `χ^λ(μ) = [x^{λ+δ}] a_δ(x) p_μ(x)` in `n` variables.
struct AlternantCharacters {
    n: usize,
    perms: Vec<(Vec<u8>, i64)>,
}

impl AlternantCharacters {
    fn new(n: usize) -> Self {
        Self { n, perms: permutations(n) }
    }

    fn power_sum_product(&self, mu: &[u32]) -> HashMap<Vec<u32>, i64> {
        let mut poly: HashMap<Vec<u32>, i64> = HashMap::from([(vec![0; self.n], 1)]);
        for &k in mu {
            let mut next: HashMap<Vec<u32>, i64> = HashMap::new();
            for (exp, c) in &poly {
                for i in 0..self.n {
                    let mut e = exp.clone();
                    e[i] += k;
                    *next.entry(e).or_default() += c;
                }
            }
            poly = next;
        }
        poly
    }

    fn character(&self, lambda: &[u32], p_mu: &HashMap<Vec<u32>, i64>) -> i64 {
        let n = self.n;
        let delta: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
        let target: Vec<i64> = (0..n).map(|i| *lambda.get(i).unwrap_or(&0) as i64 + delta[i]).collect();
        let mut total = 0;
        for (sigma, sign) in &self.perms {
            let exp: Option<Vec<u32>> = (0..n)
                .map(|i| {
                    let e = target[i] - delta[sigma[i] as usize];
                    (e >= 0).then_some(e as u32)
                })
                .collect();
            if let Some(exp) = exp {
                total += sign * p_mu.get(&exp).copied().unwrap_or(0);
            }
        }
        total
    }
}

/// `w_E′(λ)` from its closed form: `(1/|aut|) Σ_{σ ∈ S_k} Π_j q^{S_j}/(1 - q^{S_j})`.
fn e_prime_weight_closed_form(lambda: &[u32], q: &Rational) -> Rational {
    let mut total = Rational::zero();
    for (sigma, _) in permutations(lambda.len()) {
        let mut s = 0u32;
        let mut term = Rational::one();
        for &i in &sigma {
            s += lambda[i as usize];
            let qs = q.pow(s as i32);
            term *= &qs / (Rational::one() - &qs);
        }
        total += term;
    }
    total / int(aut_order(lambda))
}

/// `exp` of a power series with zero constant term, via `n b_n = Σ k a_k b_{n-k}`.
fn exp_series(a: &[Rational]) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..a.len() {
        let mut s = Rational::zero();
        for k in 1..=n {
            s += int(k as i64) * &a[k] * &b[n - k];
        }
        b.push(s / int(n as i64));
    }
    b
}

fn q_pochhammer(q: &Rational, i: u32) -> Rational {
    (1..=i as i32).map(|k| Rational::one() - q.pow(k)).product()
}

fn tv_to_dirac(support: &[(Partition, Rational)], target: &Partition) -> Rational {
    let mut total = Rational::zero();
    let mut seen = false;
    for (p, m) in support {
        if p == target {
            seen = true;
            total += (m - Rational::one()).abs();
        } else {
            total += m.abs();
        }
    }
    if !seen {
        total += Rational::one();
    }
    total / int(2)
}

// ---------------------------------------------------------------------------
// Criteria

fn c1_characters() -> Outcome {
    let mut compared = 0;
    for n in 1..=6u32 {
        let oracle = AlternantCharacters::new(n as usize);
        let parts = partitions(n);
        for mu in &parts {
            let p_mu = oracle.power_sum_product(mu);
            for lambda in &parts {
                let expected = oracle.character(lambda, &p_mu);
                let got = character(&part(lambda), &part(mu)).map_err(|e| e.to_string())?;
                check(got == BigInt::from(expected), || format!("chi_{lambda:?}({mu:?}): engine {got}, oracle {expected}"))?;
                compared += 1;
            }
        }
    }
    for n in 1..=8u32 {
        let parts = partitions(n);
        let table: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| character(&part(l), &part(m)).expect("valid")).collect())
            .collect();
        for i in 0..parts.len() {
            for j in 0..parts.len() {
                let row: Rational = (0..parts.len())
                    .map(|k| Rational::new(&table[i][k] * &table[j][k], BigInt::from(z_order(&parts[k]))))
                    .sum();
                check(row == int((i == j) as i64), || format!("row orthogonality fails at n={n}"))?;
                let col: BigInt = (0..parts.len()).map(|k| &table[k][i] * &table[k][j]).sum();
                let expected = if i == j { z_order(&parts[i]) } else { 0 };
                check(col == BigInt::from(expected), || format!("column orthogonality fails at n={n}"))?;
            }
        }
    }
    Ok(format!("{compared} characters match the alternant oracle (n<=6); both orthogonality relations exact for n<=8"))
}

fn c2_hurwitz() -> Outcome {
    let mut compared = 0;
    for n in 1..=5u32 {
        let group = SymmetricGroup::new(n);
        let parts = partitions(n);
        for k in 1..=4usize {
            // multisets of size k, as non-decreasing index tuples
            let mut idx = vec![0usize; k];
            loop {
                let profiles: Vec<Vec<u32>> = idx.iter().map(|&i| parts[i].clone()).collect();
                let expected = group.hurwitz(&profiles);
                let engine_profiles: Vec<Partition> = profiles.iter().map(|p| part(p)).collect();
                let got = hurwitz(&engine_profiles).map_err(|e| e.to_string())?;
                check(got == expected, || {
                    format!("H{profiles:?}: engine {}, brute force {}", format_rational(&got), format_rational(&expected))
                })?;
                compared += 1;
                let Some(pos) = (0..k).rev().find(|&p| idx[p] + 1 < parts.len()) else { break };
                idx[pos] += 1;
                for p in pos + 1..k {
                    idx[p] = idx[pos];
                }
            }
        }
    }
    Ok(format!("{compared} profile multisets (n<=5, k<=4) equal brute-force counts"))
}

fn c3_n_independence() -> Outcome {
    let mut notes = Vec::new();
    for model in [WeightModel::EPrime, WeightModel::E, WeightModel::H] {
        for q in [r(1, 2), r(1, 3)] {
            for d in 1..=4u32 {
                let mut seen: Option<(Rational, BTreeMap<Partition, Rational>)> = None;
                for n in [2 * d, 2 * d + 1, 2 * d + 2] {
                    // fibre sizes: configurations over λ number Π p(λ_j) once n >= 2d
                    let configs = enumerate_configs(n, d, None);
                    let mut unnormalized: BTreeMap<Partition, Rational> = BTreeMap::new();
                    let mut fibre: BTreeMap<Partition, i64> = BTreeMap::new();
                    for c in &configs {
                        let lambda = lambda_map(c);
                        *fibre.entry(lambda.clone()).or_default() += 1;
                        let w = weight(&model, &lambda, Some(&q)).map_err(|e| e.to_string())?;
                        *unnormalized.entry(lambda).or_insert_with(Rational::zero) += w;
                    }
                    for (lambda, count) in &fibre {
                        let expected: i64 = lambda.parts().iter().map(|&c| count_partitions(c)).product();
                        check(*count == expected, || format!("fibre over {lambda:?} at n={n} has {count} configurations, expected {expected}"))?;
                    }
                    let z: Rational = unnormalized.values().sum();
                    let engine_z = partition_function_by_configs(n, d, &model, Some(&q)).map_err(|e| e.to_string())?;
                    check(engine_z == z, || format!("engine configuration sum differs at {model} d={d} n={n}"))?;
                    let xi: BTreeMap<Partition, Rational> = if z.is_zero() {
                        BTreeMap::new()
                    } else {
                        unnormalized.iter().map(|(l, w)| (l.clone(), w / &z)).collect()
                    };
                    match &seen {
                        None => seen = Some((z, xi)),
                        Some((z0, xi0)) => {
                            check(*z0 == z, || format!("{model} q={} d={d}: Z differs at n={n}", format_rational(&q)))?;
                            check(*xi0 == xi, || format!("{model} q={} d={d}: xi differs at n={n}", format_rational(&q)))?;
                        }
                    }
                }
                if seen.as_ref().is_some_and(|(z, _)| z.is_zero()) {
                    notes.push(format!("{model} q={} d={d}: Z = 0 for every n, xi undefined for every n", format_rational(&q)));
                }
            }
        }
    }
    let mut msg = "Z and xi agree across n in {2d,2d+1,2d+2}, d<=4, E'/E/H, q in {1/2,1/3}".to_string();
    if !notes.is_empty() {
        msg.push_str(&format!(" [{}]", notes.join("; ")));
    }
    Ok(msg)
}

fn c4_desk_values() -> Outcome {
    let q = r(1, 2);
    let mut values = Vec::new();
    for d in 1..=2u32 {
        // Z_d = Σ_λ p(λ) w(λ), with p(λ) = Π p(λ_j) configurations per λ
        let oracle: Rational = partitions(d)
            .iter()
            .map(|l| {
                let mult: i64 = l.iter().map(|&c| count_partitions(c)).product();
                int(mult) * e_prime_weight_closed_form(l, &q)
            })
            .sum();
        let engine = quantum_hurwitz::measures::partition_function(d, &WeightModel::EPrime, Some(&q), Some(2 * d))
            .map_err(|e| e.to_string())?;
        check(oracle == int(1), || format!("closed-form oracle gives {} at d={d}", format_rational(&oracle)))?;
        check(engine == int(1), || format!("engine gives {} at d={d}", format_rational(&engine)))?;
        values.push(format!("pf(d={d}) = {}", format_rational(&engine)));
    }
    Ok(format!("{} (engine and closed-form oracle)", values.join(", ")))
}

fn c5_semiclassical_leading() -> Outcome {
    let models = [WeightModel::EPrime, WeightModel::E, WeightModel::H];
    for model in &models {
        for d in 1..=5u32 {
            let s = partition_function_series(model, d, Var::Eps, 1 - d as i64).map_err(|e| e.to_string())?;
            let c0 = s.coeff(-(d as i64));
            check(c0 == r(1, fact(d)), || format!("{model} d={d}: order-0 coefficient {}", format_rational(&c0)))?;
        }
    }
    let qs: Vec<Rational> = (1..=4).map(|m| int(1) - r(1, 10i64.pow(m))).collect();
    let mut last_tvs = Vec::new();
    for model in &models {
        for d in 1..=3u32 {
            let target = Partition::column(d);
            let mut tvs = Vec::new();
            for q in &qs {
                let xi = xi_measure(d, model, Some(q)).map_err(|e| e.to_string())?;
                tvs.push(tv_to_dirac(&xi.support, &target));
            }
            if d == 1 {
                // ξ_1 is δ_(1) for every q
                check(tvs.iter().all(Zero::is_zero), || format!("{model} d=1: TV not identically 0"))?;
                continue;
            }
            check(tvs.windows(2).all(|w| w[1] < w[0]), || {
                format!("{model} d={d}: TV sequence {:?} not strictly decreasing", tvs.iter().map(format_rational).collect::<Vec<_>>())
            })?;
            last_tvs.push(format!("{model} d={d}: {:.2e}", rational_to_f64(tvs.last().expect("four values"))));
        }
    }
    Ok(format!(
        "eps^d pf -> 1/d! for d<=5 (E', E, H); TV to delta_(1^d) strictly decreasing for d=2,3 (d=1: TV = 0 identically); TV at q=1-10^-4: {}",
        last_tvs.join(", ")
    ))
}

fn rational_to_f64(x: &Rational) -> f64 {
    // display only
    let scale = BigInt::from(10u64).pow(18);
    let scaled = (x * Rational::from_integer(scale.clone())).to_integer();
    scaled.to_string().parse::<f64>().unwrap_or(f64::NAN) / 1e18
}

fn c6_pf_first_order() -> Outcome {
    let s = partition_function_series(&WeightModel::EPrime, 2, Var::Eps, 0).map_err(|e| e.to_string())?;
    let (a, b) = (s.coeff(-2), s.coeff(-1));
    check(a == r(1, 2) && b == r(1, 4), || format!("eps^2 pf = {} + {} eps", format_rational(&a), format_rational(&b)))?;
    let mut reports = Vec::new();
    for d in 3..=4u32 {
        let report = verify_pf_semiclassical(&WeightModel::EPrime, d, 1).map_err(|e| e.to_string())?;
        let claimed = r(3 - d as i64, 4 * fact(d - 1));
        check(report.claim.claimed.get(&1) == Some(&claimed), || format!("registry transcribes the wrong claim at d={d}"))?;
        check(report.claim.claimed.get(&0) == Some(&r(1, fact(d))), || format!("registry leading term wrong at d={d}"))?;
        let status = report.status.iter().find(|s| s.degree == 1).ok_or("missing order-1 status")?;
        reports.push(format!(
            "d={d}: engine {} vs claimed {} ({})",
            format_rational(&status.computed),
            format_rational(&status.claimed),
            if status.ok() { "match" } else { "mismatch" }
        ));
    }
    Ok(format!("eps^2 pf_E' = 1/2 + 1/4 eps exactly; reports {}", reports.join("; ")))
}

fn c7_phi_expansions() -> Outcome {
    for d in 1..=5u32 {
        let column = Partition::column(d);
        let s = weight_eps_series(&WeightModel::EPrime, &column, 2 - d as i64).map_err(|e| e.to_string())?;
        let aut = int(fact(d));
        let (c0, c1) = (s.coeff(-(d as i64)) * &aut, s.coeff(1 - d as i64) * &aut);
        let expected = int(-(d as i64) * (d as i64 + 1)) / int(4);
        check(c0 == int(1) && c1 == expected, || format!("Phi(1^{d}) = eps^-d ({} + {} eps)", format_rational(&c0), format_rational(&c1)))?;
        if d >= 2 {
            let mut parts = vec![2];
            parts.extend(std::iter::repeat(1).take(d as usize - 2));
            let hook = part(&parts);
            let s = weight_eps_series(&WeightModel::EPrime, &hook, 2 - d as i64).map_err(|e| e.to_string())?;
            let c = s.coeff(1 - d as i64) * int(aut_order(&parts));
            check(c == r(1, 2), || format!("Phi(2,1^{}) leading coefficient {}", d - 2, format_rational(&c)))?;
        }
    }
    Ok("Phi(1^d) and Phi(2,1^(d-2)) expansions exact for d<=5".into())
}

fn c8_zero_temperature() -> Outcome {
    let mut found = Vec::new();
    for d in 2..=6u32 {
        let s = partition_function_series(&WeightModel::EPrime, d, Var::Q, d as i64 + 2).map_err(|e| e.to_string())?;
        for k in 0..d as i64 {
            check(s.coeff(k).is_zero(), || format!("d={d}: nonzero q^{k}"))?;
        }
        let (a, b) = (s.coeff(d as i64), s.coeff(d as i64 + 1));
        check(a == int(count_partitions(d)) && b == int(count_partitions(d - 1)), || {
            format!("d={d}: q^d, q^(d+1) coefficients {}, {}", format_rational(&a), format_rational(&b))
        })?;
        let report = verify_zero_temp(d, 1, None, None).map_err(|e| e.to_string())?;
        check(report.all_match(), || format!("verifier report mismatches at d={d}"))?;
        found.push(format!("({a},{b})"));
    }
    Ok(format!("(p(d), p(d-1)) for d=2..6: {}", found.join(" ")))
}

fn c9_zero_temp_hurwitz() -> Outcome {
    let n = 4;
    let group = SymmetricGroup::new(n);
    let parts = partitions(n);
    let colength = |p: &Vec<u32>| n - p.len() as u32;
    let colength_two: Vec<&Vec<u32>> = parts.iter().filter(|p| colength(p) == 2).collect();
    let colength_one: Vec<&Vec<u32>> = parts.iter().filter(|p| colength(p) == 1).collect();
    let mut pairs = 0;
    for mu in &parts {
        for nu in &parts {
            let first: Rational = colength_two.iter().map(|p| group.hurwitz(&[(*p).clone(), mu.clone(), nu.clone()])).sum();
            let mut second = Rational::zero();
            for a in &colength_one {
                for b in &colength_one {
                    second += group.hurwitz(&[(*a).clone(), (*b).clone(), mu.clone(), nu.clone()]);
                }
            }
            let s = weighted_hurwitz_series(&WeightModel::EPrime, 2, &part(mu), &part(nu), Var::Q, 4).map_err(|e| e.to_string())?;
            check(s.coeff(2) == first && s.coeff(3) == second, || {
                format!(
                    "mu={mu:?} nu={nu:?}: series ({}, {}), sums ({}, {})",
                    format_rational(&s.coeff(2)),
                    format_rational(&s.coeff(3)),
                    format_rational(&first),
                    format_rational(&second)
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("q^2 and q^3 coefficients equal the configuration sums for all {pairs} pairs (n=4, d=2)"))
}

fn c10_tau() -> Outcome {
    let mut count = 0;
    let mut cases: Vec<(WeightModel, Option<Rational>)> = vec![(WeightModel::EPrime, Some(r(1, 2))), (WeightModel::EPrime, Some(r(1, 3)))];
    cases.push((WeightModel::Exp, None));
    for (model, q) in &cases {
        for n in 1..=4u32 {
            let reports = verify_tau_identity(model, q.as_ref(), n, 3).map_err(|e| e.to_string())?;
            for report in &reports {
                check(report.all_match(), || format!("{model} n={n}: mismatch in {}", report.claim.instance))?;
                count += report.status.len();
            }
        }
    }
    Ok(format!("{count} coefficients agree (E' at q=1/2,1/3 and exp with 1/d!; n<=4, d<=3)"))
}

fn c11_classical_limit() -> Outcome {
    let n = 3;
    let group = SymmetricGroup::new(n);
    let parts = partitions(n);
    let transposition = vec![2, 1];
    let mut checked = 0;
    for model in [WeightModel::EPrime, WeightModel::E, WeightModel::H] {
        for d in 0..=2u32 {
            for mu in &parts {
                for nu in &parts {
                    let mut profiles = vec![transposition.clone(); d as usize];
                    profiles.push(mu.clone());
                    profiles.push(nu.clone());
                    let expected = group.hurwitz(&profiles) / int(fact(d));
                    let s = weighted_hurwitz_series(&model, d, &part(mu), &part(nu), Var::Eps, 1 - d as i64).map_err(|e| e.to_string())?;
                    let got = s.coeff(-(d as i64));
                    check(got == expected, || {
                        format!("{model} d={d} mu={mu:?} nu={nu:?}: {} vs {}", format_rational(&got), format_rational(&expected))
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} limits equal brute-force simple Hurwitz / d! (n=3, d<=2)"))
}

fn c12_dilog() -> Outcome {
    const ORDER: usize = 8;
    let mut failures = Vec::new();
    let mut passes = Vec::new();
    for q in [r(1, 3), r(1, 2)] {
        let one_minus_q = Rational::one() - &q;
        // E′(q,z) = Π_{k≥1}(1 + q^k z): coefficients q^{i(i+1)/2}/(q;q)_i
        let e_prime: Vec<Rational> = (0..=ORDER as u32).map(|i| q.pow((i * (i + 1) / 2) as i32) / q_pochhammer(&q, i)).collect();
        let lhs: Vec<Rational> = (0..=ORDER).map(|i| &e_prime[i] + if i > 0 { e_prime[i - 1].clone() } else { Rational::zero() }).collect();
        // -Li₂(q,-z)/(1-q) = Σ (-1)^{k+1} z^k / (k (1-q^k))
        let mut exponent = vec![Rational::zero()];
        for k in 1..=ORDER as i32 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            exponent.push(int(sign) / (int(k as i64) * (Rational::one() - q.pow(k))));
        }
        let rhs = exp_series(&exponent);
        let h: Vec<Rational> = (0..=ORDER as u32).map(|i| Rational::one() / q_pochhammer(&q, i)).collect();
        let li2: Vec<Rational> = (0..=ORDER as i32)
            .map(|k| if k == 0 { Rational::zero() } else { &one_minus_q / (int(k as i64) * (Rational::one() - q.pow(k))) })
            .collect();
        let h_literal = exp_series(&li2);
        let h_normalized = exp_series(&li2.iter().map(|c| c / &one_minus_q).collect::<Vec<_>>());

        // the engine reports must carry the same numbers as the oracle
        let reports = dilog_check(&q, ORDER as u32).map_err(|e| e.to_string())?;
        for (report, computed, claimed) in [(&reports[0], &lhs, &rhs), (&reports[1], &h, &h_literal), (&reports[2], &h, &h_normalized)] {
            for k in 0..=ORDER {
                check(report.computed[&(k as i64)] == computed[k] && report.claim.claimed[&(k as i64)] == claimed[k], || {
                    format!("engine report {} disagrees with the oracle at z^{k}", report.claim.source)
                })?;
            }
        }

        let qt = format_rational(&q);
        match (0..=ORDER).find(|&k| lhs[k] != rhs[k]) {
            None => passes.push(format!("E' identity holds through z^8 at q={qt}")),
            Some(k) => failures.push(format!("E' identity fails at z^{k}, q={qt}")),
        }
        match (0..=ORDER).find(|&k| h[k] != h_literal[k]) {
            None => passes.push(format!("H identity holds at q={qt}")),
            Some(k) => failures.push(format!(
                "H(q,z) = exp(Li2(q,z)) fails at z^{k}, q={qt}: [z^{k}] H = {}, [z^{k}] exp(Li2) = {}",
                format_rational(&h[k]),
                format_rational(&h_literal[k])
            )),
        }
        check(h == h_normalized, || format!("exp(Li2/(1-q)) also differs from H at q={qt}"))?;
    }
    if failures.is_empty() {
        Ok(passes.join("; "))
    } else {
        Err(format!(
            "{}; {}. With Li2 = (1-q) sum z^k/(k(1-q^k)), log H = Li2/(1-q), so H = exp(Li2(q,z)/(1-q)) holds exactly instead",
            passes.join("; "),
            failures.join("; ")
        ))
    }
}

fn c13_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qhurwitz");
    let commands: &[&[&str]] = &[
        &["partitions", "--n", "6"],
        &["character", "--n", "5"],
        &["character", "--lambda", "3,1", "--mu", "2,2"],
        &["hurwitz", "--profiles", "2,1,1;2,1,1;3,1;3,1"],
        &["weight", "--model", "e", "--lambda", "2,1", "--q", "1/3"],
        &["weight", "--model", "h", "--lambda", "2,1,1", "--var", "eps", "--order", "2"],
        &["partition-function", "--model", "eprime", "--d", "3", "--q", "1/2", "--n", "6"],
        &["partition-function", "--model", "e", "--d", "3", "--var", "q", "--order", "12"],
        &["measure", "--model", "eprime", "--d", "3", "--q", "1/2"],
        &["measure", "--model", "h", "--d", "2", "--q", "1/3", "--n", "4"],
        &["weighted-hurwitz", "--model", "eprime", "--q", "1/2", "--d", "3", "--mu", "2,2,1", "--nu", "3,2"],
        &["weighted-hurwitz", "--model", "e", "--d", "2", "--mu", "2,1,1", "--nu", "2,2", "--var", "eps", "--order", "1"],
        &["verify", "--claim", "all"],
        &["verify", "--claim", "hurwitz-semiclassical", "--model", "h", "--d", "2", "--mu", "2,2", "--nu", "3,1", "--format", "csv"],
        &["tau", "--model", "eprime", "--q", "1/3", "--n", "4", "--d", "3"],
        &["tau", "--model", "exp", "--n", "4", "--d", "3", "--format", "text"],
        &["dilog-check", "--q", "1/2", "--order", "8"],
    ];
    let run = |args: &[&str], jobs: &str| -> Result<(Vec<u8>, Option<i32>), String> {
        let out = Command::new(bin).args(args).args(["--jobs", jobs]).output().map_err(|e| e.to_string())?;
        Ok((out.stdout, out.status.code()))
    };
    for args in commands {
        let first = run(args, "1")?;
        check(first.1 == Some(0), || format!("{args:?} exited with {:?}", first.1))?;
        check(!first.0.is_empty(), || format!("{args:?} printed nothing"))?;
        for jobs in ["1", "4", "4"] {
            let again = run(args, jobs)?;
            check(again == first, || format!("{args:?} differs between runs (--jobs 1 vs --jobs {jobs})"))?;
        }
    }
    Ok(format!("{} commands byte-identical over repeated runs with --jobs 1 and --jobs 4", commands.len()))
}

// ---------------------------------------------------------------------------

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "character correctness", limit: Some(TIME_CHARACTERS), run: c1_characters },
        Criterion { id: 2, name: "Hurwitz numbers vs brute force", limit: Some(TIME_HURWITZ), run: c2_hurwitz },
        Criterion { id: 3, name: "partition function and xi independent of n", limit: None, run: c3_n_independence },
        Criterion { id: 4, name: "desk values of the E' partition function", limit: None, run: c4_desk_values },
        Criterion { id: 5, name: "semiclassical leading order", limit: None, run: c5_semiclassical_leading },
        Criterion { id: 6, name: "semiclassical first order of the partition function", limit: None, run: c6_pf_first_order },
        Criterion { id: 7, name: "column and hook expansions of Phi", limit: None, run: c7_phi_expansions },
        Criterion { id: 8, name: "zero-temperature partition function", limit: Some(TIME_ZERO_TEMP), run: c8_zero_temperature },
        Criterion { id: 9, name: "zero-temperature weighted Hurwitz numbers", limit: None, run: c9_zero_temp_hurwitz },
        Criterion { id: 10, name: "tau-function identity", limit: Some(TIME_TAU), run: c10_tau },
        Criterion { id: 11, name: "classical limit", limit: None, run: c11_classical_limit },
        Criterion { id: 12, name: "quantum dilogarithm identities", limit: None, run: c12_dilog },
        Criterion { id: 13, name: "CLI determinism", limit: None, run: c13_determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("runtime {:.1}s exceeds {}s", elapsed.as_secs_f64(), limit.as_secs())),
            (r, _) => r,
        };
        let limit = c.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        match result {
            Ok(detail) => println!("PASS  {:>2}. {} ({:.2}s{limit}): {detail}", c.id, c.name, elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {} ({:.2}s{limit}): {detail}", c.id, c.name, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
