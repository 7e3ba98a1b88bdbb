//! Exact rationals and truncated Laurent series in one formal variable.
//!
//! A [`LaurentSeries`] stores every coefficient from its minimal degree up to
//! (but excluding) its `valid_order` `T`; the series is known to be exact
//! modulo `O(x^T)`. Arithmetic propagates `T` so that no operation ever
//! reports a coefficient it cannot vouch for.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Deepest principal part any series may carry.
pub const MIN_DEGREE_LIMIT: i64 = -4096;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().parse::<BigInt>().map_or(false, |d| d.is_zero()) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
    }
    Rational::from_str(s).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// `"num/den"`, or `"num"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Checks `0 < q < 1`.
pub fn check_q(q: &Rational) -> Result<()> {
    if q.is_positive() && q < &Rational::one() {
        Ok(())
    } else {
        Err(Error::QOutOfRange(format_rational(q)))
    }
}

pub fn pow(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Formal variable tag of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    Eps,
    Beta,
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Eps => "eps",
            Var::Beta => "beta",
            Var::Z => "z",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Var::Q),
            "eps" => Ok(Var::Eps),
            "beta" => Ok(Var::Beta),
            "z" => Ok(Var::Z),
            other => Err(Error::Parse(format!("unknown series variable {other:?}"))),
        }
    }
}

/// Truncated Laurent series `Σ_{k ≥ min_degree} c_k x^k + O(x^valid_order)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    var: Var,
    min_degree: i64,
    coeffs: Vec<Rational>,
    valid_order: i64,
}

impl LaurentSeries {
    /// Builds a series from coefficients starting at `min_degree`.
    ///
    /// Coefficients at or beyond `valid_order` are dropped, missing ones below
    /// it are zero, and leading zeros are stripped.
    pub fn new(var: Var, min_degree: i64, coeffs: Vec<Rational>, valid_order: i64) -> Result<Self> {
        let mut s = Self { var, min_degree, coeffs, valid_order };
        s.normalize();
        s.check_depth()?;
        Ok(s)
    }

    pub fn zero(var: Var, valid_order: i64) -> Self {
        Self { var, min_degree: valid_order, coeffs: Vec::new(), valid_order }
    }

    pub fn one(var: Var, valid_order: i64) -> Self {
        Self::constant(var, Rational::one(), valid_order)
    }

    pub fn constant(var: Var, c: Rational, valid_order: i64) -> Self {
        Self::monomial(var, c, 0, valid_order)
    }

    /// `c·x^degree + O(x^valid_order)`.
    pub fn monomial(var: Var, c: Rational, degree: i64, valid_order: i64) -> Self {
        let mut s = Self { var, min_degree: degree, coeffs: vec![c], valid_order };
        s.normalize();
        s
    }

    /// An exact polynomial `Σ c_k x^k`, reported up to `valid_order`.
    pub fn polynomial(var: Var, coeffs: &[Rational], valid_order: i64) -> Self {
        let mut s = Self { var, min_degree: 0, coeffs: coeffs.to_vec(), valid_order };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let known = (self.valid_order - self.min_degree).max(0) as usize;
        self.coeffs.truncate(known);
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.min_degree = self.valid_order;
            }
            Some(i) => {
                self.coeffs.drain(..i);
                self.min_degree += i as i64;
                let known = (self.valid_order - self.min_degree) as usize;
                self.coeffs.resize(known, Rational::zero());
            }
        }
    }

    fn check_depth(&self) -> Result<()> {
        if self.min_degree < MIN_DEGREE_LIMIT {
            Err(Error::PrincipalPartTooDeep { degree: self.min_degree, limit: MIN_DEGREE_LIMIT })
        } else {
            Ok(())
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Degree of the leading nonzero coefficient; equals `valid_order` for a
    /// series that vanishes on its valid range.
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn valid_order(&self) -> i64 {
        self.valid_order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^degree`, or `None` beyond the valid range.
    pub fn try_coeff(&self, degree: i64) -> Option<Rational> {
        if degree >= self.valid_order {
            None
        } else if degree < self.min_degree {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(degree - self.min_degree) as usize].clone())
        }
    }

    /// Coefficient of `x^degree`.
    ///
    /// Panics when `degree` is at or beyond the valid order; asking for an
    /// unknown coefficient is a bug in the caller.
    pub fn coeff(&self, degree: i64) -> Rational {
        self.try_coeff(degree).unwrap_or_else(|| {
            panic!(
                "coefficient of {}^{degree} requested beyond valid order {}",
                self.var, self.valid_order
            )
        })
    }

    /// `(degree, coefficient)` for every known degree from `min_degree` on.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        let base = self.min_degree;
        self.coeffs.iter().enumerate().map(move |(i, c)| (base + i as i64, c))
    }

    /// Forgets everything from degree `order` on.
    pub fn truncate(&self, order: i64) -> Self {
        let mut s = self.clone();
        s.valid_order = s.valid_order.min(order);
        s.normalize();
        s
    }

    fn same_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let valid = self.valid_order.min(other.valid_order);
        let lo = self.min_degree.min(other.min_degree).min(valid);
        let coeffs = (lo..valid)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        Self::new(self.var, lo, coeffs, valid)
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().for_each(|c| *c = -c.clone());
        s
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().for_each(|x| *x *= c);
        s.normalize();
        s
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Result<Self> {
        let s = Self {
            var: self.var,
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
            valid_order: self.valid_order + k,
        };
        s.check_depth()?;
        Ok(s)
    }

    /// Product; valid to `min(T_a + m_b, T_b + m_a)` where `m` is the leading degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let valid = (self.valid_order + other.min_degree).min(other.valid_order + self.min_degree);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var, valid));
        }
        let lo = self.min_degree + other.min_degree;
        let len = (valid - lo).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::new(self.var, lo, coeffs, valid)
    }

    /// Multiplicative inverse.
    ///
    /// For `a = c·x^m + …` valid to `T`, the inverse starts with `c⁻¹·x^{-m}`
    /// and is valid to `T - 2m`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let m = self.min_degree;
        let len = self.coeffs.len();
        let lead_inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let u = &self.coeffs[i];
                if !u.is_zero() {
                    acc += u * &out[k - i];
                }
            }
            out.push(-(acc * &lead_inv));
        }
        Self::new(self.var, -m, out, self.valid_order - 2 * m)
    }

    /// Formal exponential of a series with no constant or negative-degree terms.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_zero() && self.min_degree < 1 {
            return Err(Error::ExpDomain);
        }
        let valid = self.valid_order;
        if valid <= 0 {
            return Ok(Self::zero(self.var, valid));
        }
        let n = valid as usize;
        let a: Vec<Rational> = (0..valid).map(|k| self.coeff(k)).collect();
        // e' = a' e  ⇒  k e_k = Σ_{j=1}^{k} j a_j e_{k-j}
        let mut e: Vec<Rational> = Vec::with_capacity(n);
        e.push(Rational::one());
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !a[j].is_zero() {
                    acc += &a[j] * int(j as i64) * &e[k - j];
                }
            }
            e.push(acc / int(k as i64));
        }
        Self::new(self.var, 0, e, valid)
    }

    /// Nonnegative integer power.
    ///
    /// `a^0` is reported to the relative precision of `a`.
    pub fn powi(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one(self.var, (self.valid_order - self.min_degree).max(0)));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Sum of the known terms at `x = value`: the exact truncation, not the limit.
    pub fn eval_truncated(&self, value: &Rational) -> Rational {
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c * pow(value, k))
            .sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "var": self.var.name(),
            "min_degree": self.min_degree,
            "coeffs": self.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
            "valid_order": self.valid_order,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("series JSON: missing or invalid {what}"));
        let var: Var = v.get("var").and_then(Value::as_str).ok_or_else(|| bad("var"))?.parse()?;
        let min_degree = v.get("min_degree").and_then(Value::as_i64).ok_or_else(|| bad("min_degree"))?;
        let valid_order = v.get("valid_order").and_then(Value::as_i64).ok_or_else(|| bad("valid_order"))?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("coeffs"))?
            .iter()
            .map(|c| c.as_str().ok_or_else(|| bad("coefficient")).and_then(parse_rational))
            .collect::<Result<Vec<_>>>()?;
        Self::new(var, min_degree, coeffs, valid_order)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O({}^{})", self.var, self.valid_order)
    }
}

/// Second operand of [`series_arith`].
#[derive(Clone, Debug)]
pub enum Operand {
    Series(LaurentSeries),
    Scalar(Rational),
    Shift(i64),
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Scale,
    Shift,
    Inv,
}

/// Dispatches one of the elementary series operations.
pub fn series_arith(a: &LaurentSeries, b: &Operand, op: SeriesOp) -> Result<LaurentSeries> {
    match (op, b) {
        (SeriesOp::Add, Operand::Series(b)) => a.add(b),
        (SeriesOp::Add, Operand::Scalar(c)) => {
            a.add(&LaurentSeries::constant(a.var(), c.clone(), a.valid_order()))
        }
        (SeriesOp::Mul, Operand::Series(b)) => a.mul(b),
        (SeriesOp::Mul | SeriesOp::Scale, Operand::Scalar(c)) => Ok(a.scale(c)),
        (SeriesOp::Shift, Operand::Shift(k)) => a.shift(*k),
        (SeriesOp::Inv, _) => a.inv(),
        (op, b) => Err(Error::InvalidArgument(format!("operand {b:?} does not fit {op:?}"))),
    }
}

/// `exp(a)` truncated at the valid order of `a`.
pub fn exp_series(a: &LaurentSeries) -> Result<LaurentSeries> {
    a.exp()
}

/// `e^{s·x}` as a power series in `var`, valid to `order`.
pub fn exp_linear(var: Var, s: &Rational, order: i64) -> LaurentSeries {
    let mut coeffs = Vec::new();
    let mut term = Rational::one();
    for k in 0..order.max(0) {
        if k > 0 {
            term = term * s / int(k);
        }
        coeffs.push(term.clone());
    }
    LaurentSeries::polynomial(var, &coeffs, order)
}

/// Laurent expansion of `1/(e^{sε} - 1)`, exact through degree `order - 1`.
pub fn bose_factor(s: i64, order: i64) -> Result<LaurentSeries> {
    if s <= 0 {
        return Err(Error::InvalidArgument(format!("Bose factor needs s >= 1, got {s}")));
    }
    let denominator = exp_linear(Var::Eps, &int(s), order + 2)
        .sub(&LaurentSeries::one(Var::Eps, order + 2))?;
    let inv = denominator.inv()?;
    Ok(inv.truncate(order))
}

/// `1/(1 - e^{-sε})`, exact through degree `order - 1`.
pub fn inverse_one_minus_exp(s: i64, order: i64) -> Result<LaurentSeries> {
    if s <= 0 {
        return Err(Error::InvalidArgument(format!("need s >= 1, got {s}")));
    }
    let denominator = LaurentSeries::one(Var::Eps, order + 2).sub(&exp_linear(Var::Eps, &int(-s), order + 2))?;
    Ok(denominator.inv()?.truncate(order))
}

/// `q^a/(1 - q^a) = Σ_{m ≥ 1} q^{ma}`, valid to `order`.
pub fn geometric_q(a: i64, order: i64) -> Result<LaurentSeries> {
    if a <= 0 {
        return Err(Error::InvalidArgument(format!("geometric series needs a >= 1, got {a}")));
    }
    let len = order.max(0) as usize;
    let mut coeffs = vec![Rational::zero(); len];
    let mut k = a;
    while k < order {
        coeffs[k as usize] = Rational::one();
        k += a;
    }
    Ok(LaurentSeries::polynomial(Var::Q, &coeffs, order))
}

/// `1/(1 - q^a)`, valid to `order`.
pub fn inverse_one_minus_q(a: i64, order: i64) -> Result<LaurentSeries> {
    geometric_q(a, order)?.add(&LaurentSeries::one(Var::Q, order))
}
