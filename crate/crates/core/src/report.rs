//! Claimed-versus-computed coefficient reports.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::series::{format_rational, Rational, Var};

/// A claimed truncated expansion, instantiated for concrete inputs.
///
/// `claimed` holds coefficients of the *scaled* quantity: for `variable = eps`
/// the quantity is multiplied by `eps^scale_power`, for `q` by
/// `q^{-scale_power}`, so claimed degrees start at zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionClaim {
    pub source: String,
    pub instance: String,
    pub variable: Var,
    pub scale_power: i64,
    pub claimed: BTreeMap<i64, Rational>,
    pub validity: String,
}

impl ExpansionClaim {
    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source,
            "instance": self.instance,
            "variable": self.variable.name(),
            "scale_power": self.scale_power,
            "claimed": coefficient_map_json(&self.claimed),
            "validity": self.validity,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderStatus {
    pub degree: i64,
    pub claimed: Rational,
    pub computed: Rational,
}

impl OrderStatus {
    pub fn ok(&self) -> bool {
        self.claimed == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: ExpansionClaim,
    pub computed: BTreeMap<i64, Rational>,
    pub status: Vec<OrderStatus>,
    pub notes: String,
    /// Set when the instance lies outside the claim's stated hypotheses.
    pub informational: bool,
}

impl VerificationReport {
    /// Compares every claimed degree against `computed`.
    ///
    /// Panics if a claimed degree was not computed; callers size their
    /// series so that this cannot happen.
    pub fn compare(claim: ExpansionClaim, computed: BTreeMap<i64, Rational>, notes: impl Into<String>) -> Self {
        let status = claim
            .claimed
            .iter()
            .map(|(&degree, c)| OrderStatus {
                degree,
                claimed: c.clone(),
                computed: computed
                    .get(&degree)
                    .unwrap_or_else(|| panic!("degree {degree} of {} was not computed", claim.source))
                    .clone(),
            })
            .collect();
        Self { claim, computed, status, notes: notes.into(), informational: false }
    }

    pub fn informational(mut self, yes: bool) -> Self {
        self.informational = yes;
        self
    }

    pub fn all_match(&self) -> bool {
        self.status.iter().all(OrderStatus::ok)
    }

    pub fn first_mismatch(&self) -> Option<&OrderStatus> {
        self.status.iter().find(|s| !s.ok())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim.to_json(),
            "computed": coefficient_map_json(&self.computed),
            "status": self.status.iter().map(|s| json!({
                "degree": s.degree,
                "ok": s.ok(),
                "claimed": format_rational(&s.claimed),
                "computed": format_rational(&s.computed),
            })).collect::<Vec<_>>(),
            "notes": self.notes,
            "informational": self.informational,
        })
    }
}

pub(crate) fn coefficient_map_json(m: &BTreeMap<i64, Rational>) -> Value {
    // Keys are degrees; BTreeMap iteration keeps them numerically ordered.
    let mut out = Map::new();
    for (k, v) in m {
        out.insert(k.to_string(), Value::String(format_rational(v)));
    }
    Value::Object(out)
}
