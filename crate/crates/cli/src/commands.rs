//! Subcommand execution.

use serde_json::{json, Map, Value};

use quantum_hurwitz::measures::{partition_function, partition_function_series, theta_measure, xi_measure};
use quantum_hurwitz::partitions::stats;
use quantum_hurwitz::tau::tau_coefficients;
use quantum_hurwitz::verify::{verify_all, verify_claim, ClaimOutcome, ClaimParams};
use quantum_hurwitz::weighted::{weighted_hurwitz, weighted_hurwitz_series};
use quantum_hurwitz::weights::{dilog_check, weight, weight_series};
use quantum_hurwitz::{
    character, enumerate_partitions, format_rational, hurwitz, Error, LaurentSeries, Rational, Var,
    VerificationReport, WeightModel,
};

use crate::options::{Command, Options};
use crate::output::Document;

#[derive(Debug)]
pub enum CliError {
    /// A flag is missing or inconsistent with the subcommand.
    Usage(String),
    /// The engine rejected the inputs.
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type Outcome = Result<Document, CliError>;

fn required<'a, T>(value: &'a Option<T>, flag: &str, command: Command) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} requires --{flag}", command.name())))
}

/// `--q`, which quantum models require unless a series is requested.
fn q_for<'a>(opts: &'a Options, model: &WeightModel, command: Command) -> Result<Option<&'a Rational>, CliError> {
    match (&opts.q, model.is_quantum()) {
        (Some(q), _) => Ok(Some(q)),
        (None, false) => Ok(None),
        (None, true) => Err(CliError::Usage(format!(
            "{} with model {model} requires --q (or --var and --order for a series)",
            command.name()
        ))),
    }
}

/// The flags that shape the result, echoed in the document header.
/// Output-only flags (format, jobs, out, strict) are left out so that the
/// document does not depend on them.
pub fn inputs(opts: &Options) -> Map<String, Value> {
    let mut m = Map::new();
    if let Some(v) = &opts.model {
        m.insert("model".into(), json!(v.tag()));
    }
    if let Some(v) = &opts.q {
        m.insert("q".into(), json!(format_rational(v)));
    }
    if let Some(v) = opts.d {
        m.insert("d".into(), json!(v));
    }
    if let Some(v) = opts.n {
        m.insert("n".into(), json!(v));
    }
    for (key, value) in [("mu", &opts.mu), ("nu", &opts.nu), ("lambda", &opts.lambda)] {
        if let Some(v) = value {
            m.insert(key.into(), json!(v.to_string()));
        }
    }
    if let Some(v) = &opts.profiles {
        let text: Vec<String> = v.0.iter().map(ToString::to_string).collect();
        m.insert("profiles".into(), json!(text.join(";")));
    }
    if let Some(v) = opts.var {
        m.insert("var".into(), json!(v.to_string()));
    }
    if let Some(v) = opts.order {
        m.insert("order".into(), json!(v));
    }
    if let Some(v) = &opts.claim {
        m.insert("claim".into(), json!(v));
    }
    m
}

pub fn execute(command: Command, opts: &Options) -> Outcome {
    match command {
        Command::Partitions => partitions(opts),
        Command::Character => characters(opts),
        Command::Hurwitz => pure_hurwitz(opts),
        Command::Weight => weight_cmd(opts),
        Command::PartitionFunction => pf_cmd(opts),
        Command::Measure => measure_cmd(opts),
        Command::WeightedHurwitz => weighted_cmd(opts),
        Command::Verify => verify_cmd(opts),
        Command::Tau => tau_cmd(opts),
        Command::DilogCheck => dilog_cmd(opts),
    }
}

fn partitions(opts: &Options) -> Outcome {
    let n = *required(&opts.n, "n", Command::Partitions)?;
    let mut doc = Document::new(&["partition", "length", "colength", "z_order", "aut_order", "hook_product", "contents"]);
    let mut list = Vec::new();
    for lambda in enumerate_partitions(n, None) {
        let s = stats(&lambda);
        let contents: Vec<String> = s.contents.iter().map(ToString::to_string).collect();
        list.push(json!({
            "partition": lambda.to_string(),
            "length": lambda.len(),
            "colength": s.colength,
            "z_order": s.z_order.to_string(),
            "aut_order": s.aut_order.to_string(),
            "hook_product": s.hook_product.to_string(),
            "contents": s.contents,
        }));
        doc.row(vec![
            lambda.to_string(),
            lambda.len().to_string(),
            s.colength.to_string(),
            s.z_order.to_string(),
            s.aut_order.to_string(),
            s.hook_product.to_string(),
            contents.join(" "),
        ]);
    }
    doc.insert("count", json!(list.len()));
    doc.insert("partitions", Value::Array(list));
    Ok(doc)
}

fn characters(opts: &Options) -> Outcome {
    if let (Some(lambda), Some(mu)) = (&opts.lambda, &opts.mu) {
        return Ok(Document::scalar(character(lambda, mu)?.to_string()));
    }
    let n = opts
        .n
        .ok_or_else(|| CliError::Usage("character requires --lambda and --mu, or --n for the full table".into()))?;
    let classes = enumerate_partitions(n, None);
    let mut header = vec!["lambda".to_string()];
    header.extend(classes.iter().map(ToString::to_string));
    let mut doc = Document::new(&[]);
    doc.header = header;
    let mut rows = Vec::new();
    for lambda in &classes {
        let values = classes
            .iter()
            .map(|mu| character(lambda, mu).map(|c| c.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(json!({ "lambda": lambda.to_string(), "values": values }));
        let mut cells = vec![lambda.to_string()];
        cells.extend(values);
        doc.row(cells);
    }
    doc.insert("classes", json!(classes.iter().map(ToString::to_string).collect::<Vec<_>>()));
    doc.insert("rows", Value::Array(rows));
    Ok(doc)
}

fn pure_hurwitz(opts: &Options) -> Outcome {
    let profiles = &required(&opts.profiles, "profiles", Command::Hurwitz)?.0;
    if let Some(n) = opts.n {
        if let Some(bad) = profiles.iter().find(|p| p.weight() != n) {
            return Err(Error::WeightMismatch { expected: n, found: bad.weight() }.into());
        }
    }
    Ok(Document::scalar(format_rational(&hurwitz(profiles)?)))
}

fn series_doc(series: &LaurentSeries) -> Document {
    let mut doc = Document::new(&["degree", "coefficient"]);
    for (k, c) in series.terms() {
        doc.row(vec![k.to_string(), format_rational(c)]);
    }
    doc.insert("series", series.to_json());
    doc
}

/// `--var` with its `--order`, when a series was requested.
fn series_request(opts: &Options, command: Command) -> Result<Option<(Var, i64)>, CliError> {
    match opts.var {
        None => Ok(None),
        Some(var) => Ok(Some((var, *required(&opts.order, "order", command)?))),
    }
}

fn weight_cmd(opts: &Options) -> Outcome {
    let c = Command::Weight;
    let model = required(&opts.model, "model", c)?;
    let lambda = required(&opts.lambda, "lambda", c)?;
    if let Some((var, order)) = series_request(opts, c)? {
        return Ok(series_doc(&weight_series(model, lambda, var, order)?));
    }
    let q = q_for(opts, model, c)?;
    Ok(Document::scalar(format_rational(&weight(model, lambda, q)?)))
}

fn pf_cmd(opts: &Options) -> Outcome {
    let c = Command::PartitionFunction;
    let model = required(&opts.model, "model", c)?;
    let d = *required(&opts.d, "d", c)?;
    if let Some((var, order)) = series_request(opts, c)? {
        return Ok(series_doc(&partition_function_series(model, d, var, order)?));
    }
    let q = q_for(opts, model, c)?;
    Ok(Document::scalar(format_rational(&partition_function(d, model, q, opts.n)?)))
}

fn measure_cmd(opts: &Options) -> Outcome {
    let c = Command::Measure;
    let model = required(&opts.model, "model", c)?;
    let d = *required(&opts.d, "d", c)?;
    let q = q_for(opts, model, c)?;
    let mut doc = Document::new(&["element", "mass"]);
    let json = match opts.n {
        Some(n) => {
            let m = theta_measure(n, d, model, q)?;
            for (e, mass) in &m.support {
                doc.row(vec![e.to_string(), format_rational(mass)]);
            }
            m.to_json()
        }
        None => {
            let m = xi_measure(d, model, q)?;
            for (e, mass) in &m.support {
                doc.row(vec![e.to_string(), format_rational(mass)]);
            }
            m.to_json()
        }
    };
    doc.insert("measure", json);
    Ok(doc)
}

fn weighted_cmd(opts: &Options) -> Outcome {
    let c = Command::WeightedHurwitz;
    let model = required(&opts.model, "model", c)?;
    let d = *required(&opts.d, "d", c)?;
    let mu = required(&opts.mu, "mu", c)?;
    let nu = required(&opts.nu, "nu", c)?;
    if let Some(n) = opts.n {
        if mu.weight() != n {
            return Err(Error::WeightMismatch { expected: n, found: mu.weight() }.into());
        }
    }
    if let Some((var, order)) = series_request(opts, c)? {
        return Ok(series_doc(&weighted_hurwitz_series(model, d, mu, nu, var, order)?));
    }
    let q = q_for(opts, model, c)?;
    Ok(Document::scalar(format_rational(&weighted_hurwitz(model, d, mu, nu, q)?)))
}

const REPORT_HEADER: &[&str] = &["claim", "instance", "degree", "claimed", "computed", "ok", "informational"];

fn report_rows(doc: &mut Document, r: &VerificationReport) {
    for (k, computed) in &r.computed {
        let claimed = r.claim.claimed.get(k).map(format_rational).unwrap_or_default();
        let ok = match r.claim.claimed.get(k) {
            Some(c) => (c == computed).to_string(),
            None => String::new(),
        };
        doc.row(vec![
            r.claim.source.clone(),
            r.claim.instance.clone(),
            k.to_string(),
            claimed,
            format_rational(computed),
            ok,
            r.informational.to_string(),
        ]);
    }
}

fn outcome_rows(doc: &mut Document, outcome: &ClaimOutcome) {
    match outcome {
        ClaimOutcome::Reports(reports) => reports.iter().for_each(|r| report_rows(doc, r)),
        ClaimOutcome::Dirac(r) => {
            for (i, (q, tv)) in r.distances.iter().enumerate() {
                let ok = i == 0 || *tv < r.distances[i - 1].1;
                doc.row(vec![
                    r.label.clone(),
                    format!("model={} d={} q={}", r.model, r.d, format_rational(q)),
                    i.to_string(),
                    String::new(),
                    format_rational(tv),
                    ok.to_string(),
                    "false".into(),
                ]);
            }
        }
    }
}

fn claim_params(opts: &Options) -> ClaimParams {
    let defaults = ClaimParams::default();
    ClaimParams {
        model: opts.model.clone().unwrap_or(defaults.model),
        d: opts.d.unwrap_or(defaults.d),
        lambda: opts.lambda.clone(),
        mu: opts.mu.clone(),
        nu: opts.nu.clone(),
        n: opts.n,
        q: opts.q.clone(),
        order: opts.order.unwrap_or(defaults.order),
        q_values: Vec::new(),
    }
}

fn verify_cmd(opts: &Options) -> Outcome {
    let label = required(&opts.claim, "claim", Command::Verify)?;
    let mut doc = Document::new(REPORT_HEADER);
    if label == "all" {
        let mut results = Vec::new();
        let mut all = true;
        for (label, _, outcome) in verify_all()? {
            outcome_rows(&mut doc, &outcome);
            all &= outcome.all_match();
            results.push(json!({ "claim": label, "all_match": outcome.all_match(), "outcome": outcome.to_json() }));
        }
        doc.insert("all_match", json!(all));
        doc.insert("results", Value::Array(results));
        doc.verified = all;
        return Ok(doc);
    }
    let outcome = verify_claim(label, &claim_params(opts))?;
    outcome_rows(&mut doc, &outcome);
    doc.verified = outcome.all_match();
    doc.insert("all_match", json!(doc.verified));
    doc.insert("outcome", outcome.to_json());
    Ok(doc)
}

fn tau_cmd(opts: &Options) -> Outcome {
    let c = Command::Tau;
    let model = required(&opts.model, "model", c)?;
    let n = *required(&opts.n, "n", c)?;
    let d = *required(&opts.d, "d", c)?;
    let q = q_for(opts, model, c)?;
    let slice = tau_coefficients(model, q, n, d)?;
    let mut header = vec!["mu".to_string(), "nu".to_string()];
    header.extend((0..=d).map(|k| format!("beta^{k}")));
    let mut doc = Document::new(&[]);
    doc.header = header;
    for (mu, nu, coeffs) in &slice.pairs {
        let mut cells = vec![mu.to_string(), nu.to_string()];
        cells.extend(coeffs.iter().map(format_rational));
        doc.row(cells);
    }
    if let Value::Object(map) = slice.to_json() {
        for (k, v) in map {
            doc.insert(&k, v);
        }
    }
    Ok(doc)
}

fn dilog_cmd(opts: &Options) -> Outcome {
    let q = required(&opts.q, "q", Command::DilogCheck)?;
    let order = opts.order.unwrap_or(8);
    if order < 0 {
        return Err(CliError::Usage("dilog-check requires --order >= 0".into()));
    }
    let reports = dilog_check(q, order as u32)?;
    let mut doc = Document::new(REPORT_HEADER);
    reports.iter().for_each(|r| report_rows(&mut doc, r));
    doc.verified = reports.iter().filter(|r| !r.informational).all(VerificationReport::all_match);
    doc.insert("all_match", json!(doc.verified));
    doc.insert("reports", Value::Array(reports.iter().map(VerificationReport::to_json).collect()));
    Ok(doc)
}
