//! Batch job runner behind the `verma` binary.
//!
//! A job names a command, an algebra and a weight; [`run`] returns a JSON
//! document and an exit status (0 computed, 1 usage error, 2 verification
//! failure). [`render_table`] turns such a document into aligned text.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::criteria::{
    decide_dense, decide_discrete, decide_z, filtration_probe, filtration_samples, n_probe_samples,
    submodule_n_probe, transport_weight, CriteriaError,
};
use crate::exact::Scalar;
use crate::grading::{GroupElement, GroupSpec, GroupSpecJson, OrderClass};
use crate::liealg::{verify_iso, verify_jacobi, AlgebraSpec, LambdaMode, LieError};
use crate::shapovalov::{DetMode, FormError, Shapovalov};
use crate::verma::{GeneralModule, ModuleVector, Slot, Weight, ZMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Gram,
    Det,
    Factor,
    Irreducible,
    Radical,
    VerifyJacobi,
    VerifyIso,
    #[serde(rename = "probe-N", alias = "probe-n")]
    ProbeN,
    Transport,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gram => "gram",
            Command::Det => "det",
            Command::Factor => "factor",
            Command::Irreducible => "irreducible",
            Command::Radical => "radical",
            Command::VerifyJacobi => "verify-jacobi",
            Command::VerifyIso => "verify-iso",
            Command::ProbeN => "probe-N",
            Command::Transport => "transport",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub lambda: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpecJson>,
}

/// `"symbolic"` or a map from slot names (`L0`, `I0`, `CL`, `CLI1`, …) to
/// scalar strings; unlisted slots stay symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    Keyword(String),
    Values(BTreeMap<String, String>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default)]
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    pub algebra: AlgebraJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<WeightJson>,
    #[serde(default)]
    pub params: Params,
}

const MAX_GRADE: u32 = 8;
const MAX_WINDOW: i64 = 6;

/// A rejected job: the offending field and why.
#[derive(Debug)]
struct Usage {
    field: String,
    message: String,
}

fn usage(field: &str, message: impl ToString) -> Usage {
    Usage {
        field: field.to_owned(),
        message: message.to_string(),
    }
}

enum Outcome {
    Done(Value),
    Failed(Value),
}

/// Runs a job given as JSON text.
pub fn run_json(text: &str) -> (Value, i32) {
    match serde_json::from_str::<JobSpec>(text) {
        Ok(job) => run(&job),
        Err(e) => (
            json!({"error": format!("malformed job: {e}"), "field": "job"}),
            1,
        ),
    }
}

/// Runs one job. The output is deterministic for a given job.
pub fn run(job: &JobSpec) -> (Value, i32) {
    match execute(job) {
        Ok(Outcome::Done(v)) => (v, 0),
        Ok(Outcome::Failed(v)) => (v, 2),
        Err(u) => (
            json!({"command": job.command.name(), "error": u.message, "field": u.field}),
            1,
        ),
    }
}

fn build_algebra(a: &AlgebraJson) -> Result<AlgebraSpec, Usage> {
    let lambda = LambdaMode::parse(&a.lambda).map_err(|e| usage("algebra.lambda", e))?;
    let group = match &a.group {
        None => GroupSpec::integers(),
        Some(g) => GroupSpec::from_json(g).map_err(|e| usage("algebra.group", e))?,
    };
    AlgebraSpec::new(group, lambda).map_err(|e| usage("algebra.lambda", e))
}

fn build_weight(spec: &AlgebraSpec, w: Option<&WeightJson>) -> Result<Weight, Usage> {
    let mut weight = Weight::symbolic(spec);
    match w {
        None => {}
        Some(WeightJson::Keyword(k)) if k == "symbolic" => {}
        Some(WeightJson::Keyword(k)) => {
            return Err(usage(
                "weight",
                format!("expected \"symbolic\" or a map, got `{k}`"),
            ))
        }
        Some(WeightJson::Values(map)) => {
            for (name, text) in map {
                let field = format!("weight.{name}");
                let slot = Slot::parse(name).ok_or_else(|| usage(&field, "unknown weight slot"))?;
                let value = if text == "symbolic" {
                    Scalar::var(&slot.symbol())
                } else {
                    text.parse::<Scalar>().map_err(|e| usage(&field, e))?
                };
                let tag = value.field_tag();
                if tag.is_some() && spec.group().field_tag().is_some_and(|g| Some(g) != tag) {
                    return Err(usage(
                        &field,
                        "value lies in a different quadratic field than the group",
                    ));
                }
                weight = weight.with(slot, value);
            }
            let tags: std::collections::BTreeSet<u64> = weight
                .values()
                .values()
                .filter_map(Scalar::field_tag)
                .collect();
            if tags.len() > 1 {
                return Err(usage("weight", "values lie in different quadratic fields"));
            }
        }
    }
    Weight::new(spec, weight.values().clone()).map_err(|e| usage("weight", e))
}

fn grade(p: &Params) -> Result<u32, Usage> {
    let n = p
        .grade
        .ok_or_else(|| usage("params.grade", "this command needs a grade"))?;
    if n > MAX_GRADE {
        return Err(usage(
            "params.grade",
            format!("grade is limited to {MAX_GRADE}"),
        ));
    }
    Ok(n)
}

fn window(p: &Params, spec: &AlgebraSpec) -> Result<i64, Usage> {
    let default = if spec.group().rank() == 1 { 4 } else { 1 };
    let w = p.window.unwrap_or(default);
    if !(0..=MAX_WINDOW).contains(&w) {
        return Err(usage(
            "params.window",
            format!("window must lie in 0..={MAX_WINDOW}"),
        ));
    }
    Ok(w)
}

fn discrete_eps(spec: &AlgebraSpec) -> Result<Option<GroupElement>, Usage> {
    match spec
        .group()
        .classify()
        .map_err(|e| usage("algebra.group", e))?
    {
        OrderClass::Dense => Ok(None),
        OrderClass::Discrete(e) => Ok(Some(e)),
    }
}

/// The rank-one data for commands that work on `M̄(φ)`: the algebra itself
/// over `Z`, or the transported weight for another discrete order.
fn rank_one_form(spec: &AlgebraSpec, weight: &Weight) -> Result<Shapovalov, Usage> {
    let (source, phi) = if spec.group().is_integers() {
        (spec.clone(), weight.clone())
    } else {
        let eps = discrete_eps(spec)?.ok_or_else(|| {
            usage(
                "algebra.group",
                "this command needs a discrete order; the given order is dense",
            )
        })?;
        transport_weight(spec, weight, &eps).map_err(|e| usage("algebra.group", e))?
    };
    Shapovalov::new(source, phi).map_err(|e| usage("weight", e))
}

fn form_error(e: FormError) -> Usage {
    match e {
        FormError::NotNumeric => usage(
            "weight",
            "this command needs a fully numeric weight and exact λ",
        ),
        FormError::NotSymbolic(s) => usage(
            &format!("weight.{s}"),
            format!("factorization needs {s} symbolic"),
        ),
        FormError::TooLarge(_) => usage("params.mode", e),
        other => usage("job", other),
    }
}

fn criteria_error(e: CriteriaError) -> Usage {
    match e {
        CriteriaError::NeedsNumeric => usage("weight", e),
        CriteriaError::NotInN => usage("weight", e),
        other => usage("algebra.group", other),
    }
}

fn vector_json(v: &ModuleVector<ZMonomial>) -> Value {
    Value::Array(
        v.to_json()
            .into_iter()
            .map(|(c, m)| json!([c, m]))
            .collect(),
    )
}

fn base_doc(job: &JobSpec, spec: &AlgebraSpec) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(job.command.name()));
    m.insert("lambda".into(), json!(spec.lambda().to_string()));
    m
}

fn execute(job: &JobSpec) -> Result<Outcome, Usage> {
    let spec = build_algebra(&job.algebra)?;
    let weight = build_weight(&spec, job.weight.as_ref())?;
    let p = &job.params;
    let mode = match &p.mode {
        None => DetMode::Triangular,
        Some(m) => m.parse::<DetMode>().map_err(|e| usage("params.mode", e))?,
    };
    let mut doc = base_doc(job, &spec);
    let ok = match job.command {
        Command::Gram => {
            let n = grade(p)?;
            let form = rank_one_form(&spec, &weight)?;
            let g = form.gram(n).map_err(form_error)?;
            doc.insert("grade".into(), json!(n));
            doc.insert("dim".into(), json!(g.dim()));
            doc.insert(
                "basis".into(),
                json!(g.basis.iter().map(|b| b.to_string()).collect::<Vec<_>>()),
            );
            let rows: Vec<Vec<String>> = g
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect();
            doc.insert("matrix".into(), json!(rows));
            true
        }
        Command::Det => {
            let n = grade(p)?;
            if mode == DetMode::Brute && n > 4 {
                return Err(usage(
                    "params.mode",
                    "brute-force determinants are limited to grade 4",
                ));
            }
            let form = rank_one_form(&spec, &weight)?;
            let d = form.det(n, mode).map_err(form_error)?;
            doc.insert("grade".into(), json!(n));
            doc.insert("dim".into(), json!(crate::verma::grade_basis(n).len()));
            doc.insert("mode".into(), json!(mode));
            doc.insert("det".into(), json!(d.to_string()));
            true
        }
        Command::Factor => {
            let n = grade(p)?;
            let form = rank_one_form(&spec, &weight)?;
            let r = form.factorize(n).map_err(form_error)?;
            doc.insert("grade".into(), json!(n));
            doc.insert("dim".into(), json!(crate::verma::grade_basis(n).len()));
            doc.insert("det".into(), json!(r.det.to_string()));
            let factors: Map<String, Value> = r
                .exponents
                .iter()
                .map(|(k, e)| (format!("f({k})"), json!(e)))
                .collect();
            doc.insert("factors".into(), Value::Object(factors));
            doc.insert("separable".into(), json!(r.separable()));
            if let Some((f, e)) = &r.collinear {
                doc.insert(
                    "collinear".into(),
                    json!({"factor": f.to_string(), "exponent": e}),
                );
            }
            doc.insert(
                "constant".into(),
                r.constant
                    .as_ref()
                    .map_or(Value::Null, |c| json!(c.to_string())),
            );
            doc.insert("residual".into(), json!(r.residual.to_string()));
            r.succeeded()
        }
        Command::Radical => {
            let n = grade(p)?;
            let form = rank_one_form(&spec, &weight)?;
            let basis = form.radical_basis(n).map_err(form_error)?;
            doc.insert("grade".into(), json!(n));
            doc.insert("dim".into(), json!(crate::verma::grade_basis(n).len()));
            doc.insert(
                "radical".into(),
                Value::Array(basis.iter().map(vector_json).collect()),
            );
            true
        }
        Command::Irreducible => {
            let bound = p.bound.unwrap_or(10);
            let result = if spec.group().is_integers() {
                doc.insert("order".into(), json!("discrete"));
                decide_z(&spec, &weight, bound)
            } else if discrete_eps(&spec)?.is_some() {
                doc.insert("order".into(), json!("discrete"));
                decide_discrete(&spec, &weight, bound)
            } else {
                doc.insert("order".into(), json!("dense"));
                decide_dense(&spec, &weight, p.strict)
            }
            .map_err(criteria_error)?;
            let v = serde_json::to_value(&result).expect("serializable");
            if let Value::Object(m) = v {
                doc.extend(m);
            }
            true
        }
        Command::VerifyJacobi => {
            let w = window(p, &spec)?;
            let r = verify_jacobi(&spec, w);
            doc.insert("window".into(), json!(w));
            doc.insert("pairs_checked".into(), json!(r.pairs_checked));
            doc.insert("triples_checked".into(), json!(r.triples_checked));
            doc.insert("passed".into(), json!(r.passed()));
            if let Some(v) = &r.violation {
                doc.insert(
                    "violation".into(),
                    json!({
                        "kind": format!("{:?}", v.kind).to_lowercase(),
                        "generators": v.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "residual": v.residual.to_string(),
                    }),
                );
            }
            r.passed()
        }
        Command::VerifyIso => {
            let w = window(p, &spec)?;
            let eps = discrete_eps(&spec)?
                .ok_or_else(|| usage("algebra.group", "the embedding needs a discrete order"))?;
            let source = AlgebraSpec::rank_one(spec.lambda().clone())
                .map_err(|e| usage("algebra.lambda", e))?;
            let r = verify_iso(&source, &spec, &eps, w)
                .map_err(|e: LieError| usage("algebra.group", e))?;
            doc.insert("eps".into(), json!(eps.to_string()));
            doc.insert(
                "eps_value".into(),
                json!(spec.group().value(&eps).to_string()),
            );
            doc.insert("window".into(), json!(w));
            doc.insert("pairs_checked".into(), json!(r.pairs_checked));
            doc.insert("passed".into(), json!(r.failure.is_none()));
            if let Some((x, y)) = &r.failure {
                doc.insert("failure".into(), json!([x.to_string(), y.to_string()]));
            }
            r.failure.is_none()
        }
        Command::ProbeN => {
            if discrete_eps(&spec)?.is_some() {
                return Err(usage("algebra.group", "probe-N needs a dense order"));
            }
            let samples = p.samples.unwrap_or(200);
            let seed = p.seed.unwrap_or(0);
            let module =
                GeneralModule::new(spec.clone(), weight.clone()).map_err(|e| usage("weight", e))?;
            let n = submodule_n_probe(&module, &n_probe_samples(spec.group(), samples, seed))
                .map_err(criteria_error)?;
            let f = filtration_probe(&module, &filtration_samples(spec.group(), samples, seed))
                .map_err(criteria_error)?;
            doc.insert("samples".into(), json!(samples));
            doc.insert("seed".into(), json!(seed));
            doc.insert("n_probes".into(), json!(n.probes));
            doc.insert("n_escapes".into(), json!(n.escapes));
            doc.insert("filtration_probes".into(), json!(f.probes));
            doc.insert("filtration_escapes".into(), json!(f.escapes));
            let passed = n.passed() && f.passed();
            doc.insert("passed".into(), json!(passed));
            passed
        }
        Command::Transport => {
            let eps = discrete_eps(&spec)?
                .ok_or_else(|| usage("algebra.group", "transport needs a discrete order"))?;
            let (_, phi) = transport_weight(&spec, &weight, &eps).map_err(criteria_error)?;
            doc.insert("eps".into(), json!(eps.to_string()));
            doc.insert(
                "eps_value".into(),
                json!(spec.group().value(&eps).to_string()),
            );
            doc.insert("weight".into(), json!(phi.to_json()));
            true
        }
    };
    let v = Value::Object(doc);
    Ok(if ok {
        Outcome::Done(v)
    } else {
        Outcome::Failed(v)
    })
}

fn text_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn render_vector(v: &Value) -> String {
    let terms: Vec<String> = v
        .as_array()
        .map(|ts| {
            ts.iter()
                .map(|t| {
                    let c = text_of(&t[0]);
                    let m = text_of(&t[1]);
                    if c == "1" {
                        m
                    } else {
                        format!("({c}) {m}")
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    terms.join(" + ")
}

fn render_matrix(rows: &[Value]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .map(|c| c.iter().map(text_of).collect())
                .unwrap_or_default()
        })
        .collect();
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:>w$}", w = widths[j]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Plain-text rendering of a [`run`] document.
pub fn render_table(doc: &Value) -> String {
    let Some(obj) = doc.as_object() else {
        return format!("{doc}\n");
    };
    if let Some(err) = obj.get("error") {
        return format!(
            "error: {} ({})\n",
            text_of(err),
            obj.get("field").map(text_of).unwrap_or_default()
        );
    }
    let command = obj.get("command").and_then(Value::as_str).unwrap_or("");
    let mut out = String::new();
    match command {
        "gram" => out.push_str(&render_matrix(
            obj.get("matrix")
                .and_then(Value::as_array)
                .map_or(&[][..], Vec::as_slice),
        )),
        "factor" => {
            let mut rows: Vec<(u32, String)> = obj
                .get("factors")
                .and_then(Value::as_object)
                .map(|m| {
                    m.iter()
                        .map(|(k, e)| {
                            let idx = k
                                .trim_start_matches("f(")
                                .trim_end_matches(')')
                                .parse()
                                .unwrap_or(0);
                            (idx, format!("{k}: {}", text_of(e)))
                        })
                        .collect()
                })
                .unwrap_or_default();
            rows.sort();
            for (_, r) in rows {
                out.push_str(&r);
                out.push('\n');
            }
            if let Some(c) = obj.get("collinear") {
                out.push_str(&format!(
                    "{}: {} (not separable)\n",
                    text_of(&c["factor"]),
                    text_of(&c["exponent"])
                ));
            }
            out.push_str(&format!(
                "constant: {}\n",
                obj.get("constant").map(text_of).unwrap_or_default()
            ));
            if let Some(r) = obj.get("residual").filter(|r| r.as_str() != Some("0")) {
                out.push_str(&format!("residual: {}\n", text_of(r)));
            }
        }
        "radical" => {
            let vs: Vec<String> = obj
                .get("radical")
                .and_then(Value::as_array)
                .map(|a| a.iter().map(render_vector).collect())
                .unwrap_or_default();
            out.push_str(&format!("radical: {{{}}}\n", vs.join(", ")));
        }
        "irreducible" => {
            out.push_str(&format!(
                "verdict: {}\n",
                obj.get("verdict").map(text_of).unwrap_or_default()
            ));
            if let Some(w) = obj.get("witness").filter(|w| !w.is_null()) {
                out.push_str(&format!("witness: {}\n", text_of(w)));
            }
            for t in obj
                .get("trace")
                .and_then(Value::as_array)
                .into_iter()
                .flatten()
            {
                out.push_str(&format!("k={}: {}\n", text_of(&t[0]), text_of(&t[1])));
            }
            if let Some(d) = obj.get("dense") {
                for (k, v) in d.as_object().into_iter().flatten() {
                    out.push_str(&format!("{k}: {}\n", text_of(v)));
                }
            }
        }
        "transport" => {
            out.push_str(&format!(
                "eps: {} = {}\n",
                text_of(&obj["eps"]),
                text_of(&obj["eps_value"])
            ));
            for (k, v) in obj
                .get("weight")
                .and_then(Value::as_object)
                .into_iter()
                .flatten()
            {
                out.push_str(&format!("{k}: {}\n", text_of(v)));
            }
        }
        _ => {
            for (k, v) in obj {
                if k != "command" && k != "lambda" {
                    out.push_str(&format!("{k}: {}\n", text_of(v)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(text: &str) -> (Value, i32) {
        run_json(text)
    }

    #[test]
    fn det_grade_one() {
        let (v, code) = job(
            r#"{"command":"det","algebra":{"lambda":"1"},"weight":"symbolic","params":{"grade":1}}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(v["det"], "4*hI^2");
    }

    #[test]
    fn irreducible_rank_one() {
        let (v, code) =
            job(r#"{"command":"irreducible","algebra":{"lambda":"2"},"weight":{"I0":"1"}}"#);
        assert_eq!(code, 0);
        assert_eq!(v["verdict"], "Irreducible");
    }

    #[test]
    fn forbidden_lambda_is_a_usage_error() {
        let (v, code) = job(r#"{"command":"verify-jacobi","algebra":{"lambda":"0"}}"#);
        assert_eq!(code, 1);
        assert_eq!(v["field"], "algebra.lambda");
        assert_eq!(
            job(r#"{"command":"gram","algebra":{"lambda":"-1"},"params":{"grade":1}}"#).1,
            1
        );
        assert_eq!(job("{not json").1, 1);
    }

    #[test]
    fn dense_order_rejected_by_rank_one_commands() {
        let (v, code) = job(
            r#"{"command":"gram","algebra":{"lambda":"2","group":{"rank":2,"basis":["1","√2"],"order":"embedding"}},"params":{"grade":1}}"#,
        );
        assert_eq!((code, v["field"].as_str()), (1, Some("algebra.group")));
    }

    #[test]
    fn tables() {
        let (v, _) = job(r#"{"command":"gram","algebra":{"lambda":"1"},"params":{"grade":0}}"#);
        assert_eq!(render_table(&v), "1\n");
        let (v, _) = job(r#"{"command":"factor","algebra":{"lambda":"1"},"params":{"grade":1}}"#);
        assert_eq!(render_table(&v), "f(1): 2\nconstant: 1\n");
        let (v, _) = job(
            r#"{"command":"radical","algebra":{"lambda":"2"},"weight":{"L0":"5","I0":"1","CL":"0"},"params":{"grade":1}}"#,
        );
        assert_eq!(render_table(&v), "radical: {}\n");
    }

    #[test]
    fn bad_weight_names_field() {
        let (v, code) =
            job(r#"{"command":"irreducible","algebra":{"lambda":"2"},"weight":{"Q0":"1"}}"#);
        assert_eq!((code, v["field"].as_str()), (1, Some("weight.Q0")));
        let (v, code) =
            job(r#"{"command":"irreducible","algebra":{"lambda":"2"},"weight":{"I0":"1/0"}}"#);
        assert_eq!((code, v["field"].as_str()), (1, Some("weight.I0")));
    }
}
