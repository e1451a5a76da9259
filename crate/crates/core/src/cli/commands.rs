use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use super::{parse_q, CliError, Format, DEFAULT_CEILING};
use crate::algebra::{
    check_graded_independence, element_from_json, element_to_json, verify_linearization,
    verify_power_rule, AlgebraElement, AlgebraError, AlgebraSpec, ModelDesc,
};
use crate::cumulants::{cumulants_from_moments, moments_from_cumulants, CumulantSequence, MomentSequence};
use crate::cyclo::CycloNum;
use crate::io::{value_to_json, values_from_json, values_to_json};
use crate::partitions::{
    bell_number, crossing_number, divisible_orbit_sum, enumerate_divisible,
    enumerate_set_partitions, is_block_aligned, orbit_divisible, partition_type,
    restricted_crossing_number, IntPartition, SetPartition,
};
use crate::series::{graded_r_transform, r0_transform, r1_transform, rnq_transform, FormalSeries};

#[derive(Debug, Args)]
pub struct PartitionsArgs {
    /// Size of the ground set [N].
    #[arg(long = "N")]
    pub ground: usize,
    /// Keep partitions whose block sizes are all multiples of n.
    #[arg(long)]
    pub divisible: Option<usize>,
    /// Keep block-aligned partitions (needs --divisible).
    #[arg(long)]
    pub block_aligned: bool,
    /// Keep partitions of this type, e.g. `4,4`.
    #[arg(long = "type")]
    pub lambda: Option<IntPartition>,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,
}

fn check_size(size: usize, ceiling: usize) -> Result<(), CliError> {
    if size > ceiling {
        return Err(CliError::Usage(format!(
            "ground set of size {size} exceeds the ceiling {ceiling}; raise --ceiling to force"
        )));
    }
    Ok(())
}

pub fn partitions(a: &PartitionsArgs, format: Format) -> Result<String, CliError> {
    check_size(a.ground, a.ceiling)?;
    let family: Box<dyn Iterator<Item = SetPartition>> = match a.divisible {
        Some(0) => return Err(CliError::Usage("--divisible must be positive".into())),
        Some(n) if !a.ground.is_multiple_of(n) => Box::new(std::iter::empty()),
        Some(n) => {
            let m = a.ground / n;
            let aligned = a.block_aligned;
            Box::new(enumerate_divisible(m, n).filter(move |p| !aligned || is_block_aligned(p, m, n)))
        }
        None if a.block_aligned => {
            return Err(CliError::Usage("--block-aligned needs --divisible".into()))
        }
        None => Box::new(enumerate_set_partitions(a.ground)),
    };
    let rows: Vec<SetPartition> = family
        .filter(|p| a.lambda.as_ref().is_none_or(|l| partition_type(p) == *l))
        .collect();
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(&rows).expect("partitions serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["blocks", "type", "c", "c0"]).expect("in-memory write");
            for p in &rows {
                w.write_record([
                    p.to_string(),
                    partition_type(p).to_string(),
                    crossing_number(p).to_string(),
                    restricted_crossing_number(p).to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Pretty => {
            let mut s = String::new();
            let width = rows.iter().map(|p| p.to_string().chars().count()).max().unwrap_or(6).max(6);
            let _ = writeln!(s, "{:<width$}  {:<10} {:>3} {:>3}", "blocks", "type", "c", "c0");
            for p in &rows {
                let b = p.to_string();
                let pad = width - b.chars().count();
                let _ = writeln!(
                    s,
                    "{b}{}  {:<10} {:>3} {:>3}",
                    " ".repeat(pad),
                    partition_type(p).to_string(),
                    crossing_number(p),
                    restricted_crossing_number(p)
                );
            }
            let _ = writeln!(s, "{} partitions", rows.len());
            s
        }
    })
}

#[derive(Debug, Args)]
pub struct SumsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Defaults to `zeta:n:1`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Restrict to blocks of sizes nλ for this λ ⊢ m.
    #[arg(long = "type")]
    pub lambda: Option<IntPartition>,
    /// List every orbit of the Z_n action with its partial sum.
    #[arg(long)]
    pub per_orbit: bool,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,
}

pub fn sums(a: &SumsArgs, format: Format) -> Result<(String, i32), CliError> {
    let (n, m) = (a.n, a.m);
    if n < 2 || m < 1 {
        return Err(CliError::Usage("need --n ≥ 2 and --m ≥ 1".into()));
    }
    check_size(n * m, a.ceiling)?;
    let q = match &a.q {
        Some(s) => parse_q(s)?,
        None => crate::cyclo::root_of_unity(n as u64, 1),
    };
    let probe = if q.is_primitive(n as u64) {
        false
    } else if q.is_proper_root(n as u64) {
        true
    } else {
        return Err(CliError::Hypothesis(format!(
            "q = {q} is not a proper {n}-th root of unity"
        )));
    };
    if let Some(l) = &a.lambda {
        if l.weight() != m {
            return Err(CliError::Usage(format!("type {l} is not a partition of m = {m}")));
        }
    }
    let scaled = a.lambda.as_ref().map(|l| l.scale(n));
    let family: Vec<SetPartition> = enumerate_divisible(m, n)
        .filter(|p| scaled.as_ref().is_none_or(|t| partition_type(p) == *t))
        .collect();
    let weights = crate::partitions::PowerSum::new(&q);
    let sum = weights.sum(family.iter().map(restricted_crossing_number));
    let aligned = family.iter().filter(|p| is_block_aligned(p, m, n)).count() as i64;
    let expected = match &a.lambda {
        None => bell_number(m) as i64,
        Some(l) => enumerate_set_partitions(m).filter(|p| partition_type(p) == *l).count() as i64,
    };
    let holds = sum == CycloNum::from_int(expected) && aligned == expected;
    let verdict = match (probe, holds) {
        (true, _) => "PROBE",
        (false, true) => "PASS",
        (false, false) => "FAIL",
    };

    let mut orbits = Vec::new();
    if a.per_orbit {
        let mut seen = BTreeSet::new();
        for p in &family {
            if seen.contains(p) {
                continue;
            }
            let orbit = orbit_divisible(p, n).map_err(|e| CliError::Hypothesis(e.to_string()))?;
            let partial = weights.sum(orbit.iter().map(restricted_crossing_number));
            let rotation_sum = divisible_orbit_sum(p, n, &q).map_err(|e| CliError::Hypothesis(e.to_string()))?;
            orbits.push(json!({
                "representative": p.to_string(),
                "size": orbit.len(),
                "block_aligned": is_block_aligned(p, m, n),
                "partial_sum": value_to_json(&partial),
                "rotation_sum": value_to_json(&rotation_sum),
            }));
            seen.extend(orbit);
        }
    }

    let report = json!({
        "n": n,
        "m": m,
        "q": value_to_json(&q),
        "mode": if probe { "probe" } else { "assert" },
        "type": a.lambda.as_ref().map(|l| l.to_string()),
        "partitions": family.len(),
        "sum": value_to_json(&sum),
        "block_aligned": aligned,
        "expected": expected,
        "verdict": verdict,
    });
    let text = match format {
        Format::Json => {
            let mut r = report;
            if a.per_orbit {
                r["orbits"] = Value::Array(orbits);
            }
            let mut s = serde_json::to_string_pretty(&r).expect("json");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if a.per_orbit {
                w.write_record(["representative", "size", "block_aligned", "partial_sum", "rotation_sum"])
                    .expect("in-memory write");
                for o in &orbits {
                    w.write_record([
                        plain(&o["representative"]),
                        plain(&o["size"]),
                        plain(&o["block_aligned"]),
                        plain(&o["partial_sum"]),
                        plain(&o["rotation_sum"]),
                    ])
                    .expect("in-memory write");
                }
            } else {
                w.write_record(["n", "m", "q", "type", "sum", "block_aligned", "expected", "verdict"])
                    .expect("in-memory write");
                w.write_record([
                    n.to_string(),
                    m.to_string(),
                    q.to_string(),
                    a.lambda.as_ref().map(|l| l.to_string()).unwrap_or_default(),
                    sum.to_string(),
                    aligned.to_string(),
                    expected.to_string(),
                    verdict.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Pretty => {
            let mut s = String::new();
            let scope = match &a.lambda {
                Some(l) => format!(" of type {}", l.scale(n)),
                None => String::new(),
            };
            if probe {
                let _ = writeln!(s, "probe: q = {q} is a proper but not primitive {n}-th root; nothing is asserted");
            }
            let _ = writeln!(s, "n = {n}, m = {m}, q = {q}: {} partitions{scope}", family.len());
            let _ = writeln!(s, "sum of q^c0 = {sum}");
            let _ = writeln!(s, "block-aligned = {aligned}, expected = {expected}");
            for o in &orbits {
                let _ = writeln!(
                    s,
                    "  orbit of {} (size {}{}): {}",
                    plain(&o["representative"]),
                    o["size"],
                    if o["block_aligned"] == json!(true) { ", aligned" } else { "" },
                    plain(&o["partial_sum"]),
                );
            }
            let _ = writeln!(s, "{verdict}");
            s
        }
    };
    Ok((text, if verdict == "FAIL" { 1 } else { 0 }))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Direction {
    M2c,
    C2m,
}

#[derive(Debug, Subcommand)]
pub enum CumulantsCommand {
    /// Read a JSON array on stdin and write the converted array.
    Convert {
        /// `1` (classical), `0` (free) or `zeta:N:K`.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Defaults to the input length.
        #[arg(long = "K")]
        truncation: Option<usize>,
    },
}

fn input_values(v: &Value) -> Result<Vec<CycloNum>, CliError> {
    values_from_json(v).map_err(|e| CliError::Malformed(e.to_string()))
}

pub fn cumulants(c: &CumulantsCommand, input: Value) -> Result<String, CliError> {
    let CumulantsCommand::Convert { q, direction, truncation } = c;
    let q = parse_q(q)?;
    let values = input_values(&input)?;
    let k = truncation.unwrap_or(values.len());
    let hyp = |e: crate::cumulants::CumulantError| CliError::Hypothesis(e.to_string());
    let out = match direction {
        Direction::M2c => {
            let mu = MomentSequence::new(values).map_err(hyp)?;
            cumulants_from_moments(&mu, &q, k).map_err(hyp)?.values().to_vec()
        }
        Direction::C2m => {
            let alpha = CumulantSequence::new(values, q).map_err(hyp)?;
            moments_from_cumulants(&alpha, k).map_err(hyp)?.values().to_vec()
        }
    };
    let mut s = serde_json::to_string(&values_to_json(&out)).expect("json");
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SeriesKind {
    R1,
    R0,
    Rnq,
    Graded,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub kind: SeriesKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Defaults to `zeta:n:1`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Degree of the variable for `graded`.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub delta: i64,
    #[arg(long = "K", default_value_t = 12)]
    pub truncation: usize,
}

pub fn series_to_json(s: &FormalSeries<CycloNum>) -> Value {
    json!({"truncation": s.truncation(), "coeffs": values_to_json(s.coeffs())})
}

pub fn series(a: &SeriesArgs, input: Value) -> Result<String, CliError> {
    let mu = MomentSequence::new(input_values(&input)?)
        .map_err(|e| CliError::Hypothesis(e.to_string()))?;
    let k = a.truncation;
    let need_n = || a.n.ok_or_else(|| CliError::Usage("this transform needs --n".into()));
    let q_for = |n: usize| match &a.q {
        Some(s) => parse_q(s),
        None => Ok(crate::cyclo::root_of_unity(n as u64, 1)),
    };
    let out = match a.kind {
        SeriesKind::R1 => r1_transform(&mu, k),
        SeriesKind::R0 => r0_transform(&mu, k),
        SeriesKind::Rnq => {
            let n = need_n()?;
            rnq_transform(&mu, n, &q_for(n)?, k)
        }
        SeriesKind::Graded => {
            let n = need_n()?;
            graded_r_transform(&mu, a.delta, n, &q_for(n)?, k)
        }
    }
    .map_err(|e| CliError::Hypothesis(e.to_string()))?;
    let mut s = serde_json::to_string(&series_to_json(&out)).expect("json");
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgebraQuery {
    /// `{"model", "element"}` → φ(a^k) for k = 1..K.
    Moments,
    /// `{"model", "a", "b"}` → r[a], r[b], r[a+b].
    Linearize,
    /// `{"model", "a", "b"}` → (a+b)^{n'} against a^{n'} + b^{n'}.
    PowerRule,
    /// `{"model", "a": [..], "b": [..]}` → first counterexample, if any.
    Independence,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(value_enum)]
    pub query: AlgebraQuery,
    #[arg(long = "K", default_value_t = 12)]
    pub truncation: usize,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
}

#[derive(Deserialize)]
struct AlgebraPayload {
    model: ModelDesc,
    #[serde(default)]
    element: Option<Value>,
    #[serde(default)]
    a: Option<Value>,
    #[serde(default)]
    b: Option<Value>,
}

fn algebra_err(e: AlgebraError) -> CliError {
    match e {
        AlgebraError::Malformed(_) | AlgebraError::UnknownGenerator(_) => CliError::Malformed(e.to_string()),
        other => CliError::Hypothesis(other.to_string()),
    }
}

fn field<'a>(v: &'a Option<Value>, name: &str) -> Result<&'a Value, CliError> {
    v.as_ref()
        .ok_or_else(|| CliError::Malformed(format!("payload lacks {name:?}")))
}

fn elements(spec: &std::sync::Arc<AlgebraSpec>, v: &Value) -> Result<Vec<AlgebraElement>, CliError> {
    v.as_array()
        .ok_or_else(|| CliError::Malformed("expected an array of elements".into()))?
        .iter()
        .map(|e| element_from_json(spec, e).map_err(algebra_err))
        .collect()
}

pub fn algebra(a: &AlgebraArgs, input: Value, format: Format) -> Result<(String, i32), CliError> {
    let payload: AlgebraPayload =
        serde_json::from_value(input).map_err(|e| CliError::Malformed(e.to_string()))?;
    let spec = payload.model.build().map_err(algebra_err)?;
    let elem = |name: &str, v: &Option<Value>| -> Result<AlgebraElement, CliError> {
        element_from_json(&spec, field(v, name)?).map_err(algebra_err)
    };
    let (out, code) = match a.query {
        AlgebraQuery::Moments => {
            let x = elem("element", &payload.element)?;
            let mu = x.moments_of(a.truncation);
            (json!({"moments": values_to_json(mu.values())}), 0)
        }
        AlgebraQuery::Linearize => {
            let (x, y) = (elem("a", &payload.a)?, elem("b", &payload.b)?);
            if let Some(c) = check_graded_independence(std::slice::from_ref(&x), std::slice::from_ref(&y), a.depth).map_err(algebra_err)? {
                return Err(CliError::Hypothesis(format!(
                    "a and b are not graded independent ({:?} at words {:?}, {:?})",
                    c.failure, c.a_word, c.b_word
                )));
            }
            let rep = verify_linearization(&x, &y, a.truncation).map_err(algebra_err)?;
            let holds = rep.holds();
            (
                json!({
                    "degree": rep.degree,
                    "r_a": series_to_json(&rep.r_a),
                    "r_b": series_to_json(&rep.r_b),
                    "r_sum": series_to_json(&rep.r_sum),
                    "additive": holds,
                }),
                if holds { 0 } else { 1 },
            )
        }
        AlgebraQuery::PowerRule => {
            let (x, y) = (elem("a", &payload.a)?, elem("b", &payload.b)?);
            let rep = verify_power_rule(&x, &y).map_err(algebra_err)?;
            let holds = rep.holds();
            (
                json!({
                    "degree": rep.degree,
                    "exponent": rep.exponent,
                    "lhs": element_to_json(&rep.lhs),
                    "rhs": element_to_json(&rep.rhs),
                    "holds": holds,
                }),
                if holds { 0 } else { 1 },
            )
        }
        AlgebraQuery::Independence => {
            let xs = elements(&spec, field(&payload.a, "a")?)?;
            let ys = elements(&spec, field(&payload.b, "b")?)?;
            match check_graded_independence(&xs, &ys, a.depth).map_err(algebra_err)? {
                None => (json!({"independent": true, "depth": a.depth}), 0),
                Some(c) => (
                    json!({
                        "independent": false,
                        "depth": a.depth,
                        "failure": format!("{:?}", c.failure).to_lowercase(),
                        "a_word": c.a_word,
                        "b_word": c.b_word,
                        "a": element_to_json(&c.a),
                        "b": element_to_json(&c.b),
                    }),
                    0,
                ),
            }
        }
    };
    let text = match format {
        Format::Pretty => format!("{out:#}\n"),
        _ => {
            let mut s = serde_json::to_string(&out).expect("json");
            s.push('\n');
            s
        }
    };
    Ok((text, code))
}
