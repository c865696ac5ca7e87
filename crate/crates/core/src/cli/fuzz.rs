//! Randomized cross-check of the cycle engine against the Euclidean oracle.
//!
//! Triangles are drawn sequentially from a seeded ChaCha8 stream and then
//! evaluated in parallel; results are aggregated in draw order, so a given
//! seed always yields the same summary.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::input::RationalPoint;
use super::record::triangle_from_rationals;
use super::{CliError, Mode, OutputFormat, RunConfig};
use crate::altitudes::{analyze_triangle, ConfigurationKind};
use crate::oracle::{classify_triangle_oracle, OracleVerdict};
use crate::scalar::{Scalar, Tolerance};
use crate::Rational;

fn random_coord(rng: &mut ChaCha8Rng, lo: i64) -> Rational {
    Rational::ratio(rng.random_range(lo..=64), rng.random_range(1..=16))
}

/// `n` non-degenerate triangles with vertices `(p/q, p'/q')`,
/// `p ∈ [-64, 64]`, `p' ∈ [1, 64]`, `q, q' ∈ [1, 16]`.
pub fn generate_triangles(seed: u64, n: usize) -> Vec<[RationalPoint; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut point = || [random_coord(&mut rng, -64), random_coord(&mut rng, 1)];
        let t = [point(), point(), point()];
        if !degenerate(&t) {
            out.push(t);
        }
    }
    out
}

/// Repeated vertex, or all three on one geodesic: `det[|p|², x, 1] = 0`
/// (for a vertical geodesic this reduces to equal `x`).
fn degenerate(t: &[RationalPoint; 3]) -> bool {
    if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
        return true;
    }
    let row = |p: &RationalPoint| (&p[0] * &p[0] + &p[1] * &p[1], p[0].clone());
    let (r0, x0) = row(&t[0]);
    let (r1, x1) = row(&t[1]);
    let (r2, x2) = row(&t[2]);
    let det = (&r1 - &r0) * (&x2 - &x0) - (&r2 - &r0) * (&x1 - &x0);
    det == Rational::from_int(0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub engine: Result<ConfigurationKind, String>,
    /// `None` when the oracle abstained.
    pub oracle: Result<Option<ConfigurationKind>, String>,
    /// `max|A(u) + A(v) + A(w)|`, relative to the largest altitude coefficient.
    pub residual: f64,
}

impl TrialOutcome {
    pub fn agrees(&self) -> bool {
        match (&self.engine, &self.oracle) {
            (Ok(e), Ok(Some(o))) => e == o,
            (Ok(_), Ok(None)) => true,
            _ => false,
        }
    }
}

pub fn evaluate<S: Scalar>(pts: &[RationalPoint; 3], tol: &Tolerance) -> TrialOutcome {
    let t = match triangle_from_rationals::<S>(pts, tol) {
        Ok(t) => t,
        Err(e) => {
            return TrialOutcome {
                engine: Err(e.to_string()),
                oracle: Err("not evaluated".into()),
                residual: 0.0,
            }
        }
    };
    let (engine, residual) = match analyze_triangle(&t, tol) {
        Ok(a) => {
            let scale = a
                .pencil
                .altitudes()
                .iter()
                .map(|c| c.max_abs().to_f64_lossy())
                .fold(0.0, f64::max);
            let r = a.pencil.residual().max_abs().to_f64_lossy();
            (Ok(a.configuration.kind()), if scale > 0.0 { r / scale } else { r })
        }
        Err(e) => (Err(e.to_string()), 0.0),
    };
    let oracle = match classify_triangle_oracle(&t, tol) {
        Ok(OracleVerdict::Decided(c)) => Ok(Some(c.kind())),
        Ok(OracleVerdict::Abstained) => Ok(None),
        Err(e) => Err(e.to_string()),
    };
    TrialOutcome { engine, oracle, residual }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailedCase {
    pub index: usize,
    pub triangle: [[String; 2]; 3],
    pub engine: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub mode: Mode,
    pub seed: u64,
    pub trials: usize,
    pub counts: BTreeMap<String, usize>,
    pub disagreements: usize,
    pub abstentions: usize,
    pub errors: usize,
    pub max_residual: f64,
    pub failures: Vec<FailedCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl FuzzSummary {
    /// No disagreement, no error, and (in exact mode) a zero residual.
    pub fn passed(&self) -> bool {
        self.disagreements == 0
            && self.errors == 0
            && (self.mode != Mode::Exact || self.max_residual == 0.0)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::JsonLines => serde_json::to_string(self)
                .map(|s| s + "\n")
                .map_err(|e| CliError::Internal(format!("serialize: {e}"))),
            OutputFormat::Human => Ok(self.to_human()),
        }
    }

    fn to_human(&self) -> String {
        let mode = match self.mode {
            Mode::Exact => "exact",
            Mode::Approximate => "approximate",
        };
        let mut out = format!("fuzz: {} triangles, seed {}, {mode} arithmetic\n", self.trials, self.seed);
        for kind in ConfigurationKind::ALL {
            let n = self.counts.get(kind.as_str()).copied().unwrap_or(0);
            out += &format!("  {:<26}{n}\n", kind.as_str());
        }
        out += &format!("  {:<26}{}\n", "disagreements", self.disagreements);
        out += &format!("  {:<26}{}\n", "oracle abstentions", self.abstentions);
        out += &format!("  {:<26}{}\n", "errors", self.errors);
        out += &format!("  {:<26}{:e}\n", "max residual", self.max_residual);
        if let Some(ms) = self.elapsed_ms {
            out += &format!("  {:<26}{ms} ms\n", "elapsed");
        }
        for f in &self.failures {
            let pts: Vec<String> = f.triangle.iter().map(|[x, y]| format!("({x}, {y})")).collect();
            out += &format!(
                "  FAIL #{}: {} engine={} oracle={}\n",
                f.index,
                pts.join(" "),
                f.engine,
                f.oracle
            );
        }
        out += if self.passed() { "PASS\n" } else { "FAIL\n" };
        out
    }
}

/// Evaluate `triangles` in parallel and aggregate in order.
pub fn summarize(triangles: &[[RationalPoint; 3]], mode: Mode, seed: u64, tol: &Tolerance) -> FuzzSummary {
    let outcomes: Vec<TrialOutcome> = triangles
        .par_iter()
        .map(|t| match mode {
            Mode::Exact => evaluate::<Rational>(t, tol),
            Mode::Approximate => evaluate::<f64>(t, tol),
        })
        .collect();
    let mut summary = FuzzSummary {
        mode,
        seed,
        trials: triangles.len(),
        counts: ConfigurationKind::ALL.iter().map(|k| (k.as_str().to_string(), 0)).collect(),
        disagreements: 0,
        abstentions: 0,
        errors: 0,
        max_residual: 0.0,
        failures: Vec::new(),
        elapsed_ms: None,
    };
    for (index, (t, o)) in triangles.iter().zip(&outcomes).enumerate() {
        if let Ok(k) = &o.engine {
            *summary.counts.entry(k.as_str().to_string()).or_default() += 1;
        }
        if matches!(o.oracle, Ok(None)) {
            summary.abstentions += 1;
        }
        let errored = o.engine.is_err() || o.oracle.is_err();
        if errored {
            summary.errors += 1;
        } else if !o.agrees() {
            summary.disagreements += 1;
        }
        summary.max_residual = summary.max_residual.max(o.residual);
        if errored || !o.agrees() {
            let describe = |r: Result<Option<ConfigurationKind>, &String>| match r {
                Ok(Some(k)) => k.as_str().to_string(),
                Ok(None) => "abstained".to_string(),
                Err(e) => format!("error: {e}"),
            };
            summary.failures.push(FailedCase {
                index,
                triangle: t.clone().map(|[x, y]| [x.to_string(), y.to_string()]),
                engine: describe(o.engine.as_ref().map(|k| Some(*k))),
                oracle: describe(o.oracle.as_ref().copied()),
            });
        }
    }
    summary
}

pub fn cmd_fuzz(config: &RunConfig) -> FuzzSummary {
    let start = Instant::now();
    let triangles = generate_triangles(config.seed, config.trials);
    let mut summary = summarize(&triangles, config.mode, config.seed, &config.tolerance);
    if config.timings {
        summary.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    summary
}
