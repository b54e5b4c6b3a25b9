//! Parameter sweeps and local refinement with the verifier as the oracle.

use crate::config::Effort;
use crate::error::{Error, Result};
use crate::graph::{derive_all, ConstantGraph, ParamSet};
use crate::interval::Interval;
use crate::verify::{run_claims, select, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Claims whose truth depends on the free parameters and which every
/// feasible point must satisfy.
pub const FEASIBILITY_CLAIMS: &str = "q_nonnegative,c16_case_i,c16_case_ii,c23_case_i";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MinimizeZfrConstant,
    MaximizeC8,
    MinimizeC10,
    MinimizeC16,
    MinimizeC23,
    #[serde(rename = "minimize_A1")]
    #[default]
    MinimizeA1,
    /// `max(B₁, B₂)` for the short-form zero count.
    MinimizeZeroCount,
}

impl Objective {
    pub const ALL: [Objective; 7] = [
        Objective::MinimizeZfrConstant,
        Objective::MaximizeC8,
        Objective::MinimizeC10,
        Objective::MinimizeC16,
        Objective::MinimizeC23,
        Objective::MinimizeA1,
        Objective::MinimizeZeroCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Objective::MinimizeZfrConstant => "minimize_zfr_constant",
            Objective::MaximizeC8 => "maximize_c8",
            Objective::MinimizeC10 => "minimize_c10",
            Objective::MinimizeC16 => "minimize_c16",
            Objective::MinimizeC23 => "minimize_c23",
            Objective::MinimizeA1 => "minimize_A1",
            Objective::MinimizeZeroCount => "minimize_zero_count",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Objective::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown objective {s:?}")))
    }

    pub fn maximize(self) -> bool {
        self == Objective::MaximizeC8
    }

    /// Reads the objective from an evaluated graph.
    pub fn value(self, graph: &ConstantGraph) -> Result<Interval> {
        match self {
            Objective::MinimizeZfrConstant => graph.value("zfr_constant_raw"),
            Objective::MaximizeC8 => graph.value("c_8_raw_real"),
            Objective::MinimizeC10 => graph.value("c_10"),
            Objective::MinimizeC16 => graph.value("c16"),
            Objective::MinimizeC23 => graph.value("c23"),
            Objective::MinimizeA1 => graph.value("A_1"),
            Objective::MinimizeZeroCount => Ok(graph.value("B_1")?.max(graph.value("B_2")?)),
        }
    }

    /// Free parameters searched by [`refine`], with their search ranges.
    pub fn coordinates(self) -> Vec<(&'static str, f64, f64)> {
        match self {
            Objective::MinimizeZfrConstant => {
                vec![("q_shape_a", 0.3, 1.0), ("b_zfr", 4.0, 20.0), ("delta_zfr", 0.0, 1.0), ("eta_zfr", 0.0, 1.0)]
            }
            // c₈ grows without bound as č falls to 12 (while c₇ vanishes), so
            // only σ₀ is searched.
            Objective::MaximizeC8 => vec![("sigma0_dh_real", 1.8, 11.6)],
            Objective::MinimizeC10 => vec![("c_check_cor", 12.01, 60.0), ("sigma0_dh_cor", 1.8, 11.6)],
            Objective::MinimizeC16 => vec![("c16", 1.0, f64::INFINITY)],
            Objective::MinimizeC23 => vec![("c23", 1.0, f64::INFINITY)],
            Objective::MinimizeA1 => vec![("c16", 1.0, f64::INFINITY), ("c23", 1.0, f64::INFINITY)],
            Objective::MinimizeZeroCount => vec![("sigma_density_short", 1.5, 4.0)],
        }
    }

    /// Whether the objective is a parameter itself, so the search moves to
    /// the feasibility boundary instead of a smooth optimum.
    fn boundary_search(self) -> bool {
        matches!(self, Objective::MinimizeC16 | Objective::MinimizeC23 | Objective::MinimizeA1)
    }

    /// Rigorous improvement: the enclosures are separated in the right
    /// direction.
    pub fn improves(self, new: Interval, old: Interval) -> bool {
        if self.maximize() {
            new.lo() > old.hi()
        } else {
            new.hi() < old.lo()
        }
    }

    /// Ranking key for heuristic search (smaller is better).
    fn score(self, v: Interval) -> f64 {
        if self.maximize() {
            -v.mid()
        } else {
            v.mid()
        }
    }
}

/// The objective and feasibility of one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointEval {
    pub objective: Option<Interval>,
    pub feasible: bool,
    /// Failed nodes, unproved claims or evaluation errors.
    pub issues: Vec<String>,
}

/// Derives the graph at `params`, reads the objective and runs the
/// feasibility claims.
pub fn evaluate_point(params: &ParamSet, effort: &Effort, objective: Objective) -> PointEval {
    let mut issues = Vec::new();
    let graph = match derive_all(params, effort) {
        Ok(g) => g,
        Err(e) => return PointEval { objective: None, feasible: false, issues: vec![e.to_string()] },
    };
    let value = match objective.value(&graph) {
        Ok(v) => Some(v),
        Err(e) => {
            issues.push(format!("objective: {e}"));
            None
        }
    };
    for n in graph.failures() {
        issues.push(format!("node {} failed: {}", n.id, n.notes.join("; ")));
    }
    if issues.is_empty() {
        let claims = select(FEASIBILITY_CLAIMS).and_then(|c| run_claims(&graph, effort, &c));
        match claims {
            Ok(out) => {
                for o in out.iter().filter(|o| o.record.verdict != Verdict::Proved) {
                    issues.push(format!("{} is {:?}", o.record.claim, o.record.verdict));
                }
            }
            Err(e) => issues.push(format!("claims: {e}")),
        }
    }
    PointEval { objective: value, feasible: issues.is_empty() && value.is_some(), issues }
}

/// One swept parameter: either `steps` evenly spaced values from `lo` to
/// `hi`, or an explicit ladder in `values`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub param: String,
    #[serde(default)]
    pub lo: f64,
    #[serde(default)]
    pub hi: f64,
    #[serde(default)]
    pub steps: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<f64>,
}

impl Axis {
    pub fn range(param: &str, lo: f64, hi: f64, steps: usize) -> Self {
        Axis { param: param.into(), lo, hi, steps, values: Vec::new() }
    }

    pub fn ladder(param: &str, values: &[f64]) -> Self {
        Axis { param: param.into(), values: values.to_vec(), ..Axis::default() }
    }

    /// Grid values. Ranges are rounded to ten decimals so they parse back as
    /// the decimals a person would type.
    pub fn values(&self) -> Vec<f64> {
        if !self.values.is_empty() {
            return self.values.clone();
        }
        match self.steps {
            0 => Vec::new(),
            1 => vec![self.lo],
            n => (0..n)
                .map(|i| {
                    let x = self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64;
                    round_decimal(x, 10)
                })
                .collect(),
        }
    }

    pub fn count(&self) -> usize {
        if self.values.is_empty() {
            self.steps
        } else {
            self.values.len()
        }
    }
}

fn round_decimal(x: f64, places: usize) -> f64 {
    format!("{x:.places$}").parse().unwrap_or(x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    #[serde(default)]
    pub axes: Vec<Axis>,
    #[serde(default)]
    pub objective: Objective,
    /// Values for every parameter not on an axis.
    #[serde(default)]
    pub base: ParamSet,
}

impl SweepSpec {
    /// Parses a TOML spec; an empty document is an empty grid.
    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: SweepSpec = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for a in &self.axes {
            self.base.get(&a.param)?;
            if !a.values.is_empty() {
                if let Some(v) = a.values.iter().find(|v| !v.is_finite()) {
                    return Err(Error::InvalidParams(format!("axis {} has value {v}", a.param)));
                }
            } else if !(a.lo.is_finite() && a.hi.is_finite() && a.lo <= a.hi) {
                return Err(Error::InvalidParams(format!("axis {} has range [{}, {}]", a.param, a.lo, a.hi)));
            }
        }
        Ok(())
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        if self.axes.is_empty() {
            0
        } else {
            self.axes.iter().map(Axis::count).product()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid index and parameter values of point `k` (last axis fastest).
    fn point(&self, mut k: usize) -> (Vec<usize>, Vec<(String, f64)>) {
        let mut idx = vec![0; self.axes.len()];
        for (i, a) in self.axes.iter().enumerate().rev() {
            idx[i] = k % a.count();
            k /= a.count();
        }
        let vals = self.axes.iter().zip(&idx).map(|(a, &i)| (a.param.clone(), a.values()[i])).collect();
        (idx, vals)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: Vec<usize>,
    pub values: Vec<(String, f64)>,
    pub objective: Option<Interval>,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<String>,
}

/// Evaluates every grid point; rows come back in grid order.
pub fn sweep(spec: &SweepSpec, effort: &Effort) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let rows = (0..spec.len())
        .into_par_iter()
        .map(|k| {
            let (index, values) = spec.point(k);
            let mut params = spec.base.clone();
            let mut issues = Vec::new();
            for (name, v) in &values {
                if let Err(e) = params.set(name, *v) {
                    issues.push(e.to_string());
                }
            }
            if let Err(e) = params.validate() {
                issues.push(e.to_string());
            }
            if !issues.is_empty() {
                return SweepRow { index, values, objective: None, feasible: false, issues };
            }
            let ev = evaluate_point(&params, effort, spec.objective);
            SweepRow { index, values, objective: ev.objective, feasible: ev.feasible, issues: ev.issues }
        })
        .collect();
    Ok(rows)
}

/// The best feasible row of a sweep.
pub fn best_row(rows: &[SweepRow], objective: Objective) -> Option<&SweepRow> {
    rows.iter()
        .filter(|r| r.feasible)
        .filter_map(|r| r.objective.map(|v| (r, objective.score(v))))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(r, _)| r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefineOutcome {
    pub params: ParamSet,
    pub objective: Interval,
    pub seed_objective: Interval,
    pub evaluations: usize,
    /// Accepted moves, one line each.
    pub steps: Vec<String>,
}

struct Search<'a> {
    effort: &'a Effort,
    objective: Objective,
    evaluations: usize,
}

impl Search<'_> {
    fn eval(&mut self, params: &ParamSet, name: &str, x: f64) -> Option<(ParamSet, Interval)> {
        let mut p = params.clone();
        p.set(name, x).ok()?;
        p.validate().ok()?;
        self.evaluations += 1;
        let ev = evaluate_point(&p, self.effort, self.objective);
        match (ev.feasible, ev.objective) {
            (true, Some(v)) => Some((p, v)),
            _ => None,
        }
    }

    /// Golden-section search for the best heuristic score on `[a, b]`;
    /// infeasible points score `+∞`.
    fn golden(&mut self, params: &ParamSet, name: &str, a: f64, b: f64) -> Option<(ParamSet, Interval)> {
        const ITERS: usize = 24;
        let ratio = (5f64.sqrt() - 1.0) / 2.0;
        let (mut a, mut b) = (a, b);
        let score = |s: &mut Self, x: f64| {
            s.eval(params, name, round_decimal(x, 6)).map_or(f64::INFINITY, |(_, v)| s.objective.score(v))
        };
        let mut c = b - ratio * (b - a);
        let mut d = a + ratio * (b - a);
        let (mut fc, mut fd) = (score(self, c), score(self, d));
        for _ in 0..ITERS {
            if fc <= fd {
                b = d;
                d = c;
                fd = fc;
                c = b - ratio * (b - a);
                fc = score(self, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + ratio * (b - a);
                fd = score(self, d);
            }
        }
        let x = round_decimal(if fc <= fd { c } else { d }, 6);
        self.eval(params, name, x)
    }

    /// Golden search on the whole range, then on brackets of a tenth and a
    /// hundredth of it around the current value, since the feasible set can
    /// be a narrow window. Returns the best rigorous improvement found.
    fn bracketed(
        &mut self,
        params: &ParamSet,
        name: &str,
        lo: f64,
        hi: f64,
        current: Interval,
    ) -> Option<(ParamSet, Interval)> {
        let x = params.get(name).ok()?;
        let mut best: Option<(ParamSet, Interval)> = None;
        for shrink in [1.0, 0.1, 0.01] {
            let half = (hi - lo) * shrink / 2.0;
            let (a, b) = if shrink == 1.0 { (lo, hi) } else { ((x - half).max(lo), (x + half).min(hi)) };
            if let Some((p, v)) = self.golden(params, name, a, b) {
                let reference = best.as_ref().map_or(current, |(_, w)| *w);
                if self.objective.improves(v, reference) {
                    best = Some((p, v));
                }
            }
        }
        best
    }

    /// Smallest feasible value of a parameter below its current value, to
    /// two decimals.
    fn boundary(&mut self, params: &ParamSet, name: &str, floor: f64) -> Option<(ParamSet, Interval)> {
        let current = params.get(name).ok()?;
        let mut good = current;
        let mut bad = floor;
        if self.eval(params, name, bad).is_some() {
            return self.eval(params, name, bad);
        }
        while good - bad > 0.005 {
            let mid = round_decimal((good + bad) / 2.0, 3);
            if mid <= bad || mid >= good {
                break;
            }
            if self.eval(params, name, mid).is_some() {
                good = mid;
            } else {
                bad = mid;
            }
        }
        let x = (good * 100.0).ceil() / 100.0;
        self.eval(params, name, x.min(current))
    }
}

/// Coordinate search from a feasible seed. Every accepted step is a
/// rigorous improvement of the objective enclosure at a feasible point.
pub fn refine(seed: &ParamSet, objective: Objective, max_iters: usize, effort: &Effort) -> Result<RefineOutcome> {
    seed.validate()?;
    let start = evaluate_point(seed, effort, objective);
    let seed_value = match (start.feasible, start.objective) {
        (true, Some(v)) => v,
        _ => return Err(Error::InfeasibleSeed(start.issues.join("; "))),
    };
    let mut search = Search { effort, objective, evaluations: 1 };
    let mut best = (seed.clone(), seed_value);
    let mut steps = Vec::new();
    for round in 0..max_iters {
        let mut moved = false;
        for (name, lo, hi) in objective.coordinates() {
            let found = if objective.boundary_search() {
                search.boundary(&best.0, name, lo)
            } else {
                search.bracketed(&best.0, name, lo, hi, best.1)
            };
            let Some((p, v)) = found else { continue };
            let better = if objective == Objective::MinimizeA1 {
                // A₁ is an integer: equal values still allow later moves.
                v.hi() <= best.1.lo() && p != best.0
            } else {
                objective.improves(v, best.1)
            };
            if better {
                steps.push(format!("round {round}: {name} = {} gives {v}", p.get(name).unwrap_or(f64::NAN)));
                best = (p, v);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    if steps.is_empty() {
        return Err(Error::NoImprovement);
    }
    Ok(RefineOutcome {
        params: best.0,
        objective: best.1,
        seed_objective: seed_value,
        evaluations: search.evaluations,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_gives_empty_table() {
        let spec = SweepSpec { axes: vec![], objective: Objective::MinimizeZeroCount, base: ParamSet::published() };
        assert!(sweep(&spec, &Effort::default()).unwrap().is_empty());
        let spec = SweepSpec {
            axes: vec![Axis::range("c16", 1.0, 2.0, 0)],
            objective: Objective::MinimizeC16,
            base: ParamSet::published(),
        };
        assert!(sweep(&spec, &Effort::default()).unwrap().is_empty());
    }

    #[test]
    fn axis_values_are_clean_decimals() {
        let a = Axis::range("sigma_density_short", 2.0, 3.0, 101);
        let v = a.values();
        assert_eq!(v.len(), 101);
        assert_eq!(v[45], 2.45);
        assert_eq!(v[100], 3.0);
    }

    #[test]
    fn objective_names_round_trip() {
        for o in Objective::ALL {
            assert_eq!(Objective::parse(o.name()).unwrap(), o);
            let json = serde_json::to_string(&o).unwrap();
            assert_eq!(json, format!("\"{}\"", o.name()));
        }
        assert!(Objective::parse("maximize_everything").is_err());
    }

    #[test]
    fn rigorous_improvement_needs_separation() {
        let o = Objective::MinimizeC10;
        assert!(o.improves(Interval::new(1.0, 2.0), Interval::new(2.5, 3.0)));
        assert!(!o.improves(Interval::new(1.0, 2.6), Interval::new(2.5, 3.0)));
        assert!(Objective::MaximizeC8.improves(Interval::new(3.0, 4.0), Interval::new(1.0, 2.0)));
    }
}
