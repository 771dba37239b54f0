//! Empirical reducible-specialization scanning over integer ranges, and the
//! advisory reconciliation of scan results against verdicts.

use num::{BigInt, BigRational};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyform::{factor_q, BiPoly, Factorization};
use crate::verdict::{Verdict, VerdictStatus};

/// Scan of t̄ ∈ [−bound, bound]: which specializations are reducible, which
/// are excluded as undefined (degree drop in X).
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub polynomial: String,
    pub bound: i64,
    pub reducible_points: Vec<i64>,
    pub undefined_points: Vec<i64>,
}

impl ScanReport {
    /// Factorization witness at a reducible point, recomputed on demand.
    pub fn witness(&self, f: &BiPoly, point: i64) -> Result<Factorization> {
        let specialized = specialize(f, point);
        factor_q(&specialized)
    }
}

fn specialize(f: &BiPoly, point: i64) -> crate::polyform::UniPoly {
    f.eval_first(&BigRational::from_integer(BigInt::from(point)))
}

/// Scans every integer t̄ with |t̄| ≤ bound: specializations with a degree
/// drop in X count as undefined (not reducible); the rest are factored.
pub fn scan(f: &BiPoly, bound: i64) -> Result<ScanReport> {
    let full_degree = f
        .degree_second()
        .ok_or_else(|| Error::InvalidArgument("polynomial is constant in X".into()))?;
    if full_degree < 2 {
        return Err(Error::InvalidArgument(
            "degree in X must be at least 2".into(),
        ));
    }
    if bound < 0 {
        return Err(Error::InvalidArgument("bound must be non-negative".into()));
    }
    let points: Vec<i64> = (-bound..=bound).collect();
    let classified: Vec<Result<(i64, PointClass)>> = points
        .par_iter()
        .map(|&t| {
            let specialized = specialize(f, t);
            if specialized.degree().map(|d| d as u32) != Some(full_degree) {
                return Ok((t, PointClass::Undefined));
            }
            let reducible = factor_q(&specialized)?.factor_count() >= 2;
            Ok((
                t,
                if reducible {
                    PointClass::Reducible
                } else {
                    PointClass::Irreducible
                },
            ))
        })
        .collect();
    let mut reducible_points = Vec::new();
    let mut undefined_points = Vec::new();
    for entry in classified {
        let (t, class) = entry?;
        match class {
            PointClass::Reducible => reducible_points.push(t),
            PointClass::Undefined => undefined_points.push(t),
            PointClass::Irreducible => {}
        }
    }
    reducible_points.sort_unstable();
    undefined_points.sort_unstable();
    Ok(ScanReport {
        polynomial: f.to_string_with("t", "X"),
        bound,
        reducible_points,
        undefined_points,
    })
}

enum PointClass {
    Reducible,
    Irreducible,
    Undefined,
}

/// Advisory reconciliation notes.
#[derive(Clone, Debug, Serialize)]
pub struct ReconcileNotes {
    pub consistent: bool,
    pub notes: Vec<String>,
}

/// Growth slack before a Finite verdict is flagged against scan growth:
/// between bounds B < B′, more than old/2 + SLACK new reducible points look
/// like an unbounded family. Finite scans can never refute finiteness, so
/// the flag is a tripwire for implementation bugs, not a mathematical
/// contradiction.
pub const GROWTH_SLACK: usize = 8;

/// Compares scan results at one or two bounds against a verdict.
pub fn reconcile(reports: &[ScanReport], verdict: &Verdict) -> ReconcileNotes {
    let mut notes = Vec::new();
    let mut consistent = true;
    match verdict.status {
        VerdictStatus::Finite => {
            if let [small, large] = reports {
                let (small, large) = if small.bound <= large.bound {
                    (small, large)
                } else {
                    (large, small)
                };
                let new_points = large
                    .reducible_points
                    .iter()
                    .filter(|p| !small.reducible_points.contains(p))
                    .count();
                let threshold = small.reducible_points.len() / 2 + GROWTH_SLACK;
                if new_points > threshold {
                    consistent = false;
                    notes.push(format!(
                        "Finite verdict but {new_points} new reducible points appeared \
                         between bounds {} and {} (threshold {threshold}); likely an \
                         implementation bug",
                        small.bound, large.bound
                    ));
                } else {
                    notes.push(format!(
                        "{new_points} new reducible points between bounds; within the \
                         documented slack"
                    ));
                }
            } else if let [single] = reports {
                notes.push(format!(
                    "Finite verdict with {} reducible points up to |t̄| ≤ {}; finite scans \
                     cannot refute finiteness",
                    single.reducible_points.len(),
                    single.bound
                ));
            }
        }
        VerdictStatus::InfiniteWitness => {
            if let Some(report) = reports.first() {
                notes.push(format!(
                    "witnessed infinite family; scan found {} reducible points up to \
                     |t̄| ≤ {}",
                    report.reducible_points.len(),
                    report.bound
                ));
            }
        }
        VerdictStatus::Inconclusive => {
            notes.push("inconclusive verdict; scan data is observational only".into());
        }
    }
    ReconcileNotes { consistent, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyform::parse_bipoly;
    use crate::verdict::FiredCriterion;

    #[test]
    fn pell_scan_matches_ground_truth() {
        let f = parse_bipoly("X^2 - 2t^2 - 1").unwrap();
        let report = scan(&f, 100).unwrap();
        assert_eq!(report.reducible_points, vec![-70, -12, -2, 0, 2, 12, 70]);
        assert!(report.undefined_points.is_empty());
    }

    #[test]
    fn thue_cubic_scan() {
        let f = parse_bipoly("X^3 + t^3 - 1").unwrap();
        let report = scan(&f, 50).unwrap();
        assert_eq!(report.reducible_points, vec![0, 1]);
    }

    #[test]
    fn prime_counterexample_scan() {
        // X² + X − 2t²: reducible iff 1 + 8t̄² is a square.
        let f = parse_bipoly("X^2 + X - 2t^2").unwrap();
        let report = scan(&f, 20).unwrap();
        assert_eq!(report.reducible_points, vec![-6, -1, 0, 1, 6]);
    }

    #[test]
    fn monotone_in_bound() {
        let f = parse_bipoly("X^2 - 2t^2 - 1").unwrap();
        let small = scan(&f, 30).unwrap();
        let large = scan(&f, 100).unwrap();
        for p in &small.reducible_points {
            assert!(large.reducible_points.contains(p));
        }
    }

    #[test]
    fn degree_drop_counts_undefined() {
        // (t−1)X² + X + 1 drops X-degree at t̄ = 1.
        let f = parse_bipoly("(t - 1)X^2 + X + 1").unwrap();
        let report = scan(&f, 3).unwrap();
        assert!(report.undefined_points.contains(&1));
        assert!(!report.reducible_points.contains(&1));
    }

    #[test]
    fn witnesses_reproduce() {
        let f = parse_bipoly("X^2 - 2t^2 - 1").unwrap();
        let report = scan(&f, 100).unwrap();
        for &t in &report.reducible_points {
            let factorization = report.witness(&f, t).unwrap();
            assert!(factorization.factor_count() >= 2, "t = {t}");
        }
    }

    #[test]
    fn reconciliation_flags_growth() {
        let finite = Verdict {
            status: VerdictStatus::Finite,
            fired: vec![FiredCriterion::new("x", "T:test", "synthetic")],
            witness: None,
            notes: vec![],
        };
        // Synthetic linear growth.
        let small = ScanReport {
            polynomial: "synthetic".into(),
            bound: 100,
            reducible_points: (-100..=100).collect(),
            undefined_points: vec![],
        };
        let large = ScanReport {
            polynomial: "synthetic".into(),
            bound: 200,
            reducible_points: (-200..=200).collect(),
            undefined_points: vec![],
        };
        let notes = reconcile(&[small.clone(), large], &finite);
        assert!(!notes.consistent);
        // A genuinely finite pattern stays consistent.
        let same = reconcile(&[small.clone(), small], &finite);
        assert!(same.consistent);
    }
}
