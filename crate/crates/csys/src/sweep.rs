//! Batch property sweeps over parameter grids. Each sweep counts the cases
//! it checks and collects the first few violations verbatim; any violation
//! at all is a failure of the corresponding mathematical statement and
//! makes the CLI exit non-zero.

use serde::Serialize;

use crate::arith::Rational;
use crate::bundle::generic_polystable;
use crate::moduli::{alpha_range, is_nonempty, ModuliQuery};
use crate::stability::{GenericSystemModel, StabilityError};
use crate::walls::enumerate_walls;

const MAX_REPORTED: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepCheck {
    /// Every decomposition surviving the wall filters has `C12 > 0` and
    /// `C21 > 0`.
    Positivity,
    /// The direct non-emptiness criterion agrees with membership in the
    /// computed parameter interval, for a grid of rational parameters.
    IntervalConsistency,
    /// The generic-position stability verdict agrees with the
    /// non-emptiness criterion at sub-wall parameters.
    OracleAgreement,
}

impl SweepCheck {
    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::Positivity => "positivity",
            SweepCheck::IntervalConsistency => "interval-consistency",
            SweepCheck::OracleAgreement => "oracle-agreement",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub check: &'static str,
    pub cases: u64,
    pub violations: u64,
    /// First few violating cases, for diagnosis.
    pub examples: Vec<String>,
}

impl SweepSummary {
    fn new(check: SweepCheck) -> Self {
        SweepSummary {
            check: check.name(),
            cases: 0,
            violations: 0,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

pub fn run_sweep(check: SweepCheck, max_n: i64, max_d: i64, max_k: i64) -> SweepSummary {
    assert!(max_n >= 1 && max_d >= 1 && max_k >= 1);
    match check {
        SweepCheck::Positivity => positivity(max_n, max_d, max_k),
        SweepCheck::IntervalConsistency => interval_consistency(max_n, max_d, max_k),
        SweepCheck::OracleAgreement => oracle_agreement(max_n, max_d, max_k),
    }
}

fn positivity(max_n: i64, max_d: i64, max_k: i64) -> SweepSummary {
    let mut summary = SweepSummary::new(SweepCheck::Positivity);
    for n in 2..=max_n {
        for d in 1..=max_d {
            for k in 1..=max_k {
                for wall in enumerate_walls(n, d, k).expect("n >= 2, k >= 1") {
                    for dec in &wall.decompositions {
                        summary.record(dec.c12 > 0 && dec.c21 > 0, || {
                            format!("({n},{d},{k}): {dec:?}")
                        });
                    }
                }
            }
        }
    }
    summary
}

fn interval_consistency(max_n: i64, max_d: i64, max_k: i64) -> SweepSummary {
    let mut summary = SweepSummary::new(SweepCheck::IntervalConsistency);
    for n in 1..=max_n {
        for d in -max_d..=max_d {
            for k in 0..=max_k {
                let interval = alpha_range(n, d, k);
                for p in 1..=16 {
                    for q in 1..=16 {
                        let alpha = Rational::new(p, q).expect("q >= 1");
                        let query = ModuliQuery {
                            n,
                            d,
                            k,
                            alpha: Some(alpha.clone()),
                        };
                        let direct = is_nonempty(&query).expect("alpha present");
                        summary.record(direct == interval.contains(&alpha), || {
                            format!(
                                "({n},{d},{k}) at alpha = {alpha}: criterion {direct}, \
                                 interval {interval}"
                            )
                        });
                    }
                }
            }
        }
    }
    summary
}

/// A parameter strictly below the first wall and strictly inside the
/// admissible range: the regime where the generic-position check is valid.
fn sub_wall_alpha(n: i64, d: i64, k: i64) -> Rational {
    let mut alpha = Rational::new(1, 4).expect("non-zero");
    if let Ok(walls) = enumerate_walls(n, d, k) {
        if let Some(first) = walls.first() {
            alpha = alpha.min(first.alpha.half());
        }
    }
    if k < n {
        let sup = Rational::new(d, n - k).expect("k < n");
        alpha = alpha.min(sup.half());
    }
    alpha
}

fn oracle_agreement(max_n: i64, max_d: i64, max_k: i64) -> SweepSummary {
    let mut summary = SweepSummary::new(SweepCheck::OracleAgreement);
    for n in 2..=max_n {
        for d in 1..=max_d {
            // k = d + 1 exercises the empty side: no subspace of that
            // dimension exists, and the criterion must agree.
            for k in 1..=(d + 1).min(max_k) {
                let alpha = sub_wall_alpha(n, d, k);
                let oracle = match GenericSystemModel::new(generic_polystable(n, d), k) {
                    Ok(model) => model
                        .is_stable_for_small_alpha(&alpha)
                        .expect("alpha positive"),
                    Err(StabilityError::TooManySections { .. }) => false,
                    Err(e) => panic!("generic model must be well-formed: {e}"),
                };
                let query = ModuliQuery {
                    n,
                    d,
                    k,
                    alpha: Some(alpha.clone()),
                };
                let theorem = is_nonempty(&query).expect("alpha present");
                summary.record(oracle == theorem, || {
                    format!(
                        "({n},{d},{k}) at alpha = {alpha}: oracle {oracle}, criterion {theorem}"
                    )
                });
            }
        }
    }
    summary
}

pub fn sweep_text(s: &SweepSummary) -> String {
    let mut out = format!(
        "check = {}\ncases = {}\nviolations = {}\n",
        s.check, s.cases, s.violations
    );
    for e in &s.examples {
        out.push_str("violation: ");
        out.push_str(e);
        out.push('\n');
    }
    out
}
