//! Report assembly for the command-line front end: one aggregate view per
//! query, with matching text and JSON renderings. JSON output is a pure
//! function of the query — struct field order fixes the key order and all
//! rationals print in lowest terms — so identical flags produce identical
//! bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{gcd, Rational};
use crate::moduli::{
    alpha_range, brill_noether, generic_shape, is_nonempty, AlphaInterval, GenericShape,
    ModuliError, ModuliQuery,
};
use crate::picard::{iso_test, picard_invariants, IsoVerdict, PicardInvariants, Verdict};
use crate::stability::SubsystemCandidate;
use crate::walls::{enumerate_walls, FlipSide, Wall};

/// Echo of the query a report answers.
#[derive(Clone, Debug, Serialize)]
pub struct QueryEcho {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
}

/// Chern data reported when the query satisfies the Grassmannian-bundle
/// hypotheses.
#[derive(Clone, Debug, Serialize)]
pub struct PicardReport {
    pub invariants: PicardInvariants,
    pub iso: IsoVerdict,
}

/// Everything the tool can say about one type `(n, d, k)`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub query: QueryEcho,
    pub nonempty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<i64>,
    pub interval: AlphaInterval,
    pub walls: Vec<Wall>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<GenericShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub picard: Option<PicardReport>,
    pub notes: Vec<String>,
}

/// A parameter strictly inside the interval, for alpha-independent questions
/// asked without an explicit alpha.
fn interval_witness(interval: &AlphaInterval) -> Option<Rational> {
    match interval {
        AlphaInterval::Empty => None,
        AlphaInterval::All => Some(Rational::one()),
        AlphaInterval::Open { sup } => Some(match sup.as_finite() {
            Some(s) => s.half(),
            None => Rational::one(),
        }),
    }
}

fn grassmannian_hypotheses_hold(n: i64, d: i64, k: i64) -> bool {
    0 < k && k < n && k < d && gcd(n, d) == 1 && gcd(n - k, d) == 1
}

/// Builds the full report. When `alpha` is given, non-emptiness is decided
/// at that parameter; otherwise it means "non-empty for some parameter".
pub fn analyze(query: &ModuliQuery) -> Result<AnalysisReport, ModuliError> {
    let interval = alpha_range(query.n, query.d, query.k);
    let nonempty = match query.alpha {
        Some(_) => is_nonempty(query)?,
        None => !interval.is_empty(),
    };
    let dimension = nonempty.then(|| brill_noether(query.d, query.k));
    let walls = if query.n >= 2 && query.k >= 1 {
        enumerate_walls(query.n, query.d, query.k).expect("preconditions checked")
    } else {
        Vec::new()
    };
    let shape = if nonempty {
        let witness = query.alpha.clone().or_else(|| interval_witness(&interval));
        let witnessed = ModuliQuery {
            alpha: witness,
            ..query.clone()
        };
        Some(generic_shape(&witnessed)?)
    } else {
        None
    };
    let picard = if grassmannian_hypotheses_hold(query.n, query.d, query.k) {
        Some(PicardReport {
            invariants: picard_invariants(query.n, query.d).expect("hypotheses checked"),
            iso: iso_test(query.n, query.d, query.k).expect("hypotheses checked"),
        })
    } else {
        None
    };

    let mut notes = Vec::new();
    if query.k == 0 {
        notes.push(
            "with k = 0 the stability parameter is irrelevant; the space is the moduli of \
             stable bundles"
                .to_string(),
        );
    } else if query.n == 1 {
        notes.push("for rank 1 the space is the same for every positive parameter".to_string());
    }
    if interval.is_empty() {
        notes.push("the moduli space is empty for every parameter".to_string());
    }
    if !walls.is_empty() {
        notes.push(
            "flip dimensions are model values: they assume the generic vanishing of the \
             obstruction spaces, which holds in all verified examples"
                .to_string(),
        );
        notes.push(
            "the spaces on either side of a critical value are smooth models of one limit \
             space of semistable classes; crossing exchanges the two extension loci"
                .to_string(),
        );
    }

    Ok(AnalysisReport {
        query: QueryEcho {
            n: query.n,
            d: query.d,
            k: query.k,
            alpha: query.alpha.clone(),
        },
        nonempty,
        dimension,
        interval,
        walls,
        shape,
        picard,
        notes,
    })
}

pub fn shape_text(shape: &GenericShape) -> String {
    match shape {
        GenericShape::StableBundleNoSections => {
            "stable bundle with zero-dimensional section space".to_string()
        }
        GenericShape::LineBundleSystem => "line bundle with a chosen space of sections".to_string(),
        GenericShape::ExtensionByTrivial {
            sections,
            quotient_rank,
            quotient_degree,
        } => format!(
            "extension 0 -> O^{sections} -> E -> G -> 0, G polystable of rank \
             {quotient_rank} and degree {quotient_degree}"
        ),
        GenericShape::TorsionQuotient { length } => {
            format!("0 -> O^n -> E -> T -> 0, T torsion of length {length}")
        }
        GenericShape::KernelPresentation {
            kernel_rank,
            kernel_degree,
        } => format!(
            "presentation 0 -> H -> O^k -> E -> 0, H polystable of rank {kernel_rank} \
             and degree {kernel_degree}"
        ),
    }
}

pub fn walls_text(walls: &[Wall]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "critical values: {}", walls.len());
    for wall in walls {
        let _ = writeln!(
            out,
            "alpha = {}  min_c12 = {}  min_c21 = {}  flip_dims = {}/{}",
            wall.alpha,
            wall.min_c12,
            wall.min_c21,
            wall.flip_dim(FlipSide::Minus),
            wall.flip_dim(FlipSide::Plus),
        );
        for dec in &wall.decompositions {
            let _ = writeln!(
                out,
                "  ({},{},{}) + ({},{},{})  c12 = {}  c21 = {}",
                dec.n1, dec.d1, dec.k1, dec.n2, dec.d2, dec.k2, dec.c12, dec.c21
            );
        }
    }
    out
}

pub fn picard_text(inv: &PicardInvariants) -> String {
    format!(
        "n = {}\nd = {}\nr = {}\ns = {}\nf2_coeff = {}\npicard_rank = {}\nc1_coeff = {}\n",
        inv.n, inv.d, inv.r, inv.s, inv.f2_coeff, inv.picard_rank, inv.c1_coeff
    )
}

pub fn iso_text(v: &IsoVerdict) -> String {
    format!(
        "s = {}\ns_prime = {}\nsum_mod_d = {}\nverdict = {}\n",
        v.s_mod_d,
        v.s_prime_mod_d,
        v.sum_mod_d,
        verdict_text(v.verdict),
    )
}

pub fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::NonIsomorphic => "NonIsomorphic",
        Verdict::Inconclusive => "Inconclusive",
    }
}

pub fn report_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let alpha = r
        .query
        .alpha
        .as_ref()
        .map(|a| format!(", alpha = {a}"))
        .unwrap_or_default();
    let _ = writeln!(
        out,
        "type (n, d, k) = ({}, {}, {}){alpha}",
        r.query.n, r.query.d, r.query.k
    );
    let _ = writeln!(out, "nonempty: {}", r.nonempty);
    if let Some(dim) = r.dimension {
        let _ = writeln!(out, "dimension: {dim}");
    }
    let _ = writeln!(out, "alpha interval: {}", r.interval);
    out.push_str(&walls_text(&r.walls));
    if let Some(shape) = &r.shape {
        let _ = writeln!(out, "generic shape: {}", shape_text(shape));
    }
    if let Some(p) = &r.picard {
        let _ = writeln!(
            out,
            "picard: r = {}, s = {}, f2_coeff = {}, picard_rank = {}",
            p.invariants.r, p.invariants.s, p.invariants.f2_coeff, p.invariants.picard_rank
        );
        let _ = writeln!(
            out,
            "iso: s = {}, s_prime = {}, sum_mod_d = {}, verdict = {}",
            p.iso.s_mod_d,
            p.iso.s_prime_mod_d,
            p.iso.sum_mod_d,
            verdict_text(p.iso.verdict),
        );
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

/// Output of the generic-position stability check.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub alpha: Rational,
    pub bundle: crate::bundle::FormalBundle,
    pub candidates: Vec<SubsystemCandidate>,
    pub stable: bool,
}

pub fn verify_text(v: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "generic polystable model for (n, d) = ({}, {}): {} summand(s)",
        v.n,
        v.d,
        v.bundle.summands().len()
    );
    for s in v.bundle.summands() {
        let _ = writeln!(
            out,
            "  summand rank {} degree {} twist {}",
            s.rank, s.degree, s.twist
        );
    }
    let _ = writeln!(out, "candidates: {}", v.candidates.len());
    for c in &v.candidates {
        let _ = writeln!(
            out,
            "  subset {:?}: rank {}, degree {}, generic_overlap {}",
            c.subset, c.rank, c.degree, c.generic_overlap
        );
    }
    let _ = writeln!(out, "alpha = {}", v.alpha);
    let _ = writeln!(out, "stable: {}", v.stable);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(n: i64, d: i64, k: i64) -> ModuliQuery {
        ModuliQuery::new(n, d, k).unwrap()
    }

    #[test]
    fn analyze_aggregates_the_single_wall_example() {
        let r = analyze(&query(4, 3, 2)).unwrap();
        assert!(r.nonempty);
        assert_eq!(r.dimension, Some(3));
        assert_eq!(r.interval.to_string(), "(0, 3/2)");
        assert_eq!(r.walls.len(), 1);
        assert_eq!(r.walls[0].alpha.to_string(), "1/2");
        assert_eq!(r.walls[0].flip_dim(FlipSide::Minus), 2);
        assert_eq!(r.walls[0].flip_dim(FlipSide::Plus), 2);
        assert_eq!(
            r.shape,
            Some(GenericShape::ExtensionByTrivial {
                sections: 2,
                quotient_rank: 2,
                quotient_degree: 3
            })
        );
        // (4, 3, 2) satisfies the Grassmannian hypotheses.
        let p = r.picard.unwrap();
        assert_eq!((p.invariants.r, p.invariants.s), (3, 2));
        assert_eq!(p.iso.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn analyze_empty_type() {
        let r = analyze(&query(2, 2, 2)).unwrap();
        assert!(!r.nonempty);
        assert_eq!(r.dimension, None);
        assert_eq!(r.interval, AlphaInterval::Empty);
        assert!(r.walls.is_empty());
        assert!(r.shape.is_none());
        assert!(r.picard.is_none());
    }

    #[test]
    fn analyze_respects_explicit_alpha() {
        // 2 is outside (0, 3/2), so the space at that parameter is empty
        // even though the interval is not.
        let r = analyze(&query(4, 3, 2).with_alpha(Rational::from_integer(2))).unwrap();
        assert!(!r.nonempty);
        assert_eq!(r.dimension, None);
        assert!(!r.interval.is_empty());
    }

    #[test]
    fn analyze_picard_verdict_for_5_7_1() {
        let r = analyze(&query(5, 7, 1)).unwrap();
        let p = r.picard.unwrap();
        assert_eq!(p.iso.verdict, Verdict::NonIsomorphic);
        assert_eq!(p.iso.sum_mod_d, 2);
    }

    #[test]
    fn dimension_present_iff_nonempty() {
        for n in 1..=5 {
            for d in 0..=5 {
                for k in 0..=5 {
                    let r = analyze(&query(n, d, k)).unwrap();
                    assert_eq!(r.dimension.is_some(), r.nonempty);
                    assert_eq!(r.shape.is_some(), r.nonempty);
                }
            }
        }
    }

    #[test]
    fn text_carries_the_same_numbers_as_json() {
        let r = analyze(&query(4, 3, 2)).unwrap();
        let text = report_text(&r);
        let json: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert!(text.contains(&format!("dimension: {}", json["dimension"])));
        assert!(text.contains(&format!(
            "alpha interval: (0, {})",
            json["interval"]["sup"].as_str().unwrap()
        )));
        assert!(text.contains(&format!(
            "alpha = {}",
            json["walls"][0]["alpha"].as_str().unwrap()
        )));
        assert!(text.contains(&format!(
            "verdict = {}",
            json["picard"]["iso"]["verdict"].as_str().unwrap()
        )));
    }
}
