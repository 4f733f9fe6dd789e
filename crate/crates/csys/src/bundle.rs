//! Formal vector bundles on an elliptic curve.
//!
//! Every bundle decomposes as a direct sum of indecomposables, uniquely up
//! to order, and the indecomposables of fixed rank and degree form a family
//! parametrised by the curve itself. That makes a bundle a multiset of
//! `(rank, degree, twist)` triples, where the twist is an opaque label for
//! the parametrising point: the calculus below only ever needs to know
//! whether two labels coincide, and whether a degree-0 summand is the
//! distinguished one with a section.
//!
//! Cohomology of an indecomposable summand on a genus-1 curve:
//!
//! - degree e > 0:  h0 = e, h1 = 0;
//! - degree e = 0:  h0 = h1 = 1 for the trivially-twisted summand of each
//!   rank, h0 = h1 = 0 for every other twist;
//! - degree e < 0:  h0 = 0, h1 = -e.
//!
//! In all cases h0 - h1 = degree (Riemann-Roch). Stability facts used
//! throughout: every indecomposable is semistable, and it is stable exactly
//! when rank and degree are coprime.

use serde::Serialize;

use crate::arith::{gcd, Rational};

/// The reserved twist label marking, in degree 0, the unique indecomposable
/// with a non-zero section.
pub const TRIVIAL_TWIST: &str = "trivial";

/// An indecomposable summand, identified by rank, degree and twist label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Summand {
    pub rank: i64,
    pub degree: i64,
    pub twist: String,
}

impl Summand {
    pub fn new(rank: i64, degree: i64, twist: impl Into<String>) -> Self {
        assert!(rank >= 1, "summand rank must be >= 1");
        Summand {
            rank,
            degree,
            twist: twist.into(),
        }
    }

    pub fn is_trivially_twisted(&self) -> bool {
        self.twist == TRIVIAL_TWIST
    }

    /// Dimension of the space of global sections.
    pub fn h0(&self) -> i64 {
        if self.degree > 0 {
            self.degree
        } else if self.degree == 0 && self.is_trivially_twisted() {
            1
        } else {
            0
        }
    }

    /// Dimension of first cohomology; satisfies `h0 - h1 = degree`.
    pub fn h1(&self) -> i64 {
        self.h0() - self.degree
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree, self.rank).expect("rank >= 1")
    }

    /// An indecomposable is stable exactly when rank and degree are coprime.
    pub fn is_stable(&self) -> bool {
        gcd(self.rank, self.degree) == 1
    }
}

/// Whether an indecomposable is generated by its global sections.
///
/// Generation is guaranteed when degree > rank and impossible without
/// sections; in the band 0 < degree <= rank it depends on data this model
/// does not carry, so the answer is left undetermined rather than guessed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GlobalGeneration {
    Generated,
    NotGenerated,
    Unknown,
}

pub fn global_generation(s: &Summand) -> GlobalGeneration {
    if s.degree > s.rank {
        GlobalGeneration::Generated
    } else if s.degree <= 0 {
        GlobalGeneration::NotGenerated
    } else {
        GlobalGeneration::Unknown
    }
}

/// Lower bound on the automorphism-group dimension of a decomposed bundle,
/// and whether the bound is attained.
///
/// A sum of `l` indecomposables always has at least an `l`-dimensional
/// automorphism group (scalars on each summand); equality holds exactly for
/// polystable bundles with pairwise non-isomorphic summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AutDimStatus {
    pub lower_bound: i64,
    pub minimal: bool,
}

/// A formal bundle: a non-empty multiset of indecomposable summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalBundle {
    summands: Vec<Summand>,
}

impl FormalBundle {
    pub fn new(summands: Vec<Summand>) -> Self {
        assert!(!summands.is_empty(), "a bundle has at least one summand");
        FormalBundle { summands }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn rank(&self) -> i64 {
        self.summands.iter().map(|s| s.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().map(|s| s.degree).sum()
    }

    pub fn h0(&self) -> i64 {
        self.summands.iter().map(|s| s.h0()).sum()
    }

    pub fn h1(&self) -> i64 {
        self.summands.iter().map(|s| s.h1()).sum()
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree(), self.rank()).expect("rank >= 1")
    }

    /// True iff all summands share one slope (indecomposables are always
    /// semistable, so a direct sum is semistable exactly in that case).
    pub fn is_semistable(&self) -> bool {
        let first = self.summands[0].slope();
        self.summands.iter().all(|s| s.slope() == first)
    }

    /// True iff the bundle is a single stable indecomposable.
    pub fn is_stable(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].is_stable()
    }

    /// True iff every summand is stable and all slopes agree.
    pub fn is_polystable(&self) -> bool {
        self.summands.iter().all(Summand::is_stable) && self.is_semistable()
    }

    pub fn aut_dim_status(&self) -> AutDimStatus {
        let l = self.summands.len();
        let pairwise_distinct =
            (0..l).all(|i| (i + 1..l).all(|j| self.summands[i] != self.summands[j]));
        AutDimStatus {
            lower_bound: l as i64,
            minimal: self.is_polystable() && pairwise_distinct,
        }
    }
}

/// The generic semistable bundle of rank `n` and degree `d`: a direct sum of
/// `h = gcd(n, d)` stable summands of rank `n/h` and degree `d/h` with
/// pairwise distinct twists (`h = n` when `d = 0`).
pub fn generic_polystable(n: i64, d: i64) -> FormalBundle {
    assert!(n >= 1, "rank must be >= 1");
    let h = if d == 0 { n } else { gcd(n, d) };
    let summands = (0..h)
        .map(|i| Summand::new(n / h, d / h, format!("p{i}")))
        .collect();
    FormalBundle::new(summands)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(rank: i64, degree: i64, twist: &str) -> Summand {
        Summand::new(rank, degree, twist)
    }

    #[test]
    fn h0_positive_degree_equals_degree() {
        assert_eq!(s(1, 3, "p").h0(), 3);
        assert_eq!(s(3, 5, "p").h0(), 5);
    }

    #[test]
    fn h0_degree_zero_depends_on_twist() {
        assert_eq!(s(2, 0, TRIVIAL_TWIST).h0(), 1);
        assert_eq!(s(2, 0, "p").h0(), 0);
    }

    #[test]
    fn h0_negative_degree_vanishes() {
        // Cross-check: chi = h0 - h1 must equal the degree, and sections of
        // a negative-degree indecomposable dualize to h1 of the positive
        // side, which is 0.
        let neg = s(2, -3, "p");
        assert_eq!(neg.h0(), 0);
        assert_eq!(neg.h0() - neg.h1(), -3);
    }

    #[test]
    fn h1_cases() {
        assert_eq!(s(1, 3, "p").h1(), 0);
        assert_eq!(s(2, 0, TRIVIAL_TWIST).h1(), 1);
        assert_eq!(s(2, -3, "p").h1(), 3);
    }

    #[test]
    fn riemann_roch_all_small_summands() {
        for rank in 1..=8 {
            for degree in -8..=8 {
                for twist in [TRIVIAL_TWIST, "q"] {
                    let sd = s(rank, degree, twist);
                    assert_eq!(sd.h0() - sd.h1(), degree, "{sd:?}");
                    assert!(sd.h0() >= 0 && sd.h1() >= 0);
                }
            }
        }
    }

    #[test]
    fn h0_is_additive() {
        let e = FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "q")]);
        assert_eq!(e.h0(), 2);
        assert_eq!(FormalBundle::new(vec![s(3, 5, "p")]).h0(), 5);
        let mixed = FormalBundle::new(vec![s(2, 0, TRIVIAL_TWIST), s(1, -2, "p")]);
        assert_eq!(mixed.h0(), 1);
    }

    #[test]
    fn slope_is_degree_over_rank() {
        assert_eq!(
            FormalBundle::new(vec![s(3, 5, "p")]).slope(),
            Rational::new(5, 3).unwrap()
        );
        assert_eq!(
            FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "q")]).slope(),
            Rational::one()
        );
        assert_eq!(
            FormalBundle::new(vec![s(2, -3, "p")]).slope(),
            Rational::new(-3, 2).unwrap()
        );
    }

    #[test]
    fn semistability_is_equality_of_slopes() {
        assert!(FormalBundle::new(vec![s(5, 3, "p")]).is_semistable());
        assert!(!FormalBundle::new(vec![s(1, 1, "p"), s(1, 2, "q")]).is_semistable());
        assert!(FormalBundle::new(vec![s(1, 1, "p"), s(2, 2, "q")]).is_semistable());
    }

    #[test]
    fn stability_is_coprimality() {
        assert!(FormalBundle::new(vec![s(3, 2, "p")]).is_stable());
        assert!(!FormalBundle::new(vec![s(2, 4, "p")]).is_stable());
        assert!(!FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "q")]).is_stable());
    }

    #[test]
    fn polystability() {
        assert!(FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "q")]).is_polystable());
        assert!(!FormalBundle::new(vec![s(2, 0, TRIVIAL_TWIST)]).is_polystable());
        assert!(!FormalBundle::new(vec![s(1, 1, "p"), s(2, 1, "q")]).is_polystable());
    }

    #[test]
    fn aut_dim_minimality() {
        let distinct = FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "q")]);
        assert_eq!(
            distinct.aut_dim_status(),
            AutDimStatus {
                lower_bound: 2,
                minimal: true
            }
        );
        let repeated = FormalBundle::new(vec![s(1, 1, "p"), s(1, 1, "p")]);
        assert_eq!(
            repeated.aut_dim_status(),
            AutDimStatus {
                lower_bound: 2,
                minimal: false
            }
        );
        let f2 = FormalBundle::new(vec![s(2, 0, TRIVIAL_TWIST)]);
        assert_eq!(
            f2.aut_dim_status(),
            AutDimStatus {
                lower_bound: 1,
                minimal: false
            }
        );
    }

    #[test]
    fn global_generation_tri_state() {
        assert_eq!(
            global_generation(&s(2, 5, "p")),
            GlobalGeneration::Generated
        );
        assert_eq!(
            global_generation(&s(3, -1, "p")),
            GlobalGeneration::NotGenerated
        );
        // A degree-1 line bundle has a one-dimensional space of sections
        // vanishing at a point; generation is genuinely undecided here.
        assert_eq!(global_generation(&s(1, 1, "p")), GlobalGeneration::Unknown);
    }

    #[test]
    fn generic_polystable_shapes() {
        let e = generic_polystable(4, 2);
        let parts = e.summands();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|x| x.rank == 2 && x.degree == 1));
        assert_ne!(parts[0].twist, parts[1].twist);

        assert_eq!(generic_polystable(3, 2).summands().len(), 1);

        let split = generic_polystable(2, 2);
        assert_eq!(split.summands().len(), 2);
        assert!(split
            .summands()
            .iter()
            .all(|x| x.rank == 1 && x.degree == 1));
    }

    #[test]
    fn generic_polystable_is_polystable_and_minimal() {
        for n in 1..=12 {
            for d in -6..=12 {
                let e = generic_polystable(n, d);
                assert!(e.is_polystable(), "n = {n}, d = {d}");
                assert!(e.aut_dim_status().minimal, "n = {n}, d = {d}");
                assert_eq!(e.rank(), n);
                assert_eq!(e.degree(), d);
            }
        }
    }

    #[test]
    fn generic_polystable_sections_count_degree() {
        for n in 1..=12 {
            for d in 1..=12 {
                assert_eq!(generic_polystable(n, d).h0(), d, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn stability_implications() {
        // stable => polystable => semistable over all one- and two-summand
        // bundles in a small box.
        let mut bundles = Vec::new();
        for r in 1..=6 {
            for d in -6..=6 {
                for twist in ["p", TRIVIAL_TWIST] {
                    bundles.push(FormalBundle::new(vec![s(r, d, twist)]));
                }
            }
        }
        for r1 in 1..=6 {
            for d1 in -6..=6 {
                for r2 in 1..=6 {
                    for d2 in -6..=6 {
                        bundles.push(FormalBundle::new(vec![s(r1, d1, "p"), s(r2, d2, "q")]));
                    }
                }
            }
        }
        for e in &bundles {
            if e.is_stable() {
                assert!(e.is_polystable(), "{e:?}");
            }
            if e.is_polystable() {
                assert!(e.is_semistable(), "{e:?}");
            }
        }
    }
}
