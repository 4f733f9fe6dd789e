//! Critical values of the stability parameter and the flips across them.
//!
//! For `n >= 2` and `k >= 1`, the moduli space `G(alpha; n, d, k)` only
//! changes at finitely many critical values. Each is induced by a numeric
//! decomposition `(n1, d1, k1) + (n2, d2, k2)` of `(n, d, k)` with
//!
//! ```text
//! k1/n1 > k2/n2,   d1/n1 < d2/n2,
//! alpha = (n1 d2 - n2 d1) / (n2 k1 - n1 k2) > 0,   (n - k) alpha < d,
//! ```
//!
//! and both factor types must themselves admit stable systems at parameters
//! arbitrarily close below `alpha` — operationally: each factor's parameter
//! interval is non-empty and `alpha` is at most its supremum.
//!
//! The enumeration scans `d1` in `[0, d]` only: a factor carrying sections
//! needs non-negative degree for its moduli to be non-empty, and the factor
//! with `k_i = 0` is forced to positive degree by the slope inequality, so
//! no decomposition with `d1` outside `[0, d]` can pass the filters.
//!
//! Crossing a critical value removes a locus fibred by extensions of the
//! second factor by the first and inserts the reversed one. The integers
//! `C12` and `C21` are the extension-space dimensions governing those loci:
//!
//! ```text
//! C12 = -d2 n1 + d1 n2 + k1 d2 - k1 k2,
//! C21 = -d1 n2 + d2 n1 + k2 d1 - k1 k2.
//! ```

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::Rational;
use crate::moduli::{alpha_range, brill_noether, AlphaInterval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WallError {
    #[error("walls undefined for this type: requires n >= 2 and k >= 1")]
    Undefined,
}

/// Side of a flip: `Minus` is the locus removed as the parameter increases
/// through the critical value, `Plus` the locus inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipSide {
    Minus,
    Plus,
}

/// One decomposition `(n1, d1, k1) | (n2, d2, k2)` inducing a critical
/// value, with its flip invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallDecomposition {
    pub n1: i64,
    pub d1: i64,
    pub k1: i64,
    pub n2: i64,
    pub d2: i64,
    pub k2: i64,
    pub c12: i64,
    pub c21: i64,
}

fn bilinear(terms: [(i64, i64); 3], kk: (i64, i64)) -> i64 {
    let mut acc: i128 = 0;
    for (a, b) in terms {
        acc += (a as i128) * (b as i128);
    }
    acc -= (kk.0 as i128) * (kk.1 as i128);
    i64::try_from(acc).expect("flip invariant overflows i64")
}

/// `C12 = -d2 n1 + d1 n2 + k1 d2 - k1 k2`.
pub fn c12(n1: i64, d1: i64, k1: i64, n2: i64, d2: i64, k2: i64) -> i64 {
    bilinear([(-d2, n1), (d1, n2), (k1, d2)], (k1, k2))
}

/// `C21 = -d1 n2 + d2 n1 + k2 d1 - k1 k2`.
pub fn c21(n1: i64, d1: i64, k1: i64, n2: i64, d2: i64, k2: i64) -> i64 {
    bilinear([(-d1, n2), (d2, n1), (k2, d1)], (k1, k2))
}

impl WallDecomposition {
    pub fn new(n1: i64, d1: i64, k1: i64, n2: i64, d2: i64, k2: i64) -> Self {
        WallDecomposition {
            n1,
            d1,
            k1,
            n2,
            d2,
            k2,
            c12: c12(n1, d1, k1, n2, d2, k2),
            c21: c21(n1, d1, k1, n2, d2, k2),
        }
    }

    /// The critical value induced by this decomposition.
    pub fn alpha(&self) -> Rational {
        let num = (self.n1 as i128) * (self.d2 as i128) - (self.n2 as i128) * (self.d1 as i128);
        let den = (self.n2 as i128) * (self.k1 as i128) - (self.n1 as i128) * (self.k2 as i128);
        Rational::new(num, den).expect("denominator positive for admissible decompositions")
    }

    /// Dimension of the flip locus modelled as the projectivized extension
    /// space over the product of the two factor moduli. This assumes the
    /// generic vanishing of the obstruction spaces; the report layer labels
    /// it a model dimension.
    pub fn flip_locus_dim(&self, side: FlipSide) -> i64 {
        let ext = match side {
            FlipSide::Minus => self.c21,
            FlipSide::Plus => self.c12,
        };
        brill_noether(self.d1, self.k1) + brill_noether(self.d2, self.k2) + ext - 1
    }

    /// Redundant cross-check on factor section counts: `k1 <= d1` and
    /// `k2 < d2`. Every decomposition surviving the non-emptiness filters
    /// satisfies this; the property suite verifies rather than assumes it.
    pub fn section_bounds_hold(&self) -> bool {
        self.k1 <= self.d1 && self.k2 < self.d2
    }
}

/// A critical value together with every decomposition inducing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub alpha: Rational,
    pub decompositions: Vec<WallDecomposition>,
    pub min_c12: i64,
    pub min_c21: i64,
}

impl Wall {
    fn from_parts(alpha: Rational, decompositions: Vec<WallDecomposition>) -> Self {
        debug_assert!(!decompositions.is_empty());
        debug_assert!(decompositions.iter().all(|w| w.alpha() == alpha));
        let min_c12 = decompositions.iter().map(|w| w.c12).min().unwrap();
        let min_c21 = decompositions.iter().map(|w| w.c21).min().unwrap();
        Wall {
            alpha,
            decompositions,
            min_c12,
            min_c21,
        }
    }

    /// Model dimension of the flip locus on one side: the union over all
    /// decompositions of the wall, so the maximum of the per-decomposition
    /// dimensions.
    pub fn flip_dim(&self, side: FlipSide) -> i64 {
        self.decompositions
            .iter()
            .map(|w| w.flip_locus_dim(side))
            .max()
            .expect("non-empty")
    }
}

impl Serialize for Wall {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct FlipDims {
            minus: i64,
            plus: i64,
        }
        let mut s = serializer.serialize_struct("Wall", 5)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("decompositions", &self.decompositions)?;
        s.serialize_field("min_c12", &self.min_c12)?;
        s.serialize_field("min_c21", &self.min_c21)?;
        s.serialize_field(
            "flip_dims",
            &FlipDims {
                minus: self.flip_dim(FlipSide::Minus),
                plus: self.flip_dim(FlipSide::Plus),
            },
        )?;
        s.end()
    }
}

/// `alpha` lies in the closure of the factor's admissible interval: walls
/// need the factor stable just below `alpha`, so the supremum itself passes.
fn factor_admits(n: i64, d: i64, k: i64, alpha: &Rational) -> bool {
    match alpha_range(n, d, k) {
        AlphaInterval::Empty => false,
        AlphaInterval::All => true,
        AlphaInterval::Open { sup } => sup >= *alpha,
    }
}

/// All critical values of `(n, d, k)`, sorted increasing, each carrying its
/// full list of inducing decompositions in lexicographic order.
pub fn enumerate_walls(n: i64, d: i64, k: i64) -> Result<Vec<Wall>, WallError> {
    if n < 2 || k < 1 {
        return Err(WallError::Undefined);
    }
    let mut grouped: BTreeMap<Rational, Vec<WallDecomposition>> = BTreeMap::new();
    let upper = Rational::from_integer(d);
    let weight = Rational::from_integer(n - k);
    for n1 in 1..n {
        let n2 = n - n1;
        for k1 in 0..=k {
            let k2 = k - k1;
            // k1/n1 > k2/n2, which is also positivity of the denominator.
            if (n2 as i128) * (k1 as i128) - (n1 as i128) * (k2 as i128) <= 0 {
                continue;
            }
            for d1 in 0..=d {
                let d2 = d - d1;
                // d1/n1 < d2/n2
                if (d1 as i128) * (n2 as i128) >= (d2 as i128) * (n1 as i128) {
                    continue;
                }
                let dec = WallDecomposition::new(n1, d1, k1, n2, d2, k2);
                let alpha = dec.alpha();
                if !alpha.is_positive() {
                    continue;
                }
                // (n - k) alpha < d
                if &weight * &alpha >= upper {
                    continue;
                }
                if !factor_admits(n1, d1, k1, &alpha) || !factor_admits(n2, d2, k2, &alpha) {
                    continue;
                }
                grouped.entry(alpha).or_default().push(dec);
            }
        }
    }
    Ok(grouped
        .into_iter()
        .map(|(alpha, mut decs)| {
            decs.sort_by_key(|w| (w.n1, w.d1, w.k1));
            Wall::from_parts(alpha, decs)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn single_wall_for_4_3_2() {
        let walls = enumerate_walls(4, 3, 2).unwrap();
        assert_eq!(walls.len(), 1);
        let wall = &walls[0];
        assert_eq!(wall.alpha, rat(1, 2));
        assert_eq!(
            wall.decompositions,
            vec![WallDecomposition::new(3, 2, 2, 1, 1, 0)]
        );
        assert_eq!(wall.min_c12, 1);
        assert_eq!(wall.min_c21, 1);
    }

    #[test]
    fn no_walls_for_5_3_2() {
        assert!(enumerate_walls(5, 3, 2).unwrap().is_empty());
    }

    #[test]
    fn no_walls_for_6_2_1() {
        assert!(enumerate_walls(6, 2, 1).unwrap().is_empty());
    }

    #[test]
    fn single_wall_for_7_3_2() {
        let walls = enumerate_walls(7, 3, 2).unwrap();
        assert_eq!(walls.len(), 1);
        assert_eq!(walls[0].alpha, rat(1, 4));
        assert_eq!(
            walls[0].decompositions,
            vec![WallDecomposition::new(5, 2, 2, 2, 1, 0)]
        );
    }

    #[test]
    fn full_section_types_have_no_walls() {
        for n in 2..=9 {
            for d in 1..=9 {
                if gcd(n, d) == 1 {
                    assert!(
                        enumerate_walls(n, d, d).unwrap().is_empty(),
                        "n = {n}, d = {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn walls_require_rank_two_and_sections() {
        assert_eq!(enumerate_walls(1, 3, 2), Err(WallError::Undefined));
        assert_eq!(enumerate_walls(4, 3, 0), Err(WallError::Undefined));
    }

    #[test]
    fn flip_invariants_of_the_worked_decomposition() {
        let dec = WallDecomposition::new(3, 2, 2, 1, 1, 0);
        assert_eq!(dec.c12, 1); // -1*3 + 2*1 + 2*1 - 2*0
        assert_eq!(dec.c21, 1); // -2*1 + 1*3 + 0*2 - 2*0
        assert_eq!(dec.alpha(), rat(1, 2));
        assert_eq!(dec.flip_locus_dim(FlipSide::Minus), 2);
        assert_eq!(dec.flip_locus_dim(FlipSide::Plus), 2);
        assert!(dec.section_bounds_hold());
    }

    #[test]
    fn extension_count_one_means_product_dimension() {
        // With c21 = 1 the projectivized extension space is a point, so the
        // minus locus has the dimension of the product of factor moduli.
        let dec = WallDecomposition::new(3, 2, 2, 1, 1, 0);
        assert_eq!(
            dec.flip_locus_dim(FlipSide::Minus),
            brill_noether(2, 2) + brill_noether(1, 0)
        );
    }

    #[test]
    fn c21_matches_slope_difference_identity() {
        // C21 = n1 n2 (d2/n2 - d1/n1) + k2 (d1 - k1), as rationals; in the
        // k2 = 0, d1 = k1 case it reduces to the positive slope-difference
        // term alone.
        for n1 in 1..=5 {
            for n2 in 1..=5 {
                for d1 in 0..=5 {
                    for d2 in 0..=5 {
                        for k1 in 0..=4 {
                            for k2 in 0..=4 {
                                let direct = c21(n1, d1, k1, n2, d2, k2);
                                let slope_diff = &rat(d2, n2) - &rat(d1, n1);
                                let identity = &Rational::from_integer(n1 * n2) * &slope_diff
                                    + Rational::from_integer(k2 * (d1 - k1));
                                assert_eq!(Rational::from_integer(direct), identity);
                                if k2 == 0 && d1 == k1 && rat(d1, n1) < rat(d2, n2) {
                                    assert!(direct > 0);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn section_bounds_examples() {
        assert!(WallDecomposition::new(3, 2, 2, 1, 1, 0).section_bounds_hold());
        // k1 > d1 violates the first bound.
        assert!(!WallDecomposition::new(2, 1, 2, 2, 2, 0).section_bounds_hold());
        // k2 = d2 violates the strict second bound.
        assert!(!WallDecomposition::new(2, 2, 2, 1, 1, 1).section_bounds_hold());
    }

    #[test]
    fn no_surviving_factor_is_the_degree_zero_pencil() {
        // (1, 0, 1) as a factor forces alpha = d/(n - k), which the strict
        // range bound excludes.
        for n in 2..=7 {
            for d in 0..=7 {
                for k in 1..=7 {
                    for wall in enumerate_walls(n, d, k).unwrap() {
                        for dec in &wall.decompositions {
                            assert_ne!((dec.n1, dec.d1, dec.k1), (1, 0, 1));
                            assert_ne!((dec.n2, dec.d2, dec.k2), (1, 0, 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn positivity_and_filter_agreement_small_sweep() {
        for n in 2..=8 {
            for d in 1..=8 {
                for k in 1..=8 {
                    for wall in enumerate_walls(n, d, k).unwrap() {
                        for dec in &wall.decompositions {
                            assert!(dec.c12 > 0, "C12 <= 0 at ({n},{d},{k}): {dec:?}");
                            assert!(dec.c21 > 0, "C21 <= 0 at ({n},{d},{k}): {dec:?}");
                            assert!(
                                dec.section_bounds_hold(),
                                "section bounds fail at ({n},{d},{k}): {dec:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn codim_of_minus_locus_is_at_least_min_c12() {
        for n in 2..=8 {
            for d in 1..=8 {
                for k in 1..=8 {
                    let ambient = brill_noether(d, k);
                    for wall in enumerate_walls(n, d, k).unwrap() {
                        for dec in &wall.decompositions {
                            let codim = ambient - dec.flip_locus_dim(FlipSide::Minus);
                            assert!(
                                codim >= wall.min_c12,
                                "codim {codim} < min C12 {} at ({n},{d},{k})",
                                wall.min_c12
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn walls_sorted_and_consistent() {
        for n in 2..=8 {
            for d in 1..=8 {
                for k in 1..=8 {
                    let walls = enumerate_walls(n, d, k).unwrap();
                    for pair in walls.windows(2) {
                        assert!(pair[0].alpha < pair[1].alpha);
                    }
                    for wall in &walls {
                        assert!(wall.alpha.is_positive());
                        for dec in &wall.decompositions {
                            assert_eq!(dec.alpha(), wall.alpha);
                            assert_eq!(dec.n1 + dec.n2, n);
                            assert_eq!(dec.d1 + dec.d2, d);
                            assert_eq!(dec.k1 + dec.k2, k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_two_one_section_never_has_walls() {
        for n in 2..=50 {
            assert!(enumerate_walls(n, 2, 1).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn degree_three_two_sections_pattern() {
        for n in 2..=50 {
            let walls = enumerate_walls(n, 3, 2).unwrap();
            if n % 3 == 1 {
                assert_eq!(walls.len(), 1, "n = {n}");
                assert_eq!(walls[0].alpha, rat(3, 2 * (n - 1)), "n = {n}");
            } else {
                assert!(walls.is_empty(), "n = {n}");
            }
        }
    }

    #[test]
    fn wall_json_shape() {
        let walls = enumerate_walls(4, 3, 2).unwrap();
        let json = serde_json::to_string(&walls[0]).unwrap();
        assert_eq!(
            json,
            r#"{"alpha":"1/2","decompositions":[{"n1":3,"d1":2,"k1":2,"n2":1,"d2":1,"k2":0,"c12":1,"c21":1}],"min_c12":1,"min_c21":1,"flip_dims":{"minus":2,"plus":2}}"#
        );
    }
}
