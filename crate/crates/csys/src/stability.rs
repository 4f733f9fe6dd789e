//! Generic-position stability check for coherent systems on polystable
//! bundles, at small positive values of the parameter.
//!
//! Take a polystable bundle `E = E_1 + ... + E_h` with pairwise distinct
//! stable summands of one slope and a generic `k`-dimensional subspace `V`
//! of its sections. For small positive `alpha` the only subsystems that can
//! violate stability sit on subbundles of the same slope as `E`, and those
//! are exactly the direct sums of some of the `E_j`. For a generic `V` the
//! section space such a subbundle `G` captures has dimension
//!
//! ```text
//! dim(H0(G) /\ V) = max(0, h0(G) - (h0(E) - k)),
//! ```
//!
//! so one slope inequality per proper non-empty subset of summands decides
//! the question. Subsystems carrying fewer sections than that maximum are
//! dominated (the alpha-slope grows with the section count) and are not
//! enumerated.
//!
//! Scope: this is exactly the small-parameter reduction and nothing more.
//! It is not a general stability decision procedure — verdicts are only
//! meaningful for `alpha` strictly below the first critical value of the
//! type, which the caller must guarantee. The saturation mechanism that
//! enforces the upper end of the parameter range is deliberately not
//! modelled here; the range itself is owned by [`crate::moduli`].

use serde::Serialize;
use thiserror::Error;

use crate::arith::Rational;
use crate::bundle::FormalBundle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("bundle must be polystable")]
    NotPolystable,
    #[error("summands must be pairwise non-isomorphic")]
    RepeatedSummand,
    #[error("section count must be >= 0")]
    NegativeSections,
    #[error("no {k}-dimensional subspace: h0(bundle) = {h0}")]
    TooManySections { k: i64, h0: i64 },
    #[error("alpha must be positive")]
    AlphaNotPositive,
}

/// The alpha-slope `d/n + alpha k/n` of numeric type `(n, d, k)`.
pub fn mu_alpha(degree: i64, rank: i64, sections: i64, alpha: &Rational) -> Rational {
    assert!(rank >= 1);
    let weighted =
        Rational::from_integer(degree) + alpha.clone() * Rational::from_integer(sections);
    weighted / Rational::from_integer(rank)
}

/// A polystable bundle with pairwise distinct summands carrying a generic
/// `k`-dimensional space of sections. The subspace is never materialised;
/// only its generic intersection dimensions are used.
#[derive(Clone, Debug)]
pub struct GenericSystemModel {
    bundle: FormalBundle,
    k: i64,
}

/// A proper non-empty sub-sum of summands, with the section overlap a
/// generic subspace leaves on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsystemCandidate {
    pub subset: Vec<usize>,
    pub rank: i64,
    pub degree: i64,
    pub generic_overlap: i64,
}

impl GenericSystemModel {
    pub fn new(bundle: FormalBundle, k: i64) -> Result<Self, StabilityError> {
        if k < 0 {
            return Err(StabilityError::NegativeSections);
        }
        if !bundle.is_polystable() {
            return Err(StabilityError::NotPolystable);
        }
        let parts = bundle.summands();
        let distinct = (0..parts.len()).all(|i| (i + 1..parts.len()).all(|j| parts[i] != parts[j]));
        if !distinct {
            return Err(StabilityError::RepeatedSummand);
        }
        let h0 = bundle.h0();
        if k > h0 {
            return Err(StabilityError::TooManySections { k, h0 });
        }
        Ok(GenericSystemModel { bundle, k })
    }

    pub fn bundle(&self) -> &FormalBundle {
        &self.bundle
    }

    pub fn sections(&self) -> i64 {
        self.k
    }

    /// All `2^h - 2` proper non-empty sub-sums, in mask order.
    pub fn candidates(&self) -> Vec<SubsystemCandidate> {
        let parts = self.bundle.summands();
        let h = parts.len();
        assert!(h <= 30, "subset enumeration limited to 30 summands");
        let codim = self.bundle.h0() - self.k;
        let mut out = Vec::with_capacity((1usize << h) - 2);
        for mask in 1..((1u32 << h) - 1) {
            let subset: Vec<usize> = (0..h).filter(|i| mask & (1 << i) != 0).collect();
            let mut rank = 0;
            let mut degree = 0;
            let mut h0 = 0;
            for &i in &subset {
                rank += parts[i].rank;
                degree += parts[i].degree;
                h0 += parts[i].h0();
            }
            out.push(SubsystemCandidate {
                subset,
                rank,
                degree,
                generic_overlap: (h0 - codim).max(0),
            });
        }
        out
    }

    /// True iff every candidate subsystem has strictly smaller alpha-slope
    /// than the full system. Only meaningful for `alpha` below the first
    /// critical value of the ambient type.
    pub fn is_stable_for_small_alpha(&self, alpha: &Rational) -> Result<bool, StabilityError> {
        if !alpha.is_positive() {
            return Err(StabilityError::AlphaNotPositive);
        }
        let total = mu_alpha(self.bundle.degree(), self.bundle.rank(), self.k, alpha);
        Ok(self
            .candidates()
            .iter()
            .all(|c| mu_alpha(c.degree, c.rank, c.generic_overlap, alpha) < total))
    }
}

/// The parameter-free form of the candidate inequality: section density of
/// the sub-sum strictly below that of the full system,
/// `overlap / rank(G) < k / n`. For equal-slope candidates the alpha-slope
/// comparison reduces to exactly this.
pub fn overlap_density_strict(model: &GenericSystemModel, candidate: &SubsystemCandidate) -> bool {
    candidate.generic_overlap * model.bundle().rank() < model.sections() * candidate.rank
}
