//! Integer Chern data of Picard bundles over the moduli of stable bundles
//! on an elliptic curve, and the congruence test distinguishing the small-
//! and large-parameter moduli spaces as projective bundles.
//!
//! Fix coprime `n >= 1`, `d > 0`. The moduli space of stable bundles of
//! rank `n` and degree `d` is a copy of the curve, its degree-2 cohomology
//! is generated by the point class, and every statement here is an integer
//! identity against that generator:
//!
//! - the Bezout pair `(r, s)` normalised by `r` in `[0, n)` with
//!   `r d - s n = 1`;
//! - the Picard bundle (direct image of a Poincare bundle) has rank `d`,
//!   first Chern coefficient `s`, and its second Chern data is carried by
//!   `f2 = (n - 1) s`, so that `n f2 = (n - 1)(d r - 1)`;
//! - on the dual side, the residue `s'` in `[0, d)` with
//!   `s' (n - k) = -1 (mod d)` is the analogous coefficient for the
//!   large-parameter Grassmannian bundle.
//!
//! Two projective bundles over the curve with rank-`d` fibres and first
//! Chern coefficients `s` and `-s'` cannot be isomorphic as varieties when
//! `s + s'` is non-zero mod `d`. The test is one-directional: a vanishing
//! sum decides nothing.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, mod_inverse, mod_residue};
use crate::moduli::brill_noether;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("requires n >= 1")]
    InvalidRank,
    #[error("requires d > 0")]
    NonPositiveDegree,
    #[error("requires coprime rank and degree: gcd({n}, {d}) = {g}")]
    NotCoprime { n: i64, d: i64, g: i64 },
    #[error("requires 0 < k < n: got k = {k}, n = {n}")]
    SectionsOutOfRange { k: i64, n: i64 },
    #[error("requires k < d: got k = {k}, d = {d}")]
    SectionsNotBelowDegree { k: i64, d: i64 },
    #[error("requires gcd(n - k, d) = 1: gcd({m}, {d}) = {g}")]
    QuotientNotCoprime { m: i64, d: i64, g: i64 },
}

/// The integer coefficients attached to the Picard bundle of type `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardInvariants {
    pub n: i64,
    pub d: i64,
    /// Normalised in `[0, n)` for `n >= 2`; `0` for `n = 1`.
    pub r: i64,
    /// Determined by `r d - s n = 1`.
    pub s: i64,
    /// `(n - 1) s`, the coefficient of the second Chern datum.
    pub f2_coeff: i64,
    /// The Picard bundle has rank `d`.
    pub picard_rank: i64,
    /// First Chern coefficient of the Picard bundle; equals `s`.
    pub c1_coeff: i64,
}

/// Computes the Bezout-normalised coefficients for coprime `(n, d)`, `d > 0`.
pub fn picard_invariants(n: i64, d: i64) -> Result<PicardInvariants, PicardError> {
    if n < 1 {
        return Err(PicardError::InvalidRank);
    }
    if d < 1 {
        return Err(PicardError::NonPositiveDegree);
    }
    let g = gcd(n, d);
    if g != 1 {
        return Err(PicardError::NotCoprime { n, d, g });
    }
    let (r, s) = if n == 1 {
        (0, -1)
    } else {
        let r = i64::try_from(mod_inverse(d, n).expect("coprime")).expect("r < n");
        (r, (r * d - 1) / n)
    };
    debug_assert_eq!(r * d - s * n, 1);
    Ok(PicardInvariants {
        n,
        d,
        r,
        s,
        f2_coeff: (n - 1) * s,
        picard_rank: d,
        c1_coeff: s,
    })
}

/// The unique residue `s'` in `[0, d)` with `s' m = -1 (mod d)`, for
/// coprime `m >= 1`, `d >= 1`.
pub fn dual_picard_residue(m: i64, d: i64) -> Result<i64, PicardError> {
    if m < 1 {
        return Err(PicardError::InvalidRank);
    }
    if d < 1 {
        return Err(PicardError::NonPositiveDegree);
    }
    let g = gcd(m, d);
    if g != 1 {
        return Err(PicardError::NotCoprime { n: m, d, g });
    }
    let inv = i64::try_from(mod_inverse(m, d).expect("coprime")).expect("inv < d");
    Ok(mod_residue(-inv, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NonIsomorphic,
    Inconclusive,
}

/// Outcome of the projective-bundle comparison, carrying its witnesses.
///
/// `NonIsomorphic` is a theorem about the two spaces; `Inconclusive`
/// asserts nothing and is never upgraded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    #[serde(rename = "s")]
    pub s_mod_d: i64,
    #[serde(rename = "s_prime")]
    pub s_prime_mod_d: i64,
    pub sum_mod_d: i64,
    pub verdict: Verdict,
}

fn check_grassmannian_hypotheses(n: i64, d: i64, k: i64) -> Result<(), PicardError> {
    if !(0 < k && k < n) {
        return Err(PicardError::SectionsOutOfRange { k, n });
    }
    if k >= d {
        return Err(PicardError::SectionsNotBelowDegree { k, d });
    }
    let g = gcd(n, d);
    if g != 1 {
        return Err(PicardError::NotCoprime { n, d, g });
    }
    let g = gcd(n - k, d);
    if g != 1 {
        return Err(PicardError::QuotientNotCoprime { m: n - k, d, g });
    }
    Ok(())
}

/// Compares the small- and large-parameter spaces of type `(n, d, k)` as
/// projective bundles over the curve. Requires `0 < k < n`, `k < d`,
/// `gcd(n, d) = 1` and `gcd(n - k, d) = 1`.
pub fn iso_test(n: i64, d: i64, k: i64) -> Result<IsoVerdict, PicardError> {
    check_grassmannian_hypotheses(n, d, k)?;
    let s_mod_d = mod_residue(picard_invariants(n, d)?.s, d);
    let s_prime_mod_d = dual_picard_residue(n - k, d)?;
    let sum_mod_d = mod_residue(s_mod_d + s_prime_mod_d, d);
    let verdict = if sum_mod_d != 0 {
        Verdict::NonIsomorphic
    } else {
        Verdict::Inconclusive
    };
    Ok(IsoVerdict {
        n,
        d,
        k,
        s_mod_d,
        s_prime_mod_d,
        sum_mod_d,
        verdict,
    })
}

/// One side of the Grassmannian-bundle description: a Grassmannian of
/// `k`-planes in the fibres of a rank-`d` bundle over the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianSide {
    pub base: &'static str,
    pub fiber: String,
    pub bundle_rank: i64,
    pub c1: i64,
    pub dim: i64,
}

/// The two ends of the parameter range as Grassmannian bundles over the
/// curve; both have dimension `k(d - k) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianModel {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub g0: GrassmannianSide,
    pub gl: GrassmannianSide,
}

pub fn grassmannian_model(n: i64, d: i64, k: i64) -> Result<GrassmannianModel, PicardError> {
    check_grassmannian_hypotheses(n, d, k)?;
    let inv = picard_invariants(n, d)?;
    let s_prime = dual_picard_residue(n - k, d)?;
    let dim = brill_noether(d, k);
    let side = |c1: i64| GrassmannianSide {
        base: "X",
        fiber: format!("Gr({k},{d})"),
        bundle_rank: d,
        c1,
        dim,
    };
    Ok(GrassmannianModel {
        n,
        d,
        k,
        g0: side(inv.s),
        gl: side(-s_prime),
    })
}
