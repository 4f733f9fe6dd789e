//! The non-emptiness and dimension oracle for moduli spaces of coherent
//! systems `G(alpha; n, d, k)` on an elliptic curve.
//!
//! Decision rules:
//!
//! - `k = 0`: the space is the moduli of stable bundles for every `alpha`,
//!   non-empty exactly when `gcd(n, d) = 1`;
//! - `k >= 1`, `alpha <= 0`: always empty;
//! - `n = 1`, `k >= 1`, `alpha > 0`: non-empty iff `(d, k) = (0, 1)` or
//!   `k <= d`, independently of `alpha`;
//! - `n >= 2`, `k >= 1`, `alpha > 0`: non-empty iff `(n - k) alpha < d`
//!   (strict) and either `k < d`, or `k = d` with `gcd(n, d) = 1`.
//!
//! Whenever non-empty the space is smooth and irreducible of dimension
//! `k(d - k) + 1`, which does not involve `n`. The admissible parameters
//! form an open interval: `(0, d/(n - k))` for `0 < k < n`, `(0, inf)` for
//! `k >= n`, and the degenerate all-parameter range for `k = 0`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gcd, ExtendedRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("alpha required when k >= 1")]
    AlphaRequired,
    #[error("empty moduli space")]
    EmptyModuli,
    #[error("rank must be >= 1")]
    InvalidRank,
    #[error("section count must be >= 0")]
    InvalidSections,
}

/// The type `(n, d, k)` of a coherent system, with an optional stability
/// parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliQuery {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub alpha: Option<Rational>,
}

impl ModuliQuery {
    pub fn new(n: i64, d: i64, k: i64) -> Result<Self, ModuliError> {
        if n < 1 {
            return Err(ModuliError::InvalidRank);
        }
        if k < 0 {
            return Err(ModuliError::InvalidSections);
        }
        Ok(ModuliQuery {
            n,
            d,
            k,
            alpha: None,
        })
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = Some(alpha);
        self
    }
}

/// The set of parameters for which the moduli space is non-empty: an open
/// interval, the whole line (`k = 0`), or nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaInterval {
    Empty,
    /// Every parameter works; the space does not depend on it.
    All,
    /// The open interval `(0, sup)`.
    Open {
        sup: ExtendedRational,
    },
}

impl AlphaInterval {
    pub fn is_empty(&self) -> bool {
        matches!(self, AlphaInterval::Empty)
    }

    pub fn contains(&self, alpha: &Rational) -> bool {
        match self {
            AlphaInterval::Empty => false,
            AlphaInterval::All => true,
            AlphaInterval::Open { sup } => alpha.is_positive() && sup > alpha,
        }
    }
}

impl Serialize for AlphaInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            AlphaInterval::Empty => {
                let mut s = serializer.serialize_struct("AlphaInterval", 1)?;
                s.serialize_field("empty", &true)?;
                s.end()
            }
            AlphaInterval::All => {
                let mut s = serializer.serialize_struct("AlphaInterval", 1)?;
                s.serialize_field("all", &true)?;
                s.end()
            }
            AlphaInterval::Open { sup } => {
                let mut s = serializer.serialize_struct("AlphaInterval", 3)?;
                s.serialize_field("inf", "0")?;
                s.serialize_field("sup", sup)?;
                s.serialize_field("open", &true)?;
                s.end()
            }
        }
    }
}

impl std::fmt::Display for AlphaInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlphaInterval::Empty => f.write_str("empty"),
            AlphaInterval::All => f.write_str("all alpha"),
            AlphaInterval::Open { sup } => write!(f, "(0, {sup})"),
        }
    }
}

/// Shape of the generic element of a non-empty moduli space. Each variant
/// records exact rank/degree bookkeeping: the pieces always sum back to
/// `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant")]
pub enum GenericShape {
    /// `k = 0`: a stable bundle with the zero section space.
    StableBundleNoSections,
    /// `n = 1`: a line bundle with a chosen space of sections.
    LineBundleSystem,
    /// `0 < k < n`: an extension `0 -> O^k -> E -> G -> 0` with `G`
    /// polystable of rank `n - k` and degree `d`, the sections being those
    /// of the trivial subbundle.
    ExtensionByTrivial {
        sections: i64,
        quotient_rank: i64,
        quotient_degree: i64,
    },
    /// `k = n`: `0 -> O^n -> E -> T -> 0` with `T` torsion of length `d`.
    TorsionQuotient { length: i64 },
    /// `k > n`: a presentation `0 -> H -> O^k -> E -> 0` with `H` polystable
    /// of rank `k - n` and degree `-d`.
    KernelPresentation {
        kernel_rank: i64,
        kernel_degree: i64,
    },
}

/// The expected moduli dimension `k(d - k) + 1`; independent of the rank.
pub fn brill_noether(d: i64, k: i64) -> i64 {
    let v = (k as i128) * ((d - k) as i128) + 1;
    i64::try_from(v).expect("dimension overflows i64")
}

/// Decides non-emptiness of `G(alpha; n, d, k)`.
///
/// `alpha` is ignored when `k = 0` and required otherwise.
pub fn is_nonempty(q: &ModuliQuery) -> Result<bool, ModuliError> {
    debug_assert!(q.n >= 1 && q.k >= 0);
    if q.k == 0 {
        return Ok(gcd(q.n, q.d) == 1);
    }
    let alpha = q.alpha.as_ref().ok_or(ModuliError::AlphaRequired)?;
    if !alpha.is_positive() {
        return Ok(false);
    }
    if q.n == 1 {
        return Ok((q.d == 0 && q.k == 1) || q.k <= q.d);
    }
    let within_range = &Rational::from_integer(q.n - q.k) * alpha < Rational::from_integer(q.d);
    let sections_admissible = q.k < q.d || (q.k == q.d && gcd(q.n, q.d) == 1);
    Ok(within_range && sections_admissible)
}

/// The full range of parameters with non-empty moduli space.
pub fn alpha_range(n: i64, d: i64, k: i64) -> AlphaInterval {
    assert!(n >= 1 && k >= 0);
    if k == 0 {
        return if gcd(n, d) == 1 {
            AlphaInterval::All
        } else {
            AlphaInterval::Empty
        };
    }
    let admissible = if n == 1 {
        (d == 0 && k == 1) || k <= d
    } else {
        k < d || (k == d && gcd(n, d) == 1)
    };
    if !admissible {
        AlphaInterval::Empty
    } else if k < n {
        // Here d >= k >= 1, so the interval is genuinely non-degenerate.
        let sup = Rational::new(d, n - k).expect("k < n");
        AlphaInterval::Open { sup: sup.into() }
    } else {
        AlphaInterval::Open {
            sup: ExtendedRational::PositiveInfinity,
        }
    }
}

/// Dimension of a non-empty moduli space.
pub fn moduli_dimension(q: &ModuliQuery) -> Result<i64, ModuliError> {
    if !is_nonempty(q)? {
        return Err(ModuliError::EmptyModuli);
    }
    Ok(brill_noether(q.d, q.k))
}

/// Shape of the generic element; requires the space to be non-empty.
pub fn generic_shape(q: &ModuliQuery) -> Result<GenericShape, ModuliError> {
    if !is_nonempty(q)? {
        return Err(ModuliError::EmptyModuli);
    }
    Ok(if q.k == 0 {
        GenericShape::StableBundleNoSections
    } else if q.n == 1 {
        GenericShape::LineBundleSystem
    } else if q.k < q.n {
        GenericShape::ExtensionByTrivial {
            sections: q.k,
            quotient_rank: q.n - q.k,
            quotient_degree: q.d,
        }
    } else if q.k == q.n {
        GenericShape::TorsionQuotient { length: q.d }
    } else {
        GenericShape::KernelPresentation {
            kernel_rank: q.k - q.n,
            kernel_degree: -q.d,
        }
    })
}
