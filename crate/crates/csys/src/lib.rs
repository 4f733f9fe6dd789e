//! Exact-arithmetic library for moduli spaces of coherent systems on an
//! elliptic curve.
//!
//! A coherent system of type `(n, d, k)` is a vector bundle of rank `n` and
//! degree `d` together with a `k`-dimensional space of global sections.
//! Stability depends on a rational parameter `alpha` through the slope
//! `mu_alpha = d/n + alpha k/n`. This crate decides, with no floating point
//! anywhere:
//!
//! - whether the moduli space `G(alpha; n, d, k)` is non-empty, and its
//!   dimension `k(d - k) + 1` when it is ([`moduli`]);
//! - the open interval of parameters for which it is non-empty ([`moduli`]);
//! - the critical values where the space changes, with the numeric
//!   decompositions inducing them and the flip invariants `C12`, `C21`
//!   ([`walls`]);
//! - the shape of the generic element in each regime ([`moduli`], [`bundle`]);
//! - the integer Chern data of Picard bundles and the congruence test that
//!   distinguishes the small- and large-parameter spaces ([`picard`]);
//! - an independent generic-position stability check used to cross-examine
//!   the non-emptiness criterion at small parameters ([`stability`]).
//!
//! The `csys` binary exposes all of this as subcommands with deterministic
//! text and JSON output; [`report`] and [`sweep`] back that front end.

pub mod arith;
pub mod bundle;
pub mod moduli;
pub mod picard;
pub mod report;
pub mod stability;
pub mod sweep;
pub mod walls;

pub use arith::{ExtendedRational, Rational};
pub use moduli::ModuliQuery;
