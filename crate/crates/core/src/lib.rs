//! Exact verification of triple-product mixing on small finite groups.
//!
//! The crate materializes a finite group from permutation generators as a
//! full Cayley table, computes its complex irreducible character table with
//! the Burnside–Dixon algorithm, and then checks — exactly, at desk scale —
//! the standard character-theoretic mixing statements: the Frobenius count
//! of products landing in a conjugacy class, Gowers-type quasirandomness
//! windows, set-algebra identities for triple counts, the large-class
//! decomposition bounds for normal sets, and (ε,η,i)-mixer certification
//! with propagation to two-normal triples.
//!
//! All counts are exact integers and all probabilities exact rationals;
//! floating point only enters through character values (whose downstream
//! uses are certified by integer rounding checks) and through user-supplied
//! real parameters. Every randomized operation takes an explicit 64-bit
//! seed and is bit-reproducible.
//!
//! With the default `parallel` feature the counting loops fan out over
//! rayon with integer-sum reduction, which cannot change any output bit;
//! disabling the feature yields a fully sequential build.

pub mod certify;
pub mod chartable;
pub mod dixon;
pub mod error;
pub mod formats;
pub mod group;
pub mod mixing;
pub mod modp;
pub mod perm;
pub mod rational;
pub mod rng;
pub mod set;

pub(crate) mod par;

pub use error::Error;
pub use group::{ConjClass, GroupTable};
pub use perm::Permutation;
pub use set::ElementSet;

/// Default cap on the order of a generated group. The Cayley table is
/// `order²` entries, so memory is the binding constraint.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Orthogonality tolerance for character tables of groups of order ≤ 1000.
pub const TOL_SMALL: f64 = 1e-9;
/// Orthogonality tolerance above order 1000.
pub const TOL_LARGE: f64 = 1e-7;

/// Tolerance that applies to a group of the given order.
pub fn default_tolerance(order: usize) -> f64 {
    if order <= 1000 {
        TOL_SMALL
    } else {
        TOL_LARGE
    }
}
