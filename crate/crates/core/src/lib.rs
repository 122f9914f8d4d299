//! Exact computations with graded Betti numbers of monomial ideals.
//!
//! The crate works in `S = K[x_1, ..., x_n]` with the degree-lexicographic
//! order `x_1 > x_2 > ... > x_n`. It provides
//!
//! * Macaulay representations and the shifted operators `a^<d,j>`
//!   ([`macaulay`]),
//! * monomials and monomial ideals with the usual stability predicates and
//!   the counting invariants `m_{i,d}`, `m_i` and `mu_{i,j}` ([`monomial`],
//!   [`ideal`]),
//! * Betti tables through the Eliahou-Kervaire formula ([`betti`]) and an
//!   independent multigraded homology oracle ([`oracle`]),
//! * the standard strongly stable constructions ([`constructions`]),
//! * the numerical characterization of extremal Betti numbers together with
//!   an explicit witness ideal ([`extremal`]),
//! * exhaustive search over strongly stable ideals ([`enumeration`]).
//!
//! Everything is computed exactly; the characteristic of `K` only enters
//! through the homology oracle, which works over the rationals.

pub mod betti;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod fixtures;
pub mod format;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod oracle;

pub use betti::{BettiTable, Corner, MCounts};
pub use error::{Error, Result};
pub use extremal::ExtremalProfile;
pub use ideal::{GeneratorMatrix, MVector, MonomialIdeal};
pub use monomial::Monomial;
pub use num_bigint::BigUint;
