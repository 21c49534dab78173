//! Star-operations on fractional monomial ideals.
//!
//! The backend models nonzero fractional monomial ideals of
//! `D = K[x1, ..., xn]` as antichains of Laurent exponent vectors
//! ([`monomial`]). On top of it sit the classical star-operations `d`, `v`
//! and `t`, S-transforms for multiplicative sets of ideals ([`star`]),
//! stars induced by localizations at monomial primes ([`localization`]),
//! and sampled property suites for the characterizations relating them
//! ([`suites`]). [`infinite`] holds a small oracle model of the polynomial
//! ring in countably many variables, used to exhibit an S-transform that is
//! not idempotent.

pub mod error;
pub mod infinite;
pub mod localization;
pub mod monomial;
pub mod report;
pub mod sample;
pub mod star;
pub mod suites;

pub use error::{Error, Result};
pub use localization::{check_colon_product, loc_member, loc_star, ColonProduct, PrimeFamily};
pub use monomial::{ExponentVector, MonomialModule, RingDescriptor};
pub use report::{PropertyReport, ReportBuilder, Verdict, Violation};
pub use sample::{random_fractional_module, random_module, Sampler};
pub use star::{
    in_saturation, is_gv, s_transform, s_transform_chain, t_close, transform_witness, v_close,
    MultiplicativeSet, Stabilized, StarOperator, TransformWitness, DEFAULT_MAX_ITER,
};
