//! Script language and batch runner for star-operation computations.
//!
//! A script declares one monomial ring and then ideals, multiplicative sets
//! and prime families over it, prints derived modules, and runs property
//! suites. See [`dsl`] for the grammar and [`interp`] for the report format
//! and exit codes.

pub mod dsl;
pub mod interp;

pub use dsl::{parse, parse_expr, ParseError, Script};
pub use interp::{
    execute, render_text, run, selftest_script, Format, Outcome, RunConfig, ScriptError,
    ScriptValue, EXIT_GUARD, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS,
};
