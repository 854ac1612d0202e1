//! One function per subcommand, each returning an [`Out`](crate::output::Out).

pub mod arith;
pub mod continuum;
pub mod matching;
pub mod meta;
pub mod pencil;
pub mod stats;
