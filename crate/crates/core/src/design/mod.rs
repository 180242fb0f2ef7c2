//! Multi-root anchor designs with staged deployment.
//!
//! Roots are mechanically independent: forces of roots add and no
//! root-to-root coupling through the grains is modelled.
//!
//! A stage's roots grow together. The stage needs a reaction equal to the sum
//! of its roots' worst net force over growth; it gets the device weight plus
//! the peak extraction of every root deployed in earlier stages.

mod config;
mod search;

pub use config::{
    evaluate_config, split_comparison, AnchorConfig, ConfigMetrics, SplitRow, MAX_ROOT_TILT_DEG,
};
pub use search::{optimize_config, OptimizeOutcome, SearchConstraints};
