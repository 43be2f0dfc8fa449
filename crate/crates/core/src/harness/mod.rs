//! Enumeration, sweeps and reports behind the `fslab` command line.

pub mod enumerate;
pub mod partitions;
pub mod report;
pub mod sweep;

pub use enumerate::{all_graphs, enumerate_connected_graphs, BUILTIN_MAX_VERTICES};
pub use partitions::partitions_of;
pub use report::{Record, Report, Summary};
pub use sweep::{
    brute_kappa, load_graphs, run_sweep, run_sweep_on, scan_exception_spiders, Check, GraphFamily,
    OutputFormat, SweepConfig, SweepError,
};
