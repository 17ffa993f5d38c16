//! Sequence registry, b-file plumbing, configuration and the table report.

pub mod bfile;
pub mod config;
pub mod fetch;
pub mod registry;
pub mod report;

pub use bfile::{emit_bfile, parse_bfile, BFile, BFileError};
pub use config::{Budget, Config, ConfigError, ENV_KEYS};
pub use fetch::{bfile_url, cache_path, fetch_bfile, valid_id, FetchError, Transport};
pub use registry::{lookup, registry, Oracle, PaperRow, RegistryEntry, Status};
pub use report::{report_row, run_report, Report, ReportRow};
