// SPDX-License-Identifier: Apache-2.0

//! File formats, reports and the command line for `blanchfield-core`.

pub mod analyzer;
pub mod app;
pub mod format;
pub mod report;

pub use analyzer::{Analyzer, Engine, Fault};
pub use app::run;
