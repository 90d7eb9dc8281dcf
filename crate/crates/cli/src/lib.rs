//! Report building, table rendering, and the monic sweep behind the
//! `platkit` binary.  Exposed as a library so integration tests and
//! benchmarks can drive the same code paths as the CLI.

pub mod report;
pub mod sweep;
pub mod table;

pub use report::{KnotReport, PolyData};
pub use sweep::{sweep_monic, SweepOutcome};
pub use table::{render_csv, render_json, render_text, table_rows, TableRow};
