//! Text formats: trajectory tables, result records and kinetic traces.

mod record;
mod trace;
mod trajectory;

pub use record::{ResultRecord, RECORD_VERSION};
pub use trace::{render_trace, TRACE_HEADER};
pub use trajectory::{parse_trajectory, render_trajectory, Trajectory};
