//! Partitions with a fixed point `lambda_d = d`, counted by the position `d`.
//!
//! * [`partition`]: partitions, enumeration and per-partition statistics
//! * [`qseries`]: exact truncated power series and the column generating functions
//! * [`triangle`]: the `f(n, d)` table by enumeration, generating function or recurrence
//! * [`identities`]: row / diagonal / antidiagonal sum sweeps
//! * [`bijections`]: the bijective maps behind those sums, with round-trip checks

pub mod bijections;
pub mod identities;
pub mod partition;
pub mod qseries;
pub mod triangle;

pub use bijections::{Bijection, BijectionError, BijectionTrace, Case, SetLabel};
pub use identities::{identity_report, Identity, IdentityReport};
pub use partition::{enumerate_partitions, partition_count, Partition, PartitionError, PartitionStats};
pub use qseries::{PowerSeries, SeriesError};
pub use triangle::{FixedPointTriangle, Method, SequenceReport, TriangleError};
