//! Instance files, seeded generators and the oracle-checked verification
//! driver.

pub mod format;
pub mod generate;
pub mod verify;

pub use format::{emit, parse, FormatError};
pub use generate::{generate, Family, GenerateError};
pub use verify::{
    kernelize, oracle_answer, sweep, verify_preservation, Case, Decision, KernelReport, Method, OracleCheck,
    SweepFamily, SweepReport, VerifyConfig, VerifyError,
};
