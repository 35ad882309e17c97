#![cfg_attr(test, allow(clippy::excessive_precision))]
pub mod cli;
pub mod error;
pub mod identities;
pub mod numerics;
pub mod oracle;
pub mod report;
pub mod special;
pub mod verifier;
