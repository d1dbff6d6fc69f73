//! Library side of the `xilab` command: self-test, case selection, run
//! orchestration, the misprint ledger and report rendering.

pub mod ledger;
pub mod profile;
pub mod report;
pub mod run;
pub mod select;
pub mod selftest;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
