//! Document formats, seeded instance generation and verification suites
//! behind the `intpoly` command-line tool.

pub mod doc;
pub mod keytext;
pub mod plot;
pub mod sample;
pub mod suites;
