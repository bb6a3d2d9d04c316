//! File format and command-line front end for `po2-core`.

pub mod app;
pub mod textfmt;
