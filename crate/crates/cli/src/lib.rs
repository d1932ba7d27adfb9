//! Document types shared by the `affbranch` binary and its tests.

pub mod output;
