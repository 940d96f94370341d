#![allow(dead_code)]

pub mod classical;
pub mod gap_structure;
pub mod gap_tables;
pub mod oracles;
