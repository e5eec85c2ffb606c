pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod mvc_enum;
pub mod oracle;
pub mod par;
pub mod report;
pub mod crown;
pub mod vcplus;
pub mod degen;
pub mod p4;
pub mod generators;
pub mod rng;
pub mod check;
