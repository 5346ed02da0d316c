//! Command-line front end for the proof workbench: a JSON proof-script
//! format, plain-text renderers for derivations, and the built-in
//! ten-case suite.

pub mod display;
pub mod script;
pub mod suite;
