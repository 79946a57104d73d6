pub mod cli;
pub mod construct;
pub mod family;
pub mod formula;
pub mod freeness;
pub mod graph;
pub mod oracle;
pub mod tree;
