pub mod check;
pub mod cli;
pub mod free;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod operad;
pub mod samples;
pub mod structure;
