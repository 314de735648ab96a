pub mod chevalley;
pub mod claims;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod rep_theory;
pub mod root_system;
