pub mod cli;
pub mod text;
