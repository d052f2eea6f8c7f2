pub mod cat;
pub mod cli;
pub mod duality;
pub mod error;
pub mod expr;
pub mod functor;
pub mod instances;
pub mod io;
pub mod linear;
pub mod report;
pub mod structures;
pub mod synthesis;
