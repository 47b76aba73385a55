pub mod error;
pub mod laurent;
pub mod matrix;
pub mod monodromy;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod upoly;
pub mod symplectic;
pub mod torsor;
pub mod vanishing;
pub mod dcritical;
pub mod cli;
