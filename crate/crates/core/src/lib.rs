pub mod arith;
pub mod groebner;
pub mod ideals;
pub mod matfac;
pub mod spaces;
pub mod catalog;
pub mod cli;
