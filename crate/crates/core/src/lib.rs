//! Exact polynomial and ideal computations over the rationals, with scripted
//! verifications of a blow-up construction built on them.

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod blowup;
pub mod cycles;
pub mod monomial_ideal;
pub mod parser;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{engine_stats, EngineStats, PointQ, PolyIdeal};
pub use monomial_ideal::MonomialIdeal;
pub use poly::{Monomial, MonomialOrder, Polynomial, VarSet};
