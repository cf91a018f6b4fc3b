//! Exact Drinfel'd-twist quantizations of the enlarged toroidal algebra
//! `sl_2(C_q) ⊕ C d_1 ⊕ C d_2`, with an independent twist-conjugation oracle
//! for checking closed-form coproducts and antipodes modulo `t^{N+1}`.

pub mod closedform;
pub mod liealg;
pub mod scalars;
pub mod series;
pub mod twist;
pub mod uea;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("undefined generator: {0}")]
    UndefinedGenerator(&'static str),
    #[error("{0} carries no degree")]
    UngradedWithDegree(&'static str),
    #[error("monomial factors are not in PBW order")]
    UnsortedMonomial,
    #[error("tensor arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("series constant term is not a unit")]
    NotInvertible,
}
