//! Independent brute-force oracle: explicit matrix groups, conjugacy
//! classes by orbit computation, Dixon-Schneider character tables, and
//! Harish-Chandra induction by direct summation.  Nothing here depends on
//! the Green-polynomial pipeline it validates.

mod dixon;
mod field;
mod group;
mod induce;

pub use dixon::{dixon_table, CharacterTable};
pub use field::SmallField;
pub use group::{enumerate_group, Mat, MatKit, MatrixGroup, MAX_BRUTE_ORDER};
pub use induce::{
    cross_validate, harish_chandra, harish_chandra_sl2_split, CrossValidation,
};

use crate::dl::DlError;
use crate::exactnum::ExactNumError;
use crate::grptypes::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum BruteError {
    #[error("group order {order} exceeds the brute-force bound {max}")]
    OrderBound { order: u128, max: u128 },
    #[error("class matching failed: {0}")]
    ClassMatch(String),
    #[error("character table inconsistent: {0}")]
    TableInconsistent(String),
    #[error("{0}")]
    NonStandardLevi(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Dl(#[from] DlError),
    #[error(transparent)]
    ExactNum(#[from] ExactNumError),
}
