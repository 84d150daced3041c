//! Class functions and the induction machinery: Deligne-Lusztig characters
//! of maximal tori, the line decomposition of the class-function space,
//! Lusztig induction through line transport, indicator expansions, and the
//! decomposition / Mackey verification suites.

mod character;
mod indicator;
mod induction;
mod lines;
#[cfg(test)]
mod tests;
mod verify;

pub use character::dl_character;
pub use indicator::{indicator_expansion, IndicatorExpansion, IndicatorTarget};
pub use induction::{lusztig_induction, LeviClassFunction, LeviCtx, LeviSpec};
pub use lines::{
    enumerate_lines, is_principal_type, psi, theta_lines, GammaLine, GeometricClass,
    LocalSystem, Sl2Geometric, ThetaLine,
};
pub use verify::{
    mackey_check, verify_decomposition, DecompositionReport, MackeyCheck, StratumSpans,
};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::{CycloElem, ExactNumError, Rational};
use crate::grptypes::{
    enumerate_classes, enumerate_strata, enumerate_tori, ClassRecord, ClassType,
    GroupError, GroupSpec, StratumLabel, TorusType,
};

#[derive(Debug, thiserror::Error)]
pub enum DlError {
    #[error("class functions belong to different groups")]
    SpecMismatch,
    #[error("class function has {got} values, group has {want} classes")]
    LengthMismatch { got: usize, want: usize },
    #[error("no such equivariant local system on this class")]
    NoSuchLocalSystem,
    #[error("line expansion is inconsistent; internal invariant violated")]
    ExpansionInconsistent,
    #[error("torus character has {got} exponents, torus has {want} factors")]
    CharShapeMismatch { got: usize, want: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    ExactNum(#[from] ExactNumError),
}

/// Precomputed combinatorial context for one group: its classes in
/// canonical order, tori, and strata.
pub struct GroupCtx {
    spec: GroupSpec,
    classes: Vec<ClassRecord>,
    class_index: HashMap<ClassType, usize>,
    tori: Vec<(TorusType, u128)>,
    strata: Vec<(StratumLabel, u64)>,
}

impl GroupCtx {
    pub fn new(spec: GroupSpec) -> Self {
        let classes = enumerate_classes(&spec);
        let class_index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.class.clone(), i))
            .collect();
        let tori = enumerate_tori(&spec);
        let strata = enumerate_strata(&spec);
        GroupCtx { spec, classes, class_index, tori, strata }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn classes(&self) -> &[ClassRecord] {
        &self.classes
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_position(&self, class: &ClassType) -> Option<usize> {
        self.class_index.get(class).copied()
    }

    pub fn tori(&self) -> &[(TorusType, u128)] {
        &self.tori
    }

    pub fn strata(&self) -> &[(StratumLabel, u64)] {
        &self.strata
    }
}

/// Class function with total support, values indexed by the canonical
/// class order of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    spec: GroupSpec,
    values: Vec<CycloElem>,
}

impl ClassFunction {
    pub fn new(ctx: &GroupCtx, values: Vec<CycloElem>) -> Result<Self, DlError> {
        if values.len() != ctx.n_classes() {
            return Err(DlError::LengthMismatch {
                got: values.len(),
                want: ctx.n_classes(),
            });
        }
        Ok(ClassFunction { spec: ctx.spec.clone(), values })
    }

    pub fn zero(ctx: &GroupCtx) -> Self {
        ClassFunction {
            spec: ctx.spec.clone(),
            values: vec![CycloElem::zero(); ctx.n_classes()],
        }
    }

    pub fn constant(ctx: &GroupCtx, value: CycloElem) -> Self {
        ClassFunction {
            spec: ctx.spec.clone(),
            values: vec![value; ctx.n_classes()],
        }
    }

    /// Indicator of a set of classes.
    pub fn indicator<P: Fn(&ClassType) -> bool>(ctx: &GroupCtx, member: P) -> Self {
        ClassFunction {
            spec: ctx.spec.clone(),
            values: ctx
                .classes
                .iter()
                .map(|c| {
                    if member(&c.class) {
                        CycloElem::one()
                    } else {
                        CycloElem::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn values(&self) -> &[CycloElem] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &CycloElem {
        &self.values[index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycloElem::is_zero)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, DlError> {
        if self.spec != other.spec {
            return Err(DlError::SpecMismatch);
        }
        Ok(ClassFunction {
            spec: self.spec.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, DlError> {
        self.add(&other.scale(&CycloElem::from_int(-1)))
    }

    pub fn scale(&self, by: &CycloElem) -> ClassFunction {
        ClassFunction {
            spec: self.spec.clone(),
            values: self.values.iter().map(|v| v * by).collect(),
        }
    }

    /// Bring all values to their common cyclotomic level.
    pub fn normalize_level(&mut self) {
        let level = self
            .values
            .iter()
            .map(|v| v.level())
            .fold(1u64, num_integer::lcm);
        for v in &mut self.values {
            *v = v.change_level(level).expect("lifting to the lcm level");
        }
    }
}

/// Hermitian inner product `|G|^-1 sum_c |c| f(c) conj(g(c))`.
pub fn inner_product(
    ctx: &GroupCtx,
    f: &ClassFunction,
    g: &ClassFunction,
) -> Result<CycloElem, DlError> {
    if f.spec != ctx.spec || g.spec != ctx.spec {
        return Err(DlError::SpecMismatch);
    }
    let mut sum = CycloElem::zero();
    for (rec, (fv, gv)) in ctx.classes.iter().zip(f.values.iter().zip(&g.values)) {
        if fv.is_zero() || gv.is_zero() {
            continue;
        }
        let term = (fv * &gv.conj()).scale(&Rational::from(BigInt::from(rec.size)));
        sum += &term;
    }
    Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(ctx.spec.order()))))
}
