//! Serialization of exact values and class functions.
//!
//! Cyclotomic values serialize as `{level, coeffs}` with the coefficients
//! as exact rational strings; human tables may carry a decimal
//! approximation column flagged with `~`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use dlcf::dl::{ClassFunction, GroupCtx};
use dlcf::exactnum::{CycloElem, Rational};

use crate::AppError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CycloJson {
    pub level: u64,
    pub coeffs: Vec<String>,
}

impl CycloJson {
    pub fn from_elem(e: &CycloElem) -> CycloJson {
        CycloJson {
            level: e.level(),
            coeffs: e.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_elem(&self) -> Result<CycloElem, AppError> {
        let mut acc = CycloElem::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let r = Rational::from_str(c)
                .map_err(|e| AppError::Usage(format!("bad coefficient {c:?}: {e}")))?;
            let root = CycloElem::root_of_unity(self.level, i as i64)
                .map_err(|e| AppError::Usage(e.to_string()))?;
            acc = acc + &root.scale(&r);
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassFunctionJson {
    pub group: String,
    pub kind: String,
    pub classes: Vec<String>,
    pub values: Vec<CycloJson>,
}

impl ClassFunctionJson {
    pub fn from_function(ctx: &GroupCtx, f: &ClassFunction) -> ClassFunctionJson {
        ClassFunctionJson {
            group: ctx.spec().to_string(),
            kind: "class_function".into(),
            classes: ctx.classes().iter().map(|c| c.class.to_string()).collect(),
            values: f.values().iter().map(CycloJson::from_elem).collect(),
        }
    }
}

/// Exact rendering with a decimal approximation appended for non-rational
/// values.
pub fn human_value(e: &CycloElem) -> String {
    if e.to_rational().is_some() {
        format!("{e}")
    } else {
        format!("{e} (~{:.4})", e.approx())
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
