//! Expansion of class indicators in the induced torus characters.
//!
//! For every geometric class the expansion is exact with zero residual.
//! A single rational square class of `SL_2` is the documented non-uniform
//! input: the solve is inconsistent and the report carries the nonzero
//! residual, which lies in the span of the two cuspidal lines.

use crate::exactnum::{solve_linear, CycloElem, CycloMatrix, SolveOutcome};
use crate::grptypes::{ClassType, Family, TorusChar, TorusType};

use super::{
    enumerate_lines, inner_product, ClassFunction, DlError, GammaLine, GeometricClass,
    GroupCtx,
};

/// What to expand: a geometric class, or deliberately a single rational
/// class (the failure mode that exhibits non-uniform functions).
#[derive(Clone, Debug)]
pub enum IndicatorTarget {
    Geometric(GeometricClass),
    Rational(ClassType),
}

/// Exact expansion result.
#[derive(Clone, Debug)]
pub struct IndicatorExpansion {
    /// Coefficient per torus line, in line order.
    pub coefficients: Vec<(TorusType, TorusChar, CycloElem)>,
    /// Indicator minus the expanded part; zero exactly when the indicator
    /// is uniform.
    pub residual: ClassFunction,
    /// Whether the residual lies in the span of the cuspidal lines
    /// (`None` for groups without cuspidal lines).
    pub residual_in_cuspidal_span: Option<bool>,
    /// Pointwise re-verification of `sum c R + residual = indicator`.
    pub reconstruction_exact: bool,
}

impl IndicatorExpansion {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn indicator_expansion(
    ctx: &GroupCtx,
    target: &IndicatorTarget,
) -> Result<IndicatorExpansion, DlError> {
    let members: Vec<ClassType> = match target {
        IndicatorTarget::Geometric(g) => g.rational_classes(),
        IndicatorTarget::Rational(c) => vec![c.clone()],
    };
    for m in &members {
        if ctx.class_position(m).is_none() {
            return Err(DlError::LengthMismatch { got: 0, want: ctx.n_classes() });
        }
    }
    let indicator = ClassFunction::indicator(ctx, |c| members.contains(c));

    let all_lines = enumerate_lines(ctx)?;
    let mut torus_lines: Vec<(TorusType, TorusChar, ClassFunction)> = Vec::new();
    let mut cuspidal_reps: Vec<ClassFunction> = Vec::new();
    for (line, rep) in all_lines {
        match line {
            GammaLine::Torus { torus, theta } => torus_lines.push((torus, theta, rep)),
            GammaLine::Cuspidal { .. } => cuspidal_reps.push(rep),
        }
    }

    let columns = CycloMatrix::from_rows(
        (0..ctx.n_classes())
            .map(|r| {
                torus_lines
                    .iter()
                    .map(|(_, _, rep)| rep.value(r).clone())
                    .collect()
            })
            .collect(),
    )?;
    let coeffs = match solve_linear(&columns, indicator.values())? {
        SolveOutcome::Solved { solution, .. } => solution,
        SolveOutcome::Inconsistent { .. } => {
            // Orthogonal projection onto the span of the torus lines: solve
            // the normal equations with the exact hermitian pairing.
            let n = torus_lines.len();
            let gram = CycloMatrix::from_rows(
                (0..n)
                    .map(|l| {
                        (0..n)
                            .map(|k| {
                                inner_product(ctx, &torus_lines[k].2, &torus_lines[l].2)
                            })
                            .collect::<Result<Vec<_>, DlError>>()
                    })
                    .collect::<Result<Vec<_>, DlError>>()?,
            )?;
            let rhs: Vec<CycloElem> = (0..n)
                .map(|l| inner_product(ctx, &indicator, &torus_lines[l].2))
                .collect::<Result<_, DlError>>()?;
            match solve_linear(&gram, &rhs)? {
                SolveOutcome::Solved { solution, .. } => solution,
                SolveOutcome::Inconsistent { .. } => {
                    return Err(DlError::ExpansionInconsistent)
                }
            }
        }
    };

    let mut expanded = ClassFunction::zero(ctx);
    for ((_, _, rep), c) in torus_lines.iter().zip(&coeffs) {
        if !c.is_zero() {
            expanded = expanded.add(&rep.scale(c))?;
        }
    }
    let residual = indicator.sub(&expanded)?;
    let reconstruction_exact = expanded.add(&residual)? == indicator;

    let residual_in_cuspidal_span = match ctx.spec().family() {
        Family::Gl(_) => None,
        Family::Sl2 => {
            let base = CycloMatrix::from_rows(
                cuspidal_reps.iter().map(|r| r.values().to_vec()).collect(),
            )?;
            let mut rows: Vec<Vec<CycloElem>> =
                cuspidal_reps.iter().map(|r| r.values().to_vec()).collect();
            rows.push(residual.values().to_vec());
            let extended = CycloMatrix::from_rows(rows)?;
            Some(base.rank() == extended.rank())
        }
    };

    Ok(IndicatorExpansion {
        coefficients: torus_lines
            .into_iter()
            .zip(coeffs)
            .map(|((torus, theta, _), c)| (torus, theta, c))
            .collect(),
        residual,
        residual_in_cuspidal_span,
        reconstruction_exact,
    })
}
