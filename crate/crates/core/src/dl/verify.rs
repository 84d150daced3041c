//! Verification of the line decomposition (count, rank, and stratum-wise
//! span equality) and of the torus-pair Mackey identity.

use std::fmt;

use crate::exactnum::{CycloElem, CycloMatrix};
use crate::grptypes::{weyl_transporter_count, StratumLabel, TorusChar, TorusType};

use super::{
    dl_character, enumerate_lines, inner_product, psi, theta_lines, ClassFunction,
    DlError, GroupCtx,
};

/// Per-stratum comparison of the two line systems.
#[derive(Clone, Debug)]
pub struct StratumSpans {
    pub stratum: StratumLabel,
    pub dim: u64,
    pub gamma_lines: usize,
    pub theta_lines: usize,
    pub rank_gamma: usize,
    pub rank_theta: usize,
    pub rank_union: usize,
}

impl StratumSpans {
    pub fn spans_equal(&self) -> bool {
        self.rank_gamma == self.rank_theta && self.rank_gamma == self.rank_union
    }
}

/// Outcome of the decomposition checks.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub n_lines: usize,
    pub n_classes: usize,
    pub line_rank: usize,
    pub strata: Vec<StratumSpans>,
}

impl DecompositionReport {
    pub fn counts_match(&self) -> bool {
        self.n_lines == self.n_classes
    }

    pub fn full_rank(&self) -> bool {
        self.line_rank == self.n_classes
    }

    pub fn pass(&self) -> bool {
        self.counts_match()
            && self.full_rank()
            && self.strata.iter().all(StratumSpans::spans_equal)
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} lines / {} classes, rank {}",
            self.n_lines, self.n_classes, self.line_rank
        )?;
        for s in &self.strata {
            if s.gamma_lines == 0 && s.theta_lines == 0 {
                continue;
            }
            writeln!(
                f,
                "stratum {} (dim {}): {} induced lines / {} class lines, ranks {}/{}/{} -> {}",
                s.stratum,
                s.dim,
                s.gamma_lines,
                s.theta_lines,
                s.rank_gamma,
                s.rank_theta,
                s.rank_union,
                if s.spans_equal() { "equal" } else { "MISMATCH" }
            )?;
        }
        write!(f, "{}", if self.pass() { "pass" } else { "FAIL" })
    }
}

fn rank_of(functions: &[&ClassFunction]) -> Result<usize, DlError> {
    if functions.is_empty() {
        return Ok(0);
    }
    let rows: Vec<Vec<CycloElem>> =
        functions.iter().map(|f| f.values().to_vec()).collect();
    Ok(CycloMatrix::from_rows(rows)?.rank())
}

/// Check that the lines decompose the class-function space: the line count
/// equals the class count with full rank, and on each stratum the induced
/// lines and the class-indicator lines span the same subspace.
pub fn verify_decomposition(ctx: &GroupCtx) -> Result<DecompositionReport, DlError> {
    let gamma = enumerate_lines(ctx)?;
    let n_lines = gamma.len();
    let n_classes = ctx.n_classes();
    let line_rank = rank_of(&gamma.iter().map(|(_, rep)| rep).collect::<Vec<_>>())?;

    let theta: Vec<(StratumLabel, ClassFunction)> = theta_lines(ctx)
        .into_iter()
        .map(|line| Ok((psi(ctx, &line)?, line.representative(ctx)?)))
        .collect::<Result<_, DlError>>()?;

    let mut strata = Vec::new();
    for (label, dim) in ctx.strata() {
        let gamma_reps: Vec<&ClassFunction> = gamma
            .iter()
            .filter(|(line, _)| line.stratum(ctx) == *label)
            .map(|(_, rep)| rep)
            .collect();
        let theta_reps: Vec<&ClassFunction> = theta
            .iter()
            .filter(|(s, _)| s == label)
            .map(|(_, rep)| rep)
            .collect();
        let rank_gamma = rank_of(&gamma_reps)?;
        let rank_theta = rank_of(&theta_reps)?;
        let union: Vec<&ClassFunction> = gamma_reps
            .iter()
            .chain(theta_reps.iter())
            .copied()
            .collect();
        strata.push(StratumSpans {
            stratum: label.clone(),
            dim: *dim,
            gamma_lines: gamma_reps.len(),
            theta_lines: theta_reps.len(),
            rank_gamma,
            rank_theta,
            rank_union: rank_of(&union)?,
        });
    }
    Ok(DecompositionReport { n_lines, n_classes, line_rank, strata })
}

/// Torus-pair Mackey check: the exact inner product of two induced torus
/// characters against the combinatorial transporter count in the relative
/// Weyl action.
#[derive(Clone, Debug)]
pub struct MackeyCheck {
    pub lhs: CycloElem,
    pub rhs: u64,
}

impl MackeyCheck {
    pub fn equal(&self) -> bool {
        self.lhs == CycloElem::from_int(self.rhs as i64)
    }
}

pub fn mackey_check(
    ctx: &GroupCtx,
    torus: &TorusType,
    theta: &TorusChar,
    torus2: &TorusType,
    theta2: &TorusChar,
) -> Result<MackeyCheck, DlError> {
    let lhs = inner_product(
        ctx,
        &dl_character(ctx, torus, theta)?,
        &dl_character(ctx, torus2, theta2)?,
    )?;
    let rhs = if torus == torus2 {
        weyl_transporter_count(ctx.spec(), torus, theta, theta2)
    } else {
        0
    };
    Ok(MackeyCheck { lhs, rhs })
}
