//! Lusztig induction of class functions from a Levi, realized through the
//! line decomposition: expand the source function over the Levi's lines,
//! then transport each torus line `R_T(theta)` of the Levi to the ambient
//! torus line with the concatenated torus type and the same character.
//!
//! Induction sources are rational block Levis of `GL_n`, maximal tori of
//! any twist, and the group itself.  Block towers agree with the ambient
//! tower on shared levels (tower construction is prefix-stable), so
//! character exponents transport verbatim.

use crate::combinat::Partition;
use crate::exactnum::{solve_linear, CycloElem, CycloMatrix, Rational, SolveOutcome};
use crate::grptypes::{
    torus_character_orbits, torus_elements, Family, GroupSpec, TorusChar, TorusElem,
    TorusType,
};
use num_bigint::BigInt;
use num_traits::One;

use super::{dl_character, ClassFunction, DlError, GroupCtx};

/// Induction source inside the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeviSpec {
    /// Rational block Levi `prod GL_(n_i)` of `GL_n`.
    GlBlocks(Vec<u32>),
    /// A maximal torus of any twist.
    Torus(TorusType),
    /// The group itself.
    Full,
}

enum LeviKind {
    Blocks {
        blocks: Vec<GroupCtx>,
        class_tuples: Vec<Vec<usize>>,
    },
    Torus {
        torus: TorusType,
        elements: Vec<TorusElem>,
    },
    Full {
        group: GroupCtx,
    },
}

/// Context for class functions on a Levi.
pub struct LeviCtx {
    ambient: GroupSpec,
    kind: LeviKind,
}

/// Class function on the Levi, indexed by the Levi's canonical point order
/// (class tuples for block Levis, torus elements for tori, classes for the
/// full group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviClassFunction {
    values: Vec<CycloElem>,
}

impl LeviClassFunction {
    pub fn new(levi: &LeviCtx, values: Vec<CycloElem>) -> Result<Self, DlError> {
        if values.len() != levi.n_points() {
            return Err(DlError::LengthMismatch {
                got: values.len(),
                want: levi.n_points(),
            });
        }
        Ok(LeviClassFunction { values })
    }

    pub fn values(&self) -> &[CycloElem] {
        &self.values
    }

    pub fn add(&self, other: &LeviClassFunction) -> LeviClassFunction {
        LeviClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, by: &CycloElem) -> LeviClassFunction {
        LeviClassFunction {
            values: self.values.iter().map(|v| v * by).collect(),
        }
    }
}

impl LeviCtx {
    pub fn new(ctx: &GroupCtx, levi: &LeviSpec) -> Result<LeviCtx, DlError> {
        let spec = ctx.spec().clone();
        let kind = match levi {
            LeviSpec::Full => LeviKind::Full { group: GroupCtx::new(spec.clone()) },
            LeviSpec::Torus(torus) => {
                validate_torus(&spec, torus)?;
                LeviKind::Torus {
                    torus: torus.clone(),
                    elements: torus_elements(&spec, torus),
                }
            }
            LeviSpec::GlBlocks(sizes) => {
                let Family::Gl(n) = spec.family() else {
                    return Err(DlError::Group(crate::grptypes::GroupError::InvalidLevi(
                        "block Levis exist in GL specs only".into(),
                    )));
                };
                if sizes.iter().sum::<u32>() != n || sizes.iter().any(|&s| s == 0) {
                    return Err(DlError::Group(crate::grptypes::GroupError::InvalidLevi(
                        format!("blocks {sizes:?} do not fit GL{n}"),
                    )));
                }
                let blocks: Vec<GroupCtx> = sizes
                    .iter()
                    .map(|&s| Ok(GroupCtx::new(GroupSpec::gl(s, spec.q())?)))
                    .collect::<Result<_, DlError>>()?;
                let class_tuples = cartesian(
                    &blocks.iter().map(GroupCtx::n_classes).collect::<Vec<_>>(),
                );
                LeviKind::Blocks { blocks, class_tuples }
            }
        };
        Ok(LeviCtx { ambient: spec, kind })
    }

    /// Number of evaluation points of a class function on the Levi.
    pub fn n_points(&self) -> usize {
        match &self.kind {
            LeviKind::Blocks { class_tuples, .. } => class_tuples.len(),
            LeviKind::Torus { elements, .. } => elements.len(),
            LeviKind::Full { group } => group.n_classes(),
        }
    }

    pub fn block_contexts(&self) -> Option<&[GroupCtx]> {
        match &self.kind {
            LeviKind::Blocks { blocks, .. } => Some(blocks),
            _ => None,
        }
    }

    pub fn class_tuples(&self) -> Option<&[Vec<usize>]> {
        match &self.kind {
            LeviKind::Blocks { class_tuples, .. } => Some(class_tuples),
            _ => None,
        }
    }

    /// `R_T^M(theta)` for a torus of the Levi, as a function on the Levi.
    /// For block Levis the torus is given per block.
    pub fn torus_line_function(
        &self,
        per_block: &[(Partition, TorusChar)],
    ) -> Result<LeviClassFunction, DlError> {
        match &self.kind {
            LeviKind::Blocks { blocks, class_tuples } => {
                if per_block.len() != blocks.len() {
                    return Err(DlError::LengthMismatch {
                        got: per_block.len(),
                        want: blocks.len(),
                    });
                }
                let reps: Vec<ClassFunction> = blocks
                    .iter()
                    .zip(per_block)
                    .map(|(b, (lambda, theta))| {
                        dl_character(b, &TorusType::Gl(lambda.clone()), theta)
                    })
                    .collect::<Result<_, DlError>>()?;
                let values = class_tuples
                    .iter()
                    .map(|tuple| {
                        let mut v = CycloElem::one();
                        for (rep, &ci) in reps.iter().zip(tuple) {
                            v = &v * rep.value(ci);
                        }
                        v
                    })
                    .collect();
                Ok(LeviClassFunction { values })
            }
            LeviKind::Torus { torus, elements } => {
                let (_, theta) = per_block
                    .first()
                    .ok_or(DlError::LengthMismatch { got: 0, want: 1 })?;
                let orders = torus.factor_orders(&self.ambient);
                if theta.exps.len() != orders.len() {
                    return Err(DlError::CharShapeMismatch {
                        got: theta.exps.len(),
                        want: orders.len(),
                    });
                }
                let values = elements
                    .iter()
                    .map(|t| character_value(&orders, theta, t))
                    .collect::<Result<_, DlError>>()?;
                Ok(LeviClassFunction { values })
            }
            LeviKind::Full { group } => {
                let (lambda, theta) = per_block
                    .first()
                    .ok_or(DlError::LengthMismatch { got: 0, want: 1 })?;
                let torus = match group.spec().family() {
                    Family::Gl(_) => TorusType::Gl(lambda.clone()),
                    Family::Sl2 => unreachable!("use dl_character for SL2 directly"),
                };
                let f = dl_character(group, &torus, theta)?;
                Ok(LeviClassFunction { values: f.values().to_vec() })
            }
        }
    }

    /// Wrap a class function on the group itself (the `Full` Levi).
    pub fn from_class_function(&self, f: &ClassFunction) -> Result<LeviClassFunction, DlError> {
        match &self.kind {
            LeviKind::Full { group } => {
                if f.spec() != group.spec() {
                    return Err(DlError::SpecMismatch);
                }
                Ok(LeviClassFunction { values: f.values().to_vec() })
            }
            _ => Err(DlError::SpecMismatch),
        }
    }
}

fn validate_torus(spec: &GroupSpec, torus: &TorusType) -> Result<(), DlError> {
    let ok = match (spec.family(), torus) {
        (Family::Gl(n), TorusType::Gl(lambda)) => lambda.weight() == n,
        (Family::Sl2, TorusType::Sl2(_)) => true,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(DlError::Group(crate::grptypes::GroupError::InvalidLevi(
            format!("torus {torus} does not live in {spec}"),
        )))
    }
}

fn cartesian(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let mut next = Vec::with_capacity(out.len() * s);
        for t in &out {
            for i in 0..s {
                let mut tt = t.clone();
                tt.push(i);
                next.push(tt);
            }
        }
        out = next;
    }
    out
}

fn character_value(
    orders: &[u64],
    theta: &TorusChar,
    t: &TorusElem,
) -> Result<CycloElem, DlError> {
    let level = orders.iter().copied().fold(1u64, num_integer::lcm);
    let mut exp = 0u64;
    for ((&o, &c), &e) in orders.iter().zip(&theta.exps).zip(&t.exps) {
        exp = (exp + (c % o) * (e % o) % o * (level / o)) % level;
    }
    Ok(CycloElem::root_of_unity(level, exp as i64)?)
}

/// Torus line of a block Levi, with the data needed for transport.
struct BlockLine {
    per_block: Vec<(Partition, TorusChar)>,
}

impl BlockLine {
    /// Concatenate the per-block torus data into an ambient torus type and
    /// character, keeping each part paired with its exponent.
    fn transport(&self) -> (TorusType, TorusChar) {
        let mut pairs: Vec<(u32, u64)> = Vec::new();
        for (lambda, theta) in &self.per_block {
            pairs.extend(
                lambda
                    .parts()
                    .iter()
                    .copied()
                    .zip(theta.exps.iter().copied()),
            );
        }
        pairs.sort_by(|a, b| b.0.cmp(&a.0));
        let lambda = Partition::new(pairs.iter().map(|p| p.0).collect())
            .expect("sorted parts form a partition");
        let exps = pairs.iter().map(|p| p.1).collect();
        (TorusType::Gl(lambda), TorusChar { exps })
    }
}

/// Lusztig induction `cl(M^F) -> cl(G^F)`: exact expansion of the source
/// over the Levi's lines followed by line transport.  For `M = G` this is
/// the identity; for a torus it recovers the Deligne-Lusztig character map.
pub fn lusztig_induction(
    ctx: &GroupCtx,
    levi: &LeviCtx,
    f: &LeviClassFunction,
) -> Result<ClassFunction, DlError> {
    if levi.ambient != *ctx.spec() {
        return Err(DlError::SpecMismatch);
    }
    if f.values.len() != levi.n_points() {
        return Err(DlError::LengthMismatch {
            got: f.values.len(),
            want: levi.n_points(),
        });
    }
    match &levi.kind {
        LeviKind::Full { .. } => {
            ClassFunction::new(ctx, f.values.clone())
        }
        LeviKind::Torus { torus, elements } => {
            // Fourier expansion over the characters of T^F, then each
            // character line maps to its Deligne-Lusztig character.
            let orders = torus.factor_orders(ctx.spec());
            let size = Rational::new(
                BigInt::one(),
                BigInt::from(elements.len() as u64),
            );
            let mut result = ClassFunction::zero(ctx);
            for exps in cartesian(&orders.iter().map(|&o| o as usize).collect::<Vec<_>>())
            {
                let theta = TorusChar {
                    exps: exps.iter().map(|&e| e as u64).collect(),
                };
                let mut coeff = CycloElem::zero();
                for (t, fv) in elements.iter().zip(&f.values) {
                    if fv.is_zero() {
                        continue;
                    }
                    coeff += &(fv * &character_value(&orders, &theta, t)?.conj());
                }
                let coeff = coeff.scale(&size);
                if coeff.is_zero() {
                    continue;
                }
                let line = dl_character(ctx, torus, &theta)?;
                result = result.add(&line.scale(&coeff))?;
            }
            Ok(result)
        }
        LeviKind::Blocks { blocks, class_tuples } => {
            // Enumerate the Levi's lines (tuples of per-block torus lines).
            let per_block_lines: Vec<Vec<(Partition, TorusChar)>> = blocks
                .iter()
                .map(|b| {
                    let mut lines = Vec::new();
                    for (torus, _) in b.tori() {
                        let TorusType::Gl(lambda) = torus else { unreachable!() };
                        for orbit in torus_character_orbits(b.spec(), torus) {
                            lines.push((lambda.clone(), orbit.rep));
                        }
                    }
                    lines
                })
                .collect();
            let index_tuples =
                cartesian(&per_block_lines.iter().map(Vec::len).collect::<Vec<_>>());
            let lines: Vec<BlockLine> = index_tuples
                .iter()
                .map(|tuple| BlockLine {
                    per_block: tuple
                        .iter()
                        .enumerate()
                        .map(|(j, &li)| per_block_lines[j][li].clone())
                        .collect(),
                })
                .collect();
            // Solve f = sum_L a_L rep_L exactly.
            let reps: Vec<LeviClassFunction> = lines
                .iter()
                .map(|l| levi.torus_line_function(&l.per_block))
                .collect::<Result<_, DlError>>()?;
            let rows: Vec<Vec<CycloElem>> = (0..class_tuples.len())
                .map(|r| reps.iter().map(|rep| rep.values[r].clone()).collect())
                .collect();
            let matrix = CycloMatrix::from_rows(rows)?;
            let solution = match solve_linear(&matrix, &f.values)? {
                SolveOutcome::Solved { solution, .. } => solution,
                SolveOutcome::Inconsistent { .. } => {
                    return Err(DlError::ExpansionInconsistent)
                }
            };
            let mut result = ClassFunction::zero(ctx);
            for (coeff, line) in solution.iter().zip(&lines) {
                if coeff.is_zero() {
                    continue;
                }
                let (torus, theta) = line.transport();
                let induced = dl_character(ctx, &torus, &theta)?;
                result = result.add(&induced.scale(coeff))?;
            }
            Ok(result)
        }
    }
}
