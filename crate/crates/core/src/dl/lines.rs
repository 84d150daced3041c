//! The two line systems spanning the class-function space: induced torus
//! lines plus (for `SL_2`) the two cuspidal lines, and the class/local-
//! system lines with their strata under the Springer-data map.

use crate::exactnum::CycloElem;
use crate::grptypes::{
    torus_character_orbits, ClassType, Family, Sign, Sl2Class, Sl2Stratum, SquareClass,
    StratumLabel, TorusChar, TorusType,
};

use super::{dl_character, ClassFunction, DlError, GroupCtx};

/// Datum of a one-dimensional constituent of the class-function space:
/// a torus with a character orbit, or (for `SL_2`) a cuspidal datum on a
/// unipotent central coset.  Lines are stored projectively; representative
/// functions are canonical but any nonzero scaling spans the same line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GammaLine {
    Torus { torus: TorusType, theta: TorusChar },
    Cuspidal { sign: Sign },
}

impl GammaLine {
    /// The stratum carrying this line.
    pub fn stratum(&self, ctx: &GroupCtx) -> StratumLabel {
        match self {
            GammaLine::Torus { .. } => StratumLabel::dense(ctx.spec()),
            GammaLine::Cuspidal { sign } => {
                StratumLabel::Sl2(Sl2Stratum::UnipCoset(*sign))
            }
        }
    }
}

/// The epsilon-twisted indicator carried by a cuspidal line: `+1` on the
/// unit square class, `-1` on the non-square class of the chosen coset.
fn cuspidal_representative(ctx: &GroupCtx, sign: Sign) -> ClassFunction {
    let values = ctx
        .classes()
        .iter()
        .map(|rec| match &rec.class {
            ClassType::Sl2(Sl2Class::UnipotentCentral(s, sq)) if *s == sign => {
                match sq {
                    SquareClass::Unit => CycloElem::one(),
                    SquareClass::NonSquare => CycloElem::from_int(-1),
                }
            }
            _ => CycloElem::zero(),
        })
        .collect();
    ClassFunction { spec: ctx.spec().clone(), values }
}

/// All lines of the group with representative class functions, in
/// deterministic order.
pub fn enumerate_lines(ctx: &GroupCtx) -> Result<Vec<(GammaLine, ClassFunction)>, DlError> {
    let mut out = Vec::new();
    for (torus, _) in ctx.tori() {
        for orbit in torus_character_orbits(ctx.spec(), torus) {
            let rep = dl_character(ctx, torus, &orbit.rep)?;
            out.push((
                GammaLine::Torus { torus: torus.clone(), theta: orbit.rep },
                rep,
            ));
        }
    }
    if ctx.spec().family() == Family::Sl2 {
        for sign in Sign::all() {
            out.push((
                GammaLine::Cuspidal { sign },
                cuspidal_representative(ctx, sign),
            ));
        }
    }
    Ok(out)
}

/// Geometric conjugacy class label: for `GL_n` every rational class is its
/// own geometric class; for `SL_2` the two unipotent square classes of a
/// coset merge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeometricClass {
    Gl(ClassType),
    Sl2(Sl2Geometric),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sl2Geometric {
    Central(Sign),
    Unipotent(Sign),
    SplitRss { exp: u64 },
    NonsplitRss { index: u64 },
}

impl GeometricClass {
    /// The rational classes contained in this geometric class.
    pub fn rational_classes(&self) -> Vec<ClassType> {
        match self {
            GeometricClass::Gl(c) => vec![c.clone()],
            GeometricClass::Sl2(g) => match g {
                Sl2Geometric::Central(s) => {
                    vec![ClassType::Sl2(Sl2Class::Central(*s))]
                }
                Sl2Geometric::Unipotent(s) => vec![
                    ClassType::Sl2(Sl2Class::UnipotentCentral(*s, SquareClass::Unit)),
                    ClassType::Sl2(Sl2Class::UnipotentCentral(*s, SquareClass::NonSquare)),
                ],
                Sl2Geometric::SplitRss { exp } => {
                    vec![ClassType::Sl2(Sl2Class::SplitRss { exp: *exp })]
                }
                Sl2Geometric::NonsplitRss { index } => {
                    vec![ClassType::Sl2(Sl2Class::NonsplitRss { index: *index })]
                }
            },
        }
    }

    /// All geometric classes of the group, in canonical order.
    pub fn enumerate(ctx: &GroupCtx) -> Vec<GeometricClass> {
        match ctx.spec().family() {
            Family::Gl(_) => ctx
                .classes()
                .iter()
                .map(|rec| GeometricClass::Gl(rec.class.clone()))
                .collect(),
            Family::Sl2 => {
                let mut out = Vec::new();
                for rec in ctx.classes() {
                    let ClassType::Sl2(c) = &rec.class else { unreachable!() };
                    let g = match c {
                        Sl2Class::Central(s) => Sl2Geometric::Central(*s),
                        Sl2Class::UnipotentCentral(s, SquareClass::Unit) => {
                            Sl2Geometric::Unipotent(*s)
                        }
                        Sl2Class::UnipotentCentral(_, SquareClass::NonSquare) => continue,
                        Sl2Class::SplitRss { exp } => {
                            Sl2Geometric::SplitRss { exp: *exp }
                        }
                        Sl2Class::NonsplitRss { index } => {
                            Sl2Geometric::NonsplitRss { index: *index }
                        }
                    };
                    out.push(GeometricClass::Sl2(g));
                }
                out
            }
        }
    }
}

/// Equivariant local-system label on a class.  `Epsilon` exists only on the
/// unipotent central cosets of `SL_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LocalSystem {
    Trivial,
    Epsilon,
}

/// A (class, local system) line datum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThetaLine {
    pub class: GeometricClass,
    pub local_system: LocalSystem,
}

impl ThetaLine {
    /// Representative class function: the indicator of the rational points
    /// of the geometric class, twisted by `-1` on the non-square class when
    /// the local system is epsilon.
    pub fn representative(&self, ctx: &GroupCtx) -> Result<ClassFunction, DlError> {
        match self.local_system {
            LocalSystem::Trivial => {
                let members = self.class.rational_classes();
                Ok(ClassFunction::indicator(ctx, |c| members.contains(c)))
            }
            LocalSystem::Epsilon => {
                let GeometricClass::Sl2(Sl2Geometric::Unipotent(sign)) = self.class else {
                    return Err(DlError::NoSuchLocalSystem);
                };
                Ok(cuspidal_representative(ctx, sign))
            }
        }
    }
}

/// All (class, local system) lines of the group.
pub fn theta_lines(ctx: &GroupCtx) -> Vec<ThetaLine> {
    let mut out = Vec::new();
    for class in GeometricClass::enumerate(ctx) {
        out.push(ThetaLine { class: class.clone(), local_system: LocalSystem::Trivial });
        if let GeometricClass::Sl2(Sl2Geometric::Unipotent(_)) = class {
            out.push(ThetaLine { class, local_system: LocalSystem::Epsilon });
        }
    }
    out
}

/// The stratum attached to a (class, local system) pair through its
/// Springer data: the dense stratum for ordinary data, the unipotent coset
/// for the epsilon systems of `SL_2`.
pub fn psi(ctx: &GroupCtx, line: &ThetaLine) -> Result<StratumLabel, DlError> {
    match line.local_system {
        LocalSystem::Trivial => Ok(StratumLabel::dense(ctx.spec())),
        LocalSystem::Epsilon => match &line.class {
            GeometricClass::Sl2(Sl2Geometric::Unipotent(sign)) => {
                Ok(StratumLabel::Sl2(Sl2Stratum::UnipCoset(*sign)))
            }
            _ => Err(DlError::NoSuchLocalSystem),
        },
    }
}

/// Whether the pair's stratum is the dense regular-semisimple one.
pub fn is_principal_type(ctx: &GroupCtx, line: &ThetaLine) -> Result<bool, DlError> {
    Ok(psi(ctx, line)? == StratumLabel::dense(ctx.spec()))
}
