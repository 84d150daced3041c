//! Parsers for the label grammars used on the command line; these are the
//! inverses of the Display implementations in the library.

use dlcf::combinat::Partition;
use dlcf::dl::{GeometricClass, IndicatorTarget, Sl2Geometric};
use dlcf::gftower::FrobOrbit;
use dlcf::grptypes::{
    ClassType, Family, GroupSpec, Sign, Sl2Class, Sl2Torus, SquareClass, TorusChar,
    TorusType,
};

use crate::AppError;

pub fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

pub fn parse_partition(s: &str) -> Result<Partition, AppError> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("malformed partition {s:?}: expected like \"2,1\"")))?;
    Partition::new(parts).map_err(|e| usage(format!("malformed partition {s:?}: {e}")))
}

pub fn parse_exps(s: &str) -> Result<Vec<u64>, AppError> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("malformed exponent list {s:?}: expected like \"1,0\"")))
}

pub fn parse_torus(spec: &GroupSpec, s: &str) -> Result<TorusType, AppError> {
    match spec.family() {
        Family::Gl(n) => {
            let lambda = parse_partition(s)?;
            if lambda.weight() != n {
                return Err(usage(format!(
                    "torus partition {lambda} has weight {}, the group needs {n}",
                    lambda.weight()
                )));
            }
            Ok(TorusType::Gl(lambda))
        }
        Family::Sl2 => match s {
            "split" => Ok(TorusType::Sl2(Sl2Torus::Split)),
            "coxeter" => Ok(TorusType::Sl2(Sl2Torus::Coxeter)),
            other => Err(usage(format!(
                "unknown SL_2 torus {other:?}: expected \"split\" or \"coxeter\""
            ))),
        },
    }
}

pub fn parse_theta(
    spec: &GroupSpec,
    torus: &TorusType,
    s: &str,
) -> Result<TorusChar, AppError> {
    let exps = parse_exps(s)?;
    let orders = torus.factor_orders(spec);
    if exps.len() != orders.len() {
        return Err(usage(format!(
            "character {s:?} has {} exponents, torus {torus} has {} factors",
            exps.len(),
            orders.len()
        )));
    }
    Ok(TorusChar {
        exps: exps.iter().zip(&orders).map(|(&e, &o)| e % o).collect(),
    })
}

pub fn parse_blocks(s: &str) -> Result<Vec<u32>, AppError> {
    let blocks: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("malformed block list {s:?}: expected like \"2,1\"")))?;
    if blocks.iter().any(|&b| b == 0) {
        return Err(usage("block sizes must be positive"));
    }
    Ok(blocks)
}

/// Class label grammar: the output of `classes`.
pub fn parse_indicator_target(
    spec: &GroupSpec,
    s: &str,
) -> Result<IndicatorTarget, AppError> {
    match spec.family() {
        Family::Gl(_) => Ok(IndicatorTarget::Geometric(GeometricClass::Gl(
            parse_gl_class(s)?,
        ))),
        Family::Sl2 => parse_sl2_target(s),
    }
}

fn parse_gl_class(s: &str) -> Result<ClassType, AppError> {
    let mut pairs = Vec::new();
    for seg in s.split('*') {
        let seg = seg.trim();
        let rest = seg
            .strip_prefix('[')
            .ok_or_else(|| usage(format!("malformed class segment {seg:?}")))?;
        let (orbit_part, mu_part) = rest
            .split_once("]:")
            .ok_or_else(|| usage(format!("malformed class segment {seg:?}")))?;
        let (d, e) = orbit_part
            .split_once(',')
            .ok_or_else(|| usage(format!("malformed orbit in {seg:?}")))?;
        let degree: u32 = d
            .trim()
            .parse()
            .map_err(|_| usage(format!("malformed orbit degree in {seg:?}")))?;
        let exp: u64 = e
            .trim()
            .parse()
            .map_err(|_| usage(format!("malformed orbit exponent in {seg:?}")))?;
        let parts: Vec<u32> = mu_part
            .split('.')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("malformed partition in {seg:?}")))?;
        let mu = Partition::new(parts)
            .map_err(|e| usage(format!("malformed partition in {seg:?}: {e}")))?;
        pairs.push((FrobOrbit { degree, exp }, mu));
    }
    pairs.sort_unstable();
    Ok(ClassType::Gl(pairs))
}

fn parse_sl2_target(s: &str) -> Result<IndicatorTarget, AppError> {
    let sign = |c: char| match c {
        '+' => Ok(Sign::Plus),
        '-' => Ok(Sign::Minus),
        _ => Err(usage(format!("expected a sign in {s:?}"))),
    };
    let chars: Vec<char> = s.chars().collect();
    match chars.as_slice() {
        ['z', sg] => Ok(IndicatorTarget::Geometric(GeometricClass::Sl2(
            Sl2Geometric::Central(sign(*sg)?),
        ))),
        ['u', sg] => Ok(IndicatorTarget::Geometric(GeometricClass::Sl2(
            Sl2Geometric::Unipotent(sign(*sg)?),
        ))),
        ['u', sg, which] => {
            let sq = match which {
                '1' => SquareClass::Unit,
                'n' => SquareClass::NonSquare,
                _ => return Err(usage(format!("unknown square class in {s:?}"))),
            };
            Ok(IndicatorTarget::Rational(ClassType::Sl2(
                Sl2Class::UnipotentCentral(sign(*sg)?, sq),
            )))
        }
        ['s', rest @ ..] => {
            let exp: u64 = rest
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| usage(format!("malformed split class {s:?}")))?;
            Ok(IndicatorTarget::Geometric(GeometricClass::Sl2(
                Sl2Geometric::SplitRss { exp },
            )))
        }
        ['c', rest @ ..] => {
            let index: u64 = rest
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| usage(format!("malformed nonsplit class {s:?}")))?;
            Ok(IndicatorTarget::Geometric(GeometricClass::Sl2(
                Sl2Geometric::NonsplitRss { index },
            )))
        }
        _ => Err(usage(format!(
            "unknown SL_2 class label {s:?}: see the output of `classes`"
        ))),
    }
}
