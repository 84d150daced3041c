//! Harish-Chandra induction by direct summation over the group, and the
//! oracle cross-validation of the combinatorial pipeline.

use num_bigint::BigInt;
use num_traits::One;

use crate::dl::{
    enumerate_lines, inner_product, lusztig_induction, ClassFunction, GammaLine,
    GroupCtx, LeviClassFunction, LeviCtx, LeviSpec,
};
use crate::exactnum::{CycloElem, Rational};
use crate::grptypes::{
    torus_character_orbits, weyl_transporter_count, Family, Sl2Torus, TorusType,
};

use super::dixon::dixon_table;
use super::group::{enumerate_group, MatrixGroup};
use super::BruteError;

/// Classical induction of the inflated function from a standard
/// block-diagonal Levi through the block-upper-triangular parabolic:
/// `(Ind f)(g) = |P^F|^-1 * sum over x in G^F with x g x^-1 in P^F of
/// f(Levi projection of x g x^-1)`.
pub fn harish_chandra(
    group: &MatrixGroup,
    levi: &LeviCtx,
    blocks: &[u32],
    f: &LeviClassFunction,
    ctx: &GroupCtx,
) -> Result<ClassFunction, BruteError> {
    let Some(block_ctxs) = levi.block_contexts() else {
        return Err(BruteError::NonStandardLevi(
            "Harish-Chandra induction needs a standard block Levi".into(),
        ));
    };
    let n = group.n();
    if blocks.iter().sum::<u32>() as usize != n || blocks.len() != block_ctxs.len() {
        return Err(BruteError::NonStandardLevi(format!(
            "blocks {blocks:?} do not match the ambient rank {n}"
        )));
    }
    let kit = group.kit();
    let q = group.spec().q();
    let mut above = 0u32;
    for (bi, &a) in blocks.iter().enumerate() {
        for &b in blocks.iter().skip(bi + 1) {
            above += a * b;
        }
    }
    let m_order: u128 = block_ctxs.iter().map(|c| c.spec().order()).product();
    let p_order = m_order * (q as u128).pow(above);

    let mut starts = vec![0usize];
    for &b in blocks {
        starts.push(starts.last().unwrap() + b as usize);
    }
    let in_parabolic = |m: &[u16]| -> bool {
        for (bi, &rs) in starts.iter().take(blocks.len()).enumerate() {
            let re = starts[bi + 1];
            for row in rs..re {
                for col in 0..rs {
                    if m[row * n + col] != 0 {
                        return false;
                    }
                }
            }
        }
        true
    };

    let mut values = Vec::with_capacity(ctx.n_classes());
    for &class_id in group.canonical_class_order() {
        let g = group.class_representative(class_id).clone();
        let mut sum = CycloElem::zero();
        for xi in 0..group.elements().len() as u32 {
            let x = &group.elements()[xi as usize];
            let xg = kit.matmul(x, &g);
            let conj = kit.matmul(
                &xg,
                &group.elements()[group.inverse_index(xi) as usize],
            );
            if !in_parabolic(&conj) {
                continue;
            }
            let mut tuple_index = 0usize;
            for (bi, bctx) in block_ctxs.iter().enumerate() {
                let rs = starts[bi];
                let re = starts[bi + 1];
                let bn = re - rs;
                let mut blk = vec![0u16; bn * bn];
                for r in 0..bn {
                    for c in 0..bn {
                        blk[r * bn + c] = conj[(rs + r) * n + (rs + c)];
                    }
                }
                let bt = group.kit_sized(bn).gl_class_type(&blk)?;
                let pos = bctx.class_position(&bt).ok_or_else(|| {
                    BruteError::ClassMatch(format!("block class {bt} not found"))
                })?;
                tuple_index = tuple_index * bctx.n_classes() + pos;
            }
            sum += &f.values()[tuple_index];
        }
        values.push(sum.scale(&Rational::new(BigInt::one(), BigInt::from(p_order))));
    }
    Ok(ClassFunction::new(ctx, values)?)
}

/// Harish-Chandra induction from the split torus of `SL_2` (the Borel
/// case); `f` is indexed by the torus elements `e -> diag(g^e, g^-e)`.
pub fn harish_chandra_sl2_split(
    group: &MatrixGroup,
    f: &[CycloElem],
    ctx: &GroupCtx,
) -> Result<ClassFunction, BruteError> {
    if group.spec().family() != Family::Sl2 {
        return Err(BruteError::NonStandardLevi("SL_2 spec required".into()));
    }
    let q = group.spec().q();
    if f.len() as u64 != q - 1 {
        return Err(BruteError::NonStandardLevi(format!(
            "torus function has {} values, the split torus has {}",
            f.len(),
            q - 1
        )));
    }
    let kit = group.kit();
    let field = group.field();
    let b_order = (q as u128) * (q as u128 - 1);
    let mut values = Vec::with_capacity(ctx.n_classes());
    for &class_id in group.canonical_class_order() {
        let g = group.class_representative(class_id).clone();
        let mut sum = CycloElem::zero();
        for xi in 0..group.elements().len() as u32 {
            let x = &group.elements()[xi as usize];
            let xg = kit.matmul(x, &g);
            let conj = kit.matmul(
                &xg,
                &group.elements()[group.inverse_index(xi) as usize],
            );
            if conj[2] != 0 {
                continue;
            }
            sum += &f[field.dlog(conj[0]) as usize];
        }
        values.push(sum.scale(&Rational::new(BigInt::one(), BigInt::from(b_order))));
    }
    Ok(ClassFunction::new(ctx, values)?)
}

/// Ordered compositions of `n`.
fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            let mut c = vec![first];
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// Oracle cross-validation: Lusztig induction against Harish-Chandra
/// induction on every standard Levi and torus line, integrality of the
/// pairings with the Dixon irreducibles, norm one in general position, and
/// the certified class bijection.
pub struct CrossValidation {
    pub induction_checks: usize,
    pub integrality_checks: usize,
    pub general_position_checks: usize,
    pub class_match: bool,
    pub failures: Vec<String>,
}

impl CrossValidation {
    pub fn pass(&self) -> bool {
        self.class_match && self.failures.is_empty()
    }
}

pub fn cross_validate(ctx: &GroupCtx) -> Result<CrossValidation, BruteError> {
    let spec = ctx.spec().clone();
    let group = enumerate_group(&spec)?;
    let mut report = CrossValidation {
        induction_checks: 0,
        integrality_checks: 0,
        general_position_checks: 0,
        class_match: true, // certified during enumeration
        failures: Vec::new(),
    };

    // (1) Lusztig induction against Harish-Chandra induction
    match spec.family() {
        Family::Gl(n) => {
            for blocks in compositions(n) {
                let levi = LeviCtx::new(ctx, &LeviSpec::GlBlocks(blocks.clone()))?;
                let block_ctxs = levi.block_contexts().expect("block Levi");
                // all tuples of per-block torus lines
                let mut line_sets: Vec<Vec<(crate::combinat::Partition, crate::grptypes::TorusChar)>> =
                    vec![Vec::new()];
                for bctx in block_ctxs {
                    let mut next = Vec::new();
                    for (torus, _) in bctx.tori() {
                        let TorusType::Gl(lambda) = torus else { unreachable!() };
                        for orbit in torus_character_orbits(bctx.spec(), torus) {
                            for prefix in &line_sets {
                                let mut tuple = prefix.clone();
                                tuple.push((lambda.clone(), orbit.rep.clone()));
                                next.push(tuple);
                            }
                        }
                    }
                    line_sets = next;
                }
                for per_block in &line_sets {
                    let f = levi.torus_line_function(per_block)?;
                    let combinatorial = lusztig_induction(ctx, &levi, &f)?;
                    let oracle = harish_chandra(&group, &levi, &blocks, &f, ctx)?;
                    report.induction_checks += 1;
                    if combinatorial != oracle {
                        report.failures.push(format!(
                            "induction mismatch: blocks {blocks:?}, line {per_block:?}"
                        ));
                    }
                }
            }
        }
        Family::Sl2 => {
            let q = spec.q();
            let torus = TorusType::Sl2(Sl2Torus::Split);
            let levi = LeviCtx::new(ctx, &LeviSpec::Torus(torus.clone()))?;
            for c in 0..q - 1 {
                let theta = crate::grptypes::TorusChar { exps: vec![c] };
                let f = levi.torus_line_function(&[(
                    crate::combinat::Partition::new(vec![1]).unwrap(),
                    theta,
                )])?;
                let combinatorial = lusztig_induction(ctx, &levi, &f)?;
                let oracle = harish_chandra_sl2_split(&group, f.values(), ctx)?;
                report.induction_checks += 1;
                if combinatorial != oracle {
                    report
                        .failures
                        .push(format!("split-torus induction mismatch at theta {c}"));
                }
            }
        }
    }

    // (2) integral pairing of every induced torus character with every
    //     Dixon irreducible, and (3) norm one in general position
    let table = dixon_table(&group, ctx)?;
    for (line, rep) in enumerate_lines(ctx)? {
        let GammaLine::Torus { torus, theta } = &line else {
            continue;
        };
        for (chi_idx, chi) in table.irreducibles.iter().enumerate() {
            let ip = inner_product(ctx, &rep, chi)?;
            report.integrality_checks += 1;
            if ip.to_integer().is_none() {
                report.failures.push(format!(
                    "non-integral pairing of R({torus},{theta:?}) with irreducible {chi_idx}: {ip}"
                ));
            }
        }
        if weyl_transporter_count(ctx.spec(), torus, theta, theta) == 1 {
            let norm = inner_product(ctx, &rep, &rep)?;
            report.general_position_checks += 1;
            if norm != CycloElem::one() {
                report.failures.push(format!(
                    "general-position norm of R({torus},{theta:?}) is {norm}"
                ));
            }
        }
    }
    Ok(report)
}
