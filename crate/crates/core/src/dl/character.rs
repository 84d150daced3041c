//! The Deligne-Lusztig character of a maximal torus, through classical
//! Green polynomials.
//!
//! The value at a class with semisimple datum `sigma` and unipotent
//! partitions `mu_o` (one per eigenvalue orbit `o`, of degree `d_o`) is
//!
//! ```text
//!   sum over t in T^F with eigenvalue multiset sigma of
//!       prod_o Q^(mu_o)_(rho_o(t))(q^(d_o)) * theta(t)
//! ```
//!
//! where `rho_o(t)` collects, for every torus coordinate `i` whose value
//! lies in orbit `o`, the part `lambda_i / d_o`.  The empty sum is 0, and
//! no additional sign factor appears (the Green-polynomial convention is
//! pinned against the brute-force oracle).

use std::collections::HashMap;

use num_traits::One;

use crate::combinat::{green_polynomial, Partition};
use crate::exactnum::{CycloElem, Rational};
use crate::gftower::{FieldElem, FrobOrbit};
use crate::grptypes::{
    torus_elements, Family, Sl2Torus, TorusChar, TorusElem, TorusType,
};

use super::{ClassFunction, DlError, GroupCtx};

/// Eigenvalue bookkeeping for one torus element: the semisimple key and the
/// per-orbit sub-torus types.
struct EigenData {
    key: Vec<(FrobOrbit, u32)>,
    rho: Vec<(FrobOrbit, Partition)>,
}

fn eigen_data(ctx: &GroupCtx, torus: &TorusType, t: &TorusElem) -> EigenData {
    let tower = ctx.spec().tower();
    // (orbit, contributed part) per coordinate
    let coords: Vec<(FrobOrbit, u32)> = match torus {
        TorusType::Gl(lambda) => lambda
            .parts()
            .iter()
            .zip(&t.exps)
            .map(|(&part, &e)| {
                let x = FieldElem::from_exp(part, e);
                let orbit = tower.orbit_of(&x);
                (orbit, part / orbit.degree)
            })
            .collect(),
        TorusType::Sl2(Sl2Torus::Split) => {
            // diag(x, x^-1): two degree-1 slots, coinciding exactly on the
            // central elements.
            let q = ctx.spec().q();
            let e = t.exps[0] % (q - 1);
            let inv = (q - 1 - e) % (q - 1);
            vec![
                (tower.orbit_of(&FieldElem::from_exp(1, e)), 1),
                (tower.orbit_of(&FieldElem::from_exp(1, inv)), 1),
            ]
        }
        TorusType::Sl2(Sl2Torus::Coxeter) => {
            let q = ctx.spec().q();
            let i = t.exps[0] % (q + 1);
            let x = FieldElem::from_exp(2, (q - 1) * i);
            let orbit = tower.orbit_of(&x);
            if orbit.degree == 1 {
                // +-1: eigenvalue multiplicity two
                vec![(orbit, 2)]
            } else {
                vec![(orbit, 1)]
            }
        }
    };
    let mut mult: HashMap<FrobOrbit, u32> = HashMap::new();
    let mut parts: HashMap<FrobOrbit, Vec<u32>> = HashMap::new();
    for (orbit, part) in coords {
        *mult.entry(orbit).or_insert(0) += part;
        parts.entry(orbit).or_default().push(part);
    }
    let mut key: Vec<(FrobOrbit, u32)> = mult.into_iter().collect();
    key.sort_unstable();
    let mut rho: Vec<(FrobOrbit, Partition)> = parts
        .into_iter()
        .map(|(o, p)| (o, Partition::from_unsorted(p)))
        .collect();
    rho.sort_by(|a, b| a.0.cmp(&b.0));
    EigenData { key, rho }
}

/// `theta(t)` as an exact root of unity.
fn pairing(
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

/// Deligne-Lusztig character `R_T(theta)` as an exact class function.
pub fn dl_character(
    ctx: &GroupCtx,
    torus: &TorusType,
    theta: &TorusChar,
) -> Result<ClassFunction, DlError> {
    let orders = torus.factor_orders(ctx.spec());
    if theta.exps.len() != orders.len() {
        return Err(DlError::CharShapeMismatch {
            got: theta.exps.len(),
            want: orders.len(),
        });
    }
    if let (Family::Gl(n), TorusType::Gl(lambda)) = (ctx.spec().family(), torus) {
        if lambda.weight() != n {
            return Err(DlError::Group(crate::grptypes::GroupError::InvalidLevi(
                format!("torus type {lambda} does not fit GL{n}"),
            )));
        }
    }
    // Group the torus elements by semisimple key.
    let mut by_key: HashMap<Vec<(FrobOrbit, u32)>, Vec<(Vec<(FrobOrbit, Partition)>, CycloElem)>> =
        HashMap::new();
    for t in torus_elements(ctx.spec(), torus) {
        let data = eigen_data(ctx, torus, &t);
        let root = pairing(&orders, theta, &t)?;
        by_key.entry(data.key).or_default().push((data.rho, root));
    }
    let q = ctx.spec().q();
    let mut values = Vec::with_capacity(ctx.n_classes());
    for rec in ctx.classes() {
        let key = rec.class.semisimple_key(ctx.spec());
        let unip = rec.class.unipotent_data(ctx.spec());
        let mut value = CycloElem::zero();
        if let Some(terms) = by_key.get(&key) {
            for (rho, root) in terms {
                let mut factor = Rational::one();
                for ((orbit, mu), (orbit2, rho_o)) in unip.iter().zip(rho) {
                    debug_assert_eq!(orbit, orbit2);
                    let green = green_polynomial(mu, rho_o)
                        .expect("matching weights by construction");
                    factor *= Rational::from(green.eval_u64(q.pow(orbit.degree)));
                }
                value += &root.scale(&factor);
            }
        }
        values.push(value);
    }
    Ok(ClassFunction { spec: ctx.spec().clone(), values })
}
