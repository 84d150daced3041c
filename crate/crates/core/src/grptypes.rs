//! Combinatorial model of the supported groups: class types, centralizer
//! orders, strata with their dimensions, covering degrees, and maximal tori
//! with their character orbits.
//!
//! Everything here lives at the type level; no matrices appear.  Conjugacy
//! classes of `GL_n(F_q)` are multisets of (Frobenius orbit of eigenvalues,
//! multiplicity partition); classes of `SL_2(F_q)` for odd `q` are a closed
//! enumeration including the two unipotent square classes.

use std::fmt;
use std::sync::Arc;

use crate::combinat::{partitions, Partition};
use crate::gftower::{FieldElem, FrobOrbit, Tower, TowerError};

/// `GL_n` is supported for `n <= 4`.
pub const MAX_GL_RANK: u32 = 4;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("GL rank {0} unsupported (1..={MAX_GL_RANK})")]
    UnsupportedRank(u32),
    #[error("SL_2 requires odd q, got {0}")]
    EvenCharacteristic(u64),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error("invalid Levi datum: {0}")]
    InvalidLevi(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl(u32),
    Sl2,
}

/// A supported finite reductive group `G(F_q)`.
#[derive(Clone)]
pub struct GroupSpec {
    family: Family,
    q: u64,
    tower: Arc<Tower>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.q == other.q
    }
}
impl Eq for GroupSpec {}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl(n) => write!(f, "GL{}(F{})", n, self.q),
            Family::Sl2 => write!(f, "SL2(F{})", self.q),
        }
    }
}

impl GroupSpec {
    pub fn gl(n: u32, q: u64) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_GL_RANK {
            return Err(GroupError::UnsupportedRank(n));
        }
        let tower = Tower::build(q, n)?;
        Ok(GroupSpec { family: Family::Gl(n), q, tower: Arc::new(tower) })
    }

    pub fn sl2(q: u64) -> Result<Self, GroupError> {
        if q % 2 == 0 {
            return Err(GroupError::EvenCharacteristic(q));
        }
        let tower = Tower::build(q, 2)?;
        Ok(GroupSpec { family: Family::Sl2, q, tower: Arc::new(tower) })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Matrix size: `n` for `GL_n`, 2 for `SL_2`.
    pub fn rank(&self) -> u32 {
        match self.family {
            Family::Gl(n) => n,
            Family::Sl2 => 2,
        }
    }

    /// `|G^F|` by the closed formula.
    pub fn order(&self) -> u128 {
        let q = self.q as u128;
        match self.family {
            Family::Gl(n) => {
                let qn = q.pow(n);
                (0..n).map(|i| qn - q.pow(i)).product()
            }
            Family::Sl2 => q * (q * q - 1),
        }
    }

    /// Discrete-log exponent of `-1` in `F_q^*`.
    pub fn minus_one_exp(&self) -> u64 {
        if self.q == 2 {
            0
        } else {
            (self.q - 1) / 2
        }
    }
}

pub fn group_order(spec: &GroupSpec) -> u128 {
    spec.order()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn all() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }

    pub fn symbol(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareClass {
    Unit,
    NonSquare,
}

/// Conjugacy class label for `SL_2(F_q)`, q odd.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Class {
    Central(Sign),
    /// `sign * (unipotent with parameter in the given square class)`.
    UnipotentCentral(Sign, SquareClass),
    /// `diag(x, x^-1)` with `x = g_1^exp`, `exp` canonical in `{e, q-1-e}`,
    /// excluding `x = +-1`.
    SplitRss { exp: u64 },
    /// Norm-one element of index `i` in `Z/(q+1)`, canonical in
    /// `{i, q+1-i}`, excluding `+-1`.
    NonsplitRss { index: u64 },
}

/// Conjugacy class label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassType {
    /// Multiset of (eigenvalue orbit, multiplicity partition), sorted,
    /// with total `sum degree * weight = n`.
    Gl(Vec<(FrobOrbit, Partition)>),
    Sl2(Sl2Class),
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassType::Gl(pairs) => {
                for (i, (orbit, mu)) in pairs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "[{},{}]:", orbit.degree, orbit.exp)?;
                    for (j, part) in mu.parts().iter().enumerate() {
                        if j > 0 {
                            write!(f, ".")?;
                        }
                        write!(f, "{part}")?;
                    }
                }
                Ok(())
            }
            ClassType::Sl2(c) => match c {
                Sl2Class::Central(s) => write!(f, "z{}", s.symbol()),
                Sl2Class::UnipotentCentral(s, a) => write!(
                    f,
                    "u{}{}",
                    s.symbol(),
                    if *a == SquareClass::Unit { '1' } else { 'n' }
                ),
                Sl2Class::SplitRss { exp } => write!(f, "s{exp}"),
                Sl2Class::NonsplitRss { index } => write!(f, "c{index}"),
            },
        }
    }
}

impl ClassType {
    /// Semisimple datum: eigenvalue orbits with multiplicities, sorted.
    pub fn semisimple_key(&self, spec: &GroupSpec) -> Vec<(FrobOrbit, u32)> {
        match self {
            ClassType::Gl(pairs) => {
                let mut key: Vec<(FrobOrbit, u32)> = pairs
                    .iter()
                    .map(|(o, mu)| (*o, mu.weight()))
                    .collect();
                key.sort_unstable();
                key
            }
            ClassType::Sl2(c) => {
                let q = spec.q();
                let one = FrobOrbit { degree: 1, exp: 0 };
                let minus_one = FrobOrbit { degree: 1, exp: spec.minus_one_exp() };
                match c {
                    Sl2Class::Central(s) | Sl2Class::UnipotentCentral(s, _) => {
                        vec![(if *s == Sign::Plus { one } else { minus_one }, 2)]
                    }
                    Sl2Class::SplitRss { exp } => {
                        let mut key = vec![
                            (FrobOrbit { degree: 1, exp: *exp }, 1),
                            (FrobOrbit { degree: 1, exp: q - 1 - exp }, 1),
                        ];
                        key.sort_unstable();
                        key
                    }
                    Sl2Class::NonsplitRss { index } => {
                        let orbit = spec.tower().orbit_of(&FieldElem::from_exp(
                            2,
                            (q - 1) * index,
                        ));
                        vec![(orbit, 1)]
                    }
                }
            }
        }
    }

    /// Unipotent partition attached to each eigenvalue orbit, sorted.
    pub fn unipotent_data(&self, spec: &GroupSpec) -> Vec<(FrobOrbit, Partition)> {
        match self {
            ClassType::Gl(pairs) => pairs.clone(),
            ClassType::Sl2(c) => {
                let mu = match c {
                    Sl2Class::Central(_) => Partition::new(vec![1, 1]).unwrap(),
                    Sl2Class::UnipotentCentral(_, _) => Partition::new(vec![2]).unwrap(),
                    _ => Partition::new(vec![1]).unwrap(),
                };
                self.semisimple_key(spec)
                    .into_iter()
                    .map(|(o, _)| (o, mu.clone()))
                    .collect()
            }
        }
    }
}

/// A class with its size and centralizer order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub class: ClassType,
    pub size: u128,
    pub centralizer: u128,
}

/// Centralizer order of a unipotent element of type `mu` in `GL_m(F_t)`:
/// `t^(sum mu'_i^2) * prod_j prod_(i=1..m_j) (1 - t^-i)`.
fn unipotent_centralizer(t: u128, mu: &Partition) -> u128 {
    let conj = mu.conjugate();
    let power: u64 = conj.parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    let mut denom_exp = 0u64;
    let mut numer = 1u128;
    for &(_, mult) in mu.multiplicities().iter() {
        for i in 1..=mult as u64 {
            denom_exp += i;
            numer *= t.pow(i as u32) - 1;
        }
    }
    t.pow((power - denom_exp) as u32) * numer
}

/// All conjugacy classes of the group, with sizes and centralizer orders,
/// in canonical order.
pub fn enumerate_classes(spec: &GroupSpec) -> Vec<ClassRecord> {
    let mut out = match spec.family() {
        Family::Gl(n) => {
            let tower = spec.tower();
            let mut orbits: Vec<FrobOrbit> = Vec::new();
            for d in 1..=n {
                orbits.extend(
                    tower
                        .frobenius_orbits(d)
                        .expect("tower supports levels up to n")
                        .into_iter()
                        .filter(|o| o.degree == d),
                );
            }
            orbits.sort_unstable();
            let mut classes = Vec::new();
            let mut current: Vec<(FrobOrbit, Partition)> = Vec::new();
            assign(spec, &orbits, 0, n, &mut current, &mut classes);
            classes
        }
        Family::Sl2 => sl2_classes(spec),
    };
    out.sort_by(|a, b| a.class.cmp(&b.class));
    out
}

fn assign(
    spec: &GroupSpec,
    orbits: &[FrobOrbit],
    idx: usize,
    remaining: u32,
    current: &mut Vec<(FrobOrbit, Partition)>,
    out: &mut Vec<ClassRecord>,
) {
    if remaining == 0 {
        let class = ClassType::Gl(current.clone());
        let centralizer: u128 = current
            .iter()
            .map(|(o, mu)| {
                unipotent_centralizer((spec.q() as u128).pow(o.degree), mu)
            })
            .product();
        out.push(ClassRecord {
            class,
            size: spec.order() / centralizer,
            centralizer,
        });
        return;
    }
    if idx == orbits.len() {
        return;
    }
    let d = orbits[idx].degree;
    // skip this orbit
    assign(spec, orbits, idx + 1, remaining, current, out);
    // or use it with some multiplicity partition
    if d <= remaining {
        for m in 1..=remaining / d {
            for mu in partitions(m).expect("m <= 4") {
                current.push((orbits[idx], mu));
                assign(spec, orbits, idx + 1, remaining - d * m, current, out);
                current.pop();
            }
        }
    }
}

fn sl2_classes(spec: &GroupSpec) -> Vec<ClassRecord> {
    let q = spec.q() as u128;
    let order = spec.order();
    let mut out = Vec::new();
    for sign in Sign::all() {
        out.push(ClassRecord {
            class: ClassType::Sl2(Sl2Class::Central(sign)),
            size: 1,
            centralizer: order,
        });
        for sq in [SquareClass::Unit, SquareClass::NonSquare] {
            out.push(ClassRecord {
                class: ClassType::Sl2(Sl2Class::UnipotentCentral(sign, sq)),
                size: (q * q - 1) / 2,
                centralizer: 2 * q,
            });
        }
    }
    let q = spec.q();
    for exp in 1..=(q - 1) / 2 {
        if exp == spec.minus_one_exp() {
            continue;
        }
        out.push(ClassRecord {
            class: ClassType::Sl2(Sl2Class::SplitRss { exp }),
            size: (q as u128) * (q as u128 + 1),
            centralizer: q as u128 - 1,
        });
    }
    for index in 1..=(q + 1) / 2 {
        if index == (q + 1) / 2 {
            continue; // -1 lives here
        }
        out.push(ClassRecord {
            class: ClassType::Sl2(Sl2Class::NonsplitRss { index }),
            size: (q as u128) * (q as u128 - 1),
            centralizer: q as u128 + 1,
        });
    }
    out
}

/// Stratum label: the pair `(L, S)` up to conjugacy.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StratumLabel {
    /// Multiset of `(block size m, unipotent partition of m)`, sorted.
    Gl(Vec<(u32, Partition)>),
    Sl2(Sl2Stratum),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Stratum {
    Rss,
    UnipCoset(Sign),
    Center(Sign),
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumLabel::Gl(pairs) => {
                for (i, (m, mu)) in pairs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{m}:")?;
                    for (j, part) in mu.parts().iter().enumerate() {
                        if j > 0 {
                            write!(f, ".")?;
                        }
                        write!(f, "{part}")?;
                    }
                }
                Ok(())
            }
            StratumLabel::Sl2(s) => match s {
                Sl2Stratum::Rss => write!(f, "rss"),
                Sl2Stratum::UnipCoset(sg) => write!(f, "unip{}", sg.symbol()),
                Sl2Stratum::Center(sg) => write!(f, "center{}", sg.symbol()),
            },
        }
    }
}

/// The stratum containing a class: each eigenvalue orbit of degree `d` with
/// multiplicity partition `mu` contributes `d` copies of `(|mu|, mu)`.
pub fn stratum_of_class(spec: &GroupSpec, class: &ClassType) -> StratumLabel {
    match class {
        ClassType::Gl(pairs) => {
            let mut blocks = Vec::new();
            for (orbit, mu) in pairs {
                for _ in 0..orbit.degree {
                    blocks.push((mu.weight(), mu.clone()));
                }
            }
            blocks.sort_unstable();
            StratumLabel::Gl(blocks)
        }
        ClassType::Sl2(c) => StratumLabel::Sl2(match c {
            Sl2Class::Central(s) => Sl2Stratum::Center(*s),
            Sl2Class::UnipotentCentral(s, _) => Sl2Stratum::UnipCoset(*s),
            _ => Sl2Stratum::Rss,
        }),
    }
    .validate(spec)
}

impl StratumLabel {
    fn validate(self, spec: &GroupSpec) -> StratumLabel {
        if let StratumLabel::Gl(blocks) = &self {
            debug_assert_eq!(
                blocks.iter().map(|(m, _)| m).sum::<u32>(),
                spec.rank()
            );
        }
        self
    }

    /// The dense stratum of the group (the regular semisimple one).
    pub fn dense(spec: &GroupSpec) -> StratumLabel {
        match spec.family() {
            Family::Gl(n) => StratumLabel::Gl(vec![
                (1, Partition::new(vec![1]).unwrap());
                n as usize
            ]),
            Family::Sl2 => StratumLabel::Sl2(Sl2Stratum::Rss),
        }
    }
}

/// All strata with their dimensions `2 nu_G - 2 nu_L + dim S`.
pub fn enumerate_strata(spec: &GroupSpec) -> Vec<(StratumLabel, u64)> {
    match spec.family() {
        Family::Gl(n) => {
            let mut labels = Vec::new();
            let mut current: Vec<(u32, Partition)> = Vec::new();
            // Enumerate sorted multisets of (m, mu |- m) with total m = n;
            // entries are chosen non-decreasing in the (m, mu) order.
            fn rec(
                remaining: u32,
                minimum: Option<&(u32, Partition)>,
                current: &mut Vec<(u32, Partition)>,
                out: &mut Vec<Vec<(u32, Partition)>>,
            ) {
                if remaining == 0 {
                    out.push(current.clone());
                    return;
                }
                for m in 1..=remaining {
                    for mu in partitions(m).expect("m <= 4") {
                        let entry = (m, mu);
                        if minimum.map(|lo| &entry < lo).unwrap_or(false) {
                            continue;
                        }
                        let floor = entry.clone();
                        current.push(entry);
                        rec(remaining - m, Some(&floor), current, out);
                        current.pop();
                    }
                }
            }
            let mut multisets = Vec::new();
            rec(n, None, &mut current, &mut multisets);
            for blocks in multisets {
                let dim = gl_stratum_dimension(n, &blocks);
                labels.push((StratumLabel::Gl(blocks), dim));
            }
            labels.sort_by(|a, b| a.0.cmp(&b.0));
            labels
        }
        Family::Sl2 => {
            // dim SL_2 = 3; unipotent cosets have dimension 2; the centre
            // points dimension 0.
            vec![
                (StratumLabel::Sl2(Sl2Stratum::Rss), 3),
                (StratumLabel::Sl2(Sl2Stratum::UnipCoset(Sign::Plus)), 2),
                (StratumLabel::Sl2(Sl2Stratum::UnipCoset(Sign::Minus)), 2),
                (StratumLabel::Sl2(Sl2Stratum::Center(Sign::Plus)), 0),
                (StratumLabel::Sl2(Sl2Stratum::Center(Sign::Minus)), 0),
            ]
        }
    }
}

fn gl_stratum_dimension(n: u32, blocks: &[(u32, Partition)]) -> u64 {
    let nu = |m: u64| m * (m.saturating_sub(1)) / 2;
    let nu_g = nu(n as u64);
    let nu_l: u64 = blocks.iter().map(|(m, _)| nu(*m as u64)).sum();
    let centre_dim = blocks.len() as u64;
    let unip_dim: u64 = blocks
        .iter()
        .map(|(m, mu)| {
            let sq: u64 = mu
                .conjugate()
                .parts()
                .iter()
                .map(|&c| (c as u64) * (c as u64))
                .sum();
            (*m as u64) * (*m as u64) - sq
        })
        .sum();
    2 * nu_g - 2 * nu_l + centre_dim + unip_dim
}

/// Covering degree `|c_G| / |c_M|` for a stratum datum `(L, S)` of a Levi
/// `M` inside `GL_n`.  `L` is given as labeled blocks `(size, unipotent
/// partition)` grouped by the blocks of `M`; `c_G` counts label-preserving
/// permutations of all blocks, `c_M` those preserving the grouping.
pub fn covering_degree(
    spec: &GroupSpec,
    m_groups: &[Vec<(u32, Partition)>],
) -> Result<u128, GroupError> {
    let Family::Gl(n) = spec.family() else {
        return Err(GroupError::InvalidLevi(
            "covering degrees are computed for GL specs".into(),
        ));
    };
    let total: u32 = m_groups.iter().flatten().map(|(m, _)| m).sum();
    if total != n {
        return Err(GroupError::InvalidLevi(format!(
            "labeled blocks sum to {total}, ambient rank is {n}"
        )));
    }
    for (m, mu) in m_groups.iter().flatten() {
        if mu.weight() != *m {
            return Err(GroupError::InvalidLevi(format!(
                "unipotent label {mu} does not match block size {m}"
            )));
        }
    }
    let all: Vec<&(u32, Partition)> = m_groups.iter().flatten().collect();
    let c_g = label_permutations(&all);
    let c_m: u128 = m_groups
        .iter()
        .map(|g| label_permutations(&g.iter().collect::<Vec<_>>()))
        .product();
    Ok(c_g / c_m)
}

fn label_permutations(blocks: &[&(u32, Partition)]) -> u128 {
    let mut sorted: Vec<&(u32, Partition)> = blocks.to_vec();
    sorted.sort();
    let mut result = 1u128;
    let mut run = 0u128;
    for i in 0..sorted.len() {
        run += 1;
        if i + 1 == sorted.len() || sorted[i + 1] != sorted[i] {
            result *= (1..=run).product::<u128>();
            run = 0;
        }
    }
    result
}

/// Maximal torus type up to conjugacy.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusType {
    Gl(Partition),
    Sl2(Sl2Torus),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Torus {
    Split,
    Coxeter,
}

impl fmt::Display for TorusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusType::Gl(lambda) => {
                let parts: Vec<String> =
                    lambda.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            TorusType::Sl2(Sl2Torus::Split) => write!(f, "split"),
            TorusType::Sl2(Sl2Torus::Coxeter) => write!(f, "coxeter"),
        }
    }
}

impl TorusType {
    /// Cyclic factor orders of `T^F`.
    pub fn factor_orders(&self, spec: &GroupSpec) -> Vec<u64> {
        let q = spec.q();
        match self {
            TorusType::Gl(lambda) => lambda
                .parts()
                .iter()
                .map(|&part| q.pow(part) - 1)
                .collect(),
            TorusType::Sl2(Sl2Torus::Split) => vec![q - 1],
            TorusType::Sl2(Sl2Torus::Coxeter) => vec![q + 1],
        }
    }

    pub fn order(&self, spec: &GroupSpec) -> u128 {
        self.factor_orders(spec).iter().map(|&o| o as u128).product()
    }
}

/// All torus types with their orders.
pub fn enumerate_tori(spec: &GroupSpec) -> Vec<(TorusType, u128)> {
    match spec.family() {
        Family::Gl(n) => partitions(n)
            .expect("n <= 4")
            .into_iter()
            .map(|lambda| {
                let t = TorusType::Gl(lambda);
                let o = t.order(spec);
                (t, o)
            })
            .collect(),
        Family::Sl2 => vec![
            (TorusType::Sl2(Sl2Torus::Split), (spec.q() - 1) as u128),
            (TorusType::Sl2(Sl2Torus::Coxeter), (spec.q() + 1) as u128),
        ],
    }
}

/// Character of `T^F`, one exponent per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusChar {
    pub exps: Vec<u64>,
}

/// Element of `T^F`, one exponent per cyclic factor (for the split `SL_2`
/// torus the exponent of `x` in `diag(x, x^-1)`; for the Coxeter torus the
/// index in the norm-one subgroup `Z/(q+1)`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusElem {
    pub exps: Vec<u64>,
}

/// Enumerate `T^F`.
pub fn torus_elements(spec: &GroupSpec, torus: &TorusType) -> Vec<TorusElem> {
    let orders = torus.factor_orders(spec);
    let mut out = vec![TorusElem { exps: Vec::new() }];
    for &o in &orders {
        let mut next = Vec::with_capacity(out.len() * o as usize);
        for t in &out {
            for e in 0..o {
                let mut exps = t.exps.clone();
                exps.push(e);
                next.push(TorusElem { exps });
            }
        }
        out = next;
    }
    out
}

/// One element of the relative Weyl action on torus characters:
/// a permutation of the coordinates (preserving factor orders) composed
/// with per-coordinate Frobenius twists.
fn weyl_elements(_spec: &GroupSpec, torus: &TorusType) -> Vec<(Vec<usize>, Vec<u32>)> {
    match torus {
        TorusType::Gl(lambda) => {
            let parts = lambda.parts();
            let perms = part_preserving_permutations(parts);
            let mut twists: Vec<Vec<u32>> = vec![Vec::new()];
            for &part in parts {
                let mut next = Vec::new();
                for t in &twists {
                    for j in 0..part {
                        let mut tt = t.clone();
                        tt.push(j);
                        next.push(tt);
                    }
                }
                twists = next;
            }
            let mut out = Vec::new();
            for p in &perms {
                for t in &twists {
                    out.push((p.clone(), t.clone()));
                }
            }
            out
        }
        TorusType::Sl2(_) => {
            // identity and inversion; inversion is encoded as a twist flag.
            vec![(vec![0], vec![0]), (vec![0], vec![1])]
        }
    }
    .into_iter()
    .collect()
}

fn part_preserving_permutations(parts: &[u32]) -> Vec<Vec<usize>> {
    // permutations of indices fixing the part sizes
    let n = parts.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        parts: &[u32],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = perm.len();
        if i == parts.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..parts.len() {
            if !used[j] && parts[j] == parts[i] {
                used[j] = true;
                perm.push(j);
                rec(parts, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    rec(parts, &mut perm, &mut used, &mut out);
    out
}

/// Apply a relative Weyl element to a character.
fn apply_weyl(
    spec: &GroupSpec,
    torus: &TorusType,
    w: &(Vec<usize>, Vec<u32>),
    chi: &TorusChar,
) -> TorusChar {
    match torus {
        TorusType::Gl(_) => {
            let orders = torus.factor_orders(spec);
            let (perm, twists) = w;
            let exps = (0..chi.exps.len())
                .map(|i| {
                    let src = perm[i];
                    let o = orders[i];
                    (chi.exps[src] % o) * spec.q().pow(twists[i]) % o
                })
                .collect();
            TorusChar { exps }
        }
        TorusType::Sl2(_) => {
            let o = torus.factor_orders(spec)[0];
            let e = chi.exps[0] % o;
            TorusChar {
                exps: vec![if w.1[0] == 0 { e } else { (o - e) % o }],
            }
        }
    }
}

/// Number of relative Weyl elements sending `chi` to `chi2`.
pub fn weyl_transporter_count(
    spec: &GroupSpec,
    torus: &TorusType,
    chi: &TorusChar,
    chi2: &TorusChar,
) -> u64 {
    weyl_elements(spec, torus)
        .iter()
        .filter(|w| &apply_weyl(spec, torus, w, chi) == chi2)
        .count() as u64
}

/// Representative of the Weyl orbit of a character: coordinatewise
/// Frobenius-orbit minima, sorted within equal-order coordinate groups
/// (inversion minimum for `SL_2`).
pub fn canonical_char(spec: &GroupSpec, torus: &TorusType, chi: &TorusChar) -> TorusChar {
    let mut best: Option<TorusChar> = None;
    for w in weyl_elements(spec, torus) {
        let image = apply_weyl(spec, torus, &w, chi);
        if best.as_ref().map(|b| image < *b).unwrap_or(true) {
            best = Some(image);
        }
    }
    best.expect("the Weyl action has at least the identity")
}

/// A character orbit: canonical representative and orbit size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharOrbit {
    pub rep: TorusChar,
    pub size: u64,
}

/// Orbit representatives of torus characters under the relative Weyl
/// action, sorted by representative.
pub fn torus_character_orbits(spec: &GroupSpec, torus: &TorusType) -> Vec<CharOrbit> {
    let orders = torus.factor_orders(spec);
    let group_size = weyl_elements(spec, torus).len() as u64;
    let mut tuples = vec![TorusChar { exps: Vec::new() }];
    for &o in &orders {
        let mut next = Vec::with_capacity(tuples.len() * o as usize);
        for t in &tuples {
            for e in 0..o {
                let mut exps = t.exps.clone();
                exps.push(e);
                next.push(TorusChar { exps });
            }
        }
        tuples = next;
    }
    let mut orbits = Vec::new();
    for chi in tuples {
        let canon = canonical_char(spec, torus, &chi);
        if canon == chi {
            let stab = weyl_transporter_count(spec, torus, &chi, &chi);
            orbits.push(CharOrbit { rep: chi, size: group_size / stab });
        }
    }
    orbits.sort_by(|a, b| a.rep.cmp(&b.rep));
    orbits
}
