//! Explicit matrix groups for tiny specs: element enumeration, conjugacy
//! classes by orbit computation, and the certified bijection onto the
//! type-level class list.

use std::collections::HashMap;

use crate::combinat::Partition;
use crate::gftower::FrobOrbit;
use crate::grptypes::{
    enumerate_classes, ClassRecord, ClassType, Family, GroupSpec, Sign, Sl2Class,
    SquareClass,
};

use super::field::SmallField;
use super::BruteError;

/// Largest enumerable group order.
pub const MAX_BRUTE_ORDER: u128 = 25_000;

pub type Mat = Vec<u16>;

fn key(m: &Mat) -> u64 {
    m.iter().fold(0u64, |acc, &e| (acc << 4) | e as u64)
}

/// Matrix arithmetic and class-invariant computations over `F_q` at a
/// fixed size; block Levis reuse the ambient field and orbit polynomials
/// at their own size.
pub struct MatKit<'a> {
    field: &'a SmallField,
    n: usize,
    poly_orbits: &'a HashMap<Vec<u16>, FrobOrbit>,
}

impl MatKit<'_> {
    pub fn identity(&self) -> Mat {
        let mut m = vec![0u16; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    pub fn matmul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let mut out = vec![0u16; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = self.field.mul(aik, b[k * n + j]);
                    out[i * n + j] = self.field.add(out[i * n + j], prod);
                }
            }
        }
        out
    }

    pub fn matinv(&self, a: &Mat) -> Mat {
        let n = self.n;
        let f = self.field;
        let mut left = a.clone();
        let mut right = self.identity();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| left[r * n + col] != 0)
                .expect("invertible matrix");
            for j in 0..n {
                left.swap(col * n + j, pivot * n + j);
                right.swap(col * n + j, pivot * n + j);
            }
            let inv = f.inv(left[col * n + col]);
            for j in 0..n {
                left[col * n + j] = f.mul(left[col * n + j], inv);
                right[col * n + j] = f.mul(right[col * n + j], inv);
            }
            for r in 0..n {
                if r == col || left[r * n + col] == 0 {
                    continue;
                }
                let factor = left[r * n + col];
                for j in 0..n {
                    let l = f.mul(factor, left[col * n + j]);
                    left[r * n + j] = f.sub(left[r * n + j], l);
                    let rr = f.mul(factor, right[col * n + j]);
                    right[r * n + j] = f.sub(right[r * n + j], rr);
                }
            }
        }
        right
    }

    pub fn det(&self, a: &Mat) -> u16 {
        let n = self.n;
        let f = self.field;
        let mut m = a.clone();
        let mut det = 1u16;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                }
                det = f.neg(det);
            }
            det = f.mul(det, m[col * n + col]);
            let inv = f.inv(m[col * n + col]);
            for r in col + 1..n {
                if m[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(m[r * n + col], inv);
                for j in col..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                }
            }
        }
        det
    }

    pub fn rank(&self, a: &Mat) -> usize {
        let n = self.n;
        let f = self.field;
        let mut m = a.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                m.swap(rank * n + j, pivot * n + j);
            }
            let inv = f.inv(m[rank * n + col]);
            for r in 0..n {
                if r == rank || m[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(m[r * n + col], inv);
                for j in 0..n {
                    let s = f.mul(factor, m[rank * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Characteristic polynomial by the Leibniz expansion of `det(xI - A)`,
    /// packed little-endian coefficients, monic of degree `n`.
    pub fn char_poly(&self, a: &Mat) -> Vec<u16> {
        let n = self.n;
        let f = self.field;
        let mut total = vec![0u16; n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        permute_with_sign(&mut perm, 0, true, &mut |perm, even| {
            let mut prod = vec![0u16; 1];
            prod[0] = 1;
            for (i, &j) in perm.iter().enumerate() {
                let c0 = f.neg(a[i * n + j]);
                let c1 = u16::from(i == j);
                let mut next = vec![0u16; prod.len() + 1];
                for (d, &pc) in prod.iter().enumerate() {
                    if pc == 0 {
                        continue;
                    }
                    next[d] = f.add(next[d], f.mul(pc, c0));
                    next[d + 1] = f.add(next[d + 1], f.mul(pc, c1));
                }
                prod = next;
            }
            for (d, &pc) in prod.iter().enumerate() {
                let signed = if even { pc } else { f.neg(pc) };
                total[d] = f.add(total[d], signed);
            }
        });
        total
    }

    /// Exact division of packed polynomials; `None` when not exact.
    pub fn poly_div_exact(&self, num: &[u16], den: &[u16]) -> Option<Vec<u16>> {
        let f = self.field;
        let deg = |p: &[u16]| p.iter().rposition(|&c| c != 0);
        let dn = deg(den)?;
        let lead_inv = f.inv(den[dn]);
        let mut rem = num.to_vec();
        let mut quot = vec![0u16; num.len()];
        loop {
            let Some(dr) = deg(&rem) else {
                return Some(quot);
            };
            if dr < dn {
                return None;
            }
            let c = f.mul(rem[dr], lead_inv);
            let shift = dr - dn;
            quot[shift] = c;
            for (j, &dj) in den.iter().enumerate().take(dn + 1) {
                let s = f.mul(c, dj);
                rem[j + shift] = f.sub(rem[j + shift], s);
            }
        }
    }

    /// Evaluate a packed polynomial at a matrix (Horner).
    pub fn poly_at_matrix(&self, poly: &[u16], a: &Mat) -> Mat {
        let n = self.n;
        let f = self.field;
        let mut result = vec![0u16; n * n];
        for &c in poly.iter().rev() {
            result = self.matmul(&result, a);
            for i in 0..n {
                result[i * n + i] = f.add(result[i * n + i], c);
            }
        }
        result
    }

    /// Combinatorial class type of an invertible matrix in `GL_n`: factor
    /// the characteristic polynomial over the orbit list and read the
    /// partition per factor off the ranks of its matrix powers.
    pub fn gl_class_type(&self, a: &Mat) -> Result<ClassType, BruteError> {
        let cp = self.char_poly(a);
        let mut rest = cp;
        let mut pairs: Vec<(FrobOrbit, Partition)> = Vec::new();
        for (poly, orbit) in self.poly_orbits {
            if poly.len() > self.n + 1 {
                continue;
            }
            let mut mult = 0u32;
            while let Some(q) = self.poly_div_exact(&rest, poly) {
                rest = q;
                mult += 1;
            }
            if mult == 0 {
                continue;
            }
            let d = orbit.degree as usize;
            let mu = if mult == 1 {
                Partition::new(vec![1]).expect("single part")
            } else {
                let b = self.poly_at_matrix(poly, a);
                let mut conj_parts = Vec::new();
                let mut power = self.identity();
                let mut prev_rank = self.n;
                for _ in 1..=mult {
                    power = self.matmul(&power, &b);
                    let r = self.rank(&power);
                    let blocks = (prev_rank - r) / d;
                    if blocks == 0 {
                        break;
                    }
                    conj_parts.push(blocks as u32);
                    prev_rank = r;
                }
                Partition::new(conj_parts)
                    .map_err(|e| BruteError::ClassMatch(format!("Jordan data: {e}")))?
                    .conjugate()
            };
            if mu.weight() != mult {
                return Err(BruteError::ClassMatch(format!(
                    "Jordan partition {mu} does not match multiplicity {mult}"
                )));
            }
            pairs.push((*orbit, mu));
        }
        if rest.iter().rposition(|&c| c != 0).unwrap_or(0) != 0 {
            return Err(BruteError::ClassMatch(
                "characteristic polynomial did not factor over the orbit list".into(),
            ));
        }
        pairs.sort_unstable();
        Ok(ClassType::Gl(pairs))
    }
}

fn permute_with_sign(
    perm: &mut Vec<usize>,
    from: usize,
    even: bool,
    visit: &mut impl FnMut(&[usize], bool),
) {
    if from == perm.len() {
        visit(perm, even);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        let flip = i != from;
        permute_with_sign(perm, from + 1, even ^ flip, visit);
        perm.swap(from, i);
    }
}

/// Fully enumerated matrix group with its conjugacy classes matched to the
/// combinatorial class types.
pub struct MatrixGroup {
    spec: GroupSpec,
    field: SmallField,
    n: usize,
    elems: Vec<Mat>,
    index: HashMap<u64, u32>,
    inverse: Vec<u32>,
    class_of: Vec<u32>,
    class_sizes: Vec<u128>,
    /// Internal class id -> (representative element index, class type).
    classes: Vec<(u32, ClassType)>,
    /// Internal class ids arranged in the canonical order of
    /// `enumerate_classes`.
    canonical_order: Vec<u32>,
    /// Monic irreducibles over `F_q` of degree <= n, with their orbits.
    poly_orbits: HashMap<Vec<u16>, FrobOrbit>,
}

impl MatrixGroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn field(&self) -> &SmallField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix toolkit at the ambient size.
    pub fn kit(&self) -> MatKit<'_> {
        self.kit_sized(self.n)
    }

    /// Matrix toolkit for sub-blocks of the given size.
    pub fn kit_sized(&self, n: usize) -> MatKit<'_> {
        MatKit { field: &self.field, n, poly_orbits: &self.poly_orbits }
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elems
    }

    pub fn element_index(&self, m: &Mat) -> Option<u32> {
        self.index.get(&key(m)).copied()
    }

    pub fn inverse_index(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn class_id(&self, elem_index: u32) -> u32 {
        self.class_of[elem_index as usize]
    }

    pub fn n_internal_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_representative(&self, class_id: u32) -> &Mat {
        &self.elems[self.classes[class_id as usize].0 as usize]
    }

    pub fn class_type(&self, class_id: u32) -> &ClassType {
        &self.classes[class_id as usize].1
    }

    /// Internal class ids in the canonical order of `enumerate_classes`.
    pub fn canonical_class_order(&self) -> &[u32] {
        &self.canonical_order
    }

    pub fn class_size(&self, class_id: u32) -> u128 {
        self.class_sizes[class_id as usize]
    }
}

/// Enumerate the full matrix group of a spec with `|G^F| <= 25000`.
pub fn enumerate_group(spec: &GroupSpec) -> Result<MatrixGroup, BruteError> {
    if spec.order() > MAX_BRUTE_ORDER {
        return Err(BruteError::OrderBound { order: spec.order(), max: MAX_BRUTE_ORDER });
    }
    let field = SmallField::from_tower(spec.tower());
    let n = spec.rank() as usize;
    let q = spec.q();
    let want_det_one = spec.family() == Family::Sl2;

    // irreducible polynomials of degree <= n, from the tower orbits
    let tower = spec.tower();
    let mut poly_orbits = HashMap::new();
    for d in 1..=spec.rank() {
        for orbit in tower
            .frobenius_orbits(d)
            .map_err(crate::grptypes::GroupError::Tower)?
        {
            if orbit.degree != d {
                continue;
            }
            let poly: Vec<u16> = tower
                .orbit_minpoly(&orbit)
                .iter()
                .map(|&c| c as u16)
                .collect();
            poly_orbits.insert(poly, orbit);
        }
    }

    let mut group = MatrixGroup {
        spec: spec.clone(),
        field,
        n,
        elems: Vec::new(),
        index: HashMap::new(),
        inverse: Vec::new(),
        class_of: Vec::new(),
        class_sizes: Vec::new(),
        classes: Vec::new(),
        canonical_order: Vec::new(),
        poly_orbits,
    };

    // enumerate all matrices by odometer, keeping the invertible ones
    let cells = n * n;
    let mut mat = vec![0u16; cells];
    loop {
        let det = group.kit().det(&mat);
        if det != 0 && (!want_det_one || det == 1) {
            group.index.insert(key(&mat), group.elems.len() as u32);
            group.elems.push(mat.clone());
        }
        let mut pos = 0;
        while pos < cells {
            mat[pos] += 1;
            if (mat[pos] as u64) < q {
                break;
            }
            mat[pos] = 0;
            pos += 1;
        }
        if pos == cells {
            break;
        }
    }
    if group.elems.len() as u128 != spec.order() {
        return Err(BruteError::ClassMatch(format!(
            "enumerated {} elements, expected {}",
            group.elems.len(),
            spec.order()
        )));
    }
    group.inverse = group
        .elems
        .iter()
        .map(|m| group.index[&key(&group.kit().matinv(m))])
        .collect();

    let generators = generating_set(&group);

    // conjugacy classes by orbit under conjugation by the generators
    let kit = MatKit { field: &group.field, n, poly_orbits: &group.poly_orbits };
    let mut class_of = vec![u32::MAX; group.elems.len()];
    let mut class_reps = Vec::new();
    for start in 0..group.elems.len() as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let id = class_reps.len() as u32;
        class_reps.push(start);
        class_of[start as usize] = id;
        let mut queue = vec![start];
        while let Some(cur) = queue.pop() {
            for &(g, ginv) in &generators {
                let conj = kit.matmul(
                    &kit.matmul(&group.elems[g as usize], &group.elems[cur as usize]),
                    &group.elems[ginv as usize],
                );
                let ci = group.index[&key(&conj)];
                if class_of[ci as usize] == u32::MAX {
                    class_of[ci as usize] = id;
                    queue.push(ci);
                }
            }
        }
    }
    group.class_of = class_of;
    group.class_sizes = {
        let mut sizes = vec![0u128; class_reps.len()];
        for &c in &group.class_of {
            sizes[c as usize] += 1;
        }
        sizes
    };

    // match classes to class types
    let mut classes = Vec::with_capacity(class_reps.len());
    for (id, &rep) in class_reps.iter().enumerate() {
        let mat = group.elems[rep as usize].clone();
        let class_type = match spec.family() {
            Family::Gl(_) => group.kit().gl_class_type(&mat)?,
            Family::Sl2 => sl2_class_of_matrix(&group, id as u32, &mat)?,
        };
        classes.push((rep, class_type));
    }
    group.classes = classes;

    certify_bijection(&mut group)?;
    Ok(group)
}

fn generating_set(group: &MatrixGroup) -> Vec<(u32, u32)> {
    let kit = group.kit();
    let mut gens: Vec<u32> = Vec::new();
    let id = group.index[&key(&kit.identity())];
    let mut closure: Vec<u32> = vec![id];
    let mut in_closure = vec![false; group.elems.len()];
    in_closure[id as usize] = true;
    while let Some(outside) =
        (0..group.elems.len() as u32).find(|&i| !in_closure[i as usize])
    {
        gens.push(outside);
        let mut queue = closure.clone();
        in_closure[outside as usize] = true;
        closure.push(outside);
        queue.push(outside);
        while let Some(cur) = queue.pop() {
            for &g in &gens {
                for prod in [
                    kit.matmul(&group.elems[cur as usize], &group.elems[g as usize]),
                    kit.matmul(&group.elems[g as usize], &group.elems[cur as usize]),
                ] {
                    let pi = group.index[&key(&prod)];
                    if !in_closure[pi as usize] {
                        in_closure[pi as usize] = true;
                        closure.push(pi);
                        queue.push(pi);
                    }
                }
            }
        }
    }
    gens.iter().map(|&g| (g, group.inverse[g as usize])).collect()
}

/// Class type of an `SL_2` matrix; the square-class label of a unipotent
/// central class is fixed by explicit conjugacy membership of the literal
/// matrices `s*[[1,1],[0,1]]` and `s*[[1,nu],[0,1]]`.
fn sl2_class_of_matrix(
    group: &MatrixGroup,
    class_id: u32,
    a: &Mat,
) -> Result<ClassType, BruteError> {
    let f = group.field();
    let kit = group.kit();
    let q = group.spec().q();
    let one = 1u16;
    let minus_one = f.neg(one);
    let is_scalar = |s: u16| a[0] == s && a[3] == s && a[1] == 0 && a[2] == 0;
    if is_scalar(one) {
        return Ok(ClassType::Sl2(Sl2Class::Central(Sign::Plus)));
    }
    if is_scalar(minus_one) {
        return Ok(ClassType::Sl2(Sl2Class::Central(Sign::Minus)));
    }
    let trace = f.add(a[0], a[3]);
    if trace == f.add(one, one) || trace == f.add(minus_one, minus_one) {
        let sign = if trace == f.add(one, one) { Sign::Plus } else { Sign::Minus };
        let s = if sign == Sign::Plus { one } else { minus_one };
        let unit_rep = vec![s, s, 0, s];
        let unit_id = group
            .element_index(&unit_rep)
            .map(|i| group.class_id(i))
            .ok_or_else(|| BruteError::ClassMatch("missing unipotent matrix".into()))?;
        let square = if unit_id == class_id {
            SquareClass::Unit
        } else {
            let nu = f.generator();
            let nonsquare_rep = vec![s, f.mul(s, nu), 0, s];
            let ns_id = group
                .element_index(&nonsquare_rep)
                .map(|i| group.class_id(i))
                .ok_or_else(|| BruteError::ClassMatch("missing unipotent matrix".into()))?;
            if ns_id != class_id {
                return Err(BruteError::ClassMatch(
                    "unipotent class matches neither square class".into(),
                ));
            }
            SquareClass::NonSquare
        };
        return Ok(ClassType::Sl2(Sl2Class::UnipotentCentral(sign, square)));
    }
    // regular semisimple: nonsplit iff the characteristic polynomial is
    // irreducible over F_q
    let cp = kit.char_poly(a);
    for (poly, orbit) in &group.poly_orbits {
        if orbit.degree != 2 || kit.poly_div_exact(&cp, poly).is_none() {
            continue;
        }
        let index = orbit.exp / (q - 1);
        return Ok(ClassType::Sl2(Sl2Class::NonsplitRss {
            index: index.min(q + 1 - index),
        }));
    }
    for x in 1..f.q() as u16 {
        let mut acc = 0u16;
        for &c in cp.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        if acc == 0 && x != one && x != minus_one {
            let e = f.dlog(x);
            return Ok(ClassType::Sl2(Sl2Class::SplitRss { exp: e.min(q - 1 - e) }));
        }
    }
    Err(BruteError::ClassMatch("SL_2 class matched no label".into()))
}

/// Check the bijection between enumerated classes and type-level classes,
/// including sizes (hence centralizer orders).
fn certify_bijection(group: &mut MatrixGroup) -> Result<(), BruteError> {
    let expected: Vec<ClassRecord> = enumerate_classes(&group.spec);
    if expected.len() != group.classes.len() {
        return Err(BruteError::ClassMatch(format!(
            "{} enumerated classes vs {} class types",
            group.classes.len(),
            expected.len()
        )));
    }
    let mut order = Vec::with_capacity(expected.len());
    for rec in &expected {
        let found: Vec<u32> = group
            .classes
            .iter()
            .enumerate()
            .filter(|(_, (_, t))| *t == rec.class)
            .map(|(i, _)| i as u32)
            .collect();
        if found.len() != 1 {
            return Err(BruteError::ClassMatch(format!(
                "class type {} matched {} enumerated classes",
                rec.class,
                found.len()
            )));
        }
        let id = found[0];
        let size = group.class_size(id);
        if size != rec.size {
            return Err(BruteError::ClassMatch(format!(
                "class {}: enumerated size {size}, formula size {}",
                rec.class, rec.size
            )));
        }
        order.push(id);
    }
    group.canonical_order = order;
    Ok(())
}
