//! Dixon-Schneider character tables: class-multiplication coefficients by
//! counting, simultaneous eigenvectors over a prime field `F_l` with
//! `l = 1 (mod exponent)`, and exact lift to cyclotomic values.

use num_bigint::BigInt;

use crate::dl::{inner_product, ClassFunction, GroupCtx};
use crate::exactnum::CycloElem;

use super::group::MatrixGroup;
use super::BruteError;

/// Character table with irreducibles as exact class functions, classes in
/// the canonical order of the group context.
pub struct CharacterTable {
    pub degrees: Vec<u64>,
    pub irreducibles: Vec<ClassFunction>,
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, l: u64) -> u64 {
    mod_pow(a, l - 2, l)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense linear algebra mod `l`: nullspace of a square matrix.
fn nullspace(mat: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let nrows = mat.len();
    let ncols = if nrows == 0 { 0 } else { mat[0].len() };
    let mut work: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| work[r][col] % l != 0) else {
            continue;
        };
        work.swap(row, p);
        let inv = mod_inv(work[row][col] % l, l);
        for c in 0..ncols {
            work[row][c] = work[row][c] % l * inv % l;
        }
        for r in 0..nrows {
            if r != row && work[r][col] % l != 0 {
                let f = work[r][col] % l;
                for c in 0..ncols {
                    work[r][c] = (work[r][c] + (l - f) * work[row][c]) % l;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (l - work[r][free] % l) % l;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial mod `l` by the Faddeev-LeVerrier recurrence
/// (valid since the dimension is below `l`).
fn char_poly_mod(mat: &[Vec<u64>], l: u64) -> Vec<u64> {
    let n = mat.len();
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut m: Vec<Vec<u64>> = vec![vec![0; n]; n];
    let mut c_prev = 1u64;
    for k in 1..=n {
        // M_k = A * M_(k-1) + c_(n-k+1) * I
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for t in 0..n {
                    s = (s + mat[i][t] * m[t][j]) % l;
                }
                next[i][j] = s;
            }
        }
        for i in 0..n {
            next[i][i] = (next[i][i] + c_prev) % l;
        }
        // c_(n-k) = -trace(A*M_k)/k
        let mut tr = 0u64;
        for i in 0..n {
            let mut s = 0u64;
            for t in 0..n {
                s = (s + mat[i][t] * next[t][i]) % l;
            }
            tr = (tr + s) % l;
        }
        let c = (l - tr % l) % l * mod_inv(k as u64 % l, l) % l;
        coeffs[n - k] = c;
        m = next;
        c_prev = c;
    }
    coeffs
}

fn eigenvalues(mat: &[Vec<u64>], l: u64) -> Vec<u64> {
    let poly = char_poly_mod(mat, l);
    (0..l)
        .filter(|&x| {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = (acc * x + c) % l;
            }
            acc == 0
        })
        .collect()
}

/// Build the character table.
pub fn dixon_table(group: &MatrixGroup, ctx: &GroupCtx) -> Result<CharacterTable, BruteError> {
    let order = group.elements().len() as u64;
    let r = group.n_internal_classes();

    // element orders and power-class maps
    let kit = group.kit();
    let identity = kit.identity();
    let mut class_order = vec![0u64; r];
    let mut power_class: Vec<Vec<u32>> = Vec::with_capacity(r);
    for id in 0..r as u32 {
        let rep = group.class_representative(id).clone();
        let mut powers = vec![group.class_id(
            group.element_index(&identity).expect("identity"),
        )];
        let mut cur = rep.clone();
        let mut o = 1u64;
        while cur != identity {
            powers.push(group.class_id(group.element_index(&cur).expect("closed")));
            cur = kit.matmul(&cur, &rep);
            o += 1;
        }
        class_order[id as usize] = o;
        power_class.push(powers);
    }
    let exponent = class_order.iter().copied().fold(1u64, num_integer::lcm);

    // prime l = 1 (mod exponent), l > 2 sqrt(|G|), l coprime to |G| and
    // larger than the class count (the recurrences divide by 1..r)
    let bound = 2.0 * (order as f64).sqrt();
    let mut l = exponent + 1;
    while !(is_prime(l) && l as f64 > bound && order % l != 0 && l > r as u64) {
        l += exponent;
    }

    // class multiplication coefficients a[i][j][k]
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r as u32 {
        let zk = group.class_representative(k).clone();
        for xi in 0..group.elements().len() as u32 {
            let i = group.class_id(xi);
            let xinv = group.inverse_index(xi);
            let y = kit.matmul(&group.elements()[xinv as usize], &zk);
            let j = group.class_id(group.element_index(&y).expect("closed"));
            a[i as usize][j as usize][k as usize] += 1;
        }
    }

    // split the space into common eigenvectors of the M_i
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 0..r {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        // (M_i) v = omega_i v for v_k = |C_k| chi(g_k)/chi(1), from the
        // class-algebra identity sum_k a_ijk omega_k = omega_i omega_j.
        let m_i: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| a[i][j][k] % l).collect())
            .collect();
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // restriction of M_i to the subspace: express images in basis
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    (0..r)
                        .map(|k| {
                            let mut s = 0u64;
                            for (j, &vj) in v.iter().enumerate() {
                                s = (s + m_i[k][j] * vj) % l;
                            }
                            s
                        })
                        .collect()
                })
                .collect();
            let coords = express_in_basis(&images, &basis, l);
            let s = basis.len();
            // restricted matrix: columns are coordinate vectors of images
            let restricted: Vec<Vec<u64>> = (0..s)
                .map(|row| (0..s).map(|col| coords[col][row]).collect())
                .collect();
            for ev in eigenvalues(&restricted, l) {
                let mut shifted = restricted.clone();
                for d in 0..s {
                    shifted[d][d] = (shifted[d][d] + l - ev) % l;
                }
                let null = nullspace(&shifted, l);
                if null.is_empty() {
                    continue;
                }
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; r];
                        for (bi, &c) in coords.iter().enumerate() {
                            for (t, &bv) in basis[bi].iter().enumerate() {
                                v[t] = (v[t] + c * bv) % l;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
        }
        subspaces = next;
    }
    if subspaces.len() != r || subspaces.iter().any(|s| s.len() != 1) {
        return Err(BruteError::TableInconsistent(
            "common eigenspaces did not split into lines".into(),
        ));
    }

    // normalize eigenvectors: w_j = |C_j| chi(g_j) / chi(1), w at identity = 1
    let id_class = group.class_id(group.element_index(&identity).unwrap());
    let inv_class: Vec<usize> = (0..r as u32)
        .map(|id| {
            let rep = group.class_representative(id);
            let idx = group.element_index(rep).unwrap();
            group.class_id(group.inverse_index(idx)) as usize
        })
        .collect();
    let class_sizes: Vec<u64> = (0..r as u32).map(|id| group.class_size(id) as u64).collect();

    let mut degrees_and_values = Vec::with_capacity(r);
    for sub in &subspaces {
        let w_raw = &sub[0];
        let w0 = w_raw[id_class as usize] % l;
        if w0 == 0 {
            return Err(BruteError::TableInconsistent(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let scale = mod_inv(w0, l);
        let w: Vec<u64> = w_raw.iter().map(|&x| x % l * scale % l).collect();
        // chi(1)^2 = |G| / sum_j w_j w_(j*) / |C_j|
        let mut denom = 0u64;
        for j in 0..r {
            let term = w[j] * w[inv_class[j]] % l * mod_inv(class_sizes[j] % l, l) % l;
            denom = (denom + term) % l;
        }
        let deg_sq = order % l * mod_inv(denom, l) % l;
        let sqrt_bound = (order as f64).sqrt() as u64 + 1;
        let degree = (1..l)
            .find(|&d| d * d % l == deg_sq && d <= sqrt_bound)
            .ok_or_else(|| {
                BruteError::TableInconsistent("no admissible degree square root".into())
            })?;
        // chi(g_j) mod l
        let chi_mod: Vec<u64> = (0..r)
            .map(|j| degree % l * w[j] % l * mod_inv(class_sizes[j] % l, l) % l)
            .collect();
        degrees_and_values.push((degree, chi_mod));
    }

    // lift to cyclotomic values: eigenvalue multiplicities by the discrete
    // Fourier inversion over each cyclic group <g_j>
    let z = (2..l)
        .find(|&c| {
            // primitive root mod l
            let mut seen_order = 1u64;
            let mut cur = c;
            while cur != 1 {
                cur = cur * c % l;
                seen_order += 1;
            }
            seen_order == l - 1
        })
        .expect("prime fields have primitive roots");
    let eta = mod_pow(z, (l - 1) / exponent, l);

    let mut irreducibles = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for (degree, chi_mod) in &degrees_and_values {
        let mut values_internal = vec![CycloElem::zero(); r];
        for j in 0..r {
            let oj = class_order[j];
            let eta_j = mod_pow(eta, exponent / oj, l);
            let oj_inv = mod_inv(oj % l, l);
            let mut value = CycloElem::zero();
            for u in 0..oj {
                let mut m_u = 0u64;
                for (v, &cls) in power_class[j].iter().enumerate() {
                    let root = mod_pow(eta_j, (u as u128 * v as u128 % oj as u128) as u64, l);
                    m_u = (m_u + chi_mod[cls as usize] * mod_inv(root, l)) % l;
                }
                m_u = m_u * oj_inv % l;
                if m_u == 0 {
                    continue;
                }
                if m_u > *degree {
                    return Err(BruteError::TableInconsistent(format!(
                        "eigenvalue multiplicity {m_u} exceeds the degree {degree}"
                    )));
                }
                let root = CycloElem::root_of_unity(oj, u as i64)?;
                value += &root.scale(&BigInt::from(m_u).into());
            }
            values_internal[j] = value;
        }
        // reorder to the canonical class order
        let values: Vec<CycloElem> = group
            .canonical_class_order()
            .iter()
            .map(|&id| values_internal[id as usize].clone())
            .collect();
        irreducibles.push(ClassFunction::new(ctx, values)?);
        degrees.push(*degree);
    }

    // exact orthogonality of the lifted table
    let table = CharacterTable { degrees, irreducibles };
    verify_table(&table, group, ctx)?;
    Ok(table)
}

fn verify_table(
    table: &CharacterTable,
    group: &MatrixGroup,
    ctx: &GroupCtx,
) -> Result<(), BruteError> {
    let r = table.irreducibles.len();
    let order = group.elements().len() as u64;
    // row orthogonality
    for (i, chi) in table.irreducibles.iter().enumerate() {
        for (j, psi) in table.irreducibles.iter().enumerate() {
            let ip = inner_product(ctx, chi, psi)?;
            let expect = CycloElem::from_int(i64::from(i == j));
            if ip != expect {
                return Err(BruteError::TableInconsistent(format!(
                    "row orthogonality fails at ({i},{j}): {ip}"
                )));
            }
        }
    }
    // column orthogonality
    for ci in 0..ctx.n_classes() {
        for cj in 0..ctx.n_classes() {
            let mut sum = CycloElem::zero();
            for chi in &table.irreducibles {
                sum += &(chi.value(ci) * &chi.value(cj).conj());
            }
            let expect = if ci == cj {
                CycloElem::from_int((ctx.classes()[ci].centralizer) as i64)
            } else {
                CycloElem::zero()
            };
            if sum != expect {
                return Err(BruteError::TableInconsistent(format!(
                    "column orthogonality fails at ({ci},{cj})"
                )));
            }
        }
    }
    // degree identity
    let sum_sq: u64 = table.degrees.iter().map(|d| d * d).sum();
    if sum_sq != order || r != ctx.n_classes() {
        return Err(BruteError::TableInconsistent(format!(
            "sum of squared degrees {sum_sq} vs group order {order}"
        )));
    }
    Ok(())
}

/// Coordinates of vectors in a given independent basis, mod `l`.
fn express_in_basis(vectors: &[Vec<u64>], basis: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let dim = basis[0].len();
    let s = basis.len();
    // solve basis_matrix * coords = vector for each vector
    let mut aug: Vec<Vec<u64>> = (0..dim)
        .map(|row| {
            let mut line: Vec<u64> = (0..s).map(|b| basis[b][row] % l).collect();
            line.extend(vectors.iter().map(|v| v[row] % l));
            line
        })
        .collect();
    // elimination
    let width = s + vectors.len();
    let mut row = 0;
    for col in 0..s {
        let p = (row..dim).find(|&r| aug[r][col] != 0).expect("independent basis");
        aug.swap(row, p);
        let inv = mod_inv(aug[row][col], l);
        for c in 0..width {
            aug[row][c] = aug[row][c] * inv % l;
        }
        for r in 0..dim {
            if r != row && aug[r][col] != 0 {
                let f = aug[r][col];
                for c in 0..width {
                    aug[r][c] = (aug[r][c] + (l - f) * aug[row][c]) % l;
                }
            }
        }
        row += 1;
    }
    vectors
        .iter()
        .enumerate()
        .map(|(vi, _)| (0..s).map(|b| aug[b][s + vi]).collect())
        .collect()
}
