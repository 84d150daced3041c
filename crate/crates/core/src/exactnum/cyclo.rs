//! Cyclotomic polynomials and elements of `Q(zeta_N)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactNumError, Rational};

/// Largest supported cyclotomic level; exponent sizes arising from
/// `q^k - 1` stay well below this.
pub const MAX_CYCLOTOMIC_LEVEL: u64 = 1_000_000;

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials, assuming the divisor is monic and
/// divides exactly.  Coefficient slices are little-endian.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = std::mem::replace(&mut rem[i + dn], BigInt::zero());
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate().take(dn) {
                rem[i + j] -= &c * dj;
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn phi_poly(n: u64) -> Arc<Vec<BigInt>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // (x^n - 1) / prod of Phi_d over proper divisors d of n
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut cur = num;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let pd = phi_poly(d);
            cur = int_poly_div_exact(&cur, &pd);
        }
        cur
    };
    debug_assert_eq!(poly.len() as u64 - 1, euler_phi(n));
    let arc = Arc::new(poly);
    phi_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// The `n`-th cyclotomic polynomial, little-endian integer coefficients.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<BigInt>, ExactNumError> {
    if n == 0 || n > MAX_CYCLOTOMIC_LEVEL {
        return Err(ExactNumError::LevelOutOfBounds(n));
    }
    Ok(phi_poly(n).as_ref().clone())
}

/// Reduce a little-endian rational polynomial modulo `Phi_n`, returning
/// exactly `phi(n)` coefficients.
fn reduce_mod_phi(mut coeffs: Vec<Rational>, n: u64) -> Vec<Rational> {
    let phi = euler_phi(n) as usize;
    if coeffs.len() > phi {
        let modulus = phi_poly(n);
        for i in (phi..coeffs.len()).rev() {
            let c = std::mem::replace(&mut coeffs[i], Rational::zero());
            if !c.is_zero() {
                for j in 0..phi {
                    let adj = &c * Rational::from(modulus[j].clone());
                    coeffs[i - phi + j] -= adj;
                }
            }
        }
    }
    coeffs.truncate(phi);
    coeffs.resize(phi, Rational::zero());
    coeffs
}

/// `x^m mod Phi_n` for `0 <= m < n`.
fn monomial_mod_phi(n: u64, m: u64) -> Vec<Rational> {
    debug_assert!(m < n);
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    coeffs[m as usize] = Rational::one();
    reduce_mod_phi(coeffs, n)
}

type LiftTable = Arc<Vec<Vec<Rational>>>;

fn lift_cache() -> &'static Mutex<HashMap<(u64, u64), LiftTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), LiftTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Images of the basis monomials of `Q(zeta_from)` inside `Q(zeta_to)`,
/// for `from | to`: row `i` holds the coefficients of `zeta_to^(i*to/from)`.
fn lift_table(from: u64, to: u64) -> LiftTable {
    debug_assert_eq!(to % from, 0);
    if let Some(t) = lift_cache().lock().unwrap().get(&(from, to)) {
        return t.clone();
    }
    let ratio = to / from;
    let rows: Vec<Vec<Rational>> = (0..euler_phi(from))
        .map(|i| monomial_mod_phi(to, i * ratio))
        .collect();
    let arc = Arc::new(rows);
    lift_cache().lock().unwrap().insert((from, to), arc.clone());
    arc
}

/// Element of the cyclotomic field `Q(zeta_level)`, stored reduced modulo
/// the cyclotomic polynomial so that equality at a common level is
/// coefficient equality.
#[derive(Clone)]
pub struct CycloElem {
    level: u64,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let n = self.common_level(other);
        self.lift(n).coeffs == other.lift(n).coeffs
    }
}

impl Eq for CycloElem {}

impl CycloElem {
    fn from_reduced(level: u64, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(level));
        CycloElem { level, coeffs }
    }

    pub fn zero() -> Self {
        CycloElem::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        CycloElem::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloElem { level: 1, coeffs: vec![r] }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        CycloElem::from_rational(Rational::from(v.into()))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, ExactNumError> {
        if n == 0 || n > MAX_CYCLOTOMIC_LEVEL {
            return Err(ExactNumError::LevelOutOfBounds(n));
        }
        let m = k.rem_euclid(n as i64) as u64;
        Ok(CycloElem::from_reduced(n, monomial_mod_phi(n, m)))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Coefficients with respect to the power basis `1, zeta, ...,
    /// zeta^(phi(level)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value when the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Value-preserving re-expression at level `to` when `level | to`.
    fn lift(&self, to: u64) -> CycloElem {
        if to == self.level {
            return self.clone();
        }
        let table = lift_table(self.level, to);
        let phi_to = euler_phi(to) as usize;
        let mut coeffs = vec![Rational::zero(); phi_to];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, t) in table[i].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[j] += c * t;
                }
            }
        }
        CycloElem::from_reduced(to, coeffs)
    }

    fn common_level(&self, other: &CycloElem) -> u64 {
        self.level.lcm(&other.level)
    }

    /// Value-preserving level change.  Lifting requires `level | to`;
    /// compression succeeds exactly when the value lies in `Q(zeta_to)`.
    pub fn change_level(&self, to: u64) -> Result<CycloElem, ExactNumError> {
        if to == 0 || to > MAX_CYCLOTOMIC_LEVEL {
            return Err(ExactNumError::LevelOutOfBounds(to));
        }
        if to % self.level == 0 {
            return Ok(self.lift(to));
        }
        let join = self.level.lcm(&to);
        if join > MAX_CYCLOTOMIC_LEVEL {
            return Err(ExactNumError::LevelOutOfBounds(join));
        }
        let lifted = self.lift(join);
        // Solve for coordinates over the basis of Q(zeta_to) inside
        // Q(zeta_join).
        let basis = lift_table(to, join);
        let phi_join = euler_phi(join) as usize;
        let phi_to = euler_phi(to) as usize;
        let mut aug: Vec<Vec<Rational>> = (0..phi_join)
            .map(|r| {
                let mut row: Vec<Rational> =
                    (0..phi_to).map(|c| basis[c][r].clone()).collect();
                row.push(lifted.coeffs[r].clone());
                row
            })
            .collect();
        match solve_rational(&mut aug, phi_to) {
            Some(sol) => Ok(CycloElem::from_reduced(to, sol)),
            None => Err(ExactNumError::Representation { from: self.level, to }),
        }
    }

    /// Re-expression at the smallest divisor of the current level that
    /// contains the value.
    pub fn minimal_level(&self) -> CycloElem {
        if let Some(r) = self.to_rational() {
            return CycloElem::from_rational(r);
        }
        for d in divisors(self.level) {
            if d == self.level {
                break;
            }
            if let Ok(e) = self.change_level(d) {
                return e;
            }
        }
        self.clone()
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CycloElem, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::DivisionByZero(self.level));
        }
        let modulus: Vec<Rational> = phi_poly(self.level)
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus)
            .expect("nonzero element of a field is invertible");
        Ok(CycloElem::from_reduced(self.level, reduce_mod_phi(inv, self.level)))
    }

    /// Integer power, with negative exponents going through the inverse.
    pub fn pow(&self, k: i64) -> Result<CycloElem, ExactNumError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycloElem::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Galois action `zeta_level -> zeta_level^k` for `k` prime to the level.
    pub fn galois(&self, k: u64) -> Result<CycloElem, ExactNumError> {
        let n = self.level;
        let k = k % n;
        if n > 1 && k.gcd(&n) != 1 {
            return Err(ExactNumError::BadGaloisExponent(k, n));
        }
        let phi = euler_phi(n) as usize;
        let mut coeffs = vec![Rational::zero(); phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = monomial_mod_phi(n, (i as u64 * k) % n);
            for (j, t) in image.iter().enumerate() {
                if !t.is_zero() {
                    coeffs[j] += c * t;
                }
            }
        }
        Ok(CycloElem::from_reduced(n, coeffs))
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> CycloElem {
        if self.level == 1 {
            return self.clone();
        }
        self.galois(self.level - 1)
            .expect("level - 1 is always prime to the level")
    }

    pub fn scale(&self, r: &Rational) -> CycloElem {
        CycloElem::from_reduced(self.level, self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Decimal rendering of the real approximation, for display only.
    pub fn approx(&self) -> f64 {
        let theta = 2.0 * std::f64::consts::PI / self.level as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let num = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
                let den = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
                num / den * (theta * i as f64).cos()
            })
            .sum()
    }
}

impl std::ops::Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        let n = self.common_level(rhs);
        let a = self.lift(n);
        let b = rhs.lift(n);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CycloElem::from_reduced(n, coeffs)
    }
}

impl std::ops::Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem::from_reduced(self.level, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        let n = self.common_level(rhs);
        let a = self.lift(n);
        let b = rhs.lift(n);
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloElem::from_reduced(n, reduce_mod_phi(prod, n))
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::ops::AddAssign<&CycloElem> for CycloElem {
    fn add_assign(&mut self, rhs: &CycloElem) {
        *self = &*self + rhs;
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.level)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Gaussian elimination on an augmented rational matrix with `ncols`
/// unknowns and one right-hand column; returns a solution when consistent.
fn solve_rational(aug: &mut [Vec<Rational>], ncols: usize) -> Option<Vec<Rational>> {
    let nrows = aug.len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for c in col..=ncols {
            let v = &aug[row][c] * &inv;
            aug[row][c] = v;
        }
        for r in 0..nrows {
            if r != row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=ncols {
                    let adj = &factor * &aug[row][c];
                    aug[r][c] -= adj;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); ncols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        sol[col] = aug[r][ncols].clone();
    }
    Some(sol)
}

/// Inverse of `a` modulo `m` in `Q[x]` by the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem_step(num: &mut Vec<Rational>, den: &[Rational], quot: &mut Vec<Rational>) {
        let dd = deg(den).unwrap();
        let lead_inv = den[dd].recip();
        while let Some(dn) = deg(num) {
            if dn < dd {
                break;
            }
            let shift = dn - dd;
            let c = &num[dn] * &lead_inv;
            if quot.len() <= shift {
                quot.resize(shift + 1, Rational::zero());
            }
            quot[shift] += &c;
            for (j, dj) in den.iter().enumerate() {
                if !dj.is_zero() {
                    let adj = &c * dj;
                    num[j + shift] -= adj;
                }
            }
        }
    }

    // Invariant: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    let mut s0: Vec<Rational> = vec![Rational::zero()];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while let Some(d1) = deg(&r1) {
        if d1 == 0 {
            let inv = r1[0].recip();
            return Some(s1.iter().map(|c| c * &inv).collect());
        }
        let mut quot = Vec::new();
        rem_step(&mut r0, &r1, &mut quot);
        std::mem::swap(&mut r0, &mut r1);
        // s_next = s0 - quot * s1
        let mut s_next = s0.clone();
        s_next.resize(s_next.len().max(quot.len() + s1.len()), Rational::zero());
        for (i, qc) in quot.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (j, sc) in s1.iter().enumerate() {
                if !sc.is_zero() {
                    let adj = qc * sc;
                    s_next[i + j] -= adj;
                }
            }
        }
        s0 = std::mem::replace(&mut s1, s_next);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> CycloElem {
        CycloElem::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |p: Vec<BigInt>| -> Vec<i64> {
            p.iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1).unwrap()), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2).unwrap()), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12).unwrap()), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn product_of_cyclotomics_is_x_n_minus_one() {
        for n in [1u64, 2, 6, 12, 30] {
            let mut prod = vec![BigInt::one()];
            for d in divisors(n) {
                let pd = cyclotomic_polynomial(d).unwrap();
                let mut next = vec![BigInt::zero(); prod.len() + pd.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in pd.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn level_bound_is_enforced() {
        assert!(matches!(
            cyclotomic_polynomial(MAX_CYCLOTOMIC_LEVEL + 1),
            Err(ExactNumError::LevelOutOfBounds(_))
        ));
        assert!(matches!(
            cyclotomic_polynomial(0),
            Err(ExactNumError::LevelOutOfBounds(0))
        ));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(&zeta(4, 1) * &zeta(4, 1), CycloElem::from_int(-1));
    }

    #[test]
    fn zeta3_plus_zeta3_squared_is_minus_one() {
        assert_eq!(&zeta(3, 1) + &zeta(3, 2), CycloElem::from_int(-1));
    }

    #[test]
    fn conjugation_inverts_the_root() {
        assert_eq!(zeta(5, 1).conj(), zeta(5, 4));
    }

    #[test]
    fn change_level_examples() {
        // -1 at level 2 equals zeta_6^3.
        assert_eq!(zeta(2, 1).change_level(6).unwrap(), zeta(6, 3));
        // zeta_6^2 compresses to zeta_3.
        assert_eq!(zeta(6, 2).change_level(3).unwrap(), zeta(3, 1));
        // Q(zeta_5) does not embed in Q(zeta_3).
        assert!(matches!(
            zeta(5, 1).change_level(3),
            Err(ExactNumError::Representation { from: 5, to: 3 })
        ));
    }

    #[test]
    fn lift_then_minimize_is_identity() {
        for (n, k, up) in [(3u64, 1i64, 12u64), (4, 1, 20), (1, 0, 30), (6, 1, 30)] {
            let x = zeta(n, k);
            let lifted = x.change_level(up).unwrap();
            let back = lifted.minimal_level();
            assert_eq!(back, x);
            assert!(back.level() <= n);
        }
    }

    #[test]
    fn root_sums_vanish() {
        for n in 2..=40u64 {
            let sum = (0..n).fold(CycloElem::zero(), |acc, k| acc + &zeta(n, k as i64));
            assert!(sum.is_zero(), "sum of all {n}-th roots");
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            CycloElem::zero().inv(),
            Err(ExactNumError::DivisionByZero(_))
        ));
    }

    #[test]
    fn field_inverse_and_pow() {
        let x = &zeta(12, 7) + &CycloElem::from_int(3);
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, CycloElem::one());
        assert_eq!(x.pow(-3).unwrap(), inv.pow(3).unwrap());
        assert_eq!(zeta(12, 1).pow(14).unwrap(), zeta(12, 2));
    }

    #[test]
    fn conj_is_involutive_and_multiplicative() {
        let x = &zeta(8, 1) + &CycloElem::from_int(2);
        let y = &zeta(8, 3) - &CycloElem::from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(x.conj().conj(), x);
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn rational_detection() {
        let x = &zeta(6, 1) + &zeta(6, 5); // 2*cos(pi/3) = 1
        assert_eq!(x.to_integer(), Some(BigInt::one()));
        assert_eq!(zeta(5, 1).to_rational(), None);
    }
}
