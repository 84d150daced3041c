//! Finite fields `F_(q^k)` in a compatible discrete-log representation.
//!
//! A [`Tower`] fixes, for each level `k <= kmax`, a realization of
//! `F_(q^k)` as `F_p[x]` modulo a deterministically chosen irreducible
//! polynomial, together with a generator `g_k` of the multiplicative group
//! such that `g_k^((q^k-1)/(q^d-1)) = g_d` for all `d | k` under the
//! embeddings this very relation declares.  After construction every
//! computation (Frobenius orbits, norms, canonicalization) is pure exponent
//! arithmetic; polynomial arithmetic is only used while building the tower
//! and when minimal polynomials are requested.
//!
//! Determinism: moduli are the first irreducible polynomials in the
//! base-`p` integer encoding of their coefficient vectors, and `g_k` is
//! `gamma^j` for the first valid `j`, where `gamma` is the first primitive
//! element in the same encoding.  Towers are therefore reproducible across
//! runs.

use std::collections::HashMap;

/// Largest supported field size `q^kmax`.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TowerError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {q}^{k} exceeds the supported bound 2^20")]
    BoundExceeded { q: u64, k: u32 },
    #[error("level {k} out of range 1..={kmax}")]
    LevelOutOfRange { k: u32, kmax: u32 },
    #[error("{d} does not divide {k}")]
    NotADivisor { d: u32, k: u32 },
}

/// Nonzero elements are stored by discrete logarithm with respect to the
/// tower generator of their level; zero is distinguished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub level: u32,
    /// `None` encodes zero, `Some(e)` the element `g_level^e`.
    pub exp: Option<u64>,
}

impl FieldElem {
    pub fn zero(level: u32) -> Self {
        FieldElem { level, exp: None }
    }

    pub fn one(level: u32) -> Self {
        FieldElem { level, exp: Some(0) }
    }

    pub fn from_exp(level: u32, exp: u64) -> Self {
        FieldElem { level, exp: Some(exp) }
    }

    pub fn is_zero(&self) -> bool {
        self.exp.is_none()
    }
}

/// Galois orbit of nonzero field elements under `x -> x^q`, stored at its
/// true degree with the smallest exponent in the orbit.  Orbits of degree
/// `d` correspond to monic irreducible polynomials over `F_q` of degree `d`
/// other than `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrobOrbit {
    pub degree: u32,
    pub exp: u64,
}

struct Level {
    modulus: Vec<u64>,
    generator: Vec<u64>,
    order: u64,
}

/// Compatible system of finite fields `F_(q^k)`, `k <= kmax`.
pub struct Tower {
    p: u64,
    ext: u32,
    q: u64,
    kmax: u32,
    levels: Vec<Level>,
}

/// Build the tower for the prime power `q` up to level `kmax`.
pub fn build_tower(q: u64, kmax: u32) -> Result<Tower, TowerError> {
    Tower::build(q, kmax)
}

/// All Frobenius orbits of `F_(q^k)^*`, each reported once at its true
/// degree, sorted by `(degree, exp)`.
pub fn frobenius_orbits(tower: &Tower, k: u32) -> Result<Vec<FrobOrbit>, TowerError> {
    tower.frobenius_orbits(k)
}

/// Norm map `F_(q^k) -> F_(q^d)` for `d | k`.
pub fn norm_map(tower: &Tower, x: &FieldElem, d: u32) -> Result<FieldElem, TowerError> {
    tower.norm_map(x, d)
}

impl Tower {
    pub fn build(q: u64, kmax: u32) -> Result<Tower, TowerError> {
        let (p, ext) = prime_power(q).ok_or(TowerError::NotPrimePower(q))?;
        if kmax == 0 {
            return Err(TowerError::LevelOutOfRange { k: 0, kmax });
        }
        match q.checked_pow(kmax) {
            Some(size) if size <= MAX_FIELD_SIZE => {}
            _ => return Err(TowerError::BoundExceeded { q, k: kmax }),
        }
        let mut levels: Vec<Level> = Vec::with_capacity(kmax as usize);
        for k in 1..=kmax {
            let deg = (ext * k) as usize;
            let modulus = first_irreducible(p, deg);
            let order = q.pow(k) - 1;
            let field = PolyField { p, modulus: &modulus };
            let gamma = first_primitive(&field, order);
            // Choose g_k = gamma^j compatible with every lower level: the
            // norm to level d must share its minimal polynomial over F_p
            // with g_d, which makes g_d -> g_k^((q^k-1)/(q^d-1)) extend to
            // a field embedding.
            let mut generator = None;
            let mut j = 1u64;
            while generator.is_none() {
                if gcd(j, order) == 1 {
                    let cand = field.pow(&gamma, j);
                    let ok = (1..k).filter(|d| k % d == 0).all(|d| {
                        let sub_order = q.pow(d) - 1;
                        let norm = field.pow(&cand, order / sub_order);
                        let sub = &levels[d as usize - 1];
                        let sub_field = PolyField { p, modulus: &sub.modulus };
                        field.minpoly_over_prime(&norm)
                            == sub_field.minpoly_over_prime(&sub.generator)
                    });
                    if ok {
                        generator = Some(cand);
                    }
                }
                j += 1;
                assert!(j <= order + 1, "no compatible generator found at level {k}");
            }
            levels.push(Level {
                modulus,
                generator: generator.unwrap(),
                order,
            });
        }
        Ok(Tower { p, ext, q, kmax, levels })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Degree of `F_q` over its prime field.
    pub fn ext_degree(&self) -> u32 {
        self.ext
    }

    pub fn kmax(&self) -> u32 {
        self.kmax
    }

    fn check_level(&self, k: u32) -> Result<(), TowerError> {
        if k == 0 || k > self.kmax {
            Err(TowerError::LevelOutOfRange { k, kmax: self.kmax })
        } else {
            Ok(())
        }
    }

    /// `q^k - 1`.
    pub fn order(&self, k: u32) -> u64 {
        self.q.pow(k) - 1
    }

    pub fn modulus_poly(&self, k: u32) -> &[u64] {
        &self.levels[k as usize - 1].modulus
    }

    pub fn generator_poly(&self, k: u32) -> &[u64] {
        &self.levels[k as usize - 1].generator
    }

    /// Polynomial representation of `g_k^e` over the prime field.
    pub fn generator_power_poly(&self, k: u32, e: u64) -> Vec<u64> {
        let level = &self.levels[k as usize - 1];
        let field = PolyField { p: self.p, modulus: &level.modulus };
        field.pow(&level.generator, e % level.order)
    }

    /// True degree of a nonzero element: the smallest `d | level` whose
    /// subfield contains it.  Zero and one have degree 1.
    pub fn true_degree(&self, x: &FieldElem) -> u32 {
        let Some(e) = x.exp else {
            return 1;
        };
        let k = x.level;
        let order = self.order(k);
        (1..=k)
            .filter(|d| k % d == 0)
            .find(|&d| (e * (self.q.pow(d) - 1)) % order == 0)
            .expect("k divides k")
    }

    /// Minimal-level representation of an element.
    pub fn canonicalize(&self, x: &FieldElem) -> FieldElem {
        let Some(e) = x.exp else {
            return FieldElem::zero(1);
        };
        let d = self.true_degree(x);
        if d == x.level {
            return *x;
        }
        let ratio = self.order(x.level) / self.order(d);
        FieldElem::from_exp(d, e / ratio)
    }

    /// Exponent transport along the embedding `F_(q^d) -> F_(q^k)`.
    pub fn embed_exp(&self, d: u32, k: u32, e: u64) -> Result<u64, TowerError> {
        self.check_level(k)?;
        if k % d != 0 {
            return Err(TowerError::NotADivisor { d, k });
        }
        Ok((e % self.order(d)) * (self.order(k) / self.order(d)))
    }

    pub fn norm_map(&self, x: &FieldElem, d: u32) -> Result<FieldElem, TowerError> {
        self.check_level(x.level)?;
        if x.level % d != 0 || d == 0 {
            return Err(TowerError::NotADivisor { d, k: x.level });
        }
        Ok(match x.exp {
            None => FieldElem::zero(d),
            Some(e) => FieldElem::from_exp(d, e % self.order(d)),
        })
    }

    /// Frobenius `x -> x^q` at the element's level.
    pub fn frobenius(&self, x: &FieldElem) -> FieldElem {
        match x.exp {
            None => *x,
            Some(e) => FieldElem {
                level: x.level,
                exp: Some((e * self.q) % self.order(x.level)),
            },
        }
    }

    /// Canonical Frobenius orbit of a nonzero element.
    pub fn orbit_of(&self, x: &FieldElem) -> FrobOrbit {
        let canon = self.canonicalize(x);
        let d = canon.level;
        let order = self.order(d);
        let e0 = canon.exp.expect("orbit of a nonzero element");
        let mut best = e0;
        let mut e = e0;
        loop {
            e = (e * self.q) % order;
            if e == e0 {
                break;
            }
            best = best.min(e);
        }
        FrobOrbit { degree: d, exp: best }
    }

    pub fn frobenius_orbits(&self, k: u32) -> Result<Vec<FrobOrbit>, TowerError> {
        self.check_level(k)?;
        let order = self.order(k);
        let mut seen = vec![false; order as usize];
        let mut orbits = Vec::new();
        for e in 0..order {
            if seen[e as usize] {
                continue;
            }
            let mut cur = e;
            loop {
                seen[cur as usize] = true;
                cur = (cur * self.q) % order;
                if cur == e {
                    break;
                }
            }
            orbits.push(self.orbit_of(&FieldElem::from_exp(k, e)));
        }
        orbits.sort_unstable();
        Ok(orbits)
    }

    /// All elements of the `F_q`-subfield at level `k`, as a lookup from
    /// polynomial representation to the packed level-1 encoding.
    fn subfield_lookup(&self, k: u32) -> HashMap<Vec<u64>, u64> {
        let mut map = HashMap::new();
        let deg = (self.ext * k) as usize;
        map.insert(vec![0; deg], 0);
        let ratio = self.order(k) / self.order(1);
        for t in 0..self.order(1) {
            let image = self.generator_power_poly(k, t * ratio);
            let small = self.generator_power_poly(1, t);
            map.insert(image, pack(&small, self.p));
        }
        map
    }

    /// Minimal polynomial over `F_q` of the elements in an orbit: monic of
    /// degree `orbit.degree`, coefficients packed in base `p` from their
    /// level-1 representation (for prime `q` this is the value itself).
    pub fn orbit_minpoly(&self, orbit: &FrobOrbit) -> Vec<u64> {
        let d = orbit.degree;
        let level = &self.levels[d as usize - 1];
        let field = PolyField { p: self.p, modulus: &level.modulus };
        let beta = field.pow(&level.generator, orbit.exp);
        let n = field.deg();
        // prod over conjugates (X - beta^(q^j)): coefficients in F_(q^d).
        let mut poly: Vec<Vec<u64>> = vec![vec![0; n]];
        poly[0][0] = 1; // monic of degree 0
        let mut conj = beta;
        for _ in 0..d {
            let mut next = vec![vec![0; n]; poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = field.add(&next[i + 1], c);
                let shift = field.mul(c, &conj);
                next[i] = field.sub(&next[i], &shift);
            }
            poly = next;
            conj = field.pow(&conj, self.q);
        }
        let lookup = self.subfield_lookup(d);
        poly.iter()
            .map(|c| *lookup.get(c).expect("minpoly coefficients lie in F_q"))
            .collect()
    }

    /// Discrete logarithms at a level: polynomial representation to
    /// exponent.  Intended for small levels (oracle bridging, tests).
    pub fn dlog_table(&self, k: u32) -> HashMap<Vec<u64>, u64> {
        let level = &self.levels[k as usize - 1];
        let field = PolyField { p: self.p, modulus: &level.modulus };
        let mut map = HashMap::new();
        let mut cur = field.one();
        for e in 0..level.order {
            map.insert(cur.clone(), e);
            cur = field.mul(&cur, &level.generator);
        }
        map
    }

    /// Sum of two generator powers, as an element.  Polynomial arithmetic
    /// plus a discrete log; intended for small levels.
    pub fn add_elements(&self, k: u32, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let level = &self.levels[k as usize - 1];
        let field = PolyField { p: self.p, modulus: &level.modulus };
        let poly_of = |x: &FieldElem| match x.exp {
            None => vec![0; field.deg()],
            Some(e) => {
                let lifted = self
                    .embed_exp(x.level, k, e)
                    .expect("operand level divides target level");
                field.pow(&level.generator, lifted)
            }
        };
        let sum = field.add(&poly_of(a), &poly_of(b));
        if sum.iter().all(|&c| c == 0) {
            return FieldElem::zero(k);
        }
        let table = self.dlog_table(k);
        FieldElem::from_exp(k, table[&sum])
    }
}

fn pack(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut a = 0;
    let mut m = q;
    while m > 1 {
        if m % p != 0 {
            return None;
        }
        m /= p;
        a += 1;
    }
    Some((p, a))
}

/// Dense polynomial arithmetic in `F_p[x]` modulo a fixed monic polynomial.
struct PolyField<'a> {
    p: u64,
    modulus: &'a [u64],
}

impl PolyField<'_> {
    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg()];
        v[0] = 1;
        v
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.deg();
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = (prod[i + j] + x * y) % self.p;
                }
            }
        }
        // reduce modulo the monic modulus
        for i in (n..2 * n).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(n) {
                if m != 0 {
                    let idx = i - n + j;
                    prod[idx] = (prod[idx] + (self.p - m) * c) % self.p;
                }
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one();
        let mut sq = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Minimal polynomial over the prime field: product of `(X - a^(p^j))`
    /// over the distinct conjugates.  Its coefficients are constants, so
    /// they transfer between realizations of different levels.
    fn minpoly_over_prime(&self, a: &[u64]) -> Vec<u64> {
        let mut conjugates = vec![a.to_vec()];
        loop {
            let next = self.pow(conjugates.last().unwrap(), self.p);
            if next == conjugates[0] {
                break;
            }
            conjugates.push(next);
        }
        let n = self.deg();
        let mut poly: Vec<Vec<u64>> = vec![vec![0; n]];
        poly[0][0] = 1;
        for conj in &conjugates {
            let mut next = vec![vec![0; n]; poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                let shift = self.mul(c, conj);
                next[i] = self.sub(&next[i], &shift);
            }
            poly = next;
        }
        poly.iter()
            .map(|c| {
                assert!(
                    c[1..].iter().all(|&x| x == 0),
                    "minimal polynomial over the prime field has constant coefficients"
                );
                c[0]
            })
            .collect()
    }
}

/// First monic irreducible polynomial of the given degree over `F_p`, in
/// the base-`p` integer encoding of the non-leading coefficients.
fn first_irreducible(p: u64, deg: usize) -> Vec<u64> {
    assert!(deg >= 1);
    let mut counter = 0u64;
    loop {
        let mut poly = Vec::with_capacity(deg + 1);
        let mut c = counter;
        for _ in 0..deg {
            poly.push(c % p);
            c /= p;
        }
        assert_eq!(c, 0, "no irreducible of degree {deg} found");
        poly.push(1);
        if is_irreducible(p, &poly) {
            return poly;
        }
        counter += 1;
    }
}

/// Irreducibility over `F_p`: `x^(p^m) = x (mod f)` and, for each prime
/// `r | m`, `gcd(x^(p^(m/r)) - x, f) = 1`.
fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let m = poly.len() - 1;
    if m == 1 {
        return true;
    }
    let field = PolyField { p, modulus: poly };
    let x = {
        let mut v = vec![0; m];
        v[1] = 1;
        v
    };
    let frob_iter = |times: u32| {
        let mut cur = x.clone();
        for _ in 0..times {
            cur = field.pow(&cur, p);
        }
        cur
    };
    if frob_iter(m as u32) != x {
        return false;
    }
    for r in prime_factors(m as u64) {
        let y = frob_iter((m as u64 / r) as u32);
        let diff = field.sub(&y, &x);
        if poly_gcd_nontrivial(p, poly, &diff) {
            return false;
        }
    }
    true
}

/// Whether `gcd(f, g)` has positive degree, for `f` the field modulus and
/// `g` given by its residue coefficients.
fn poly_gcd_nontrivial(p: u64, f: &[u64], g: &[u64]) -> bool {
    let mut a: Vec<u64> = f.to_vec();
    let mut b: Vec<u64> = g.to_vec();
    let deg = |v: &[u64]| v.iter().rposition(|&c| c != 0);
    loop {
        let Some(db) = deg(&b) else {
            return deg(&a).map(|d| d > 0).unwrap_or(false);
        };
        if db == 0 {
            return false;
        }
        // a mod b
        let lead_inv = mod_inverse(b[db], p);
        let mut rem = a.clone();
        while let Some(da) = deg(&rem) {
            if da < db {
                break;
            }
            let c = (rem[da] * lead_inv) % p;
            let shift = da - db;
            for j in 0..=db {
                if b[j] != 0 {
                    rem[j + shift] = (rem[j + shift] + (p - b[j]) * c % p) % p;
                }
            }
        }
        a = std::mem::take(&mut b);
        b = rem;
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a nonzero
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// First primitive element in the deterministic encoding order.
fn first_primitive(field: &PolyField, order: u64) -> Vec<u64> {
    let primes = prime_factors(order);
    let p = field.p;
    let deg = field.deg();
    let mut counter = 1u64;
    loop {
        let mut poly = Vec::with_capacity(deg);
        let mut c = counter;
        for _ in 0..deg {
            poly.push(c % p);
            c /= p;
        }
        assert_eq!(c, 0, "no primitive element found");
        let primitive = primes
            .iter()
            .all(|&r| field.pow(&poly, order / r) != field.one());
        if primitive {
            return poly;
        }
        counter += 1;
    }
}
