//! Concrete arithmetic tables for the small field `F_q`, sharing the
//! tower's level-1 realization so packed encodings agree everywhere.

use crate::gftower::Tower;

/// Dense `F_q` arithmetic; elements are packed base-`p` encodings of their
/// polynomial representation, `0` is zero and `1` is one.
pub struct SmallField {
    q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
    /// Discrete log with respect to the tower generator; `dlog[0]` unused.
    dlog: Vec<u64>,
    generator: u16,
}

impl SmallField {
    pub fn from_tower(tower: &Tower) -> SmallField {
        let p = tower.prime();
        let a = tower.ext_degree() as usize;
        let q = tower.q();
        let modulus = tower.modulus_poly(1).to_vec();
        let unpack = |v: u64| -> Vec<u64> {
            let mut digits = Vec::with_capacity(a);
            let mut x = v;
            for _ in 0..a {
                digits.push(x % p);
                x /= p;
            }
            digits
        };
        let pack = |poly: &[u64]| -> u64 { poly.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let poly_add = |x: &[u64], y: &[u64]| -> Vec<u64> {
            x.iter().zip(y).map(|(&c, &d)| (c + d) % p).collect()
        };
        let poly_mul = |x: &[u64], y: &[u64]| -> Vec<u64> {
            let mut prod = vec![0u64; 2 * a];
            for (i, &c) in x.iter().enumerate() {
                for (j, &d) in y.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + c * d) % p;
                }
            }
            for i in (a..2 * a).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for (j, &m) in modulus.iter().enumerate().take(a) {
                    prod[i - a + j] = (prod[i - a + j] + (p - m) * c) % p;
                }
            }
            prod.truncate(a);
            prod
        };
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        for x in 0..q {
            let px = unpack(x);
            neg[x as usize] = pack(&px.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u16;
            for y in 0..q {
                let py = unpack(y);
                add[(x * q + y) as usize] = pack(&poly_add(&px, &py)) as u16;
                mul[(x * q + y) as usize] = pack(&poly_mul(&px, &py)) as u16;
            }
        }
        let generator = pack(tower.generator_poly(1)) as u16;
        let mut dlog = vec![0u64; qs];
        let mut inv = vec![0u16; qs];
        let mut cur = 1u16;
        for e in 0..q - 1 {
            dlog[cur as usize] = e;
            inv[cur as usize] = {
                // inverse is the complementary power of the generator
                let mut v = 1u16;
                for _ in 0..(q - 1 - e) % (q - 1) {
                    v = mul[(v as u64 * q + generator as u64) as usize];
                }
                v
            };
            cur = mul[(cur as u64 * q + generator as u64) as usize];
        }
        SmallField { q, add, mul, inv, neg, dlog, generator }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn generator(&self) -> u16 {
        self.generator
    }

    #[inline]
    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: u16, y: u16) -> u16 {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, x: u16) -> u16 {
        debug_assert_ne!(x, 0);
        self.inv[x as usize]
    }

    /// Exponent of a nonzero element with respect to the tower generator.
    pub fn dlog(&self, x: u16) -> u64 {
        debug_assert_ne!(x, 0);
        self.dlog[x as usize]
    }

    /// `generator^e`.
    pub fn gen_pow(&self, e: u64) -> u16 {
        let mut v = 1u16;
        for _ in 0..e % (self.q - 1).max(1) {
            v = self.mul(v, self.generator);
        }
        v
    }
}
