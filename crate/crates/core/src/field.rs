//! Finite fields GF(p^k) as fully materialized lookup tables.
//!
//! Element `e` in `0..q` stands for the polynomial whose coefficients are
//! the base-`p` digits of `e`, constant term in the least significant
//! digit. Index 0 is zero and index 1 is one.

use crate::error::{Error, Result};
use crate::limits::DEFAULT_FIELD_CAP;

/// Index of a field element, in `0..q`.
pub type Elem = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    // inv[0] is never read
    inv: Vec<Elem>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^k) under the default field cap.
pub fn make_field(p: u64, k: u32) -> Result<FieldTable> {
    FieldTable::new(p, k, DEFAULT_FIELD_CAP)
}

impl FieldTable {
    pub fn new(p: u64, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = match p.checked_pow(k) {
            Some(q) if q <= cap => q,
            _ => return Err(Error::FieldTooLarge { p, k, cap }),
        };
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, k as usize);

        let digits: Vec<Vec<u32>> = (0..q).map(|e| to_digits(e, p, k as usize)).collect();
        let qu = q as usize;
        let mut add = vec![0; qu * qu];
        let mut mul = vec![0; qu * qu];
        for a in 0..qu {
            for b in 0..qu {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qu + b] = from_digits(&sum, p);
                let prod = poly_mul_mod(&digits[a], &digits[b], &modulus, p);
                mul[a * qu + b] = from_digits(&prod, p);
            }
        }
        let neg = (0..qu)
            .map(|a| {
                let d: Vec<u32> = digits[a].iter().map(|x| (p - x) % p).collect();
                from_digits(&d, p)
            })
            .collect();
        let mut inv = vec![0; qu];
        for a in 1..qu {
            inv[a] = (1..q)
                .find(|&b| mul[a * qu + b as usize] == 1)
                .expect("nonzero element of a field has an inverse");
        }
        Ok(FieldTable {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus, constant term first. For `k = 1` this is `x`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient vector of an element, constant term first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        to_digits(a, self.p, self.k as usize)
    }
}

fn to_digits(mut e: u32, p: u32, len: usize) -> Vec<u32> {
    let mut d = Vec::with_capacity(len);
    for _ in 0..len {
        d.push(e % p);
        e /= p;
    }
    d
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m` over Z_p.
fn poly_rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem_monic(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

/// Monic polynomial of degree `deg` whose non-leading coefficients are the
/// base-`p` digits of `low`.
fn monic(low: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut v = to_digits(low, p, deg);
    v.push(1);
    v
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let g = monic(low, p, d);
            if poly_rem_monic(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The irreducible monic polynomial of degree `k` with the smallest base-`p`
/// encoding of its coefficient vector.
fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    (0..p.pow(k as u32))
        .map(|low| monic(low, p, k))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
