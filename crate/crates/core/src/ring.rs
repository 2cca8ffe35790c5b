//! The rings whose unitary Cayley graphs we build: upper-triangular matrix
//! rings over a [`FieldTable`] and the integers modulo `n`.
//!
//! Triangular matrices store the upper triangle in row-major order,
//! diagonal included: `(1,1), (1,2), .., (1,n), (2,2), .., (n,n)`. The
//! canonical encoding reads that sequence as base-`q` digits with the first
//! entry most significant. Every tuple encoding in the crate (diagonals,
//! strictly-upper parts, Hamming vertices) uses the same digit order.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTable};
use crate::limits::Limits;

/// Base-`base` value of a digit sequence, most significant digit first.
pub fn encode_digits(digits: &[Elem], base: u32) -> u64 {
    digits
        .iter()
        .fold(0u64, |acc, &d| acc * base as u64 + d as u64)
}

/// Inverse of [`encode_digits`] for a fixed digit count.
pub fn decode_digits(mut code: u64, base: u32, len: usize) -> Vec<Elem> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = (code % base as u64) as Elem;
        code /= base as u64;
    }
    d
}

/// Which ring to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    /// `T_n(GF(p^k))`
    TriangularMatrix { n: usize, p: u64, k: u32 },
    /// `Z_modulus`
    IntegersMod { modulus: u64 },
}

impl RingSpec {
    pub fn tri(n: usize, p: u64, k: u32) -> Self {
        RingSpec::TriangularMatrix { n, p, k }
    }

    pub fn zn(modulus: u64) -> Self {
        RingSpec::IntegersMod { modulus }
    }

    /// Field order `p^k` for triangular rings.
    pub fn field_order(&self) -> Option<u64> {
        match *self {
            RingSpec::TriangularMatrix { p, k, .. } => p.checked_pow(k),
            RingSpec::IntegersMod { .. } => None,
        }
    }

    /// Number of ring elements, `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match *self {
            RingSpec::TriangularMatrix { n, .. } => {
                let q = self.field_order()?;
                let entries = u32::try_from(n * (n + 1) / 2).ok()?;
                q.checked_pow(entries)
            }
            RingSpec::IntegersMod { modulus } => Some(modulus),
        }
    }

    fn check_cap(&self, limits: &Limits) -> Result<usize> {
        match self.order() {
            Some(v) if v <= limits.vertex_cap => Ok(v as usize),
            other => Err(Error::RingTooLarge {
                ring: self.to_string(),
                order: other.map_or_else(|| "> 2^64".to_string(), |v| v.to_string()),
                cap: limits.vertex_cap,
            }),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::TriangularMatrix { n, p, k } => write!(f, "tri:{n},{p},{k}"),
            RingSpec::IntegersMod { modulus } => write!(f, "zn:{modulus}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parses `tri:N,P,K` or `zn:M`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected tri:N,P,K or zn:M, got {s:?}"));
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind {
            "tri" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                let [n, p, k] = parts.as_slice() else {
                    return Err(bad());
                };
                let n: usize = n.parse().map_err(|_| bad())?;
                let p: u64 = p.parse().map_err(|_| bad())?;
                let k: u32 = k.parse().map_err(|_| bad())?;
                if n < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "matrix dimension must be at least 2, got {n}"
                    )));
                }
                Ok(RingSpec::tri(n, p, k))
            }
            "zn" => {
                let m: u64 = rest.trim().parse().map_err(|_| bad())?;
                if m < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "modulus must be at least 2, got {m}"
                    )));
                }
                Ok(RingSpec::zn(m))
            }
            _ => Err(bad()),
        }
    }
}

/// Upper-triangular matrix over a borrowed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix<'f> {
    field: &'f FieldTable,
    n: usize,
    entries: Vec<Elem>,
}

fn tri_len(n: usize) -> usize {
    n * (n + 1) / 2
}

// Row `i` starts after rows 0..i, which hold n + (n-1) + .. + (n-i+1) entries.
#[inline]
fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

impl<'f> TriMatrix<'f> {
    /// Builds a matrix from its row-major upper triangle.
    pub fn new(field: &'f FieldTable, n: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != tri_len(n) {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: tri_len(n),
            });
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= field.order()) {
            return Err(Error::InvalidParameter(format!(
                "entry {e} is not an element of GF({})",
                field.order()
            )));
        }
        Ok(TriMatrix { field, n, entries })
    }

    pub fn zero(field: &'f FieldTable, n: usize) -> Self {
        TriMatrix {
            field,
            n,
            entries: vec![0; tri_len(n)],
        }
    }

    pub fn identity(field: &'f FieldTable, n: usize) -> Self {
        Self::diagonal(field, &vec![1; n])
    }

    /// Matrix with the given diagonal and zeros above it.
    pub fn diagonal(field: &'f FieldTable, diag: &[Elem]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(field, n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[tri_index(n, i, i)] = d;
        }
        m
    }

    /// Reassembles a matrix from its strictly-upper part (row-major) and
    /// its diagonal.
    pub fn from_parts(field: &'f FieldTable, strict: &[Elem], diag: &[Elem]) -> Result<Self> {
        let n = diag.len();
        if strict.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::DimensionMismatch {
                left: strict.len(),
                right: n * n.saturating_sub(1) / 2,
            });
        }
        let mut entries = Vec::with_capacity(tri_len(n));
        let mut s = strict.iter();
        for (i, &d) in diag.iter().enumerate() {
            entries.push(d);
            entries.extend(s.by_ref().take(n - i - 1));
        }
        TriMatrix::new(field, n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'f FieldTable {
        self.field
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// Entry `(i, j)`, 0-based; zero below the diagonal.
    pub fn get(&self, i: usize, j: usize) -> Elem {
        if i > j {
            0
        } else {
            self.entries[tri_index(self.n, i, j)]
        }
    }

    pub fn sub(&self, other: &TriMatrix<'f>) -> Result<TriMatrix<'f>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if !std::ptr::eq(self.field, other.field) && self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(TriMatrix {
            field: f,
            n: self.n,
            entries,
        })
    }

    /// Product of the diagonal entries.
    pub fn det(&self) -> Elem {
        (0..self.n).fold(1, |acc, i| self.field.mul(acc, self.get(i, i)))
    }

    /// Invertible iff every diagonal entry is nonzero.
    pub fn is_unit(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) != 0)
    }

    pub fn diagonal_of(&self) -> Vec<Elem> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Entries `(i, j)` with `i < j`, row-major.
    pub fn strict_upper_of(&self) -> Vec<Elem> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    pub fn encode(&self) -> u64 {
        encode_digits(&self.entries, self.field.order())
    }
}

impl fmt::Display for TriMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

/// `T_n(GF(p^k))`, owning its field.
#[derive(Debug, Clone)]
pub struct TriRing {
    field: FieldTable,
    n: usize,
    order: u64,
}

impl TriRing {
    pub fn new(n: usize, p: u64, k: u32, limits: &Limits) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "matrix dimension must be at least 2, got {n}"
            )));
        }
        let spec = RingSpec::tri(n, p, k);
        let field = FieldTable::new(p, k, limits.field_cap)?;
        let order = spec.check_cap(limits)? as u64;
        Ok(TriRing { field, n, order })
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec::tri(
            self.n,
            self.field.characteristic() as u64,
            self.field.degree(),
        )
    }

    pub fn decode(&self, code: u64) -> TriMatrix<'_> {
        debug_assert!(code < self.order);
        TriMatrix {
            field: &self.field,
            n: self.n,
            entries: decode_digits(code, self.q(), tri_len(self.n)),
        }
    }

    /// All elements in canonical-encoding order.
    pub fn enumerate(&self) -> impl Iterator<Item = TriMatrix<'_>> + '_ {
        (0..self.order).map(move |c| self.decode(c))
    }

    /// `(q-1)^n * q^((n^2-n)/2)`
    pub fn unit_count_formula(&self) -> u64 {
        let q = self.q() as u64;
        (q - 1).pow(self.n as u32) * q.pow((self.n * (self.n - 1) / 2) as u32)
    }
}

/// `Z_n`, elements `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    pub fn new(modulus: u64, limits: &Limits) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParameter(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        RingSpec::zn(modulus).check_cap(limits)?;
        Ok(IntegersMod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.modulus - y) % self.modulus
    }

    pub fn is_unit(&self, x: u64) -> bool {
        x.gcd(&self.modulus) == 1
    }

    pub fn enumerate(&self) -> std::ops::Range<u64> {
        0..self.modulus
    }
}

/// A ring built from a [`RingSpec`].
#[derive(Debug, Clone)]
pub enum Ring {
    Tri(TriRing),
    Zn(IntegersMod),
}

impl Ring {
    pub fn build(spec: &RingSpec, limits: &Limits) -> Result<Self> {
        match *spec {
            RingSpec::TriangularMatrix { n, p, k } => Ok(Ring::Tri(TriRing::new(n, p, k, limits)?)),
            RingSpec::IntegersMod { modulus } => Ok(Ring::Zn(IntegersMod::new(modulus, limits)?)),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            Ring::Tri(r) => r.order(),
            Ring::Zn(z) => z.modulus(),
        }
    }

    pub fn spec(&self) -> RingSpec {
        match self {
            Ring::Tri(r) => r.spec(),
            Ring::Zn(z) => RingSpec::zn(z.modulus()),
        }
    }

    pub fn is_unit(&self, code: u64) -> bool {
        match self {
            Ring::Tri(r) => r.decode(code).is_unit(),
            Ring::Zn(z) => z.is_unit(code),
        }
    }

    /// Human-readable element label.
    pub fn label(&self, code: u64) -> String {
        match self {
            Ring::Tri(r) => r.decode(code).to_string(),
            Ring::Zn(_) => code.to_string(),
        }
    }
}

/// Every element of the ring, as canonical encodings in increasing order.
/// Element `i` of the result decodes to encoding `i`.
pub fn enumerate_ring(spec: &RingSpec, limits: &Limits) -> Result<Vec<u64>> {
    let ring = Ring::build(spec, limits)?;
    let codes: Vec<u64> = match &ring {
        Ring::Tri(r) => r.enumerate().map(|m| m.encode()).collect(),
        Ring::Zn(z) => z.enumerate().collect(),
    };
    Ok(codes)
}
