//! Fixed-width linear algebra over F₂.
//!
//! A [`Gf2Vector`] packs up to 32 coordinates into one machine word, coordinate
//! `i` in bit `i`. Matrices are plain row lists; rank and solving work on copies
//! so every operation here is pure.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Largest supported vector dimension.
pub const MAX_DIM: u8 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gf2Error {
    DimensionTooLarge(usize),
    StrayBits { dim: u8, bits: u32 },
    DimensionMismatch { left: u8, right: u8 },
    RhsLength { rows: usize, rhs: usize },
    BadDigit(char),
}

impl fmt::Display for Gf2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gf2Error::DimensionTooLarge(d) => write!(f, "dimension {d} exceeds {MAX_DIM}"),
            Gf2Error::StrayBits { dim, bits } => {
                write!(f, "bits {bits:#x} set beyond dimension {dim}")
            }
            Gf2Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Gf2Error::RhsLength { rows, rhs } => {
                write!(f, "right-hand side has {rhs} entries for {rows} rows")
            }
            Gf2Error::BadDigit(c) => write!(f, "invalid digit {c:?} in vector text"),
        }
    }
}

impl core::error::Error for Gf2Error {}

#[inline]
pub(crate) const fn dim_mask(dim: u8) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

/// A vector in F₂^dim.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    dim: u8,
    bits: u32,
}

impl Gf2Vector {
    pub fn new(dim: usize, bits: u32) -> Result<Self, Gf2Error> {
        if dim > MAX_DIM as usize {
            return Err(Gf2Error::DimensionTooLarge(dim));
        }
        let dim = dim as u8;
        if bits & !dim_mask(dim) != 0 {
            return Err(Gf2Error::StrayBits { dim, bits });
        }
        Ok(Self { dim, bits })
    }

    /// Builds a vector without range checks; stray high bits are masked off.
    #[inline]
    pub(crate) const fn from_raw(dim: u8, bits: u32) -> Self {
        Self {
            dim,
            bits: bits & dim_mask(dim),
        }
    }

    pub fn zero(dim: usize) -> Result<Self, Gf2Error> {
        Self::new(dim, 0)
    }

    /// The all-ones vector **1**.
    pub fn ones(dim: usize) -> Result<Self, Gf2Error> {
        if dim > MAX_DIM as usize {
            return Err(Gf2Error::DimensionTooLarge(dim));
        }
        Ok(Self::from_raw(dim as u8, u32::MAX))
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Result<Self, Gf2Error> {
        if i >= dim {
            return Err(Gf2Error::StrayBits {
                dim: dim.min(255) as u8,
                bits: 0,
            });
        }
        Self::new(dim, 1 << i)
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn get(self, i: usize) -> bool {
        i < self.dim as usize && (self.bits >> i) & 1 == 1
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Scalar product over F₂.
    pub fn dot(self, other: Self) -> Result<bool, Gf2Error> {
        if self.dim != other.dim {
            return Err(Gf2Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(dot_bits(self.bits, other.bits))
    }

    /// Odd iff the vector has an odd number of ones, i.e. `v · 1 = 1`.
    #[inline]
    pub fn parity(self) -> Parity {
        if self.bits.count_ones() & 1 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn xor(self, other: Self) -> Result<Self, Gf2Error> {
        if self.dim != other.dim {
            return Err(Gf2Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        })
    }

    /// Same coordinates in a larger space, new coordinates zero.
    pub fn padded(self, dim: usize) -> Result<Self, Gf2Error> {
        if dim < self.dim as usize {
            return Err(Gf2Error::DimensionMismatch {
                left: self.dim,
                right: dim.min(255) as u8,
            });
        }
        Self::new(dim, self.bits)
    }

    /// Applies a coordinate permutation: coordinate `i` moves to `perm[i]`.
    pub fn permute_coordinates(self, perm: &[usize]) -> Self {
        let mut out = 0u32;
        for (i, &p) in perm.iter().enumerate().take(self.dim as usize) {
            if self.get(i) {
                out |= 1 << p;
            }
        }
        Self::from_raw(self.dim, out)
    }

    /// All vectors of the given dimension in increasing bit order.
    pub fn all(dim: usize) -> impl Iterator<Item = Gf2Vector> {
        assert!(dim <= 20, "refusing to enumerate F2^{dim}");
        let d = dim as u8;
        (0u32..(1u32 << dim)).map(move |b| Gf2Vector::from_raw(d, b))
    }
}

#[inline]
pub(crate) fn dot_bits(a: u32, b: u32) -> bool {
    (a & b).count_ones() & 1 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim as usize {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

impl FromStr for Gf2Vector {
    type Err = Gf2Error;

    /// Parses `"110"` as coordinates (1, 1, 0); coordinate 0 comes first.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.len() > MAX_DIM as usize {
            return Err(Gf2Error::DimensionTooLarge(s.len()));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => return Err(Gf2Error::BadDigit(other)),
            }
        }
        Gf2Vector::new(s.chars().count(), bits)
    }
}

impl Gf2Vector {
    pub fn to_text(self) -> String {
        alloc::format!("{self}")
    }
}

/// A list of equal-dimension rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    dim: u8,
    rows: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn new(dim: usize, rows: Vec<Gf2Vector>) -> Result<Self, Gf2Error> {
        if dim > MAX_DIM as usize {
            return Err(Gf2Error::DimensionTooLarge(dim));
        }
        for r in &rows {
            if r.dim() != dim {
                return Err(Gf2Error::DimensionMismatch {
                    left: dim as u8,
                    right: r.dim,
                });
            }
        }
        Ok(Self { dim: dim as u8, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        rank_of_bits(self.rows.iter().map(|r| r.bits))
    }

    /// `M · x` as one bit per row.
    pub fn apply(&self, x: Gf2Vector) -> Result<Vec<bool>, Gf2Error> {
        self.rows.iter().map(|r| r.dot(x)).collect()
    }

    /// Solves `M · x = b`. Returns `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, rhs: &[bool]) -> Result<Option<AffineSolution>, Gf2Error> {
        if rhs.len() != self.rows.len() {
            return Err(Gf2Error::RhsLength {
                rows: self.rows.len(),
                rhs: rhs.len(),
            });
        }
        let mut sys = LinearSystem::new(self.dim);
        for (r, &b) in self.rows.iter().zip(rhs) {
            if !sys.push(r.bits, b) {
                return Ok(None);
            }
        }
        Ok(Some(sys.solution()))
    }
}

/// Rank of a row list given as raw words.
pub(crate) fn rank_of_bits(rows: impl IntoIterator<Item = u32>) -> usize {
    // basis[c] holds a reduced row whose lowest set bit is c
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let c = r.trailing_zeros() as usize;
            if basis[c] == 0 {
                basis[c] = r;
                rank += 1;
                break;
            }
            r ^= basis[c];
        }
    }
    rank
}

/// True iff the vectors are linearly independent (the empty family is).
pub fn is_independent(vs: &[Gf2Vector]) -> Result<bool, Gf2Error> {
    if let Some(first) = vs.first() {
        for v in vs {
            if v.dim != first.dim {
                return Err(Gf2Error::DimensionMismatch {
                    left: first.dim,
                    right: v.dim,
                });
            }
        }
    }
    Ok(rank_of_bits(vs.iter().map(|v| v.bits)) == vs.len())
}

/// Solution set of a consistent linear system: `particular + span(basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    particular: Gf2Vector,
    basis: Vec<Gf2Vector>,
}

impl AffineSolution {
    pub fn particular(&self) -> Gf2Vector {
        self.particular
    }

    /// Basis of the nullspace.
    pub fn basis(&self) -> &[Gf2Vector] {
        &self.basis
    }

    /// Number of solutions, `2^nullity`.
    pub fn len(&self) -> u64 {
        1u64 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The solution with nullspace coefficients given by the bits of `index`.
    pub fn nth(&self, index: u64) -> Gf2Vector {
        let mut bits = self.particular.bits;
        for (j, b) in self.basis.iter().enumerate() {
            if (index >> j) & 1 == 1 {
                bits ^= b.bits;
            }
        }
        Gf2Vector::from_raw(self.particular.dim, bits)
    }

    pub fn contains(&self, x: Gf2Vector) -> bool {
        if x.dim != self.particular.dim {
            return false;
        }
        let mut rows: Vec<u32> = self.basis.iter().map(|b| b.bits).collect();
        let before = rank_of_bits(rows.iter().copied());
        rows.push(x.bits ^ self.particular.bits);
        rank_of_bits(rows) == before
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        (0..self.len()).map(move |i| self.nth(i))
    }
}

/// Incremental Gauss-Jordan elimination on at most 32 unknowns.
///
/// Rows are kept fully reduced: every stored row has a pivot column that no
/// other stored row touches.
#[derive(Clone, Copy)]
pub(crate) struct LinearSystem {
    dim: u8,
    // pivot column -> row (coefficients | rhs << 32); zero means no pivot
    rows: [u64; 32],
    pivots: u32,
}

impl LinearSystem {
    #[inline]
    pub(crate) fn new(dim: u8) -> Self {
        Self {
            dim,
            rows: [0; 32],
            pivots: 0,
        }
    }

    /// Adds `row · x = rhs`; returns false if the system became inconsistent.
    #[inline]
    pub(crate) fn push(&mut self, row: u32, rhs: bool) -> bool {
        let mut r = (row & dim_mask(self.dim)) as u64 | ((rhs as u64) << 32);
        let mut p = self.pivots & r as u32;
        while p != 0 {
            let c = p.trailing_zeros();
            r ^= self.rows[c as usize];
            p &= p - 1;
        }
        let coeffs = r as u32;
        if coeffs == 0 {
            return r >> 32 == 0;
        }
        let c = coeffs.trailing_zeros();
        let mut others = self.pivots;
        while others != 0 {
            let o = others.trailing_zeros() as usize;
            if (self.rows[o] >> c) & 1 == 1 {
                self.rows[o] ^= r;
            }
            others &= others - 1;
        }
        self.rows[c as usize] = r;
        self.pivots |= 1 << c;
        true
    }

    #[inline]
    pub(crate) fn particular_bits(&self) -> u32 {
        let mut x = 0u32;
        let mut p = self.pivots;
        while p != 0 {
            let c = p.trailing_zeros();
            if self.rows[c as usize] >> 32 & 1 == 1 {
                x |= 1 << c;
            }
            p &= p - 1;
        }
        x
    }

    /// Writes the nullspace basis into `out`, returning how many vectors.
    #[inline]
    pub(crate) fn nullspace_bits(&self, out: &mut [u32; 32]) -> usize {
        let free = dim_mask(self.dim) & !self.pivots;
        let mut n = 0;
        let mut f = free;
        while f != 0 {
            let col = f.trailing_zeros();
            let mut v = 1u32 << col;
            let mut p = self.pivots;
            while p != 0 {
                let c = p.trailing_zeros();
                if (self.rows[c as usize] >> col) & 1 == 1 {
                    v |= 1 << c;
                }
                p &= p - 1;
            }
            out[n] = v;
            n += 1;
            f &= f - 1;
        }
        n
    }

    pub(crate) fn solution(&self) -> AffineSolution {
        let mut buf = [0u32; 32];
        let n = self.nullspace_bits(&mut buf);
        AffineSolution {
            particular: Gf2Vector::from_raw(self.dim, self.particular_bits()),
            basis: buf[..n].iter().map(|&b| Gf2Vector::from_raw(self.dim, b)).collect(),
        }
    }
}

/// Dimension of `span(vs) ∩ span(vs)^⊥`, computed from the Gram matrix of a
/// basis of the span.
pub fn radical_dim(vs: &[Gf2Vector]) -> Result<usize, Gf2Error> {
    if let Some(first) = vs.first() {
        for v in vs {
            if v.dim != first.dim {
                return Err(Gf2Error::DimensionMismatch {
                    left: first.dim,
                    right: v.dim,
                });
            }
        }
    }
    let basis = span_basis(vs.iter().map(|v| v.bits));
    let gram = basis.iter().map(|&a| {
        basis
            .iter()
            .enumerate()
            .fold(0u32, |acc, (j, &b)| acc | ((dot_bits(a, b) as u32) << j))
    });
    Ok(basis.len() - rank_of_bits(gram))
}

/// A basis of the span of the given rows (a subset of the inputs).
pub(crate) fn span_basis(rows: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut reduced = [0u32; 32];
    let mut out = Vec::new();
    for r in rows {
        let mut x = r;
        while x != 0 {
            let c = x.trailing_zeros() as usize;
            if reduced[c] == 0 {
                reduced[c] = x;
                out.push(r);
                break;
            }
            x ^= reduced[c];
        }
    }
    out
}
