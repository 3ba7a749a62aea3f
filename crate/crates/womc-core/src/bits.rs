//! Bit-packed vectors and matrices over GF(2).
//!
//! Coordinates are 0-based throughout. Index 0 of a vector lives in the
//! lowest-order bit of its first packed word, and the same convention is
//! used when vectors are serialized to bytes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    /// All-one vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = BitVector { len, words: vec![!0u64; words_for(len)] };
        v.mask_tail();
        v
    }

    /// Vector with exactly the listed indices set.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Vector from a slice of bits given as bools, index 0 first.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// The low `len` bits of `value`, index 0 = least significant bit.
    ///
    /// # Panics
    /// Panics if `len > 64`.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= 64, "from_u64 supports at most 64 bits");
        let mut v = BitVector::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { value } else { value & ((1u64 << len) - 1) };
        }
        v
    }

    /// The vector read back as an integer, index 0 = least significant bit.
    ///
    /// # Panics
    /// Panics if the vector is longer than 64 bits.
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64, "to_u64 supports at most 64 bits");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `i` is out of range.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i` is out of range.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every set bit of `other` is also set here.
    ///
    /// # Panics
    /// Panics if the lengths differ.
    pub fn dominates(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dominates requires equal lengths");
        self.words.iter().zip(&other.words).all(|(a, b)| b & !a == 0)
    }

    /// In-place XOR with another vector of the same length.
    ///
    /// # Panics
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor requires equal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Copy of the bits in `range` as a new vector.
    ///
    /// # Panics
    /// Panics if the range exceeds the vector.
    pub fn slice(&self, range: core::ops::Range<usize>) -> BitVector {
        assert!(range.end <= self.len && range.start <= range.end);
        let mut out = BitVector::zeros(range.end - range.start);
        for (j, i) in range.enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// Overwrite the bits starting at `offset` with `src`.
    ///
    /// # Panics
    /// Panics if `src` does not fit.
    pub fn splice(&mut self, offset: usize, src: &BitVector) {
        assert!(offset + src.len <= self.len, "splice out of range");
        for i in 0..src.len {
            self.set(offset + i, src.get(i));
        }
    }

    /// Bytes in cell order: bit `i` goes to byte `i / 8`, bit `i % 8`,
    /// least significant bit first. The final partial byte is zero-padded.
    pub fn to_le_bytes(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.len.div_ceil(8)];
        for (i, byte) in out.iter_mut().enumerate() {
            *byte = ((self.words[i * 8 / WORD_BITS] >> (i * 8 % WORD_BITS)) & 0xff) as u8;
        }
        out
    }

    /// Inverse of [`BitVector::to_le_bytes`].
    ///
    /// Errors when the byte count does not match the length or a padding bit
    /// is set.
    pub fn from_le_bytes(len: usize, bytes: &[u8]) -> Result<Self> {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::Dimension("byte count does not match bit length"));
        }
        let mut v = BitVector::zeros(len);
        for (i, &byte) in bytes.iter().enumerate() {
            v.words[i * 8 / WORD_BITS] |= (byte as u64) << (i * 8 % WORD_BITS);
        }
        let mut check = v.clone();
        check.mask_tail();
        if check.words != v.words {
            return Err(Error::Invalid("padding bits past the vector length must be zero"));
        }
        Ok(v)
    }

    fn mask_tail(&mut self) {
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// A set of coordinate indices inside a universe `0..universe`.
///
/// Members are kept strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    universe: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Builds the set, validating range and strict ascending order.
    pub fn new(universe: usize, members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("index set members must be strictly increasing"));
        }
        if members.last().is_some_and(|&m| m >= universe) {
            return Err(Error::Invalid("index set member outside its universe"));
        }
        Ok(IndexSet { universe, members })
    }

    pub fn empty(universe: usize) -> Self {
        IndexSet { universe, members: Vec::new() }
    }

    /// The set of positions where `v` is 1, with universe `v.len()`.
    pub fn from_support(v: &BitVector) -> Self {
        IndexSet { universe: v.len(), members: v.support() }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Indices of the universe not in this set, ascending.
    pub fn complement(&self) -> IndexSet {
        let mut members = Vec::with_capacity(self.universe - self.members.len());
        let mut it = self.members.iter().peekable();
        for i in 0..self.universe {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                members.push(i);
            }
        }
        IndexSet { universe: self.universe, members }
    }

    /// 0/1 vector of length `universe` with ones exactly on the members.
    pub fn characteristic(&self) -> BitVector {
        BitVector::from_indices(self.universe, &self.members)
    }
}

/// A dense matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks equal-length vectors as the rows of a matrix.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("matrix rows must share one length"));
        }
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.words_mut(i).copy_from_slice(&r.words);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn words(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    fn words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    /// # Panics
    /// Panics if out of range.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        (self.words(r)[c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if out of range.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            self.words_mut(r)[c / WORD_BITS] |= mask;
        } else {
            self.words_mut(r)[c / WORD_BITS] &= !mask;
        }
    }

    /// Copy of row `r`.
    pub fn row(&self, r: usize) -> BitVector {
        BitVector { len: self.cols, words: self.words(r).to_vec() }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.wpr);
            (&lo[src * self.wpr..src * self.wpr + self.wpr], &mut hi[..self.wpr])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.wpr);
            (&hi[..self.wpr], &mut lo[dst * self.wpr..dst * self.wpr + self.wpr])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for w in 0..self.wpr {
            self.data.swap(i * self.wpr + w, j * self.wpr + w);
        }
    }

    /// Matrix-vector product over GF(2).
    ///
    /// Errors when `v.len() != cols`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length must equal column count"));
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let dot = self
                .words(r)
                .iter()
                .zip(&v.words)
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if dot & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Rank over GF(2), computed on a scratch copy by Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.clone().echelon().1
    }

    /// The columns listed in `s`, in ascending order, as a new matrix.
    ///
    /// Errors when the universe of `s` is not the column count.
    pub fn restrict_columns(&self, s: &IndexSet) -> Result<BitMatrix> {
        if s.universe() != self.cols {
            return Err(Error::Dimension("index set universe must equal column count"));
        }
        let mut out = BitMatrix::zeros(self.rows, s.len());
        for r in 0..self.rows {
            for (j, &c) in s.members().iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Whether `y` lies in the span of the rows of this matrix.
    ///
    /// Errors when `y.len() != cols`.
    pub fn row_space_contains(&self, y: &BitVector) -> Result<bool> {
        if y.len() != self.cols {
            return Err(Error::Dimension("vector length must equal column count"));
        }
        let (echelon, rank) = self.clone().echelon();
        let mut rem = y.clone();
        for r in 0..rank {
            let pivot = echelon.row(r).support()[0];
            if rem.get(pivot) {
                rem.xor_assign(&echelon.row(r));
            }
        }
        Ok(rem.is_zero())
    }

    /// Gauss-Jordan elimination in place; returns self and the rank.
    /// Pivot columns are scanned left to right, so the result is the reduced
    /// row-echelon form and is canonical for the row space.
    fn echelon(mut self) -> (Self, usize) {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            for r in 0..self.rows {
                if r != rank && self.get(r, col) {
                    self.xor_row_into(rank, r);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (self, rank)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Solves `a * y = x` subject to `y` agreeing with `w` on the coordinates in
/// `s`. Coordinates outside `s` that remain free after elimination are set
/// to 0, so the solution is canonical.
///
/// Errors with [`Error::NoSolution`] when the columns outside `s` do not
/// span the required residual, and with a dimension error when shapes
/// disagree or `w` is nonzero outside `s`.
pub fn solve_constrained(
    a: &BitMatrix,
    x: &BitVector,
    s: &IndexSet,
    w: &BitVector,
) -> Result<BitVector> {
    if x.len() != a.rows() {
        return Err(Error::Dimension("right-hand side length must equal row count"));
    }
    if s.universe() != a.cols() || w.len() != a.cols() {
        return Err(Error::Dimension("constraint set and values must match column count"));
    }
    for i in w.support() {
        if !s.contains(i) {
            return Err(Error::Invalid("constraint values must be zero outside the constrained set"));
        }
    }

    // Substitute the fixed coordinates: solve b * u = x + a*w on the rest.
    let mut residual = a.mul_vec(w)?;
    residual.xor_assign(x);
    let free = s.complement();
    let b = a.restrict_columns(&free)?;

    // Eliminate on [b | residual].
    let mut aug = BitMatrix::zeros(b.rows(), b.cols() + 1);
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            if b.get(r, c) {
                aug.set(r, c, true);
            }
        }
        if residual.get(r) {
            aug.set(r, b.cols(), true);
        }
    }
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..b.cols() {
        let Some(pivot) = (rank..aug.rows()).find(|&r| aug.get(r, col)) else {
            continue;
        };
        aug.swap_rows(rank, pivot);
        for r in 0..aug.rows() {
            if r != rank && aug.get(r, col) {
                aug.xor_row_into(rank, r);
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if (rank..aug.rows()).any(|r| aug.get(r, b.cols())) {
        return Err(Error::NoSolution);
    }

    let mut y = w.clone();
    for (r, &col) in pivot_cols.iter().enumerate() {
        if aug.get(r, b.cols()) {
            y.set(free.members()[col], true);
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BitMatrix {
        let rows: Vec<BitVector> =
            rows.iter().map(|r| BitVector::from_bools(&r.iter().map(|&b| b == 1).collect::<Vec<_>>())).collect();
        BitMatrix::from_rows(&rows).unwrap()
    }

    fn v(bits: &[u8]) -> BitVector {
        BitVector::from_bools(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_dependent_rows() {
        // Third row is the sum of the first two.
        assert_eq!(m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]).rank(), 2);
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(m(&[&[1, 1, 1]]).rank(), 1);
    }

    #[test]
    fn rank_unchanged_by_row_swap_and_xor() {
        let a = m(&[&[1, 0, 1, 1], &[0, 1, 1, 0], &[1, 1, 0, 1]]);
        let mut b = a.clone();
        b.swap_rows(0, 2);
        assert_eq!(a.rank(), b.rank());
        b.xor_row_into(0, 1);
        assert_eq!(a.rank(), b.rank());
    }

    #[test]
    fn mul_vec_matches_manual_dot() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(a.mul_vec(&v(&[1, 1, 1])).unwrap(), v(&[0, 0]));
        assert_eq!(a.mul_vec(&v(&[1, 0, 0])).unwrap(), v(&[1, 0]));
        assert_eq!(a.mul_vec(&v(&[0, 0, 1])).unwrap(), v(&[1, 1]));
        assert!(a.mul_vec(&v(&[1, 0])).is_err());
    }

    #[test]
    fn restrict_columns_picks_ascending() {
        let a = m(&[&[1, 0, 1, 0], &[0, 1, 1, 1]]);
        let s = IndexSet::new(4, vec![1, 3]).unwrap();
        assert_eq!(a.restrict_columns(&s).unwrap(), m(&[&[0, 0], &[1, 1]]));
        let bad = IndexSet::new(3, vec![1]).unwrap();
        assert!(a.restrict_columns(&bad).is_err());
    }

    #[test]
    fn row_space_membership() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(a.row_space_contains(&v(&[1, 1, 0])).unwrap());
        assert!(a.row_space_contains(&v(&[0, 0, 0])).unwrap());
        assert!(!a.row_space_contains(&v(&[0, 0, 1])).unwrap());
        // Exhaustive: the row space of a rank-2 matrix has 4 vectors.
        let count = (0..8).filter(|&y| a.row_space_contains(&BitVector::from_u64(3, y)).unwrap()).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn index_set_validation_and_complement() {
        assert!(IndexSet::new(4, vec![2, 1]).is_err());
        assert!(IndexSet::new(4, vec![1, 1]).is_err());
        assert!(IndexSet::new(4, vec![4]).is_err());
        let s = IndexSet::new(5, vec![0, 3]).unwrap();
        assert_eq!(s.complement().members(), &[1, 2, 4]);
        assert_eq!(s.complement().complement(), s);
        assert_eq!(s.characteristic(), v(&[1, 0, 0, 1, 0]));
        assert_eq!(IndexSet::from_support(&v(&[1, 0, 0, 1, 0])), s);
    }

    #[test]
    fn solve_unconstrained_sets_free_vars_to_zero() {
        // a = [[1,0,0],[0,1,0]]: solution of a*y = (1,0) with no constraints
        // is (1,0,0), the free third coordinate stays 0.
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let y = solve_constrained(&a, &v(&[1, 0]), &IndexSet::empty(3), &v(&[0, 0, 0])).unwrap();
        assert_eq!(y, v(&[1, 0, 0]));
    }

    #[test]
    fn solve_respects_constraints() {
        // Force y0 = 1 on a system where the unconstrained answer is y0 = 0.
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let s = IndexSet::new(3, vec![0]).unwrap();
        let y = solve_constrained(&a, &v(&[0, 1]), &s, &v(&[1, 0, 0])).unwrap();
        assert!(y.get(0));
        assert_eq!(a.mul_vec(&y).unwrap(), v(&[0, 1]));
    }

    #[test]
    fn solve_detects_unsolvable() {
        // Columns outside s are all zero, so only x = a*w is reachable.
        let a = m(&[&[1, 0], &[1, 0]]);
        let s = IndexSet::new(2, vec![0]).unwrap();
        let err = solve_constrained(&a, &v(&[1, 0]), &s, &v(&[1, 0])).unwrap_err();
        assert_eq!(err, Error::NoSolution);
    }

    #[test]
    fn solve_rejects_values_outside_set() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let s = IndexSet::new(2, vec![0]).unwrap();
        assert!(solve_constrained(&a, &v(&[0, 0]), &s, &v(&[0, 1])).is_err());
    }

    #[test]
    fn solve_exhaustive_small() {
        // For every 2x3 matrix, constraint set, legal w and target x, a
        // returned solution must satisfy both the system and the constraint.
        let mut checked = 0u32;
        for bits in 0..64u64 {
            let mut a = BitMatrix::zeros(2, 3);
            for i in 0..6 {
                if bits >> i & 1 == 1 {
                    a.set(i / 3, i % 3, true);
                }
            }
            for mask in 0..8u64 {
                let s = IndexSet::from_support(&BitVector::from_u64(3, mask));
                for wv in 0..8u64 {
                    if wv & !mask != 0 {
                        continue;
                    }
                    let w = BitVector::from_u64(3, wv);
                    for xv in 0..4u64 {
                        let x = BitVector::from_u64(2, xv);
                        if let Ok(y) = solve_constrained(&a, &x, &s, &w) {
                            assert_eq!(a.mul_vec(&y).unwrap(), x);
                            for &i in s.members() {
                                assert_eq!(y.get(i), w.get(i));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn bytes_round_trip() {
        let x = v(&[1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0]);
        let bytes = x.to_le_bytes();
        assert_eq!(bytes.len(), 2);
        assert_eq!(bytes[0], 0b0101_1001); // bit 0 of the vector is the lsb
        assert_eq!(BitVector::from_le_bytes(11, &bytes).unwrap(), x);
        assert!(BitVector::from_le_bytes(11, &[0xff, 0xff]).is_err());
        assert!(BitVector::from_le_bytes(11, &[0x00]).is_err());
    }

    #[test]
    fn dominates_and_weight() {
        assert!(v(&[1, 1, 0]).dominates(&v(&[1, 0, 0])));
        assert!(v(&[1, 1, 0]).dominates(&v(&[1, 1, 0])));
        assert!(!v(&[1, 1, 0]).dominates(&v(&[0, 0, 1])));
        assert_eq!(v(&[1, 1, 0, 1]).weight(), 3);
        assert_eq!(BitVector::ones(70).weight(), 70);
    }

    #[test]
    fn slice_and_splice() {
        let x = v(&[1, 0, 1, 1, 0, 0, 1]);
        assert_eq!(x.slice(2..5), v(&[1, 1, 0]));
        let mut y = BitVector::zeros(7);
        y.splice(2, &v(&[1, 1, 0]));
        assert_eq!(y, v(&[0, 0, 1, 1, 0, 0, 0]));
    }
}
