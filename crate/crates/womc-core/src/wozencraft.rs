//! A seeded ensemble of systematic k x (k+b) matrices over GF(2).
//!
//! For a seed alpha in GF(2^k), row i of the matrix is the basis vector e_i
//! followed by the first b coefficients of alpha * x^i. Equivalently, the
//! row space is { (u, first b coeffs of alpha*u) : u in GF(2^k) }, so every
//! achievable word is determined by its first k coordinates.
//!
//! A matrix is "good" for a coordinate set S when the columns outside S
//! still have full row rank; then any target syndrome can be hit while the
//! coordinates in S are pinned to prescribed values. The ensemble is small
//! enough to scan (2^k seeds) and dense enough that a good seed exists
//! whenever the pinned sets are small relative to b.

use alloc::vec::Vec;

use crate::bits::{BitMatrix, BitVector, IndexSet};
use crate::error::Error;
use crate::field::{project, FieldElement};
use crate::Result;

/// Shape of one ensemble: k message coordinates, b redundancy coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WozParams {
    k: usize,
    b: usize,
}

impl WozParams {
    /// Errors unless `0 < b <= k <= 32`.
    pub fn new(k: usize, b: usize) -> Result<Self> {
        if k == 0 || k > 32 || b == 0 || b > k {
            return Err(Error::Invalid("ensemble shape requires 0 < b <= k <= 32"));
        }
        Ok(WozParams { k, b })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Codeword length k + b.
    pub fn word_len(&self) -> usize {
        self.k + self.b
    }

    /// Number of seeds in the ensemble, 2^k.
    pub fn seed_count(&self) -> u64 {
        1u64 << self.k
    }

    fn check_seed(&self, alpha: FieldElement) -> Result<()> {
        if alpha.degree() != self.k {
            return Err(Error::Dimension("seed must come from GF(2^k)"));
        }
        Ok(())
    }

    fn check_set(&self, s: &IndexSet) -> Result<()> {
        if s.universe() != self.word_len() {
            return Err(Error::Dimension("coordinate set universe must be k + b"));
        }
        Ok(())
    }
}

/// The systematic matrix of seed `alpha`: row i is e_i followed by the
/// first b coefficients of alpha * x^i.
pub fn ensemble_matrix(p: &WozParams, alpha: FieldElement) -> Result<BitMatrix> {
    p.check_seed(alpha)?;
    let mut rows = Vec::with_capacity(p.k);
    for i in 0..p.k {
        let tail = project(&(alpha * FieldElement::monomial(p.k, i)?).coeffs(), p.b)?;
        let mut row = BitVector::zeros(p.word_len());
        row.set(i, true);
        row.splice(p.k, &tail);
        rows.push(row);
    }
    BitMatrix::from_rows(&rows)
}

/// Whether the columns of `A_alpha` outside `s` have full row rank, i.e.
/// targets remain reachable with the coordinates in `s` pinned.
pub fn is_good(p: &WozParams, alpha: FieldElement, s: &IndexSet) -> Result<bool> {
    p.check_set(s)?;
    let a = ensemble_matrix(p, alpha)?;
    Ok(a.restrict_columns(&s.complement())?.rank() == p.k)
}

/// The smallest seed (by coefficient-integer value) that is good for every
/// set in `sets`, scanning all 2^k candidates in ascending order.
///
/// Errors with [`Error::NoGoodMatrix`] when no seed qualifies.
pub fn find_good_matrix(p: &WozParams, sets: &[IndexSet]) -> Result<FieldElement> {
    for s in sets {
        p.check_set(s)?;
    }
    for alpha in FieldElement::all(p.k)? {
        let mut all_good = true;
        for s in sets {
            if !is_good(p, alpha, s)? {
                all_good = false;
                break;
            }
        }
        if all_good {
            return Ok(alpha);
        }
    }
    Err(Error::NoGoodMatrix)
}

/// Number of seeds whose matrix row space contains `y`.
pub fn count_spanning(p: &WozParams, y: &BitVector) -> Result<u64> {
    if y.len() != p.word_len() {
        return Err(Error::Dimension("word length must be k + b"));
    }
    let mut count = 0;
    for alpha in FieldElement::all(p.k)? {
        if ensemble_matrix(p, alpha)?.row_space_contains(y)? {
            count += 1;
        }
    }
    Ok(count)
}

/// The sufficient condition for [`find_good_matrix`] to succeed: the sum of
/// 2^|S| - 1 over the sets stays below 2^b.
pub fn guarantee_holds(p: &WozParams, sets: &[IndexSet]) -> Result<bool> {
    let mut total: u128 = 0;
    for s in sets {
        p.check_set(s)?;
        total = total.saturating_add((1u128 << s.len()) - 1);
    }
    Ok(total < 1u128 << p.b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: usize, b: usize) -> WozParams {
        WozParams::new(k, b).unwrap()
    }

    fn seed(k: usize, bits: u64) -> FieldElement {
        FieldElement::new(k, bits).unwrap()
    }

    fn set(universe: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(universe, members.to_vec()).unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(WozParams::new(0, 0).is_err());
        assert!(WozParams::new(2, 3).is_err());
        assert!(WozParams::new(33, 1).is_err());
        assert_eq!(params(3, 2).word_len(), 5);
        assert_eq!(params(3, 2).seed_count(), 8);
    }

    #[test]
    fn matrix_for_seed_x() {
        // k=2, b=1, alpha = x: alpha*1 = x -> coeffs (0,1), keep (0);
        // alpha*x = x^2 = x+1 -> coeffs (1,1), keep (1).
        let a = ensemble_matrix(&params(2, 1), seed(2, 0b10)).unwrap();
        let expect = BitMatrix::from_rows(&[
            BitVector::from_u64(3, 0b001),
            BitVector::from_u64(3, 0b110),
        ])
        .unwrap();
        assert_eq!(a, expect);
    }

    #[test]
    fn zero_seed_gives_identity_padding() {
        let a = ensemble_matrix(&params(3, 2), seed(3, 0)).unwrap();
        for i in 0..3 {
            for j in 0..5 {
                assert_eq!(a.get(i, j), i == j);
            }
        }
    }

    #[test]
    fn always_systematic_and_full_rank() {
        for (k, b) in [(1, 1), (2, 2), (3, 1), (4, 3), (5, 5)] {
            let p = params(k, b);
            for alpha in FieldElement::all(k).unwrap() {
                let a = ensemble_matrix(&p, alpha).unwrap();
                assert_eq!(a.rank(), k);
                for i in 0..k {
                    for j in 0..k {
                        assert_eq!(a.get(i, j), i == j);
                    }
                }
            }
        }
    }

    #[test]
    fn goodness_examples() {
        // With both redundancy columns pinned, the zero seed leaves rank 0
        // outside, while seed 1 copies the identity into the redundancy part.
        let p = params(2, 2);
        assert!(!is_good(&p, seed(2, 0), &set(4, &[0, 1])).unwrap());
        assert!(is_good(&p, seed(2, 1), &set(4, &[0, 1])).unwrap());
        assert_eq!(find_good_matrix(&p, &[set(4, &[0, 1])]).unwrap(), seed(2, 1));
    }

    #[test]
    fn smallest_good_seed_per_singleton() {
        let p = params(2, 1);
        assert_eq!(find_good_matrix(&p, &[set(3, &[0])]).unwrap(), seed(2, 1));
        assert_eq!(find_good_matrix(&p, &[set(3, &[1])]).unwrap(), seed(2, 2));
        assert_eq!(find_good_matrix(&p, &[set(3, &[2])]).unwrap(), seed(2, 0));
    }

    #[test]
    fn no_good_matrix_when_everything_pinned() {
        let p = params(1, 1);
        let err = find_good_matrix(&p, &[set(2, &[0, 1])]).unwrap_err();
        assert_eq!(err, Error::NoGoodMatrix);
    }

    #[test]
    fn spanning_counts() {
        let p = params(2, 1);
        assert_eq!(count_spanning(&p, &BitVector::zeros(3)).unwrap(), 4);
        // Words with a nonzero first-k part are each achieved by 2^{k-b}
        // seeds; words supported on the redundancy part alone by none.
        for y in 1u64..8 {
            let expect = if y & 0b11 != 0 { 2 } else { 0 };
            assert_eq!(count_spanning(&p, &BitVector::from_u64(3, y)).unwrap(), expect, "y={y:03b}");
        }
    }

    #[test]
    fn seeds_give_distinct_matrices() {
        for (k, b) in [(1, 1), (3, 1), (4, 2), (6, 3), (8, 8)] {
            let p = params(k, b);
            let mut seen = std::collections::HashSet::new();
            for alpha in FieldElement::all(k).unwrap() {
                let a = ensemble_matrix(&p, alpha).unwrap();
                let fingerprint: Vec<u64> = (0..k).map(|i| a.row(i).to_u64()).collect();
                assert!(seen.insert(fingerprint), "duplicate matrix at {alpha:?}");
            }
        }
    }

    #[test]
    fn guarantee_condition() {
        let p = params(4, 3);
        // 2 singletons + one pair: 1 + 1 + 3 = 5 < 8.
        let sets = [set(7, &[0]), set(7, &[4]), set(7, &[1, 2])];
        assert!(guarantee_holds(&p, &sets).unwrap());
        // Three pairs: 9 >= 8.
        let sets = [set(7, &[0, 1]), set(7, &[2, 3]), set(7, &[4, 5])];
        assert!(!guarantee_holds(&p, &sets).unwrap());
        assert!(guarantee_holds(&p, &[]).unwrap());
    }
}
