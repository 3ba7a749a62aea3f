//! Ranking and unranking of fixed-weight subsets (colexicographic order)
//! and permutations (Lehmer code, lexicographic order).

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bits::IndexSet;
use crate::error::Error;
use crate::Result;

/// Binomial coefficient, exact.
///
/// # Panics
/// Panics if the value overflows u128.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - k + i + 1) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

/// Colexicographic rank of a fixed-weight subset among all subsets of the
/// same weight: for members s_0 < s_1 < ... the rank is the sum of
/// C(s_i, i+1). The universe size does not enter.
pub fn subset_rank(s: &IndexSet) -> u128 {
    s.members().iter().enumerate().map(|(i, &e)| binomial(e, i + 1)).sum()
}

/// Inverse of [`subset_rank`] for weight-`w` subsets of `0..m`.
///
/// Errors when `rank >= C(m, w)`.
pub fn subset_unrank(rank: u128, m: usize, w: usize) -> Result<IndexSet> {
    if rank >= binomial(m, w) {
        return Err(Error::Invalid("subset rank out of range"));
    }
    let mut rank = rank;
    let mut members = Vec::with_capacity(w);
    for i in (1..=w).rev() {
        // Largest e with C(e, i) <= remaining rank.
        let mut e = i - 1;
        while e + 1 < m && binomial(e + 1, i) <= rank {
            e += 1;
        }
        rank -= binomial(e, i);
        members.push(e);
    }
    members.reverse();
    IndexSet::new(m, members)
}

/// Lexicographic (Lehmer) rank of a permutation of `0..n` given in one-line
/// notation: `perm[i]` is the image of `i`.
///
/// Errors when the input is not a permutation.
pub fn perm_rank(perm: &[usize]) -> Result<BigUint> {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Invalid("input is not a permutation of 0..n"));
        }
        seen[p] = true;
    }
    let mut rank = BigUint::from(0u8);
    for i in 0..n {
        let digit = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count();
        rank = rank * (n - i) + digit;
    }
    Ok(rank)
}

/// Inverse of [`perm_rank`].
///
/// Errors when `rank >= n!`.
pub fn perm_unrank(rank: &BigUint, n: usize) -> Result<Vec<usize>> {
    let mut digits = Vec::with_capacity(n);
    let mut rest = rank.clone();
    for radix in 1..=n {
        let q = &rest / radix as u64;
        digits.push((&rest - &q * radix as u64).to_usize().expect("digit below its radix"));
        rest = q;
    }
    if rest != BigUint::from(0u8) {
        return Err(Error::Invalid("permutation rank out of range"));
    }
    digits.reverse();
    let mut avail: Vec<usize> = (0..n).collect();
    Ok(digits.into_iter().map(|d| avail.remove(d)).collect())
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u8);
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// log2(n!), accurate to f64 precision, computed from the exact factorial.
pub fn log2_factorial(n: usize) -> f64 {
    let f = factorial(n);
    let bits = f.bits();
    if bits <= 53 {
        libm::log2(f.to_u64().expect("fits in 53 bits") as f64)
    } else {
        let shift = bits - 53;
        let hi = (f >> shift).to_u64().expect("53 bits requested") as f64;
        libm::log2(hi) + shift as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_pascal() {
        let mut pascal = [[0u128; 40]; 40];
        pascal[0][0] = 1;
        for n in 1..40 {
            pascal[n][0] = 1;
            for k in 1..=n {
                pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
            }
        }
        for (n, row) in pascal.iter().enumerate() {
            for (k, &expected) in row.iter().enumerate() {
                assert_eq!(binomial(n, k), expected, "C({n},{k})");
            }
        }
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    fn set(m: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(m, members.to_vec()).unwrap()
    }

    #[test]
    fn colex_examples() {
        assert_eq!(subset_rank(&set(4, &[1, 3])), 4);
        assert_eq!(subset_rank(&set(4, &[0, 1])), 0);
        assert_eq!(subset_rank(&set(4, &[2, 3])), 5);
        // Full colex order for m=4, w=2.
        let order: Vec<_> = (0..6).map(|r| subset_unrank(r, 4, 2).unwrap()).collect();
        let expect = [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]];
        for (s, e) in order.iter().zip(expect) {
            assert_eq!(s.members(), e);
        }
    }

    #[test]
    fn subset_rank_round_trip() {
        for (m, w) in [(6, 3), (5, 2), (8, 1), (4, 4), (7, 0)] {
            for r in 0..binomial(m, w) {
                let s = subset_unrank(r, m, w).unwrap();
                assert_eq!(s.len(), w);
                assert_eq!(subset_rank(&s), r);
            }
            assert!(subset_unrank(binomial(m, w), m, w).is_err());
        }
    }

    #[test]
    fn perm_rank_examples() {
        assert_eq!(perm_rank(&[1, 0]).unwrap(), BigUint::from(1u8));
        assert_eq!(perm_rank(&[2, 0, 1]).unwrap(), BigUint::from(4u8));
        assert_eq!(perm_rank(&[0, 1, 2, 3]).unwrap(), BigUint::from(0u8));
        assert_eq!(perm_rank(&[1, 3, 0, 2]).unwrap(), BigUint::from(10u8));
        assert!(perm_rank(&[0, 0, 1]).is_err());
        assert!(perm_rank(&[0, 3]).is_err());
    }

    #[test]
    fn perm_rank_round_trip_exhaustive() {
        for n in [1usize, 2, 3, 4, 5] {
            let count: u64 = (1..=n as u64).product();
            for r in 0..count {
                let rank = BigUint::from(r);
                let p = perm_unrank(&rank, n).unwrap();
                assert_eq!(perm_rank(&p).unwrap(), rank);
            }
            assert!(perm_unrank(&BigUint::from(count), n).is_err());
        }
    }

    #[test]
    fn perm_rank_round_trip_wide() {
        // n = 20 pushes ranks past u64; exercise the big-integer path.
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut p: Vec<usize> = (0..20).collect();
            p.shuffle(&mut rng);
            let rank = perm_rank(&p).unwrap();
            assert_eq!(perm_unrank(&rank, 20).unwrap(), p);
        }
        let last = perm_rank(&(0..20).rev().collect::<Vec<_>>()).unwrap();
        assert_eq!(last, factorial(20) - 1u8);
    }

    #[test]
    fn factorial_and_log() {
        assert_eq!(factorial(0), BigUint::from(1u8));
        assert_eq!(factorial(20), BigUint::from(2_432_902_008_176_640_000u64));
        let direct = libm::log2(2_432_902_008_176_640_000u64 as f64);
        assert!((log2_factorial(20) - direct).abs() < 1e-9);
        let sum: f64 = (2..=200u32).map(|i| libm::log2(i as f64)).sum();
        assert!((log2_factorial(200) - sum).abs() / sum < 1e-12);
    }
}
