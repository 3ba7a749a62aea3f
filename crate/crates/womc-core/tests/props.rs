//! Property tests for the linear-algebra kernel and the ranking maps.

use proptest::prelude::*;

use womc_core::bits::BitMatrix;
use womc_core::ranking::{perm_rank, perm_unrank, subset_rank, subset_unrank};
use womc_core::{solve_constrained, BitVector, Error, IndexSet};

fn bit_vec(len: usize) -> impl Strategy<Value = BitVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(|bits| BitVector::from_bools(&bits))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    prop::collection::vec(bit_vec(cols), rows)
        .prop_map(|rows| BitMatrix::from_rows(&rows).unwrap())
}

proptest! {
    #[test]
    fn solver_output_satisfies_the_system(
        (a, x, mask, values) in (1usize..=5, 1usize..=8).prop_flat_map(|(k, n)| {
            (matrix(k, n), bit_vec(k), bit_vec(n), bit_vec(n))
        })
    ) {
        let n = mask.len();
        let stuck = IndexSet::from_support(&mask);
        let mut w = BitVector::zeros(n);
        for &i in stuck.members() {
            w.set(i, values.get(i));
        }
        match solve_constrained(&a, &x, &stuck, &w) {
            Ok(y) => {
                prop_assert_eq!(a.mul_vec(&y).unwrap(), x);
                for &i in stuck.members() {
                    prop_assert_eq!(y.get(i), w.get(i));
                }
            }
            Err(Error::NoSolution) => {
                // brute force: no word matching the pinned cells maps to x
                for bits in 0u64..1 << n {
                    let y = BitVector::from_u64(n, bits);
                    let pinned_ok = stuck.members().iter().all(|&i| y.get(i) == w.get(i));
                    if pinned_ok {
                        prop_assert_ne!(a.mul_vec(&y).unwrap(), x.clone());
                    }
                }
            }
            Err(other) => prop_assert!(false, "unexpected error {:?}", other),
        }
    }

    #[test]
    fn rank_is_invariant_under_row_swaps_and_additions(
        (a, i, j) in (2usize..=6, 2usize..=8).prop_flat_map(|(k, n)| {
            (matrix(k, n), 0..k, 0..k)
        })
    ) {
        let base = a.rank();
        prop_assert!(base <= a.rows().min(a.cols()));
        let mut rows: Vec<BitVector> = (0..a.rows()).map(|r| a.row(r)).collect();
        rows.swap(i, j);
        prop_assert_eq!(BitMatrix::from_rows(&rows).unwrap().rank(), base);
        if i != j {
            let mut added = rows.clone();
            let src = added[j].clone();
            added[i].xor_assign(&src);
            prop_assert_eq!(BitMatrix::from_rows(&added).unwrap().rank(), base);
        }
        // duplicating every row changes nothing
        let doubled: Vec<BitVector> = rows.iter().chain(rows.iter()).cloned().collect();
        prop_assert_eq!(BitMatrix::from_rows(&doubled).unwrap().rank(), base);
    }

    #[test]
    fn subset_ranking_round_trips(bits in prop::collection::vec(any::<bool>(), 1..20)) {
        let v = BitVector::from_bools(&bits);
        let s = IndexSet::from_support(&v);
        let rank = subset_rank(&s);
        let back = subset_unrank(rank, v.len(), s.len()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn perm_ranking_round_trips(seed in any::<u64>(), n in 1usize..10) {
        // build a permutation from the seed deterministically
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let rank = perm_rank(&perm).unwrap();
        prop_assert_eq!(perm_unrank(&rank, n).unwrap(), perm);
    }

    #[test]
    fn byte_serialization_round_trips(bits in prop::collection::vec(any::<bool>(), 0..120)) {
        let v = BitVector::from_bools(&bits);
        let bytes = v.to_le_bytes();
        prop_assert_eq!(bytes.len(), bits.len().div_ceil(8));
        let back = BitVector::from_le_bytes(v.len(), &bytes).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn splice_inverts_slice(
        (v, at, len) in (1usize..100).prop_flat_map(|n| {
            (bit_vec(n), 0..n, Just(n))
        }).prop_flat_map(|(v, at, n)| {
            (Just(v), Just(at), 0..=(n - at))
        })
    ) {
        let cut = v.slice(at..at + len);
        let mut patched = v.clone();
        patched.splice(at, &cut);
        prop_assert_eq!(patched, v);
    }
}
