//! Writing through cells that are frozen at known values.
//!
//! A chunk of k+b cells with some coordinates stuck can still carry k
//! payload bits: scan the ensemble for a seed whose matrix solves the
//! system with the stuck coordinates pinned, store the codeword, and let
//! the reader recompute the payload from the seed. Any stuck set of at
//! most b cells is always writable.

use num_rational::Ratio;

use crate::bits::{solve_constrained, BitVector, IndexSet};
use crate::error::Error;
use crate::field::FieldElement;
use crate::image::{MemoryImage, Scheme, SchemeParams};
use crate::wozencraft::{ensemble_matrix, WozParams};
use crate::Result;

/// Which cells of a chunk are frozen, and at which values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectPattern {
    stuck: IndexSet,
    values: BitVector,
}

impl DefectPattern {
    /// Errors when `values` has a different length than the universe of
    /// `stuck` or is nonzero outside it.
    pub fn new(stuck: IndexSet, values: BitVector) -> Result<Self> {
        if values.len() != stuck.universe() {
            return Err(Error::Dimension("frozen values must cover the whole chunk"));
        }
        if values.support().iter().any(|&i| !stuck.contains(i)) {
            return Err(Error::Invalid("frozen values must be zero outside the stuck set"));
        }
        Ok(DefectPattern { stuck, values })
    }

    /// A pattern whose stuck cells are all frozen at 1.
    pub fn stuck_at_one(stuck: IndexSet) -> Self {
        let values = stuck.characteristic();
        DefectPattern { stuck, values }
    }

    pub fn len(&self) -> usize {
        self.stuck.universe()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn stuck(&self) -> &IndexSet {
        &self.stuck
    }

    pub fn values(&self) -> &BitVector {
        &self.values
    }
}

/// Encodes `payload` (k bits) into a chunk of k+b cells honoring the
/// defects: returns the smallest seed whose matrix solves the constrained
/// system, together with the codeword.
///
/// Succeeds for every payload whenever the stuck set has at most b cells;
/// errors with [`Error::NoGoodMatrix`] once all 2^k seeds fail.
pub fn chunk_encode(
    p: &WozParams,
    d: &DefectPattern,
    payload: &BitVector,
) -> Result<(FieldElement, BitVector)> {
    if d.len() != p.word_len() {
        return Err(Error::Dimension("defect pattern must cover k + b cells"));
    }
    if payload.len() != p.k() {
        return Err(Error::Dimension("payload must have k bits"));
    }
    for alpha in FieldElement::all(p.k())? {
        let a = ensemble_matrix(p, alpha)?;
        match solve_constrained(&a, payload, &d.stuck, &d.values) {
            Ok(y) => return Ok((alpha, y)),
            Err(Error::NoSolution) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoGoodMatrix)
}

/// Recovers the payload from a stored codeword and its seed.
pub fn chunk_decode(p: &WozParams, alpha: FieldElement, y: &BitVector) -> Result<BitVector> {
    if y.len() != p.word_len() {
        return Err(Error::Dimension("codeword must have k + b cells"));
    }
    ensemble_matrix(p, alpha)?.mul_vec(y)
}

/// Information rate sustainable against a given fraction of stuck cells:
/// k/(k+b) while the density is at most b/(k+b), otherwise 0.
///
/// Errors when `density` exceeds 1.
pub fn defect_capacity(p: &WozParams, density: Ratio<u64>) -> Result<Ratio<u64>> {
    if density > Ratio::from_integer(1) {
        return Err(Error::Invalid("defect density must lie in [0, 1]"));
    }
    let n = p.word_len() as u64;
    if density <= Ratio::new(p.b() as u64, n) {
        Ok(Ratio::new(p.k() as u64, n))
    } else {
        Ok(Ratio::from_integer(0))
    }
}

/// Runs [`chunk_encode`] and stores codeword and seed as a one-round image.
pub fn write_image(p: &WozParams, d: &DefectPattern, payload: &BitVector) -> Result<MemoryImage> {
    let (alpha, y) = chunk_encode(p, d, payload)?;
    let mut img = MemoryImage::blank(SchemeParams::Defect { shape: *p, seed: alpha.bits() })?;
    img.commit(y)?;
    Ok(img)
}

/// Recovers the payload from an image produced by [`write_image`].
pub fn read_image(img: &MemoryImage) -> Result<BitVector> {
    img.expect(Scheme::Defect, 1)?;
    let SchemeParams::Defect { shape, seed } = img.params() else {
        unreachable!("scheme checked above");
    };
    chunk_decode(shape, FieldElement::new(shape.k(), *seed)?, img.cells())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pattern(n: usize, stuck: &[usize], values: u64) -> DefectPattern {
        DefectPattern::new(
            IndexSet::new(n, stuck.to_vec()).unwrap(),
            BitVector::from_u64(n, values),
        )
        .unwrap()
    }

    #[test]
    fn pattern_validation() {
        assert!(DefectPattern::new(
            IndexSet::new(3, vec![1]).unwrap(),
            BitVector::from_u64(3, 0b001),
        )
        .is_err());
        assert!(DefectPattern::new(
            IndexSet::new(3, vec![1]).unwrap(),
            BitVector::from_u64(2, 0b10),
        )
        .is_err());
        let p = pattern(3, &[2], 0b100);
        assert!(p.values().get(2));
        assert_eq!(pattern(4, &[0, 2], 0).values().weight(), 0);
    }

    #[test]
    fn encode_around_one_stuck_cell() {
        // k=2, b=1, cell 2 stuck at 1: the zero seed's matrix ignores the
        // last column, so it already solves any payload.
        let p = WozParams::new(2, 1).unwrap();
        let d = pattern(3, &[2], 0b100);
        let (alpha, y) = chunk_encode(&p, &d, &BitVector::from_u64(2, 0b01)).unwrap();
        assert_eq!(alpha.bits(), 0);
        assert_eq!(y, BitVector::from_u64(3, 0b101));
        assert_eq!(chunk_decode(&p, alpha, &y).unwrap(), BitVector::from_u64(2, 0b01));
    }

    #[test]
    fn fully_stuck_chunk_can_fail() {
        // k=1, b=1, both cells stuck at (1,0): the stored word is pinned to
        // (1,0) whose decode under every seed is 1, so payload 0 fails.
        let p = WozParams::new(1, 1).unwrap();
        let d = pattern(2, &[0, 1], 0b01);
        let err = chunk_encode(&p, &d, &BitVector::from_u64(1, 0)).unwrap_err();
        assert_eq!(err, Error::NoGoodMatrix);
        let (alpha, y) = chunk_encode(&p, &d, &BitVector::from_u64(1, 1)).unwrap();
        assert_eq!(alpha.bits(), 0);
        assert_eq!(y, BitVector::from_u64(2, 0b01));
    }

    #[test]
    fn small_stuck_sets_always_encode() {
        // |stuck| <= b guarantees success for every value and payload.
        let p = WozParams::new(3, 2).unwrap();
        for stuck_bits in 0u64..32 {
            if stuck_bits.count_ones() > 2 {
                continue;
            }
            let stuck = IndexSet::from_support(&BitVector::from_u64(5, stuck_bits));
            for values in 0u64..32 {
                if values & !stuck_bits != 0 {
                    continue;
                }
                let d = DefectPattern::new(stuck.clone(), BitVector::from_u64(5, values)).unwrap();
                for payload in 0u64..8 {
                    let x = BitVector::from_u64(3, payload);
                    let (alpha, y) = chunk_encode(&p, &d, &x).unwrap();
                    for &i in stuck.members() {
                        assert_eq!(y.get(i), d.values().get(i));
                    }
                    assert_eq!(chunk_decode(&p, alpha, &y).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn capacity_thresholds() {
        let p = WozParams::new(2, 1).unwrap();
        assert_eq!(defect_capacity(&p, Ratio::new(1, 3)).unwrap(), Ratio::new(2, 3));
        assert_eq!(defect_capacity(&p, Ratio::new(1, 4)).unwrap(), Ratio::new(2, 3));
        assert_eq!(defect_capacity(&p, Ratio::new(1, 2)).unwrap(), Ratio::from_integer(0));
        assert!(defect_capacity(&p, Ratio::new(3, 2)).is_err());
        let q = WozParams::new(4, 4).unwrap();
        assert_eq!(defect_capacity(&q, Ratio::new(1, 2)).unwrap(), Ratio::new(1, 2));
    }

    #[test]
    fn image_round_trip() {
        let p = WozParams::new(3, 2).unwrap();
        let d = pattern(5, &[1, 4], 0b10010);
        let payload = BitVector::from_u64(3, 0b110);
        let img = write_image(&p, &d, &payload).unwrap();
        assert_eq!(img.round(), 1);
        assert_eq!(img.scheme(), Scheme::Defect);
        assert!(img.cells().get(1) && img.cells().get(4));
        assert_eq!(read_image(&img).unwrap(), payload);
    }
}
