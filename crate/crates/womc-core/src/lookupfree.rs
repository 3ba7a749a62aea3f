//! Two writes over constant-weight tuples without any decoding tables.
//!
//! The memory is one tuple of m cells per w-subset of {0..m-1}, kept in
//! colex order. Round 1 stores a permutation of the subsets (each tuple
//! holds one subset's characteristic vector). Round 2 distinguishes good
//! tuples — those whose untouched columns still span under a fixed
//! (m-w)×m matrix — from bad ones: every good tuple absorbs one value as
//! a codeword, every bad tuple is burned to all-ones. Readers recompute
//! everything from the matrix, so no per-tuple bookkeeping is stored.

use alloc::vec::Vec;

use crate::bits::{solve_constrained, BitMatrix, BitVector, IndexSet};
use crate::error::Error;
use crate::field::FieldElement;
use crate::image::{MemoryImage, Scheme, SchemeParams};
use crate::ranking::{binomial, log2_factorial, subset_rank, subset_unrank};
use crate::rate::{capacity2_curve, RateReport};
use crate::wozencraft::{ensemble_matrix, WozParams};
use crate::Result;

/// Cap on tuples × cells a single instance may occupy.
pub const DEFAULT_CELL_BUDGET: u64 = 10_000_000;

/// Shape of the classifying matrix for m-cell tuples of weight w:
/// m-w rows (so w must leave a majority), m columns.
pub fn matrix_shape(m: usize, w: usize) -> Result<WozParams> {
    if w == 0 || w >= m {
        return Err(Error::Invalid("tuple weight must be positive and below the tuple length"));
    }
    WozParams::new(m - w, w)
}

/// A classified instance: the matrix plus the goodness of every subset.
#[derive(Clone, Debug)]
pub struct LookupFreeCode {
    m: usize,
    w: usize,
    matrix: BitMatrix,
    seed: Option<u64>,
    good: BitVector,
    sigma_g: usize,
}

impl LookupFreeCode {
    /// Classifies all subsets under an explicit matrix, within the
    /// default budget. The matrix must be (m-w)×m with full row rank.
    pub fn build(m: usize, w: usize, matrix: BitMatrix) -> Result<Self> {
        Self::build_with_budget(m, w, matrix, DEFAULT_CELL_BUDGET)
    }

    pub fn build_with_budget(m: usize, w: usize, matrix: BitMatrix, budget: u64) -> Result<Self> {
        let shape = matrix_shape(m, w)?;
        if matrix.rows() != shape.k() || matrix.cols() != m {
            return Err(Error::Dimension("classifying matrix must be (m-w) x m"));
        }
        if matrix.rank() != shape.k() {
            return Err(Error::Invalid("classifying matrix must have full row rank"));
        }
        let tuples = binomial(m, w);
        let cells = tuples.saturating_mul(m as u128);
        if cells > budget as u128 {
            return Err(Error::Budget { cells: cells.min(u64::MAX as u128) as u64, limit: budget });
        }
        let sigma = tuples as usize;
        let mut good = BitVector::zeros(sigma);
        let mut sigma_g = 0;
        for rank in 0..sigma {
            let s = subset_unrank(rank as u128, m, w)?;
            if matrix.restrict_columns(&s.complement())?.rank() == shape.k() {
                good.set(rank, true);
                sigma_g += 1;
            }
        }
        Ok(LookupFreeCode { m, w, matrix, seed: None, good, sigma_g })
    }

    /// Classifies under the ensemble matrix for `seed`. Only instances
    /// built this way can be stored, since readers rebuild the matrix
    /// from the seed alone.
    pub fn from_seed(m: usize, w: usize, seed: u64) -> Result<Self> {
        let shape = matrix_shape(m, w)?;
        let alpha = FieldElement::new(shape.k(), seed)?;
        let mut code = Self::build(m, w, ensemble_matrix(&shape, alpha)?)?;
        code.seed = Some(seed);
        Ok(code)
    }

    /// Tries every seed and keeps the one with the most good subsets,
    /// smallest seed on ties.
    pub fn search_seed(m: usize, w: usize) -> Result<Self> {
        let shape = matrix_shape(m, w)?;
        let per_seed = binomial(m, w).saturating_mul(m as u128);
        let total = per_seed.saturating_mul(1u128 << shape.k());
        if total > DEFAULT_CELL_BUDGET as u128 {
            return Err(Error::Budget {
                cells: total.min(u64::MAX as u128) as u64,
                limit: DEFAULT_CELL_BUDGET,
            });
        }
        let mut best: Option<LookupFreeCode> = None;
        for seed in 0..1u64 << shape.k() {
            let code = Self::from_seed(m, w, seed)?;
            if best.as_ref().is_none_or(|b| code.sigma_g > b.sigma_g) {
                best = Some(code);
            }
        }
        Ok(best.unwrap())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Number of tuples, i.e. w-subsets of an m-set.
    pub fn sigma(&self) -> usize {
        self.good.len()
    }

    /// Number of good tuples.
    pub fn sigma_g(&self) -> usize {
        self.sigma_g
    }

    /// Goodness of the subset at a colex rank.
    pub fn is_good(&self, rank: usize) -> bool {
        self.good.get(rank)
    }

    pub fn good_flags(&self) -> &BitVector {
        &self.good
    }

    pub fn cell_count(&self) -> usize {
        self.sigma() * self.m
    }

    /// Payload values a good tuple can hold: everything but the marker.
    pub fn value_count(&self) -> u64 {
        (1u64 << (self.m - self.w)) - 1
    }

    /// The reserved syndrome of the all-ones tuple.
    pub fn marked_value(&self) -> BitVector {
        self.matrix.mul_vec(&BitVector::ones(self.m)).expect("matrix is m columns wide")
    }

    fn storable_params(&self) -> Result<SchemeParams> {
        let seed = self
            .seed
            .ok_or(Error::Invalid("only seeded instances can be stored in an image"))?;
        Ok(SchemeParams::LookupFree { m: self.m, w: self.w, seed })
    }

    fn matches_image(&self, img: &MemoryImage) -> Result<()> {
        match img.params() {
            SchemeParams::LookupFree { m, w, seed }
                if *m == self.m && *w == self.w && Some(*seed) == self.seed =>
            {
                Ok(())
            }
            _ => Err(Error::Invalid("instance does not match the image parameters")),
        }
    }

    /// Bits per cell over both rounds, against the two-write capacity at
    /// density w/m.
    pub fn rate(&self) -> RateReport {
        let round1 = log2_factorial(self.sigma());
        let round2 = self.sigma_g as f64 * libm::log2(self.value_count() as f64);
        let reference = capacity2_curve(self.w as f64 / self.m as f64);
        RateReport::new(
            Scheme::LookupFree,
            alloc::vec![round1, round2],
            self.cell_count() as u64,
            reference,
        )
    }
}

/// First write: stores the subset permutation `perm`, where `perm[i]` is
/// the colex rank of the subset placed on tuple slot i.
pub fn encode1(code: &LookupFreeCode, perm: &[usize]) -> Result<MemoryImage> {
    let params = code.storable_params()?;
    if perm.len() != code.sigma() {
        return Err(Error::Dimension("permutation must cover every tuple slot"));
    }
    let mut seen = alloc::vec![false; code.sigma()];
    let mut cells = BitVector::zeros(code.cell_count());
    for (i, &rank) in perm.iter().enumerate() {
        if rank >= code.sigma() || seen[rank] {
            return Err(Error::Invalid("slot assignment is not a permutation"));
        }
        seen[rank] = true;
        let s = subset_unrank(rank as u128, code.m(), code.w())?;
        cells.splice(i * code.m(), &s.characteristic());
    }
    let mut img = MemoryImage::blank(params)?;
    img.commit(cells)?;
    Ok(img)
}

fn slot_ranks(m: usize, w: usize, cells: &BitVector) -> Result<Vec<usize>> {
    let sigma = binomial(m, w) as usize;
    let mut seen = alloc::vec![false; sigma];
    let mut perm = Vec::with_capacity(sigma);
    for i in 0..sigma {
        let tuple = cells.slice(i * m..(i + 1) * m);
        if tuple.weight() != w {
            return Err(Error::Invalid("stored tuple does not have weight w"));
        }
        let rank = subset_rank(&IndexSet::from_support(&tuple)) as usize;
        if seen[rank] {
            return Err(Error::Invalid("stored tuples repeat a subset"));
        }
        seen[rank] = true;
        perm.push(rank);
    }
    Ok(perm)
}

/// Reads the subset permutation back from a round-1 image.
pub fn decode1(img: &MemoryImage) -> Result<Vec<usize>> {
    img.expect(Scheme::LookupFree, 1)?;
    let SchemeParams::LookupFree { m, w, .. } = img.params() else {
        unreachable!("scheme checked above");
    };
    slot_ranks(*m, *w, img.cells())
}

/// Second write: every good tuple absorbs the next value from `xs` as a
/// codeword extending its subset; every bad tuple is burned to all-ones.
pub fn encode2(code: &LookupFreeCode, img: &mut MemoryImage, xs: &[BitVector]) -> Result<()> {
    img.expect(Scheme::LookupFree, 1)?;
    code.matches_image(img)?;
    let perm = slot_ranks(code.m(), code.w(), img.cells())?;
    if xs.len() != code.sigma_g() {
        return Err(Error::Dimension("need exactly one value per good tuple"));
    }
    let marked = code.marked_value();
    for x in xs {
        if x.len() != code.m() - code.w() {
            return Err(Error::Dimension("values must have m - w bits"));
        }
        if *x == marked {
            return Err(Error::Invalid("value collides with the bad-tuple marker"));
        }
    }
    let m = code.m();
    let mut cells = img.cells().clone();
    let mut next = xs.iter();
    for (i, &rank) in perm.iter().enumerate() {
        if code.is_good(rank) {
            let x = next.next().expect("one value per good tuple");
            let s = IndexSet::from_support(&img.cells().slice(i * m..(i + 1) * m));
            let y = solve_constrained(code.matrix(), x, &s, &s.characteristic())?;
            cells.splice(i * m, &y);
        } else {
            cells.splice(i * m, &BitVector::ones(m));
        }
    }
    img.commit(cells)
}

/// Reads the round-2 values back, rebuilding the classification from the
/// stored parameters. Returns the values in tuple-slot order.
pub fn decode2(img: &MemoryImage) -> Result<Vec<BitVector>> {
    img.expect(Scheme::LookupFree, 2)?;
    let SchemeParams::LookupFree { m, w, seed } = img.params() else {
        unreachable!("scheme checked above");
    };
    let code = LookupFreeCode::from_seed(*m, *w, *seed)?;
    let mut xs = Vec::with_capacity(code.sigma_g());
    let ones = BitVector::ones(code.m());
    for i in 0..code.sigma() {
        let tuple = img.cells().slice(i * code.m()..(i + 1) * code.m());
        if tuple != ones {
            xs.push(code.matrix().mul_vec(&tuple)?);
        }
    }
    if xs.len() != code.sigma_g() {
        return Err(Error::Invalid("marked tuple count disagrees with the classification"));
    }
    Ok(xs)
}
