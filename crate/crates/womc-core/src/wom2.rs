//! Two writes into the same cells: subsets first, then arbitrary bits.
//!
//! The memory is split into t blocks of k+b cells plus one k-cell seed slot
//! per group of g blocks. Round 1 stores a small subset in each block as its
//! characteristic vector. Round 2 picks, per group, one matrix that is good
//! for every subset in the group, replaces each block with a codeword of the
//! payload that dominates the subset already written, and records the seed.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{solve_constrained, BitVector, IndexSet};
use crate::error::Error;
use crate::field::FieldElement;
use crate::image::{MemoryImage, Scheme, SchemeParams};
use crate::ranking::binomial;
use crate::rate::{capacity2_curve, RateReport};
use crate::wozencraft::{ensemble_matrix, find_good_matrix, guarantee_holds, WozParams};
use crate::Result;

/// Geometry of a two-write memory: block shape, block count, group size,
/// and the largest subset weight round 1 may store.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wom2Params {
    woz: WozParams,
    t: usize,
    g: usize,
    smax: usize,
}

impl Wom2Params {
    /// Errors unless `g` divides `t`, both are positive, and
    /// `smax <= k + b`.
    pub fn new(woz: WozParams, t: usize, g: usize, smax: usize) -> Result<Self> {
        if t == 0 || g == 0 {
            return Err(Error::Invalid("block count and group size must be positive"));
        }
        if !t.is_multiple_of(g) {
            return Err(Error::Invalid("group size must divide the block count"));
        }
        if smax > woz.word_len() {
            return Err(Error::Invalid("subset weight cap exceeds the block length"));
        }
        Ok(Wom2Params { woz, t, g, smax })
    }

    pub fn woz(&self) -> &WozParams {
        &self.woz
    }

    pub fn blocks(&self) -> usize {
        self.t
    }

    pub fn group_size(&self) -> usize {
        self.g
    }

    pub fn groups(&self) -> usize {
        self.t / self.g
    }

    pub fn smax(&self) -> usize {
        self.smax
    }

    /// Total cells: t blocks of k+b plus one k-cell seed per group.
    pub fn cell_count(&self) -> usize {
        self.t * self.woz.word_len() + self.groups() * self.woz.k()
    }

    /// Payload bits accepted by the second write.
    pub fn payload_len(&self) -> usize {
        self.t * self.woz.k()
    }

    /// True when every possible round-1 content is provably writable over:
    /// g·(2^smax − 1) < 2^b.
    pub fn guaranteed(&self) -> bool {
        let per_set = (1u128 << self.smax) - 1;
        (self.g as u128) * per_set < (1u128 << self.woz.b())
    }

    fn block_range(&self, j: usize) -> core::ops::Range<usize> {
        let n = self.woz.word_len();
        j * n..(j + 1) * n
    }

    fn seed_range(&self, i: usize) -> core::ops::Range<usize> {
        let base = self.t * self.woz.word_len();
        let k = self.woz.k();
        base + i * k..base + (i + 1) * k
    }
}

fn params_of(img: &MemoryImage) -> Result<Wom2Params> {
    match img.params() {
        SchemeParams::Wom2(p) => Ok(*p),
        _ => Err(Error::Scheme { expected: Scheme::Wom2, found: img.scheme() }),
    }
}

/// First write: stores one subset per block, seed slots left clear.
pub fn encode1(p: &Wom2Params, subsets: &[IndexSet]) -> Result<MemoryImage> {
    if subsets.len() != p.blocks() {
        return Err(Error::Dimension("need exactly one subset per block"));
    }
    let mut cells = BitVector::zeros(p.cell_count());
    for (j, s) in subsets.iter().enumerate() {
        if s.universe() != p.woz().word_len() {
            return Err(Error::Dimension("subset universe must match the block length"));
        }
        if s.len() > p.smax() {
            return Err(Error::Invalid("subset exceeds the round-1 weight cap"));
        }
        cells.splice(p.block_range(j).start, &s.characteristic());
    }
    let mut img = MemoryImage::blank(SchemeParams::Wom2(*p))?;
    img.commit(cells)?;
    Ok(img)
}

/// Reads the stored subsets back from a round-1 image.
pub fn decode1(img: &MemoryImage) -> Result<Vec<IndexSet>> {
    img.expect(Scheme::Wom2, 1)?;
    let p = params_of(img)?;
    read_subsets(&p, img.cells())
}

fn read_subsets(p: &Wom2Params, cells: &BitVector) -> Result<Vec<IndexSet>> {
    let mut subsets = Vec::with_capacity(p.blocks());
    for j in 0..p.blocks() {
        let r = p.block_range(j);
        let block = cells.slice(r.start..r.end);
        if block.weight() > p.smax() {
            return Err(Error::Invalid("stored block exceeds the round-1 weight cap"));
        }
        subsets.push(IndexSet::from_support(&block));
    }
    Ok(subsets)
}

/// Second write: overwrites every block with a codeword of its payload
/// slice and fills in the group seeds. The image is untouched on error.
pub fn encode2(img: &mut MemoryImage, payload: &BitVector) -> Result<()> {
    img.expect(Scheme::Wom2, 1)?;
    let p = params_of(img)?;
    if payload.len() != p.payload_len() {
        return Err(Error::Dimension("payload must hold k bits per block"));
    }
    let subsets = read_subsets(&p, img.cells())?;
    let k = p.woz().k();
    let mut cells = img.cells().clone();
    for i in 0..p.groups() {
        let group = &subsets[i * p.group_size()..(i + 1) * p.group_size()];
        let alpha = find_good_matrix(p.woz(), group)?;
        let a = ensemble_matrix(p.woz(), alpha)?;
        for (off, s) in group.iter().enumerate() {
            let j = i * p.group_size() + off;
            let x = payload.slice(j * k..(j + 1) * k);
            let y = solve_constrained(&a, &x, s, &s.characteristic())?;
            cells.splice(p.block_range(j).start, &y);
        }
        cells.splice(p.seed_range(i).start, &BitVector::from_u64(k, alpha.bits()));
    }
    img.commit(cells)
}

/// Recovers the round-2 payload from codewords and group seeds.
pub fn decode2(img: &MemoryImage) -> Result<BitVector> {
    img.expect(Scheme::Wom2, 2)?;
    let p = params_of(img)?;
    let k = p.woz().k();
    let mut payload = BitVector::zeros(p.payload_len());
    for i in 0..p.groups() {
        let seed = img.cells().slice(p.seed_range(i).start..p.seed_range(i).end);
        let alpha = FieldElement::new(k, seed.to_u64())?;
        let a = ensemble_matrix(p.woz(), alpha)?;
        for off in 0..p.group_size() {
            let j = i * p.group_size() + off;
            let r = p.block_range(j);
            let x = a.mul_vec(&img.cells().slice(r.start..r.end))?;
            payload.splice(j * k, &x);
        }
    }
    Ok(payload)
}

/// True when [`encode2`] provably succeeds for every legal round-1 state.
pub fn guaranteed(p: &Wom2Params) -> Result<bool> {
    let sample = vec![p.smax(); p.group_size()];
    let by_sets = guarantee_holds_for_weights(p.woz(), &sample)?;
    debug_assert_eq!(by_sets, p.guaranteed());
    Ok(by_sets)
}

fn guarantee_holds_for_weights(woz: &WozParams, weights: &[usize]) -> Result<bool> {
    let sets: Vec<IndexSet> = weights
        .iter()
        .map(|&w| IndexSet::new(woz.word_len(), (0..w).collect()))
        .collect::<Result<_>>()?;
    guarantee_holds(woz, &sets)
}

/// Bits conveyed per cell across both writes, compared against the
/// two-write capacity at the matching round-1 density.
pub fn rate(p: &Wom2Params) -> RateReport {
    let n = p.woz().word_len();
    let messages1: u128 = (0..=p.smax()).map(|j| binomial(n, j)).sum();
    let round1 = p.blocks() as f64 * libm::log2(messages1 as f64);
    let round2 = p.payload_len() as f64;
    let reference = capacity2_curve(p.smax() as f64 / n as f64);
    RateReport::new(Scheme::Wom2, vec![round1, round2], p.cell_count() as u64, reference)
}
