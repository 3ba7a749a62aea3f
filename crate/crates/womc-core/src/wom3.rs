//! Three writes: a quaternary word with a zero quota, then an
//! equidistributed quaternary word, then raw bits squeezed through
//! whatever freedom the first two writes left behind.
//!
//! The memory holds 4m triplets (12m cells), a few auxiliary cells whose
//! count depends on the variant, and a side region for the third write:
//! one skip bit per chunk of the triplet area plus seed slots.
//!
//! The variants differ in how the second word is massaged before it is
//! stored. `Basic` stores it as-is and insists the first word is exactly
//! one quarter zeros. `ImpI` stores it as-is under any zero quota.
//! `ImpII` renames one scarce symbol to 0 first (2 aux cells). `ImpIII`
//! applies the best of the 24 symbol relabelings that send that scarce
//! symbol to 0 (5 aux cells).

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::bits::{BitVector, IndexSet};
use crate::error::Error;
use crate::field::FieldElement;
use crate::image::{MemoryImage, Scheme, SchemeParams};
use crate::ranking::perm_unrank;
use crate::rivest_shamir::{self, Symbol, Triplet};
use crate::stuckat::{chunk_decode, chunk_encode, DefectPattern};
use crate::wozencraft::{find_good_matrix, WozParams};
use crate::Result;

/// How the second write preprocesses its word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Basic,
    ImpI,
    ImpII,
    ImpIII,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Basic, Variant::ImpI, Variant::ImpII, Variant::ImpIII];

    /// Auxiliary cells the variant needs beside the triplets.
    pub fn aux_len(self) -> usize {
        match self {
            Variant::Basic | Variant::ImpI => 0,
            Variant::ImpII => 2,
            Variant::ImpIII => 5,
        }
    }
}

/// Geometry of a three-write memory: word length 4m, zero quota z for the
/// first word, the transform variant, and the chunk shape for round 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wom3Params {
    m: usize,
    z: usize,
    variant: Variant,
    chunk: WozParams,
}

impl Wom3Params {
    /// Errors when `m` is zero, `z` exceeds the word length, or the basic
    /// variant is asked for a quota other than exactly m zeros.
    pub fn new(m: usize, z: usize, variant: Variant, chunk: WozParams) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("word length must be positive"));
        }
        if z > 4 * m {
            return Err(Error::Invalid("zero quota cannot exceed the word length"));
        }
        if variant == Variant::Basic && z != m {
            return Err(Error::Invalid("the basic variant needs exactly one quarter zeros"));
        }
        Ok(Wom3Params { m, z, variant, chunk })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Minimum number of zero symbols in the first word.
    pub fn z(&self) -> usize {
        self.z
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn chunk(&self) -> &WozParams {
        &self.chunk
    }

    /// Symbols per word.
    pub fn symbol_count(&self) -> usize {
        4 * self.m
    }

    /// Cells holding the triplets.
    pub fn main_len(&self) -> usize {
        12 * self.m
    }

    /// Whole chunks that fit into the triplet area.
    pub fn chunk_count(&self) -> usize {
        self.main_len() / self.chunk.word_len()
    }

    fn aux_offset(&self) -> usize {
        self.main_len()
    }

    fn side_offset(&self) -> usize {
        self.main_len() + self.variant.aux_len()
    }

    pub fn cell_count(&self) -> usize {
        self.side_offset() + self.chunk_count() * (1 + self.chunk.k())
    }

    fn chunk_range(&self, c: usize) -> core::ops::Range<usize> {
        let n = self.chunk.word_len();
        c * n..(c + 1) * n
    }
}

fn params_of(img: &MemoryImage) -> Result<Wom3Params> {
    match img.params() {
        SchemeParams::Wom3(p) => Ok(*p),
        _ => Err(Error::Scheme { expected: Scheme::Wom3, found: img.scheme() }),
    }
}

fn triplet_at(cells: &BitVector, i: usize) -> Result<Triplet> {
    Triplet::new(cells.slice(3 * i..3 * i + 3).to_u64() as u8)
}

fn set_triplet(cells: &mut BitVector, i: usize, t: Triplet) {
    cells.splice(3 * i, &BitVector::from_u64(3, t.bits() as u64));
}

fn read_word(p: &Wom3Params, cells: &BitVector) -> Result<Vec<Symbol>> {
    (0..p.symbol_count())
        .map(|i| Ok(rivest_shamir::decode(triplet_at(cells, i)?)))
        .collect()
}

/// First write: stores `w1`, which must carry at least z zero symbols.
pub fn write1(p: &Wom3Params, w1: &[Symbol]) -> Result<MemoryImage> {
    if w1.len() != p.symbol_count() {
        return Err(Error::Dimension("first word must have 4m symbols"));
    }
    let zeros = w1.iter().filter(|s| s.value() == 0).count();
    if zeros < p.z() {
        return Err(Error::Invalid("first word is short of its zero quota"));
    }
    let mut cells = BitVector::zeros(p.cell_count());
    for (i, &s) in w1.iter().enumerate() {
        set_triplet(&mut cells, i, rivest_shamir::encode1(s));
    }
    let mut img = MemoryImage::blank(SchemeParams::Wom3(*p))?;
    img.commit(cells)?;
    Ok(img)
}

/// Reads the first word back from a round-1 image.
pub fn read1(img: &MemoryImage) -> Result<Vec<Symbol>> {
    img.expect(Scheme::Wom3, 1)?;
    read_word(&params_of(img)?, img.cells())
}

fn scarcest_symbol(w1: &[Symbol], w2: &[Symbol]) -> Symbol {
    let mut counts = [0usize; 4];
    for (a, b) in w1.iter().zip(w2) {
        if a.value() != 0 {
            counts[b.value() as usize] += 1;
        }
    }
    let v = (0..4u8).min_by_key(|&s| counts[s as usize]).unwrap();
    Symbol::new(v).unwrap()
}

fn swap_with_zero(s: Symbol, alpha: Symbol) -> Symbol {
    if s == alpha {
        Symbol::new(0).unwrap()
    } else if s.value() == 0 {
        alpha
    } else {
        s
    }
}

/// Picks, among the relabelings sending `alpha` to 0, one that agrees with
/// the stored word on as many occupied positions as possible; ties go to
/// the smallest rank. Returns (rank, relabeling, agreement count).
fn best_relabeling(w1: &[Symbol], w2: &[Symbol], alpha: Symbol) -> (usize, Vec<usize>, usize) {
    let mut best: Option<(usize, Vec<usize>, usize)> = None;
    for rank in 0..24usize {
        let perm = perm_unrank(&BigUint::from(rank), 4).unwrap();
        if perm[alpha.value() as usize] != 0 {
            continue;
        }
        let agree = w1
            .iter()
            .zip(w2)
            .filter(|(a, b)| a.value() != 0 && perm[b.value() as usize] == a.value() as usize)
            .count();
        if best.as_ref().is_none_or(|(_, _, top)| agree > *top) {
            best = Some((rank, perm, agree));
        }
    }
    best.unwrap()
}

fn transform(p: &Wom3Params, w1: &[Symbol], w2: &[Symbol]) -> (Vec<Symbol>, BitVector) {
    match p.variant() {
        Variant::Basic | Variant::ImpI => (w2.to_vec(), BitVector::zeros(0)),
        Variant::ImpII => {
            let alpha = scarcest_symbol(w1, w2);
            let u = w2.iter().map(|&s| swap_with_zero(s, alpha)).collect();
            (u, BitVector::from_u64(2, alpha.value() as u64))
        }
        Variant::ImpIII => {
            let alpha = scarcest_symbol(w1, w2);
            let (rank, perm, agree) = best_relabeling(w1, w2, alpha);
            let occupied_alpha =
                w1.iter().zip(w2).filter(|&(a, b)| a.value() != 0 && *b == alpha).count();
            let contested =
                w1.iter().zip(w2).filter(|&(a, b)| a.value() != 0 && *b != alpha).count();
            assert!(
                4 * occupied_alpha + p.z() <= 4 * p.m(),
                "relabeled word puts too many zeros on occupied positions"
            );
            assert!(
                agree >= contested.div_ceil(3),
                "relabeling agrees on fewer than a third of contested positions"
            );
            let u = w2
                .iter()
                .map(|&s| Symbol::new(perm[s.value() as usize] as u8).unwrap())
                .collect();
            (u, BitVector::from_u64(5, rank as u64))
        }
    }
}

fn assert_weight_bound(p: &Wom3Params, weight: usize) {
    let (m, z) = (p.m(), p.z());
    match p.variant() {
        Variant::Basic => assert!(weight <= 8 * m, "basic write exceeded 8m raised cells"),
        Variant::ImpI => assert!(weight + z <= 9 * m, "write exceeded 9m - z raised cells"),
        Variant::ImpII => {
            assert!(2 * weight + 3 * z <= 18 * m, "write exceeded 9m - 3z/2 raised cells")
        }
        Variant::ImpIII => {
            assert!(4 * weight + 5 * z <= 32 * m, "write exceeded 8m - 5z/4 raised cells")
        }
    }
}

/// Second write: stores an equidistributed word (each symbol exactly m
/// times) over the first one, raising as few cells as the variant allows.
pub fn write2(img: &mut MemoryImage, w2: &[Symbol]) -> Result<()> {
    img.expect(Scheme::Wom3, 1)?;
    let p = params_of(img)?;
    if w2.len() != p.symbol_count() {
        return Err(Error::Dimension("second word must have 4m symbols"));
    }
    let mut counts = [0usize; 4];
    for s in w2 {
        counts[s.value() as usize] += 1;
    }
    if counts.iter().any(|&c| c != p.m()) {
        return Err(Error::Invalid("second word must use every symbol exactly m times"));
    }
    let w1 = read_word(&p, img.cells())?;
    let (u, aux) = transform(&p, &w1, w2);
    let mut cells = img.cells().clone();
    let mut weight = 0usize;
    for (i, &s) in u.iter().enumerate() {
        let next = rivest_shamir::encode2(triplet_at(&cells, i)?, s)?;
        weight += next.weight() as usize;
        set_triplet(&mut cells, i, next);
    }
    assert_weight_bound(&p, weight);
    cells.splice(p.aux_offset(), &aux);
    img.commit(cells)
}

/// Reads the second word back from a round-2 image.
pub fn read2(img: &MemoryImage) -> Result<Vec<Symbol>> {
    img.expect(Scheme::Wom3, 2)?;
    let p = params_of(img)?;
    let u = read_word(&p, img.cells())?;
    match p.variant() {
        Variant::Basic | Variant::ImpI => Ok(u),
        Variant::ImpII => {
            let aux = img.cells().slice(p.aux_offset()..p.aux_offset() + 2);
            let alpha = Symbol::new(aux.to_u64() as u8)?;
            Ok(u.iter().map(|&s| swap_with_zero(s, alpha)).collect())
        }
        Variant::ImpIII => {
            let aux = img.cells().slice(p.aux_offset()..p.aux_offset() + 5);
            let rank = aux.to_u64();
            if rank >= 24 {
                return Err(Error::Invalid("stored relabeling rank out of range"));
            }
            let perm = perm_unrank(&BigUint::from(rank), 4)?;
            let mut inverse = [0usize; 4];
            for (i, &v) in perm.iter().enumerate() {
                inverse[v] = i;
            }
            Ok(u.iter().map(|&s| Symbol::new(inverse[s.value() as usize] as u8).unwrap()).collect())
        }
    }
}

fn chunk_is_writable(p: &Wom3Params, cells: &BitVector, c: usize) -> Result<bool> {
    let r = p.chunk_range(c);
    let stuck = IndexSet::from_support(&cells.slice(r.start..r.end));
    match find_good_matrix(p.chunk(), core::slice::from_ref(&stuck)) {
        Ok(_) => Ok(true),
        Err(Error::NoGoodMatrix) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Bits the third write is guaranteed to fit into a round-2 image: k per
/// chunk whose raised cells still leave a workable matrix.
pub fn capacity3(img: &MemoryImage) -> Result<usize> {
    img.expect(Scheme::Wom3, 2)?;
    let p = params_of(img)?;
    let mut good = 0;
    for c in 0..p.chunk_count() {
        if chunk_is_writable(&p, img.cells(), c)? {
            good += 1;
        }
    }
    Ok(good * p.chunk().k())
}

/// Third write: spreads `payload` over the writable chunks, marking the
/// skipped ones in the side region and recording one seed per used chunk.
/// Errors (leaving the image untouched) when the payload exceeds
/// [`capacity3`]. Returns the number of bits written.
pub fn write3(img: &mut MemoryImage, payload: &BitVector) -> Result<usize> {
    img.expect(Scheme::Wom3, 2)?;
    let p = params_of(img)?;
    let k = p.chunk().k();
    let bitmap_base = p.side_offset();
    let seeds_base = bitmap_base + p.chunk_count();
    let mut cells = img.cells().clone();
    let mut cursor = 0usize;
    let mut used = 0usize;
    for c in 0..p.chunk_count() {
        if cursor < payload.len() && chunk_is_writable(&p, img.cells(), c)? {
            let r = p.chunk_range(c);
            let stuck = IndexSet::from_support(&img.cells().slice(r.start..r.end));
            let take = (payload.len() - cursor).min(k);
            let mut x = BitVector::zeros(k);
            x.splice(0, &payload.slice(cursor..cursor + take));
            let (alpha, y) = chunk_encode(p.chunk(), &DefectPattern::stuck_at_one(stuck), &x)?;
            cells.splice(r.start, &y);
            cells.splice(seeds_base + used * k, &BitVector::from_u64(k, alpha.bits()));
            cursor += take;
            used += 1;
        } else {
            cells.set(bitmap_base + c, true);
        }
    }
    if cursor < payload.len() {
        return Err(Error::Invalid("payload exceeds the round-3 capacity"));
    }
    img.commit(cells)?;
    Ok(payload.len())
}

/// Reads back everything the third write stored: k bits per used chunk,
/// so a payload that was not a multiple of k comes back zero-padded.
pub fn read3(img: &MemoryImage) -> Result<BitVector> {
    img.expect(Scheme::Wom3, 3)?;
    let p = params_of(img)?;
    let k = p.chunk().k();
    let bitmap_base = p.side_offset();
    let seeds_base = bitmap_base + p.chunk_count();
    let cells = img.cells();
    let used: Vec<usize> = (0..p.chunk_count()).filter(|&c| !cells.get(bitmap_base + c)).collect();
    let mut out = BitVector::zeros(used.len() * k);
    for (j, &c) in used.iter().enumerate() {
        let seed = cells.slice(seeds_base + j * k..seeds_base + (j + 1) * k);
        let alpha = FieldElement::new(k, seed.to_u64())?;
        let r = p.chunk_range(c);
        out.splice(j * k, &chunk_decode(p.chunk(), alpha, &cells.slice(r.start..r.end))?);
    }
    Ok(out)
}
