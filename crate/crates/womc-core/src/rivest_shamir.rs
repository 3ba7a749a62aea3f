//! Two writes of a four-valued symbol into three binary cells.
//!
//! Each symbol has a light representative (weight 0 or 1) used on the first
//! write and a heavy one (weight 2 or 3, its complement) available for the
//! second. A triplet decodes through the light column while its weight is
//! at most 1 and through the heavy column afterwards. The second-write rule
//! is not hand-coded: a table is searched at compile time for the
//! minimum-weight triplet that decodes correctly and only raises cells.
//!
//! Triplets are stored as three bits with bit i = cell i, so the display
//! form prints cell 0 first.

use crate::bits::BitVector;
use crate::error::Error;
use crate::image::{MemoryImage, Scheme, SchemeParams};
use crate::Result;

/// Light representatives by symbol: 000, 001, 010, 100 (cell 0 first).
const LIGHT: [u8; 4] = [0b000, 0b100, 0b010, 0b001];

/// A four-valued message symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u8);

impl Symbol {
    /// Errors unless `value < 4`.
    pub fn new(value: u8) -> Result<Self> {
        if value >= 4 {
            return Err(Error::Invalid("symbol must be 0..=3"));
        }
        Ok(Symbol(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Symbol> {
        (0..4).map(Symbol)
    }
}

/// Three write-once cells addressed as bits 0..3 of a byte.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triplet(u8);

impl Triplet {
    /// Errors unless `bits < 8`.
    pub fn new(bits: u8) -> Result<Self> {
        if bits >= 8 {
            return Err(Error::Invalid("triplet must fit in three bits"));
        }
        Ok(Triplet(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// True when every set cell of `other` is also set here.
    pub fn dominates(self, other: Triplet) -> bool {
        other.0 & !self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = Triplet> {
        (0..8).map(Triplet)
    }
}

/// The image of a fresh symbol: its light representative.
pub fn encode1(s: Symbol) -> Triplet {
    Triplet(LIGHT[s.0 as usize])
}

/// The symbol a triplet currently holds: read through the light column at
/// weight 0 or 1, through the heavy column at weight 2 or 3.
pub fn decode(t: Triplet) -> Symbol {
    let key = if t.weight() <= 1 { t.0 } else { !t.0 & 0b111 };
    Symbol(LIGHT.iter().position(|&l| l == key).expect("light column covers weights 0 and 1") as u8)
}

const fn second_write_table() -> [[u8; 4]; 8] {
    let mut table = [[0u8; 4]; 8];
    let mut state = 0usize;
    while state < 8 {
        let mut sym = 0usize;
        while sym < 4 {
            // Minimum-weight candidate that decodes to `sym` and only
            // raises cells; 8 marks "no legal write".
            let mut best = 8u8;
            let mut cand = 0u8;
            while cand < 8 {
                let weight = cand.count_ones();
                let decodes = if weight <= 1 {
                    LIGHT[sym] == cand
                } else {
                    LIGHT[sym] == !cand & 0b111
                };
                if decodes
                    && (state as u8) & !cand == 0
                    && (best == 8 || weight < best.count_ones())
                {
                    best = cand;
                }
                cand += 1;
            }
            table[state][sym] = best;
            sym += 1;
        }
        state += 1;
    }
    table
}

/// Second-write rule: entry `[state][symbol]` is the replacement triplet,
/// or 8 where no dominating triplet decodes to the symbol.
static SECOND_WRITE: [[u8; 4]; 8] = second_write_table();

/// Rewrites a triplet in place so that it decodes to `s`, raising as few
/// cells as possible.
///
/// Errors when no triplet above the current one decodes to `s`; this never
/// happens from a weight 0 or 1 state.
pub fn encode2(t: Triplet, s: Symbol) -> Result<Triplet> {
    let next = SECOND_WRITE[t.0 as usize][s.0 as usize];
    if next == 8 {
        return Err(Error::NoSolution);
    }
    Ok(Triplet(next))
}

fn triplet_cells(t: Triplet) -> BitVector {
    BitVector::from_u64(3, t.0 as u64)
}

fn cells_triplet(cells: &BitVector) -> Triplet {
    Triplet(cells.to_u64() as u8)
}

/// First write of `s` into a fresh three-cell image.
pub fn write1(s: Symbol) -> Result<MemoryImage> {
    let mut img = MemoryImage::blank(SchemeParams::Rs)?;
    img.commit(triplet_cells(encode1(s)))?;
    Ok(img)
}

/// Second write of `s` into a round-1 image.
pub fn write2(img: &mut MemoryImage, s: Symbol) -> Result<()> {
    img.expect(Scheme::Rs, 1)?;
    let next = encode2(cells_triplet(img.cells()), s)?;
    img.commit(triplet_cells(next))
}

/// The symbol an image currently holds (round 1 or 2).
pub fn read(img: &MemoryImage) -> Result<Symbol> {
    if img.scheme() != Scheme::Rs {
        return Err(Error::Scheme { expected: Scheme::Rs, found: img.scheme() });
    }
    if img.round() == 0 {
        return Err(Error::Round { expected: 1, found: 0 });
    }
    Ok(decode(cells_triplet(img.cells())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Triplet {
        // Cell 0 is the leftmost character.
        let bits = s
            .bytes()
            .enumerate()
            .fold(0u8, |acc, (i, c)| acc | (((c == b'1') as u8) << i));
        Triplet::new(bits).unwrap()
    }

    #[test]
    fn first_write_forms() {
        assert_eq!(encode1(Symbol::new(0).unwrap()), t("000"));
        assert_eq!(encode1(Symbol::new(1).unwrap()), t("001"));
        assert_eq!(encode1(Symbol::new(2).unwrap()), t("010"));
        assert_eq!(encode1(Symbol::new(3).unwrap()), t("100"));
    }

    #[test]
    fn decode_both_columns() {
        for s in Symbol::all() {
            let light = encode1(s);
            assert_eq!(decode(light), s);
            let heavy = Triplet::new(!light.bits() & 0b111).unwrap();
            assert_eq!(decode(heavy), s);
        }
    }

    #[test]
    fn worked_second_writes() {
        assert_eq!(encode2(t("010"), Symbol::new(1).unwrap()).unwrap(), t("110"));
        assert_eq!(encode2(t("000"), Symbol::new(1).unwrap()).unwrap(), t("001"));
        assert_eq!(encode2(t("001"), Symbol::new(0).unwrap()).unwrap(), t("111"));
    }

    #[test]
    fn second_write_exhaustive_from_legal_states() {
        for state in Triplet::all().filter(|t| t.weight() <= 1) {
            for s in Symbol::all() {
                let next = encode2(state, s).unwrap();
                assert_eq!(decode(next), s);
                assert!(next.dominates(state));
                // Minimality: no lighter dominating triplet decodes to s.
                for cand in Triplet::all() {
                    if cand.dominates(state) && decode(cand) == s {
                        assert!(next.weight() <= cand.weight());
                    }
                }
                // Unchanged symbol costs nothing extra.
                if decode(state) == s {
                    assert_eq!(next, state);
                }
            }
        }
    }

    #[test]
    fn image_round_trip() {
        for s1 in Symbol::all() {
            for s2 in Symbol::all() {
                let mut img = write1(s1).unwrap();
                assert_eq!(read(&img).unwrap(), s1);
                write2(&mut img, s2).unwrap();
                assert_eq!(read(&img).unwrap(), s2);
                assert_eq!(img.round(), 2);
            }
        }
    }
}
