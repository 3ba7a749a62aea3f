//! The shared memory-image state: a cell array plus the scheme parameters
//! and round counter that give it meaning.
//!
//! Cells are one-way: every committed write must leave each cell at or
//! above its previous value, and bumps the round counter by one.

use core::fmt;

use crate::bits::BitVector;
use crate::error::Error;
use crate::ranking::binomial;
use crate::wom2::Wom2Params;
use crate::wom3::Wom3Params;
use crate::wozencraft::WozParams;
use crate::Result;

/// The five kinds of coded memory this crate writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Wom2,
    Wom3,
    Rs,
    LookupFree,
    Defect,
}

impl Scheme {
    /// Highest round an image of this scheme can reach.
    pub fn max_round(self) -> u8 {
        match self {
            Scheme::Wom2 => 2,
            Scheme::Wom3 => 3,
            Scheme::Rs => 2,
            Scheme::LookupFree => 2,
            Scheme::Defect => 1,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Wom2 => "wom2",
            Scheme::Wom3 => "wom3",
            Scheme::Rs => "rs",
            Scheme::LookupFree => "lookupfree",
            Scheme::Defect => "defect",
        })
    }
}

/// Scheme-specific parameters carried inside every image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeParams {
    Wom2(Wom2Params),
    Wom3(Wom3Params),
    Rs,
    /// Identified by subset size and the ensemble seed of its fixed matrix.
    LookupFree { m: usize, w: usize, seed: u64 },
    /// One codeword written around stuck cells with the recorded seed.
    Defect { shape: WozParams, seed: u64 },
}

impl SchemeParams {
    pub fn scheme(&self) -> Scheme {
        match self {
            SchemeParams::Wom2(_) => Scheme::Wom2,
            SchemeParams::Wom3(_) => Scheme::Wom3,
            SchemeParams::Rs => Scheme::Rs,
            SchemeParams::LookupFree { .. } => Scheme::LookupFree,
            SchemeParams::Defect { .. } => Scheme::Defect,
        }
    }

    /// Total number of cells an image with these parameters occupies.
    pub fn cell_count(&self) -> usize {
        match self {
            SchemeParams::Wom2(p) => p.cell_count(),
            SchemeParams::Wom3(p) => p.cell_count(),
            SchemeParams::Rs => 3,
            SchemeParams::LookupFree { m, w, .. } => {
                let tuples = binomial(*m, *w);
                usize::try_from(tuples * *m as u128).expect("validated at construction")
            }
            SchemeParams::Defect { shape, .. } => shape.word_len(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SchemeParams::Wom2(_) | SchemeParams::Wom3(_) | SchemeParams::Rs => Ok(()),
            SchemeParams::LookupFree { m, w, seed } => {
                let shape = crate::lookupfree::matrix_shape(*m, *w)?;
                if *seed >> shape.k() != 0 {
                    return Err(Error::Invalid("matrix seed exceeds the field degree"));
                }
                binomial(*m, *w)
                    .checked_mul(*m as u128)
                    .and_then(|c| usize::try_from(c).ok())
                    .ok_or(Error::Invalid("cell count overflows"))?;
                Ok(())
            }
            SchemeParams::Defect { shape, seed } => {
                if *seed >> shape.k() != 0 {
                    return Err(Error::Invalid("chunk seed exceeds the field degree"));
                }
                Ok(())
            }
        }
    }
}

/// A write-once cell array together with its interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemoryImage {
    params: SchemeParams,
    round: u8,
    cells: BitVector,
}

impl MemoryImage {
    /// A fresh all-zero image at round 0.
    pub fn blank(params: SchemeParams) -> Result<Self> {
        params.validate()?;
        let cells = BitVector::zeros(params.cell_count());
        Ok(MemoryImage { params, round: 0, cells })
    }

    /// Reassembles an image from stored state, validating that the cell
    /// count matches the parameters and the round is within the scheme's
    /// range.
    pub fn from_parts(params: SchemeParams, round: u8, cells: BitVector) -> Result<Self> {
        params.validate()?;
        if round > params.scheme().max_round() {
            return Err(Error::Invalid("round counter exceeds the scheme's final round"));
        }
        if cells.len() != params.cell_count() {
            return Err(Error::Dimension("cell count does not match the parameters"));
        }
        Ok(MemoryImage { params, round, cells })
    }

    pub fn scheme(&self) -> Scheme {
        self.params.scheme()
    }

    pub fn round(&self) -> u8 {
        self.round
    }

    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    pub fn cells(&self) -> &BitVector {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Checks the image is of `scheme` and currently at `round`.
    pub(crate) fn expect(&self, scheme: Scheme, round: u8) -> Result<()> {
        if self.scheme() != scheme {
            return Err(Error::Scheme { expected: scheme, found: self.scheme() });
        }
        if self.round != round {
            return Err(Error::Round { expected: round, found: self.round });
        }
        Ok(())
    }

    /// Replaces the cells with `new_cells` and advances the round.
    ///
    /// Errors with [`Error::WriteOnceViolation`] if any set cell would be
    /// cleared; the image is left untouched on any error.
    pub(crate) fn commit(&mut self, new_cells: BitVector) -> Result<()> {
        if new_cells.len() != self.cells.len() {
            return Err(Error::Dimension("cell count changed by write"));
        }
        if self.round >= self.scheme().max_round() {
            return Err(Error::Invalid("image is already at its final round"));
        }
        if !new_cells.dominates(&self.cells) {
            return Err(Error::WriteOnceViolation);
        }
        self.cells = new_cells;
        self.round += 1;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commit_enforces_monotone_cells() {
        let mut img = MemoryImage::blank(SchemeParams::Rs).unwrap();
        assert_eq!(img.round(), 0);
        img.commit(BitVector::from_u64(3, 0b010)).unwrap();
        assert_eq!(img.round(), 1);
        let err = img.commit(BitVector::from_u64(3, 0b001)).unwrap_err();
        assert_eq!(err, Error::WriteOnceViolation);
        assert_eq!(img.cells().to_u64(), 0b010);
        assert_eq!(img.round(), 1);
        img.commit(BitVector::from_u64(3, 0b011)).unwrap();
        let err = img.commit(BitVector::from_u64(3, 0b111)).unwrap_err();
        assert_eq!(err, Error::Invalid("image is already at its final round"));
    }

    #[test]
    fn from_parts_validates() {
        assert!(MemoryImage::from_parts(SchemeParams::Rs, 1, BitVector::zeros(3)).is_ok());
        assert!(MemoryImage::from_parts(SchemeParams::Rs, 3, BitVector::zeros(3)).is_err());
        assert!(MemoryImage::from_parts(SchemeParams::Rs, 1, BitVector::zeros(4)).is_err());
    }

    #[test]
    fn expectations() {
        let img = MemoryImage::blank(SchemeParams::Rs).unwrap();
        assert_eq!(
            img.expect(Scheme::Wom2, 0).unwrap_err(),
            Error::Scheme { expected: Scheme::Wom2, found: Scheme::Rs }
        );
        assert_eq!(img.expect(Scheme::Rs, 1).unwrap_err(), Error::Round { expected: 1, found: 0 });
        assert!(img.expect(Scheme::Rs, 0).is_ok());
    }
}
