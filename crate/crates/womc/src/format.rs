//! The binary image file format.
//!
//! A file is, in order: the magic `WOMC`, a version byte, a scheme byte, the
//! round counter, a parameter block prefixed by its 16-bit length, the cell
//! count as 32 bits, and the cells packed eight per byte with cell `c` at
//! byte `c / 8`, bit `c % 8`, least significant bit first. Multi-byte
//! integers are little-endian. Loading validates every field and rejects
//! trailing bytes or set padding bits, so saving a loaded image reproduces
//! the input byte for byte.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use womc_core::image::SchemeParams;
use womc_core::wom2::Wom2Params;
use womc_core::wom3::{Variant, Wom3Params};
use womc_core::{BitVector, Error, MemoryImage, Scheme, WozParams};

/// First four bytes of every image file.
pub const MAGIC: [u8; 4] = *b"WOMC";

/// The format version this build reads and writes.
pub const VERSION: u8 = 1;

/// Failures while reading or writing image files.
#[derive(Debug)]
pub enum FormatError {
    BadMagic,
    BadVersion(u8),
    TruncatedFile,
    TrailingBytes,
    ParamOutOfRange(&'static str),
    /// Structurally sound bytes describing an inconsistent image.
    Invalid(Error),
    Io(io::Error),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::BadMagic => write!(f, "not an image file (bad magic)"),
            FormatError::BadVersion(v) => write!(f, "unsupported format version {v}"),
            FormatError::TruncatedFile => write!(f, "file ends before the image does"),
            FormatError::TrailingBytes => write!(f, "file continues past the image"),
            FormatError::ParamOutOfRange(what) => write!(f, "parameter out of range: {what}"),
            FormatError::Invalid(e) => write!(f, "inconsistent image: {e}"),
            FormatError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<Error> for FormatError {
    fn from(e: Error) -> Self {
        FormatError::Invalid(e)
    }
}

impl From<io::Error> for FormatError {
    fn from(e: io::Error) -> Self {
        FormatError::Io(e)
    }
}

fn scheme_byte(s: Scheme) -> u8 {
    match s {
        Scheme::Wom2 => 1,
        Scheme::Wom3 => 2,
        Scheme::Rs => 3,
        Scheme::LookupFree => 4,
        Scheme::Defect => 5,
    }
}

fn scheme_from_byte(b: u8) -> Result<Scheme, FormatError> {
    Ok(match b {
        1 => Scheme::Wom2,
        2 => Scheme::Wom3,
        3 => Scheme::Rs,
        4 => Scheme::LookupFree,
        5 => Scheme::Defect,
        _ => return Err(FormatError::ParamOutOfRange("scheme byte")),
    })
}

fn variant_byte(v: Variant) -> u8 {
    match v {
        Variant::Basic => 0,
        Variant::ImpI => 1,
        Variant::ImpII => 2,
        Variant::ImpIII => 3,
    }
}

fn variant_from_byte(b: u8) -> Result<Variant, FormatError> {
    Ok(match b {
        0 => Variant::Basic,
        1 => Variant::ImpI,
        2 => Variant::ImpII,
        3 => Variant::ImpIII,
        _ => return Err(FormatError::ParamOutOfRange("variant byte")),
    })
}

fn u32_field(v: usize, what: &'static str) -> Result<u32, FormatError> {
    u32::try_from(v).map_err(|_| FormatError::ParamOutOfRange(what))
}

fn encode_params(params: &SchemeParams, out: &mut Vec<u8>) -> Result<(), FormatError> {
    match params {
        SchemeParams::Wom2(p) => {
            out.push(p.woz().k() as u8);
            out.push(p.woz().b() as u8);
            out.extend_from_slice(&u32_field(p.blocks(), "block count")?.to_le_bytes());
            out.extend_from_slice(&u32_field(p.group_size(), "group size")?.to_le_bytes());
            out.push(p.smax() as u8);
        }
        SchemeParams::Wom3(p) => {
            out.extend_from_slice(&u32_field(p.m(), "word length")?.to_le_bytes());
            out.extend_from_slice(&u32_field(p.z(), "zero quota")?.to_le_bytes());
            out.push(variant_byte(p.variant()));
            out.push(p.chunk().k() as u8);
            out.push(p.chunk().b() as u8);
        }
        SchemeParams::Rs => {}
        SchemeParams::LookupFree { m, w, seed } => {
            out.extend_from_slice(&u32_field(*m, "tuple length")?.to_le_bytes());
            out.extend_from_slice(&u32_field(*w, "subset size")?.to_le_bytes());
            out.extend_from_slice(&seed.to_le_bytes());
        }
        SchemeParams::Defect { shape, seed } => {
            out.push(shape.k() as u8);
            out.push(shape.b() as u8);
            out.extend_from_slice(&seed.to_le_bytes());
        }
    }
    Ok(())
}

struct Cursor<'a> {
    bytes: &'a [u8],
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], FormatError> {
        if self.bytes.len() < n {
            return Err(FormatError::TruncatedFile);
        }
        let (head, tail) = self.bytes.split_at(n);
        self.bytes = tail;
        Ok(head)
    }

    fn u8(&mut self) -> Result<u8, FormatError> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16, FormatError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, FormatError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, FormatError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }
}

fn decode_params(scheme: Scheme, bytes: &[u8]) -> Result<SchemeParams, FormatError> {
    let mut cur = Cursor { bytes };
    let params = match scheme {
        Scheme::Wom2 => {
            let k = cur.u8()? as usize;
            let b = cur.u8()? as usize;
            let t = cur.u32()? as usize;
            let g = cur.u32()? as usize;
            let smax = cur.u8()? as usize;
            SchemeParams::Wom2(Wom2Params::new(WozParams::new(k, b)?, t, g, smax)?)
        }
        Scheme::Wom3 => {
            let m = cur.u32()? as usize;
            let z = cur.u32()? as usize;
            let variant = variant_from_byte(cur.u8()?)?;
            let ck = cur.u8()? as usize;
            let cb = cur.u8()? as usize;
            SchemeParams::Wom3(Wom3Params::new(m, z, variant, WozParams::new(ck, cb)?)?)
        }
        Scheme::Rs => SchemeParams::Rs,
        Scheme::LookupFree => {
            let m = cur.u32()? as usize;
            let w = cur.u32()? as usize;
            let seed = cur.u64()?;
            SchemeParams::LookupFree { m, w, seed }
        }
        Scheme::Defect => {
            let k = cur.u8()? as usize;
            let b = cur.u8()? as usize;
            let seed = cur.u64()?;
            SchemeParams::Defect { shape: WozParams::new(k, b)?, seed }
        }
    };
    if !cur.is_empty() {
        return Err(FormatError::ParamOutOfRange("parameter block length"));
    }
    Ok(params)
}

/// Serializes an image; the exact inverse of [`image_load`].
pub fn image_save(img: &MemoryImage) -> Result<Vec<u8>, FormatError> {
    let mut params = Vec::new();
    encode_params(img.params(), &mut params)?;
    let cells = img.cells().to_le_bytes();
    let mut out = Vec::with_capacity(12 + params.len() + cells.len());
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(scheme_byte(img.scheme()));
    out.push(img.round());
    out.extend_from_slice(&(params.len() as u16).to_le_bytes());
    out.extend_from_slice(&params);
    out.extend_from_slice(&u32_field(img.cell_count(), "cell count")?.to_le_bytes());
    out.extend_from_slice(&cells);
    Ok(out)
}

/// Parses and validates an image file.
pub fn image_load(bytes: &[u8]) -> Result<MemoryImage, FormatError> {
    let mut cur = Cursor { bytes };
    if cur.take(4)? != MAGIC {
        return Err(FormatError::BadMagic);
    }
    let version = cur.u8()?;
    if version != VERSION {
        return Err(FormatError::BadVersion(version));
    }
    let scheme = scheme_from_byte(cur.u8()?)?;
    let round = cur.u8()?;
    let param_len = cur.u16()? as usize;
    let params = decode_params(scheme, cur.take(param_len)?)?;
    let cell_count = cur.u32()? as usize;
    let cell_bytes = cur.take(cell_count.div_ceil(8))?;
    if !cur.is_empty() {
        return Err(FormatError::TrailingBytes);
    }
    let cells = BitVector::from_le_bytes(cell_count, cell_bytes)?;
    Ok(MemoryImage::from_parts(params, round, cells)?)
}

/// Writes `img` to `path`.
pub fn save_file(path: impl AsRef<Path>, img: &MemoryImage) -> Result<(), FormatError> {
    Ok(fs::write(path, image_save(img)?)?)
}

/// Loads and validates the image file at `path`.
pub fn load_file(path: impl AsRef<Path>) -> Result<MemoryImage, FormatError> {
    image_load(&fs::read(path)?)
}
