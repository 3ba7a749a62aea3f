//! Text forms for the messages the CLI moves in and out of images.
//!
//! Payloads travel as strings of `0`/`1`; quaternary words as strings of
//! digits `0`–`3`; stored sets and slot permutations as decimal ranks.
//! Stuck-cell patterns are `index=bit` lines. Whitespace around and between
//! tokens is ignored everywhere.

use std::fmt;

use num_bigint::BigUint;
use womc_core::ranking::{binomial, subset_rank, subset_unrank};
use womc_core::rivest_shamir::Symbol;
use womc_core::stuckat::DefectPattern;
use womc_core::{BitVector, IndexSet};

/// A message file that does not parse or does not fit its image.
#[derive(Debug, PartialEq, Eq)]
pub struct MessageError(String);

impl MessageError {
    pub fn new(what: impl Into<String>) -> Self {
        MessageError(what.into())
    }
}

impl fmt::Display for MessageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for MessageError {}

impl From<womc_core::Error> for MessageError {
    fn from(e: womc_core::Error) -> Self {
        MessageError::new(e.to_string())
    }
}

/// Parses a payload written as `0`/`1` characters.
pub fn parse_bits(text: &str) -> Result<BitVector, MessageError> {
    let mut bits = Vec::new();
    for c in text.chars() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            c if c.is_ascii_whitespace() => {}
            c => {
                return Err(MessageError::new(format!(
                    "unexpected character {c:?} in a bit string"
                )))
            }
        }
    }
    Ok(BitVector::from_bools(&bits))
}

pub fn format_bits(v: &BitVector) -> String {
    (0..v.len()).map(|i| if v.get(i) { '1' } else { '0' }).collect()
}

/// Parses a word written as digits `0`–`3`.
pub fn parse_word(text: &str) -> Result<Vec<Symbol>, MessageError> {
    let mut word = Vec::new();
    for c in text.chars() {
        match c {
            '0'..='3' => word.push(Symbol::new(c as u8 - b'0').expect("digit is in range")),
            c if c.is_ascii_whitespace() => {}
            c => {
                return Err(MessageError::new(format!(
                    "unexpected character {c:?} in a quaternary word"
                )))
            }
        }
    }
    Ok(word)
}

pub fn format_word(word: &[Symbol]) -> String {
    word.iter().map(|s| char::from(b'0' + s.value())).collect()
}

/// Position of `s` in the order that lists every set of its universe by
/// size and then colexicographically.
pub fn set_rank(s: &IndexSet) -> u128 {
    (0..s.len()).map(|size| binomial(s.universe(), size)).sum::<u128>() + subset_rank(s)
}

/// Inverse of [`set_rank`], restricted to sets of size at most `max_size`.
pub fn set_unrank(rank: u128, universe: usize, max_size: usize) -> Result<IndexSet, MessageError> {
    let mut rest = rank;
    for size in 0..=max_size {
        let count = binomial(universe, size);
        if rest < count {
            return Ok(subset_unrank(rest, universe, size)?);
        }
        rest -= count;
    }
    Err(MessageError::new(format!(
        "set rank {rank} is out of range for sets of size at most {max_size}"
    )))
}

/// Parses one decimal rank per non-empty line.
pub fn parse_rank_lines(text: &str) -> Result<Vec<u128>, MessageError> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| {
            line.parse().map_err(|_| MessageError::new(format!("bad rank line {line:?}")))
        })
        .collect()
}

/// Parses a single decimal rank of unbounded size.
pub fn parse_big_rank(text: &str) -> Result<BigUint, MessageError> {
    let t = text.trim();
    t.parse().map_err(|_| MessageError::new(format!("bad permutation rank {t:?}")))
}

/// Parses one `width`-bit value per non-empty line.
pub fn parse_bit_lines(text: &str, width: usize) -> Result<Vec<BitVector>, MessageError> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|line| !line.is_empty()) {
        let v = parse_bits(line)?;
        if v.len() != width {
            return Err(MessageError::new(format!("value line {line:?} is not {width} bits")));
        }
        out.push(v);
    }
    Ok(out)
}

/// Parses `index=bit` lines into a defect pattern over `len` cells.
pub fn parse_stuck(text: &str, len: usize) -> Result<DefectPattern, MessageError> {
    let mut entries = Vec::new();
    for line in text.lines().map(str::trim).filter(|line| !line.is_empty()) {
        let (index, bit) = line
            .split_once('=')
            .ok_or_else(|| MessageError::new(format!("stuck line {line:?} is not index=bit")))?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| MessageError::new(format!("bad cell index in stuck line {line:?}")))?;
        let bit = match bit.trim() {
            "0" => false,
            "1" => true,
            other => {
                return Err(MessageError::new(format!("stuck value {other:?} is not 0 or 1")))
            }
        };
        entries.push((index, bit));
    }
    entries.sort_unstable();
    for pair in entries.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(MessageError::new(format!("cell {} is listed twice", pair[0].0)));
        }
    }
    let stuck = IndexSet::new(len, entries.iter().map(|&(i, _)| i).collect())?;
    let mut values = BitVector::zeros(len);
    for &(i, bit) in &entries {
        values.set(i, bit);
    }
    Ok(DefectPattern::new(stuck, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_round_trip() {
        let v = parse_bits(" 01\n101 ").unwrap();
        assert_eq!(format_bits(&v), "01101");
        assert_eq!(parse_bits("").unwrap().len(), 0);
        assert!(parse_bits("012").is_err());
    }

    #[test]
    fn words_round_trip() {
        let w = parse_word("0123 30").unwrap();
        assert_eq!(format_word(&w), "012330");
        assert!(parse_word("4").is_err());
    }

    #[test]
    fn set_ranks_enumerate_by_size_then_colex() {
        // Universe 4, sizes up to 2: 1 + 4 + 6 = 11 sets.
        let mut seen = Vec::new();
        for rank in 0..11 {
            let s = set_unrank(rank, 4, 2).unwrap();
            assert_eq!(set_rank(&s), rank);
            seen.push(s.members().to_vec());
        }
        assert_eq!(seen[0], Vec::<usize>::new());
        assert_eq!(seen[1..5], [vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(seen[5], vec![0, 1]);
        assert_eq!(seen[10], vec![2, 3]);
        assert!(set_unrank(11, 4, 2).is_err());
    }

    #[test]
    fn rank_lines() {
        assert_eq!(parse_rank_lines("3\n\n 12 \n").unwrap(), vec![3, 12]);
        assert!(parse_rank_lines("x").is_err());
        assert_eq!(parse_big_rank(" 123456789012345678901234567890 ").unwrap().to_string(),
            "123456789012345678901234567890");
    }

    #[test]
    fn bit_lines_enforce_width() {
        let values = parse_bit_lines("01\n11\n", 2).unwrap();
        assert_eq!(values.len(), 2);
        assert!(parse_bit_lines("011\n", 2).is_err());
    }

    #[test]
    fn stuck_lines() {
        let d = parse_stuck("2=1\n0=0\n", 4).unwrap();
        assert_eq!(d.stuck().members(), [0, 2]);
        assert!(d.values().get(2));
        assert!(!d.values().get(0));
        assert!(parse_stuck("2=1\n2=0\n", 4).is_err());
        assert!(parse_stuck("4=1\n", 4).is_err());
        assert!(parse_stuck("a=1\n", 4).is_err());
        assert!(parse_stuck("1:0\n", 4).is_err());
        assert!(parse_stuck("1=2\n", 4).is_err());
    }
}
