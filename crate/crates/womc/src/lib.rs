//! File and message plumbing around [`womc_core`]: a binary image format
//! with bit-exact round trips ([`format`]) and the text forms the CLI uses
//! to move payloads, words, sets, and permutations ([`messages`]).

pub mod format;
pub mod messages;
