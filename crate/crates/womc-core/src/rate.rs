//! Closed-form information rates: entropy, multi-write capacities, and the
//! per-variant three-write rate curves, with fixed-tolerance maximizers.

use alloc::vec::Vec;

use crate::error::Error;
use crate::image::Scheme;
use crate::wom3::Variant;
use crate::Result;

/// Tolerance used by every numeric search in this module.
pub const SEARCH_TOL: f64 = 1e-9;

/// Binary entropy in bits; 0 at both endpoints.
///
/// # Panics
/// Panics if `p` is outside [0, 1].
pub fn entropy(p: f64) -> f64 {
    assert!((0.0..=1.0).contains(&p), "entropy argument must lie in [0, 1]");
    if p == 0.0 || p == 1.0 {
        return 0.0;
    }
    -p * libm::log2(p) - (1.0 - p) * libm::log2(1.0 - p)
}

/// Capacity of a t-write binary write-once memory, log2(t + 1) bits/cell.
///
/// Errors when `t` is 0.
pub fn wom_capacity(t: u32) -> Result<f64> {
    if t == 0 {
        return Err(Error::Invalid("write count must be at least 1"));
    }
    Ok(libm::log2(t as f64 + 1.0))
}

/// Two-write rate achievable when the first round writes words of relative
/// weight `p`: H(p) + (1 - p).
pub fn capacity2_curve(p: f64) -> f64 {
    entropy(p) + 1.0 - p
}

/// Maximum of [`capacity2_curve`] over [0, 1/2]: (argmax, value).
pub fn maximize_capacity2() -> (f64, f64) {
    let p = golden_max(capacity2_curve, 0.0, 0.5);
    (p, capacity2_curve(p))
}

/// The point where both rounds of a two-write code carry the same number of
/// bits, H(p) = 1 - p: returns (p, total rate 2(1 - p)).
pub fn equal_rate_point() -> (f64, f64) {
    let mut lo = 1e-12;
    let mut hi = 0.5;
    while hi - lo > SEARCH_TOL {
        let mid = 0.5 * (lo + hi);
        if entropy(mid) - (1.0 - mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    (p, 2.0 * (1.0 - p))
}

/// Three-write rate of a variant as a function of the first-round zero
/// fraction parameter `p`.
///
/// The basic variant always operates equidistributed, so its curve is the
/// constant 5/3. The others share the first-round term
/// (H(p) + (1-p) log2 3)/3 and the final-round term 2/3, and differ in the
/// middle round: p/3 + 1/4, then 1/4 + p/2, then (4 + 5p)/12.
pub fn rate3(variant: Variant, p: f64) -> f64 {
    let shared = (entropy(p) + (1.0 - p) * libm::log2(3.0)) / 3.0 + 2.0 / 3.0;
    match variant {
        Variant::Basic => 5.0 / 3.0,
        Variant::ImpI => shared + p / 3.0 + 0.25,
        Variant::ImpII => shared + 0.25 + p / 2.0,
        Variant::ImpIII => shared + (4.0 + 5.0 * p) / 12.0,
    }
}

/// Maximum of [`rate3`] over p in [0, 1]: (argmax, value).
///
/// The basic variant's curve is constant; its fixed operating point p = 1/4
/// is returned.
pub fn maximize_rate3(variant: Variant) -> (f64, f64) {
    if variant == Variant::Basic {
        return (0.25, rate3(variant, 0.25));
    }
    let p = golden_max(|q| rate3(variant, q), 0.0, 1.0);
    (p, rate3(variant, p))
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let invphi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut c = hi - invphi * (hi - lo);
    let mut d = lo + invphi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > SEARCH_TOL {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
    }
    0.5 * (lo + hi)
}

/// Achieved rate of one concrete code instance, per round and in total,
/// next to the matching closed-form benchmark.
#[derive(Clone, Debug, PartialEq)]
pub struct RateReport {
    pub scheme: Scheme,
    /// Bits conveyed by each round.
    pub round_bits: Vec<f64>,
    pub cells: u64,
    /// Total bits per cell.
    pub rate: f64,
    /// Benchmark the instance is measured against.
    pub reference: f64,
    /// `reference - rate`; small is good, negative impossible.
    pub gap: f64,
}

impl RateReport {
    pub fn new(scheme: Scheme, round_bits: Vec<f64>, cells: u64, reference: f64) -> Self {
        let rate = round_bits.iter().sum::<f64>() / cells as f64;
        RateReport { scheme, round_bits, cells, rate, reference, gap: reference - rate }
    }
}
