//! Arithmetic in the binary fields GF(2^k) for 1 <= k <= 32.
//!
//! Elements are polynomials over GF(2) reduced modulo a fixed irreducible
//! polynomial per degree; coefficient vectors are stored low degree first
//! (bit i = coefficient of x^i).

use crate::bits::BitVector;
use crate::error::Error;
use crate::Result;

/// Largest supported field degree.
pub const MAX_K: usize = 32;

/// Modulus table, entry k-1 for GF(2^k); bit i is the coefficient of x^i.
///
/// Each entry is the smallest irreducible polynomial of its degree with a
/// nonzero constant term, comparing coefficient vectors low degree first as
/// integers. The table is frozen: serialized data depends on it.
const MODULUS: [u64; 32] = [
    0x3,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x203,
    0x409,
    0x805,
    0x1009,
    0x201b,
    0x4021,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
];

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::Invalid("field degree must be between 1 and 32"));
    }
    Ok(())
}

/// The modulus of GF(2^k) as its k+1 coefficient bits, low degree first.
pub fn irreducible_poly(k: usize) -> Result<BitVector> {
    check_k(k)?;
    Ok(BitVector::from_u64(k + 1, MODULUS[k - 1]))
}

/// First `b` coordinates of `v`.
///
/// Errors unless `0 < b <= v.len()`.
pub fn project(v: &BitVector, b: usize) -> Result<BitVector> {
    if b == 0 || b > v.len() {
        return Err(Error::Dimension("projection width must be between 1 and the vector length"));
    }
    Ok(v.slice(0..b))
}

/// An element of GF(2^k).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    k: usize,
    bits: u64,
}

impl FieldElement {
    /// Element with the given coefficient bits (bit i = coefficient of x^i).
    ///
    /// Errors when `k` is out of range or `bits` has coefficients at or
    /// above degree k.
    pub fn new(k: usize, bits: u64) -> Result<Self> {
        check_k(k)?;
        if bits >> k != 0 {
            return Err(Error::Invalid("element bits exceed the field degree"));
        }
        Ok(FieldElement { k, bits })
    }

    pub fn zero(k: usize) -> Result<Self> {
        FieldElement::new(k, 0)
    }

    pub fn one(k: usize) -> Result<Self> {
        FieldElement::new(k, 1)
    }

    /// The basis monomial x^i.
    ///
    /// Errors when `i >= k`.
    pub fn monomial(k: usize, i: usize) -> Result<Self> {
        check_k(k)?;
        if i >= k {
            return Err(Error::Invalid("monomial degree must be below the field degree"));
        }
        FieldElement::new(k, 1 << i)
    }

    /// Iterator over all 2^k elements in ascending coefficient-integer order.
    pub fn all(k: usize) -> Result<impl Iterator<Item = FieldElement>> {
        check_k(k)?;
        Ok((0..1u64 << k).map(move |bits| FieldElement { k, bits }))
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficient vector of length k, low degree first.
    pub fn coeffs(&self) -> BitVector {
        BitVector::from_u64(self.k, self.bits)
    }

    /// Element from a coefficient vector of length k.
    pub fn from_coeffs(coeffs: &BitVector) -> Result<Self> {
        FieldElement::new(coeffs.len(), coeffs.to_u64())
    }

}

/// Field addition (coefficient-wise XOR).
impl core::ops::Add for FieldElement {
    type Output = FieldElement;

    /// # Panics
    /// Panics if the operands live in different fields.
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.k, rhs.k, "operands must share a field");
        FieldElement { k: self.k, bits: self.bits ^ rhs.bits }
    }
}

/// Field multiplication modulo the fixed irreducible polynomial.
impl core::ops::Mul for FieldElement {
    type Output = FieldElement;

    /// # Panics
    /// Panics if the operands live in different fields.
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.k, rhs.k, "operands must share a field");
        let modulus = MODULUS[self.k - 1];
        let mut acc = 0u64;
        let mut a = self.bits;
        let mut b = rhs.bits;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.k & 1 == 1 {
                a ^= modulus;
            }
        }
        FieldElement { k: self.k, bits: acc }
    }
}

impl core::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GF(2^{}):{:#x}", self.k, self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(p: u64) -> u32 {
        63 - p.leading_zeros()
    }

    fn poly_rem(mut a: u64, f: u64) -> u64 {
        while a != 0 && deg(a) >= deg(f) {
            a ^= f << (deg(a) - deg(f));
        }
        a
    }

    /// Independent irreducibility oracle: trial division by every
    /// polynomial of degree 1 through deg/2.
    fn irreducible_by_trial_division(f: u64) -> bool {
        let d = deg(f);
        for g in 2..(1u64 << (d / 2 + 1)) {
            if poly_rem(f, g) == 0 {
                return false;
            }
        }
        d >= 1
    }

    #[test]
    fn table_entries_are_irreducible() {
        for k in 1..=MAX_K {
            let f = MODULUS[k - 1];
            assert_eq!(deg(f) as usize, k, "entry {k} has the wrong degree");
            assert_eq!(f & 1, 1, "entry {k} must have a nonzero constant term");
            assert!(irreducible_by_trial_division(f), "entry {k} is reducible");
        }
    }

    #[test]
    fn table_entries_are_smallest() {
        // Every candidate with a smaller coefficient integer (and c0 = 1)
        // must be reducible.
        for k in 1..=MAX_K {
            let f = MODULUS[k - 1];
            let mut low = 1;
            while (1u64 << k) | low < f {
                assert!(
                    !irreducible_by_trial_division((1u64 << k) | low),
                    "smaller irreducible exists for k = {k}"
                );
                low += 2;
            }
        }
    }

    #[test]
    fn small_degree_moduli() {
        assert_eq!(irreducible_poly(1).unwrap(), BitVector::from_u64(2, 0b11)); // x + 1
        assert_eq!(irreducible_poly(2).unwrap(), BitVector::from_u64(3, 0b111)); // x^2 + x + 1
        assert_eq!(irreducible_poly(3).unwrap(), BitVector::from_u64(4, 0b1011)); // x^3 + x + 1
        assert!(irreducible_poly(0).is_err());
        assert!(irreducible_poly(33).is_err());
    }

    fn e(k: usize, bits: u64) -> FieldElement {
        FieldElement::new(k, bits).unwrap()
    }

    #[test]
    fn gf8_products() {
        // Mod x^3 + x + 1: x*x = x^2, x*x^2 = x+1, x^2*x^2 = x^2+x,
        // (x+1)(x^2+x) = 1, (x^2+x+1)^2 = x+1.
        assert_eq!(e(3, 0b010) * e(3, 0b010), e(3, 0b100));
        assert_eq!(e(3, 0b010) * e(3, 0b100), e(3, 0b011));
        assert_eq!(e(3, 0b100) * e(3, 0b100), e(3, 0b110));
        assert_eq!(e(3, 0b011) * e(3, 0b110), e(3, 0b001));
        assert_eq!(e(3, 0b111) * e(3, 0b111), e(3, 0b011));
    }

    #[test]
    fn gf16_products() {
        // Mod x^4 + x + 1: x*x^3 = x+1, x^2*x^3 = x^2+x.
        assert_eq!(e(4, 0b0010) * e(4, 0b1000), e(4, 0b0011));
        assert_eq!(e(4, 0b0100) * e(4, 0b1000), e(4, 0b0110));
    }

    #[test]
    fn identities() {
        for k in [1, 2, 3, 5, 8, 17, 32] {
            let one = FieldElement::one(k).unwrap();
            let zero = FieldElement::zero(k).unwrap();
            for a in [0u64, 1, 2, (1 << k) - 1, (1 << (k - 1)) | 1] {
                let a = e(k, a & ((1u64 << k) - 1));
                assert_eq!(a * one, a);
                assert_eq!(a * zero, zero);
                assert_eq!(a + a, zero);
                assert_eq!(a + zero, a);
            }
        }
    }

    #[test]
    fn field_laws_exhaustive_small() {
        for k in 1..=3usize {
            let all: Vec<_> = FieldElement::all(k).unwrap().collect();
            for &a in &all {
                for &b in &all {
                    assert_eq!(a * b, b * a);
                    assert_eq!(a + b, b + a);
                    for &c in &all {
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn nonzero_elements_invertible() {
        for k in 1..=6usize {
            for a in FieldElement::all(k).unwrap().skip(1) {
                let inverse_count =
                    FieldElement::all(k).unwrap().filter(|&b| a * b == FieldElement::one(k).unwrap()).count();
                assert_eq!(inverse_count, 1, "k={k}, a={a:?}");
            }
        }
    }

    #[test]
    fn coeffs_round_trip() {
        let a = e(5, 0b10110);
        assert_eq!(a.coeffs(), BitVector::from_u64(5, 0b10110));
        assert_eq!(FieldElement::from_coeffs(&a.coeffs()).unwrap(), a);
        assert_eq!(FieldElement::monomial(5, 3).unwrap(), e(5, 0b01000));
        assert!(FieldElement::monomial(5, 5).is_err());
        assert!(FieldElement::new(3, 0b1000).is_err());
    }

    #[test]
    fn projection() {
        let v = BitVector::from_u64(5, 0b10110);
        assert_eq!(project(&v, 2).unwrap(), BitVector::from_u64(2, 0b10));
        assert_eq!(project(&v, 5).unwrap(), v);
        assert!(project(&v, 0).is_err());
        assert!(project(&v, 6).is_err());
    }
}
