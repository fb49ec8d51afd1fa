//! The prime field F_q = Z/qZ with exact arithmetic on canonical
//! representatives in [0, q).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A prime modulus q >= 3, validated by deterministic trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeModulus(u64);

fn smallest_factor(n: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return Some(d);
        }
        d += 2;
    }
    None
}

impl PrimeModulus {
    pub fn new(q: u64) -> Result<Self> {
        if q < 3 {
            return Err(Error::usage(format!("modulus {q} must be a prime >= 3")));
        }
        if let Some(d) = smallest_factor(q) {
            return Err(Error::usage(format!("{q} is not prime (divisible by {d})")));
        }
        Ok(PrimeModulus(q))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        debug_assert!(a < self.0);
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    /// a^e with the convention 0^0 = 1.
    pub fn pow(self, a: u64, mut e: u64) -> u64 {
        debug_assert!(a < self.0);
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::domain(format!("inversion of zero in F_{}", self.0)));
        }
        Ok(self.pow(a, self.0 - 2))
    }

    /// The fixed ordering a_1, ..., a_q of F_q: a_i = i - 1.
    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.0
    }
}

/// An element of F_q carrying its modulus, for the checked public surface.
/// Hot loops work on raw `u64` values through [`PrimeModulus`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn new(value: u64, modulus: PrimeModulus) -> Result<Self> {
        if value >= modulus.get() {
            return Err(Error::usage(format!(
                "value {value} out of range for F_{}",
                modulus.get()
            )));
        }
        Ok(FieldElement { value, modulus })
    }

    pub fn from_integer(v: i64, modulus: PrimeModulus) -> Self {
        FieldElement {
            value: modulus.reduce(v),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    fn same_field(self, other: FieldElement) -> Result<PrimeModulus> {
        if self.modulus != other.modulus {
            return Err(Error::usage(format!(
                "modulus mismatch: F_{} vs F_{}",
                self.modulus.get(),
                other.modulus.get()
            )));
        }
        Ok(self.modulus)
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let q = self.same_field(other)?;
        Ok(FieldElement {
            value: q.add(self.value, other.value),
            modulus: q,
        })
    }

    pub fn sub(self, other: FieldElement) -> Result<FieldElement> {
        let q = self.same_field(other)?;
        Ok(FieldElement {
            value: q.sub(self.value, other.value),
            modulus: q,
        })
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let q = self.same_field(other)?;
        Ok(FieldElement {
            value: q.mul(self.value, other.value),
            modulus: q,
        })
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement {
            value: self.modulus.pow(self.value, e),
            modulus: self.modulus,
        }
    }
}

/// The fixed ordering (a_1, ..., a_q) = (0, 1, ..., q-1) used everywhere:
/// parity-check columns, subset enumeration, projection patterns.
pub fn canonical_ordering(q: PrimeModulus) -> Vec<FieldElement> {
    q.elements()
        .map(|v| FieldElement {
            value: v,
            modulus: q,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_witnesses() {
        assert!(PrimeModulus::new(7).is_ok());
        assert!(PrimeModulus::new(2).is_err());
        let err = PrimeModulus::new(4).unwrap_err();
        assert!(err.to_string().contains("divisible by 2"), "{err}");
        let err = PrimeModulus::new(91).unwrap_err();
        assert!(err.to_string().contains("divisible by 7"), "{err}");
    }

    #[test]
    fn field_op_examples() {
        let q7 = PrimeModulus::new(7).unwrap();
        // inv(3) over F_7 = 5 since 3*5 = 15 = 1 mod 7
        assert_eq!(q7.inv(3).unwrap(), 5);
        // 0^0 = 1 by convention
        assert_eq!(q7.pow(0, 0), 1);
        assert_eq!(q7.pow(0, 3), 0);
        // add(6, 6) = 12 mod 7 = 5
        assert_eq!(q7.add(6, 6), 5);
        assert!(q7.inv(0).is_err());
    }

    #[test]
    fn inverses_everywhere() {
        for q in [3u64, 5, 7, 11, 13] {
            let f = PrimeModulus::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn canonical_ordering_is_identity() {
        let q5 = PrimeModulus::new(5).unwrap();
        let els: Vec<u64> = canonical_ordering(q5).iter().map(|e| e.value()).collect();
        assert_eq!(els, vec![0, 1, 2, 3, 4]);
        let q7 = PrimeModulus::new(7).unwrap();
        // a_3 = 2 under a_i = i - 1
        assert_eq!(canonical_ordering(q7)[2].value(), 2);
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = FieldElement::new(1, PrimeModulus::new(5).unwrap()).unwrap();
        let b = FieldElement::new(1, PrimeModulus::new(7).unwrap()).unwrap();
        assert!(a.add(b).is_err());
    }
}
