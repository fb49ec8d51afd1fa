//! Small extension fields F_{q^e} for e <= 3, with elements packed as
//! base-q digit strings: the element c_0 + c_1 t + c_2 t^2 has index
//! c_0 + c_1 q + c_2 q^2.

use crate::algebra::PrimeModulus;
use crate::error::{Error, Result};

pub const MAX_EXTENSION_DEGREE: usize = 3;

/// F_{q^e} = F_q[t] / (m(t)) for a monic irreducible m of degree e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    base: PrimeModulus,
    degree: usize,
    /// Monic modulus polynomial, lowest degree first, length degree + 1.
    modulus_poly: Vec<u64>,
}

/// True iff the monic polynomial (lowest-first, degree 1..=3) has no root
/// in F_q. For degrees up to 3 this decides irreducibility, since any
/// factorization must contain a linear factor.
fn rootless(q: PrimeModulus, coeffs: &[u64]) -> bool {
    q.elements().all(|x| eval_poly(q, coeffs, x) != 0)
}

fn eval_poly(q: PrimeModulus, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = q.add(q.mul(acc, x), c);
    }
    acc
}

/// The first monic irreducible of degree e over F_q, candidates ordered by
/// their non-leading coefficient vector compared from the highest degree
/// down to the constant term. Deterministic; existence is guaranteed.
pub fn find_irreducible(q: PrimeModulus, e: usize) -> Result<Vec<u64>> {
    if e == 0 || e > MAX_EXTENSION_DEGREE {
        return Err(Error::usage(format!(
            "extension degree {e} outside supported range 1..={MAX_EXTENSION_DEGREE}"
        )));
    }
    if e == 1 {
        // t itself: coefficient sequence (0, 1).
        return Ok(vec![0, 1]);
    }
    let qq = q.get();
    let total = qq.pow(e as u32);
    for code in 0..total {
        // Constant term is the fastest-varying digit, so the scan tries
        // t^e, t^e + 1, ..., t^e + (q-1), t^e + t, ... in that order.
        let mut coeffs = vec![0u64; e + 1];
        coeffs[e] = 1;
        let mut c = code;
        for d in coeffs.iter_mut().take(e) {
            *d = c % qq;
            c /= qq;
        }
        if rootless(q, &coeffs) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials of degree {e} exist over F_{qq}")
}

impl ExtensionField {
    /// Builds F_{q^e} over the deterministic modulus from [`find_irreducible`].
    pub fn new(base: PrimeModulus, degree: usize) -> Result<Self> {
        let modulus_poly = find_irreducible(base, degree)?;
        Ok(ExtensionField {
            base,
            degree,
            modulus_poly,
        })
    }

    /// Builds F_{q^e} over a caller-supplied monic modulus, verifying
    /// irreducibility by the root test.
    pub fn with_modulus(base: PrimeModulus, modulus_poly: Vec<u64>) -> Result<Self> {
        let degree = modulus_poly.len().saturating_sub(1);
        if degree == 0 || degree > MAX_EXTENSION_DEGREE {
            return Err(Error::usage(format!(
                "modulus polynomial degree {degree} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        if modulus_poly[degree] != 1 {
            return Err(Error::usage("modulus polynomial must be monic".to_string()));
        }
        if modulus_poly.iter().any(|&c| c >= base.get()) {
            return Err(Error::usage("modulus coefficients out of range".to_string()));
        }
        if degree > 1 && !rootless(base, &modulus_poly) {
            return Err(Error::usage(format!(
                "modulus polynomial is reducible over F_{}",
                base.get()
            )));
        }
        Ok(ExtensionField {
            base,
            degree,
            modulus_poly,
        })
    }

    pub fn base(&self) -> PrimeModulus {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus_poly(&self) -> &[u64] {
        &self.modulus_poly
    }

    pub fn order(&self) -> u64 {
        self.base.get().pow(self.degree as u32)
    }

    pub fn decode(&self, mut idx: u64) -> Vec<u64> {
        let q = self.base.get();
        let mut digits = vec![0u64; self.degree];
        for d in digits.iter_mut() {
            *d = idx % q;
            idx /= q;
        }
        digits
    }

    pub fn encode(&self, digits: &[u64]) -> u64 {
        let q = self.base.get();
        let mut idx = 0u64;
        for &d in digits.iter().rev() {
            idx = idx * q + d;
        }
        idx
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let q = self.base;
        let da = self.decode(a);
        let db = self.decode(b);
        let sum: Vec<u64> = da
            .iter()
            .zip(db.iter())
            .map(|(&x, &y)| q.add(x, y))
            .collect();
        self.encode(&sum)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let q = self.base;
        let da = self.decode(a);
        let db = self.decode(b);
        let diff: Vec<u64> = da
            .iter()
            .zip(db.iter())
            .map(|(&x, &y)| q.sub(x, y))
            .collect();
        self.encode(&diff)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let q = self.base;
        let e = self.degree;
        let da = self.decode(a);
        let db = self.decode(b);
        // Schoolbook product, degree <= 2e - 2.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = q.add(prod[i + j], q.mul(x, y));
            }
        }
        // Reduce modulo the monic modulus polynomial.
        for d in (e..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus_poly.iter().enumerate().take(e) {
                prod[d - e + i] = q.sub(prod[d - e + i], q.mul(c, m));
            }
        }
        prod.truncate(e);
        self.encode(&prod)
    }

    /// a^e with the convention 0^0 = 1.
    pub fn pow(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::domain(format!(
                "inversion of zero in F_{{{}^{}}}",
                self.base.get(),
                self.degree
            )));
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Embeds a base-field value (in [0, q)) as a constant.
    pub fn embed(&self, a: u64) -> u64 {
        debug_assert!(a < self.base.get());
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    #[test]
    fn irreducible_choices_are_the_expected_ones() {
        // degree 1: t
        assert_eq!(find_irreducible(q(7), 1).unwrap(), vec![0, 1]);
        // -1 is a non-residue mod 7 (7 = 3 mod 4), so t^2 + 1 is first
        assert_eq!(find_irreducible(q(7), 2).unwrap(), vec![1, 0, 1]);
        // over F_5: t^2, t^2 + 1 = (t+2)(t+3) are out; t^2 + 2 is first
        assert_eq!(find_irreducible(q(5), 2).unwrap(), vec![2, 0, 1]);
        // over F_7 the cubes are {0, 1, 6}; t^3 + 2 has no root
        assert_eq!(find_irreducible(q(7), 3).unwrap(), vec![2, 0, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 + 1 factors over F_5
        assert!(ExtensionField::with_modulus(q(5), vec![1, 0, 1]).is_err());
        assert!(ExtensionField::with_modulus(q(5), vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn f25_multiplication_table_spot_checks() {
        let f = ExtensionField::new(q(5), 2).unwrap();
        // t * t = t^2 = -2 = 3 (modulus t^2 + 2)
        let t = f.encode(&[0, 1]);
        assert_eq!(f.mul(t, t), f.encode(&[3, 0]));
        // (1 + t)(2 + 3t) = 2 + 5t + 3t^2 = 2 + 0t + 3*3 = 11 = 1
        let a = f.encode(&[1, 1]);
        let b = f.encode(&[2, 3]);
        assert_eq!(f.mul(a, b), f.encode(&[1, 0]));
    }

    #[test]
    fn frobenius_fixes_every_element() {
        // x^(q^e) = x, exhaustively for q^e <= 2500
        for (qq, e) in [(7u64, 2usize), (11, 2), (5, 3), (13, 3), (43, 2)] {
            let f = ExtensionField::new(q(qq), e).unwrap();
            let order = f.order();
            assert!(order <= 2500);
            for x in 0..order {
                assert_eq!(f.pow(x, order), x, "q={qq} e={e} x={x}");
            }
        }
    }

    #[test]
    fn inverses_in_f49() {
        let f = ExtensionField::new(q(7), 2).unwrap();
        for x in 1..f.order() {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
        assert!(f.inv(0).is_err());
    }
}
