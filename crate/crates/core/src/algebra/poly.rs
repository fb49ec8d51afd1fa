//! Dense univariate polynomials over F_q, lowest degree first.

use crate::algebra::PrimeModulus;
use crate::error::{Error, Result};

/// A polynomial over F_q. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    q: PrimeModulus,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(q: PrimeModulus, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < q.get()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { q, coeffs }
    }

    pub fn zero(q: PrimeModulus) -> Self {
        Polynomial { q, coeffs: vec![] }
    }

    pub fn one(q: PrimeModulus) -> Self {
        Polynomial {
            q,
            coeffs: vec![1],
        }
    }

    /// The monic linear factor t - a.
    pub fn linear_factor(q: PrimeModulus, a: u64) -> Self {
        Polynomial {
            q,
            coeffs: vec![q.neg(a), 1],
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.q.add(self.q.mul(acc, x), c);
        }
        acc
    }

    /// Evaluations at the canonical ordering (0, 1, ..., q-1).
    pub fn eval_word(&self) -> Vec<u64> {
        self.q.elements().map(|x| self.eval(x)).collect()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = self.q.add(a, b);
        }
        Polynomial::new(self.q, out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = self.q.sub(a, b);
        }
        Polynomial::new(self.q, out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.q);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.q.add(out[i + j], self.q.mul(a, b));
            }
        }
        Polynomial::new(self.q, out)
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        Polynomial::new(
            self.q,
            self.coeffs.iter().map(|&a| self.q.mul(a, c)).collect(),
        )
    }

    /// The monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(q: PrimeModulus, roots: &[u64]) -> Polynomial {
        let mut acc = Polynomial::one(q);
        for &r in roots {
            acc = acc.mul(&Polynomial::linear_factor(q, r));
        }
        acc
    }
}

/// Lagrange interpolation through points with distinct x coordinates.
pub fn interpolate(q: PrimeModulus, points: &[(u64, u64)]) -> Result<Polynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().take(i) {
            if xi == xj {
                return Err(Error::usage(format!(
                    "interpolation nodes collide at x = {xi}"
                )));
            }
        }
    }
    let mut acc = Polynomial::zero(q);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        if yi == 0 {
            continue;
        }
        let mut basis = Polynomial::one(q);
        let mut denom = 1u64;
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Polynomial::linear_factor(q, xj));
            denom = q.mul(denom, q.sub(xi, xj));
        }
        let scale = q.mul(yi, q.inv(denom)?);
        acc = acc.add(&basis.scale(scale));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q7() -> PrimeModulus {
        PrimeModulus::new(7).unwrap()
    }

    #[test]
    fn from_roots_and_eval() {
        let f = Polynomial::from_roots(q7(), &[0, 1, 2]);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.eval(0), 0);
        assert_eq!(f.eval(1), 0);
        assert_eq!(f.eval(2), 0);
        // t(t-1)(t-2) at t=3 is 6
        assert_eq!(f.eval(3), 6);
        assert_eq!(f.eval_word(), vec![0, 0, 0, 6, 3, 4, 1]);
    }

    #[test]
    fn interpolation_recovers() {
        let f = Polynomial::new(q7(), vec![2, 0, 5]);
        let pts: Vec<(u64, u64)> = (0..3).map(|x| (x, f.eval(x))).collect();
        let g = interpolate(q7(), &pts).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn duplicate_nodes_rejected() {
        assert!(interpolate(q7(), &[(1, 2), (1, 3)]).is_err());
    }
}
