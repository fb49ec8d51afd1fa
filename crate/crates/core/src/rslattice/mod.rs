//! The Reed-Solomon lattice L_{q,k}: the integer lift of the
//! (q-k)-dimensional Reed-Solomon code, i.e. the mod-q kernel of the
//! k x q matrix of powers H_q(k).

mod hnf;
mod minimum;

pub use minimum::{
    min_distance, verify_bp_lemma, BpLemmaReport, CandidateReplay, MinDistanceOutcome,
    SignedMultisetPair,
};

use crate::algebra::PrimeModulus;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// The k x q parity-check matrix with entry(j, i) = a_i^j, a_i = i - 1,
/// under the convention 0^0 = 1. Row 0 is all ones; any k distinct columns
/// are linearly independent (Vandermonde).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    q: PrimeModulus,
    k: usize,
    rows: Vec<Vec<u64>>,
}

/// A syndrome H_q(k) x mod q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syndrome(pub Vec<u64>);

impl ParityCheckMatrix {
    pub fn build(q: PrimeModulus, k: usize) -> Result<Self> {
        check_qk(q, k)?;
        let rows = (0..k as u64)
            .map(|j| q.elements().map(|a| q.pow(a, j)).collect())
            .collect();
        Ok(ParityCheckMatrix { q, k, rows })
    }

    pub fn q(&self) -> PrimeModulus {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// entry(j, i) with 0-based row j and 1-based column i matching the
    /// fixed ordering a_i = i - 1.
    pub fn entry(&self, j: usize, i: usize) -> u64 {
        self.rows[j][i - 1]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn syndrome(&self, x: &[i64]) -> Result<Syndrome> {
        let n = self.q.get() as usize;
        if x.len() != n {
            return Err(Error::usage(format!(
                "vector length {} does not match q = {n}",
                x.len()
            )));
        }
        let q = self.q;
        let u = self
            .rows
            .iter()
            .map(|row| {
                x.iter()
                    .zip(row.iter())
                    .fold(0u64, |acc, (&xi, &aij)| q.add(acc, q.mul(q.reduce(xi), aij)))
            })
            .collect();
        Ok(Syndrome(u))
    }

    /// Syndrome of the indicator vector of a support set.
    pub fn syndrome_of_support(&self, support: &[u64]) -> Syndrome {
        let q = self.q;
        let u = (0..self.k as u64)
            .map(|j| {
                support
                    .iter()
                    .fold(0u64, |acc, &a| q.add(acc, q.pow(a, j)))
            })
            .collect();
        Syndrome(u)
    }
}

/// A square integer basis stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub n: usize,
    pub columns: Vec<Vec<i64>>,
}

/// The lattice L_{q,k} with its canonical triangular basis and exact
/// determinant q^k.
#[derive(Debug, Clone)]
pub struct RsLattice {
    q: PrimeModulus,
    k: usize,
    parity: ParityCheckMatrix,
    basis: LatticeBasis,
    det: BigUint,
}

fn check_qk(q: PrimeModulus, k: usize) -> Result<()> {
    if k <= 1 || k as u64 >= q.get() {
        return Err(Error::usage(format!(
            "k = {k} violates 1 < k < q = {}",
            q.get()
        )));
    }
    Ok(())
}

/// Builds L_{q,k} = { v in Z^q : H_q(k) v = 0 mod q }. The basis is the
/// column HNF of a lifted generator matrix of the mod-q kernel stacked
/// with q * I, so outputs are deterministic and comparable.
pub fn build_lattice(q: PrimeModulus, k: usize) -> Result<RsLattice> {
    check_qk(q, k)?;
    let parity = ParityCheckMatrix::build(q, k)?;
    let n = q.get() as usize;
    // The kernel of H_q(k) is spanned by the evaluation vectors of the
    // monomials t^j for j < q - k (full-support Reed-Solomon duality).
    let gens: Vec<Vec<i64>> = (0..(n - k) as u64)
        .map(|j| q.elements().map(|a| q.pow(a, j) as i64).collect())
        .collect();
    let columns = hnf::column_hnf_mod_q(n, q.get(), &gens);
    let mut det = BigUint::one();
    for (i, col) in columns.iter().enumerate() {
        det *= BigUint::from(col[i] as u64);
    }
    let expected = BigUint::from(q.get()).pow(k as u32);
    if det != expected {
        return Err(Error::verification(format!(
            "determinant {det} != q^k = {expected} for q = {}, k = {k}",
            q.get()
        )));
    }
    let lat = RsLattice {
        q,
        k,
        parity,
        basis: LatticeBasis { n, columns },
        det,
    };
    // Every basis column must be in the kernel.
    for col in &lat.basis.columns {
        let s = lat.parity.syndrome(col)?;
        if s.0.iter().any(|&v| v != 0) {
            return Err(Error::verification(format!(
                "basis column {col:?} has nonzero syndrome {s:?}"
            )));
        }
    }
    Ok(lat)
}

impl RsLattice {
    pub fn q(&self) -> PrimeModulus {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dimension(&self) -> usize {
        self.basis.n
    }

    pub fn parity(&self) -> &ParityCheckMatrix {
        &self.parity
    }

    pub fn basis(&self) -> &LatticeBasis {
        &self.basis
    }

    pub fn determinant(&self) -> &BigUint {
        &self.det
    }

    /// The Lemma-style lower bound target: ell = 2k, so that the minimum
    /// distance satisfies lambda^(p) >= (2k)^(1/p) whenever k <= q/2.
    pub fn ell(&self) -> u64 {
        2 * self.k as u64
    }

    /// Exact membership test by triangular back-substitution.
    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.basis.n && hnf::solve_triangular(&self.basis.columns, v).is_some()
    }

    /// Rebuilds the canonical basis from (q, k) and compares; detects any
    /// tampering with serialized bases.
    pub fn verify_integrity(&self) -> Result<()> {
        let fresh = build_lattice(self.q, self.k)?;
        if fresh.basis != self.basis {
            return Err(Error::verification(format!(
                "basis does not match the canonical construction for q = {}, k = {}",
                self.q.get(),
                self.k
            )));
        }
        Ok(())
    }

    /// Reconstructs a lattice value from an untrusted basis, verifying it
    /// against the canonical construction.
    pub fn from_parts(q: PrimeModulus, k: usize, basis: LatticeBasis) -> Result<RsLattice> {
        let canonical = build_lattice(q, k)?;
        if canonical.basis != basis {
            return Err(Error::verification(format!(
                "basis does not match the canonical construction for q = {}, k = {k}",
                q.get()
            )));
        }
        Ok(canonical)
    }

    /// The textual export: header "q k n det", then the basis matrix one
    /// row per line, space-separated decimal integers.
    pub fn to_export_string(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.q.get(), self.k, self.basis.n, self.det);
        for r in 0..self.basis.n {
            let row: Vec<String> = self
                .basis
                .columns
                .iter()
                .map(|col| col[r].to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_export_str(text: &str) -> Result<RsLattice> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::usage("empty lattice file".to_string()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::usage(format!(
                "lattice header must be 'q k n det', got '{header}'"
            )));
        }
        let parse = |s: &str, what: &str| {
            s.parse::<u64>()
                .map_err(|_| Error::usage(format!("bad {what} '{s}' in lattice header")))
        };
        let qv = parse(parts[0], "q")?;
        let k = parse(parts[1], "k")? as usize;
        let n = parse(parts[2], "n")? as usize;
        let det: BigUint = parts[3]
            .parse()
            .map_err(|_| Error::usage(format!("bad det '{}' in lattice header", parts[3])))?;
        let q = PrimeModulus::new(qv)?;
        let mut columns = vec![vec![0i64; n]; n];
        for (r, line) in lines.enumerate() {
            if r >= n {
                return Err(Error::usage("too many rows in lattice file".to_string()));
            }
            let vals: Vec<i64> = line
                .split_whitespace()
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| Error::usage(format!("bad entry '{s}' in row {r}")))
                })
                .collect::<Result<_>>()?;
            if vals.len() != n {
                return Err(Error::usage(format!(
                    "row {r} has {} entries, expected {n}",
                    vals.len()
                )));
            }
            for (c, &v) in vals.iter().enumerate() {
                columns[c][r] = v;
            }
        }
        let lat = RsLattice::from_parts(q, k, LatticeBasis { n, columns })?;
        if lat.det != det {
            return Err(Error::verification(format!(
                "header det {det} does not match recomputed {}",
                lat.det
            )));
        }
        Ok(lat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    #[test]
    fn parity_check_examples() {
        let h = ParityCheckMatrix::build(q(5), 2).unwrap();
        assert_eq!(h.rows()[0], vec![1, 1, 1, 1, 1]);
        assert_eq!(h.rows()[1], vec![0, 1, 2, 3, 4]);
        let h = ParityCheckMatrix::build(q(5), 3).unwrap();
        assert_eq!(h.rows()[2], vec![0, 1, 4, 4, 1]);
        let h = ParityCheckMatrix::build(q(7), 2).unwrap();
        assert_eq!(h.entry(1, 7), 6);
    }

    #[test]
    fn syndrome_examples() {
        let h = ParityCheckMatrix::build(q(7), 3).unwrap();
        assert_eq!(h.syndrome(&[0; 7]).unwrap(), Syndrome(vec![0, 0, 0]));
        let y = [1, 1, 1, 0, 0, 0, 0];
        assert_eq!(h.syndrome(&y).unwrap(), Syndrome(vec![3, 3, 5]));
        assert_eq!(h.syndrome_of_support(&[0, 1, 2]), Syndrome(vec![3, 3, 5]));
        assert!(h.syndrome(&[0; 6]).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            build_lattice(q(5), 2).unwrap().determinant(),
            &BigUint::from(25u32)
        );
        assert_eq!(
            build_lattice(q(7), 3).unwrap().determinant(),
            &BigUint::from(343u32)
        );
    }

    #[test]
    fn q_times_unit_vectors_are_members() {
        let lat = build_lattice(q(7), 3).unwrap();
        for i in 0..7 {
            let mut v = vec![0i64; 7];
            v[i] = 7;
            assert!(lat.contains(&v));
        }
        let mut v = vec![0i64; 7];
        v[0] = 1;
        assert!(!lat.contains(&v));
    }

    #[test]
    fn parameter_violations() {
        assert!(build_lattice(q(7), 1).is_err());
        assert!(build_lattice(q(7), 7).is_err());
        assert!(PrimeModulus::new(4).is_err());
    }

    #[test]
    fn export_roundtrip() {
        let lat = build_lattice(q(7), 2).unwrap();
        let text = lat.to_export_string();
        let back = RsLattice::from_export_str(&text).unwrap();
        assert_eq!(back.basis(), lat.basis());
        assert_eq!(back.determinant(), lat.determinant());
    }

    #[test]
    fn tampered_export_fails() {
        let lat = build_lattice(q(7), 2).unwrap();
        let mut lines: Vec<String> = lat.to_export_string().lines().map(String::from).collect();
        // flip one basis entry
        let mut row: Vec<i64> = lines[1]
            .split_whitespace()
            .map(|s| s.parse().unwrap())
            .collect();
        row[0] += 1;
        lines[1] = row
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let text = lines.join("\n");
        assert!(RsLattice::from_export_str(&text).is_err());
    }
}
