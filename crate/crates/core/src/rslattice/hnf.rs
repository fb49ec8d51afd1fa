//! Column-style Hermite normal form for lattices that contain q * Z^n.
//!
//! The containment keeps every intermediate entry in [0, q): adding a
//! multiple of q * e_r to a column is a span-preserving operation, so any
//! entry may be reduced mod q at any time. Since q is prime, the diagonal
//! of the result consists of 1s and qs only.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Lower-triangular column HNF of the integer span of `cols` together with
/// q * Z^n. Returns the n basis columns; diagonal entries are positive and
/// every entry left of a diagonal in its row is reduced into [0, diagonal).
pub fn column_hnf_mod_q(n: usize, q: u64, cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let qi = q as i64;
    let reduce = |v: i64| v.rem_euclid(qi);
    // Active general columns, kept entrywise in [0, q).
    let mut active: Vec<Vec<i64>> = cols
        .iter()
        .map(|c| {
            assert_eq!(c.len(), n);
            c.iter().map(|&v| reduce(v)).collect()
        })
        .collect();
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(n);

    for row in 0..n {
        // Euclid among the active columns until at most one has a nonzero
        // entry in this row. Entries are in [0, q), so the minimum strictly
        // decreases and the loop terminates.
        loop {
            let mut nz: Vec<usize> = (0..active.len())
                .filter(|&c| active[c][row] != 0)
                .collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&c| (active[c][row], c));
            let pivot = nz[0];
            for &c in &nz[1..] {
                let t = active[c][row] / active[pivot][row];
                for r in row..n {
                    let v = active[c][r] - t * active[pivot][r];
                    active[c][r] = reduce(v);
                }
                // Row `row` may still be a nonzero remainder; the next pass
                // of the loop handles it.
            }
        }
        let holder = (0..active.len()).find(|&c| active[c][row] != 0);
        let col = match holder {
            None => {
                // Only q * e_row hits this coordinate: diagonal q.
                let mut col = vec![0i64; n];
                col[row] = qi;
                col
            }
            Some(c) => {
                // gcd(entry, q) = 1 since 0 < entry < q and q is prime.
                // Scale the column so the diagonal becomes 1: multiply by
                // entry^{-1} mod q, reducing rows below mod q.
                let g = active[c][row];
                let inv = mod_inverse(g, qi);
                let mut col: Vec<i64> = active[c].iter().map(|&v| reduce(v * inv)).collect();
                col[row] = 1;
                active.swap_remove(c);
                col
            }
        };
        // Clear this row from all remaining active columns.
        for ac in active.iter_mut() {
            let t = ac[row];
            if t != 0 {
                for r in row..n {
                    ac[r] = reduce(ac[r] - t * col[r]);
                }
            }
        }
        basis.push(col);
    }
    debug_assert!(active.iter().all(|c| c.iter().all(|&v| v == 0)));

    // Off-diagonal normalization: 0 <= basis[j][row] < diag(row) for j < row.
    for row in 0..n {
        let d = basis[row][row];
        for j in 0..row {
            let t = basis[j][row].div_euclid(d);
            if t != 0 {
                for r in row..n {
                    basis[j][r] -= t * basis[row][r];
                }
            }
            // Rows below may have left [0, q); renormalize via q * e_r.
            for r in row + 1..n {
                basis[j][r] = reduce(basis[j][r]);
            }
        }
    }
    basis
}

fn mod_inverse(a: i64, q: i64) -> i64 {
    // Extended Euclid; a in (0, q), q prime.
    let (mut old_r, mut r) = (a, q);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(q)
}

/// Solves B c = v for integer c with B lower triangular (columns of `basis`);
/// returns None when v is outside the lattice. Exact in big integers.
pub fn solve_triangular(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<BigInt>> {
    let n = basis.len();
    let mut rem: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let d = BigInt::from(basis[i][i]);
        let (quot, r) = (rem[i].clone() / &d, rem[i].clone() % &d);
        if !r.is_zero() {
            return None;
        }
        for row in i..n {
            let t = &quot * BigInt::from(basis[i][row]);
            rem[row] = &rem[row] - t;
        }
        coeffs.push(quot);
    }
    if rem.iter().all(|x| x.is_zero() || x.abs().is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_empty_generators_is_q_identity() {
        let b = column_hnf_mod_q(3, 5, &[]);
        for (i, col) in b.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                assert_eq!(v, if r == i { 5 } else { 0 });
            }
        }
    }

    #[test]
    fn hnf_is_lower_triangular_and_reduced() {
        let cols = vec![vec![1, 2, 3, 4], vec![0, 1, 4, 2]];
        let b = column_hnf_mod_q(4, 5, &cols);
        for (i, col) in b.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                if r < i {
                    assert_eq!(v, 0);
                }
            }
            assert!(col[i] > 0);
        }
        for row in 0..4 {
            for j in 0..row {
                assert!(b[j][row] >= 0 && b[j][row] < b[row][row]);
            }
        }
    }

    #[test]
    fn triangular_solve_detects_membership() {
        let cols = vec![vec![1, 2, 0]];
        let b = column_hnf_mod_q(3, 7, &cols);
        // (1, 2, 0) itself is in the span
        assert!(solve_triangular(&b, &[1, 2, 0]).is_some());
        assert!(solve_triangular(&b, &[7, 0, 0]).is_some());
        assert!(solve_triangular(&b, &[0, 1, 0]).is_none());
    }
}
