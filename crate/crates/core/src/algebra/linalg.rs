//! Gaussian elimination over F_q: rank and determinant, plus the
//! Vandermonde determinant by its product formula as an independent route.

use crate::algebra::PrimeModulus;

/// Row-echelon rank of a matrix over F_q.
pub fn fq_rank(q: PrimeModulus, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = q.inv(m[rank][col]).expect("pivot nonzero");
        for c in col..ncols {
            m[rank][c] = q.mul(m[rank][c], inv);
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..ncols {
                    let t = q.mul(f, m[rank][c]);
                    m[r][c] = q.sub(m[r][c], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix over F_q by elimination.
pub fn fq_det(q: PrimeModulus, rows: &[Vec<u64>]) -> u64 {
    let n = rows.len();
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            m.swap(col, piv);
            det = q.neg(det);
        }
        det = q.mul(det, m[col][col]);
        let inv = q.inv(m[col][col]).expect("pivot nonzero");
        for r in col + 1..n {
            if m[r][col] != 0 {
                let f = q.mul(m[r][col], inv);
                for c in col..n {
                    let t = q.mul(f, m[col][c]);
                    m[r][c] = q.sub(m[r][c], t);
                }
            }
        }
    }
    det
}

/// The k x k matrix of powers (row j holds a^j for each element a).
pub fn vandermonde_matrix(q: PrimeModulus, elems: &[u64]) -> Vec<Vec<u64>> {
    (0..elems.len())
        .map(|j| elems.iter().map(|&a| q.pow(a, j as u64)).collect())
        .collect()
}

/// Vandermonde determinant by the product formula prod_{i<j} (a_j - a_i).
pub fn vandermonde_det(q: PrimeModulus, elems: &[u64]) -> u64 {
    let mut det = 1u64;
    for j in 0..elems.len() {
        for i in 0..j {
            det = q.mul(det, q.sub(elems[j], elems[i]));
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    fn k_subsets(n: u64, k: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: u64, n: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    #[test]
    fn vandermonde_nonsingular_for_distinct_elements() {
        // two independent determinant routes agree and are nonzero,
        // for all k-subsets of F_q with q <= 13, k <= 4
        for qq in [5u64, 7, 11, 13] {
            let f = q(qq);
            for k in 1..=4usize {
                for subset in k_subsets(qq, k) {
                    let m = vandermonde_matrix(f, &subset);
                    let d1 = fq_det(f, &m);
                    let d2 = vandermonde_det(f, &subset);
                    assert_eq!(d1, d2, "q={qq} subset={subset:?}");
                    assert_ne!(d1, 0, "q={qq} subset={subset:?}");
                    assert_eq!(fq_rank(f, &m), k);
                }
            }
        }
    }

    #[test]
    fn rank_of_singular_matrix() {
        let f = q(7);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 0]];
        assert_eq!(fq_rank(f, &rows), 2);
        assert_eq!(fq_det(f, &rows), 0);
    }
}
