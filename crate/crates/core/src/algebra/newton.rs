//! Newton's identities between power sums and elementary symmetric
//! functions over F_q, valid while the index stays below the characteristic.

use crate::algebra::PrimeModulus;
use crate::error::{Error, Result};

/// Given power sums p_1, ..., p_m (at least m of them), returns the
/// elementary symmetric functions e_1, ..., e_m via Newton's identity
/// j * e_j = sum_{i=1}^{j} (-1)^(i-1) e_{j-i} p_i. Requires m < q so the
/// divisions by 1..m are invertible.
pub fn power_sums_to_elementary(q: PrimeModulus, p: &[u64], m: usize) -> Result<Vec<u64>> {
    if p.len() < m {
        return Err(Error::usage(format!(
            "need {m} power sums, got {}",
            p.len()
        )));
    }
    if m as u64 >= q.get() {
        return Err(Error::domain(format!(
            "index {m} reaches the characteristic {}; division by j is not invertible",
            q.get()
        )));
    }
    debug_assert!(p.iter().all(|&v| v < q.get()));
    let mut e = vec![0u64; m + 1];
    e[0] = 1;
    for j in 1..=m {
        let mut acc = 0u64;
        for i in 1..=j {
            let term = q.mul(e[j - i], p[i - 1]);
            if i % 2 == 1 {
                acc = q.add(acc, term);
            } else {
                acc = q.sub(acc, term);
            }
        }
        e[j] = q.mul(acc, q.inv(j as u64)?);
    }
    Ok(e[1..].to_vec())
}

/// The inverse direction: power sums p_1, ..., p_m from elementary
/// symmetric functions e_1, ..., e_m, by the same recurrence solved for p_j.
pub fn elementary_to_power_sums(q: PrimeModulus, e: &[u64], m: usize) -> Result<Vec<u64>> {
    if e.len() < m {
        return Err(Error::usage(format!(
            "need {m} elementary symmetric functions, got {}",
            e.len()
        )));
    }
    debug_assert!(e.iter().all(|&v| v < q.get()));
    let mut p = vec![0u64; m + 1];
    for j in 1..=m {
        // p_j = sum_{i=1}^{j-1} (-1)^(i-1) e_i p_{j-i} + (-1)^(j-1) j e_j
        let mut acc = 0u64;
        for i in 1..=j - 1 {
            let term = q.mul(e[i - 1], p[j - i]);
            if i % 2 == 1 {
                acc = q.add(acc, term);
            } else {
                acc = q.sub(acc, term);
            }
        }
        let last = q.mul(q.reduce(j as i64), e[j - 1]);
        if j % 2 == 1 {
            acc = q.add(acc, last);
        } else {
            acc = q.sub(acc, last);
        }
        p[j] = acc;
    }
    Ok(p[1..].to_vec())
}

/// Power sums p_1, ..., p_m of a multiset of field values.
pub fn power_sums_of_multiset(q: PrimeModulus, multiset: &[(u64, u64)], m: usize) -> Vec<u64> {
    (1..=m as u64)
        .map(|j| {
            multiset.iter().fold(0u64, |acc, &(a, mult)| {
                q.add(acc, q.mul(q.reduce(mult as i64), q.pow(a, j)))
            })
        })
        .collect()
}

/// Elementary symmetric functions e_1, ..., e_m of a multiset, by direct
/// expansion of the product of linear factors.
pub fn elementary_of_multiset(q: PrimeModulus, multiset: &[(u64, u64)], m: usize) -> Vec<u64> {
    // e_j of the roots are +/- the coefficients of prod (t - a)^mult.
    let mut coeffs = vec![1u64]; // monic, lowest degree at the END here
    for &(a, mult) in multiset {
        for _ in 0..mult {
            // multiply by (t - a): coeffs are highest-first
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i] = q.add(next[i], c);
                next[i + 1] = q.sub(next[i + 1], q.mul(c, a));
            }
            coeffs = next;
        }
    }
    // coeff of t^(n-j) is (-1)^j e_j
    (1..=m)
        .map(|j| {
            let c = coeffs.get(j).copied().unwrap_or(0);
            if j % 2 == 1 {
                q.neg(c)
            } else {
                c
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    #[test]
    fn worked_example_over_f7() {
        // p = (3, 5): e1 = 3, e2 = (p1^2 - p2)/2 = (9 - 5)/2 = 2
        assert_eq!(power_sums_to_elementary(q(7), &[3, 5], 2).unwrap(), vec![3, 2]);
    }

    #[test]
    fn zero_power_sums_give_zero_elementaries() {
        assert_eq!(
            power_sums_to_elementary(q(11), &[0, 0, 0], 3).unwrap(),
            vec![0, 0, 0]
        );
    }

    #[test]
    fn multiset_2_3_5_over_f11() {
        // (t-2)(t-3)(t-5) expands to t^3 - 10t^2 + 31t - 30
        let ms = [(2u64, 1u64), (3, 1), (5, 1)];
        let p = power_sums_of_multiset(q(11), &ms, 3);
        let e = power_sums_to_elementary(q(11), &p, 3).unwrap();
        assert_eq!(e, vec![10, 31 % 11, 30 % 11]);
        assert_eq!(e, elementary_of_multiset(q(11), &ms, 3));
    }

    #[test]
    fn characteristic_obstruction() {
        assert!(power_sums_to_elementary(q(5), &[1, 2, 3, 4, 0], 5).is_err());
    }

    #[test]
    fn roundtrip_both_ways() {
        let f = q(13);
        let ms = [(1u64, 2u64), (4, 1), (9, 3)];
        let m = 6;
        let p = power_sums_of_multiset(f, &ms, m);
        let e = power_sums_to_elementary(f, &p, m).unwrap();
        assert_eq!(e, elementary_of_multiset(f, &ms, m));
        assert_eq!(elementary_to_power_sums(f, &e, m).unwrap(), p);
    }
}
