//! Exact point counts for quadratic equations over odd-order fields, used
//! when a two-equation power-sum system (k = 3) is out of reach for the
//! syndrome DP: after eliminating the linear equation the variety is a
//! quadric, and affine quadric counts have classical closed forms.
//!
//! The route is independent of the DP and cross-checked against it (and
//! against naive enumeration) in the test suite.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::varieties::count::CountingField;

/// Quadratic character of `a`: 0 on zero, +1 on squares, -1 otherwise.
fn eta<F: CountingField + ?Sized>(f: &F, a: u64) -> i32 {
    if a == 0 {
        return 0;
    }
    if f.pow(a, (f.order() - 1) / 2) == f.embed_base(1) {
        1
    } else {
        -1
    }
}

/// Solutions of d_1 y_1^2 + ... + d_m y_m^2 = c (all d_i nonzero), by the
/// classical diagonal-form count over a field of odd order.
fn diagonal_count<F: CountingField + ?Sized>(f: &F, ds: &[u64], c: u64) -> BigUint {
    let m = ds.len();
    let qq = BigInt::from(f.order());
    if m == 0 {
        return if c == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let mut disc = f.embed_base(1);
    for &d in ds {
        disc = f.mul(disc, d);
    }
    let minus_one = f.sub(0, f.embed_base(1));
    let count: BigInt = if m % 2 == 0 {
        // q^(m-1) + v(c) q^(m/2-1) eta((-1)^(m/2) disc)
        let mut sign_disc = disc;
        if (m / 2) % 2 == 1 {
            sign_disc = f.mul(minus_one, sign_disc);
        }
        let chi = eta(f, sign_disc);
        let v: BigInt = if c == 0 {
            qq.clone() - 1
        } else {
            BigInt::from(-1)
        };
        qq.pow(m as u32 - 1) + v * chi * qq.pow(m as u32 / 2 - 1)
    } else {
        // q^(m-1) + q^((m-1)/2) eta((-1)^((m-1)/2) c disc)
        let mut arg = f.mul(c, disc);
        if ((m - 1) / 2) % 2 == 1 {
            arg = f.mul(minus_one, arg);
        }
        let chi = eta(f, arg);
        qq.pow(m as u32 - 1) + chi * qq.pow((m as u32 - 1) / 2)
    };
    count.to_biguint().expect("quadric count is nonnegative")
}

/// Exact number of solutions of x^T M x + b . x + c = 0 over the field,
/// for a symmetric matrix M. Diagonalizes by congruence substitutions
/// (odd characteristic), completes squares, and applies the diagonal
/// closed form.
pub(crate) fn count_quadratic<F: CountingField + ?Sized>(
    f: &F,
    mut m: Vec<Vec<u64>>,
    mut b: Vec<u64>,
    mut c: u64,
) -> Result<BigUint> {
    let n = m.len();
    if f.characteristic() == 2 {
        return Err(Error::usage(
            "quadric counting requires odd characteristic".to_string(),
        ));
    }
    if n == 0 {
        return Ok(if c == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    debug_assert!(m.iter().all(|r| r.len() == n) && b.len() == n);

    // x = S y substitution: M <- S^T M S, b <- S^T b. S differs from the
    // identity in a single off-diagonal entry, so the updates are rank-one.
    // x_row picks up factor * y_col.
    let apply = |m: &mut Vec<Vec<u64>>, b: &mut Vec<u64>, row: usize, col: usize, factor: u64| {
        // column update: M[:, col] += factor * M[:, row] ... via congruence
        // S = I + factor * E_{row, col}; S^T M S updates both row and col.
        let n = m.len();
        for i in 0..n {
            let t = f.mul(factor, m[i][row]);
            m[i][col] = f.add(m[i][col], t);
        }
        for j in 0..n {
            let t = f.mul(factor, m[row][j]);
            m[col][j] = f.add(m[col][j], t);
        }
        let t = f.mul(factor, b[row]);
        b[col] = f.add(b[col], t);
    };

    let mut active: Vec<usize> = (0..n).collect();
    let mut ds: Vec<u64> = Vec::new();
    let two = f.embed_base(2 % f.characteristic());
    let four = f.mul(two, two);
    loop {
        if active.is_empty() {
            break;
        }
        let pivot = active.iter().copied().find(|&i| m[i][i] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // Look for a cross term to pull onto the diagonal:
                // x_j = y_j + y_i turns 2 M[i][j] x_i x_j into a y_i^2 term.
                let mut pair = None;
                'outer: for &i in &active {
                    for &j in &active {
                        if i != j && m[i][j] != 0 {
                            pair = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match pair {
                    None => break, // no quadratic part left on active vars
                    Some((i, j)) => {
                        apply(&mut m, &mut b, j, i, f.embed_base(1));
                        continue;
                    }
                }
            }
        };
        let d = m[pivot][pivot];
        let dinv = f.inv(d)?;
        // Clear cross terms with every other active variable.
        for &j in active.clone().iter() {
            if j != pivot && m[pivot][j] != 0 {
                let factor = f.sub(0, f.mul(m[pivot][j], dinv));
                apply(&mut m, &mut b, pivot, j, factor);
            }
        }
        // Complete the square: d y^2 + beta y = d z^2 - beta^2 / (4 d).
        let beta = b[pivot];
        if beta != 0 {
            let shift = f.mul(f.mul(beta, beta), f.inv(f.mul(four, d))?);
            c = f.sub(c, shift);
            b[pivot] = 0;
        }
        ds.push(d);
        active.retain(|&i| i != pivot);
    }

    // Remaining active variables carry no quadratic terms. A nonzero linear
    // coefficient among them makes the count q^(n-1) outright.
    if active.iter().any(|&i| b[i] != 0) {
        return Ok(BigUint::from(f.order()).pow(n as u32 - 1));
    }
    let free = active.len() as u32;
    let minus_c = f.sub(0, c);
    Ok(BigUint::from(f.order()).pow(free) * diagonal_count(f, &ds, minus_c))
}

/// Count of tuples with prescribed first and second weighted power sums:
/// sum w_i x_i = s1, sum w_i x_i^2 = s2. Weights are small positive
/// integers (1 everywhere, or 2 on the first slot for a hyperplane
/// section) and the last weight must be 1 so the linear equation can be
/// eliminated.
pub(crate) fn count_power_sum_quadric<F: CountingField + ?Sized>(
    f: &F,
    weights: &[u64],
    s1: u64,
    s2: u64,
) -> Result<BigUint> {
    let vars = weights.len();
    debug_assert!(vars >= 1 && weights[vars - 1] == 1);
    let n = vars - 1;
    let w: Vec<u64> = weights
        .iter()
        .map(|&wi| f.embed_base(wi % f.characteristic()))
        .collect();
    if n == 0 {
        // single variable: x = s1 must satisfy s2 = s1^2
        return Ok(if f.mul(s1, s1) == s2 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    // Substitute x_last = s1 - sum w_i x_i into the quadratic equation:
    // sum w_i x_i^2 + (s1 - sum w_i x_i)^2 - s2 = 0.
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = if i == j {
                f.add(w[i], f.mul(w[i], w[i]))
            } else {
                f.mul(w[i], w[j])
            };
        }
    }
    let two_s1 = f.mul(f.embed_base(2 % f.characteristic()), s1);
    let b: Vec<u64> = (0..n).map(|i| f.sub(0, f.mul(two_s1, w[i]))).collect();
    let c = f.sub(f.mul(s1, s1), s2);
    count_quadratic(f, m, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExtensionField, PrimeModulus};
    use num_traits::ToPrimitive;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    fn brute_quadratic(qq: u64, m: &[Vec<u64>], b: &[u64], c: u64) -> u64 {
        let n = m.len();
        let mut count = 0u64;
        let mut x = vec![0u64; n];
        loop {
            let mut acc = c;
            for i in 0..n {
                for j in 0..n {
                    acc = (acc + m[i][j] * x[i] % qq * x[j]) % qq;
                }
                acc = (acc + b[i] * x[i]) % qq;
            }
            if acc % qq == 0 {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                x[i] += 1;
                if x[i] < qq {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_instances() {
        let mut lcg = 12345u64;
        let mut rnd = move |m: u64| {
            lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (lcg >> 33) % m
        };
        for qq in [3u64, 5, 7, 11] {
            let f = q(qq);
            for n in 1..=3usize {
                for _ in 0..15 {
                    let mut m = vec![vec![0u64; n]; n];
                    for i in 0..n {
                        m[i][i] = rnd(qq);
                        for j in i + 1..n {
                            let v = rnd(qq);
                            m[i][j] = v;
                            m[j][i] = v;
                        }
                    }
                    let b: Vec<u64> = (0..n).map(|_| rnd(qq)).collect();
                    let c = rnd(qq);
                    let got = count_quadratic(&f, m.clone(), b.clone(), c)
                        .unwrap()
                        .to_u64()
                        .unwrap();
                    let want = brute_quadratic(qq, &m, &b, c);
                    assert_eq!(got, want, "q={qq} m={m:?} b={b:?} c={c}");
                }
            }
        }
    }

    #[test]
    fn power_sum_quadric_over_extension() {
        // over F_25: all-ones weights, 4 variables, targets embedded from F_5
        let f = ExtensionField::new(q(5), 2).unwrap();
        let got = count_power_sum_quadric(&f, &[1, 1, 1, 1], 1, 4).unwrap();
        // frozen by independent full enumeration over 25^4 tuples
        assert_eq!(got, BigUint::from(625u32));
    }

    #[test]
    fn doubled_weight_smoke() {
        // q=7: 2x + z = 3, 2x^2 + z^2 = s2; counts over x free: z = 3 - 2x,
        // equation 2x^2 + (3-2x)^2 = s2 is a univariate quadratic
        let f = q(7);
        let mut by_hand = vec![0u64; 7];
        for x in 0..7u64 {
            let z = (3 + 2 * 7 - 2 * x) % 7;
            let v = (2 * x * x + z * z) % 7;
            by_hand[v as usize] += 1;
        }
        for s2 in 0..7u64 {
            let got = count_power_sum_quadric(&f, &[2, 1], 3, s2)
                .unwrap()
                .to_u64()
                .unwrap();
            assert_eq!(got, by_hand[s2 as usize], "s2={s2}");
        }
    }
}
