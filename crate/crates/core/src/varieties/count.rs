//! Exact counting engines for power-sum systems: a dynamic program over
//! the partial-syndrome state space for tuples, and a take/skip scan over
//! the field elements for distinct-coordinate solutions and subsets.

use std::collections::BTreeSet;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::{ExtensionField, PrimeModulus};
use crate::budget::Budgets;
use crate::error::{Error, Result};

/// The arithmetic a counting engine needs, over F_q or F_{q^e}. Elements
/// are indices in [0, order).
pub trait CountingField: Sync {
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn sub(&self, a: u64, b: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn inv(&self, a: u64) -> Result<u64>;
    /// Embeds a base-field value in [0, q).
    fn embed_base(&self, a: u64) -> u64;

    /// a^e with 0^0 = 1.
    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.embed_base(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl CountingField for PrimeModulus {
    fn order(&self) -> u64 {
        self.get()
    }
    fn characteristic(&self) -> u64 {
        self.get()
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        PrimeModulus::add(*self, a, b)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        PrimeModulus::sub(*self, a, b)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        PrimeModulus::mul(*self, a, b)
    }
    fn inv(&self, a: u64) -> Result<u64> {
        PrimeModulus::inv(*self, a)
    }
    fn embed_base(&self, a: u64) -> u64 {
        a
    }
}

impl CountingField for ExtensionField {
    fn order(&self) -> u64 {
        ExtensionField::order(self)
    }
    fn characteristic(&self) -> u64 {
        self.base().get()
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        ExtensionField::add(self, a, b)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        ExtensionField::sub(self, a, b)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        ExtensionField::mul(self, a, b)
    }
    fn inv(&self, a: u64) -> Result<u64> {
        ExtensionField::inv(self, a)
    }
    fn embed_base(&self, a: u64) -> u64 {
        ExtensionField::embed(self, a)
    }
}

/// Packed partial-syndrome state: k-1 coordinates in radix `order`.
#[derive(Clone, Copy)]
pub(crate) struct StateSpace {
    pub order: u64,
    pub coords: usize,
    pub size: u64,
}

impl StateSpace {
    pub fn new(order: u64, coords: usize, budgets: &Budgets) -> Result<Self> {
        let mut size: u128 = 1;
        for _ in 0..coords {
            size = size.saturating_mul(order as u128);
        }
        if size > budgets.max_dp_states as u128 {
            return Err(Error::capacity(
                format!("DP state space {order}^{coords}"),
                size,
                budgets.max_dp_states as u128,
            ));
        }
        Ok(StateSpace {
            order,
            coords,
            size: size as u64,
        })
    }

    pub fn pack(&self, coords: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in coords.iter().rev() {
            idx = idx * self.order + c;
        }
        idx
    }

    /// Adds `delta` coordinatewise (field addition per coordinate).
    pub fn add<F: CountingField + ?Sized>(&self, f: &F, idx: u64, delta: &[u64]) -> u64 {
        let mut rem = idx;
        let mut out = 0u64;
        let mut stride = 1u64;
        for &d in delta.iter() {
            let c = rem % self.order;
            rem /= self.order;
            out += f.add(c, d) * stride;
            stride *= self.order;
        }
        out
    }
}

/// Counting table over the packed state space, dense or sparse by size.
enum Table {
    Dense(Vec<u128>),
    Sparse(HashMap<u64, u128>),
}

impl Table {
    fn new(space: &StateSpace, budgets: &Budgets) -> Table {
        if space.size <= budgets.dense_states {
            Table::Dense(vec![0u128; space.size as usize])
        } else {
            Table::Sparse(HashMap::new())
        }
    }

    fn add(&mut self, idx: u64, v: u128) -> Result<()> {
        let slot: &mut u128 = match self {
            Table::Dense(t) => &mut t[idx as usize],
            Table::Sparse(t) => t.entry(idx).or_insert(0),
        };
        *slot = slot
            .checked_add(v)
            .ok_or_else(|| Error::capacity("count accumulator", u128::MAX, u128::MAX))?;
        Ok(())
    }

    fn get(&self, idx: u64) -> u128 {
        match self {
            Table::Dense(t) => t[idx as usize],
            Table::Sparse(t) => t.get(&idx).copied().unwrap_or(0),
        }
    }

    fn iter(&self) -> Box<dyn Iterator<Item = (u64, u128)> + '_> {
        match self {
            Table::Dense(t) => Box::new(
                t.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(i, &v)| (i as u64, v)),
            ),
            Table::Sparse(t) => Box::new(t.iter().map(|(&i, &v)| (i, v))),
        }
    }
}

/// The power vector psi(x) = (x^1, ..., x^(k-1)) for every usable field
/// element, with an optional integer weight w (the doubled variable of a
/// hyperplane section contributes w = 2).
fn power_vectors<F: CountingField + ?Sized>(
    f: &F,
    k: usize,
    forbidden: &BTreeSet<u64>,
    weight: u64,
) -> Vec<(u64, Vec<u64>)> {
    let w = f.embed_base(weight % f.characteristic());
    (0..f.order())
        .filter(|x| !forbidden.contains(x))
        .map(|x| {
            let powers = (1..k as u64)
                .map(|j| f.mul(w, f.pow(x, j)))
                .collect::<Vec<_>>();
            (x, powers)
        })
        .collect()
}

/// Number of tuples in (F \ forbidden)^num_vars whose weighted power sums
/// hit `targets` (field indices, length k-1). The first variable carries
/// `first_weight`; all others weight 1.
pub(crate) fn dp_count_tuples<F: CountingField + ?Sized>(
    f: &F,
    k: usize,
    targets: &[u64],
    num_vars: usize,
    forbidden: &BTreeSet<u64>,
    first_weight: u64,
    budgets: &Budgets,
) -> Result<BigUint> {
    debug_assert_eq!(targets.len(), k - 1);
    let space = StateSpace::new(f.order(), k - 1, budgets)?;
    let unweighted = power_vectors(f, k, forbidden, 1);
    let mut table = Table::new(&space, budgets);
    if num_vars == 0 {
        // Empty product: the zero syndrome.
        table.add(0, 1)?;
    } else if first_weight == 1 {
        for (_, psi) in &unweighted {
            table.add(space.pack(psi), 1)?;
        }
    } else {
        for (_, psi) in &power_vectors(f, k, forbidden, first_weight) {
            table.add(space.pack(psi), 1)?;
        }
    }
    for _ in 1..num_vars.max(1) {
        let mut next = Table::new(&space, budgets);
        for (idx, v) in table.iter() {
            for (_, psi) in &unweighted {
                let nidx = space.add(f, idx, psi);
                match &mut next {
                    Table::Dense(t) => {
                        let slot = &mut t[nidx as usize];
                        *slot = slot.checked_add(v).ok_or_else(|| {
                            Error::capacity("count accumulator", u128::MAX, u128::MAX)
                        })?;
                    }
                    Table::Sparse(t) => {
                        let slot = t.entry(nidx).or_insert(0);
                        *slot = slot.checked_add(v).ok_or_else(|| {
                            Error::capacity("count accumulator", u128::MAX, u128::MAX)
                        })?;
                    }
                }
            }
        }
        table = next;
    }
    Ok(BigUint::from(table.get(space.pack(targets))))
}

/// Number of `size`-subsets of F \ forbidden whose power sums hit
/// `targets`: a take/skip scan over the field elements in canonical order.
/// Exact, with no inclusion-exclusion error.
pub(crate) fn count_subsets<F: CountingField + ?Sized>(
    f: &F,
    k: usize,
    targets: &[u64],
    size: usize,
    forbidden: &BTreeSet<u64>,
    budgets: &Budgets,
) -> Result<BigUint> {
    debug_assert_eq!(targets.len(), k - 1);
    let space = StateSpace::new(f.order(), k - 1, budgets)?;
    let vectors = power_vectors(f, k, forbidden, 1);
    if size > vectors.len() {
        return Ok(BigUint::zero()); // pigeonhole
    }
    // layers[t] counts t-subsets of the prefix scanned so far, per syndrome.
    let mut layers: Vec<Table> = (0..=size).map(|_| Table::new(&space, budgets)).collect();
    layers[0].add(0, 1)?;
    for (_, psi) in &vectors {
        for t in (1..=size).rev() {
            let updates: Vec<(u64, u128)> = layers[t - 1]
                .iter()
                .map(|(idx, v)| (space.add(f, idx, psi), v))
                .collect();
            for (idx, v) in updates {
                layers[t].add(idx, v)?;
            }
        }
    }
    Ok(BigUint::from(layers[size].get(space.pack(targets))))
}

/// Suffix tables for witness reconstruction: table[i][t][w] counts
/// t-subsets of the usable elements from position i on with syndrome w.
/// Counts saturate at u64::MAX; only positivity drives the walk.
pub(crate) struct SubsetWalker<'f> {
    f: &'f dyn CountingField,
    space: StateSpace,
    elements: Vec<(u64, Vec<u64>)>,
    size: usize,
    /// suffix[i] holds (size+1) layers of dense tables.
    suffix: Vec<Vec<Vec<u64>>>,
}

impl<'f> SubsetWalker<'f> {
    pub fn build(
        f: &'f dyn CountingField,
        k: usize,
        size: usize,
        forbidden: &BTreeSet<u64>,
        budgets: &Budgets,
    ) -> Result<Self> {
        let space = StateSpace::new(f.order(), k - 1, budgets)?;
        let elements = power_vectors(f, k, forbidden, 1);
        let entries = (elements.len() as u128 + 1)
            * (size as u128 + 1)
            * space.size as u128;
        if entries > budgets.max_table_entries as u128 {
            return Err(Error::capacity(
                "take/skip witness table",
                entries,
                budgets.max_table_entries as u128,
            ));
        }
        let n = elements.len();
        let mut suffix: Vec<Vec<Vec<u64>>> =
            vec![vec![vec![0u64; space.size as usize]; size + 1]; n + 1];
        suffix[n][0][0] = 1;
        for i in (0..n).rev() {
            let psi = elements[i].1.clone();
            for t in 0..=size {
                for w in 0..space.size {
                    let mut v = suffix[i + 1][t][w as usize]; // skip element i
                    if t > 0 {
                        let wt = space.add(f, w, &psi);
                        v = v.saturating_add(suffix[i + 1][t - 1][wt as usize]);
                    }
                    suffix[i][t][w as usize] = v;
                }
            }
        }
        Ok(SubsetWalker {
            f,
            space,
            elements,
            size,
            suffix,
        })
    }

    fn feasible(&self, i: usize, t: usize, w: u64) -> bool {
        self.suffix[i][t][w as usize] > 0
    }

    /// The lexicographically smallest subset with the target syndrome, if any.
    pub fn first_witness(&self, targets: &[u64]) -> Option<Vec<u64>> {
        let target = self.space.pack(targets);
        let mut w = 0u64;
        let mut t = self.size;
        let mut out = Vec::with_capacity(self.size);
        for i in 0..self.elements.len() {
            if t == 0 {
                break;
            }
            let (x, psi) = &self.elements[i];
            let wt = self.space.add(self.f, w, psi);
            // Take element i if a completion to the target exists. The
            // remaining syndrome needed is target - (w + psi); tables are
            // indexed by achieved syndrome, so compare against the shifted
            // target below.
            if self.completable(i + 1, t - 1, wt, target) {
                out.push(*x);
                w = wt;
                t -= 1;
            } else if !self.completable(i + 1, t, w, target) {
                return None;
            }
        }
        if t == 0 && w == target {
            Some(out)
        } else {
            None
        }
    }

    /// Enumerates every subset with the target syndrome in lexicographic
    /// order, visiting only feasible branches.
    pub fn enumerate(&self, targets: &[u64], budgets: &Budgets) -> Result<Vec<Vec<u64>>> {
        let target = self.space.pack(targets);
        let mut out = Vec::new();
        let mut cur: Vec<u64> = Vec::with_capacity(self.size);
        let mut nodes: u64 = 0;
        self.enumerate_rec(0, self.size, 0, target, &mut cur, &mut out, &mut nodes, budgets)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_rec(
        &self,
        i: usize,
        t: usize,
        w: u64,
        target: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        nodes: &mut u64,
        budgets: &Budgets,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > budgets.max_enum {
            return Err(Error::capacity(
                "subset enumeration nodes",
                *nodes as u128,
                budgets.max_enum as u128,
            ));
        }
        if t == 0 {
            if w == target {
                out.push(cur.clone());
            }
            return Ok(());
        }
        if i == self.elements.len() {
            return Ok(());
        }
        let (x, psi) = &self.elements[i];
        let wt = self.space.add(self.f, w, psi);
        if self.completable(i + 1, t - 1, wt, target) {
            cur.push(*x);
            self.enumerate_rec(i + 1, t - 1, wt, target, cur, out, nodes, budgets)?;
            cur.pop();
        }
        if self.completable(i + 1, t, w, target) {
            self.enumerate_rec(i + 1, t, w, target, cur, out, nodes, budgets)?;
        }
        Ok(())
    }

    /// True iff some t-subset of elements i.. adds up to target - w.
    fn completable(&self, i: usize, t: usize, w: u64, target: u64) -> bool {
        // needed = target - w, coordinatewise
        let mut need = Vec::with_capacity(self.space.coords);
        let (mut rem_t, mut rem_w) = (target, w);
        for _ in 0..self.space.coords {
            let ct = rem_t % self.space.order;
            let cw = rem_w % self.space.order;
            rem_t /= self.space.order;
            rem_w /= self.space.order;
            need.push(self.f.sub(ct, cw));
        }
        self.feasible(i, t, self.space.pack(&need))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    #[test]
    fn linear_system_counts() {
        // one equation (k = 2): q^(h-1) tuples for any target
        let b = Budgets::default();
        let f = q(7);
        let n = dp_count_tuples(&f, 2, &[3], 3, &BTreeSet::new(), 1, &b).unwrap();
        assert_eq!(n, BigUint::from(49u32));
        let n = dp_count_tuples(&f, 2, &[4], 1, &BTreeSet::new(), 1, &b).unwrap();
        assert_eq!(n, BigUint::from(1u32));
    }

    #[test]
    fn subset_counts_match_enumeration() {
        let b = Budgets::default();
        let f = q(7);
        // 3-subsets of F_7 with sum 3: {0,1,2},{0,4,6},{1,3,6},{1,4,5},{2,3,5}
        let n = count_subsets(&f, 2, &[3], 3, &BTreeSet::new(), &b).unwrap();
        assert_eq!(n, BigUint::from(5u32));
        let walker = SubsetWalker::build(&f, 2, 3, &BTreeSet::new(), &b).unwrap();
        let all = walker.enumerate(&[3], &b).unwrap();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 4, 6],
                vec![1, 3, 6],
                vec![1, 4, 5],
                vec![2, 3, 5]
            ]
        );
        assert_eq!(walker.first_witness(&[3]), Some(vec![0, 1, 2]));
    }

    #[test]
    fn pigeonhole_gives_zero() {
        let b = Budgets::default();
        let f = q(5);
        let forbidden: BTreeSet<u64> = [0u64, 1].into_iter().collect();
        let n = count_subsets(&f, 2, &[0], 4, &forbidden, &b).unwrap();
        assert_eq!(n, BigUint::zero());
    }

    #[test]
    fn forbidden_values_are_skipped() {
        let b = Budgets::default();
        let f = q(7);
        let forbidden: BTreeSet<u64> = [0u64].into_iter().collect();
        // 2-subsets of {1..6} with sum 3: {1,2},{4,6}
        let walker = SubsetWalker::build(&f, 2, 2, &forbidden, &b).unwrap();
        let all = walker.enumerate(&[3], &b).unwrap();
        assert_eq!(all, vec![vec![1, 2], vec![4, 6]]);
    }
}
