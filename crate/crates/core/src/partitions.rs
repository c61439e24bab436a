//! Box-constrained partitions and strict partitions.
//!
//! Partitions are stored in canonical form: positive parts, weakly
//! decreasing. The empty partition is the unique partition of weight 0.
//! Enumerations are returned in lexicographic-descending order, so `(2)`
//! comes before `(1,1)`.
//!
//! Counting helpers return [`BigUint`] so weights in the hundreds are safe.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

/// Bounds on the largest part and on the number of parts.
///
/// `max_length == None` means the number of parts is unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxConstraint {
    pub max_part: u32,
    pub max_length: Option<usize>,
}

impl BoxConstraint {
    pub fn new(max_part: u32, max_length: usize) -> Self {
        BoxConstraint { max_part, max_length: Some(max_length) }
    }

    pub fn unbounded_length(max_part: u32) -> Self {
        BoxConstraint { max_part, max_length: None }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.largest() <= self.max_part && self.max_length.is_none_or(|l| p.len() <= l)
    }

    /// The transposed box (rows and columns swapped). Only defined for a
    /// bounded length.
    pub fn transposed(&self) -> Option<BoxConstraint> {
        let l = self.max_length?;
        Some(BoxConstraint { max_part: l as u32, max_length: Some(self.max_part as usize) })
    }
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    /// Trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return invalid(format!("partition {parts:?} has an interior zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into canonical order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Parts padded with zeros (or truncated) to exactly `size` entries.
    pub fn padded(&self, size: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(size, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.largest() as usize;
        let parts = (1..=n as u32)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("strict partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return invalid(format!("{parts:?} is not strictly decreasing"));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn to_partition(&self) -> Partition {
        Partition(self.0.clone())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = crate::Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = crate::Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "∅");
    }
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// All partitions of `q` fitting in `bx`, lexicographic-descending.
pub fn enumerate_box_partitions(q: u32, bx: BoxConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_box(q, bx.max_part, bx.max_length.unwrap_or(usize::MAX), &mut cur, &mut out);
    out
}

fn fill_box(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if slots == 0 || max_part == 0 {
        return;
    }
    // Prune: even using max_part in every slot cannot reach `rest`.
    if (max_part as u64) * (slots.min(rest as usize) as u64) < rest as u64 {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill_box(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// All strict partitions of `q` with largest part at most `max_part`,
/// lexicographic-descending.
pub fn enumerate_strict_partitions(q: u32, max_part: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_strict(q, max_part, &mut cur, &mut out);
    out
}

fn fill_strict(rest: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if rest == 0 {
        out.push(StrictPartition(cur.clone()));
        return;
    }
    // 1 + 2 + ... + max_part is the most we can still add.
    if (max_part as u64) * (max_part as u64 + 1) / 2 < rest as u64 {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill_strict(rest - p, p - 1, cur, out);
        cur.pop();
    }
}

/// Number of partitions in the box, by weight, for weights `0..=up_to`.
///
/// Computed by dynamic programming over the number of parts, independent of
/// the enumerators above.
pub fn box_partition_counts(bx: BoxConstraint, up_to: u32) -> Vec<BigUint> {
    let n = up_to as usize;
    let max_len = bx.max_length.unwrap_or(n).min(n);
    // P(w; k, l) = P(w; k-1, l) + P(w-k; k, l-1), updated in place over k.
    let k_max = (bx.max_part as usize).min(n);
    let mut tab: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n + 1]; max_len + 1];
    for row in tab.iter_mut() {
        row[0] = BigUint::one();
    }
    for k in 1..=k_max {
        for l in 1..=max_len {
            for w in k..=n {
                let add = tab[l - 1][w - k].clone();
                tab[l][w] += add;
            }
        }
    }
    tab[max_len].clone()
}

/// Number of strict partitions with parts at most `max_part`, by weight.
pub fn strict_partition_counts(max_part: u32, up_to: u32) -> Vec<BigUint> {
    let n = up_to as usize;
    let mut tab = vec![BigUint::zero(); n + 1];
    tab[0] = BigUint::one();
    for k in 1..=(max_part as usize).min(n) {
        for w in (k..=n).rev() {
            let add = tab[w - k].clone();
            tab[w] += add;
        }
    }
    tab
}

pub fn count_box_partitions(q: u32, bx: BoxConstraint) -> BigUint {
    box_partition_counts(bx, q).pop().unwrap_or_default()
}

pub fn count_strict_partitions(q: u32, max_part: u32) -> BigUint {
    strict_partition_counts(max_part, q).pop().unwrap_or_default()
}

/// Rearranges two copies of every part of `lambda` together with the parts of
/// `mu` into a weakly decreasing sequence.
pub fn merge_doubled(lambda: &Partition, mu: &StrictPartition) -> Partition {
    let mut parts: Vec<u32> = Vec::with_capacity(2 * lambda.len() + mu.len());
    for &p in lambda.parts() {
        parts.push(p);
        parts.push(p);
    }
    parts.extend_from_slice(mu.parts());
    Partition::from_unsorted(parts)
}

/// Inverse of [`merge_doubled`]: parts of odd multiplicity go to the strict
/// partition, half of every multiplicity (rounded down) to the partition.
pub fn split_doubled(nu: &Partition) -> (StrictPartition, Partition) {
    let mut mu = Vec::new();
    let mut lambda = Vec::new();
    for (part, mult) in nu.multiplicities() {
        if mult % 2 == 1 {
            mu.push(part);
        }
        lambda.extend(std::iter::repeat_n(part, mult / 2));
    }
    (StrictPartition(mu), Partition(lambda))
}

/// One weight of the doubling identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingRow {
    pub weight: u32,
    /// Card P(q'') with parts at most r.
    #[serde(serialize_with = "crate::serde_util::biguint_as_string")]
    pub partitions: BigUint,
    /// Σ_{q + 2q' = q''} Card S(q) · Card P(q').
    #[serde(serialize_with = "crate::serde_util::biguint_as_string")]
    pub convolution: BigUint,
    pub pairs_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingReport {
    pub q_max: u32,
    pub max_part: u32,
    pub rows: Vec<DoublingRow>,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Checks the counting identity behind the doubling bijection for every
/// weight up to `q_max`, and that split/merge are mutually inverse on every
/// enumerated pair and partition.
pub fn verify_doubling_bijection(q_max: u32, r: u32) -> DoublingReport {
    let p_counts = box_partition_counts(BoxConstraint::unbounded_length(r), q_max);
    let s_counts = strict_partition_counts(r, q_max);
    let mut rows = Vec::new();
    let mut counterexample = None;

    for q2 in 0..=q_max {
        let mut conv = BigUint::zero();
        let mut pairs = 0usize;
        for qp in 0..=q2 / 2 {
            let q = q2 - 2 * qp;
            conv += &s_counts[q as usize] * &p_counts[qp as usize];

            for mu in enumerate_strict_partitions(q, r) {
                for lambda in enumerate_box_partitions(qp, BoxConstraint::unbounded_length(r)) {
                    pairs += 1;
                    let nu = merge_doubled(&lambda, &mu);
                    let back = split_doubled(&nu);
                    if counterexample.is_none()
                        && (nu.weight() != q2 || nu.largest() > r || back != (mu.clone(), lambda.clone()))
                    {
                        counterexample = Some(format!(
                            "pair (mu={mu}, lambda={lambda}) -> {nu} -> ({}, {})",
                            back.0, back.1
                        ));
                    }
                }
            }
        }
        if counterexample.is_none() {
            for nu in enumerate_box_partitions(q2, BoxConstraint::unbounded_length(r)) {
                let (mu, lambda) = split_doubled(&nu);
                if merge_doubled(&lambda, &mu) != nu || mu.largest() > r {
                    counterexample = Some(format!("partition {nu} does not survive split/merge"));
                    break;
                }
            }
        }
        let lhs = p_counts[q2 as usize].clone();
        if counterexample.is_none() && lhs != conv {
            counterexample = Some(format!("weight {q2}: Card P = {lhs} but convolution = {conv}"));
        }
        rows.push(DoublingRow { weight: q2, partitions: lhs, convolution: conv, pairs_checked: pairs });
    }

    DoublingReport { q_max, max_part: r, rows, passed: counterexample.is_none(), counterexample }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    /// Brute force: every weakly decreasing vector of the right length,
    /// generated by counting through all vectors with entries in 0..=max_part.
    fn brute_box(q: u32, max_part: u32, max_len: usize) -> Vec<Vec<u32>> {
        let base = max_part as usize + 1;
        let total = base.pow(max_len as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(max_len);
            for _ in 0..max_len {
                v.push((c % base) as u32);
                c /= base;
            }
            if v.windows(2).all(|w| w[0] >= w[1]) && v.iter().sum::<u32>() == q {
                v.retain(|&x| x > 0);
                out.push(v);
            }
        }
        out.sort();
        out
    }

    fn brute_strict(q: u32, max_part: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << max_part) {
            let v: Vec<u32> = (1..=max_part).rev().filter(|i| mask & (1 << (i - 1)) != 0).collect();
            if v.iter().sum::<u32>() == q {
                out.push(v);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn box_examples() {
        assert_eq!(enumerate_box_partitions(0, BoxConstraint::new(3, 0)), vec![Partition::empty()]);
        assert_eq!(enumerate_box_partitions(2, BoxConstraint::new(2, 2)), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_box_partitions(3, BoxConstraint::unbounded_length(1)), vec![p(&[1, 1, 1])]);
    }

    #[test]
    fn strict_examples() {
        assert_eq!(enumerate_strict_partitions(0, 5), vec![StrictPartition::empty()]);
        assert_eq!(enumerate_strict_partitions(3, 3), vec![s(&[3]), s(&[2, 1])]);
        assert_eq!(enumerate_strict_partitions(3, 2), vec![s(&[2, 1])]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for max_part in 0..=4 {
            for max_len in 0..=4 {
                for q in 0..=10 {
                    let mut got: Vec<Vec<u32>> = enumerate_box_partitions(q, BoxConstraint::new(max_part, max_len))
                        .into_iter()
                        .map(Vec::from)
                        .collect();
                    got.sort();
                    assert_eq!(got, brute_box(q, max_part, max_len), "q={q} box {max_part}x{max_len}");
                    let count = count_box_partitions(q, BoxConstraint::new(max_part, max_len));
                    assert_eq!(count, BigUint::from(got.len()));
                }
            }
        }
        for r in 0..=7 {
            for q in 0..=20 {
                let mut got: Vec<Vec<u32>> = enumerate_strict_partitions(q, r).into_iter().map(Vec::from).collect();
                got.sort();
                assert_eq!(got, brute_strict(q, r));
                assert_eq!(count_strict_partitions(q, r), BigUint::from(got.len()));
            }
        }
    }

    #[test]
    fn order_is_lex_descending() {
        let all = enumerate_box_partitions(6, BoxConstraint::unbounded_length(6));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(all.len(), 11);
    }

    #[test]
    fn merge_and_split_examples() {
        assert_eq!(merge_doubled(&p(&[3, 2]), &s(&[3, 1])), p(&[3, 3, 3, 2, 2, 1]));
        assert_eq!(merge_doubled(&Partition::empty(), &StrictPartition::empty()), Partition::empty());
        assert_eq!(merge_doubled(&p(&[1]), &s(&[2])), p(&[2, 1, 1]));

        assert_eq!(split_doubled(&p(&[3, 3, 3, 2, 2, 1])), (s(&[3, 1]), p(&[3, 2])));
        assert_eq!(split_doubled(&Partition::empty()), (StrictPartition::empty(), Partition::empty()));
        assert_eq!(split_doubled(&p(&[2, 2, 2, 2])), (StrictPartition::empty(), p(&[2, 2])));
    }

    #[test]
    fn doubling_examples() {
        let rep = verify_doubling_bijection(0, 3);
        assert!(rep.passed);
        assert_eq!(rep.rows[0].partitions, BigUint::one());

        let rep = verify_doubling_bijection(4, 2);
        assert!(rep.passed, "{:?}", rep.counterexample);
        assert_eq!(rep.rows[4].partitions, BigUint::from(3u32));
        assert_eq!(rep.rows[4].convolution, BigUint::from(3u32));
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1, 1])).unwrap(), "[3,1,1]");
    }

    #[test]
    fn large_weights_do_not_overflow() {
        // p(300), any number of parts: 9253082936723602
        let c = count_box_partitions(300, BoxConstraint::unbounded_length(300));
        assert_eq!(c.to_string(), "9253082936723602");
        let c = count_box_partitions(500, BoxConstraint::unbounded_length(500));
        assert_eq!(c.to_string(), "2300165032574323995027");
    }
}
