//! Set partitions of explicit ground sets, with lattice operations and the
//! Möbius function of the partition lattice.
//!
//! Partitions are ordered by refinement: `u ⪯ v` when every block of `u`
//! lies inside a block of `v`. Join and meet are the usual lattice
//! operations; the Möbius function on an interval `[u, v]` factorizes over
//! the blocks of `v`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::ratio::{rat, Int, Rat};
use crate::{Error, Result};

/// A set partition of an explicit ground set of integers.
///
/// Blocks are stored sorted internally and sorted by least element, so equal
/// partitions compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: Vec<i64>,
    /// `block_of[i]` is the block index of `ground[i]`.
    block_of: Vec<usize>,
    blocks: Vec<Vec<i64>>,
}

/// JSON form of a set partition: the blocks alone (the ground is their union).
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<i64>>,
}

impl SetPartition {
    /// Build from blocks; they must be disjoint, non-empty, and cover their
    /// union exactly.
    pub fn from_blocks(blocks: &[Vec<i64>]) -> Result<SetPartition> {
        let mut ground: Vec<i64> = blocks.iter().flatten().copied().collect();
        let total = ground.len();
        ground.sort_unstable();
        ground.dedup();
        if ground.len() != total {
            return Err(Error::BadBlocks("blocks overlap".into()));
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::BadBlocks("empty block".into()));
        }
        let mut blocks: Vec<Vec<i64>> = blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let mut block_of = vec![0usize; ground.len()];
        for (bi, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[ground.binary_search(&x).unwrap()] = bi;
            }
        }
        Ok(SetPartition {
            ground,
            block_of,
            blocks,
        })
    }

    /// The discrete partition (all singletons) — the lattice minimum `0`.
    pub fn singletons(ground: &[i64]) -> SetPartition {
        SetPartition::from_blocks(&ground.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    /// The one-block partition — the lattice maximum `1`.
    pub fn full(ground: &[i64]) -> SetPartition {
        SetPartition::from_blocks(&[ground.to_vec()]).unwrap()
    }

    /// Build from a block-index labelling of `ground`.
    fn from_labels(ground: &[i64], labels: &[usize]) -> SetPartition {
        let mut by_label: HashMap<usize, Vec<i64>> = HashMap::new();
        for (&x, &l) in ground.iter().zip(labels) {
            by_label.entry(l).or_default().push(x);
        }
        let blocks: Vec<Vec<i64>> = by_label.into_values().collect();
        SetPartition::from_blocks(&blocks).unwrap()
    }

    /// The ordered ground set.
    pub fn ground(&self) -> &[i64] {
        &self.ground
    }

    /// Blocks, each sorted, ordered by least element.
    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    /// Number of blocks — `#(𝒰)`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Ground-set size.
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    /// True when the ground set is empty.
    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// The block containing `x`.
    pub fn block_containing(&self, x: i64) -> Result<&[i64]> {
        let i = self
            .ground
            .binary_search(&x)
            .map_err(|_| Error::NotASubset(format!("{x}")))?;
        Ok(&self.blocks[self.block_of[i]])
    }

    /// True if `x` and `y` lie in the same block.
    pub fn same_block(&self, x: i64, y: i64) -> bool {
        let xi = self.ground.binary_search(&x).expect("x outside ground");
        let yi = self.ground.binary_search(&y).expect("y outside ground");
        self.block_of[xi] == self.block_of[yi]
    }

    /// Refinement order: true when every block of `self` is inside a block
    /// of `other`.
    pub fn leq(&self, other: &SetPartition) -> bool {
        assert_eq!(self.ground, other.ground, "leq requires equal grounds");
        self.blocks.iter().all(|b| {
            let target = other.block_of[other.ground.binary_search(&b[0]).unwrap()];
            b.iter()
                .all(|&x| other.block_of[other.ground.binary_search(&x).unwrap()] == target)
        })
    }

    /// Join (least common coarsening) via union-find on block labels.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.ground, other.ground, "join requires equal grounds");
        let n = self.ground.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for part in [self, other] {
            let mut first_of_block: HashMap<usize, usize> = HashMap::new();
            for i in 0..n {
                match first_of_block.entry(part.block_of[i]) {
                    std::collections::hash_map::Entry::Occupied(e) => {
                        let a = find(&mut parent, *e.get());
                        let b = find(&mut parent, i);
                        parent[a] = b;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(i);
                    }
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        SetPartition::from_labels(&self.ground, &labels)
    }

    /// Meet (greatest common refinement): blocks are pairwise intersections.
    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.ground, other.ground, "meet requires equal grounds");
        let n = self.ground.len();
        let mut key_label: HashMap<(usize, usize), usize> = HashMap::new();
        let mut labels = vec![0usize; n];
        for i in 0..n {
            let key = (self.block_of[i], other.block_of[i]);
            let next = key_label.len();
            labels[i] = *key_label.entry(key).or_insert(next);
        }
        SetPartition::from_labels(&self.ground, &labels)
    }

    /// Restriction `𝒰|_J` to a subset of the ground set.
    pub fn restrict(&self, j: &[i64]) -> Result<SetPartition> {
        let mut js = j.to_vec();
        js.sort_unstable();
        js.dedup();
        for &x in &js {
            if self.ground.binary_search(&x).is_err() {
                return Err(Error::NotASubset(format!("{x}")));
            }
        }
        let labels: Vec<usize> = js
            .iter()
            .map(|&x| self.block_of[self.ground.binary_search(&x).unwrap()])
            .collect();
        Ok(SetPartition::from_labels(&js, &labels))
    }

    /// JSON form.
    pub fn to_json(&self) -> PartitionJson {
        PartitionJson {
            blocks: self.blocks.clone(),
        }
    }

    /// Rebuild from the JSON form.
    pub fn from_json(j: &PartitionJson) -> Result<SetPartition> {
        SetPartition::from_blocks(&j.blocks)
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (bi, b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (k, x) in b.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetPartition{self}")
    }
}

/// Möbius function of the partition lattice on the interval `[u, v]`
/// (requires `u ⪯ v`): the product over blocks `V` of `v` of
/// `(−1)^(m−1) (m−1)!` where `m = #(u|_V)`.
pub fn mobius_partition(u: &SetPartition, v: &SetPartition) -> Rat {
    assert!(u.leq(v), "mobius_partition requires u ⪯ v");
    let mut m = Int::from(1);
    for block in v.blocks() {
        let parts = u.restrict(block).unwrap().num_blocks();
        let mut f = Int::from(1);
        for k in 1..parts {
            f *= Int::from(k as i64);
        }
        if (parts - 1) % 2 == 1 {
            f = -f;
        }
        m *= f;
    }
    Rat::from_integer(m)
}

/// Test whether `#(u) − #(u ∨ w) = #(u ∨ v) − #(u ∨ v ∨ w)`; the left side
/// never falls below the right. Used to carve out the partitions over which
/// joint-moment sums factorize.
pub fn in_gamma_set(u: &SetPartition, v: &SetPartition, w: &SetPartition) -> bool {
    let uv = u.join(v);
    let uw = u.join(w);
    let uvw = uv.join(w);
    let lhs = u.num_blocks() as i64 - uw.num_blocks() as i64;
    let rhs = uv.num_blocks() as i64 - uvw.num_blocks() as i64;
    debug_assert!(lhs >= rhs, "join defect inequality violated");
    lhs == rhs
}

/// All set partitions of `ground`, by restricted-growth enumeration.
pub fn enumerate_partitions(ground: &[i64]) -> Vec<SetPartition> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    g.dedup();
    let n = g.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetPartition::from_blocks(&[]).unwrap());
        return out;
    }
    // Restricted growth strings: labels[0] = 0, labels[i] ≤ 1 + max(prefix).
    let mut labels = vec![0usize; n];
    loop {
        out.push(SetPartition::from_labels(&g, &labels));
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let max_prefix = labels[..i].iter().copied().max().unwrap();
            if labels[i] <= max_prefix {
                labels[i] += 1;
                for l in labels[i + 1..].iter_mut() {
                    *l = 0;
                }
                break;
            }
        }
    }
}

/// Partitions `v` with `lo ⪯ v ⪯ hi`.
pub fn partitions_between(lo: &SetPartition, hi: &SetPartition) -> Vec<SetPartition> {
    enumerate_partitions(lo.ground())
        .into_iter()
        .filter(|v| lo.leq(v) && v.leq(hi))
        .collect()
}

/// Bell numbers, for cross-checking enumeration sizes.
pub fn bell(n: usize) -> Int {
    let mut row = vec![Int::from(1)];
    for _ in 0..n {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let last = next.last().unwrap().clone();
            next.push(last + x);
        }
        row = next;
    }
    row[0].clone()
}

/// Sum of `μ_P(x, hi)` over `lo ⪯ x ⪯ hi`; zero unless `lo = hi`.
/// Handy for validating Möbius inversion on sub-intervals.
pub fn mobius_interval_sum(lo: &SetPartition, hi: &SetPartition) -> Rat {
    partitions_between(lo, hi)
        .iter()
        .map(|x| mobius_partition(x, hi))
        .sum::<Rat>()
        + rat(0) // keep the type concrete when the interval is empty
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(blocks: &[&[i64]]) -> SetPartition {
        SetPartition::from_blocks(&blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_validates_blocks() {
        assert!(SetPartition::from_blocks(&[vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(&[vec![1], vec![]]).is_err());
        let u = p(&[&[3, 1], &[2]]);
        assert_eq!(u.blocks(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn order_join_meet() {
        let g: Vec<i64> = (1..=4).collect();
        let u = p(&[&[1, 2], &[3], &[4]]);
        let v = p(&[&[1, 2, 3], &[4]]);
        assert!(u.leq(&v));
        assert!(!v.leq(&u));
        assert!(SetPartition::singletons(&g).leq(&u));
        assert!(u.leq(&SetPartition::full(&g)));

        let a = p(&[&[1, 2], &[3, 4]]);
        let b = p(&[&[1], &[2, 3], &[4]]);
        assert_eq!(a.join(&b), SetPartition::full(&g));
        assert_eq!(a.meet(&b), SetPartition::singletons(&g));
        assert_eq!(a.meet(&a), a);
        assert_eq!(a.join(&a), a);
    }

    #[test]
    fn restriction() {
        let u = p(&[&[1, 3, 5], &[2, 4]]);
        let r = u.restrict(&[1, 2, 3]).unwrap();
        assert_eq!(r.blocks(), &[vec![1, 3], vec![2]]);
        assert!(u.restrict(&[9]).is_err());
    }

    #[test]
    fn mobius_closed_form_values() {
        let g3: Vec<i64> = (1..=3).collect();
        assert_eq!(
            mobius_partition(&SetPartition::singletons(&g3), &SetPartition::full(&g3)),
            rat(2)
        );
        let g4: Vec<i64> = (1..=4).collect();
        assert_eq!(
            mobius_partition(&SetPartition::singletons(&g4), &SetPartition::full(&g4)),
            rat(-6)
        );
        let u = p(&[&[1, 2], &[3], &[4]]);
        // Blocks of 1 restrict u to 3 parts: (−1)² · 2! = 2.
        assert_eq!(mobius_partition(&u, &SetPartition::full(&g4)), rat(2));
        assert_eq!(mobius_partition(&u, &u), rat(1));
    }

    #[test]
    fn mobius_matches_defining_recursion() {
        // Σ_{lo ⪯ x ⪯ hi} μ(x, hi) = δ_{lo,hi} on all intervals of P(4).
        let g: Vec<i64> = (1..=4).collect();
        let all = enumerate_partitions(&g);
        for lo in &all {
            for hi in &all {
                if !lo.leq(hi) {
                    continue;
                }
                let s = mobius_interval_sum(lo, hi);
                assert_eq!(s, rat(if lo == hi { 1 } else { 0 }), "{lo} {hi}");
            }
        }
    }

    #[test]
    fn gamma_set_membership() {
        // u = {{1},{2}}, v = w = {{1,2}}: #(u)−#(u∨w) = 2−1 = 1 but
        // #(u∨v)−#(u∨v∨w) = 1−1 = 0, so the triple is out.
        let u = p(&[&[1], &[2]]);
        let v = p(&[&[1, 2]]);
        assert!(!in_gamma_set(&u, &v, &v));
        // With w discrete both sides vanish.
        assert!(in_gamma_set(&u, &v, &u));
        // u full: both sides are zero defects.
        assert!(in_gamma_set(&v, &u, &u));
    }

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        // Bell numbers 1, 1, 2, 5, 15, 52, 203.
        for n in 0..=6usize {
            let g: Vec<i64> = (1..=n as i64).collect();
            let count = enumerate_partitions(&g).len();
            assert_eq!(Int::from(count as i64), bell(n), "n = {n}");
        }
        assert_eq!(bell(6), Int::from(203));
    }

    #[test]
    fn json_round_trip() {
        let u = p(&[&[1, 3], &[2]]);
        let s = serde_json::to_string(&u.to_json()).unwrap();
        let j: PartitionJson = serde_json::from_str(&s).unwrap();
        assert_eq!(SetPartition::from_json(&j).unwrap(), u);
        // Unknown fields are rejected.
        assert!(serde_json::from_str::<PartitionJson>(r#"{"blocks":[[1]],"x":1}"#).is_err());
    }
}
