//! Permutations on explicit ordered ground sets of integers.
//!
//! Ground sets are arbitrary finite sets of (possibly negative) integers, not
//! always `1..=n`: restrictions to blocks and signed gluings keep their
//! original labels. Cycle notation is the interchange format; the canonical
//! form roots every cycle at its preferred element (the smallest positive one
//! when the cycle has any, otherwise the element of least absolute value) and
//! sorts cycles by absolute value of the root, so emit→parse round-trips to
//! an equal permutation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A bijection on an explicit ordered ground set of integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    ground: Vec<i64>,
    /// `map[i]` is the index into `ground` of the image of `ground[i]`.
    map: Vec<usize>,
}

/// JSON form of a permutation: explicit ground plus cycle lists.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermJson {
    pub ground: Vec<i64>,
    pub cycles: Vec<Vec<i64>>,
}

impl Perm {
    /// Identity permutation on the given ground set.
    pub fn identity(ground: &[i64]) -> Perm {
        let ground = sorted_ground(ground);
        let map = (0..ground.len()).collect();
        Perm { ground, map }
    }

    /// Identity on `{1, …, n}`.
    pub fn identity_n(n: usize) -> Perm {
        Perm::identity(&(1..=n as i64).collect::<Vec<_>>())
    }

    /// The full cycle `(1, 2, …, n)`.
    pub fn tau_n(n: usize) -> Perm {
        let cycle: Vec<i64> = (1..=n as i64).collect();
        Perm::from_cycles(&cycle.clone(), &[cycle]).unwrap()
    }

    /// The two-circle base `(1, …, p)(p+1, …, p+q)`.
    pub fn tau_pq(p: usize, q: usize) -> Perm {
        let ground: Vec<i64> = (1..=(p + q) as i64).collect();
        let c1: Vec<i64> = (1..=p as i64).collect();
        let c2: Vec<i64> = (p as i64 + 1..=(p + q) as i64).collect();
        Perm::from_cycles(&ground, &[c1, c2]).unwrap()
    }

    /// Build from disjoint cycles over `ground`; elements not mentioned are
    /// fixed points.
    pub fn from_cycles(ground: &[i64], cycles: &[Vec<i64>]) -> Result<Perm> {
        let ground = sorted_ground(ground);
        let mut map: Vec<usize> = (0..ground.len()).collect();
        let mut seen = vec![false; ground.len()];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let x = cycle[w];
                let y = cycle[(w + 1) % cycle.len()];
                let xi = index_of(&ground, x)
                    .ok_or_else(|| Error::BadCycles(format!("{x} not in ground")))?;
                let yi = index_of(&ground, y)
                    .ok_or_else(|| Error::BadCycles(format!("{y} not in ground")))?;
                if seen[xi] {
                    return Err(Error::BadCycles(format!("{x} appears twice")));
                }
                seen[xi] = true;
                map[xi] = yi;
            }
        }
        let perm = Perm { ground, map };
        perm.check_bijection()?;
        Ok(perm)
    }

    /// Build from an explicit point map (`pairs[i] = (x, perm(x))`).
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Perm> {
        let ground: Vec<i64> = pairs.iter().map(|&(x, _)| x).collect();
        let ground = sorted_ground(&ground);
        if ground.len() != pairs.len() {
            return Err(Error::NotBijective("duplicate source element".into()));
        }
        let mut map = vec![usize::MAX; ground.len()];
        for &(x, y) in pairs {
            let xi = index_of(&ground, x).unwrap();
            let yi = index_of(&ground, y)
                .ok_or_else(|| Error::NotBijective(format!("image {y} not in ground")))?;
            map[xi] = yi;
        }
        let perm = Perm { ground, map };
        perm.check_bijection()?;
        Ok(perm)
    }

    /// Parse cycle notation like `"(1,5,-4)(2)(6,-7)"`. The ground set is the
    /// set of mentioned elements; use [`Perm::parse_on`] to supply a larger
    /// ground with implicit fixed points.
    pub fn parse(s: &str) -> Result<Perm> {
        let cycles = parse_cycle_lists(s)?;
        let mut ground: Vec<i64> = cycles.iter().flatten().copied().collect();
        ground.sort_unstable();
        ground.dedup();
        if ground.is_empty() {
            return Err(Error::BadCycles("empty cycle notation".into()));
        }
        Perm::from_cycles(&ground, &cycles)
    }

    /// Parse cycle notation over an explicit ground set; elements of the
    /// ground not mentioned in `s` are fixed points.
    pub fn parse_on(s: &str, ground: &[i64]) -> Result<Perm> {
        let cycles = parse_cycle_lists(s)?;
        Perm::from_cycles(ground, &cycles)
    }

    /// Parse cycle notation on the ground `{1, …, n}`.
    pub fn parse_on_range(s: &str, n: usize) -> Result<Perm> {
        let ground: Vec<i64> = (1..=n as i64).collect();
        Perm::parse_on(s, &ground)
    }

    fn check_bijection(&self) -> Result<()> {
        let mut hit = vec![false; self.map.len()];
        for &i in &self.map {
            if i >= self.map.len() || hit[i] {
                return Err(Error::NotBijective(format!(
                    "image repeats {}",
                    self.ground[self.map.iter().position(|&j| j == i).unwrap()]
                )));
            }
            hit[i] = true;
        }
        Ok(())
    }

    /// The ordered ground set.
    pub fn ground(&self) -> &[i64] {
        &self.ground
    }

    /// Ground-set size.
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    /// True when the ground set is empty.
    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Apply the permutation to a point (panics if outside the ground).
    pub fn apply(&self, x: i64) -> i64 {
        let i = index_of(&self.ground, x).expect("point outside ground set");
        self.ground[self.map[i]]
    }

    /// True if `x` belongs to the ground set.
    pub fn contains(&self, x: i64) -> bool {
        index_of(&self.ground, x).is_some()
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.ground, other.ground,
            "compose requires equal ground sets"
        );
        let map = other.map.iter().map(|&i| self.map[i]).collect();
        Perm {
            ground: self.ground.clone(),
            map,
        }
    }

    /// Checked composition, reporting a ground mismatch as an error.
    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(format!(
                "{:?} vs {:?}",
                self.ground, other.ground
            )));
        }
        Ok(self.compose(other))
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut map = vec![0usize; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j] = i;
        }
        Perm {
            ground: self.ground.clone(),
            map,
        }
    }

    /// True when every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles in canonical order (see module docs), fixed points included.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        let mut seen = vec![false; self.ground.len()];
        for start in 0..self.ground.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(self.ground[i]);
                i = self.map[i];
            }
            out.push(root_cycle(cyc));
        }
        out.sort_by_key(|c| (c[0].unsigned_abs(), c[0] < 0));
        out
    }

    /// Number of cycles, fixed points included — `#(π)`.
    pub fn cycle_count(&self) -> usize {
        let mut n = 0;
        let mut seen = vec![false; self.ground.len()];
        for start in 0..self.ground.len() {
            if seen[start] {
                continue;
            }
            n += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.map[i];
            }
        }
        n
    }

    /// Sorted cycle sizes (an integer partition of the ground size).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }

    /// The cycle containing `x`, in cycle order starting at `x`.
    pub fn cycle_of(&self, x: i64) -> Vec<i64> {
        let mut cyc = vec![x];
        let mut y = self.apply(x);
        while y != x {
            cyc.push(y);
            y = self.apply(y);
        }
        cyc
    }

    /// The permutation induced on `J ⊆ ground`: `a ↦ π^k(a)` for the least
    /// `k ≥ 1` with `π^k(a) ∈ J` (deleting elements outside `J` from the
    /// cycle notation).
    pub fn induced(&self, j: &[i64]) -> Result<Perm> {
        let jg = sorted_ground(j);
        for &x in &jg {
            if !self.contains(x) {
                return Err(Error::NotASubset(format!("{x}")));
            }
        }
        let mut pairs = Vec::with_capacity(jg.len());
        for &x in &jg {
            let mut y = self.apply(x);
            while index_of(&jg, y).is_none() {
                y = self.apply(y);
            }
            pairs.push((x, y));
        }
        Perm::from_pairs(&pairs)
    }

    /// Relabel through a bijection of ground sets: the result sends
    /// `f(x) ↦ f(π(x))` where `f(ground[i]) = new_ground_in_order[i]`.
    pub fn relabel(&self, f: impl Fn(i64) -> i64) -> Result<Perm> {
        let pairs: Vec<(i64, i64)> = self
            .ground
            .iter()
            .map(|&x| (f(x), f(self.apply(x))))
            .collect();
        Perm::from_pairs(&pairs)
    }

    /// Partition of the ground set into orbits (as sorted blocks).
    pub fn orbit_blocks(&self) -> Vec<Vec<i64>> {
        self.cycles()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Canonical cycle-notation string.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cyc in self.cycles() {
            s.push('(');
            for (k, x) in cyc.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&x.to_string());
            }
            s.push(')');
        }
        s
    }

    /// JSON form with explicit ground.
    pub fn to_json(&self) -> PermJson {
        PermJson {
            ground: self.ground.clone(),
            cycles: self.cycles(),
        }
    }

    /// Rebuild from the JSON form.
    pub fn from_json(j: &PermJson) -> Result<Perm> {
        Perm::from_cycles(&j.ground, &j.cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.to_cycle_string())
    }
}

fn sorted_ground(ground: &[i64]) -> Vec<i64> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    g.dedup();
    g
}

fn index_of(ground: &[i64], x: i64) -> Option<usize> {
    ground.binary_search(&x).ok()
}

/// Rotate a cycle to its canonical root: the smallest positive element when
/// one exists, otherwise the element of least absolute value.
fn root_cycle(mut cyc: Vec<i64>) -> Vec<i64> {
    let root_pos = cyc
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| (x < 0, x.unsigned_abs()))
        .map(|(i, _)| i)
        .unwrap();
    cyc.rotate_left(root_pos);
    cyc
}

fn parse_cycle_lists(s: &str) -> Result<Vec<Vec<i64>>> {
    let t = s.trim();
    if t == "()" || t.is_empty() {
        return Ok(Vec::new());
    }
    if !t.starts_with('(') || !t.ends_with(')') {
        return Err(Error::BadCycles(format!("{t:?} is not cycle notation")));
    }
    let mut cycles = Vec::new();
    for chunk in t[1..t.len() - 1].split(")(") {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            cycles.push(Vec::new());
            continue;
        }
        let cycle = chunk
            .split(|c| c == ',' || c == ' ')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::BadCycles(format!("bad element {p:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        cycles.push(cycle);
    }
    Ok(cycles)
}
