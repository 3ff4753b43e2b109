//! Finite posets with the defining Möbius recursion, memoized.
//!
//! The Möbius function here is computed straight from its definition:
//! `μ(x, x) = 1` and `μ(x, y) = −Σ_{x ⪯ z ≺ y} μ(x, z)` for `x ≺ y`. Closed
//! forms elsewhere in the crate are always checked against this recursion,
//! never the other way round.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::ratio::{rat, Rat};

/// A finite poset over indexed elements, with a precomputed order matrix and
/// a memoized Möbius function.
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<bool>,
    memo: RefCell<HashMap<(usize, usize), Rat>>,
}

impl<T> FinitePoset<T> {
    /// Build from elements and an order predicate. The predicate must be a
    /// partial order on the given elements; reflexivity and antisymmetry are
    /// checked, transitivity is checked exhaustively (the posets in this
    /// crate are small).
    pub fn new(elements: Vec<T>, leq_fn: impl Fn(&T, &T) -> bool) -> FinitePoset<T> {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = leq_fn(&elements[i], &elements[j]);
            }
        }
        let poset = FinitePoset {
            elements,
            leq,
            memo: RefCell::new(HashMap::new()),
        };
        poset.check_order_axioms();
        poset
    }

    fn check_order_axioms(&self) {
        let n = self.len();
        for i in 0..n {
            assert!(self.leq_idx(i, i), "order not reflexive at {i}");
            for j in 0..n {
                if i != j && self.leq_idx(i, j) && self.leq_idx(j, i) {
                    panic!("order not antisymmetric at ({i}, {j})");
                }
                if !self.leq_idx(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq_idx(j, k) {
                        assert!(self.leq_idx(i, k), "order not transitive at ({i},{j},{k})");
                    }
                }
            }
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the poset is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The elements, in index order.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Element at an index.
    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    /// Order relation by index.
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    /// Indices `z` with `lo ⪯ z ⪯ hi`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq_idx(lo, z) && self.leq_idx(z, hi))
            .collect()
    }

    /// The unique minimum, if the poset has one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq_idx(i, j)))
    }

    /// The unique maximum, if the poset has one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq_idx(j, i)))
    }

    /// Möbius function `μ(lo, hi)` by the defining recursion, memoized.
    /// Returns zero when `lo ⪯ hi` fails, matching the usual convention.
    pub fn mobius_idx(&self, lo: usize, hi: usize) -> Rat {
        if !self.leq_idx(lo, hi) {
            return rat(0);
        }
        if let Some(v) = self.memo.borrow().get(&(lo, hi)) {
            return v.clone();
        }
        let v = if lo == hi {
            rat(1)
        } else {
            let mut sum = rat(0);
            for z in self.interval(lo, hi) {
                if z != hi {
                    sum += self.mobius_idx(lo, z);
                }
            }
            -sum
        };
        self.memo.borrow_mut().insert((lo, hi), v.clone());
        v
    }

    /// Elements covering `i` (minimal strict successors).
    pub fn covers_of(&self, i: usize) -> Vec<usize> {
        let strict_above: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.leq_idx(i, j))
            .collect();
        strict_above
            .iter()
            .copied()
            .filter(|&j| {
                !strict_above
                    .iter()
                    .any(|&k| k != j && self.leq_idx(k, j))
            })
            .collect()
    }

    /// Least upper bounds of a pair: the minimal elements of the set of
    /// common upper bounds. A lattice would always give exactly one.
    pub fn minimal_upper_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        let ubs: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq_idx(i, k) && self.leq_idx(j, k))
            .collect();
        ubs.iter()
            .copied()
            .filter(|&k| !ubs.iter().any(|&m| m != k && self.leq_idx(m, k)))
            .collect()
    }
}

impl<T: PartialEq> FinitePoset<T> {
    /// Index of an element.
    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }
}
