//! Prefix sums of linear functions over a fixed sequence.

use crate::contribution::LinearFn;
use crate::error::{HotspotError, Result};
use crate::scalar::Scalar;

/// Binary indexed tree of linear functions; slopes and intercepts sit side by
/// side so each visited node is one memory access.
#[derive(Debug, Clone)]
struct Fenwick<S> {
    tree: Vec<LinearFn<S>>,
}

impl<S: Scalar> Fenwick<S> {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![LinearFn::zero(); n + 1],
        }
    }

    fn add(&mut self, index: usize, delta: &LinearFn<S>) {
        let mut i = index;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `lo + 1..=hi`. Both index chains end in the
    /// common high bits of `lo` and `hi`, so the walks stop there and short
    /// ranges cost less than two full prefix sums.
    fn between(&self, lo: usize, hi: usize) -> LinearFn<S> {
        let (mut i, mut j) = (hi, lo);
        let mut plus = LinearFn::zero();
        let mut minus = LinearFn::zero();
        while i > j {
            plus += &self.tree[i];
            i -= i & i.wrapping_neg();
        }
        while j > i {
            minus += &self.tree[j];
            j -= j & j.wrapping_neg();
        }
        plus - minus
    }
}

/// Prefix sums over `n` linear functions addressed by 1-based position.
#[derive(Debug, Clone)]
pub struct FenwickPair<S> {
    sums: Fenwick<S>,
    current: Vec<LinearFn<S>>,
}

impl<S: Scalar> FenwickPair<S> {
    pub fn new(n: usize) -> Self {
        FenwickPair {
            sums: Fenwick::new(n),
            current: vec![LinearFn::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.current.len()
    }

    pub fn is_empty(&self) -> bool {
        self.current.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&LinearFn<S>> {
        index.checked_sub(1).and_then(|i| self.current.get(i))
    }

    /// Replaces the function at `index`.
    pub fn set(&mut self, index: usize, f: LinearFn<S>) -> Result<()> {
        if index == 0 || index > self.len() {
            return Err(HotspotError::IndexOutOfRange {
                start: index,
                end: index,
                len: self.len(),
            });
        }
        let old = std::mem::replace(&mut self.current[index - 1], f.clone());
        let delta = f - old;
        if !delta.is_zero() {
            self.sums.add(index, &delta);
        }
        Ok(())
    }

    /// Sum of the functions at positions `start..=end`.
    pub fn range_sum_fn(&self, start: usize, end: usize) -> Result<LinearFn<S>> {
        if start == 0 || start > end || end > self.len() {
            return Err(HotspotError::IndexOutOfRange {
                start,
                end,
                len: self.len(),
            });
        }
        Ok(self.sums.between(start - 1, end))
    }
}
