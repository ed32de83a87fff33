//! Integer-weighted sampling over index ranges backed by a Fenwick tree.

use rand::Rng;

#[derive(Clone, Debug)]
pub(crate) struct WeightTree {
    tree: Vec<u64>,
}

impl WeightTree {
    pub fn new(len: usize) -> Self {
        WeightTree { tree: vec![0; len + 1] }
    }

    pub fn add(&mut self, i: usize, delta: u64) {
        let mut j = i + 1;
        while j < self.tree.len() {
            self.tree[j] += delta;
            j += j & j.wrapping_neg();
        }
    }

    /// Sum of weights in `0..end`.
    pub fn prefix(&self, end: usize) -> u64 {
        let mut sum = 0;
        let mut j = end;
        while j > 0 {
            sum += self.tree[j];
            j -= j & j.wrapping_neg();
        }
        sum
    }

    /// Smallest index `i` with `prefix(i + 1) > target`.
    fn find(&self, mut target: u64) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }

    /// Draws an index in `start..end` with probability proportional to its weight.
    pub fn sample_range<R: Rng + ?Sized>(&self, rng: &mut R, start: usize, end: usize) -> Option<usize> {
        let base = self.prefix(start);
        let total = self.prefix(end) - base;
        if total == 0 {
            return None;
        }
        Some(self.find(base + rng.gen_range(0..total)))
    }
}
