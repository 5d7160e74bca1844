//! Branch-and-bound clique search on threshold graphs.
//!
//! Vertices are local ranks `0..len`; the caller decides which agent sits at
//! which rank. The search visits candidates in ascending rank, so the first
//! clique found is the lexicographically smallest one in rank order.

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::metric::MetricInstance;

pub(crate) struct ThresholdGraph {
    adj: Vec<FixedBitSet>,
}

impl ThresholdGraph {
    /// Graph on `agents` (rank `r` is `agents[r]`) with an edge whenever
    /// the distance is at most `t`.
    pub fn new(inst: &MetricInstance, agents: &[usize], t: f64) -> Self {
        let len = agents.len();
        let mut adj = vec![FixedBitSet::with_capacity(len); len];
        for a in 0..len {
            let row = inst.row(agents[a]);
            for b in (a + 1)..len {
                if row[agents[b]] <= t {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        ThresholdGraph { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.len());
        all.insert_range(..);
        all
    }

    /// Lexicographically first clique of exactly `size` vertices drawn from
    /// `candidates`, if any.
    pub fn find_clique(
        &self,
        candidates: &FixedBitSet,
        size: usize,
        budget: &mut Budget,
    ) -> Result<Option<Vec<usize>>> {
        if size == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut chosen = Vec::with_capacity(size);
        if self.extend(&mut chosen, candidates.clone(), size, budget)? {
            Ok(Some(chosen))
        } else {
            Ok(None)
        }
    }

    fn extend(
        &self,
        chosen: &mut Vec<usize>,
        candidates: FixedBitSet,
        size: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if chosen.len() == size {
            return Ok(true);
        }
        budget.tick()?;
        let need = size - chosen.len();
        let count = candidates.count_ones(..);
        if count < need || self.color_bound(&candidates, need) < need {
            return Ok(false);
        }
        let mut left = count;
        for v in candidates.ones() {
            if left < need {
                break;
            }
            left -= 1;
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            next.set_range(..v + 1, false);
            chosen.push(v);
            if self.extend(chosen, next, size, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// Number of colors a greedy sequential coloring of `set` uses, which
    /// bounds its clique number from above. Stops counting at `cap`.
    fn color_bound(&self, set: &FixedBitSet, cap: usize) -> usize {
        let mut uncolored = set.clone();
        let mut colors = 0;
        while !uncolored.is_clear() {
            colors += 1;
            if colors >= cap {
                return colors;
            }
            let mut open = uncolored.clone();
            while let Some(v) = open.minimum() {
                open.remove(v);
                uncolored.remove(v);
                open.difference_with(&self.adj[v]);
            }
        }
        colors
    }
}
