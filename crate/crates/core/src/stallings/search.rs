use std::collections::{BTreeSet, HashSet};

use super::graph::SegmentGraph;
use super::pinch::{PinchMove, PinchOptions};
use super::word::FreeWord;
use super::StallingsError;

/// Counters and invariant checks gathered during a search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    pub memo_hits: usize,
    pub normalized_graphs: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Normalized graphs of rank `r > 1` with more than `3r - 3` edges or `2r - 2` vertices.
    pub size_violations: Vec<String>,
    /// Normalizations after the first that had to prune.
    pub late_prunes: usize,
    /// Normalize results that were not folded and topological.
    pub not_normal: usize,
    /// Pinches that did not raise the rank by one.
    pub rank_violations: usize,
}

impl SearchStats {
    pub fn invariants_hold(&self) -> bool {
        self.size_violations.is_empty() && self.late_prunes == 0 && self.not_normal == 0 && self.rank_violations == 0
    }

    fn record(&mut self, g: &SegmentGraph) {
        self.normalized_graphs += 1;
        self.max_vertices = self.max_vertices.max(g.vertex_count());
        self.max_edges = self.max_edges.max(g.edge_count());
        if !(g.is_folded() && g.is_topological()) {
            self.not_normal += 1;
        }
        let r = g.rank();
        if r > 1 && (g.edge_count() as i64 > 3 * r - 3 || g.vertex_count() as i64 > 2 * r - 2) {
            self.size_violations.push(g.to_string());
        }
    }
}

/// Backtracking search for a sequence of pinches and folds ending at the elementary wedge.
#[derive(Debug, Clone, Default)]
pub struct PrimitiveSearch {
    pub options: PinchOptions,
    pub memoize: bool,
    pub stats: SearchStats,
    failed: HashSet<(Vec<(u32, u32, FreeWord)>, usize)>,
    trace: Option<SearchTrace>,
}

/// A successful run: the normalized bouquet, then each pinch with the graph it normalized to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub start: SegmentGraph,
    pub steps: Vec<(PinchMove, SegmentGraph)>,
}

impl PrimitiveSearch {
    pub fn new(options: PinchOptions, memoize: bool) -> Self {
        PrimitiveSearch { options, memoize, ..Default::default() }
    }

    /// Whether `words` extends to a basis of `F_k`.
    pub fn run(&mut self, words: &[FreeWord], k: u32) -> Result<bool, StallingsError> {
        if words.is_empty() {
            return Err(StallingsError::EmptySet);
        }
        for w in words {
            if w.max_generator() > k {
                return Err(StallingsError::OutOfRank { word: w.to_string(), k });
            }
        }
        self.trace = None;
        let mut g = SegmentGraph::bouquet(words)?;
        if words.len() > k as usize {
            return Ok(false);
        }
        g.normalize();
        self.stats.record(&g);
        let gens = g.alphabet();
        let Some(budget) = gens.len().checked_sub(words.len()) else {
            return Ok(false);
        };
        self.failed.clear();
        self.trace = Some(SearchTrace { start: g.clone(), steps: Vec::new() });
        let found = self.dfs(&g, budget, &gens);
        match &mut self.trace {
            Some(t) if found => t.steps.reverse(),
            _ => self.trace = None,
        }
        Ok(found)
    }

    /// The pinch sequence found by the last run that answered yes.
    pub fn last_trace(&self) -> Option<&SearchTrace> {
        self.trace.as_ref()
    }

    fn dfs(&mut self, g: &SegmentGraph, remaining: usize, gens: &BTreeSet<u32>) -> bool {
        self.stats.nodes += 1;
        if remaining == 0 {
            return g.is_elementary_wedge(gens);
        }
        // a pinch adds one to the rank, folding never does; the wedge needs one letter
        // per loop
        if g.rank() + (remaining as i64) < gens.len() as i64 || g.letter_count() < gens.len() {
            return false;
        }
        let key = self.memoize.then(|| (g.canonical_key(), remaining));
        if let Some(key) = &key {
            if self.failed.contains(key) {
                self.stats.memo_hits += 1;
                return false;
            }
        }
        for mv in g.enumerate_pinches(self.options) {
            let mut h = g.clone();
            h.apply_pinch(mv).expect("enumerated pinches are valid");
            if h.rank() != g.rank() + 1 {
                self.stats.rank_violations += 1;
            }
            if h.normalize().pruned > 0 {
                self.stats.late_prunes += 1;
            }
            self.stats.record(&h);
            let new_gens = h.alphabet();
            let Some(next) = (remaining - 1).checked_sub(gens.len() - new_gens.len()) else {
                continue;
            };
            if self.dfs(&h, next, &new_gens) {
                if let Some(t) = &mut self.trace {
                    t.steps.push((mv, h));
                }
                return true;
            }
        }
        if let Some(key) = key {
            self.failed.insert(key);
        }
        false
    }
}

/// Whether `words` is part of a free basis of `F_k`, by folds and pinches.
pub fn is_primitive_set(words: &[FreeWord], k: u32) -> Result<bool, StallingsError> {
    PrimitiveSearch::new(PinchOptions::default(), true).run(words, k)
}
