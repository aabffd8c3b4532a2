use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::word::FreeWord;
use super::StallingsError;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub label: FreeWord,
}

/// One end of an edge: the start when `forward`, the terminus otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FoldCase {
    /// Equal labels.
    I,
    /// One label is a prefix of the other.
    II,
    /// A proper common prefix.
    III,
}

/// What one [`SegmentGraph::normalize`] run did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizeReport {
    pub folds: [usize; 3],
    pub pruned: usize,
    pub merged: usize,
}

impl NormalizeReport {
    pub fn fold_count(&self) -> usize {
        self.folds.iter().sum()
    }
}

/// A graph whose edges carry nonempty reduced words. No vertex is distinguished.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentGraph {
    vertices: BTreeSet<VertexId>,
    edges: Vec<Edge>,
    next_vertex: VertexId,
}

impl SegmentGraph {
    /// One vertex with a loop for each word.
    pub fn bouquet(words: &[FreeWord]) -> Result<Self, StallingsError> {
        for w in words {
            if w.is_empty() {
                return Err(StallingsError::EmptyWord);
            }
            if !w.is_reduced() {
                return Err(StallingsError::NotReduced(w.to_string()));
            }
        }
        Ok(SegmentGraph {
            vertices: BTreeSet::from([0]),
            edges: words.iter().map(|w| Edge { from: 0, to: 0, label: w.clone() }).collect(),
            next_vertex: 1,
        })
    }

    /// Builds a graph from explicit edges; vertex ids are taken as given.
    pub fn from_edges(edges: Vec<Edge>) -> Result<Self, StallingsError> {
        for e in &edges {
            if e.label.is_empty() {
                return Err(StallingsError::EmptyWord);
            }
            if !e.label.is_reduced() {
                return Err(StallingsError::NotReduced(e.label.to_string()));
            }
        }
        let vertices: BTreeSet<_> = edges.iter().flat_map(|e| [e.from, e.to]).collect();
        let next_vertex = vertices.iter().max().map_or(0, |v| v + 1);
        Ok(SegmentGraph { vertices, edges, next_vertex })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total number of letters over all labels.
    pub fn letter_count(&self) -> usize {
        self.edges.iter().map(|e| e.label.len()).sum()
    }

    /// Rank of the fundamental group, for a connected graph.
    pub fn rank(&self) -> i64 {
        self.edges.len() as i64 - self.vertices.len() as i64 + 1
    }

    /// Generators occurring in some label.
    pub fn alphabet(&self) -> BTreeSet<u32> {
        self.edges.iter().flat_map(|e| e.label.generators()).collect()
    }

    pub fn end_vertex(&self, end: EdgeEnd) -> VertexId {
        let e = &self.edges[end.edge];
        if end.forward {
            e.from
        } else {
            e.to
        }
    }

    /// The label read leaving the vertex through this end.
    pub fn outgoing(&self, end: EdgeEnd) -> FreeWord {
        let e = &self.edges[end.edge];
        if end.forward {
            e.label.clone()
        } else {
            e.label.inverse()
        }
    }

    pub fn far_vertex(&self, end: EdgeEnd) -> VertexId {
        self.end_vertex(EdgeEnd { forward: !end.forward, ..end })
    }

    pub fn ends_at(&self, v: VertexId) -> Vec<EdgeEnd> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.from == v {
                out.push(EdgeEnd { edge: i, forward: true });
            }
            if e.to == v {
                out.push(EdgeEnd { edge: i, forward: false });
            }
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().map(|e| (e.from == v) as usize + (e.to == v) as usize).sum()
    }

    fn fresh_vertex(&mut self) -> VertexId {
        let v = self.next_vertex;
        self.next_vertex += 1;
        self.vertices.insert(v);
        v
    }

    /// Replaces `old` by `new` everywhere and drops `old`.
    pub(crate) fn identify(&mut self, new: VertexId, old: VertexId) {
        if new == old {
            return;
        }
        for e in &mut self.edges {
            if e.from == old {
                e.from = new;
            }
            if e.to == old {
                e.to = new;
            }
        }
        self.vertices.remove(&old);
    }

    /// Splits an edge at `pos` letters from its start; the edge keeps its index and the
    /// first part, the second part is appended. Returns the new vertex.
    pub(crate) fn split_edge(&mut self, edge: usize, pos: usize) -> Result<VertexId, StallingsError> {
        let len = self.edges[edge].label.len();
        if pos == 0 || pos >= len {
            return Err(StallingsError::InvalidPinch(format!("position {pos} on a label of length {len}")));
        }
        let m = self.fresh_vertex();
        let e = self.edges[edge].clone();
        self.edges[edge] = Edge { from: e.from, to: m, label: e.label.slice(0, pos) };
        self.edges.push(Edge { from: m, to: e.to, label: e.label.slice(pos, len) });
        Ok(m)
    }

    /// Cuts `end` so that a segment of exactly `p` letters is attached at its vertex, and
    /// returns that segment's end.
    fn cut_end(&mut self, end: EdgeEnd, p: usize) -> EdgeEnd {
        let len = self.edges[end.edge].label.len();
        if p == len {
            return end;
        }
        if end.forward {
            self.split_edge(end.edge, p).expect("interior");
            end
        } else {
            self.split_edge(end.edge, len - p).expect("interior");
            EdgeEnd { edge: self.edges.len() - 1, forward: false }
        }
    }

    /// Two ends at one vertex whose outgoing labels share a first letter.
    pub fn unfolded_pair(&self) -> Option<(EdgeEnd, EdgeEnd)> {
        for &v in &self.vertices {
            let ends = self.ends_at(v);
            let mut seen: BTreeMap<i32, EdgeEnd> = BTreeMap::new();
            for end in ends {
                let first = self.outgoing(end).first().expect("nonempty label");
                if let Some(&other) = seen.get(&first) {
                    return Some((other, end));
                }
                seen.insert(first, end);
            }
        }
        None
    }

    pub fn is_folded(&self) -> bool {
        self.unfolded_pair().is_none()
    }

    /// Folds one unfolded pair along its maximal common prefix. `None` when folded.
    pub fn fold_once(&mut self) -> Option<FoldCase> {
        let (e1, e2) = self.unfolded_pair()?;
        let (w1, w2) = (self.outgoing(e1), self.outgoing(e2));
        let p = w1.common_prefix(&w2);
        let case = match (p == w1.len(), p == w2.len()) {
            (true, true) => FoldCase::I,
            (true, false) | (false, true) => FoldCase::II,
            (false, false) => FoldCase::III,
        };
        let (s1, s2) = if e1.edge == e2.edge {
            // a loop reading u…u⁻¹; reducedness keeps the two pieces disjoint
            let len = w1.len();
            debug_assert!(2 * p < len);
            let edge = e1.edge;
            self.split_edge(edge, p).expect("interior");
            let mid = self.edges.len() - 1;
            self.split_edge(mid, len - 2 * p).expect("interior");
            (EdgeEnd { edge, forward: true }, EdgeEnd { edge: self.edges.len() - 1, forward: false })
        } else {
            let s1 = self.cut_end(e1, p);
            let s2 = self.cut_end(e2, p);
            (s1, s2)
        };
        debug_assert_eq!(self.outgoing(s1), self.outgoing(s2));
        let (f1, f2) = (self.far_vertex(s1), self.far_vertex(s2));
        self.edges.swap_remove(s2.edge);
        self.identify(f1, f2);
        Some(case)
    }

    /// Removes one degree-1 vertex with its edge.
    fn prune_once(&mut self) -> bool {
        let Some(v) = self.vertices.iter().copied().find(|&v| self.degree(v) == 1) else {
            return false;
        };
        let end = self.ends_at(v)[0];
        self.edges.swap_remove(end.edge);
        self.vertices.remove(&v);
        true
    }

    /// Repeatedly removes vertices of degree 1. Returns how many were removed.
    pub fn prune(&mut self) -> usize {
        let mut n = 0;
        while self.prune_once() {
            n += 1;
        }
        n
    }

    /// Replaces the two edges through one degree-2 vertex (not a lone loop) by one edge.
    fn merge_once(&mut self) -> bool {
        let found = self.vertices.iter().copied().find_map(|v| {
            let ends = self.ends_at(v);
            (ends.len() == 2 && ends[0].edge != ends[1].edge).then(|| (v, ends[0], ends[1]))
        });
        let Some((v, a, b)) = found else {
            return false;
        };
        let label = self.outgoing(a).inverse().concat(&self.outgoing(b));
        let edge = Edge { from: self.far_vertex(a), to: self.far_vertex(b), label };
        let (hi, lo) = (a.edge.max(b.edge), a.edge.min(b.edge));
        self.edges.swap_remove(hi);
        self.edges.swap_remove(lo);
        self.edges.push(edge);
        self.vertices.remove(&v);
        true
    }

    /// Repeatedly merges across degree-2 vertices. Returns how many were removed.
    pub fn merge(&mut self) -> usize {
        let mut n = 0;
        while self.merge_once() {
            n += 1;
        }
        n
    }

    /// Folds exhaustively, then prunes and merges; the result is folded and topological.
    pub fn normalize(&mut self) -> NormalizeReport {
        let mut report = NormalizeReport::default();
        loop {
            while let Some(case) = self.fold_once() {
                report.folds[case as usize] += 1;
            }
            let pruned = self.prune();
            let merged = self.merge();
            report.pruned += pruned;
            report.merged += merged;
            if pruned == 0 && merged == 0 && self.is_folded() {
                return report;
            }
        }
    }

    /// Every vertex has degree at least 3, or the graph is one vertex with one loop.
    pub fn is_topological(&self) -> bool {
        let lone_loop = self.vertices.len() == 1 && self.edges.len() == 1;
        lone_loop || self.vertices.iter().all(|&v| self.degree(v) >= 3)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// One vertex carrying exactly one loop `x^{±1}` for each generator in `generators`.
    pub fn is_elementary_wedge(&self, generators: &BTreeSet<u32>) -> bool {
        if self.vertices.len() != 1 || self.edges.len() != generators.len() {
            return false;
        }
        let loops: BTreeSet<u32> = self
            .edges
            .iter()
            .filter(|e| e.label.len() == 1)
            .map(|e| e.label.letters()[0].unsigned_abs())
            .collect();
        &loops == generators
    }

    /// An encoding equal for isomorphic folded graphs.
    ///
    /// Vertices are numbered by a search from each start vertex, taking ends in order of
    /// outgoing label (distinct first letters in a folded graph); the least resulting edge
    /// list wins.
    pub fn canonical_key(&self) -> Vec<(u32, u32, FreeWord)> {
        let mut best: Option<Vec<(u32, u32, FreeWord)>> = None;
        for &start in &self.vertices {
            let mut number: BTreeMap<VertexId, u32> = BTreeMap::from([(start, 0)]);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let mut ends = self.ends_at(v);
                ends.sort_by_key(|&e| self.outgoing(e));
                for e in ends {
                    let far = self.far_vertex(e);
                    if !number.contains_key(&far) {
                        number.insert(far, number.len() as u32);
                        queue.push_back(far);
                    }
                }
            }
            let mut key: Vec<(u32, u32, FreeWord)> = self
                .edges
                .iter()
                .map(|e| {
                    let (a, b) = (number[&e.from], number[&e.to]);
                    (a, b, e.label.clone()).min((b, a, e.label.inverse()))
                })
                .collect();
            key.sort();
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_default()
    }
}

impl fmt::Display for SegmentGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| format!("{}|{}|{}", e.from, e.to, e.label)).collect();
        write!(f, "#{}#", parts.join("##"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn labels(g: &SegmentGraph) -> Vec<String> {
        let mut v: Vec<String> = g.edges().iter().map(|e| e.label.to_string()).collect();
        v.sort();
        v
    }

    fn edge(from: u32, to: u32, label: &str) -> Edge {
        Edge { from, to, label: w(label) }
    }

    #[test]
    fn bouquets() {
        let g = SegmentGraph::bouquet(&[w("ab")]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        let g = SegmentGraph::bouquet(&[w("a"), w("b")]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 2));
        let g = SegmentGraph::bouquet(&[w("abA")]).unwrap();
        assert_eq!(g.letter_count(), 3);
        assert_eq!(SegmentGraph::bouquet(&[FreeWord::empty()]), Err(StallingsError::EmptyWord));
        assert!(matches!(SegmentGraph::bouquet(&[w("aA")]), Err(StallingsError::NotReduced(_))));
    }

    #[test]
    fn fold_cases() {
        let mut g = SegmentGraph::bouquet(&[w("ab"), w("ab")]).unwrap();
        assert_eq!(g.fold_once(), Some(FoldCase::I));
        assert_eq!(labels(&g), ["ab"]);
        assert_eq!(g.fold_once(), None);

        let mut g = SegmentGraph::from_edges(vec![edge(0, 1, "a"), edge(0, 2, "ab")]).unwrap();
        let before = g.letter_count();
        assert_eq!(g.fold_once(), Some(FoldCase::II));
        assert_eq!(labels(&g), ["a", "b"]);
        assert!(g.letter_count() < before);

        let mut g = SegmentGraph::from_edges(vec![edge(0, 1, "ab"), edge(0, 2, "ac")]).unwrap();
        assert_eq!(g.fold_once(), Some(FoldCase::III));
        assert_eq!(labels(&g), ["a", "b", "c"]);
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_folded());
    }

    #[test]
    fn loop_folding_with_itself() {
        let mut g = SegmentGraph::bouquet(&[w("baB")]).unwrap();
        assert_eq!(g.fold_once(), Some(FoldCase::III));
        assert!(g.is_folded());
        assert_eq!(labels(&g), ["a", "b"]);
        g.normalize();
        assert_eq!(labels(&g), ["a"]);
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn prune_and_merge() {
        let mut g = SegmentGraph::from_edges(vec![edge(0, 1, "a"), edge(1, 2, "b")]).unwrap();
        assert_eq!(g.merge(), 1);
        assert_eq!(labels(&g), ["ab"]);

        let mut g = SegmentGraph::from_edges(vec![edge(0, 0, "a"), edge(0, 0, "b"), edge(0, 1, "c")]).unwrap();
        assert_eq!(g.prune(), 1);
        assert_eq!(labels(&g), ["a", "b"]);

        let mut g = SegmentGraph::bouquet(&[w("ab")]).unwrap();
        assert_eq!(g.merge(), 0);
        assert!(g.is_topological());

        // merging backwards through an edge inverts its label
        let mut g = SegmentGraph::from_edges(vec![edge(0, 1, "a"), edge(2, 1, "b")]).unwrap();
        g.merge();
        assert_eq!(g.edges()[0].label, w("aB"));
    }

    #[test]
    fn normalize_examples() {
        let mut g = SegmentGraph::bouquet(&[w("a"), w("a")]).unwrap();
        g.normalize();
        assert_eq!(labels(&g), ["a"]);
        let mut g = SegmentGraph::bouquet(&[w("ab"), w("ba")]).unwrap();
        let r = g.normalize();
        assert!(g.is_folded() && g.is_topological());
        assert_eq!(g.rank(), 2);
        assert_eq!(r.fold_count(), 0);
        let mut g = SegmentGraph::bouquet(&[w("a")]).unwrap();
        assert_eq!(g.normalize(), NormalizeReport::default());
        // ⟨ab, aB⟩: the two loops share the prefix a
        let mut g = SegmentGraph::bouquet(&[w("ab"), w("aB")]).unwrap();
        let r = g.normalize();
        assert_eq!(r.folds[FoldCase::III as usize] + r.folds[FoldCase::II as usize], 1);
        assert!(g.is_folded() && g.is_topological() && g.is_connected());
    }

    #[test]
    fn wedge_test() {
        let ab: BTreeSet<u32> = [1, 2].into();
        assert!(SegmentGraph::bouquet(&[w("a"), w("B")]).unwrap().is_elementary_wedge(&ab));
        assert!(!SegmentGraph::bouquet(&[w("ab")]).unwrap().is_elementary_wedge(&ab));
        assert!(!SegmentGraph::bouquet(&[w("a")]).unwrap().is_elementary_wedge(&ab));
        assert!(!SegmentGraph::bouquet(&[w("a"), w("A")]).unwrap().is_elementary_wedge(&ab));
    }

    #[test]
    fn canonical_key_ignores_names_and_orientation() {
        let g1 = SegmentGraph::from_edges(vec![edge(0, 1, "a"), edge(1, 0, "b"), edge(0, 1, "c")]).unwrap();
        let g2 = SegmentGraph::from_edges(vec![edge(3, 7, "C"), edge(3, 7, "A"), edge(7, 3, "B")]).unwrap();
        assert_eq!(g1.canonical_key(), g2.canonical_key());
        let g3 = SegmentGraph::from_edges(vec![edge(0, 1, "a"), edge(1, 0, "c"), edge(0, 1, "b")]).unwrap();
        assert_ne!(g1.canonical_key(), g3.canonical_key());
    }
}
