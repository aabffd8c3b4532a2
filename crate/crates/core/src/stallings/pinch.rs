use super::graph::{SegmentGraph, VertexId};
use super::StallingsError;

/// Identification of two points of a segment graph. Positions count letters from the
/// start of an edge's label and are strictly interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PinchMove {
    VertexVertex(VertexId, VertexId),
    VertexEdge { vertex: VertexId, edge: usize, pos: usize },
    EdgeEdge { edge: usize, pos: usize, other: usize, other_pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PinchOptions {
    /// Allow two interior points of one edge to be identified.
    pub same_edge: bool,
}

impl Default for PinchOptions {
    fn default() -> Self {
        PinchOptions { same_edge: true }
    }
}

impl SegmentGraph {
    /// Applies a pinch, keeping the total letter count.
    pub fn apply_pinch(&mut self, mv: PinchMove) -> Result<(), StallingsError> {
        match mv {
            PinchMove::VertexVertex(u, v) => {
                if u == v || !self.vertices().contains(&u) || !self.vertices().contains(&v) {
                    return Err(StallingsError::InvalidPinch(format!("vertices {u}, {v}")));
                }
                self.identify(u, v);
            }
            PinchMove::VertexEdge { vertex, edge, pos } => {
                if !self.vertices().contains(&vertex) || edge >= self.edge_count() {
                    return Err(StallingsError::InvalidPinch(format!("vertex {vertex}, edge {edge}")));
                }
                let m = self.split_edge(edge, pos)?;
                self.identify(vertex, m);
            }
            PinchMove::EdgeEdge { edge, pos, other, other_pos } => {
                if edge >= self.edge_count() || other >= self.edge_count() {
                    return Err(StallingsError::InvalidPinch(format!("edges {edge}, {other}")));
                }
                if edge == other {
                    let (p, q) = (pos.min(other_pos), pos.max(other_pos));
                    if p == q {
                        return Err(StallingsError::InvalidPinch(format!("one point {p} twice")));
                    }
                    let len = self.edges()[edge].label.len();
                    if q >= len {
                        return Err(StallingsError::InvalidPinch(format!("position {q} on a label of length {len}")));
                    }
                    let m1 = self.split_edge(edge, p)?;
                    let rest = self.edge_count() - 1;
                    let m2 = self.split_edge(rest, q - p)?;
                    self.identify(m1, m2);
                } else {
                    let m1 = self.split_edge(edge, pos)?;
                    let m2 = self.split_edge(other, other_pos)?;
                    self.identify(m1, m2);
                }
            }
        }
        Ok(())
    }

    /// Every pinch of this graph.
    pub fn enumerate_pinches(&self, options: PinchOptions) -> Vec<PinchMove> {
        let vs: Vec<VertexId> = self.vertices().iter().copied().collect();
        let points: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(i, e)| (1..e.label.len()).map(move |p| (i, p)))
            .collect();
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                out.push(PinchMove::VertexVertex(u, v));
            }
        }
        for &vertex in &vs {
            for &(edge, pos) in &points {
                out.push(PinchMove::VertexEdge { vertex, edge, pos });
            }
        }
        for (i, &(edge, pos)) in points.iter().enumerate() {
            for &(other, other_pos) in &points[i + 1..] {
                if edge != other || options.same_edge {
                    out.push(PinchMove::EdgeEdge { edge, pos, other, other_pos });
                }
            }
        }
        out
    }
}
