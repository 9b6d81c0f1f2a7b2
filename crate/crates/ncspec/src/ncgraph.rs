//! Non-commuting graphs and their complete multipartite structure.
//!
//! The non-commuting graph of a non-abelian group has the non-central
//! elements as vertices and an edge between two elements exactly when they
//! fail to commute. Its complement restricted to those vertices is a union
//! of cliques precisely when the graph is complete multipartite; the shape
//! detection here is purely structural (component analysis of the
//! complement) so it also works on synthetic graphs.

use bitvec::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::groups::Group;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NcGraphError {
    #[error("group {0} is abelian: its non-commuting graph has no vertices")]
    AbelianGroup(String),
    #[error("vertex index {0} out of range for {1} vertices")]
    BadVertex(usize, usize),
}

/// Undirected loop-free graph with bitset adjacency rows.
#[derive(Clone, Debug)]
pub struct NcGraph {
    n: usize,
    rows: Vec<BitVec>,
    labels: Vec<String>,
    name: String,
    edge_count: usize,
}

/// Build the non-commuting graph of a group on its non-central elements.
pub fn noncommuting_graph(g: &Group) -> Result<NcGraph, NcGraphError> {
    let center: Vec<usize> = g.center();
    if center.len() == g.order() {
        return Err(NcGraphError::AbelianGroup(g.name().to_string()));
    }
    let mut in_center = bitvec![0; g.order()];
    for z in center {
        in_center.set(z, true);
    }
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| !in_center[x]).collect();
    let n = vertices.len();
    let mut rows = vec![bitvec![0; n]; n];
    let mut edge_count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !g.commute(vertices[i], vertices[j]) {
                rows[i].set(j, true);
                rows[j].set(i, true);
                edge_count += 1;
            }
        }
    }
    let labels = vertices.iter().map(|&x| g.label(x).to_string()).collect();
    Ok(NcGraph { n, rows, labels, name: g.name().to_string(), edge_count })
}

impl NcGraph {
    /// Synthetic graph from an explicit edge list (for tests and tooling).
    pub fn from_edges(
        name: impl Into<String>,
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, NcGraphError> {
        let mut rows = vec![bitvec![0; n]; n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(NcGraphError::BadVertex(u.max(v), n));
            }
            if u == v {
                continue;
            }
            if !rows[u][v] {
                rows[u].set(v, true);
                rows[v].set(u, true);
                edge_count += 1;
            }
        }
        let labels = (0..n).map(|i| format!("v{}", i)).collect();
        Ok(NcGraph { n, rows, labels, name: name.into(), edge_count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u][v]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.rows[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// If the complement is a disjoint union of cliques, the sorted multiset
    /// of clique sizes; `None` otherwise.
    pub fn complement_clique_decomposition(&self) -> Option<Vec<usize>> {
        let mut seen = bitvec![0; self.n];
        let mut sizes = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            // BFS over complement edges.
            let mut component = vec![start];
            seen.set(start, true);
            let mut head = 0;
            while head < component.len() {
                let u = component[head];
                head += 1;
                for v in 0..self.n {
                    if v != u && !seen[v] && !self.rows[u][v] {
                        seen.set(v, true);
                        component.push(v);
                    }
                }
            }
            // The component is a clique of the complement iff no two of its
            // members are adjacent in the original graph.
            for (i, &u) in component.iter().enumerate() {
                for &v in &component[i + 1..] {
                    if self.rows[u][v] {
                        return None;
                    }
                }
            }
            sizes.push(component.len());
        }
        sizes.sort_unstable();
        Some(sizes)
    }

    /// Complete multipartite shape as `(part_size, count)` pairs with sizes
    /// strictly increasing; `None` when the graph is not complete
    /// multipartite.
    pub fn multipartite_shape(&self) -> Option<Vec<(usize, usize)>> {
        let sizes = self.complement_clique_decomposition()?;
        let mut shape: Vec<(usize, usize)> = Vec::new();
        for size in sizes {
            match shape.last_mut() {
                Some((s, count)) if *s == size => *count += 1,
                _ => shape.push((size, 1)),
            }
        }
        Some(shape)
    }

    /// Plain `u v` lines, 0-based, one edge per line.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        json!({ "n": self.n, "edges": edges })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build;

    #[test]
    fn dihedral6_graph() {
        let g = build::dihedral(3).unwrap();
        let graph = noncommuting_graph(&g).unwrap();
        assert_eq!(graph.n(), 5);
        assert_eq!(graph.edge_count(), 9);
        assert_eq!(graph.complement_clique_decomposition(), Some(vec![1, 1, 1, 2]));
        assert_eq!(graph.multipartite_shape(), Some(vec![(1, 3), (2, 1)]));
        // Degree of a vertex in a part of size p is n - p.
        let mut degs: Vec<usize> = (0..5).map(|v| graph.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn quaternion_and_u12_counts() {
        let q8 = noncommuting_graph(&build::dicyclic(2).unwrap()).unwrap();
        assert_eq!(q8.n(), 6);
        assert_eq!(q8.edge_count(), 12);
        assert_eq!(q8.multipartite_shape(), Some(vec![(2, 3)]));

        let u12 = noncommuting_graph(&build::u6n(2).unwrap()).unwrap();
        assert_eq!(u12.n(), 10);
        assert_eq!(u12.edge_count(), 36);
    }

    #[test]
    fn v16_decomposition() {
        let g = noncommuting_graph(&build::v8n(2).unwrap()).unwrap();
        assert_eq!(g.complement_clique_decomposition(), Some(vec![4, 4, 4]));
    }

    #[test]
    fn alternating5_shape() {
        let g = noncommuting_graph(&build::alternating5().unwrap()).unwrap();
        assert_eq!(g.n(), 59);
        assert_eq!(g.multipartite_shape(), Some(vec![(2, 10), (3, 5), (4, 6)]));
    }

    #[test]
    fn symmetric4_is_not_complete_multipartite() {
        let g = noncommuting_graph(&build::symmetric4().unwrap()).unwrap();
        assert_eq!(g.n(), 23);
        assert_eq!(g.edge_count(), 228);
        assert_eq!(g.complement_clique_decomposition(), None);
        assert_eq!(g.multipartite_shape(), None);
    }

    #[test]
    fn abelian_group_is_rejected() {
        let z6 = build::cyclic(6).unwrap();
        assert_eq!(
            noncommuting_graph(&z6).unwrap_err(),
            NcGraphError::AbelianGroup("Z6".into())
        );
    }

    #[test]
    fn synthetic_path_has_no_decomposition() {
        // Complement of P4 is P4 (not a clique union).
        let p4 = NcGraph::from_edges("P4", 4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.complement_clique_decomposition(), None);
        // Complement of C4 is 2K2.
        let c4 = NcGraph::from_edges("C4", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.complement_clique_decomposition(), Some(vec![2, 2]));
    }

    #[test]
    fn export_formats() {
        let k3 = NcGraph::from_edges("K3", 3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.to_edge_list_text(), "0 1\n0 2\n1 2\n");
        let v = k3.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    }
}
