//! Dense, vertex-labelled regular graphs.

use std::collections::VecDeque;
use std::fmt::{self, Display};

use crate::error::{Error, Result};

/// An undirected regular graph with a dense 0/1 adjacency matrix.
///
/// Vertex `i` carries `labels[i]`; the adjacency matrix is symmetric with a
/// zero diagonal and every row sums to `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularGraph<L> {
    labels: Vec<L>,
    adjacency: Vec<bool>,
    neighbours: Vec<Vec<usize>>,
    degree: usize,
}

impl<L> RegularGraph<L> {
    /// Builds the graph on `labels` whose edges are the pairs accepted by `adjacent`.
    ///
    /// `adjacent` is evaluated on every ordered pair, so asymmetric or reflexive
    /// predicates are reported rather than silently symmetrised.
    pub fn from_predicate<F>(labels: Vec<L>, mut adjacent: F) -> Result<Self>
    where
        F: FnMut(&L, &L) -> bool,
    {
        let n = labels.len();
        let mut adjacency = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adjacency[i * n + j] = adjacent(&labels[i], &labels[j]);
            }
        }
        Self::from_matrix(labels, adjacency)
    }

    /// Builds the graph from a row-major adjacency matrix.
    pub fn from_matrix(labels: Vec<L>, adjacency: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        assert_eq!(adjacency.len(), n * n, "adjacency matrix has wrong size");
        for i in 0..n {
            if adjacency[i * n + i] {
                return Err(Error::Loop(i));
            }
            for j in (i + 1)..n {
                if adjacency[i * n + j] != adjacency[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        let neighbours: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| adjacency[i * n + j]).collect())
            .collect();
        let degree = neighbours.first().map_or(0, Vec::len);
        if let Some((vertex, row)) = neighbours.iter().enumerate().find(|(_, r)| r.len() != degree) {
            return Err(Error::NotRegular { vertex, found: row.len(), expected: degree });
        }
        Ok(Self { labels, adjacency, neighbours, degree })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.labels.len() + j]
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.neighbours[i]
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len() * self.degree / 2
    }

    /// Edges `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbours
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn index_of(&self, label: &L) -> Option<usize>
    where
        L: PartialEq,
    {
        self.labels.iter().position(|l| l == label)
    }

    /// Row-major adjacency matrix as floating point, for the eigensolver.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.adjacency.iter().map(|&e| if e { 1.0 } else { 0.0 }).collect()
    }

    /// `A²` as a dense integer matrix: entry `(i, j)` counts walks of length 2.
    pub fn adjacency_squared(&self) -> Vec<u32> {
        let n = self.labels.len();
        let mut out = vec![0u32; n * n];
        for row in &self.neighbours {
            for &j in row {
                for &k in row {
                    out[j * n + k] += 1;
                }
            }
        }
        out
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.labels.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.neighbours[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.labels.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest shortest-path distance, by a BFS from every vertex.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.labels.len() {
            for d in self.distances_from(s) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// A proper 2-colouring if one exists (colour `false` on vertex 0's side).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.labels.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in &self.neighbours[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Adjacency-list text: one line `label: neighbour neighbour ...` per vertex.
    pub fn to_adjacency_list(&self) -> String
    where
        L: Display,
    {
        let mut out = String::new();
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(&label.to_string());
            out.push(':');
            for &j in &self.neighbours[i] {
                out.push(' ');
                out.push_str(&self.labels[j].to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Label of a vertex of a tensor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: Display, B: Display> Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Tensor (categorical) product: `(u1, u2) ~ (v1, v2)` iff `u1 ~ v1` and `u2 ~ v2`.
pub fn tensor_product<A: Clone, B: Clone>(
    g1: &RegularGraph<A>,
    g2: &RegularGraph<B>,
) -> RegularGraph<Pair<A, B>> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let n = n1 * n2;
    let labels = g1
        .labels
        .iter()
        .flat_map(|a| g2.labels.iter().map(move |b| Pair(a.clone(), b.clone())))
        .collect();
    let mut adjacency = vec![false; n * n];
    for (u1, v1) in (0..n1).flat_map(|u| g1.neighbours[u].iter().map(move |&v| (u, v))) {
        for (u2, v2) in (0..n2).flat_map(|u| g2.neighbours[u].iter().map(move |&v| (u, v))) {
            adjacency[(u1 * n2 + u2) * n + (v1 * n2 + v2)] = true;
        }
    }
    RegularGraph::from_matrix(labels, adjacency).expect("tensor product of regular graphs is regular")
}

/// The complete graph on `k` vertices labelled `0..k`.
pub fn complete_graph(k: usize) -> RegularGraph<usize> {
    RegularGraph::from_predicate((0..k).collect(), |a, b| a != b).expect("complete graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> RegularGraph<usize> {
        RegularGraph::from_predicate((0..k).collect(), |&a, &b| (a + 1) % k == b || (b + 1) % k == a)
            .unwrap()
    }

    #[test]
    fn rejects_malformed_matrices() {
        assert_eq!(
            RegularGraph::from_predicate(vec![0, 1], |a, b| a < b).unwrap_err(),
            Error::NotSymmetric(0, 1)
        );
        assert_eq!(RegularGraph::from_predicate(vec![0], |_, _| true).unwrap_err(), Error::Loop(0));
        let path = RegularGraph::from_predicate(vec![0i32, 1, 2], |a, b| (a - b).abs() == 1);
        assert!(matches!(path, Err(Error::NotRegular { .. })));
    }

    #[test]
    fn diameters() {
        assert_eq!(complete_graph(5).diameter().unwrap(), 1);
        assert_eq!(cycle(7).diameter().unwrap(), 3);
        assert_eq!(cycle(8).diameter().unwrap(), 4);
        let two_triangles =
            RegularGraph::from_predicate((0..6).collect(), |&a: &usize, &b| a != b && a / 3 == b / 3)
                .unwrap();
        assert_eq!(two_triangles.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn bipartite_detection() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn walks_of_length_two() {
        let a2 = complete_graph(4).adjacency_squared();
        assert_eq!(a2[0], 3);
        assert_eq!(a2[1], 2);
    }

    #[test]
    fn tensor_product_degrees() {
        let k3k4 = tensor_product(&complete_graph(3), &complete_graph(4));
        assert_eq!(k3k4.vertex_count(), 12);
        assert_eq!(k3k4.degree(), 6);
        let k1 = complete_graph(1);
        let edgeless = tensor_product(&complete_graph(3), &k1);
        assert_eq!(edgeless.degree(), 0);
        assert_eq!(edgeless.edge_count(), 0);
    }

    #[test]
    fn adjacency_list_format() {
        let text = complete_graph(3).to_adjacency_list();
        assert_eq!(text, "0: 1 2\n1: 0 2\n2: 0 1\n");
    }
}
