//! Simple undirected graphs with dense 0-based vertex labels.

mod families;
mod graph6;
mod walks;

pub use families::{
    blowup, broom, complete, complete_bipartite, cycle, disjoint_union, empty, erdos_renyi, join,
    make_family, path, star, Family,
};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_HEADER};
pub use walks::{k_degree, DegreeVector};

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Self-loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) outside 0..{n}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {:?}", w[0])));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &list {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj.iter_mut().for_each(|l| l.sort_unstable());
        Ok(Graph { n, edges: list, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges (i, j) with i < j, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn isolated_vertices(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn adjacency(&self) -> Result<SymMatrix> {
        let n = self.n;
        let mut e = vec![0i64; n * n];
        for &(a, b) in &self.edges {
            e[a * n + b] = 1;
            e[b * n + a] = 1;
        }
        SymMatrix::from_integers(n, e)
    }

    /// y = A x.
    pub(crate) fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (v, out) in y.iter_mut().enumerate() {
            *out = self.adj[v].iter().map(|&w| x[w]).sum();
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_labels().1 == 1
    }

    /// Per-vertex component index (in order of smallest vertex) and component count.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }
}

/// A connected component together with its original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[i]` is the label in the parent graph of component vertex `i`.
    pub vertices: Vec<usize>,
}

/// Connected components ordered by smallest vertex label.
pub fn components(g: &Graph) -> Vec<Component> {
    let (label, count) = g.component_labels();
    let mut groups = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        groups[c].push(v);
    }
    groups
        .into_iter()
        .map(|vertices| Component {
            graph: g.induced(&vertices),
            vertices,
        })
        .collect()
}
