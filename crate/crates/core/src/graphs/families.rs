//! Graph family constructors and graph operations.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graphs::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn empty(n: usize) -> Graph {
    Graph::new(n, std::iter::empty()).expect("edgeless graph")
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Graph::new(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
}

/// K_{a,b}: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite graph needs a, b >= 1"));
    }
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
}

/// K_{1,n−1} with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("star needs n >= 2"));
    }
    Graph::new(n, (1..n).map(|i| (0, i)))
}

/// The star K_{1,n−2} with one edge subdivided: centre 0, leaves `1..n−2`,
/// and the path 0 – (n−2) – (n−1).
pub fn broom(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("broom needs n >= 4"));
    }
    Graph::new(n, (1..n - 1).map(|i| (0, i)).chain([(n - 2, n - 1)]))
}

/// Disjoint union, blocks relabelled consecutively left to right.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += g.order();
    }
    Graph::new(offset, edges).expect("union of valid graphs")
}

/// G ∨ H: the union plus every edge between V(G) and V(H).
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.order();
    let nh = h.order();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(a, b)| (a + ng, b + ng)));
    edges.extend((0..ng).flat_map(|i| (0..nh).map(move |j| (i, ng + j))));
    Graph::new(ng + nh, edges).expect("join of valid graphs")
}

/// G[K̄_t, …, K̄_t]: vertex v becomes the independent set `v*t .. v*t + t`,
/// and every edge becomes a complete bipartite K_{t,t}.
pub fn blowup(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(invalid("blow-up factor t must be >= 1"));
    }
    let edges = g
        .edges()
        .iter()
        .flat_map(|&(a, b)| (0..t).flat_map(move |i| (0..t).map(move |j| (a * t + i, b * t + j))));
    Graph::new(g.order() * t, edges)
}

/// G(n, p) with independent edges.
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("random graph")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Broom,
    Empty,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Broom,
        Family::Empty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Broom => "broom",
            Family::Empty => "empty",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph> {
        if params.len() != self.arity() {
            return Err(invalid(format!(
                "{} takes {} parameter(s), got {}",
                self.name(),
                self.arity(),
                params.len()
            )));
        }
        match self {
            Family::Complete => complete(params[0]),
            Family::CompleteBipartite => complete_bipartite(params[0], params[1]),
            Family::Path => path(params[0]),
            Family::Cycle => cycle(params[0]),
            Family::Star => star(params[0]),
            Family::Broom => broom(params[0]),
            Family::Empty => Ok(empty(params[0])),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| invalid(format!("unknown family {s:?}")))
    }
}

pub fn make_family(name: &str, params: &[usize]) -> Result<Graph> {
    name.parse::<Family>()?.build(params)
}
