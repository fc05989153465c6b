//! Immutable simple graphs, directed or undirected, with the exact structural
//! queries everything else builds on: degree profile, all-pairs BFS diameter
//! and the dense adjacency matrix.
//!
//! Undirected graphs store each edge once as `(min, max)` and reject
//! self-loops. Directed graphs may carry loops, since the de Bruijn digraph
//! has one at every constant word.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates `edges` and builds the graph.
    ///
    /// Undirected edges may be given in either orientation; `(u, v)` and
    /// `(v, u)` are the same edge and count as a duplicate if both appear.
    pub fn new(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if !directed && u == v {
                return Err(Error::UndirectedSelfLoop { v });
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u, v });
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();

        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out[u].push(v);
            inc[v].push(u);
            if !directed {
                out[v].push(u);
                inc[u].push(v);
            }
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Graph { n, directed, edges, out, inc })
    }

    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, false, edges)
    }

    pub fn directed(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, true, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (each undirected edge counted once).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Out-neighbours (all neighbours when undirected), sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// In-neighbours, sorted. Same as [`Graph::neighbors`] for undirected graphs.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let out = DegreeRange::of(self.out.iter().map(Vec::len));
        if !self.directed {
            return DegreeProfile { out, inc: None, regular_degree: out.regular() };
        }
        let inc = DegreeRange::of(self.inc.iter().map(Vec::len));
        let vertexwise = (0..self.n).all(|v| self.out[v].len() == self.inc[v].len());
        let regular_degree = match (out.regular(), inc.regular()) {
            (Some(a), Some(b)) if a == b && vertexwise => Some(a),
            _ => None,
        };
        DegreeProfile { out, inc: Some(inc), regular_degree }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.out[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact diameter by a full BFS from every vertex.
    pub fn diameter(&self) -> DiameterReport {
        let eccentricity: Vec<Option<usize>> = (0..self.n)
            .into_par_iter()
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
            })
            .collect();
        let connected = eccentricity.iter().all(Option::is_some);
        let diameter = if connected {
            eccentricity.iter().flatten().copied().max()
        } else {
            None
        };
        DiameterReport { diameter, eccentricity, connected }
    }

    /// Dense 0/1 adjacency matrix in row-major order. Directed loops put a 1
    /// on the diagonal.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for (u, row) in a.iter_mut().enumerate() {
            for &v in &self.out[u] {
                row[v] = 1;
            }
        }
        a
    }

    /// The same graph with vertices renamed by `perm` (`v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, self.directed, &edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub min: usize,
    pub max: usize,
}

impl DegreeRange {
    fn of(degrees: impl Iterator<Item = usize>) -> Self {
        let (min, max) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        DegreeRange { min, max }
    }

    pub fn regular(&self) -> Option<usize> {
        (self.min == self.max).then_some(self.min)
    }
}

/// Degree statistics. For undirected graphs `inc` is `None` and `out` holds
/// the plain degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out: DegreeRange,
    pub inc: Option<DegreeRange>,
    /// `Some(d)` iff every in- and out-degree equals `d`.
    pub regular_degree: Option<usize>,
}

impl DegreeProfile {
    pub fn is_regular(&self) -> bool {
        self.regular_degree.is_some()
    }

    pub fn min(&self) -> usize {
        self.inc.map_or(self.out.min, |i| i.min.min(self.out.min))
    }

    pub fn max(&self) -> usize {
        self.inc.map_or(self.out.max, |i| i.max.max(self.out.max))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterReport {
    /// `None` when some ordered pair is unreachable.
    pub diameter: Option<usize>,
    /// Per-vertex eccentricity, `None` when the vertex does not reach everything.
    pub eccentricity: Vec<Option<usize>>,
    /// Strong connectivity for digraphs, plain connectivity otherwise.
    pub connected: bool,
}
