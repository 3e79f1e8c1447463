//! Small labeled simple graphs stored as per-vertex bit rows.

mod canon;
mod charpoly;
pub mod generate;
pub mod graph6;
mod subsets;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_form_exhaustive, CanonicalForm, CANON_MAX_VERTICES};
pub use charpoly::{charpoly, charpoly_deleted, CHARPOLY_MAX_VERTICES};
pub use subsets::{connected_induced_subsets, ConnectedSubsets, SUBSET_MAX_VERTICES};

/// Hard cap imposed by the `u64` row representation.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., n-1}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(vs.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.rows[u] = VertexSet::full(n).0 & !(1 << u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges)
    }

    /// The star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph {
            n: self.n,
            rows: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            out.rows[perm[u]] |= 1 << perm[v];
            out.rows[perm[v]] |= 1 << perm[u];
        }
        out
    }

    /// The subgraph induced on `s`, with vertices renumbered in increasing
    /// order of their original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let members: Vec<usize> = s.iter().collect();
        let mut rows = vec![0u64; members.len()];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Graph {
            n: members.len(),
            rows,
        })
    }

    /// `G - v`, or `None` when `v` is the only vertex.
    pub fn remove_vertex(&self, v: usize) -> Result<Option<Graph>> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Ok(None);
        }
        let mut s = self.vertices();
        s.0 &= !(1 << v);
        self.induced_subgraph(s).map(Some)
    }

    /// Whether the subgraph induced on `s` is connected.
    pub fn is_connected_on(&self, s: VertexSet) -> bool {
        let Some(start) = s.iter().next() else {
            return false;
        };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                next |= self.rows[v];
            }
            frontier = next & s.0 & !seen;
            seen |= frontier;
        }
        seen == s.0
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.vertices())
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u).iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `h`.
    ///
    /// Vertices of `self` keep their labels; the remaining vertices of `h`
    /// follow in increasing order, and `v` becomes `u`.
    pub fn coalescence(&self, u: usize, h: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        h.check_vertex(v)?;
        let n = self.n + h.n - 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "coalescence",
                n,
                max: MAX_VERTICES,
            });
        }
        let map = |w: usize| match w.cmp(&v) {
            std::cmp::Ordering::Less => self.n + w,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => self.n + w - 1,
        };
        let mut out = Graph::empty(n)?;
        out.rows[..self.n].copy_from_slice(&self.rows);
        for (a, b) in h.edges() {
            out.add_edge(map(a), map(b))?;
        }
        Ok(out)
    }

    /// Paths, stars, cycles and complete graphs: the connected graphs whose
    /// number of connected induced subgraph classes equals their order.
    pub fn is_elementary(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let n = self.n;
        let m = self.edge_count();
        let max_deg = (0..n).map(|v| self.degree(v)).max().unwrap_or(0);
        let is_tree = m + 1 == n;
        let path = is_tree && max_deg <= 2;
        let star = is_tree && max_deg + 1 == n;
        let cycle = n >= 3 && m == n && (0..n).all(|v| self.degree(v) == 2);
        let complete = 2 * m == n * (n - 1);
        path || star || cycle || complete
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Parameters of the pineapple graph: a clique on `alpha` vertices with
/// `beta` pendant vertices hanging off one clique vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PineappleParams {
    pub alpha: u64,
    pub beta: u64,
}

impl PineappleParams {
    pub fn new(alpha: u64, beta: u64) -> Result<Self> {
        if alpha < 2 {
            return Err(Error::CliqueTooSmall(alpha));
        }
        Ok(PineappleParams { alpha, beta })
    }

    pub fn order(&self) -> u64 {
        self.alpha + self.beta
    }
}

impl fmt::Display for PineappleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.alpha, self.beta)
    }
}

/// Builds the pineapple graph: vertices `0..alpha` form the clique and
/// `alpha..alpha+beta` are pendants attached to vertex 0.
pub fn build_pineapple(p: PineappleParams) -> Result<Graph> {
    if p.alpha < 2 {
        return Err(Error::CliqueTooSmall(p.alpha));
    }
    let n = usize::try_from(p.order()).unwrap_or(usize::MAX);
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "pineapple graph",
            n,
            max: MAX_VERTICES,
        });
    }
    let alpha = p.alpha as usize;
    let mut g = Graph::complete(alpha)?;
    g.n = n;
    g.rows.resize(n, 0);
    for w in alpha..n {
        g.add_edge(0, w)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pine(a: u64, b: u64) -> Graph {
        build_pineapple(PineappleParams::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn pineapple_special_cases() {
        let star = pine(2, 4);
        assert_eq!(star.order(), 6);
        assert_eq!(star.degree(0), 5);
        assert!(star.is_elementary());
        assert_eq!(
            canonical_form(&star).unwrap(),
            canonical_form(&Graph::star(5).unwrap()).unwrap()
        );
        assert_eq!(pine(5, 0), Graph::complete(5).unwrap());
        let fig = pine(5, 3);
        assert_eq!(fig.order(), 8);
        assert_eq!(fig.edge_count(), 10 + 3);
        assert_eq!(fig.degree(0), 7);
        assert!(matches!(
            PineappleParams::new(1, 3),
            Err(Error::CliqueTooSmall(1))
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        let k3 = k4
            .induced_subgraph(VertexSet::from_vertices([0, 2, 3]))
            .unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let p43 = pine(4, 3);
        assert_eq!(p43.induced_subgraph(VertexSet::full(4)).unwrap(), k4);
        // apex, a clique neighbour and a pendant form a path centred at the apex
        let p3 = p43
            .induced_subgraph(VertexSet::from_vertices([0, 1, 4]))
            .unwrap();
        assert_eq!(
            canonical_form(&p3).unwrap(),
            canonical_form(&pine(2, 1)).unwrap()
        );
        assert_eq!(
            p43.induced_subgraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let p53 = pine(5, 3);
        let minus_apex = p53.remove_vertex(0).unwrap().unwrap();
        assert_eq!(minus_apex.order(), 7);
        assert!(!minus_apex.is_connected());
        assert!(Graph::empty(1).unwrap().remove_vertex(0).unwrap().is_none());
    }

    #[test]
    fn coalescence_of_edges_is_path() {
        let k2 = Graph::complete(2).unwrap();
        let p = k2.coalescence(0, &k2, 0).unwrap();
        assert_eq!(
            canonical_form(&p).unwrap(),
            canonical_form(&Graph::path(3).unwrap()).unwrap()
        );
        assert!(k2.coalescence(2, &k2, 0).is_err());
    }

    #[test]
    fn coalescence_builds_pineapples() {
        for alpha in 2..6u64 {
            for beta in 0..5u64 {
                let clique = Graph::complete(alpha as usize).unwrap();
                let star = Graph::star(beta as usize).unwrap();
                let g = clique.coalescence((alpha as usize) - 1, &star, 0).unwrap();
                assert_eq!(
                    canonical_form(&g).unwrap(),
                    canonical_form(&pine(alpha, beta)).unwrap(),
                    "P({alpha},{beta})"
                );
            }
        }
    }

    #[test]
    fn elementary_recognition() {
        assert!(Graph::path(5).unwrap().is_elementary());
        assert!(Graph::cycle(5).unwrap().is_elementary());
        assert!(Graph::complete(4).unwrap().is_elementary());
        assert!(Graph::empty(1).unwrap().is_elementary());
        assert!(!pine(3, 1).is_elementary());
        assert!(!pine(4, 3).is_elementary());
    }

    #[test]
    fn vertex_set_iteration() {
        let s = VertexSet::from_vertices([5, 0, 3]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
