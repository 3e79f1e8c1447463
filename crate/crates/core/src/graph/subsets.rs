//! Enumeration of vertex sets inducing connected subgraphs.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Default guard on the host order for exhaustive enumeration.
pub const SUBSET_MAX_VERTICES: usize = 16;

/// Streams every nonempty vertex set that induces a connected subgraph,
/// each exactly once.
///
/// Sets are grown from their minimum vertex (the anchor): a set is extended
/// only by vertices above the anchor that are exclusive neighbours of the
/// newly added vertex, i.e. not already adjacent to the current set. This is
/// the ESU scheme; disconnected candidates are never generated.
pub struct ConnectedSubsets<'g> {
    graph: &'g Graph,
    next_anchor: usize,
    // (current set, extension candidates, anchor)
    stack: Vec<(u64, u64, usize)>,
}

impl<'g> ConnectedSubsets<'g> {
    fn new(graph: &'g Graph) -> Self {
        ConnectedSubsets {
            graph,
            next_anchor: 0,
            stack: Vec::new(),
        }
    }

    /// Closed neighbourhood of a set.
    fn closed_nbhd(&self, set: u64) -> u64 {
        VertexSet(set)
            .iter()
            .fold(set, |acc, v| acc | self.graph.rows[v])
    }
}

fn above(anchor: usize) -> u64 {
    if anchor >= 63 {
        0
    } else {
        !((1u64 << (anchor + 1)) - 1)
    }
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let (set, ext, anchor) = match self.stack.pop() {
            Some(frame) => frame,
            None => {
                if self.next_anchor >= self.graph.n {
                    return None;
                }
                let v = self.next_anchor;
                self.next_anchor += 1;
                (1u64 << v, self.graph.rows[v] & above(v), v)
            }
        };
        let nbhd = self.closed_nbhd(set);
        let mut remaining = ext;
        while remaining != 0 {
            let w = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let exclusive = self.graph.rows[w] & !nbhd & above(anchor);
            self.stack
                .push((set | 1 << w, remaining | exclusive, anchor));
        }
        Some(VertexSet(set))
    }
}

/// All connected induced vertex sets of `g`, guarded by `max_n`.
pub fn connected_induced_subsets(g: &Graph, max_n: usize) -> Result<ConnectedSubsets<'_>> {
    if g.n > max_n {
        return Err(Error::TooLarge {
            what: "connected subset enumeration",
            n: g.n,
            max: max_n,
        });
    }
    Ok(ConnectedSubsets::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_pineapple, PineappleParams};
    use std::collections::HashSet;

    fn brute_force(g: &Graph) -> HashSet<u64> {
        (1..1u64 << g.order())
            .filter(|&m| g.is_connected_on(VertexSet(m)))
            .collect()
    }

    fn enumerate(g: &Graph) -> Vec<u64> {
        connected_induced_subsets(g, 16)
            .unwrap()
            .map(|s| s.0)
            .collect()
    }

    #[test]
    fn triangle_has_seven() {
        assert_eq!(enumerate(&Graph::complete(3).unwrap()).len(), 7);
    }

    #[test]
    fn path_on_three_vertices() {
        // 7 nonempty subsets, all connected except the two endpoints
        let sets = enumerate(&Graph::path(3).unwrap());
        assert_eq!(sets.len(), 6);
        assert!(!sets.contains(&0b101));
    }

    #[test]
    fn matches_brute_force_without_repeats() {
        let graphs = [
            build_pineapple(PineappleParams::new(4, 3).unwrap()).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (2, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            let sets = enumerate(g);
            let unique: HashSet<u64> = sets.iter().copied().collect();
            assert_eq!(unique.len(), sets.len(), "repeated set in {g:?}");
            assert_eq!(unique, brute_force(g), "{g:?}");
        }
    }

    #[test]
    fn guard() {
        let g = Graph::path(17).unwrap();
        assert!(matches!(
            connected_induced_subsets(&g, 16),
            Err(Error::TooLarge { n: 17, max: 16, .. })
        ));
    }
}
