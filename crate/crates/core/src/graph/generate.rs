//! Graph generators for checks and property tests.

use std::collections::BTreeSet;

use rand::Rng;

use super::graph6::parse_graph6;
use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`connected_graphs`].
pub const GENERATE_MAX_VERTICES: usize = 8;

/// Every connected graph on exactly `n` vertices up to isomorphism, as
/// canonical representatives sorted by canonical form.
///
/// A connected graph always has a vertex whose removal leaves it connected
/// (a leaf of a spanning tree), so extending each connected graph on `n-1`
/// vertices by a vertex joined to a nonempty subset reaches every class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > GENERATE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "connected graph generation",
            n,
            max: GENERATE_MAX_VERTICES,
        });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(1)?)?]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = parse_graph6(form.graph6())?;
            for mask in 1u64..1 << (m - 1) {
                let mut g = Graph::empty(m)?;
                g.rows[..m - 1].copy_from_slice(&base.rows);
                for u in (0..m - 1).filter(|u| mask >> u & 1 == 1) {
                    g.add_edge(u, m - 1)?;
                }
                next.insert(canonical_form(&g)?);
            }
        }
        level = next;
    }
    level.iter().map(|f| parse_graph6(f.graph6())).collect()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A random spanning tree (each vertex joined to a random earlier one) plus
/// independent extra edges with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut g = random_graph(rng, n, p)?;
    for v in 1..n {
        let u = rng.gen_range(0..v);
        if !g.has_edge(u, v) {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}
