//! Canonical labeling of small graphs.
//!
//! Individualization-refinement: the vertex partition is refined by
//! neighbour counts until stable, then the first non-trivial cell is split
//! by individualizing each of its vertices in turn. Among all discrete
//! leaves, the labeling with the lexicographically largest upper-triangle
//! bit string wins. Twin vertices in a cell (same neighbours apart from each
//! other) are swapped by an automorphism, so only one of them is branched on.

use std::fmt;

use super::graph6::emit_graph6;
use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 16;
/// Largest order accepted by [`canonical_form_exhaustive`].
pub const EXHAUSTIVE_MAX_VERTICES: usize = 8;

const REFINED_VERSION: u8 = 1;
const EXHAUSTIVE_VERSION: u8 = 0x80 | 1;

/// Opaque byte string, equal for two graphs iff they are isomorphic.
///
/// The first byte is a format version; the rest is the graph6 encoding of
/// the canonically relabeled graph. Forms produced by different methods
/// carry different versions and must not be mixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn version(&self) -> u8 {
        self.0[0]
    }

    /// graph6 text of the canonical representative.
    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.0[1..]).expect("graph6 is ASCII")
    }

    fn new(version: u8, g: &Graph, order: &[usize]) -> Self {
        let mut perm = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let relabeled = g.permuted(&perm);
        let mut bytes = vec![version];
        bytes.extend_from_slice(emit_graph6(&relabeled).expect("small graph").as_bytes());
        CanonicalForm(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}:{}", self.version(), self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}:{}", self.version(), self.graph6())
    }
}

/// Upper triangle in graph6 order, first bit most significant.
fn certificate(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut cert = 0u128;
    for j in 1..n {
        for i in 0..j {
            cert = cert << 1 | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    cert
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(g.order());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (g.rows[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        // splitting only ever adds cells
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let nu = g.rows[u] & !(1 << v);
    let nv = g.rows[v] & !(1 << u);
    nu == nv
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let cert = certificate(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut reps: Vec<usize> = Vec::new();
        for &v in cell {
            if !reps.iter().any(|&r| twins(self.g, r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut split = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(vec![v]);
            split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            split.extend_from_slice(&cells[target + 1..]);
            self.run(split);
        }
    }
}

/// Canonical form by refinement and backtracking. Guarded at
/// [`CANON_MAX_VERTICES`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            max: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search { g, best: None };
    search.run(vec![(0..n).collect()]);
    let (_, order) = search.best.expect("at least one leaf");
    Ok(CanonicalForm::new(REFINED_VERSION, g, &order))
}

/// Canonical form as the best labeling over all `n!` permutations.
pub fn canonical_form_exhaustive(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "exhaustive canonical form",
            n,
            max: EXHAUSTIVE_MAX_VERTICES,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = (certificate(g, &order), order.clone());
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            let cert = certificate(g, &order);
            if cert > best.0 {
                best = (cert, order.clone());
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm::new(EXHAUSTIVE_VERSION, g, &best.1))
}
