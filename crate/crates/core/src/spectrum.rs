//! Brute-force complementarity spectrum of a small connected graph.
//!
//! Every connected induced subgraph is enumerated, bucketed by isomorphism
//! class, and each class contributes the spectral radius of its adjacency
//! matrix. The single-vertex class contributes radius 0.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, charpoly, connected_induced_subsets, CanonicalForm, Graph, VertexSet,
    CANON_MAX_VERTICES,
};
use crate::{largest_real_root, AlgebraicNumber, BigInt};

/// One isomorphism class of connected induced subgraphs.
#[derive(Clone, Debug)]
pub struct SubgraphClass {
    pub form: CanonicalForm,
    /// Smallest (as a bitmask) vertex set inducing this class.
    pub representative: VertexSet,
    pub order: usize,
    pub radius: AlgebraicNumber,
}

/// Classes sharing one spectral radius. Only groups of two or more classes
/// are reported as collisions.
#[derive(Clone, Debug)]
pub struct CollisionGroup {
    pub radius: AlgebraicNumber,
    /// Indices into [`SpectrumReport::classes`].
    pub classes: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub order: usize,
    /// Number of isomorphism classes of connected induced subgraphs.
    pub b: usize,
    /// Number of distinct spectral radii among them.
    pub c: usize,
    pub redundancy: Ratio<u64>,
    /// Sorted by canonical form.
    pub classes: Vec<SubgraphClass>,
    pub collisions: Vec<CollisionGroup>,
    /// The complementarity spectrum, ascending.
    pub spectrum: Vec<AlgebraicNumber>,
}

impl SpectrumReport {
    /// `c <= b` and `n <= b <= 2^n - 1`.
    pub fn bounds_hold(&self) -> bool {
        let n = self.order as u32;
        let upper = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.c <= self.b && self.order <= self.b && (self.b as u64) <= upper
    }

    pub fn class_forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.classes.iter().map(|c| &c.form)
    }
}

/// Spectral radius of a graph, exactly.
pub fn spectral_radius(g: &Graph) -> Result<AlgebraicNumber> {
    largest_real_root(&charpoly::<BigInt>(g)?)
}

pub fn complementarity_spectrum(g: &Graph) -> Result<SpectrumReport> {
    if g.order() > CANON_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "complementarity spectrum",
            n: g.order(),
            max: CANON_MAX_VERTICES,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut buckets: BTreeMap<CanonicalForm, VertexSet> = BTreeMap::new();
    for set in connected_induced_subsets(g, CANON_MAX_VERTICES)? {
        let form = canonical_form(&g.induced_subgraph(set)?)?;
        buckets
            .entry(form)
            .and_modify(|rep| *rep = (*rep).min(set))
            .or_insert(set);
    }
    let classes = buckets
        .into_iter()
        .map(|(form, representative)| {
            let sub = g.induced_subgraph(representative)?;
            Ok(SubgraphClass {
                form,
                representative,
                order: sub.order(),
                radius: spectral_radius(&sub)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(g.order(), classes))
}

fn assemble(order: usize, classes: Vec<SubgraphClass>) -> SpectrumReport {
    let mut by_radius: Vec<usize> = (0..classes.len()).collect();
    by_radius.sort_by(|&i, &j| {
        classes[i]
            .radius
            .compare(&classes[j].radius)
            .then(i.cmp(&j))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for idx in by_radius {
        match groups.last_mut() {
            Some(group)
                if classes[group[0]].radius.compare(&classes[idx].radius) == Ordering::Equal =>
            {
                group.push(idx)
            }
            _ => groups.push(vec![idx]),
        }
    }
    let b = classes.len();
    let c = groups.len();
    let spectrum = groups
        .iter()
        .map(|g| classes[g[0]].radius.clone())
        .collect();
    let collisions = groups
        .into_iter()
        .filter(|g| g.len() > 1)
        .map(|g| CollisionGroup {
            radius: classes[g[0]].radius.clone(),
            classes: g,
        })
        .collect();
    SpectrumReport {
        order,
        b,
        c,
        redundancy: Ratio::new(b as u64, c as u64),
        classes,
        collisions,
        spectrum,
    }
}

/// Checks `c <= b` and `n <= b <= 2^n - 1` for a connected graph.
pub fn verify_bounds(g: &Graph) -> Result<bool> {
    Ok(complementarity_spectrum(g)?.bounds_hold())
}
