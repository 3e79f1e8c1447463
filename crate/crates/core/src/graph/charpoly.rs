//! Characteristic polynomial `det(xI - A)` of the adjacency matrix.

use super::Graph;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{lift, Scalar};

pub const CHARPOLY_MAX_VERTICES: usize = 16;

/// Faddeev–LeVerrier over the integers. Each step divides by `k` exactly,
/// so no rationals are needed.
pub fn charpoly<T: Scalar>(g: &Graph) -> Result<Poly<T>> {
    let n = g.order();
    if n > CHARPOLY_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "characteristic polynomial",
            n,
            max: CHARPOLY_MAX_VERTICES,
        });
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let times_adj = |m: &[Vec<T>]| -> Vec<Vec<T>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        nbrs[i]
                            .iter()
                            .fold(T::zero(), |acc, &l| acc + m[l][j].clone())
                    })
                    .collect()
            })
            .collect()
    };
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::one();
    let mut m = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = times_adj(&m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].clone() + c[n - k + 1].clone();
        }
        let am = times_adj(&next);
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        let (q, r) = trace.div_rem(&lift::<T>(k as i64));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
        c[n - k] = -q;
        m = next;
    }
    Ok(Poly::new(c))
}

/// Characteristic polynomial of `G - v`; the empty graph contributes `1`.
pub fn charpoly_deleted<T: Scalar>(g: &Graph, v: usize) -> Result<Poly<T>> {
    match g.remove_vertex(v)? {
        Some(h) => charpoly(&h),
        None => Ok(Poly::one()),
    }
}
