//! Closed forms for the pineapple family.
//!
//! The characteristic polynomial of `P(α,β)` factors as
//! `x^(β-1) (x+1)^(α-2) q(x)` with the cubic
//! `q(x) = x³ - (α-2)x² - (α+β-1)x + β(α-2)`, and the spectral radius is the
//! largest root of `q`. The family is closed under connected induced
//! subgraphs, so `b` and `c` can be computed without enumeration.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PineappleParams;
use crate::{largest_real_root, AlgebraicNumber, IntPoly};

/// Largest family size accepted by [`FamilyRadii`].
pub const FAMILY_MAX_MEMBERS: u64 = 20_000;

/// Width every cached radius is refined to, so that most comparisons are
/// settled by disjoint intervals.
const CACHE_BITS: u32 = 40;

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

pub fn cubic(p: PineappleParams) -> IntPoly {
    let (a, b) = (int(p.alpha), int(p.beta));
    let two = BigInt::from(2);
    IntPoly::new(vec![
        &b * (&a - &two),
        -(&a + &b - BigInt::from(1)),
        -(&a - &two),
        BigInt::from(1),
    ])
}

/// Exact spectral radius of `P(α,β)`.
pub fn spectral_radius(p: PineappleParams) -> AlgebraicNumber {
    if (p.alpha, p.beta) == (2, 0) {
        // K2
        return AlgebraicNumber::from_i64(1);
    }
    largest_real_root(&cubic(p)).expect("the cubic is monic")
}

/// Number of isomorphism classes of connected induced subgraphs.
pub fn b_count(p: PineappleParams) -> u64 {
    (p.alpha - 1) * (p.beta + 1) + 1
}

/// One class of connected induced subgraph of a pineapple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyMember {
    /// The single vertex, radius 0.
    Single,
    Pineapple(PineappleParams),
}

/// `{K1} ∪ {P(i,j) : 2 ≤ i ≤ α, 0 ≤ j ≤ β}`.
pub fn subgraph_family(p: PineappleParams) -> Vec<FamilyMember> {
    let mut out = vec![FamilyMember::Single];
    for i in 2..=p.alpha {
        for j in 0..=p.beta {
            out.push(FamilyMember::Pineapple(PineappleParams {
                alpha: i,
                beta: j,
            }));
        }
    }
    out
}

/// Characteristic polynomial kept in factored form. `x_power` is `β-1`,
/// which is `-1` for complete graphs; the cubic then has the factor `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredCharpoly {
    pub x_power: i64,
    pub x_plus_one_power: u64,
    pub cubic: IntPoly,
}

impl FactoredCharpoly {
    pub fn new(p: PineappleParams) -> Self {
        FactoredCharpoly {
            x_power: p.beta as i64 - 1,
            x_plus_one_power: p.alpha - 2,
            cubic: cubic(p),
        }
    }

    pub fn expand(&self) -> IntPoly {
        let plus_one = IntPoly::from_i64s(&[1, 1]).pow(self.x_plus_one_power as u32);
        let body = &plus_one * &self.cubic;
        if self.x_power >= 0 {
            body.shift_up(self.x_power as usize)
        } else {
            body.div_exact(&IntPoly::x())
                .expect("cubic vanishes at 0 when β = 0")
        }
    }

    /// Multiplicity of an integer eigenvalue in the full spectrum.
    pub fn multiplicity(&self, root: i64) -> u64 {
        let from_cubic = self.cubic.root_multiplicity(&BigInt::from(root)) as i64;
        let extra = match root {
            0 => self.x_power,
            -1 => self.x_plus_one_power as i64,
            _ => 0,
        };
        (from_cubic + extra) as u64
    }
}

#[derive(Clone, Debug)]
pub struct PineappleSpectrum {
    pub params: PineappleParams,
    pub cubic: IntPoly,
    pub radius: AlgebraicNumber,
    pub charpoly: FactoredCharpoly,
}

impl PineappleSpectrum {
    pub fn new(p: PineappleParams) -> Self {
        PineappleSpectrum {
            params: p,
            cubic: cubic(p),
            radius: spectral_radius(p),
            charpoly: FactoredCharpoly::new(p),
        }
    }
}

/// Exact spectral radii of a rectangle of the family, refined once so that
/// repeated comparisons are cheap.
pub struct FamilyRadii {
    alpha_max: u64,
    beta_max: u64,
    radii: Vec<AlgebraicNumber>,
}

impl FamilyRadii {
    pub fn new(alpha_max: u64, beta_max: u64) -> Result<Self> {
        if alpha_max < 2 {
            return Err(Error::CliqueTooSmall(alpha_max));
        }
        let members = (alpha_max - 1).saturating_mul(beta_max.saturating_add(1));
        if members > FAMILY_MAX_MEMBERS {
            return Err(Error::TooLarge {
                what: "pineapple family",
                n: members as usize,
                max: FAMILY_MAX_MEMBERS as usize,
            });
        }
        let width = Ratio::new(BigInt::from(1), BigInt::from(1u64) << CACHE_BITS);
        let mut radii = Vec::with_capacity(members as usize);
        for i in 2..=alpha_max {
            for j in 0..=beta_max {
                let mut r = spectral_radius(PineappleParams { alpha: i, beta: j });
                r.refine_in_place(&width);
                radii.push(r);
            }
        }
        Ok(FamilyRadii {
            alpha_max,
            beta_max,
            radii,
        })
    }

    pub fn for_params(p: PineappleParams) -> Result<Self> {
        Self::new(p.alpha, p.beta)
    }

    pub fn radius(&self, p: PineappleParams) -> &AlgebraicNumber {
        assert!(self.covers(p), "{p} outside the cached family");
        &self.radii[((p.alpha - 2) * (self.beta_max + 1) + p.beta) as usize]
    }

    pub fn covers(&self, p: PineappleParams) -> bool {
        p.alpha >= 2 && p.alpha <= self.alpha_max && p.beta <= self.beta_max
    }

    /// Pairs of family members of `p` sharing a spectral radius, each pair
    /// listed once with the smaller clique first.
    ///
    /// Radii increase in both parameters, so only pairs with
    /// `(α₂-α₁)(β₂-β₁) < 0` can coincide.
    pub fn collisions(
        &self,
        p: PineappleParams,
    ) -> Result<Vec<(PineappleParams, PineappleParams)>> {
        if !self.covers(p) {
            return Err(Error::InvalidArgument(format!(
                "{p} outside the cached family"
            )));
        }
        let mut out = Vec::new();
        for a1 in 2..=p.alpha {
            for a2 in a1 + 1..=p.alpha {
                for b1 in 1..=p.beta {
                    for b2 in 0..b1 {
                        let p1 = PineappleParams {
                            alpha: a1,
                            beta: b1,
                        };
                        let p2 = PineappleParams {
                            alpha: a2,
                            beta: b2,
                        };
                        if self.radius(p1).compare(self.radius(p2)) == Ordering::Equal {
                            out.push((p1, p2));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Number of distinct radii in the family of `p`, single vertex included.
    pub fn c_count(&self, p: PineappleParams) -> Result<u64> {
        let collisions = self.collisions(p)?;
        let cols = p.beta + 1;
        let index = |q: PineappleParams| ((q.alpha - 2) * cols + q.beta) as usize;
        let mut parent: Vec<usize> = (0..((p.alpha - 1) * cols) as usize).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut merges = 0;
        for (p1, p2) in collisions {
            let (r1, r2) = (find(&mut parent, index(p1)), find(&mut parent, index(p2)));
            if r1 != r2 {
                parent[r1.max(r2)] = r1.min(r2);
                merges += 1;
            }
        }
        Ok(b_count(p) - merges)
    }

    pub fn redundancy(&self, p: PineappleParams) -> Result<Ratio<u64>> {
        Ok(Ratio::new(b_count(p), self.c_count(p)?))
    }
}

/// Number of distinct spectral radii among connected induced subgraphs.
pub fn c_count(p: PineappleParams) -> Result<u64> {
    FamilyRadii::for_params(p)?.c_count(p)
}

/// `b / c` as an exact rational.
pub fn redundancy(p: PineappleParams) -> Result<Ratio<u64>> {
    FamilyRadii::for_params(p)?.redundancy(p)
}

/// A one-parameter slice of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sweep {
    /// Fixed `α`, `β` over `from..=to`.
    Beta { alpha: u64, from: u64, to: u64 },
    /// Fixed `β`, `α` over `from..=to`.
    Alpha { beta: u64, from: u64, to: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitRow {
    pub params: PineappleParams,
    pub b: u64,
    pub c: u64,
    pub redundancy: Ratio<u64>,
    /// `b - c` stays the same from this row to the end of the sweep.
    pub tail: bool,
}

/// `b`, `c` and `r` along a sweep, sharing one radius cache.
pub fn limit_curve(sweep: Sweep) -> Result<Vec<LimitRow>> {
    let (points, alpha_max, beta_max): (Vec<PineappleParams>, u64, u64) = match sweep {
        Sweep::Beta { alpha, from, to } => {
            PineappleParams::new(alpha, 0)?;
            (
                (from..=to)
                    .map(|beta| PineappleParams { alpha, beta })
                    .collect(),
                alpha,
                to,
            )
        }
        Sweep::Alpha { beta, from, to } => {
            PineappleParams::new(from, beta)?;
            (
                (from..=to)
                    .map(|alpha| PineappleParams { alpha, beta })
                    .collect(),
                to,
                beta,
            )
        }
    };
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty sweep range".into()));
    }
    let cache = FamilyRadii::new(alpha_max, beta_max)?;
    let mut rows = points
        .into_iter()
        .map(|p| {
            let (b, c) = (b_count(p), cache.c_count(p)?);
            Ok(LimitRow {
                params: p,
                b,
                c,
                redundancy: Ratio::new(b, c),
                tail: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let last = rows.last().map(|r| r.b - r.c).expect("nonempty");
    for row in rows.iter_mut().rev() {
        if row.b - row.c != last {
            break;
        }
        row.tail = true;
    }
    Ok(rows)
}

/// First swept parameter value of the constant tail.
pub fn tail_start(rows: &[LimitRow], sweep: Sweep) -> Option<u64> {
    let row = rows.iter().find(|r| r.tail)?;
    Some(match sweep {
        Sweep::Beta { .. } => row.params.beta,
        Sweep::Alpha { .. } => row.params.alpha,
    })
}

/// Evidence for whether a root of the cubic is the spectral radius.
#[derive(Clone, Debug)]
pub struct RadiusCertificate {
    /// Decided by exact comparison with the largest root.
    pub is_radius: bool,
    /// Sign test `3ρ² - 2ρ(α-2) - α - β + 1 > 0`, i.e. `q'(ρ) > 0`.
    pub derivative_positive: bool,
    /// Largest root of `q'`.
    pub critical_point: AlgebraicNumber,
    pub above_critical_point: bool,
}

impl RadiusCertificate {
    /// True when one of the side tests disagrees with the exact answer.
    pub fn disagreement(&self) -> bool {
        self.derivative_positive != self.is_radius || self.above_critical_point != self.is_radius
    }
}

/// Largest root of `q'(x) = 3x² - 2(α-2)x - (α+β-1)`.
pub fn critical_point(p: PineappleParams) -> AlgebraicNumber {
    largest_real_root(&cubic(p).derivative()).expect("derivative has real roots")
}

/// Certifies whether the root `rho` of the cubic is the spectral radius.
pub fn certify_radius(p: PineappleParams, rho: &AlgebraicNumber) -> Result<RadiusCertificate> {
    let q = cubic(p);
    if !rho.is_root_of(&q) {
        return Err(Error::NotARoot(rho.to_decimal(6), q.to_string()));
    }
    let is_radius = rho.compare(&spectral_radius(p)) == Ordering::Equal;
    let derivative_positive = rho.sign_of(&q.derivative()) == Ordering::Greater;
    let critical_point = critical_point(p);
    let above_critical_point = rho.compare(&critical_point) == Ordering::Greater;
    Ok(RadiusCertificate {
        is_radius,
        derivative_positive,
        critical_point,
        above_critical_point,
    })
}

pub fn is_spectral_radius(p: PineappleParams, rho: &AlgebraicNumber) -> Result<bool> {
    Ok(certify_radius(p, rho)?.is_radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_pineapple, charpoly};
    use crate::spectrum::complementarity_spectrum;
    use proptest::prelude::*;

    fn pp(a: u64, b: u64) -> PineappleParams {
        PineappleParams::new(a, b).unwrap()
    }

    fn n(v: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_i64(v)
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic(pp(7, 110)), IntPoly::from_i64s(&[550, -116, -5, 1]));
        assert_eq!(cubic(pp(2, 3)), IntPoly::from_i64s(&[0, -4, 0, 1]));
        assert_eq!(cubic(pp(3, 0)), IntPoly::from_i64s(&[0, -2, -1, 1]));
    }

    #[test]
    fn radius_examples() {
        assert_eq!(spectral_radius(pp(9, 99)), n(11));
        assert_eq!(spectral_radius(pp(2, 8)), n(3));
        assert_eq!(spectral_radius(pp(2, 0)), n(1));
        for a in 2..12 {
            assert_eq!(spectral_radius(pp(a, 0)), n(a as i64 - 1));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(b_count(pp(4, 3)), 13);
        assert_eq!(b_count(pp(2, 0)), 2);
        assert_eq!(b_count(pp(3, 8)), 19);
        assert_eq!(c_count(pp(3, 8)).unwrap(), 17);
        assert_eq!(c_count(pp(3, 2)).unwrap(), 7);
        assert_eq!(c_count(pp(4, 3)).unwrap(), 12);
        assert_eq!(redundancy(pp(3, 8)).unwrap(), Ratio::new(19, 17));
        assert_eq!(redundancy(pp(2, 5)).unwrap(), Ratio::from_integer(1));
        assert_eq!(redundancy(pp(4, 3)).unwrap(), Ratio::new(13, 12));
    }

    #[test]
    fn family_lists() {
        use FamilyMember::*;
        assert_eq!(
            subgraph_family(pp(3, 1)),
            vec![
                Single,
                Pineapple(pp(2, 0)),
                Pineapple(pp(2, 1)),
                Pineapple(pp(3, 0)),
                Pineapple(pp(3, 1))
            ]
        );
        assert_eq!(subgraph_family(pp(2, 0)), vec![Single, Pineapple(pp(2, 0))]);
        assert_eq!(subgraph_family(pp(4, 3)).len(), 13);
    }

    #[test]
    fn radius_certificates() {
        let c = certify_radius(pp(7, 110), &n(11)).unwrap();
        assert!(c.is_radius && !c.disagreement());
        assert!((c.critical_point.to_f64() - 8.104).abs() < 1e-2);
        let c = certify_radius(pp(17, 165), &n(11)).unwrap();
        assert!(!c.is_radius);
        assert!(!c.disagreement());
        assert!(is_spectral_radius(pp(6, 0), &n(5)).unwrap());
        assert!(matches!(
            is_spectral_radius(pp(6, 0), &n(4)),
            Err(Error::NotARoot(..))
        ));
    }

    #[test]
    fn factored_charpoly_matches_adjacency() {
        for a in 2..=6 {
            for b in 0..=6 {
                let p = pp(a, b);
                let g = build_pineapple(p).unwrap();
                let f = FactoredCharpoly::new(p);
                assert_eq!(f.expand(), charpoly::<BigInt>(&g).unwrap(), "{p}");
                let full = f.expand();
                for root in [0, -1] {
                    let m = full.root_multiplicity(&BigInt::from(root)) as u64;
                    assert_eq!(f.multiplicity(root), m, "{p} at {root}");
                }
            }
        }
    }

    #[test]
    fn fast_path_matches_oracle_on_small_grid() {
        for a in 2..=4 {
            for b in 0..=4 {
                let p = pp(a, b);
                let r = complementarity_spectrum(&build_pineapple(p).unwrap()).unwrap();
                assert_eq!(r.b as u64, b_count(p), "{p}");
                assert_eq!(r.c as u64, c_count(p).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn limit_rows_for_triangles() {
        let sweep = Sweep::Beta {
            alpha: 3,
            from: 8,
            to: 20,
        };
        let rows = limit_curve(sweep).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].redundancy < w[0].redundancy);
        }
        for row in &rows {
            let b = row.params.beta;
            assert_eq!(row.redundancy, Ratio::new(2 * b + 3, 2 * b + 1));
            assert!(row.tail);
        }
        assert_eq!(tail_start(&rows, sweep), Some(8));
        let stars = limit_curve(Sweep::Beta {
            alpha: 2,
            from: 0,
            to: 30,
        })
        .unwrap();
        assert!(stars.iter().all(|r| r.redundancy == Ratio::from_integer(1)));
        let by_alpha = limit_curve(Sweep::Alpha {
            beta: 2,
            from: 2,
            to: 12,
        })
        .unwrap();
        assert_eq!(by_alpha.len(), 11);
        assert!(limit_curve(Sweep::Alpha {
            beta: 2,
            from: 1,
            to: 12
        })
        .is_err());
    }

    #[test]
    fn family_guard() {
        assert!(FamilyRadii::new(3, 1_000_000).is_err());
    }

    proptest! {
        #[test]
        fn shifted_cubic_identity(a in 2u64..40, rho in 0i64..30) {
            // choose β so that ρ is a root: q(ρ) = 0 is linear in β
            let (af, r) = (a as i64, rho);
            let num = r * r * r - (af - 2) * r * r - (af - 1) * r;
            let den = r - (af - 2);
            prop_assume!(den != 0 && num % den == 0 && num / den >= 0);
            let beta = (num / den) as u64;
            let p = pp(a, beta);
            let bf = beta as i64;
            prop_assert!(cubic(p).eval(&BigInt::from(r)) == BigInt::from(0));
            let shifted = cubic(p).taylor_shift(&BigInt::from(r));
            let want = IntPoly::from_i64s(&[0, 3 * r * r - 2 * r * (af - 2) - af - bf + 1, 3 * r - af + 2, 1]);
            prop_assert_eq!(shifted, want);
        }

        #[test]
        fn radius_strictly_monotone(a in 2u64..12, b in 0u64..40, da in 0u64..3, db in 0u64..3) {
            prop_assume!(da + db > 0);
            let lo = spectral_radius(pp(a, b));
            let hi = spectral_radius(pp(a + da, b + db));
            prop_assert_eq!(lo.compare(&hi), Ordering::Less);
        }

        #[test]
        fn cubic_sign_facts(a in 3u64..30, b in 1u64..60) {
            let q = cubic(pp(a, b));
            prop_assert!(q.coeff(0) > BigInt::from(0));
            let roots = crate::isolate_real_roots(&q).unwrap();
            prop_assert_eq!(roots.len(), 3);
            prop_assert!(roots[0].compare(&n(0)) == Ordering::Less);
        }

        #[test]
        fn certified_radius_satisfies_sign_test(a in 2u64..20, b in 0u64..60) {
            let p = pp(a, b);
            let c = certify_radius(p, &spectral_radius(p)).unwrap();
            prop_assert!(c.is_radius);
            prop_assert!(c.derivative_positive);
            prop_assert!(c.above_critical_point);
        }
    }
}
