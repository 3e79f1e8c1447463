//! Pairs of pineapple graphs whose cubic factors share roots.
//!
//! Two families are constructed arithmetically. Pairs sharing their two
//! largest cubic roots come from integers `a = α₁-α₂`, `k = α₁+α₂-2` of the
//! same parity with `4(k-1) | k(k-a)(k-a-2)`. Pairs sharing exactly one
//! integer root `ρ` come from a slope `k = r/s` and a factorization
//! `(α₁-ρ-2)(α₂-ρ-2) = sρ(ρ+1)/r`. Every constructed pair is re-checked
//! with an exact polynomial gcd before it is returned.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PineappleParams;
use crate::pineapple::{certify_radius, cubic, FactoredCharpoly, RadiusCertificate};
use crate::{isolate_real_roots, AlgebraicNumber, IntPoly};

/// Which residue of `k` mod 4 applied, and the form `a²-1` must take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mod4Case {
    /// `k ≡ 0`, `a²-1 = (4r+1)(k-1)`
    A,
    /// `k ≡ 1`, `a²-1 = (4r+2)(k-1)`
    B,
    /// `k ≡ 2`, `a²-1 = (4r-1)(k-1)`
    C,
    /// `k ≡ 3`, `a²-1 = 4r(k-1)`
    D,
}

impl Mod4Case {
    fn of(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Mod4Case::A,
            1 => Mod4Case::B,
            2 => Mod4Case::C,
            _ => Mod4Case::D,
        }
    }

    /// The offset `c` in `a²-1 = (4r+c)(k-1)`.
    fn offset(self) -> i128 {
        match self {
            Mod4Case::A => 1,
            Mod4Case::B => 2,
            Mod4Case::C => -1,
            Mod4Case::D => 0,
        }
    }
}

impl fmt::Display for Mod4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mod4Case::A => "a",
            Mod4Case::B => "b",
            Mod4Case::C => "c",
            Mod4Case::D => "d",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoCommonWitness {
    pub a: i64,
    pub k: i64,
    pub case: Mod4Case,
    pub r: i64,
}

impl TwoCommonWitness {
    pub fn alphas(&self) -> (i64, i64) {
        ((self.k + self.a + 2) / 2, (self.k - self.a + 2) / 2)
    }

    /// `β_i = k(α_j-1)(α_j-2)/(k-1)`.
    pub fn betas(&self) -> (i64, i64) {
        let (a1, a2) = self.alphas();
        let k = self.k as i128;
        let beta = |aj: i64| {
            let aj = aj as i128;
            (k * (aj - 1) * (aj - 2) / (k - 1)) as i64
        };
        (beta(a2), beta(a1))
    }
}

/// Decides whether `(a, k)` yields integral `β`, recording the residue case.
///
/// The case analysis is cross-checked against the direct divisibility test
/// `4(k-1) | k(k-a)(k-a-2)`.
pub fn check_mod4(a: i64, k: i64) -> Result<Option<TwoCommonWitness>> {
    if (a - k).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch { a, k });
    }
    if k < 3 || a == 0 {
        return Err(Error::InvalidArgument(format!(
            "need k >= 3 and a != 0, got a={a}, k={k}"
        )));
    }
    let case = Mod4Case::of(k);
    let (ai, ki) = (a as i128, k as i128);
    let (q, rem) = (ai * ai - 1).div_rem(&(ki - 1));
    let r = if rem == 0 && (q - case.offset()).rem_euclid(4) == 0 {
        Some((q - case.offset()).div_euclid(4))
    } else {
        None
    };
    let direct = (ki * (ki - ai) * (ki - ai - 2)).rem_euclid(4 * (ki - 1)) == 0;
    if direct != r.is_some() {
        return Err(Error::Inconsistent(format!(
            "residue case {case} and direct divisibility disagree at a={a}, k={k}"
        )));
    }
    Ok(r.map(|r| TwoCommonWitness {
        a,
        k,
        case,
        r: r as i64,
    }))
}

/// Slope `k = r/s` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlopeParams {
    pub r: i64,
    pub s: i64,
}

impl SlopeParams {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r < 1 || s < 1 || r.gcd(&s) != 1 {
            return Err(Error::InvalidArgument(format!(
                "slope {r}/{s} must be positive and in lowest terms"
            )));
        }
        Ok(SlopeParams { r, s })
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        Ratio::new(self.r, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoincidenceKind {
    TwoCommonLargest,
    OneCommonRadius,
    OneCommonNonRadius,
}

impl fmt::Display for CoincidenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoincidenceKind::TwoCommonLargest => "two-common-largest",
            CoincidenceKind::OneCommonRadius => "one-common-radius",
            CoincidenceKind::OneCommonNonRadius => "one-common-non-radius",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct OneCommonWitness {
    pub slope: SlopeParams,
    pub rho: i64,
    pub m: i64,
    pub n: i64,
    /// Radius certificates of `ρ` for the two members.
    pub certificates: [RadiusCertificate; 2],
}

#[derive(Clone, Debug)]
pub enum Witness {
    TwoCommon(TwoCommonWitness),
    OneCommon(Box<OneCommonWitness>),
}

/// Multiplicities of the eigenvalues 0 and -1 in the full spectrum, which
/// lie outside the cubic factor except in degenerate cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialEigenvalues {
    pub zero: u64,
    pub minus_one: u64,
}

impl TrivialEigenvalues {
    pub fn of(p: PineappleParams) -> Self {
        let f = FactoredCharpoly::new(p);
        TrivialEigenvalues {
            zero: f.multiplicity(0),
            minus_one: f.multiplicity(-1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoincidencePair {
    pub p1: PineappleParams,
    pub p2: PineappleParams,
    pub kind: CoincidenceKind,
    /// `gcd` of the two cubics; its roots are exactly the shared values.
    pub common_factor: IntPoly,
    /// Ascending.
    pub shared: Vec<AlgebraicNumber>,
    /// `s²·A` with `A = k(α₁+α₂) - k(k+2)`; `s = 1` for integer slopes.
    pub a_scaled: i128,
    pub witness: Witness,
    pub trivial: [TrivialEigenvalues; 2],
}

impl CoincidencePair {
    /// `(β₂-β₁)/(α₁-α₂)`.
    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new(
            self.p2.beta as i64 - self.p1.beta as i64,
            self.p1.alpha as i64 - self.p2.alpha as i64,
        )
    }

    /// `(α₂-α₁)(β₂-β₁) < 0`.
    pub fn sign_condition_holds(&self) -> bool {
        let da = self.p2.alpha as i128 - self.p1.alpha as i128;
        let db = self.p2.beta as i128 - self.p1.beta as i128;
        da * db < 0
    }

    fn sort_key(&self) -> (u64, u64, u64, u64) {
        (self.p1.alpha, self.p1.beta, self.p2.alpha, self.p2.beta)
    }
}

fn params(alpha: i128, beta: i128) -> Option<PineappleParams> {
    if alpha < 2 || beta < 0 {
        return None;
    }
    Some(PineappleParams {
        alpha: u64::try_from(alpha).ok()?,
        beta: u64::try_from(beta).ok()?,
    })
}

fn inconsistent(p1: PineappleParams, p2: PineappleParams, what: &str) -> Error {
    Error::Inconsistent(format!("{p1} and {p2}: {what}"))
}

/// The pair belonging to a two-common witness, or `None` when `α₂ < 2`.
pub fn pair_from_ak(w: TwoCommonWitness) -> Result<Option<CoincidencePair>> {
    let (a1, a2) = w.alphas();
    let (b1, b2) = w.betas();
    let (Some(p1), Some(p2)) = (params(a1.into(), b1.into()), params(a2.into(), b2.into())) else {
        return Ok(None);
    };
    let (q1, q2) = (cubic(p1), cubic(p2));
    let k = BigInt::from(w.k);
    // x² - (k-1)x - (β₁ - k(α₂-2))
    let expected = IntPoly::new(vec![
        -(BigInt::from(b1) - &k * BigInt::from(a2 - 2)),
        -(&k - BigInt::from(1)),
        BigInt::from(1),
    ]);
    let common = q1.gcd(&q2);
    if common != expected {
        return Err(inconsistent(
            p1,
            p2,
            &format!("gcd {common}, expected {expected}"),
        ));
    }
    let shared = isolate_real_roots(&common)?;
    for q in [&q1, &q2] {
        let roots = isolate_real_roots(q)?;
        if roots.len() != 3 || roots[1..] != shared[..] {
            return Err(inconsistent(p1, p2, "shared roots are not the two largest"));
        }
    }
    Ok(Some(CoincidencePair {
        p1,
        p2,
        kind: CoincidenceKind::TwoCommonLargest,
        common_factor: common,
        shared,
        a_scaled: 0,
        witness: Witness::TwoCommon(w),
        trivial: [TrivialEigenvalues::of(p1), TrivialEigenvalues::of(p2)],
    }))
}

/// All two-common pairs with `3 ≤ k ≤ max_k` and `a ≥ 1`, sorted by `(k, a)`.
pub fn enumerate_two_common(max_k: i64) -> Result<Vec<CoincidencePair>> {
    let mut out = Vec::new();
    for k in 3..=max_k {
        for a in (1..=k).filter(|a| (k - a) % 2 == 0) {
            if let Some(w) = check_mod4(a, k)? {
                out.extend(pair_from_ak(w)?);
            }
        }
    }
    Ok(out)
}

fn divisors(n: i128) -> Vec<i128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Builds and validates the pair with `α₁ = ρ+2+m`, `α₂ = ρ+2+n`.
/// `Ok(None)` means the parameters do not describe two graphs.
pub fn one_common_pair(
    rho: i64,
    sp: SlopeParams,
    m: i64,
    n: i64,
) -> Result<Option<CoincidencePair>> {
    let (rh, r, s) = (rho as i128, sp.r as i128, sp.s as i128);
    if (m as i128) * (n as i128) * r != s * rh * (rh + 1) {
        return Err(Error::InvalidArgument(format!("{m}·{n} is not sρ(ρ+1)/r")));
    }
    let a1 = rh + 2 + m as i128;
    let a2 = rh + 2 + n as i128;
    // β_i = ρ(ρ+1) + r(α_j-ρ-2)/s
    let beta = |aj: i128| {
        let num = r * (aj - rh - 2);
        (num % s == 0).then(|| rh * (rh + 1) + num / s)
    };
    let (Some(b1), Some(b2)) = (beta(a2), beta(a1)) else {
        return Ok(None);
    };
    let (Some(p1), Some(p2)) = (params(a1, b1), params(a2, b2)) else {
        return Ok(None);
    };
    if p1 == p2 {
        return Ok(None);
    }
    let a_scaled = r * s * (a1 + a2) - r * (r + 2 * s);
    if a_scaled == 0 {
        return Ok(None);
    }
    let common = cubic(p1).gcd(&cubic(p2));
    if common != IntPoly::linear(BigInt::from(rho)) {
        return Err(inconsistent(
            p1,
            p2,
            &format!("gcd {common}, expected x - {rho}"),
        ));
    }
    let root = AlgebraicNumber::from_i64(rho);
    let certificates = [certify_radius(p1, &root)?, certify_radius(p2, &root)?];
    let kind = if m < 0 && n < 0 {
        CoincidenceKind::OneCommonRadius
    } else {
        CoincidenceKind::OneCommonNonRadius
    };
    let both = certificates.iter().all(|c| c.is_radius);
    if both != (kind == CoincidenceKind::OneCommonRadius) {
        return Err(inconsistent(
            p1,
            p2,
            &format!("factor signs say {kind} but radius certificates disagree"),
        ));
    }
    Ok(Some(CoincidencePair {
        p1,
        p2,
        kind,
        common_factor: common,
        shared: vec![root],
        a_scaled,
        witness: Witness::OneCommon(Box::new(OneCommonWitness {
            slope: sp,
            rho,
            m,
            n,
            certificates,
        })),
        trivial: [TrivialEigenvalues::of(p1), TrivialEigenvalues::of(p2)],
    }))
}

/// Every pair sharing exactly the root `ρ` with slope `r/s`, listed with
/// `α₁ < α₂`.
///
/// `β` is integral exactly when `s` divides both factors `m` and `n`, so
/// `s² | mn = sρ(ρ+1)/r`. Fails unless `r | ρ(ρ+1)` and `s | ρ(ρ+1)/r`.
pub fn one_common_candidates(rho: i64, sp: SlopeParams) -> Result<Vec<CoincidencePair>> {
    if rho < 1 {
        return Err(Error::InvalidArgument(format!(
            "ρ = {rho} must be positive"
        )));
    }
    let (rh, r, s) = (rho as i128, sp.r as i128, sp.s as i128);
    let pronic = rh * (rh + 1);
    if pronic % r != 0 {
        return Err(Error::InvalidArgument(format!(
            "r = {r} does not divide ρ(ρ+1) = {pronic}"
        )));
    }
    if (pronic / r) % s != 0 {
        return Err(Error::InvalidArgument(format!(
            "s = {s} does not divide ρ(ρ+1)/r = {}",
            pronic / r
        )));
    }
    let target = s * rh * (rh + 1) / r;
    let mut out = Vec::new();
    for d in divisors(target) {
        let e = target / d;
        if d >= e {
            break;
        }
        if d % s != 0 || e % s != 0 {
            continue;
        }
        // both factors positive, then both negative; m < n keeps α₁ < α₂
        for (m, n) in [(d, e), (-e, -d)] {
            out.extend(one_common_pair(rho, sp, m as i64, n as i64)?);
        }
    }
    out.sort_by_key(CoincidencePair::sort_key);
    Ok(out)
}

fn one_common_at(rho: i64) -> Result<Vec<CoincidencePair>> {
    let pronic = rho as i128 * (rho as i128 + 1);
    let mut out = Vec::new();
    for r in divisors(pronic) {
        for s in divisors(pronic / r) {
            if r.gcd(&s) == 1 {
                out.extend(one_common_candidates(
                    rho,
                    SlopeParams {
                        r: r as i64,
                        s: s as i64,
                    },
                )?);
            }
        }
    }
    Ok(out)
}

/// Union of [`one_common_candidates`] over `ρ ≤ max_rho` and all admissible
/// slopes, sorted by `(α₁, β₁, α₂, β₂)`.
pub fn search_one_common(max_rho: i64) -> Result<Vec<CoincidencePair>> {
    search_one_common_parallel(max_rho, 1)
}

/// As [`search_one_common`], splitting the `ρ` range over `jobs` threads.
/// The output does not depend on `jobs`.
pub fn search_one_common_parallel(max_rho: i64, jobs: usize) -> Result<Vec<CoincidencePair>> {
    let jobs = jobs.max(1) as i64;
    let chunks: Vec<Result<Vec<CoincidencePair>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                scope.spawn(move || {
                    let mut found = Vec::new();
                    let mut rho = 1 + j;
                    while rho <= max_rho {
                        found.extend(one_common_at(rho)?);
                        rho += jobs;
                    }
                    Ok(found)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search thread panicked"))
            .collect()
    });
    let mut merged = BTreeMap::new();
    for chunk in chunks {
        for pair in chunk? {
            merged.entry(pair.sort_key()).or_insert(pair);
        }
    }
    Ok(merged.into_values().collect())
}

/// `(P(ρ+1, 0), P(ρ, ρ(ρ+1)/2))`, both of spectral radius `ρ`.
pub fn integer_radius_family(rho: i64) -> Result<CoincidencePair> {
    if rho < 3 {
        return Err(Error::InvalidArgument(format!(
            "ρ = {rho} must be at least 3"
        )));
    }
    let sp = SlopeParams::new(rho * (rho + 1) / 2, 1)?;
    one_common_pair(rho, sp, -1, -2)?
        .ok_or_else(|| Error::Inconsistent(format!("no integer-radius pair at ρ = {rho}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pineapple::spectral_radius;
    use proptest::prelude::*;

    fn pp(a: u64, b: u64) -> PineappleParams {
        PineappleParams::new(a, b).unwrap()
    }

    #[test]
    fn mod4_examples() {
        let w = check_mod4(8, 22).unwrap().unwrap();
        assert_eq!((w.case, w.r), (Mod4Case::C, 1));
        let w = check_mod4(1, 3).unwrap().unwrap();
        assert_eq!((w.case, w.r), (Mod4Case::D, 0));
        assert!(check_mod4(1, 5).unwrap().is_none());
        assert!(matches!(
            check_mod4(2, 5),
            Err(Error::ParityMismatch { a: 2, k: 5 })
        ));
        assert!(check_mod4(0, 4).is_err());
    }

    #[test]
    fn two_common_examples() {
        let pair = pair_from_ak(check_mod4(8, 22).unwrap().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!((pair.p1, pair.p2), (pp(16, 44), pp(8, 220)));
        assert_eq!(pair.common_factor, IntPoly::from_i64s(&[88, -21, 1]));
        assert_eq!(pair.shared[0].to_decimal(3), "5.783");
        assert_eq!(pair.shared[1].to_decimal(3), "15.217");

        let pair = pair_from_ak(check_mod4(1, 3).unwrap().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!((pair.p1, pair.p2), (pp(3, 0), pp(2, 3)));
        assert_eq!(pair.common_factor, IntPoly::from_i64s(&[0, -2, 1]));

        let pair = pair_from_ak(check_mod4(2, 4).unwrap().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!((pair.p1, pair.p2), (pp(4, 0), pp(2, 8)));
        assert_eq!(
            pair.shared,
            vec![AlgebraicNumber::from_i64(0), AlgebraicNumber::from_i64(3)]
        );
    }

    #[test]
    fn enumeration_contents() {
        let all = enumerate_two_common(22).unwrap();
        assert!(all.iter().any(|p| (p.p1, p.p2) == (pp(16, 44), pp(8, 220))));
        let small = enumerate_two_common(4).unwrap();
        let got: Vec<_> = small.iter().map(|p| (p.p1, p.p2)).collect();
        assert_eq!(got, vec![(pp(3, 0), pp(2, 3)), (pp(4, 0), pp(2, 8))]);
        for p in &all {
            assert!(p.sign_condition_holds());
            assert_eq!(p.a_scaled, 0);
        }
    }

    #[test]
    fn one_common_examples() {
        let sp = SlopeParams::new(11, 2).unwrap();
        let found = one_common_candidates(11, sp).unwrap();
        let radius = found
            .iter()
            .find(|p| (p.p1, p.p2) == (pp(7, 110), pp(9, 99)))
            .unwrap();
        assert_eq!(radius.kind, CoincidenceKind::OneCommonRadius);
        assert_eq!(radius.shared, vec![AlgebraicNumber::from_i64(11)]);
        let other = found
            .iter()
            .find(|p| (p.p1, p.p2) == (pp(17, 165), pp(19, 154)))
            .unwrap();
        assert_eq!(other.kind, CoincidenceKind::OneCommonNonRadius);

        let found = one_common_candidates(3, SlopeParams::new(2, 1).unwrap()).unwrap();
        let star = found
            .iter()
            .find(|p| (p.p1, p.p2) == (pp(2, 8), pp(3, 6)))
            .unwrap();
        assert_eq!(star.kind, CoincidenceKind::OneCommonRadius);
    }

    #[test]
    fn candidate_preconditions() {
        assert!(one_common_candidates(11, SlopeParams::new(5, 1).unwrap()).is_err());
        assert!(one_common_candidates(11, SlopeParams::new(11, 5).unwrap()).is_err());
        // s need not divide ρ+1
        let found = one_common_candidates(4, SlopeParams::new(5, 2).unwrap()).unwrap();
        let pair = found
            .iter()
            .find(|p| (p.p1, p.p2) == (pp(2, 15), pp(4, 10)))
            .unwrap();
        assert_eq!(pair.kind, CoincidenceKind::OneCommonRadius);
        assert!(one_common_candidates(0, SlopeParams::new(1, 1).unwrap()).is_err());
        assert!(SlopeParams::new(4, 2).is_err());
    }

    #[test]
    fn clique_sizes_two_and_three_at_rho_two() {
        // (α₁-4)(α₂-4) = 2 with α = 2, 3 has A = 0
        let found = one_common_candidates(2, SlopeParams::new(3, 1).unwrap()).unwrap();
        assert!(found.iter().all(|p| p.p1.alpha > 3));
    }

    #[test]
    fn search_contents() {
        let all = search_one_common(11).unwrap();
        for want in [
            (pp(7, 110), pp(9, 99)),
            (pp(17, 165), pp(19, 154)),
            (pp(2, 8), pp(3, 6)),
        ] {
            assert!(all.iter().any(|p| (p.p1, p.p2) == want), "{want:?}");
        }
        for p in &all {
            assert!(p.sign_condition_holds());
            assert_ne!(p.a_scaled, 0);
            if p.kind == CoincidenceKind::OneCommonRadius {
                for q in [p.p1, p.p2] {
                    assert_eq!(spectral_radius(q), p.shared[0]);
                }
            }
        }
        let parallel = search_one_common_parallel(11, 3).unwrap();
        let key =
            |v: &[CoincidencePair]| v.iter().map(|p| (p.p1, p.p2, p.kind)).collect::<Vec<_>>();
        assert_eq!(key(&all), key(&parallel));
    }

    #[test]
    fn integer_radius_examples() {
        let pair = integer_radius_family(3).unwrap();
        assert_eq!((pair.p1, pair.p2), (pp(4, 0), pp(3, 6)));
        let pair = integer_radius_family(5).unwrap();
        assert_eq!((pair.p1, pair.p2), (pp(6, 0), pp(5, 15)));
        assert_eq!(spectral_radius(pp(5, 15)), AlgebraicNumber::from_i64(5));
        assert!(integer_radius_family(2).is_err());
    }

    #[test]
    fn trivial_eigenvalues_reported() {
        let pair = pair_from_ak(check_mod4(8, 22).unwrap().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(
            pair.trivial[0],
            TrivialEigenvalues {
                zero: 43,
                minus_one: 14
            }
        );
        assert_eq!(
            pair.trivial[1],
            TrivialEigenvalues {
                zero: 219,
                minus_one: 6
            }
        );
    }

    proptest! {
        #[test]
        fn beta_closed_forms(k in 3i64..400, a in 1i64..400) {
            prop_assume!(a <= k - 2 && (k - a) % 2 == 0);
            if let Some(w) = check_mod4(a, k).unwrap() {
                let (b1, b2) = w.betas();
                let (ki, ai) = (k as i128, a as i128);
                prop_assert_eq!(b1 as i128 * 4 * (ki - 1), ki * (ki - ai) * (ki - ai - 2));
                prop_assert_eq!(b2, b1 + k * a);
                prop_assert!(b1 >= 0);
            }
        }

        #[test]
        fn mod4_matches_divisibility(k in 3i64..2000, a in 1i64..2000) {
            prop_assume!((k - a) % 2 == 0);
            let direct = (k as i128 * (k - a) as i128 * (k - a - 2) as i128) % (4 * (k as i128 - 1)) == 0;
            prop_assert_eq!(check_mod4(a, k).unwrap().is_some(), direct);
        }
    }
}
