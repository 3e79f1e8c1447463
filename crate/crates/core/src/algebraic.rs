//! Real algebraic numbers as (square-free polynomial, isolating interval).
//!
//! Equality is decided symbolically: two numbers are equal exactly when the
//! gcd of their defining polynomials has a root in the overlap of their
//! intervals. Ordering of distinct numbers is decided by bisecting until
//! the intervals separate. No floating point is involved in either.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::decimal::round_ratio;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{lift, Scalar};
use crate::sturm::SturmChain;

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval<T: Scalar> {
    pub lo: Ratio<T>,
    pub hi: Ratio<T>,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: Ratio<T>, hi: Ratio<T>) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Ratio<T>) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Ratio<T> {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> Ratio<T> {
        (self.lo.clone() + self.hi.clone()) / Ratio::from_integer(lift::<T>(2))
    }

    pub fn contains(&self, x: &Ratio<T>) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then(|| Interval { lo, hi })
    }
}

/// A real algebraic number.
///
/// Invariants: `minpoly` is square-free, primitive, with positive leading
/// coefficient, and has exactly one real root in the closed `interval`.
/// Either the interval is a single point and `minpoly` is linear (an exact
/// rational root), or both endpoints are non-roots, so the polynomial
/// changes sign across it. Integer roots are always found and stored as
/// points; `minpoly` is otherwise a square-free multiple of the true minimal
/// polynomial, not necessarily irreducible.
#[derive(Clone)]
pub struct Algebraic<T: Scalar> {
    minpoly: Poly<T>,
    interval: Interval<T>,
}

impl<T: Scalar> Algebraic<T> {
    pub fn from_integer(n: T) -> Self {
        Algebraic {
            minpoly: Poly::linear(n.clone()),
            interval: Interval::point(Ratio::from_integer(n)),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_integer(lift(n))
    }

    pub fn from_ratio(x: Ratio<T>) -> Self {
        let minpoly = Poly::new(vec![-x.numer().clone(), x.denom().clone()]);
        Algebraic {
            minpoly,
            interval: Interval::point(x),
        }
    }

    /// Validates the invariants and normalizes the polynomial.
    pub fn new(poly: &Poly<T>, interval: Interval<T>) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let minpoly = poly.square_free_part();
        let chain = SturmChain::new(&minpoly);
        if chain.count_closed(&interval.lo, &interval.hi) != 1 {
            return Err(Error::InvalidArgument(format!(
                "interval [{}, {}] does not isolate exactly one root of {}",
                interval.lo, interval.hi, minpoly
            )));
        }
        Ok(Self::normalized(minpoly, interval))
    }

    /// Collapses a certified interval to a point when an endpoint is the root.
    fn normalized(minpoly: Poly<T>, iv: Interval<T>) -> Self {
        if minpoly.sign_at(&iv.lo) == Ordering::Equal {
            Self::from_ratio(iv.lo)
        } else if minpoly.sign_at(&iv.hi) == Ordering::Equal {
            Self::from_ratio(iv.hi)
        } else {
            Algebraic {
                minpoly,
                interval: iv,
            }
            .settled()
        }
    }

    /// Narrows the interval to width at most 1 and tests the integers left
    /// in it, so that integer roots always end up as exact points.
    fn settled(mut self) -> Self {
        let one = Ratio::from_integer(T::one());
        while !self.interval.is_point() && self.interval.width() > one {
            self.bisect();
        }
        if self.interval.is_point() {
            return self;
        }
        let mut c = self.interval.lo.ceil();
        while c <= self.interval.hi {
            if self.minpoly.sign_at(&c) == Ordering::Equal {
                return Self::from_ratio(c);
            }
            c = c + one.clone();
        }
        self
    }

    pub fn minpoly(&self) -> &Poly<T> {
        &self.minpoly
    }

    pub fn interval(&self) -> &Interval<T> {
        &self.interval
    }

    /// The exact value when this number is known to be rational.
    pub fn as_ratio(&self) -> Option<Ratio<T>> {
        if self.interval.is_point() {
            return Some(self.interval.lo.clone());
        }
        if self.minpoly.degree() == Some(1) {
            let c = self.minpoly.coeffs();
            return Some(Ratio::new(-c[0].clone(), c[1].clone()));
        }
        None
    }

    /// Halves the isolating interval once.
    pub fn bisect(&mut self) {
        if self.interval.is_point() {
            return;
        }
        let mid = self.interval.midpoint();
        let s_mid = self.minpoly.sign_at(&mid);
        if s_mid == Ordering::Equal {
            *self = Self::from_ratio(mid);
            return;
        }
        let s_lo = self.minpoly.sign_at(&self.interval.lo);
        if s_lo != s_mid {
            self.interval.hi = mid;
        } else {
            self.interval.lo = mid;
        }
    }

    /// The same number with an isolating interval no wider than `width`.
    pub fn refine(&self, width: &Ratio<T>) -> Self {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub fn refine_in_place(&mut self, width: &Ratio<T>) {
        assert!(width.is_positive(), "refinement width must be positive");
        while self.interval.width() > *width {
            self.bisect();
        }
    }

    /// Exact trichotomy.
    pub fn compare(&self, other: &Self) -> Ordering {
        if let Some(o) = disjoint_order(&self.interval, &other.interval) {
            return o;
        }
        if self.equals_overlapping(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            a.bisect();
            b.bisect();
            if let Some(o) = disjoint_order(&a.interval, &b.interval) {
                return o;
            }
        }
    }

    fn equals_overlapping(&self, other: &Self) -> bool {
        let Some(overlap) = self.interval.intersect(&other.interval) else {
            return false;
        };
        let g = self.minpoly.gcd(&other.minpoly);
        if g.is_constant() {
            return false;
        }
        SturmChain::new(&g).count_closed(&overlap.lo, &overlap.hi) > 0
    }

    /// True when this number is a root of `p`.
    pub fn is_root_of(&self, p: &Poly<T>) -> bool {
        if p.is_zero() {
            return true;
        }
        let g = self.minpoly.gcd(p);
        if g.is_constant() {
            return false;
        }
        SturmChain::new(&g).count_closed(&self.interval.lo, &self.interval.hi) > 0
    }

    /// Exact sign of `p` evaluated at this number.
    pub fn sign_of(&self, p: &Poly<T>) -> Ordering {
        if self.is_root_of(p) {
            return Ordering::Equal;
        }
        if let Some(x) = self.as_ratio() {
            return p.sign_at(&x);
        }
        // Shrink until p has no root on the interval; then p has constant
        // sign there and any endpoint will do.
        let chain = SturmChain::new(p);
        let mut a = self.clone();
        loop {
            if a.interval.is_point() {
                return p.sign_at(&a.interval.lo);
            }
            if chain.count_closed(&a.interval.lo, &a.interval.hi) == 0 {
                return p.sign_at(&a.interval.lo);
            }
            a.bisect();
        }
    }

    /// Midpoint of an interval refined to `2^-bits`.
    pub fn approximate(&self, bits: u32) -> Ratio<T> {
        if let Some(x) = self.as_ratio() {
            return x;
        }
        let width = Ratio::new(
            T::one(),
            (0..bits).fold(T::one(), |acc, _| acc * lift::<T>(2)),
        );
        self.refine(&width).interval.midpoint()
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.approximate(64);
        x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` places. Presentation only.
    pub fn to_decimal(&self, digits: usize) -> String {
        if let Some(x) = self.as_ratio() {
            return round_ratio(&x, digits);
        }
        // log2(10) < 10/3, so this many bits comfortably covers the digits.
        let bits = (digits as u32 + 2) * 10 / 3 + 8;
        round_ratio(&self.approximate(bits), digits)
    }
}

fn disjoint_order<T: Scalar>(a: &Interval<T>, b: &Interval<T>) -> Option<Ordering> {
    if a.hi < b.lo {
        Some(Ordering::Less)
    } else if b.hi < a.lo {
        Some(Ordering::Greater)
    } else if a.is_point() && b.is_point() && a.lo == b.lo {
        Some(Ordering::Equal)
    } else {
        None
    }
}

impl<T: Scalar> PartialEq for Algebraic<T> {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Algebraic<T> {}

impl<T: Scalar> PartialOrd for Algebraic<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Algebraic<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl<T: Scalar> fmt::Debug for Algebraic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebraic({} in [{}, {}] ~ {})",
            self.minpoly,
            self.interval.lo,
            self.interval.hi,
            self.to_decimal(6)
        )
    }
}

impl<T: Scalar> fmt::Display for Algebraic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(f.precision().unwrap_or(6)))
    }
}

/// Power of two at least the Cauchy bound `1 + max|c_i| / |c_d|`.
fn root_bound<T: Scalar>(p: &Poly<T>) -> T {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(T::zero);
    let (q, r) = num_integer::Integer::div_rem(&max, &lead);
    let bound = T::one() + q + if r.is_zero() { T::zero() } else { T::one() };
    let two = lift::<T>(2);
    let mut m = T::one();
    while m < bound {
        m = m * two.clone();
    }
    m
}

/// Every distinct real root of `p`, ascending, each with an isolating
/// interval whose endpoints are dyadic rationals.
pub fn isolate_real_roots<T: Scalar>(p: &Poly<T>) -> Result<Vec<Algebraic<T>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::new(p);
    let sqf = chain.head().clone();
    if sqf.is_constant() {
        return Ok(Vec::new());
    }
    let m = Ratio::from_integer(root_bound(&sqf));
    let lo = -m.clone();
    let total = chain.count_half_open(&lo, &m);
    debug_assert_eq!(total, chain.count_all());
    let mut out = Vec::with_capacity(total);
    split(&chain, lo, m, total, &mut out);
    Ok(out)
}

fn split<T: Scalar>(
    chain: &SturmChain<T>,
    lo: Ratio<T>,
    hi: Ratio<T>,
    count: usize,
    out: &mut Vec<Algebraic<T>>,
) {
    match count {
        0 => {}
        1 => out.push(isolated(chain, lo, hi)),
        _ => {
            let mid = (lo.clone() + hi.clone()) / Ratio::from_integer(lift::<T>(2));
            let left = chain.count_half_open(&lo, &mid);
            split(chain, lo, mid.clone(), left, out);
            split(chain, mid, hi, count - left, out);
        }
    }
}

/// Turns a half-open `(lo, hi]` holding one root into a normalized closed
/// isolating interval.
fn isolated<T: Scalar>(chain: &SturmChain<T>, mut lo: Ratio<T>, mut hi: Ratio<T>) -> Algebraic<T> {
    let p = chain.head();
    loop {
        if p.sign_at(&hi) == Ordering::Equal {
            return Algebraic::from_ratio(hi);
        }
        if p.sign_at(&lo) != Ordering::Equal {
            return Algebraic {
                minpoly: p.clone(),
                interval: Interval { lo, hi },
            }
            .settled();
        }
        // lo is a neighbouring root outside (lo, hi]; move it inward.
        let mid = (lo.clone() + hi.clone()) / Ratio::from_integer(lift::<T>(2));
        if chain.count_half_open(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// The largest real root of `p`.
pub fn largest_real_root<T: Scalar>(p: &Poly<T>) -> Result<Algebraic<T>> {
    isolate_real_roots(p)?
        .pop()
        .ok_or_else(|| Error::NoRealRoot(p.to_string()))
}
