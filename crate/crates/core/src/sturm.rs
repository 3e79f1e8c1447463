//! Sturm chains: exact counting of distinct real roots in an interval.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::poly::Poly;
use crate::scalar::Scalar;

/// The signed remainder chain `p, p', -rem(p, p'), ...`.
///
/// Each remainder is reduced to its (sign-preserving) primitive part, which
/// keeps coefficient growth in check without changing any sign pattern.
#[derive(Clone, Debug)]
pub struct SturmChain<T: Scalar> {
    seq: Vec<Poly<T>>,
}

impl<T: Scalar> SturmChain<T> {
    /// Builds the chain of the square-free part of `p`.
    ///
    /// Panics on the zero polynomial.
    pub fn new(p: &Poly<T>) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.square_free_part();
        let mut seq = vec![p0.clone()];
        if p0.is_constant() {
            return SturmChain { seq };
        }
        let mut prev = p0.clone();
        let mut cur = p0.derivative().primitive_signed();
        while !cur.is_zero() {
            let next = -&prev.signed_pseudo_rem(&cur);
            seq.push(cur.clone());
            prev = cur;
            cur = next.primitive_signed();
        }
        SturmChain { seq }
    }

    pub fn polys(&self) -> &[Poly<T>] {
        &self.seq
    }

    /// The square-free polynomial heading the chain.
    pub fn head(&self) -> &Poly<T> {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &Ratio<T>) -> usize {
        variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.seq.iter().map(Poly::sign_at_neg_inf))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.seq.iter().map(Poly::sign_at_pos_inf))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Ratio<T>, hi: &Ratio<T>) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Ratio<T>, hi: &Ratio<T>) -> usize {
        if lo > hi {
            return 0;
        }
        let at_lo = usize::from(self.head().sign_at(lo) == Ordering::Equal);
        at_lo + self.count_half_open(lo, hi)
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_roots_of_quadratic() {
        let chain = SturmChain::new(&Poly::<BigInt>::from_i64s(&[-4, 0, 1]));
        assert_eq!(chain.count_all(), 2);
        assert_eq!(chain.count_half_open(&r(0, 1), &r(2, 1)), 1);
        assert_eq!(chain.count_half_open(&r(-2, 1), &r(2, 1)), 1);
        assert_eq!(chain.count_closed(&r(-2, 1), &r(2, 1)), 2);
        assert_eq!(chain.count_closed(&r(-1, 1), &r(1, 1)), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-2)(x+1)^2
        let chain = SturmChain::new(&Poly::<BigInt>::from_i64s(&[-2, -3, 0, 1]));
        assert_eq!(chain.count_all(), 2);
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(x^3 - 4x) has roots -2, 0, 2
        let chain = SturmChain::new(&Poly::<BigInt>::from_i64s(&[0, 4, 0, -1]));
        assert_eq!(chain.count_all(), 3);
        assert_eq!(chain.count_half_open(&r(-1, 2), &r(5, 2)), 2);
    }

    #[test]
    fn no_real_roots() {
        let chain = SturmChain::new(&Poly::<BigInt>::from_i64s(&[1, 0, 1]));
        assert_eq!(chain.count_all(), 0);
    }
}
