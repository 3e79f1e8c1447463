//! Dense univariate polynomials with exact integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::scalar::{lift, Scalar};

/// A polynomial `c[0] + c[1] x + ... + c[d] x^d` over an exact integer ring.
///
/// Coefficients are stored low-to-high with trailing zeros trimmed, so the
/// zero polynomial has an empty coefficient vector and every other
/// polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from small coefficients, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| lift(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// The linear factor `x - root`.
    pub fn linear(root: T) -> Self {
        Poly {
            coeffs: vec![-root, T::one()],
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    fn div_scalar(&self, c: &T) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a.clone() % c.clone()).is_zero());
                    a.clone() / c.clone()
                })
                .collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * lift::<T>(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Exact value at a rational point.
    pub fn eval_ratio(&self, x: &Ratio<T>) -> Ratio<T> {
        self.coeffs.iter().rev().fold(Ratio::zero(), |acc, c| {
            acc * x.clone() + Ratio::from_integer(c.clone())
        })
    }

    /// Sign of the value at `x = n/d`, evaluated without fractions as the
    /// homogenized sum `c_i n^i d^(deg - i)` (the extra `d^deg > 0` factor
    /// leaves the sign alone).
    pub fn sign_at(&self, x: &Ratio<T>) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        let (n, d) = (x.numer(), x.denom());
        let mut acc = T::zero();
        let mut dpow = T::one();
        for i in (0..=deg).rev() {
            acc = acc * n.clone() + self.coeffs[i].clone() * dpow.clone();
            dpow = dpow * d.clone();
        }
        sign_of(&acc)
    }

    /// Sign of the leading coefficient (value sign near `+inf`).
    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, sign_of)
    }

    /// Value sign near `-inf`.
    pub fn sign_at_neg_inf(&self) -> Ordering {
        match self.degree() {
            None => Ordering::Equal,
            Some(d) if d % 2 == 0 => self.sign_at_pos_inf(),
            Some(_) => self.sign_at_pos_inf().reverse(),
        }
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Divides out the (positive) content without touching the sign.
    pub fn primitive_signed(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_scalar(&self.content())
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    ///
    /// Panics if `d` is zero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut e = ds - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let term = Self::monomial(r.leading().unwrap().clone(), dr - dd);
            r = &r.scale(&lc) - &(&term * d);
            e -= 1;
        }
        let mut f = T::one();
        for _ in 0..e {
            f = f * lc.clone();
        }
        r.scale(&f)
    }

    /// Pseudo-remainder rescaled by a positive factor so its sign agrees
    /// with the true remainder over the rationals.
    pub(crate) fn signed_pseudo_rem(&self, d: &Self) -> Self {
        let r = self.pseudo_rem(d);
        let (Some(ds), Some(dd)) = (self.degree(), d.degree()) else {
            return r;
        };
        let odd_power = ds >= dd && (ds - dd + 1) % 2 == 1;
        if odd_power && d.leading().unwrap().is_negative() {
            -r
        } else {
            r
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let term = Self::monomial(quot.clone(), dr - dd);
            q[dr - dd] = quot;
            r = &r - &(&term * d);
        }
        Some(Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_exact(&self.primitive_part()).is_some()
    }

    /// Primitive gcd with positive leading coefficient, computed with the
    /// subresultant remainder sequence. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = match self.degree().cmp(&other.degree()) {
            Ordering::Less => (other.primitive_part(), self.primitive_part()),
            _ => (self.primitive_part(), other.primitive_part()),
        };
        if b.is_zero() {
            return a;
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.is_constant() {
                return Self::one();
            }
            a = b;
            b = r.div_scalar(&(g.clone() * pow_t(&h, delta)));
            g = a.leading().unwrap().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => pow_t(&g, delta) / pow_t(&h, delta - 1),
            };
        }
        b.primitive_part()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// `p(x + c)`.
    pub fn taylor_shift(&self, c: &T) -> Self {
        let shift = Poly {
            coeffs: vec![c.clone(), T::one()],
        };
        self.coeffs.iter().rev().fold(Self::zero(), |acc, k| {
            &(&acc * &shift) + &Self::constant(k.clone())
        })
    }

    /// Multiplicity of the integer `root`.
    pub fn root_multiplicity(&self, root: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::linear(root.clone());
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(&factor) {
            p = q;
            m += 1;
        }
        m
    }

    /// Maps the coefficients into another scalar ring.
    pub fn convert<U: Scalar>(&self) -> Option<Poly<U>> {
        self.coeffs
            .iter()
            .map(|c| c.to_i128().and_then(U::from_i128))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

pub(crate) fn sign_of<T: Scalar>(v: &T) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

fn pow_t<T: Scalar>(base: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<BigInt>;

    fn p(c: &[i64]) -> P {
        P::from_i64s(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn times_zero_is_zero() {
        assert!((&p(&[3, 0, 2]) * &P::zero()).is_zero());
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn pineapple_cubic_product() {
        // (x^2 - 21x + 88)(x + 7)
        assert_eq!(&p(&[88, -21, 1]) * &p(&[7, 1]), p(&[616, -59, -14, 1]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, -4, 0, 1]).derivative(), p(&[-4, 0, 3]));
        assert!(p(&[5]).derivative().is_zero());
        assert_eq!(p(&[550, -116, -5, 1]).derivative(), p(&[-116, -10, 3]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(
            p(&[550, -116, -5, 1]).gcd(&p(&[693, -107, -7, 1])),
            p(&[-11, 1])
        );
        assert_eq!(
            p(&[616, -59, -14, 1]).gcd(&p(&[1320, -227, -6, 1])),
            p(&[88, -21, 1])
        );
    }

    #[test]
    fn gcd_is_primitive_and_positive() {
        let g = p(&[-6, 6]).gcd(&p(&[4, -8, 4]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(p(&[0, 0, -3]).gcd(&P::zero()), p(&[0, 0, 1]));
        assert_eq!(p(&[2, 1]).gcd(&p(&[3, 1])), P::one());
    }

    #[test]
    fn gcd_with_large_degree_gap() {
        // (x-2)^3 (x+5) x^4 and (x-2)(x^2+1)
        let a = &(&p(&[-2, 1]).pow(3) * &p(&[5, 1])) * &P::monomial(BigInt::from(1), 4);
        let b = &p(&[-2, 1]) * &p(&[1, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-2, 1]));
    }

    #[test]
    fn exact_division() {
        let q = p(&[616, -59, -14, 1]).div_exact(&p(&[88, -21, 1])).unwrap();
        assert_eq!(q, p(&[7, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])).is_none());
        // 2x^2 is not divisible by 4x over the integers
        assert!(p(&[0, 0, 2]).div_exact(&p(&[0, 4])).is_none());
    }

    #[test]
    fn square_free_part_removes_repeats() {
        // (x-2)(x+1)^2 -> (x-2)(x+1)
        let k3 = p(&[-2, -3, 0, 1]);
        assert_eq!(k3.square_free_part(), p(&[-2, -1, 1]));
        assert!(!k3.is_square_free());
        assert!(p(&[0, -4, 0, 1]).is_square_free());
    }

    #[test]
    fn signs_at_rationals() {
        let q = p(&[-4, 0, 1]);
        assert_eq!(
            q.sign_at(&Ratio::new(BigInt::from(2), BigInt::from(1))),
            Ordering::Equal
        );
        assert_eq!(
            q.sign_at(&Ratio::new(BigInt::from(3), BigInt::from(2))),
            Ordering::Less
        );
        assert_eq!(
            q.sign_at(&Ratio::new(BigInt::from(-5), BigInt::from(2))),
            Ordering::Greater
        );
        let cubic = p(&[1, 0, 0, 1]);
        assert_eq!(cubic.sign_at_neg_inf(), Ordering::Less);
        assert_eq!(cubic.sign_at_pos_inf(), Ordering::Greater);
    }

    #[test]
    fn taylor_shift_and_multiplicity() {
        // (x+1)^2 shifted by -1 is x^2
        assert_eq!(p(&[1, 2, 1]).taylor_shift(&BigInt::from(-1)), p(&[0, 0, 1]));
        let k3 = p(&[-2, -3, 0, 1]);
        assert_eq!(k3.root_multiplicity(&BigInt::from(-1)), 2);
        assert_eq!(k3.root_multiplicity(&BigInt::from(2)), 1);
        assert_eq!(k3.root_multiplicity(&BigInt::from(0)), 0);
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[88, -21, 1]).to_string(), "x^2 - 21x + 88");
        assert_eq!(p(&[0, -1, 0, -2]).to_string(), "-2x^3 - x");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(&[1]).to_string(), "1");
    }

    #[test]
    fn generic_over_machine_integers() {
        let a = Poly::<i64>::from_i64s(&[616, -59, -14, 1]);
        let b = Poly::<i64>::from_i64s(&[1320, -227, -6, 1]);
        assert_eq!(a.gcd(&b), Poly::<i64>::from_i64s(&[88, -21, 1]));
        assert_eq!(a.convert::<BigInt>().unwrap(), p(&[616, -59, -14, 1]));
    }
}
