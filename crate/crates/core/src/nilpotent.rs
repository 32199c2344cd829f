//! The commutative ring of nilpotent numbers `a + b·h` with `h² = 0`,
//! over exact rationals.
//!
//! Multiplication drops every multiple of `h²`, so the product of two pure
//! infinitesimals vanishes exactly. Evaluating a polynomial at `a + h` yields
//! the value and the first derivative in one pass, and reading the
//! infinitesimal coefficient as a velocity turns a number into a uniform
//! worldline `x + v·t` on which boosts act by shifting `v`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("cannot divide by {0}: a zero real part makes the divisor a zero divisor")]
    ZeroDivisor(Box<Dual>),
}

/// A nilpotent number: real component `a` plus infinitesimal coefficient `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dual {
    a: Rational,
    b: Rational,
}

impl Dual {
    pub fn new(a: Rational, b: Rational) -> Self {
        Dual { a, b }
    }

    /// The order-preserving embedding of a scalar: `r` maps to `(r, 0)`.
    pub fn from_real(a: Rational) -> Self {
        Dual::new(a, Rational::zero())
    }

    /// The generator `h` itself: nonzero, yet squaring to zero.
    pub fn h() -> Self {
        Dual::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        Dual::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Dual::from_real(Rational::one())
    }

    pub fn real(&self) -> &Rational {
        &self.a
    }

    pub fn infinitesimal(&self) -> &Rational {
        &self.b
    }

    pub fn is_pure_infinitesimal(&self) -> bool {
        self.a.is_zero()
    }

    /// Exact quotient such that `q * rhs == self`. Defined only when the
    /// divisor has a nonzero real part: pure infinitesimals are zero divisors
    /// and admit no inverse.
    pub fn try_div(&self, rhs: &Dual) -> Result<Dual, DualError> {
        if rhs.a.is_zero() {
            return Err(DualError::ZeroDivisor(Box::new(rhs.clone())));
        }
        let a = &self.a / &rhs.a;
        let b = (&self.b * &rhs.a - &self.a * &rhs.b) / (&rhs.a * &rhs.a);
        Ok(Dual::new(a, b))
    }

    /// Position at time `t` of the uniform worldline this number encodes:
    /// `a + b·t`.
    pub fn position_at(&self, t: &Rational) -> Rational {
        &self.a + &self.b * t
    }

    /// The same worldline seen from a frame moving with extra velocity `-w`:
    /// the real part is untouched, the velocity gains `w`.
    pub fn boosted(&self, boost: &GalileanBoost) -> Dual {
        Dual::new(self.a.clone(), &self.b + &boost.w)
    }
}

impl Add for &Dual {
    type Output = Dual;

    fn add(self, rhs: &Dual) -> Dual {
        Dual::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Dual {
    type Output = Dual;

    fn sub(self, rhs: &Dual) -> Dual {
        Dual::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Dual {
    type Output = Dual;

    /// `(a + bh)(c + dh) = ac + (ad + bc)h`, the `h²` term vanishing.
    fn mul(self, rhs: &Dual) -> Dual {
        Dual::new(&self.a * &rhs.a, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

impl Neg for &Dual {
    type Output = Dual;

    fn neg(self) -> Dual {
        Dual::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {
        $(
            impl $trait for Dual {
                type Output = Dual;
                fn $method(self, rhs: Dual) -> Dual {
                    $trait::$method(&self, &rhs)
                }
            }
        )*
    };
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for Dual {
    type Output = Dual;

    fn neg(self) -> Dual {
        -&self
    }
}

impl Ord for Dual {
    /// Total order by first difference: compare real parts, then
    /// infinitesimal coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for Dual {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·h", self.a, self.b)
    }
}

/// A velocity increment. Boosts compose by adding velocities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GalileanBoost {
    w: Rational,
}

impl GalileanBoost {
    pub fn new(w: Rational) -> Self {
        GalileanBoost { w }
    }

    pub fn identity() -> Self {
        GalileanBoost::new(Rational::zero())
    }

    pub fn velocity(&self) -> &Rational {
        &self.w
    }

    pub fn compose(&self, other: &GalileanBoost) -> GalileanBoost {
        GalileanBoost::new(&self.w + &other.w)
    }

    pub fn inverse(&self) -> GalileanBoost {
        GalileanBoost::new(-self.w.clone())
    }
}

/// A polynomial with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing zero coefficients so the
    /// representation is canonical.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in the nilpotent ring. At `x = (a, 1)` the result is
    /// `(p(a), p'(a))`: value and forward derivative in one pass.
    pub fn eval_dual(&self, x: &Dual) -> Dual {
        self.coeffs.iter().rev().fold(Dual::zero(), |acc, c| {
            &(&acc * x) + &Dual::from_real(c.clone())
        })
    }

    /// Coefficient-shift derivative, the independent route against which the
    /// dual evaluation is checked.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// The floating mirror of `eval_dual` at `(x, 1)`: returns
    /// `(p(x), p'(x))` in `f64` arithmetic.
    pub fn eval_dual_f64(&self, x: f64) -> (f64, f64) {
        let mut value = 0.0;
        let mut slope = 0.0;
        for c in self.coeffs.iter().rev() {
            slope = slope * x + value;
            value = value * x + c.to_f64().unwrap_or(f64::NAN);
        }
        (value, slope)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let longer = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..longer)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                a + b
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn dual(a: (i64, i64), b: (i64, i64)) -> Dual {
        Dual::new(ratio(a.0, a.1), ratio(b.0, b.1))
    }

    fn dual_int(a: i64, b: i64) -> Dual {
        dual((a, 1), (b, 1))
    }

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| ratio(c, 1)).collect())
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(&dual_int(1, 2) + &dual_int(3, 4), dual_int(4, 6));
        let x = dual((2, 3), (-1, 5));
        assert_eq!(&x + &Dual::zero(), x);
        assert_eq!(&dual_int(1, 1) + &dual_int(-1, -1), Dual::zero());
    }

    #[test]
    fn h_squares_to_zero() {
        assert_eq!(&Dual::h() * &Dual::h(), Dual::zero());
        assert_eq!(&dual_int(2, 3) * &Dual::one(), dual_int(2, 3));
        // (2 + 3h)(4 + 5h) = 8 + (10 + 12)h once h² is dropped.
        assert_eq!(&dual_int(2, 3) * &dual_int(4, 5), dual_int(8, 22));
    }

    #[test]
    fn pure_infinitesimals_annihilate() {
        for b in -5..=5 {
            for c in -5..=5 {
                let p = &dual_int(0, b) * &dual_int(0, c);
                assert_eq!(p, Dual::zero());
            }
        }
    }

    #[test]
    fn division_examples() {
        assert_eq!(
            dual_int(1, 0).try_div(&dual_int(2, 0)).unwrap(),
            dual((1, 2), (0, 1))
        );
        // Round trip of the multiplication example.
        assert_eq!(
            dual_int(8, 22).try_div(&dual_int(4, 5)).unwrap(),
            dual_int(2, 3)
        );
        assert!(matches!(
            dual_int(1, 0).try_div(&Dual::h()),
            Err(DualError::ZeroDivisor(_))
        ));
    }

    #[test]
    fn division_inverts_multiplication() {
        let xs = [dual_int(3, -7), dual((1, 2), (5, 3)), Dual::zero()];
        let ys = [dual_int(2, 11), dual((-4, 3), (1, 7)), Dual::one()];
        for x in &xs {
            for y in &ys {
                let q = x.try_div(y).unwrap();
                assert_eq!(&q * y, x.clone());
            }
        }
    }

    #[test]
    fn order_is_first_difference() {
        assert!(dual_int(1, 100) <= dual_int(2, 0));
        assert!(dual_int(1, 0) <= dual_int(1, 1));
        assert!(Dual::h() > Dual::zero());
        assert!(Dual::from_real(ratio(1, 1)) < Dual::from_real(ratio(2, 1)));
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(Dual::from_real(ratio(0, 1)), Dual::zero());
        assert_eq!(Dual::from_real(ratio(2, 1)), dual_int(2, 0));
    }

    #[test]
    fn dual_evaluation_extracts_the_derivative() {
        // p(t) = t²: oracle p'(3) = 6 by the coefficient-shift route.
        let square = poly(&[0, 0, 1]);
        assert_eq!(square.eval_dual(&dual_int(3, 1)), dual_int(9, 6));
        assert_eq!(square.derivative().eval(&ratio(3, 1)), ratio(6, 1));

        // Constants have zero slope.
        let c = poly(&[42]);
        assert_eq!(c.eval_dual(&dual_int(17, 1)), dual_int(42, 0));

        // p(t) = t³ - 2t: p(2) = 4, p'(2) = 3·4 - 2 = 10.
        let cubic = poly(&[0, -2, 0, 1]);
        assert_eq!(cubic.eval_dual(&dual_int(2, 1)), dual_int(4, 10));
        assert_eq!(cubic.derivative().eval(&ratio(2, 1)), ratio(10, 1));
    }

    #[test]
    fn general_dual_point_scales_the_slope() {
        // Chain rule: at (a, b) the slope coefficient is b·p'(a).
        let cubic = poly(&[1, 0, -3, 2]);
        let at = cubic.eval_dual(&dual_int(3, 5));
        assert_eq!(at.real(), &cubic.eval(&ratio(3, 1)));
        assert_eq!(
            at.infinitesimal(),
            &(cubic.derivative().eval(&ratio(3, 1)) * ratio(5, 1))
        );
    }

    #[test]
    fn worldline_examples() {
        assert_eq!(dual_int(3, 2).position_at(&ratio(0, 1)), ratio(3, 1));
        assert_eq!(dual_int(3, 2).position_at(&ratio(5, 1)), ratio(13, 1));
        assert_eq!(Dual::zero().position_at(&ratio(99, 1)), ratio(0, 1));
    }

    #[test]
    fn boost_examples() {
        let d = dual_int(3, 2);
        let w5 = GalileanBoost::new(ratio(5, 1));
        assert_eq!(d.boosted(&w5), dual_int(3, 7));
        assert_eq!(d.boosted(&GalileanBoost::identity()), d);

        let v = GalileanBoost::new(ratio(2, 3));
        let w = GalileanBoost::new(ratio(1, 6));
        assert_eq!(d.boosted(&v).boosted(&w), d.boosted(&v.compose(&w)));
        assert_eq!(d.boosted(&v).boosted(&v.inverse()), d);
    }

    #[test]
    fn display_form() {
        assert_eq!(Dual::zero().to_string(), "0 + 0·h");
        assert_eq!(dual((1, 2), (-3, 4)).to_string(), "1/2 + -3/4·h");
    }

    #[test]
    fn polynomial_trims_trailing_zeros() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[0]).degree(), None);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_dual() -> impl Strategy<Value = Dual> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| Dual::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_laws(x in arb_dual(), y in arb_dual(), z in arb_dual()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &Dual::zero(), x.clone());
            prop_assert_eq!(&x * &Dual::one(), x.clone());
            prop_assert_eq!(&x - &x, Dual::zero());
        }

        #[test]
        fn embedding_preserves_order_both_ways(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(a.cmp(&b), Dual::from_real(a.clone()).cmp(&Dual::from_real(b.clone())));
        }

        #[test]
        fn product_rule(
            p in proptest::collection::vec(arb_rational(), 0..6),
            q in proptest::collection::vec(arb_rational(), 0..6),
            a in arb_rational(),
        ) {
            let p = Polynomial::new(p);
            let q = Polynomial::new(q);
            let product = &p * &q;
            let slope = product.eval_dual(&Dual::new(a.clone(), Rational::one()));
            let expected = p.eval(&a) * q.derivative().eval(&a)
                + p.derivative().eval(&a) * q.eval(&a);
            prop_assert_eq!(slope.infinitesimal(), &expected);
        }

        #[test]
        fn evaluation_is_linear(
            p in proptest::collection::vec(arb_rational(), 0..6),
            q in proptest::collection::vec(arb_rational(), 0..6),
            a in arb_rational(),
        ) {
            let p = Polynomial::new(p);
            let q = Polynomial::new(q);
            let at = Dual::new(a, Rational::one());
            let sum = (&p + &q).eval_dual(&at);
            prop_assert_eq!(sum, &p.eval_dual(&at) + &q.eval_dual(&at));
        }

        #[test]
        fn order_is_total_on_duals(x in arb_dual(), y in arb_dual(), z in arb_dual()) {
            // Reflexive, antisymmetric, transitive, total.
            prop_assert!(x <= x);
            if x <= y && y <= x {
                prop_assert_eq!(&x, &y);
            }
            prop_assert!(x <= y || y <= x);
            let mut sorted = [x, y, z];
            sorted.sort();
            prop_assert!(sorted[0] <= sorted[2]);
        }

        #[test]
        fn boost_contract(d in arb_dual(), w in arb_rational(), t in arb_rational()) {
            let boost = GalileanBoost::new(w.clone());
            let lhs = d.boosted(&boost).position_at(&t);
            let rhs = d.position_at(&t) + &w * &t;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
