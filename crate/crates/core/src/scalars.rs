//! Exact scalars: rationals and Laurent polynomials in the formal parameter `q`.
//!
//! Everything in the engine is computed over `Q[q, q^-1]`. The parameter `q`
//! is never evaluated, so every identity checked downstream holds for generic
//! `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical form (positive denominator, reduced).
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Generalized binomial coefficient `r (r-1) ... (r-k+1) / k!` for rational `r`.
///
/// For a nonnegative integer `r < k` the falling factorial passes through zero,
/// so the usual "zero when the top is too small" rule falls out.
pub fn gen_binomial(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= r - int(j as i64);
    }
    acc / factorial(k)
}

/// Renders a rational as `p` or `p/q`.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A Laurent polynomial `sum_k a_k q^k` with rational coefficients.
///
/// Stored sparsely as `(exponent, coefficient)` pairs with strictly increasing
/// exponents and no zero coefficients, so structural equality is equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Vec<(i64, Rational)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// `c q^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(k, c)] }
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i64, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, Rational)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Laurent { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> Rational {
        self.terms
            .binary_search_by_key(&k, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// The constant if this polynomial has no `q` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplicative inverse, defined only for the units `c q^k` (c != 0).
    pub fn unit_inverse(&self) -> Option<Laurent> {
        match self.terms.as_slice() {
            [(k, c)] => Some(Laurent::monomial(c.recip(), -k)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect() }
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn merge(&self, other: &Laurent, negate_other: bool) -> Laurent {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Laurent { terms: out }
    }

    fn product(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        if self.terms.len() == 1 {
            let (k, c) = &self.terms[0];
            return Laurent { terms: other.terms.iter().map(|(e, a)| (e + k, a * c)).collect() };
        }
        if other.terms.len() == 1 {
            return other.product(self);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                acc.push((ka + kb, ca * cb));
            }
        }
        Laurent::from_terms(acc)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self)
    }
}

fn render_q_term(c: &Rational, k: i64) -> String {
    let q = match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{}", k),
    };
    if q.is_empty() {
        render_rational(c)
    } else if c.is_one() {
        q
    } else {
        format!("{}*{}", render_rational(c), q)
    }
}

/// Ascending exponents, e.g. `-1 + q^2`, `1/2*q^-1 - 3*q`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-{}", render_q_term(&-c, *k))?;
                } else {
                    write!(f, "{}", render_q_term(c, *k))?;
                }
            } else if c.is_negative() {
                write!(f, " - {}", render_q_term(&-c, *k))?;
            } else {
                write!(f, " + {}", render_q_term(c, *k))?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for Laurent {
    fn from(c: Rational) -> Self {
        Laurent::constant(c)
    }
}

impl From<i64> for Laurent {
    fn from(n: i64) -> Self {
        Laurent::from_int(n)
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &'a Laurent) -> Laurent {
        self.merge(rhs, false)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, false)
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &'a Laurent) -> Laurent {
        self.merge(rhs, true)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self.merge(&rhs, true)
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &'a Laurent) -> Laurent {
        self.product(rhs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        self.product(&rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        *self = self.merge(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Laurent {
        Laurent::q_pow(1)
    }

    #[test]
    fn difference_of_squares() {
        let one = Laurent::one();
        let p = &(&one - &q()) * &(&one + &q());
        assert_eq!(p, &one - &Laurent::q_pow(2));
        assert_eq!(p.to_string(), "1 - q^2");
    }

    #[test]
    fn exponents_add() {
        assert_eq!(&Laurent::q_pow(-2) * &Laurent::q_pow(5), Laurent::q_pow(3));
    }

    #[test]
    fn hand_expansion() {
        let p = &(&q() - &Laurent::q_pow(-1)) * &q();
        assert_eq!(p, &Laurent::q_pow(2) - &Laurent::one());
        assert_eq!(p.to_string(), "-1 + q^2");
    }

    #[test]
    fn binomials() {
        assert_eq!(gen_binomial(&int(3), 2), int(3));
        assert_eq!(gen_binomial(&rat(7, 3), 0), int(1));
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&int(-1), 3), int(-1));
    }

    #[test]
    fn rendering() {
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::q_pow(-2).to_string(), "q^-2");
        assert_eq!((-Laurent::q_pow(1)).to_string(), "-q");
        let p = Laurent::from_terms([(-1, rat(1, 2)), (3, int(-3)), (0, int(2))]);
        assert_eq!(p.to_string(), "1/2*q^-1 + 2 - 3*q^3");
    }

    #[test]
    fn units_invert() {
        let u = Laurent::monomial(rat(-2, 3), 4);
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
        assert!((&Laurent::one() + &q()).unit_inverse().is_none());
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-4i64..=4, -5i64..=5, 1i64..=3), 0..4)
            .prop_map(|v| Laurent::from_terms(v.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn falling_factorial_hits_zero(n in 0i64..8, extra in 1usize..4) {
            prop_assert!(gen_binomial(&int(n), n as usize + extra).is_zero());
        }

        #[test]
        fn pascal_rule(num in -20i64..20, den in 1i64..6, k in 1usize..=8) {
            let r = rat(num, den);
            let lhs = gen_binomial(&r, k);
            let rhs = gen_binomial(&(&r - int(1)), k) + gen_binomial(&(&r - int(1)), k - 1);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
