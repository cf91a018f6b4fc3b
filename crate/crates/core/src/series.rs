//! Truncated power series `A[[t]] / (t^{N+1})` over `U(W)` and its tensor powers.

use std::fmt;

use num_traits::Signed;

use crate::scalars::{gen_binomial, Laurent, Rational};
use crate::uea::{Tensor, UElt};
use crate::AlgebraError;

/// The operations a series coefficient ring has to provide.
pub trait Coefficient: Clone + PartialEq + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elt(&self) -> bool;
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError>;
    fn scale(&self, c: &Laurent) -> Self;
    /// `Some(c)` iff this element is `c` times the unit.
    fn as_scalar(&self) -> Option<Laurent>;

    /// Number of basis terms, used to decide how a series coefficient is signed.
    fn num_terms(&self) -> usize;
    /// The coefficient of the single basis term, if there is exactly one.
    fn single_coeff(&self) -> Option<&Laurent>;

    fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&rhs.scale(&Laurent::from_int(-1)))
    }
}

impl Coefficient for UElt {
    fn zero_like(&self) -> Self {
        UElt::zero()
    }
    fn one_like(&self) -> Self {
        UElt::one()
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self + rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * rhs)
    }
    fn scale(&self, c: &Laurent) -> Self {
        UElt::scale(self, c)
    }
    fn as_scalar(&self) -> Option<Laurent> {
        UElt::as_scalar(self)
    }
    fn num_terms(&self) -> usize {
        UElt::num_terms(self)
    }
    fn single_coeff(&self) -> Option<&Laurent> {
        (UElt::num_terms(self) == 1).then(|| self.terms().next().map(|(_, c)| c)).flatten()
    }
}

impl Coefficient for Tensor {
    fn zero_like(&self) -> Self {
        Tensor::zero(self.arity())
    }
    fn one_like(&self) -> Self {
        Tensor::unit(self.arity())
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Tensor::try_add(self, rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Tensor::try_mul(self, rhs)
    }
    fn scale(&self, c: &Laurent) -> Self {
        Tensor::scale(self, c)
    }
    fn as_scalar(&self) -> Option<Laurent> {
        Tensor::as_scalar(self)
    }
    fn num_terms(&self) -> usize {
        Tensor::num_terms(self)
    }
    fn single_coeff(&self) -> Option<&Laurent> {
        (Tensor::num_terms(self) == 1).then(|| self.terms().next().map(|(_, c)| c)).flatten()
    }
}

/// `c_0 + c_1 t + ... + c_N t^N`, everything of degree above `N` discarded.
#[derive(Clone, PartialEq)]
pub struct Series<A> {
    coeffs: Vec<A>,
}

impl<A: Coefficient> Series<A> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries; `coeffs` must be non-empty.
    pub fn from_coeffs(mut coeffs: Vec<A>, order: usize) -> Series<A> {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        let zero = coeffs[0].zero_like();
        coeffs.resize(order + 1, zero);
        Series { coeffs }
    }

    pub fn constant(a: A, order: usize) -> Series<A> {
        Series::from_coeffs(vec![a], order)
    }

    pub fn zero(like: &A, order: usize) -> Series<A> {
        Series::constant(like.zero_like(), order)
    }

    pub fn one(like: &A, order: usize) -> Series<A> {
        Series::constant(like.one_like(), order)
    }

    /// `a t^k`, or zero when `k > order`.
    pub fn monomial(a: A, k: usize, order: usize) -> Series<A> {
        let mut coeffs = vec![a.zero_like(); order + 1];
        if k <= order {
            coeffs[k] = a;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &A {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series<A> {
        Series::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn try_add(&self, rhs: &Series<A>) -> Result<Series<A>, AlgebraError> {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k].try_add(&rhs.coeffs[k])).collect::<Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }

    pub fn try_sub(&self, rhs: &Series<A>) -> Result<Series<A>, AlgebraError> {
        self.try_add(&rhs.scale(&Laurent::from_int(-1)))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn try_mul(&self, rhs: &Series<A>) -> Result<Series<A>, AlgebraError> {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![self.coeffs[0].zero_like(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero_elt() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeffs[j].is_zero_elt() {
                    continue;
                }
                let prod = self.coeffs[i].try_mul(&rhs.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].try_add(&prod)?;
            }
        }
        Ok(Series { coeffs })
    }

    pub fn scale(&self, c: &Laurent) -> Series<A> {
        Series { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Applies a linear map coefficientwise.
    pub fn map<B: Coefficient>(&self, f: impl Fn(&A) -> B) -> Series<B> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Multiplicative inverse, defined when the constant term is a unit scalar
    /// `c q^k`: `(u(1 - y))^{-1} = u^{-1} Σ y^k`.
    pub fn inverse(&self) -> Result<Series<A>, AlgebraError> {
        let c0 = self.coeffs[0].as_scalar().ok_or(AlgebraError::NotInvertible)?;
        let c0_inv = c0.unit_inverse().ok_or(AlgebraError::NotInvertible)?;
        let n = self.order();
        let normalized = self.scale(&c0_inv);
        let one = Series::one(&self.coeffs[0], n);
        let y = one.try_sub(&normalized)?;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..n {
            power = power.try_mul(&y)?;
            acc = acc.try_add(&power)?;
        }
        Ok(acc.scale(&c0_inv))
    }

    /// Lowest degree at which the two series differ, up to the smaller order.
    pub fn first_difference(&self, rhs: &Series<A>) -> Option<usize> {
        let n = self.order().min(rhs.order());
        (0..=n).find(|&k| self.coeffs[k] != rhs.coeffs[k])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_elt())
    }
}

/// Where two series first disagree.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Mismatch {
    pub order: usize,
    /// `lhs - rhs` at that order.
    pub difference: String,
    pub lhs: String,
    pub rhs: String,
}

/// `None` when equal up to the smaller order.
pub fn compare_series<A: Coefficient>(lhs: &Series<A>, rhs: &Series<A>) -> Option<Mismatch> {
    let k = lhs.first_difference(rhs)?;
    let difference = match lhs.coeff(k).try_sub(rhs.coeff(k)) {
        Ok(d) => d.to_string(),
        Err(e) => e.to_string(),
    };
    Some(Mismatch { order: k, difference, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

/// `(1 - E t)^r = Σ_k binom(r, k) (-1)^k E^k t^k` for rational `r`.
pub fn one_minus_et_pow(e: &UElt, r: &Rational, order: usize) -> Series<UElt> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = UElt::one();
    for k in 0..=order {
        let mut c = gen_binomial(r, k);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs.push(power.scale_rational(&c));
        power = &power * e;
    }
    Series { coeffs }
}

/// Leg-wise tensor product of two series: `(Σ a_i t^i) ⊗ (Σ b_j t^j)`.
pub fn tensor_series(a: &Series<UElt>, b: &Series<UElt>) -> Series<Tensor> {
    let n = a.order().min(b.order());
    let mut coeffs = vec![Tensor::zero(2); n + 1];
    for i in 0..=n {
        for j in 0..=(n - i) {
            let piece = Tensor::from_legs(&[a.coeff(i), b.coeff(j)]);
            coeffs[i + j] = coeffs[i + j].try_add(&piece).expect("arity two");
        }
    }
    Series { coeffs }
}

/// Embeds a series over `U` as a series over `U^{⊗1}`.
pub fn as_tensor_series(a: &Series<UElt>) -> Series<Tensor> {
    a.map(Tensor::from_uelt)
}

impl<A: Coefficient> Series<A> {
    /// The nonzero terms without the truncation marker, e.g.
    /// `e⊗1 + 1⊗e - (e⊗e) t`. A coefficient that is a single negative
    /// term is shown with its sign pulled out.
    pub fn render_terms(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_elt() {
                continue;
            }
            if k == 0 {
                out.push_str(&c.to_string());
                continue;
            }
            let negative = c.single_coeff().map(|l| l.len() == 1 && l.terms()[0].1.is_negative()).unwrap_or(false);
            let shown = if negative { c.scale(&Laurent::from_int(-1)) } else { c.clone() };
            let sep = match (out.is_empty(), negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let power = if k == 1 { "t".to_string() } else { format!("t^{k}") };
            out.push_str(&format!("{sep}({shown}) {power}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// [`Series::render_terms`] followed by the truncation marker.
impl<A: Coefficient> fmt::Display for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.render_terms(), self.order() + 1)
    }
}

impl<A: Coefficient> fmt::Debug for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Degree, Gen};
    use crate::scalars::{int, rat};
    use proptest::prelude::*;

    fn big_e() -> UElt {
        UElt::gen(Gen::g(Degree(1, 1)))
    }

    #[test]
    fn binomial_series_multiplies() {
        let e = big_e();
        for (a, b) in [(int(2), int(-3)), (rat(1, 2), rat(1, 2)), (int(-1), int(1))] {
            let lhs = one_minus_et_pow(&e, &a, 4).try_mul(&one_minus_et_pow(&e, &b, 4)).unwrap();
            assert_eq!(lhs, one_minus_et_pow(&e, &(&a + &b), 4));
        }
        let zero = one_minus_et_pow(&e, &int(0), 3);
        assert_eq!(zero, Series::one(&e, 3));
    }

    #[test]
    fn inverse_round_trip() {
        let e = big_e();
        let s = one_minus_et_pow(&e, &int(1), 5);
        assert_eq!(s.inverse().unwrap(), one_minus_et_pow(&e, &int(-1), 5));
        let scaled = s.scale(&Laurent::q_pow(2).scale(&int(3)));
        let inv = scaled.inverse().unwrap();
        assert_eq!(scaled.try_mul(&inv).unwrap(), Series::one(&e, 5));
        let bad = Series::monomial(e.clone(), 1, 3);
        assert_eq!(bad.inverse(), Err(AlgebraError::NotInvertible));
        let not_scalar = Series::constant(e.clone(), 3);
        assert!(not_scalar.inverse().is_err());
    }

    #[test]
    fn mixed_orders_truncate() {
        let e = big_e();
        let a = one_minus_et_pow(&e, &int(1), 2);
        let b = one_minus_et_pow(&e, &int(1), 5);
        assert_eq!(a.try_mul(&b).unwrap().order(), 2);
        assert_eq!(b.try_add(&a).unwrap().order(), 2);
    }

    #[test]
    fn rendering() {
        let e = UElt::gen(Gen::D);
        let s = one_minus_et_pow(&e, &int(1), 2);
        assert_eq!(s.to_string(), "1 - (d) t + O(t^3)");
        assert_eq!(s.render_terms(), "1 - (d) t");
        let t = tensor_series(&s, &Series::one(&e, 2));
        assert_eq!(t.to_string(), "1⊗1 - (d⊗1) t + O(t^3)");
        assert_eq!(Series::zero(&e, 2).render_terms(), "0");
    }

    #[test]
    fn tensor_series_of_units() {
        let e = big_e();
        let s = one_minus_et_pow(&e, &rat(1, 2), 3);
        let t = tensor_series(&Series::one(&e, 3), &s);
        let inv = t.inverse().unwrap();
        let want = tensor_series(&Series::one(&e, 3), &one_minus_et_pow(&e, &rat(-1, 2), 3));
        assert_eq!(inv, want);
    }

    proptest! {
        #[test]
        fn exponent_law(a in -6i64..6, b in -6i64..6, da in 1i64..4, db in 1i64..4) {
            let e = big_e();
            let (ra, rb) = (rat(a, da), rat(b, db));
            let lhs = one_minus_et_pow(&e, &ra, 3).try_mul(&one_minus_et_pow(&e, &rb, 3)).unwrap();
            prop_assert_eq!(lhs, one_minus_et_pow(&e, &(&ra + &rb), 3));
        }
    }
}
