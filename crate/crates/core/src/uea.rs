//! The universal enveloping algebra `U(W)` in PBW normal form, its primitive
//! Hopf structure, and tensor powers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::liealg::{bracket, tau_gen, Gen, LieElt};
use crate::scalars::{int, Laurent, Rational};
use crate::AlgebraError;

/// A PBW monomial: a non-decreasing sequence of generators.
///
/// Ordered by length first, then lexicographically by factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(Vec<Gen>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    /// Rejects sequences that are not sorted in the generator order.
    pub fn new(factors: Vec<Gen>) -> Result<Mono, AlgebraError> {
        if factors.windows(2).all(|w| w[0] <= w[1]) {
            Ok(Mono(factors))
        } else {
            Err(AlgebraError::UnsortedMonomial)
        }
    }

    pub fn factors(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Factors joined by `*`, repeats collapsed to powers: `d^2*e[1,0]`.
impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{}", self.0[i])?;
            } else {
                write!(f, "{}^{}", self.0[i], j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Appends one signed term to a rendered sum.
pub(crate) fn render_term(out: &mut String, coeff: &Laurent, body: &str, compound_body: bool) {
    let first = out.is_empty();
    let single = coeff.len() == 1;
    let negative = single && coeff.terms()[0].1.is_negative();
    let shown = if negative { -coeff } else { coeff.clone() };
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let coeff_str = if single { shown.to_string() } else { format!("({})", shown) };
    if body == "1" {
        out.push_str(&coeff_str);
    } else if shown.is_one() {
        out.push_str(body);
    } else if compound_body {
        out.push_str(&format!("{}*({})", coeff_str, body));
    } else {
        out.push_str(&format!("{}*{}", coeff_str, body));
    }
}

/// An element of `U(W)`: a finite map from PBW monomials to Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UElt {
    terms: BTreeMap<Mono, Laurent>,
}

impl UElt {
    pub fn zero() -> UElt {
        UElt::default()
    }

    pub fn one() -> UElt {
        UElt::scalar(Laurent::one())
    }

    pub fn scalar(c: Laurent) -> UElt {
        let mut out = UElt::zero();
        out.add_term(Mono::one(), &c);
        out
    }

    pub fn rational(c: Rational) -> UElt {
        UElt::scalar(Laurent::constant(c))
    }

    pub fn gen(g: Gen) -> UElt {
        UElt::mono(Mono(vec![g]), Laurent::one())
    }

    pub fn mono(m: Mono, c: Laurent) -> UElt {
        let mut out = UElt::zero();
        out.add_term(m, &c);
        out
    }

    pub fn from_lie(x: &LieElt) -> UElt {
        let mut out = UElt::zero();
        for (g, c) in x.terms() {
            out.add_term(Mono(vec![*g]), c);
        }
        out
    }

    pub fn add_term(&mut self, m: Mono, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Laurent)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Laurent) -> UElt {
        if c.is_zero() {
            return UElt::zero();
        }
        UElt { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> UElt {
        self.scale(&Laurent::constant(c.clone()))
    }

    /// The coefficient of the empty monomial, i.e. the counit.
    pub fn constant_term(&self) -> Laurent {
        self.terms.get(&Mono::one()).cloned().unwrap_or_default()
    }

    /// `Some(c)` iff this element is `c * 1`.
    pub fn as_scalar(&self) -> Option<Laurent> {
        match self.terms.len() {
            0 => Some(Laurent::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    /// Whether any monomial uses a generator satisfying `pred`.
    pub fn mentions(&self, pred: impl Fn(Gen) -> bool) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|g| pred(*g)))
    }

    /// Right multiplication by one generator, re-normalized.
    pub fn mul_gen(&self, g: Gen) -> UElt {
        let mut out = UElt::zero();
        for (m, c) in &self.terms {
            insert_gen(&m.0, g, c, &mut out);
        }
        out
    }

    pub fn pow(&self, k: usize) -> UElt {
        let mut acc = UElt::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Adds `coeff * (prefix * g)` in normal form to `out`; `prefix` must be sorted.
fn insert_gen(prefix: &[Gen], g: Gen, coeff: &Laurent, out: &mut UElt) {
    let mut j = prefix.len();
    while j > 0 && prefix[j - 1] > g {
        j -= 1;
    }
    let mut lead = Vec::with_capacity(prefix.len() + 1);
    lead.extend_from_slice(&prefix[..j]);
    lead.push(g);
    lead.extend_from_slice(&prefix[j..]);
    out.add_term(Mono(lead), coeff);
    // moving g left past prefix[i] leaves prefix[..i] [prefix[i], g] prefix[i+1..]
    for i in j..prefix.len() {
        let br = bracket(prefix[i], g);
        for (b, c) in br.terms() {
            let mut cur = UElt::zero();
            insert_gen(&prefix[..i], *b, &(coeff * c), &mut cur);
            for &x in &prefix[i + 1..] {
                cur = cur.mul_gen(x);
            }
            for (m, c2) in cur.terms {
                out.add_term(m, &c2);
            }
        }
    }
}

/// Normal form of `coeff * w_1 w_2 ... w_k` for an arbitrary word.
pub fn straighten(word: &[Gen], coeff: &Laurent) -> UElt {
    let mut acc = UElt::scalar(coeff.clone());
    for &g in word {
        acc = acc.mul_gen(g);
    }
    acc
}

fn mono_mul(a: &Mono, b: &Mono) -> UElt {
    if b.0.is_empty() {
        return UElt::mono(a.clone(), Laurent::one());
    }
    if a.0.is_empty() {
        return UElt::mono(b.clone(), Laurent::one());
    }
    if a.0.last() <= b.0.first() {
        let mut v = a.0.clone();
        v.extend_from_slice(&b.0);
        return UElt::mono(Mono(v), Laurent::one());
    }
    let mut acc = UElt::mono(a.clone(), Laurent::one());
    for &g in &b.0 {
        acc = acc.mul_gen(g);
    }
    acc
}

impl Mul for &UElt {
    type Output = UElt;
    fn mul(self, rhs: &UElt) -> UElt {
        let mut out = UElt::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let coeff = ca * cb;
                for (m, c) in mono_mul(ma, mb).terms {
                    out.add_term(m, &(&c * &coeff));
                }
            }
        }
        out
    }
}

impl Mul for UElt {
    type Output = UElt;
    fn mul(self, rhs: UElt) -> UElt {
        &self * &rhs
    }
}

impl Add for &UElt {
    type Output = UElt;
    fn add(self, rhs: &UElt) -> UElt {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for UElt {
    type Output = UElt;
    fn add(self, rhs: UElt) -> UElt {
        &self + &rhs
    }
}

impl Sub for &UElt {
    type Output = UElt;
    fn sub(self, rhs: &UElt) -> UElt {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Sub for UElt {
    type Output = UElt;
    fn sub(self, rhs: UElt) -> UElt {
        &self - &rhs
    }
}

impl Neg for &UElt {
    type Output = UElt;
    fn neg(self) -> UElt {
        self.scale(&Laurent::from_int(-1))
    }
}

impl Neg for UElt {
    type Output = UElt;
    fn neg(self) -> UElt {
        -&self
    }
}

impl fmt::Display for UElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (m, c) in &self.terms {
            render_term(&mut s, c, &m.to_string(), false);
        }
        write!(f, "{}", s)
    }
}

impl fmt::Debug for UElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UElt({})", self)
    }
}

/// `x_a^{<r>} = (x+a)(x+a+1)...(x+a+r-1)`.
pub fn rising(base: &UElt, a: &Rational, r: usize) -> UElt {
    let mut acc = UElt::one();
    for j in 0..r {
        let factor = base + &UElt::rational(a + int(j as i64));
        acc = &acc * &factor;
    }
    acc
}

/// `x_a^{[r]} = (x+a)(x+a-1)...(x+a-r+1)`.
pub fn falling(base: &UElt, a: &Rational, r: usize) -> UElt {
    let mut acc = UElt::one();
    for j in 0..r {
        let factor = base + &UElt::rational(a - int(j as i64));
        acc = &acc * &factor;
    }
    acc
}

/// Primitive coproduct extended multiplicatively. A sorted monomial splits
/// into sorted sub-monomials, so no re-normalization is needed.
pub fn delta0(x: &UElt) -> Tensor {
    let mut out = Tensor::zero(2);
    for (m, c) in x.terms() {
        delta0_mono_into(m, c, &mut out);
    }
    out
}

fn delta0_mono_into(m: &Mono, c: &Laurent, out: &mut Tensor) {
    let k = m.0.len();
    for mask in 0u64..(1u64 << k) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, g) in m.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(*g);
            } else {
                right.push(*g);
            }
        }
        out.add_term(vec![Mono(left), Mono(right)], c);
    }
}

/// `S0(g_1...g_k) = (-1)^k g_k...g_1`, re-normalized.
pub fn antipode0(x: &UElt) -> UElt {
    let mut out = UElt::zero();
    for (m, c) in x.terms() {
        out = &out + &antipode0_mono(m).scale(c);
    }
    out
}

fn antipode0_mono(m: &Mono) -> UElt {
    let sign = if m.0.len().is_multiple_of(2) { 1 } else { -1 };
    let rev: Vec<Gen> = m.0.iter().rev().copied().collect();
    straighten(&rev, &Laurent::from_int(sign))
}

pub fn counit0(x: &UElt) -> Laurent {
    x.constant_term()
}

/// The algebra automorphism extending the involution.
pub fn tau_u(x: &UElt) -> UElt {
    let mut out = UElt::zero();
    for (m, c) in x.terms() {
        let mut sign = 1;
        let word: Vec<Gen> =
            m.0.iter()
                .map(|g| {
                    let (s, img) = tau_gen(*g);
                    sign *= s;
                    img
                })
                .collect();
        out = &out + &straighten(&word, &c.scale(&int(sign)));
    }
    out
}

/// An element of `U^{⊗k}`: a finite map from k-tuples of monomials to coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Mono>, Laurent>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Tensor {
        assert!(arity >= 1, "tensor arity must be positive");
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn unit(arity: usize) -> Tensor {
        let mut t = Tensor::zero(arity);
        t.add_term(vec![Mono::one(); arity], &Laurent::one());
        t
    }

    /// `a_1 ⊗ ... ⊗ a_k`.
    pub fn from_legs(legs: &[&UElt]) -> Tensor {
        let mut out = Tensor::zero(legs.len());
        let mut partial: Vec<(Vec<Mono>, Laurent)> = vec![(Vec::new(), Laurent::one())];
        for leg in legs {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for (m, cm) in leg.terms() {
                    let mut k = key.clone();
                    k.push(m.clone());
                    next.push((k, c * cm));
                }
            }
            partial = next;
        }
        for (k, c) in partial {
            out.add_term(k, &c);
        }
        out
    }

    pub fn from_uelt(x: &UElt) -> Tensor {
        Tensor::from_legs(&[x])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, key: Vec<Mono>, c: &Laurent) {
        debug_assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &Laurent)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms by total length, then with longer left legs first: `e⊗1 + 1⊗e`.
    pub fn display_terms(&self) -> Vec<(&Vec<Mono>, &Laurent)> {
        let mut keys: Vec<(&Vec<Mono>, &Laurent)> = self.terms.iter().collect();
        keys.sort_by_key(|(k, _)| {
            let lens: Vec<usize> = k.iter().map(Mono::len).collect();
            (lens.iter().sum::<usize>(), std::cmp::Reverse(lens))
        });
        keys
    }

    pub fn scale(&self, c: &Laurent) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.arity);
        }
        Tensor { arity: self.arity, terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect() }
    }

    /// `Some(c)` iff this is `c * 1⊗...⊗1`.
    pub fn as_scalar(&self) -> Option<Laurent> {
        match self.terms.len() {
            0 => Some(Laurent::zero()),
            1 => self.terms.get(&vec![Mono::one(); self.arity]).cloned(),
            _ => None,
        }
    }

    /// Back to `U` for arity one.
    pub fn to_uelt(&self) -> Result<UElt, AlgebraError> {
        if self.arity != 1 {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: 1 });
        }
        let mut out = UElt::zero();
        for (k, c) in &self.terms {
            out.add_term(k[0].clone(), c);
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Tensor) -> Result<Tensor, AlgebraError> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    fn check_arity(&self, rhs: &Tensor) -> Result<(), AlgebraError> {
        if self.arity == rhs.arity {
            Ok(())
        } else {
            Err(AlgebraError::ArityMismatch { left: self.arity, right: rhs.arity })
        }
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn try_mul(&self, rhs: &Tensor) -> Result<Tensor, AlgebraError> {
        self.check_arity(rhs)?;
        let mut out = Tensor::zero(self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let legs: Vec<UElt> = ka.iter().zip(kb).map(|(a, b)| mono_mul(a, b)).collect();
                let refs: Vec<&UElt> = legs.iter().collect();
                let prod = Tensor::from_legs(&refs);
                let coeff = ca * cb;
                for (k, c) in prod.terms {
                    out.add_term(k, &(&c * &coeff));
                }
            }
        }
        Ok(out)
    }

    /// Applies a linear map `U -> U` to one leg.
    pub fn map_leg(&self, leg: usize, f: impl Fn(&UElt) -> UElt) -> Tensor {
        self.expand_leg(leg, |x| Tensor::from_uelt(&f(x)))
    }

    /// Applies a linear map `U -> U^{⊗j}` to one leg, splicing the result in.
    pub fn expand_leg(&self, leg: usize, f: impl Fn(&UElt) -> Tensor) -> Tensor {
        assert!(leg < self.arity);
        let mut out: Option<Tensor> = None;
        for (key, c) in &self.terms {
            let image = f(&UElt::mono(key[leg].clone(), Laurent::one()));
            let acc = out.get_or_insert_with(|| Tensor::zero(self.arity - 1 + image.arity));
            for (ik, ic) in &image.terms {
                let mut k = Vec::with_capacity(acc.arity);
                k.extend_from_slice(&key[..leg]);
                k.extend(ik.iter().cloned());
                k.extend_from_slice(&key[leg + 1..]);
                acc.add_term(k, &(c * ic));
            }
        }
        out.unwrap_or_else(|| {
            let probe = f(&UElt::one());
            Tensor::zero(self.arity - 1 + probe.arity)
        })
    }

    /// Applies a linear functional to one leg, dropping it. Arity must be at least two.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(&UElt) -> Laurent) -> Tensor {
        assert!(leg < self.arity && self.arity >= 2);
        let mut out = Tensor::zero(self.arity - 1);
        for (key, c) in &self.terms {
            let s = f(&UElt::mono(key[leg].clone(), Laurent::one()));
            if s.is_zero() {
                continue;
            }
            let mut k = key.clone();
            k.remove(leg);
            out.add_term(k, &(c * &s));
        }
        out
    }

    /// `μ(a⊗b) = ab` for arity two.
    pub fn multiply_legs(&self) -> Result<UElt, AlgebraError> {
        if self.arity != 2 {
            return Err(AlgebraError::ArityMismatch { left: self.arity, right: 2 });
        }
        let mut out = UElt::zero();
        for (k, c) in &self.terms {
            for (m, cm) in mono_mul(&k[0], &k[1]).terms {
                out.add_term(m, &(&cm * c));
            }
        }
        Ok(out)
    }

    /// `a⊗b -> b⊗a` on arity two.
    pub fn flip(&self) -> Tensor {
        assert_eq!(self.arity, 2);
        let mut out = Tensor::zero(2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], c);
        }
        out
    }

    /// Pads with `1` legs: `x -> 1^{before} ⊗ x ⊗ 1^{after}`.
    pub fn pad(&self, before: usize, after: usize) -> Tensor {
        let mut out = Tensor::zero(self.arity + before + after);
        for (k, c) in &self.terms {
            let mut key = vec![Mono::one(); before];
            key.extend(k.iter().cloned());
            key.extend(std::iter::repeat_n(Mono::one(), after));
            out.add_term(key, c);
        }
        out
    }

    pub fn mentions(&self, pred: impl Fn(Gen) -> bool) -> bool {
        self.terms.keys().any(|k| k.iter().any(|m| m.0.iter().any(|g| pred(*g))))
    }
}

/// Terms in [`Tensor::display_terms`] order.
impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, c) in self.display_terms() {
            let body: Vec<String> = k.iter().map(|m| m.to_string()).collect();
            let body = body.join("⊗");
            render_term(&mut s, c, &body, true);
        }
        write!(f, "{}", s)
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{}({})", self.arity, self)
    }
}

/// `Δ0` applied to one leg of a tensor.
pub fn delta0_on_leg(x: &Tensor, leg: usize) -> Tensor {
    x.expand_leg(leg, delta0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Degree;
    use crate::scalars::rat;

    fn e(a: i64, b: i64) -> Gen {
        Gen::e(Degree(a, b))
    }

    fn f(a: i64, b: i64) -> Gen {
        Gen::f(Degree(a, b))
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[e(0, 0)], &Laurent::one()), UElt::gen(e(0, 0)));
        let got = straighten(&[f(1, 0), e(0, 0)], &Laurent::one());
        let want = &(&UElt::mono(Mono(vec![e(0, 0), f(1, 0)]), Laurent::one()) - &UElt::gen(Gen::g(Degree(1, 0))))
            + &UElt::gen(Gen::h(Degree(1, 0)));
        assert_eq!(got, want);
        let sorted = straighten(&[Gen::D, e(1, 1)], &Laurent::one());
        assert_eq!(sorted.to_string(), "d*e[1,1]");
    }

    #[test]
    fn commutator_is_bracket() {
        let (a, b) = (UElt::gen(e(0, 0)), UElt::gen(f(0, 0)));
        assert_eq!(&(&a * &b) - &(&b * &a), UElt::gen(Gen::D));
        let x = &UElt::gen(Gen::D2) + &UElt::gen(e(1, -1));
        assert_eq!(&UElt::one() * &x, x);
    }

    #[test]
    fn rendering_is_canonical() {
        let x = straighten(&[e(0, 0), f(1, 0)], &(&Laurent::one() - &Laurent::q_pow(1)));
        assert_eq!(x.to_string(), "(1 - q)*e[0,0]*f[1,0]");
        let y = &UElt::gen(Gen::D).pow(2) + &UElt::rational(rat(-1, 2));
        assert_eq!(y.to_string(), "-1/2 + d^2");
    }

    #[test]
    fn coproduct_examples() {
        let x = UElt::gen(e(1, 0));
        let want = Tensor::from_legs(&[&x, &UElt::one()]).try_add(&Tensor::from_legs(&[&UElt::one(), &x])).unwrap();
        assert_eq!(delta0(&x), want);
        assert_eq!(delta0(&UElt::one()), Tensor::unit(2));
        let d = UElt::gen(Gen::D);
        let dd = d.pow(2);
        let mut want = Tensor::from_legs(&[&dd, &UElt::one()]);
        want = want.try_add(&Tensor::from_legs(&[&d, &d]).scale(&2.into())).unwrap();
        want = want.try_add(&Tensor::from_legs(&[&UElt::one(), &dd])).unwrap();
        assert_eq!(delta0(&dd), want);
    }

    #[test]
    fn antipode_and_counit_examples() {
        assert_eq!(antipode0(&UElt::gen(e(1, 0))), -UElt::gen(e(1, 0)));
        assert_eq!(antipode0(&UElt::one()), UElt::one());
        assert!(counit0(&UElt::gen(e(1, 0))).is_zero());
        assert!(counit0(&UElt::one()).is_one());
        let x = &UElt::rational(int(3)) + &straighten(&[Gen::D, e(1, 1)], &Laurent::one());
        assert_eq!(counit0(&x), Laurent::from_int(3));
    }

    #[test]
    fn factorial_examples() {
        let t = UElt::gen(Gen::D1);
        assert_eq!(rising(&t, &int(0), 2), &t * &(&t + &UElt::one()));
        assert_eq!(falling(&t, &int(0), 0), UElt::one());
        for r in 0..4 {
            let a = rat(1, 2);
            assert_eq!(falling(&t, &a, r), rising(&t, &(&a - int(r as i64) + int(1)), r));
        }
    }

    #[test]
    fn tensor_examples() {
        let t = UElt::gen(Gen::D1);
        let big_e = UElt::gen(Gen::g(Degree(1, 1)));
        let te = Tensor::from_legs(&[&t, &big_e]);
        assert_eq!(Tensor::unit(2).try_mul(&te).unwrap(), te);
        let sq = te.try_mul(&te).unwrap();
        assert_eq!(sq, Tensor::from_legs(&[&t.pow(2), &big_e.pow(2)]));
        let a = Tensor::from_legs(&[&UElt::gen(e(0, 0)), &UElt::one()]);
        let b = Tensor::from_legs(&[&UElt::one(), &UElt::gen(f(0, 0))]);
        assert_eq!(a.try_mul(&b).unwrap(), Tensor::from_legs(&[&UElt::gen(e(0, 0)), &UElt::gen(f(0, 0))]));
        assert!(matches!(Tensor::unit(2).try_mul(&Tensor::unit(3)), Err(AlgebraError::ArityMismatch { .. })));
        assert_eq!(Tensor::unit(2).to_string(), "1⊗1");
        assert_eq!(Tensor::unit(2).scale(&(-3).into()).to_string(), "-3*(1⊗1)");
    }

    #[test]
    fn leg_maps() {
        let x = &UElt::gen(Gen::D) + &UElt::rational(int(2));
        let y = UElt::gen(e(0, 1));
        let xy = Tensor::from_legs(&[&x, &y]);
        let contracted = xy.contract_leg(0, counit0).to_uelt().unwrap();
        assert_eq!(contracted, y.scale(&Laurent::from_int(2)));
        let expanded = Tensor::from_legs(&[&x, &y]).expand_leg(1, delta0);
        let want =
            Tensor::from_legs(&[&x, &y, &UElt::one()]).try_add(&Tensor::from_legs(&[&x, &UElt::one(), &y])).unwrap();
        assert_eq!(expanded, want);
        assert_eq!(Tensor::unit(2).map_leg(0, antipode0), Tensor::unit(2));
    }

    #[test]
    fn tau_examples() {
        let x = straighten(&[e(1, 0), f(0, 1)], &Laurent::one());
        assert_eq!(tau_u(&x), straighten(&[f(1, 0), e(0, 1)], &Laurent::one()));
        assert_eq!(tau_u(&UElt::one()), UElt::one());
        assert_eq!(tau_u(&tau_u(&x)), x);
    }

    #[test]
    fn unsorted_rejected() {
        assert!(Mono::new(vec![f(0, 0), e(0, 0)]).is_err());
        assert!(Mono::new(vec![Gen::D1, Gen::D, e(0, 0)]).is_ok());
    }
}
