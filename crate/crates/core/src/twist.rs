//! Twist contexts, the twist families built from a pair `[T, E] = E`, and the
//! conjugation oracle `Δ = 𝓘Δ₀𝓘⁻¹`, `S = uS₀u⁻¹`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::liealg::{bracket_lin, combination, Degree, Gen, Kind, LieElt};
use crate::scalars::{factorial, int, rat, render_rational, Laurent, Rational};
use crate::series::{compare_series, Mismatch, Series};
use crate::uea::{antipode0, counit0, delta0, falling, Tensor, UElt};

/// The six quantizations: three built from `T = x·d` or `T = ±d/2`, and their
/// images under the involution.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum Case {
    /// `E = g_n`, `T = x1 d1 + x2 d2`
    G,
    /// `E = e_n`, `T = x1 d1 + x2 d2`
    E,
    /// `E = e_n`, `T = d/2`
    D,
    /// `E = h_n`, `T = x1 d1 + x2 d2`
    H,
    /// `E = f_n`, `T = x1 d1 + x2 d2`
    F,
    /// `E = f_n`, `T = -d/2`
    DF,
}

impl Case {
    pub const ALL: [Case; 6] = [Case::G, Case::E, Case::D, Case::H, Case::F, Case::DF];

    pub fn tag(self) -> &'static str {
        match self {
            Case::G => "g",
            Case::E => "e",
            Case::D => "d",
            Case::H => "h",
            Case::F => "f",
            Case::DF => "df",
        }
    }

    /// Whether `T` is built from the degree derivations.
    pub fn uses_x(self) -> bool {
        !matches!(self, Case::D | Case::DF)
    }

    /// The case obtained by applying the involution.
    pub fn partner(self) -> Case {
        match self {
            Case::G => Case::H,
            Case::H => Case::G,
            Case::E => Case::F,
            Case::F => Case::E,
            Case::D => Case::DF,
            Case::DF => Case::D,
        }
    }

    /// True for the `e_n`/`g_n`/`d/2` side, false for its involution image.
    pub fn is_primary_side(self) -> bool {
        matches!(self, Case::G | Case::E | Case::D)
    }

    fn e_kind(self) -> Kind {
        match self {
            Case::G => Kind::G,
            Case::H => Kind::H,
            Case::E | Case::D => Kind::E,
            Case::F | Case::DF => Kind::F,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Case {
    type Err = ContextError;
    fn from_str(s: &str) -> Result<Case, ContextError> {
        Case::ALL
            .into_iter()
            .find(|c| c.tag() == s.to_ascii_lowercase())
            .ok_or_else(|| ContextError::Syntax(format!("unknown case `{s}` (expected g, e, d, h, f or df)")))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContextError {
    #[error("x1*n1 + x2*n2 = {0}, but the pair (T, E) needs it to be 1")]
    Normalization(String),
    #[error("E = {0}_n needs n != (0,0)")]
    ZeroDegree(&'static str),
    #[error("the {0}-case fixes T = ±d/2 and takes no x")]
    XNotApplicable(&'static str),
    #[error("no x with x1*n1 + x2*n2 = 1 exists for n = (0,0)")]
    NoSolution,
    #[error("[T, E] != E")]
    NotEigenvector,
    #[error("{0}")]
    Syntax(String),
}

/// A validated choice of `(T, E)` with `[T, E] = E`, plus the truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistContext {
    case: Case,
    n: Degree,
    x: Option<(Rational, Rational)>,
    order: usize,
    t_lie: LieElt,
    t: UElt,
    e_gen: Gen,
    e: UElt,
}

impl TwistContext {
    /// Validates the parameters. `x = None` picks [`default_x`] for the cases that use it.
    pub fn new(
        case: Case,
        n: Degree,
        x: Option<(Rational, Rational)>,
        order: usize,
    ) -> Result<TwistContext, ContextError> {
        let x = match (case.uses_x(), x) {
            (false, Some(_)) => return Err(ContextError::XNotApplicable(case.tag())),
            (false, None) => None,
            (true, Some(x)) => Some(x),
            (true, None) => Some(default_x(n)?),
        };
        if matches!(case, Case::G | Case::H) && n.is_zero() {
            return Err(ContextError::ZeroDegree(case.e_kind().letter()));
        }
        if let Some((x1, x2)) = &x {
            let dot = x1 * int(n.0) + x2 * int(n.1);
            if dot != int(1) {
                return Err(ContextError::Normalization(render_rational(&dot)));
            }
        }
        let t_lie = match case {
            Case::D => combination(&[(rat(1, 2), Gen::D)]),
            Case::DF => combination(&[(rat(-1, 2), Gen::D)]),
            _ => {
                let (x1, x2) = x.clone().expect("x is set for x-cases");
                combination(&[(x1, Gen::D1), (x2, Gen::D2)])
            }
        };
        let e_gen = Gen::new(case.e_kind(), n).map_err(|_| ContextError::ZeroDegree(case.e_kind().letter()))?;
        if bracket_lin(&t_lie, &LieElt::gen(e_gen)) != LieElt::gen(e_gen) {
            return Err(ContextError::NotEigenvector);
        }
        let t = UElt::from_lie(&t_lie);
        let e = UElt::gen(e_gen);
        Ok(TwistContext { case, n, x, order, t_lie, t, e_gen, e })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn n(&self) -> Degree {
        self.n
    }

    pub fn x(&self) -> Option<&(Rational, Rational)> {
        self.x.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn t(&self) -> &UElt {
        &self.t
    }

    pub fn e(&self) -> &UElt {
        &self.e
    }

    pub fn e_gen(&self) -> Gen {
        self.e_gen
    }

    /// Same pair at a different truncation order.
    pub fn with_order(&self, order: usize) -> TwistContext {
        TwistContext { order, ..self.clone() }
    }

    /// The involution image: same `n` and `x`, partner case.
    pub fn tau_image(&self) -> TwistContext {
        TwistContext::new(self.case.partner(), self.n, self.x.clone(), self.order)
            .expect("the involution maps valid contexts to valid contexts")
    }

    /// The eigenvalue `r` of `ad T` on a generator: `[T, y] = r y`.
    pub fn weight(&self, y: Gen) -> Rational {
        let br = bracket_lin(&self.t_lie, &LieElt::gen(y));
        let r = br
            .terms()
            .find(|(g, _)| **g == y)
            .map(|(_, c)| c.as_constant().expect("weights are rational"))
            .unwrap_or_else(Rational::zero);
        r
    }

    fn t_tensor_e(&self, coeff: impl Fn(usize) -> Rational, t_part: impl Fn(usize) -> UElt) -> Series<Tensor> {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        let mut e_pow = UElt::one();
        for i in 0..=self.order {
            let leg = t_part(i).scale_rational(&coeff(i));
            coeffs.push(Tensor::from_legs(&[&leg, &e_pow]));
            e_pow = &e_pow * &self.e;
        }
        Series::from_coeffs(coeffs, self.order)
    }

    fn t_times_e(&self, coeff: impl Fn(usize) -> Rational, t_part: impl Fn(usize) -> UElt) -> Series<UElt> {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        let mut e_pow = UElt::one();
        for i in 0..=self.order {
            coeffs.push((&t_part(i) * &e_pow).scale_rational(&coeff(i)));
            e_pow = &e_pow * &self.e;
        }
        Series::from_coeffs(coeffs, self.order)
    }

    /// `𝓘_c = Σ (-1)^i/i! T_c^{[i]} ⊗ E^i t^i`.
    pub fn twist(&self, c: &Rational) -> Series<Tensor> {
        self.t_tensor_e(|i| sign(i) / factorial(i), |i| falling(&self.t, c, i))
    }

    /// `I_c = Σ 1/i! T_c^{<i>} ⊗ E^i t^i`.
    pub fn inverse_twist(&self, c: &Rational) -> Series<Tensor> {
        self.t_tensor_e(|i| int(1) / factorial(i), |i| crate::uea::rising(&self.t, c, i))
    }

    /// `𝓙_c = Σ 1/i! T_c^{[i]} E^i t^i`.
    pub fn u_family(&self, c: &Rational) -> Series<UElt> {
        self.t_times_e(|i| int(1) / factorial(i), |i| falling(&self.t, c, i))
    }

    /// `J_c = Σ (-1)^i/i! T_{-c}^{[i]} E^i t^i`.
    pub fn u_inv_family(&self, c: &Rational) -> Series<UElt> {
        let minus_c = -c.clone();
        self.t_times_e(|i| sign(i) / factorial(i), |i| falling(&self.t, &minus_c, i))
    }

    /// Parses `case=g n=1,1 x=1,0 order=4`; `x` and `order` are optional (order defaults to 3).
    pub fn parse_spec(s: &str) -> Result<TwistContext, ContextError> {
        s.parse()
    }
}

fn sign(i: usize) -> Rational {
    if i.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

impl fmt::Display for TwistContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case={} n={},{}", self.case, self.n.0, self.n.1)?;
        if let Some((x1, x2)) = &self.x {
            write!(f, " x={},{}", render_rational(x1), render_rational(x2))?;
        }
        write!(f, " order={}", self.order)
    }
}

/// Parses `a,b` into two integers.
pub fn parse_degree(s: &str) -> Result<Degree, ContextError> {
    let bad = || ContextError::Syntax(format!("expected two integers `a,b`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok(Degree(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Parses `p,q` into two rationals, each `int` or `int/int`.
pub fn parse_rational_pair(s: &str) -> Result<(Rational, Rational), ContextError> {
    let bad = || ContextError::Syntax(format!("expected two rationals `p,q`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((parse_rational(a).ok_or_else(bad)?, parse_rational(b).ok_or_else(bad)?))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| rat(p, q))
        }
        None => Some(int(s.parse().ok()?)),
    }
}

impl FromStr for TwistContext {
    type Err = ContextError;
    fn from_str(s: &str) -> Result<TwistContext, ContextError> {
        let (mut case, mut n, mut x, mut order) = (None, None, None, 3usize);
        for token in s.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| ContextError::Syntax(format!("expected key=value, got `{token}`")))?;
            match key {
                "case" => case = Some(value.parse::<Case>()?),
                "n" => n = Some(parse_degree(value)?),
                "x" => x = Some(parse_rational_pair(value)?),
                "order" => order = value.parse().map_err(|_| ContextError::Syntax(format!("bad order `{value}`")))?,
                _ => return Err(ContextError::Syntax(format!("unknown key `{key}`"))),
            }
        }
        let case = case.ok_or_else(|| ContextError::Syntax("missing `case=`".into()))?;
        let n = n.ok_or_else(|| ContextError::Syntax("missing `n=`".into()))?;
        TwistContext::new(case, n, x, order)
    }
}

/// The solution of `x1 n1 + x2 n2 = 1` with the smallest denominator and then
/// the smallest `|x1| + |x2|`; ties prefer the larger `x1`.
///
/// With `g = gcd(n1, n2)` every solution has denominator divisible by `g`, and
/// `y / g` for an integer solution `y` of `y·(n/g) = 1` attains it.
pub fn default_x(n: Degree) -> Result<(Rational, Rational), ContextError> {
    if n.is_zero() {
        return Err(ContextError::NoSolution);
    }
    let g = n.0.gcd(&n.1);
    let (a, b) = (n.0 / g, n.1 / g);
    let ext = a.extended_gcd(&b);
    // ext.gcd is ±1 since a and b are coprime
    let (y1, y2) = (ext.x * ext.gcd, ext.y * ext.gcd);
    let span = y1.abs() + y2.abs() + 1;
    let best = (-span..=span)
        .map(|k| (y1 + k * b, y2 - k * a))
        .min_by_key(|&(p, q)| (p.abs() + q.abs(), -p, -q))
        .expect("non-empty search range");
    Ok((rat(best.0, g), rat(best.1, g)))
}

/// The conjugation oracle for one context: `F = 𝓘₀`, its series inverse,
/// and `u = μ(Id⊗S₀)(F)` with its series inverse, all computed mechanically.
#[derive(Clone)]
pub struct Oracle {
    ctx: TwistContext,
    f: Series<Tensor>,
    f_inv: Series<Tensor>,
    u: Series<UElt>,
    u_inv: Series<UElt>,
    f_left: Series<Tensor>,
    f_left_inv: Series<Tensor>,
    f_right: Series<Tensor>,
    f_right_inv: Series<Tensor>,
}

impl Oracle {
    pub fn new(ctx: &TwistContext) -> Oracle {
        Oracle::with_twist(ctx, ctx.twist(&Rational::zero()))
    }

    /// Builds the oracle around an arbitrary invertible twist candidate.
    pub fn with_twist(ctx: &TwistContext, f: Series<Tensor>) -> Oracle {
        let f_inv = f.inverse().expect("constant term 1⊗1");
        let u = f.map(|x| x.map_leg(1, antipode0).multiply_legs().expect("arity two"));
        let u_inv = u.inverse().expect("constant term 1");
        let f_left = f.map(|x| x.pad(0, 1));
        let f_right = f.map(|x| x.pad(1, 0));
        let f_left_inv = f_inv.map(|x| x.pad(0, 1));
        let f_right_inv = f_inv.map(|x| x.pad(1, 0));
        Oracle { ctx: ctx.clone(), f, f_inv, u, u_inv, f_left, f_left_inv, f_right, f_right_inv }
    }

    pub fn context(&self) -> &TwistContext {
        &self.ctx
    }

    pub fn twist(&self) -> &Series<Tensor> {
        &self.f
    }

    pub fn twist_inverse(&self) -> &Series<Tensor> {
        &self.f_inv
    }

    pub fn u(&self) -> &Series<UElt> {
        &self.u
    }

    pub fn u_inv(&self) -> &Series<UElt> {
        &self.u_inv
    }

    pub fn order(&self) -> usize {
        self.ctx.order
    }

    /// `F Δ₀(x) F⁻¹`.
    pub fn delta(&self, x: &UElt) -> Series<Tensor> {
        self.delta_series(&Series::constant(x.clone(), self.order()))
    }

    pub fn delta_series(&self, x: &Series<UElt>) -> Series<Tensor> {
        conj(&self.f, &x.map(delta0), &self.f_inv)
    }

    /// `u S₀(x) u⁻¹`.
    pub fn antipode(&self, x: &UElt) -> Series<UElt> {
        self.antipode_series(&Series::constant(x.clone(), self.order()))
    }

    pub fn antipode_series(&self, x: &Series<UElt>) -> Series<UElt> {
        conj(&self.u, &x.map(antipode0), &self.u_inv)
    }

    /// `(Δ⊗Id)(X) = (F⊗1)(Δ₀⊗Id)(X)(F⁻¹⊗1)`.
    pub fn delta_left(&self, x: &Series<Tensor>) -> Series<Tensor> {
        conj(&self.f_left, &x.map(|t| t.expand_leg(0, delta0)), &self.f_left_inv)
    }

    /// `(Id⊗Δ)(X) = (1⊗F)(Id⊗Δ₀)(X)(1⊗F⁻¹)`.
    pub fn delta_right(&self, x: &Series<Tensor>) -> Series<Tensor> {
        conj(&self.f_right, &x.map(|t| t.expand_leg(1, delta0)), &self.f_right_inv)
    }

    /// `μ(S⊗Id)(X) = u · Σ S₀(a) u⁻¹ b` for `X = Σ a⊗b`.
    pub fn mu_s_id(&self, x: &Series<Tensor>) -> Series<UElt> {
        let inner = insert_middle(&x.map(|t| t.map_leg(0, antipode0)), &self.u_inv);
        self.u.try_mul(&inner).expect("same kind")
    }

    /// `μ(Id⊗S)(X) = Σ a u S₀(b) · u⁻¹`.
    pub fn mu_id_s(&self, x: &Series<Tensor>) -> Series<UElt> {
        let inner = insert_middle(&x.map(|t| t.map_leg(1, antipode0)), &self.u);
        inner.try_mul(&self.u_inv).expect("same kind")
    }
}

fn conj<A: crate::series::Coefficient>(l: &Series<A>, x: &Series<A>, r: &Series<A>) -> Series<A> {
    let lx = l.try_mul(x).expect("matching arity");
    lx.try_mul(r).expect("matching arity")
}

/// `Σ_{a⊗b} a · mid · b` as a series.
fn insert_middle(x: &Series<Tensor>, mid: &Series<UElt>) -> Series<UElt> {
    let n = x.order().min(mid.order());
    let mut coeffs = vec![UElt::zero(); n + 1];
    for k in 0..=n {
        for (key, c) in x.coeff(k).terms() {
            let a = UElt::mono(key[0].clone(), c.clone());
            let b = UElt::mono(key[1].clone(), Laurent::one());
            for j in 0..=(n - k) {
                if mid.coeff(j).is_zero() {
                    continue;
                }
                let piece = &(&a * mid.coeff(j)) * &b;
                coeffs[k + j] = &coeffs[k + j] + &piece;
            }
        }
    }
    Series::from_coeffs(coeffs, n)
}

/// Negates the `t^k` coefficient of a twist.
///
/// The cocycle identity at order `j` is linear in `F_j` and otherwise built from
/// products of lower coefficients, so flipping `F_1` first shows up at order 3
/// and flipping `F_k` for `k >= 2` at order `k`.
pub fn corrupt_twist(f: &Series<Tensor>, k: usize) -> Series<Tensor> {
    let mut coeffs = f.coeffs().to_vec();
    if k < coeffs.len() {
        coeffs[k] = coeffs[k].scale(&Laurent::from_int(-1));
    }
    Series::from_coeffs(coeffs, f.order())
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub sample: String,
    pub mismatch: Option<Mismatch>,
}

impl AxiomCheck {
    pub fn new<A: crate::series::Coefficient>(
        axiom: impl Into<String>,
        sample: impl Into<String>,
        lhs: &Series<A>,
        rhs: &Series<A>,
    ) -> AxiomCheck {
        AxiomCheck { axiom: axiom.into(), sample: sample.into(), mismatch: compare_series(lhs, rhs) }
    }

    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// `(F⊗1)(Δ₀⊗Id)F = (1⊗F)(Id⊗Δ₀)F`.
pub fn check_cocycle_of(f: &Series<Tensor>) -> AxiomCheck {
    let lhs = f.map(|x| x.pad(0, 1)).try_mul(&f.map(|x| x.expand_leg(0, delta0))).expect("arity three");
    let rhs = f.map(|x| x.pad(1, 0)).try_mul(&f.map(|x| x.expand_leg(1, delta0))).expect("arity three");
    AxiomCheck::new("cocycle", "F", &lhs, &rhs)
}

pub fn check_cocycle(ctx: &TwistContext) -> AxiomCheck {
    let mut check = check_cocycle_of(&ctx.twist(&Rational::zero()));
    check.sample = ctx.to_string();
    check
}

/// `(ε₀⊗Id)F = 1⊗1 = (Id⊗ε₀)F`, as arity-one series.
pub fn check_twist_counit(ctx: &TwistContext) -> Vec<AxiomCheck> {
    let f = ctx.twist(&Rational::zero());
    let one = Series::one(&Tensor::unit(1), ctx.order());
    vec![
        AxiomCheck::new("counit-left", ctx.to_string(), &f.map(|x| x.contract_leg(0, counit0)), &one),
        AxiomCheck::new("counit-right", ctx.to_string(), &f.map(|x| x.contract_leg(1, counit0)), &one),
    ]
}

/// The Hopf axioms of the twisted structure on single samples and on pairs.
pub fn check_hopf(oracle: &Oracle, samples: &[UElt], pairs: &[(UElt, UElt)]) -> Vec<AxiomCheck> {
    let mut out = Vec::new();
    for x in samples {
        out.extend(check_hopf_single(oracle, x));
    }
    for (x, y) in pairs {
        out.extend(check_hopf_pair(oracle, x, y));
    }
    out
}

pub fn check_hopf_single(oracle: &Oracle, x: &UElt) -> Vec<AxiomCheck> {
    let n = oracle.order();
    let name = x.to_string();
    let dx = oracle.delta(x);
    let xs = Series::constant(x.clone(), n);
    let xt = xs.map(Tensor::from_uelt);
    let eps = Series::constant(UElt::scalar(counit0(x)), n);
    vec![
        AxiomCheck::new("coassociativity", &name, &oracle.delta_left(&dx), &oracle.delta_right(&dx)),
        AxiomCheck::new("counit-left", &name, &dx.map(|t| t.contract_leg(0, counit0)), &xt),
        AxiomCheck::new("counit-right", &name, &dx.map(|t| t.contract_leg(1, counit0)), &xt),
        AxiomCheck::new("antipode-left", &name, &oracle.mu_s_id(&dx), &eps),
        AxiomCheck::new("antipode-right", &name, &oracle.mu_id_s(&dx), &eps),
    ]
}

pub fn check_hopf_pair(oracle: &Oracle, x: &UElt, y: &UElt) -> Vec<AxiomCheck> {
    let n = oracle.order();
    let name = format!("({x}) * ({y})");
    let xy = x * y;
    let dxdy = oracle.delta(x).try_mul(&oracle.delta(y)).expect("arity two");
    let sysx = oracle.antipode(y).try_mul(&oracle.antipode(x)).expect("same kind");
    let eps_l = Series::constant(UElt::scalar(counit0(&xy)), n);
    let eps_r = Series::constant(UElt::scalar(&counit0(x) * &counit0(y)), n);
    vec![
        AxiomCheck::new("delta-multiplicative", &name, &oracle.delta(&xy), &dxdy),
        AxiomCheck::new("counit-multiplicative", &name, &eps_l, &eps_r),
        AxiomCheck::new("antipode-antimultiplicative", &name, &oracle.antipode(&xy), &sysx),
    ]
}

/// Whether `flip∘Δ(x) != Δ(x)` modulo `t^2`.
pub fn is_noncocommutative_at(oracle: &Oracle, x: &UElt) -> bool {
    let d = oracle.delta(x).truncate(1);
    d.map(|t| t.flip()) != d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(case: Case, n: (i64, i64), order: usize) -> TwistContext {
        TwistContext::new(case, Degree(n.0, n.1), None, order).unwrap()
    }

    #[test]
    fn default_x_choices() {
        assert_eq!(default_x(Degree(1, 1)).unwrap(), (int(1), int(0)));
        assert_eq!(default_x(Degree(0, 1)).unwrap(), (int(0), int(1)));
        assert_eq!(default_x(Degree(2, -1)).unwrap(), (int(0), int(-1)));
        assert_eq!(default_x(Degree(2, 2)).unwrap(), (rat(1, 2), int(0)));
        assert_eq!(default_x(Degree(0, -3)).unwrap(), (int(0), rat(-1, 3)));
        assert_eq!(default_x(Degree(3, 5)).unwrap(), (int(2), int(-1)));
        assert!(default_x(Degree(0, 0)).is_err());
    }

    #[test]
    fn context_validation() {
        let bad = TwistContext::new(Case::G, Degree(1, 1), Some((int(1), int(1))), 3);
        assert!(matches!(bad, Err(ContextError::Normalization(_))));
        assert!(matches!(
            TwistContext::new(Case::G, Degree(0, 0), Some((int(1), int(0))), 3),
            Err(ContextError::ZeroDegree("g"))
        ));
        assert!(matches!(
            TwistContext::new(Case::D, Degree(1, 0), Some((int(1), int(0))), 3),
            Err(ContextError::XNotApplicable("d"))
        ));
        assert!(TwistContext::new(Case::D, Degree(0, 0), None, 3).is_ok());
        assert!(TwistContext::new(Case::E, Degree(0, 0), None, 3).is_err());
        for case in Case::ALL {
            let c = ctx(case, (2, -1), 2);
            assert_eq!(c.weight(c.e_gen()), int(1));
            assert_eq!(c.tau_image().tau_image(), c);
        }
    }

    #[test]
    fn context_strings() {
        let c: TwistContext = "case=g n=1,1 x=1,0 order=4".parse().unwrap();
        assert_eq!(c.to_string(), "case=g n=1,1 x=1,0 order=4");
        let d: TwistContext = "case=df n=0,1".parse().unwrap();
        assert_eq!(d.to_string(), "case=df n=0,1 order=3");
        let h: TwistContext = "case=h n=2,2 x=1/4,1/4".parse().unwrap();
        assert_eq!(h.x().unwrap().0, rat(1, 4));
        assert!("case=q n=1,1".parse::<TwistContext>().is_err());
        assert!("case=g".parse::<TwistContext>().is_err());
        assert!("case=g n=1".parse::<TwistContext>().is_err());
        assert!("case=g n=1,1 flavour=3".parse::<TwistContext>().is_err());
    }

    #[test]
    fn twist_low_orders() {
        let c = ctx(Case::G, (1, 1), 1);
        let t = c.t().clone();
        let e = c.e().clone();
        let one = UElt::one();
        let want = Series::from_coeffs(vec![Tensor::unit(2), Tensor::from_legs(&[&-&t, &e])], 1);
        assert_eq!(c.twist(&int(0)), want);
        let inv = Series::from_coeffs(vec![Tensor::unit(2), Tensor::from_legs(&[&t, &e])], 1);
        assert_eq!(c.inverse_twist(&int(0)), inv);
        let shifted = Series::from_coeffs(vec![Tensor::unit(2), Tensor::from_legs(&[&(&t + &one), &e])], 1);
        assert_eq!(c.inverse_twist(&int(1)), shifted);
        let u = Series::from_coeffs(vec![one.clone(), &t * &e], 1);
        assert_eq!(c.u_family(&int(0)), u);
    }

    #[test]
    fn oracle_self_consistency() {
        for case in Case::ALL {
            let c = ctx(case, (1, 1), 3);
            let o = Oracle::new(&c);
            assert_eq!(o.twist_inverse(), &c.inverse_twist(&int(0)));
            assert_eq!(o.u(), &c.u_family(&int(0)));
            assert_eq!(o.u_inv(), &c.u_inv_family(&int(0)));
            assert!(check_cocycle(&c).holds());
            assert!(check_twist_counit(&c).iter().all(AxiomCheck::holds));
        }
    }

    #[test]
    fn known_values() {
        let g = ctx(Case::G, (1, 1), 3);
        let o = Oracle::new(&g);
        let d = UElt::gen(Gen::D);
        assert_eq!(o.delta(&d), Series::constant(delta0(&d), 3));
        assert_eq!(o.antipode(&d), Series::constant(-&d, 3));
        let d1 = UElt::gen(Gen::D1);
        let s = Series::from_coeffs(vec![-&d1, g.t() * g.e()], 3);
        assert_eq!(o.antipode(&d1), s);
        assert_eq!(o.antipode(&UElt::one()), Series::one(&d, 3));

        let e = TwistContext::new(Case::E, Degree(0, 1), Some((int(0), int(1))), 3).unwrap();
        let o = Oracle::new(&e);
        let y = e.e().clone();
        let one = UElt::one();
        let want = Series::from_coeffs(vec![delta0(&y), Tensor::from_legs(&[&-&y, &y])], 3);
        assert_eq!(o.delta(&y), want);
        assert_eq!(o.delta(&one), Series::one(&Tensor::unit(2), 3));
    }

    #[test]
    fn corrupted_cocycle_fails() {
        let c = ctx(Case::E, (1, 1), 3);
        let f = c.twist(&int(0));
        assert_eq!(check_cocycle_of(&corrupt_twist(&f, 1)).mismatch.map(|m| m.order), Some(3));
        assert_eq!(check_cocycle_of(&corrupt_twist(&f, 2)).mismatch.map(|m| m.order), Some(2));
        assert!(check_cocycle_of(&corrupt_twist(&f.truncate(2), 1)).holds());
        let zero = ctx(Case::E, (1, 1), 0);
        assert!(check_cocycle(&zero).holds());
    }

    #[test]
    fn hopf_smoke() {
        let c = ctx(Case::D, (1, 0), 2);
        let o = Oracle::new(&c);
        let samples: Vec<UElt> = [Gen::D1, Gen::e(Degree(0, 1)), Gen::f(Degree(-1, 0)), Gen::h(Degree(1, 1))]
            .into_iter()
            .map(UElt::gen)
            .collect();
        let pairs = vec![(samples[1].clone(), samples[2].clone())];
        let res = check_hopf(&o, &samples, &pairs);
        assert!(res.iter().all(AxiomCheck::holds), "{res:?}");
        assert!(is_noncocommutative_at(&o, &samples[2]));
    }
}
