//! The Lie algebra `W = sl2(C_q) + C d1 + C d2` by structure constants.
//!
//! Basis: `e_m, f_m` for every `m` in `Z^2`, `g_k, h_k` for `k != (0,0)`, the
//! Cartan element `d`, and the degree derivations `d1, d2`. Any `g` or `h` of
//! degree `(0,0)` that a formula produces is the zero vector.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::scalars::{int, Laurent, Rational};
use crate::AlgebraError;

/// A `Z^2` degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Degree(pub i64, pub i64);

impl Degree {
    pub const ZERO: Degree = Degree(0, 0);

    pub fn is_zero(self) -> bool {
        self == Degree::ZERO
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, o: Degree) -> Degree {
        Degree(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree(-self.0, -self.1)
    }
}

impl Mul<Degree> for i64 {
    type Output = Degree;
    fn mul(self, d: Degree) -> Degree {
        Degree(self * d.0, self * d.1)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

/// Generator families, declared in PBW order: `d1 < d2 < d < e < f < g < h`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    D1,
    D2,
    D,
    E,
    F,
    G,
    H,
}

impl Kind {
    pub fn is_graded(self) -> bool {
        matches!(self, Kind::E | Kind::F | Kind::G | Kind::H)
    }

    pub fn letter(self) -> &'static str {
        match self {
            Kind::D1 => "d1",
            Kind::D2 => "d2",
            Kind::D => "d",
            Kind::E => "e",
            Kind::F => "f",
            Kind::G => "g",
            Kind::H => "h",
        }
    }
}

/// A basis generator. The derived order is the PBW order: kind first, then
/// degree lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Gen {
    kind: Kind,
    deg: Degree,
}

impl Gen {
    pub const D: Gen = Gen { kind: Kind::D, deg: Degree::ZERO };
    pub const D1: Gen = Gen { kind: Kind::D1, deg: Degree::ZERO };
    pub const D2: Gen = Gen { kind: Kind::D2, deg: Degree::ZERO };

    /// Validated constructor.
    pub fn new(kind: Kind, deg: Degree) -> Result<Gen, AlgebraError> {
        match kind {
            Kind::G | Kind::H if deg.is_zero() => Err(AlgebraError::UndefinedGenerator(kind.letter())),
            Kind::D | Kind::D1 | Kind::D2 if !deg.is_zero() => Err(AlgebraError::UngradedWithDegree(kind.letter())),
            _ => Ok(Gen { kind, deg }),
        }
    }

    /// `None` exactly when the generator does not exist (`g_0`, `h_0`).
    pub fn try_new(kind: Kind, deg: Degree) -> Option<Gen> {
        Gen::new(kind, deg).ok()
    }

    pub fn e(deg: Degree) -> Gen {
        Gen { kind: Kind::E, deg }
    }

    pub fn f(deg: Degree) -> Gen {
        Gen { kind: Kind::F, deg }
    }

    /// Panics on degree `(0,0)`; use [`Gen::try_new`] when the degree is computed.
    pub fn g(deg: Degree) -> Gen {
        Gen::new(Kind::G, deg).expect("g_0 is not a generator")
    }

    /// Panics on degree `(0,0)`; use [`Gen::try_new`] when the degree is computed.
    pub fn h(deg: Degree) -> Gen {
        Gen::new(Kind::H, deg).expect("h_0 is not a generator")
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn degree(self) -> Degree {
        self.deg
    }

    /// All generators whose degree lies in `[-radius, radius]^2`.
    pub fn window(radius: i64) -> Vec<Gen> {
        let mut out = vec![Gen::D1, Gen::D2, Gen::D];
        for kind in [Kind::E, Kind::F, Kind::G, Kind::H] {
            for a in -radius..=radius {
                for b in -radius..=radius {
                    if let Some(g) = Gen::try_new(kind, Degree(a, b)) {
                        out.push(g);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_graded() {
            write!(f, "{}{}", self.kind.letter(), self.deg)
        } else {
            write!(f, "{}", self.kind.letter())
        }
    }
}

/// A finite linear combination of generators over `Q[q, q^-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct LieElt {
    terms: BTreeMap<Gen, Laurent>,
}

impl LieElt {
    pub fn zero() -> Self {
        LieElt::default()
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(g, Laurent::one())
    }

    pub fn term(g: Gen, c: Laurent) -> Self {
        let mut out = LieElt::zero();
        out.add_term(g, &c);
        out
    }

    /// `c * kind_deg`, or zero if the generator is undefined.
    pub fn maybe(kind: Kind, deg: Degree, c: Laurent) -> Self {
        match Gen::try_new(kind, deg) {
            Some(g) => Self::term(g, c),
            None => LieElt::zero(),
        }
    }

    pub fn add_term(&mut self, g: Gen, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &Laurent)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Laurent) -> LieElt {
        let mut out = LieElt::zero();
        for (g, a) in &self.terms {
            out.add_term(*g, &(a * c));
        }
        out
    }
}

impl Add for &LieElt {
    type Output = LieElt;
    fn add(self, rhs: &LieElt) -> LieElt {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, c);
        }
        out
    }
}

impl Sub for &LieElt {
    type Output = LieElt;
    fn sub(self, rhs: &LieElt) -> LieElt {
        self + &(-rhs)
    }
}

impl Neg for &LieElt {
    type Output = LieElt;
    fn neg(self) -> LieElt {
        self.scale(&Laurent::from_int(-1))
    }
}

impl fmt::Display for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}", g)?;
            } else {
                write!(f, "({})*{}", c, g)?;
            }
        }
        Ok(())
    }
}

/// The eleven `q`-exponents appearing in the bracket table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExponentSlot {
    /// `[g_k, e_m] = q^{k2 m1} e`
    GE,
    /// `[h_k, e_m] = -q^{k1 m2} e`
    HE,
    /// `[h_k, f_m] = q^{k2 m1} f`
    HF,
    /// `[g_k, f_m] = -q^{k1 m2} f`
    GF,
    /// `q^{m2 m1'}` on the `g` part of `[e_m, f_m']`
    EFg,
    /// `q^{m2' m1}` on the `h` part of `[e_m, f_m']`
    EFh,
    /// `q^{m2 m1'}` on `d` in `[e_m, f_-m]`
    EFd,
    /// first exponent of `[g_k, g_k']`
    GG1,
    /// second exponent of `[g_k, g_k']`
    GG2,
    HH1,
    HH2,
}

impl ExponentSlot {
    pub const ALL: [ExponentSlot; 11] = [
        ExponentSlot::GE,
        ExponentSlot::HE,
        ExponentSlot::HF,
        ExponentSlot::GF,
        ExponentSlot::EFg,
        ExponentSlot::EFh,
        ExponentSlot::EFd,
        ExponentSlot::GG1,
        ExponentSlot::GG2,
        ExponentSlot::HH1,
        ExponentSlot::HH2,
    ];
}

/// How a mutated exponent is corrupted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Corruption {
    /// `q^a -> q^-a`
    Negate,
    /// `q^a -> q^(a+1)`
    OffByOne,
}

/// A single corrupted structure constant, used to show the checks are not vacuous.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mutation {
    pub slot: ExponentSlot,
    pub corruption: Corruption,
}

/// A bracket table. [`Structure::STANDARD`] is the algebra; any other value
/// has one corrupted exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Structure {
    pub mutation: Option<Mutation>,
}

impl Structure {
    pub const STANDARD: Structure = Structure { mutation: None };

    pub fn mutated(slot: ExponentSlot, corruption: Corruption) -> Structure {
        Structure { mutation: Some(Mutation { slot, corruption }) }
    }

    fn q(&self, slot: ExponentSlot, exp: i64) -> Laurent {
        match self.mutation {
            Some(m) if m.slot == slot => match m.corruption {
                Corruption::Negate => Laurent::q_pow(-exp),
                Corruption::OffByOne => Laurent::q_pow(exp + 1),
            },
            _ => Laurent::q_pow(exp),
        }
    }

    /// `[a, b]` from the table.
    pub fn bracket(&self, a: Gen, b: Gen) -> LieElt {
        use Kind::*;
        let (m, p) = (a.deg, b.deg);
        match (a.kind, b.kind) {
            (D1, _) => LieElt::term(b, Laurent::from_int(p.0)),
            (D2, _) => LieElt::term(b, Laurent::from_int(p.1)),
            (_, D1) | (_, D2) => -&self.bracket(b, a),
            (D, E) => LieElt::term(b, Laurent::from_int(2)),
            (D, F) => LieElt::term(b, Laurent::from_int(-2)),
            (D, _) => LieElt::zero(),
            (_, D) => -&self.bracket(b, a),
            (E, E) | (F, F) | (G, H) | (H, G) => LieElt::zero(),
            (G, E) => LieElt::term(Gen::e(m + p), self.q(ExponentSlot::GE, m.1 * p.0)),
            (H, E) => LieElt::term(Gen::e(m + p), -self.q(ExponentSlot::HE, m.0 * p.1)),
            (H, F) => LieElt::term(Gen::f(m + p), self.q(ExponentSlot::HF, m.1 * p.0)),
            (G, F) => LieElt::term(Gen::f(m + p), -self.q(ExponentSlot::GF, m.0 * p.1)),
            (E, G) | (E, H) | (F, G) | (F, H) => -&self.bracket(b, a),
            (E, F) => {
                let s = m + p;
                if s.is_zero() {
                    LieElt::term(Gen::D, self.q(ExponentSlot::EFd, m.1 * p.0))
                } else {
                    let mut out = LieElt::term(Gen::g(s), self.q(ExponentSlot::EFg, m.1 * p.0));
                    out.add_term(Gen::h(s), &-self.q(ExponentSlot::EFh, p.1 * m.0));
                    out
                }
            }
            (F, E) => -&self.bracket(b, a),
            (G, G) => self.torus_bracket(Kind::G, m, p, ExponentSlot::GG1, ExponentSlot::GG2),
            (H, H) => self.torus_bracket(Kind::H, m, p, ExponentSlot::HH1, ExponentSlot::HH2),
        }
    }

    fn torus_bracket(&self, kind: Kind, k: Degree, l: Degree, s1: ExponentSlot, s2: ExponentSlot) -> LieElt {
        let sum = k + l;
        if sum.is_zero() {
            return LieElt::zero();
        }
        let c = &self.q(s1, k.1 * l.0) - &self.q(s2, l.1 * k.0);
        LieElt::maybe(kind, sum, c)
    }

    /// Bilinear extension of [`Structure::bracket`].
    pub fn bracket_lin(&self, x: &LieElt, y: &LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let coeff = ca * cb;
                for (g, c) in self.bracket(*a, *b).terms() {
                    out.add_term(*g, &(c * &coeff));
                }
            }
        }
        out
    }
}

/// The Lie bracket of two generators.
pub fn bracket(a: Gen, b: Gen) -> LieElt {
    Structure::STANDARD.bracket(a, b)
}

/// Bilinear bracket of Lie elements.
pub fn bracket_lin(x: &LieElt, y: &LieElt) -> LieElt {
    Structure::STANDARD.bracket_lin(x, y)
}

/// The involution `e <-> f`, `g <-> h`, `d -> -d`, fixing `d1, d2`, on a generator.
/// Returns the sign and the image generator.
pub fn tau_gen(g: Gen) -> (i64, Gen) {
    let kind = match g.kind {
        Kind::E => Kind::F,
        Kind::F => Kind::E,
        Kind::G => Kind::H,
        Kind::H => Kind::G,
        Kind::D => return (-1, Gen::D),
        k => k,
    };
    (1, Gen { kind, deg: g.deg })
}

/// The involution extended linearly.
pub fn tau(x: &LieElt) -> LieElt {
    let mut out = LieElt::zero();
    for (g, c) in x.terms() {
        let (sign, img) = tau_gen(*g);
        out.add_term(img, &c.scale(&int(sign)));
    }
    out
}

/// Eigenvalue of `ad(d1)` (`which = 0`) or `ad(d2)` (`which = 1`) on a generator.
pub fn degree_weight(g: Gen, which: usize) -> Rational {
    let d = g.degree();
    if which == 0 {
        int(d.0)
    } else {
        int(d.1)
    }
}

/// `sum c_i * x_i` for scalar `c_i` as a Lie element; zero rationals skipped.
pub fn combination(parts: &[(Rational, Gen)]) -> LieElt {
    let mut out = LieElt::zero();
    for (c, g) in parts {
        if !c.is_zero() {
            out.add_term(*g, &Laurent::constant(c.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: i64, b: i64) -> Degree {
        Degree(a, b)
    }

    #[test]
    fn table_examples() {
        assert_eq!(bracket(Gen::D, Gen::e(d(2, 3))), LieElt::term(Gen::e(d(2, 3)), 2.into()));
        assert!(bracket(Gen::e(d(1, 0)), Gen::e(d(5, 7))).is_zero());
        let expected = LieElt::term(Gen::g(d(1, 1)), &Laurent::one() - &Laurent::q_pow(1));
        assert_eq!(bracket(Gen::g(d(1, 0)), Gen::g(d(0, 1))), expected);
        assert_eq!(bracket(Gen::e(d(1, 2)), Gen::f(d(-1, -2))), LieElt::term(Gen::D, Laurent::q_pow(-2)));
        assert_eq!(bracket(Gen::D1, Gen::e(d(2, 3))), LieElt::term(Gen::e(d(2, 3)), 2.into()));
    }

    #[test]
    fn linear_bracket() {
        let x = &LieElt::gen(Gen::e(d(0, 0))) + &LieElt::gen(Gen::f(d(0, 0)));
        let got = bracket_lin(&x, &LieElt::gen(Gen::D));
        let mut want = LieElt::term(Gen::e(d(0, 0)), (-2).into());
        want.add_term(Gen::f(d(0, 0)), &2.into());
        assert_eq!(got, want);
        assert!(bracket_lin(&x, &x).is_zero());
        assert!(bracket_lin(&LieElt::zero(), &x).is_zero());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&LieElt::gen(Gen::e(d(1, 2)))), LieElt::gen(Gen::f(d(1, 2))));
        assert_eq!(tau(&LieElt::gen(Gen::D)), LieElt::term(Gen::D, (-1).into()));
        assert_eq!(tau(&LieElt::gen(Gen::D2)), LieElt::gen(Gen::D2));
        let x = &LieElt::term(Gen::g(d(1, -1)), Laurent::q_pow(3)) + &LieElt::gen(Gen::D);
        assert_eq!(tau(&tau(&x)), x);
    }

    #[test]
    fn convention_rejects_zero_degree_cartan_loops() {
        assert!(Gen::new(Kind::G, Degree::ZERO).is_err());
        assert!(Gen::new(Kind::H, Degree::ZERO).is_err());
        assert!(Gen::new(Kind::D, d(1, 0)).is_err());
        assert!(LieElt::maybe(Kind::G, Degree::ZERO, Laurent::one()).is_zero());
        // [g_k, g_-k] vanishes rather than producing g_0
        assert!(bracket(Gen::g(d(1, 2)), Gen::g(d(-1, -2))).is_zero());
    }

    #[test]
    fn pbw_order() {
        let mut v = vec![Gen::h(d(0, 1)), Gen::e(d(1, 0)), Gen::D, Gen::D2, Gen::e(d(0, 5)), Gen::D1];
        v.sort();
        assert_eq!(v, vec![Gen::D1, Gen::D2, Gen::D, Gen::e(d(0, 5)), Gen::e(d(1, 0)), Gen::h(d(0, 1))]);
    }

    #[test]
    fn window_size() {
        // 3 ungraded + 25 e + 25 f + 24 g + 24 h
        assert_eq!(Gen::window(2).len(), 101);
    }

    #[test]
    fn grading_and_antisymmetry() {
        let w = Gen::window(1);
        for &a in &w {
            for &b in &w {
                let ab = bracket(a, b);
                for (g, _) in ab.terms() {
                    assert_eq!(g.degree(), a.degree() + b.degree(), "[{a},{b}]");
                }
                assert_eq!(ab, -&bracket(b, a));
            }
        }
    }
}
