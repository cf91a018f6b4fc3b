//! Exchange identities: how generators move past factorials of `T`, powers of
//! `E`, and the series `I_c` and `J_c`, in the `E = g_n`, `E = e_n` and
//! `T = d/2` contexts.
//!
//! Each identity is encoded as printed. Where the printed form disagrees with
//! the direct product, a corrected reading is supplied and must hold.

use std::sync::Arc;

use num_traits::Zero;

use crate::closedform::{rho, s_coeff};
use crate::liealg::{Degree, Gen, Kind};
use crate::scalars::{factorial, gen_binomial, int, render_rational, Laurent, Rational};
use crate::series::Series;
use crate::twist::{Case, TwistContext};
use crate::uea::{falling, rising, Tensor, UElt};

use super::{judge, Claim, Grid, Item, Outcome};

fn q(k: i64) -> Laurent {
    Laurent::q_pow(k)
}

fn y_at(kind: Kind, k: Degree) -> UElt {
    Gen::try_new(kind, k).map(UElt::gen).unwrap_or_default()
}

fn binom(j: usize, i: usize) -> Rational {
    gen_binomial(&int(j as i64), i)
}

/// One context plus the small constructors every identity needs.
struct Env {
    ctx: TwistContext,
    n: Degree,
    order: usize,
}

impl Env {
    fn new(case: Case, n: Degree, order: usize) -> Arc<Env> {
        let ctx = TwistContext::new(case, n, None, order).expect("grid contexts are valid");
        Arc::new(Env { ctx, n, order })
    }

    fn t(&self) -> &UElt {
        self.ctx.t()
    }

    fn e(&self) -> &UElt {
        self.ctx.e()
    }

    fn epow(&self, j: i64) -> UElt {
        if j < 0 {
            UElt::zero()
        } else {
            self.e().pow(j as usize)
        }
    }

    /// `T_c^{[i]}`.
    fn tf(&self, c: &Rational, i: usize) -> UElt {
        falling(self.t(), c, i)
    }

    /// `T_c^{<i>}`.
    fn tr(&self, c: &Rational, i: usize) -> UElt {
        rising(self.t(), c, i)
    }

    /// `T_c = T + c`.
    fn tc(&self, c: &Rational) -> UElt {
        self.tr(c, 1)
    }

    /// `r = x1 m1 + x2 m2` as printed; zero in the `T = d/2` context.
    fn r(&self, m: Degree) -> Rational {
        match self.ctx.x() {
            Some((x1, x2)) => x1 * int(m.0) + x2 * int(m.1),
            None => Rational::zero(),
        }
    }

    fn i_c(&self, c: &Rational) -> Series<Tensor> {
        self.ctx.inverse_twist(c)
    }

    fn j_c(&self, c: &Rational) -> Series<UElt> {
        self.ctx.u_inv_family(c)
    }

    fn cu(&self, x: UElt) -> Series<UElt> {
        Series::constant(x, self.order)
    }

    /// `c · x · t^k`.
    fn mu(&self, c: &Laurent, x: &UElt, k: usize) -> Series<UElt> {
        Series::monomial(x.scale(c), k, self.order)
    }

    /// `c · (a⊗b) · t^k`.
    fn mt(&self, c: &Laurent, a: &UElt, b: &UElt, k: usize) -> Series<Tensor> {
        Series::monomial(Tensor::from_legs(&[a, b]).scale(c), k, self.order)
    }

    fn left(&self, x: &UElt) -> Series<Tensor> {
        self.mt(&Laurent::one(), x, &UElt::one(), 0)
    }

    fn right(&self, x: &UElt) -> Series<Tensor> {
        self.mt(&Laurent::one(), &UElt::one(), x, 0)
    }

    /// Generators of every kind at the sampled degrees, including `d`, `d1`, `d2`.
    fn all_gens(&self, grid: &Grid) -> Vec<Gen> {
        let mut out = vec![Gen::D, Gen::D1, Gen::D2];
        for m in grid.degrees(self.n) {
            for kind in [Kind::E, Kind::F, Kind::G, Kind::H] {
                if let Some(g) = Gen::try_new(kind, m) {
                    out.push(g);
                }
            }
        }
        out
    }

    fn gens_of(&self, grid: &Grid, kind: Kind) -> Vec<Gen> {
        grid.degrees(self.n).into_iter().filter_map(|m| Gen::try_new(kind, m)).collect()
    }

    fn label(&self) -> String {
        format!("n={}", self.n)
    }
}

fn mul_s(a: &Series<UElt>, b: &Series<UElt>) -> Series<UElt> {
    a.try_mul(b).expect("same kind")
}

fn mul_t(a: &Series<Tensor>, b: &Series<Tensor>) -> Series<Tensor> {
    a.try_mul(b).expect("arity two")
}

fn add_s(a: &Series<UElt>, b: &Series<UElt>) -> Series<UElt> {
    a.try_add(b).expect("same kind")
}

fn add_t(a: &Series<Tensor>, b: &Series<Tensor>) -> Series<Tensor> {
    a.try_add(b).expect("arity two")
}

fn sum_s(env: &Env, parts: Vec<Series<UElt>>) -> Series<UElt> {
    parts.iter().fold(Series::zero(&UElt::zero(), env.order), |acc, p| add_s(&acc, p))
}

fn sum_t(env: &Env, parts: Vec<Series<Tensor>>) -> Series<Tensor> {
    parts.iter().fold(Series::zero(&Tensor::zero(2), env.order), |acc, p| add_t(&acc, p))
}

/// Items for every `(generator, c, i)` of a factorial-exchange identity
/// `l T_c^{·i} = T_{c-w}^{·i} l`, with the printed shift `w`.
fn factorial_exchange(
    out: &mut Vec<Item>,
    env: &Arc<Env>,
    grid: &Grid,
    gens: &[Gen],
    shift: impl Fn(&Env, Gen) -> Rational,
    names: (&str, &str),
) {
    for &g in gens {
        let w = shift(env, g);
        for c in &grid.cs {
            for i in 0..=grid.max_power {
                for (label, is_falling) in [(names.0, true), (names.1, false)] {
                    let (env, c, w) = (env.clone(), c.clone(), w.clone());
                    let name = format!("{label}/{} {g} c={} i={i}", env.label(), render_rational(&c));
                    out.push(Item::new(name, move || {
                        let l = UElt::gen(g);
                        let pick = |a: &Rational| if is_falling { env.tf(a, i) } else { env.tr(a, i) };
                        let lhs = &l * &pick(&c);
                        let rhs = &pick(&(&c - &w)) * &l;
                        judge(Claim::Elt(lhs, rhs), None)
                    }));
                }
            }
        }
    }
}

/// `f/e/g_m E^j = Σ_i C(j,i) ρ_i E^{j-i} y_{m+in}` for `E = g_n`.
pub(super) fn exchange_g(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::G, n, grid.order);
        let gens = env.all_gens(grid);
        factorial_exchange(&mut out, &env, grid, &gens, |e, g| e.r(g.degree()), ("l-falling", "l-rising"));
        factorial_exchange(&mut out, &env, grid, &[env.ctx.e_gen()], |_, _| int(1), ("e-falling", "e-rising"));
        for (kind, label) in [(Kind::F, "f-power"), (Kind::E, "e-power"), (Kind::G, "g-power")] {
            for g in env.gens_of(grid, kind) {
                for j in 0..=grid.max_power {
                    let env = env.clone();
                    out.push(Item::new(format!("{label}/{} {g} j={j}", env.label()), move || {
                        let m = g.degree();
                        let lhs = &UElt::gen(g) * &env.epow(j as i64);
                        let mut rhs = UElt::zero();
                        for i in 0..=j {
                            let c = rho(i, m, n, kind).scale(&binom(j, i));
                            let y = y_at(kind, m + (i as i64) * n);
                            rhs = &rhs + &(&env.epow((j - i) as i64) * &y).scale(&c);
                        }
                        judge(Claim::Elt(lhs, rhs), None)
                    }));
                }
            }
        }
        for j in 0..=grid.max_power {
            let env2 = env.clone();
            out.push(Item::new(format!("d-power/{} j={j}", env.label()), move || {
                let d = UElt::gen(Gen::D);
                let ej = env2.epow(j as i64);
                judge(Claim::Elt(&d * &ej, &ej * &d), None)
            }));
            for g in env.gens_of(grid, Kind::H) {
                let env = env.clone();
                out.push(Item::new(format!("h-power/{} {g} j={j}", env.label()), move || {
                    let h = UElt::gen(g);
                    let ej = env.epow(j as i64);
                    judge(Claim::Elt(&h * &ej, &ej * &h), None)
                }));
            }
            power_di(&mut out, &env, j);
        }
    }
    out
}

/// `d_i E^j = E^j d_i + j n_i E^j`, shared by the `E = g_n` and `E = e_n` contexts.
fn power_di(out: &mut Vec<Item>, env: &Arc<Env>, j: usize) {
    for (which, gen) in [(0usize, Gen::D1), (1, Gen::D2)] {
        let env = env.clone();
        out.push(Item::new(format!("di-power/{} {gen} j={j}", env.label()), move || {
            let ni = if which == 0 { env.n.0 } else { env.n.1 };
            let di = UElt::gen(gen);
            let ej = env.epow(j as i64);
            let rhs = &(&ej * &di) + &ej.scale(&Laurent::from_int(ni * j as i64));
            judge(Claim::Elt(&di * &ej, rhs), None)
        }));
    }
}

/// `(l⊗1) I_c = I_{c-w}(l⊗1)` with the printed shift `w`.
fn left_exchange(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid, shift: fn(&Env, Gen) -> Rational) {
    for g in env.all_gens(grid) {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            out.push(Item::new(format!("l-left/{} {g} c={}", env.label(), render_rational(&c)), move || {
                let l = env.left(&UElt::gen(g));
                let w = shift(&env, g);
                let lhs = mul_t(&l, &env.i_c(&c));
                let rhs = mul_t(&env.i_c(&(&c - &w)), &l);
                judge(Claim::Tensor(lhs, rhs), None)
            }));
        }
    }
}

/// `(1⊗d_i) I_c = n_i I_{c+1}(T_c⊗E t) + I_c(1⊗d_i)`.
fn right_di(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid) {
    for (which, gen) in [(0usize, Gen::D1), (1, Gen::D2)] {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            out.push(Item::new(format!("di-right/{} {gen} c={}", env.label(), render_rational(&c)), move || {
                let ni = Laurent::from_int(if which == 0 { env.n.0 } else { env.n.1 });
                let di = env.right(&UElt::gen(gen));
                let lhs = mul_t(&di, &env.i_c(&c));
                let first = mul_t(&env.i_c(&(&c + &int(1))), &env.mt(&ni, &env.tc(&c), env.e(), 1));
                let rhs = add_t(&first, &mul_t(&env.i_c(&c), &di));
                judge(Claim::Tensor(lhs, rhs), None)
            }));
        }
    }
}

/// `(1⊗x) I_c = I_c (1⊗x)` for a fixed element.
fn right_commutes(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid, label: &str, gens: Vec<Gen>) {
    for g in gens {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                let x = env.right(&UElt::gen(g));
                judge(Claim::Tensor(mul_t(&x, &env.i_c(&c)), mul_t(&env.i_c(&c), &x)), None)
            }));
        }
    }
}

fn printed_shift_x(env: &Env, g: Gen) -> Rational {
    env.r(g.degree())
}

pub(super) fn twist_exchange_g(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::G, n, grid.order);
        left_exchange(&mut out, &env, grid, printed_shift_x);
        right_di(&mut out, &env, grid);
        right_commutes(&mut out, &env, grid, "h-right", env.gens_of(grid, Kind::H));
        right_commutes(&mut out, &env, grid, "d-right", vec![Gen::D]);
        for (kind, label) in [(Kind::F, "f-right"), (Kind::E, "e-right"), (Kind::G, "g-right")] {
            for g in env.gens_of(grid, kind) {
                for c in &grid.cs {
                    let (env, c) = (env.clone(), c.clone());
                    out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                        let m = g.degree();
                        let lhs = mul_t(&env.right(&UElt::gen(g)), &env.i_c(&c));
                        let mut parts = Vec::new();
                        for i in 0..=env.order {
                            let coeff = rho(i, m, n, kind).scale(&(int(1) / factorial(i)));
                            let y = y_at(kind, m + (i as i64) * n);
                            let piece = env.mt(&coeff, &env.tr(&c, i), &y, i);
                            parts.push(mul_t(&env.i_c(&(&c + &int(i as i64))), &piece));
                        }
                        judge(Claim::Tensor(lhs, sum_t(&env, parts)), None)
                    }));
                }
            }
        }
    }
    out
}

/// `d_i J_c = J_c d_i - n_i J_c T_{-c} E t`.
fn j_di(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid) {
    for (which, gen) in [(0usize, Gen::D1), (1, Gen::D2)] {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            out.push(Item::new(format!("di-j/{} {gen} c={}", env.label(), render_rational(&c)), move || {
                let ni = Laurent::from_int(if which == 0 { env.n.0 } else { env.n.1 });
                let di = UElt::gen(gen);
                let jc = env.j_c(&c);
                let lhs = mul_s(&env.cu(di.clone()), &jc);
                let te = &env.tc(&-&c) * env.e();
                let rhs = add_s(&mul_s(&jc, &env.cu(di)), &mul_s(&jc, &env.mu(&-&ni, &te, 1)));
                judge(Claim::Series(lhs, rhs), None)
            }));
        }
    }
}

/// `x J_c = J_{c+w} x` with the printed shift `w`.
fn j_commutes(
    out: &mut Vec<Item>,
    env: &Arc<Env>,
    grid: &Grid,
    label: &str,
    gens: Vec<Gen>,
    shift: fn(&Env, Gen) -> Rational,
) {
    for g in gens {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                let x = env.cu(UElt::gen(g));
                let w = shift(&env, g);
                let lhs = mul_s(&x, &env.j_c(&c));
                let rhs = mul_s(&env.j_c(&(&c + &w)), &x);
                judge(Claim::Series(lhs, rhs), None)
            }));
        }
    }
}

fn no_shift(_: &Env, _: Gen) -> Rational {
    Rational::zero()
}

pub(super) fn antipode_exchange_g(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::G, n, grid.order);
        j_commutes(&mut out, &env, grid, "h-j", env.gens_of(grid, Kind::H), printed_shift_x);
        j_commutes(&mut out, &env, grid, "d-j", vec![Gen::D], no_shift);
        j_di(&mut out, &env, grid);
        for (kind, label) in [(Kind::F, "f-j"), (Kind::E, "e-j"), (Kind::G, "g-j")] {
            for g in env.gens_of(grid, kind) {
                for c in &grid.cs {
                    let (env, c) = (env.clone(), c.clone());
                    out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                        let m = g.degree();
                        let lhs = mul_s(&env.cu(UElt::gen(g)), &env.j_c(&c));
                        let one_minus_c = &int(1) - &c;
                        let mut parts = Vec::new();
                        for j in 0..=env.order {
                            let sign = int(if j % 2 == 0 { 1 } else { -1 });
                            let coeff = rho(j, m, n, kind).scale(&(sign / factorial(j)));
                            let body = &y_at(kind, m + (j as i64) * n) * &env.tr(&one_minus_c, j);
                            parts.push(env.mu(&coeff, &body, j));
                        }
                        let rhs = mul_s(&env.j_c(&(&c + &env.r(m))), &sum_s(&env, parts));
                        judge(Claim::Series(lhs, rhs), None)
                    }));
                }
            }
        }
    }
    out
}

/// `f_m E^j` in the `E = e_n` context, both branches.
fn f_power_e(env: &Env, g: Gen, j: usize) -> Outcome {
    let (m, n) = (g.degree(), env.n);
    let ji = j as i64;
    let jr = Laurent::from_int(ji);
    let c2 = Laurent::constant(binom(j, 2));
    let lhs = &UElt::gen(g) * &env.epow(ji);
    let rhs = if (m + n).is_zero() {
        let mut r = &env.epow(ji) * &UElt::gen(g);
        r = &r - &(&env.epow(ji - 1) * &UElt::gen(Gen::D)).scale(&(&jr * &q(-n.0 * n.1)));
        &r - &env.epow(ji - 1).scale(&(&c2 * &q(-n.1 * n.0)).scale(&int(2)))
    } else {
        let s = s_coeff(m, n);
        let mut r = (&env.epow(ji - 1) * &y_at(Kind::H, m + n)).scale(&(&jr * &q(m.1 * n.0)));
        r = &r - &(&env.epow(ji - 1) * &y_at(Kind::G, m + n)).scale(&(&jr * &q(m.0 * n.1)));
        r = &r + &(&env.epow(ji) * &UElt::gen(g));
        &r - &(&env.epow(ji - 2) * &y_at(Kind::E, m + 2 * n)).scale(&(&c2 * &s).scale(&int(2)))
    };
    judge(Claim::Elt(lhs, rhs), None)
}

pub(super) fn exchange_e(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::E, n, grid.order);
        for j in 0..=grid.max_power {
            let ji = j as i64;
            for g in env.gens_of(grid, Kind::E) {
                let env = env.clone();
                out.push(Item::new(format!("e-power/{} {g} j={j}", env.label()), move || {
                    let x = UElt::gen(g);
                    let ej = env.epow(ji);
                    judge(Claim::Elt(&x * &ej, &ej * &x), None)
                }));
            }
            let env2 = env.clone();
            out.push(Item::new(format!("d-power/{} j={j}", env.label()), move || {
                let d = UElt::gen(Gen::D);
                let ej = env2.epow(ji);
                let rhs = &(&ej * &d) + &ej.scale(&Laurent::from_int(2 * ji));
                judge(Claim::Elt(&d * &ej, rhs), None)
            }));
            power_di(&mut out, &env, j);
            for g in env.gens_of(grid, Kind::F) {
                let env = env.clone();
                let label = if (g.degree() + n).is_zero() { "f-power-opposite" } else { "f-power" };
                out.push(Item::new(format!("{label}/{} {g} j={j}", env.label()), move || f_power_e(&env, g, j)));
            }
            for (kind, label) in [(Kind::G, "g-power"), (Kind::H, "h-power")] {
                for g in env.gens_of(grid, kind) {
                    let env = env.clone();
                    out.push(Item::new(format!("{label}/{} {g} j={j}", env.label()), move || {
                        let m = g.degree();
                        let x = UElt::gen(g);
                        let ej = env.epow(ji);
                        let coeff = if kind == Kind::G { q(m.1 * n.0) } else { -q(m.0 * n.1) };
                        let tail = (&env.epow(ji - 1) * &y_at(Kind::E, m + n)).scale(&coeff.scale(&int(ji)));
                        judge(Claim::Elt(&x * &ej, &(&ej * &x) + &tail), None)
                    }));
                }
            }
        }
    }
    out
}

/// The `(1⊗y) I_c` identities that hold whenever `E = e_n`: both the `x·d`
/// and the `d/2` choice of `T`.
fn right_exchange_e(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid) {
    let n = env.n;
    right_di(out, env, grid);
    right_commutes(out, env, grid, "e-right", env.gens_of(grid, Kind::E));
    for g in env.gens_of(grid, Kind::F) {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            let opposite = (g.degree() + n).is_zero();
            let label = if opposite { "f-right-opposite" } else { "f-right" };
            out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                let m = g.degree();
                let lhs = mul_t(&env.right(&UElt::gen(g)), &env.i_c(&c));
                let c1 = &c + &int(1);
                let c2 = &c + &int(2);
                let tc = env.tc(&c);
                let tc2 = env.tr(&c, 2);
                let rhs = if opposite {
                    sum_t(
                        &env,
                        vec![
                            mul_t(&env.i_c(&c), &env.right(&UElt::gen(g))),
                            mul_t(&env.i_c(&c1), &env.mt(&-q(-n.1 * n.0), &tc, &UElt::gen(Gen::D), 1)),
                            mul_t(&env.i_c(&c2), &env.mt(&-q(-n.0 * n.1), &tc2, env.e(), 2)),
                        ],
                    )
                } else {
                    sum_t(
                        &env,
                        vec![
                            mul_t(&env.i_c(&c1), &env.mt(&q(m.1 * n.0), &tc, &y_at(Kind::H, m + n), 1)),
                            mul_t(&env.i_c(&c1), &env.mt(&-q(m.0 * n.1), &tc, &y_at(Kind::G, m + n), 1)),
                            mul_t(&env.i_c(&c), &env.right(&UElt::gen(g))),
                            mul_t(&env.i_c(&c2), &env.mt(&-s_coeff(m, n), &tc2, &y_at(Kind::E, m + 2 * n), 2)),
                        ],
                    )
                };
                judge(Claim::Tensor(lhs, rhs), None)
            }));
        }
    }
    for (kind, label) in [(Kind::G, "g-right"), (Kind::H, "h-right")] {
        for g in env.gens_of(grid, kind) {
            for c in &grid.cs {
                let (env, c) = (env.clone(), c.clone());
                out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                    let m = g.degree();
                    let x = env.right(&UElt::gen(g));
                    let coeff = if kind == Kind::G { q(m.1 * n.0) } else { -q(m.0 * n.1) };
                    let lhs = mul_t(&x, &env.i_c(&c));
                    let tail = mul_t(&env.i_c(&(&c + &int(1))), &env.mt(&coeff, &env.tc(&c), &y_at(Kind::E, m + n), 1));
                    judge(Claim::Tensor(lhs, add_t(&mul_t(&env.i_c(&c), &x), &tail)), None)
                }));
            }
        }
    }
    for c in &grid.cs {
        let (env, c) = (env.clone(), c.clone());
        out.push(Item::new(format!("d-right/{} c={}", env.label(), render_rational(&c)), move || {
            let x = env.right(&UElt::gen(Gen::D));
            let lhs = mul_t(&x, &env.i_c(&c));
            let tail = mul_t(&env.i_c(&(&c + &int(1))), &env.mt(&Laurent::from_int(2), &env.tc(&c), env.e(), 1));
            judge(Claim::Tensor(lhs, add_t(&mul_t(&env.i_c(&c), &x), &tail)), None)
        }));
    }
}

pub(super) fn twist_exchange_e(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::E, n, grid.order);
        left_exchange(&mut out, &env, grid, printed_shift_x);
        right_exchange_e(&mut out, &env, grid);
    }
    out
}

/// Which printed variant of a `J_c` exchange to build.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Reading {
    Printed,
    Corrected,
}

/// `f_m J_c` for `E = e_n`; `shift` is the printed `J` index offset.
fn f_j(env: &Env, g: Gen, c: &Rational, reading: Reading) -> Claim {
    let (m, n) = (g.degree(), env.n);
    let t1c = &int(1) - c;
    let lhs = mul_s(&env.cu(UElt::gen(g)), &env.j_c(c));
    let d_case = env.ctx.case() == Case::D;
    let rhs = if (m + n).is_zero() {
        let jc = env.j_c(&(c - &int(1)));
        let qc = match (d_case, reading) {
            (false, Reading::Printed) => q(n.0 * n.1),
            _ => q(-n.0 * n.1),
        };
        let d_t = &UElt::gen(Gen::D) * &env.tc(&t1c);
        let e_t = env.e() * &env.tr(&t1c, 2);
        mul_s(&jc, &sum_s(env, vec![env.cu(UElt::gen(g)), env.mu(&qc, &d_t, 1), env.mu(&-&qc, &e_t, 2)]))
    } else {
        let shift = if d_case { int(-1) } else { env.r(m) };
        let jc = env.j_c(&(c + &shift));
        // printed as T_{-c-r} g in one context and T_{1-c} g in the other
        let g_first = if d_case { &t1c + &Rational::zero() } else { -c - &env.r(m) };
        let g_t = &env.tc(&g_first) * &y_at(Kind::G, m + n);
        let h_t = &y_at(Kind::H, m + n) * &env.tc(&t1c);
        let e_t = &y_at(Kind::E, m + 2 * n) * &env.tr(&t1c, 2);
        mul_s(
            &jc,
            &sum_s(
                env,
                vec![
                    env.mu(&q(m.0 * n.1), &g_t, 1),
                    env.mu(&-q(m.1 * n.0), &h_t, 1),
                    env.cu(UElt::gen(g)),
                    env.mu(&-s_coeff(m, n), &e_t, 2),
                ],
            ),
        )
    };
    Claim::Series(lhs, rhs)
}

fn antipode_exchange_e_like(out: &mut Vec<Item>, env: &Arc<Env>, grid: &Grid) {
    let n = env.n;
    let d_case = env.ctx.case() == Case::D;
    let e_shift: fn(&Env, Gen) -> Rational = if d_case { |_, _| int(1) } else { printed_shift_x };
    j_commutes(out, env, grid, "e-j", env.gens_of(grid, Kind::E), e_shift);
    j_di(out, env, grid);
    for g in env.gens_of(grid, Kind::F) {
        for c in &grid.cs {
            let (env, c) = (env.clone(), c.clone());
            let label = if (g.degree() + n).is_zero() { "f-j-opposite" } else { "f-j" };
            out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                let printed = f_j(&env, g, &c, Reading::Printed);
                let corrected = (printed.mismatch().is_some()).then(|| f_j(&env, g, &c, Reading::Corrected));
                judge(printed, corrected)
            }));
        }
    }
    for (kind, label) in [(Kind::G, "g-j"), (Kind::H, "h-j")] {
        for g in env.gens_of(grid, kind) {
            for c in &grid.cs {
                let (env, c) = (env.clone(), c.clone());
                out.push(Item::new(format!("{label}/{} {g} c={}", env.label(), render_rational(&c)), move || {
                    let m = g.degree();
                    let x = UElt::gen(g);
                    let shift = if d_case { Rational::zero() } else { env.r(m) };
                    let jc = env.j_c(&(&c + &shift));
                    let coeff = if kind == Kind::G { -q(n.0 * m.1) } else { q(n.1 * m.0) };
                    let body = &y_at(Kind::E, m + n) * &env.tc(&(&int(1) - &c));
                    let lhs = mul_s(&env.cu(x.clone()), &env.j_c(&c));
                    let rhs = mul_s(&jc, &add_s(&env.cu(x), &env.mu(&coeff, &body, 1)));
                    judge(Claim::Series(lhs, rhs), None)
                }));
            }
        }
    }
    for c in &grid.cs {
        let (env, c) = (env.clone(), c.clone());
        out.push(Item::new(format!("d-j/{} c={}", env.label(), render_rational(&c)), move || {
            let d = UElt::gen(Gen::D);
            let jc = env.j_c(&c);
            let lhs = mul_s(&env.cu(d.clone()), &jc);
            let body = env.e() * &env.tc(&(&int(1) - &c));
            let rhs = mul_s(&jc, &add_s(&env.cu(d), &env.mu(&Laurent::from_int(-2), &body, 1)));
            judge(Claim::Series(lhs, rhs), None)
        }));
    }
}

pub(super) fn antipode_exchange_e(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::E, n, grid.order);
        antipode_exchange_e_like(&mut out, &env, grid);
    }
    out
}

/// The printed shift for `T = d/2`: `e` moves the index by one, `f` by minus one.
fn printed_shift_half_d(_: &Env, g: Gen) -> Rational {
    match g.kind() {
        Kind::E => int(1),
        Kind::F => int(-1),
        _ => Rational::zero(),
    }
}

pub(super) fn exchange_d(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::D, n, grid.order);
        let gens = env.all_gens(grid);
        factorial_exchange(&mut out, &env, grid, &gens, printed_shift_half_d, ("l-falling", "l-rising"));
    }
    out
}

pub(super) fn twist_exchange_d(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::D, n, grid.order);
        left_exchange(&mut out, &env, grid, printed_shift_half_d);
        right_exchange_e(&mut out, &env, grid);
    }
    out
}

pub(super) fn antipode_exchange_d(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let env = Env::new(Case::D, n, grid.order);
        antipode_exchange_e_like(&mut out, &env, grid);
    }
    out
}
