//! Structural suites: the bracket table, factorial identities, the twist
//! families, the cocycle condition and the Hopf axioms of the oracle.

use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::liealg::{Corruption, ExponentSlot, Gen, Kind, LieElt, Structure};
use crate::scalars::{factorial, gen_binomial, int, rat, render_rational, Laurent, Rational};
use crate::series::{one_minus_et_pow, Series};
use crate::twist::{
    check_cocycle, check_hopf_pair, check_hopf_single, check_twist_counit, is_noncocommutative_at, AxiomCheck, Case,
    Oracle, TwistContext,
};
use crate::uea::{antipode0, delta0, falling, rising, Tensor, UElt};

use super::{judge, Claim, Grid, Item, Outcome};

fn axiom_outcome(check: &AxiomCheck) -> Outcome {
    Outcome::expect_none(check.mismatch.as_ref().map(|m| format!("t^{}: lhs - rhs = {}", m.order, m.difference)))
}

/// The first Jacobi violation with `a` as the smallest entry of the triple.
fn jacobi_violation(s: &Structure, gens: &[Gen], i: usize) -> Option<String> {
    let a = LieElt::gen(gens[i]);
    for j in i..gens.len() {
        let b = LieElt::gen(gens[j]);
        let ab = s.bracket_lin(&a, &b);
        for &c_gen in &gens[j..] {
            let c = LieElt::gen(c_gen);
            let total = &(&s.bracket_lin(&a, &s.bracket_lin(&b, &c)) + &s.bracket_lin(&b, &s.bracket_lin(&c, &a)))
                + &s.bracket_lin(&c, &ab);
            if !total.is_zero() {
                return Some(format!("[{}, [{}, {}]] + cyclic = {total}", gens[i], gens[j], c_gen));
            }
        }
    }
    None
}

pub(super) fn lie_axioms(grid: &Grid) -> Vec<Item> {
    let gens = Arc::new(Gen::window(grid.radius));
    let mut out = Vec::new();
    for i in 0..gens.len() {
        let a = gens[i];
        let g = gens.clone();
        out.push(Item::new(format!("antisymmetry/{a}"), move || {
            let s = Structure::STANDARD;
            let bad = g.iter().find(|&&b| s.bracket(a, b) != -&s.bracket(b, a));
            Outcome::expect_none(bad.map(|b| format!("[{a}, {b}] + [{b}, {a}] != 0")))
        }));
        let g = gens.clone();
        out.push(Item::new(format!("jacobi/{a}"), move || {
            Outcome::expect_none(jacobi_violation(&Structure::STANDARD, &g, i))
        }));
    }
    out
}

pub(super) fn mutation(grid: &Grid) -> Vec<Item> {
    let gens = Arc::new(Gen::window(grid.radius));
    let mut out = Vec::new();
    for slot in ExponentSlot::ALL {
        for corruption in [Corruption::Negate, Corruption::OffByOne] {
            let g = gens.clone();
            out.push(Item::new(format!("mutation/{slot:?} {corruption:?}"), move || {
                let s = Structure::mutated(slot, corruption);
                if (0..g.len()).any(|i| jacobi_violation(&s, &g, i).is_some()) {
                    Outcome::pass()
                } else {
                    Outcome::fail("the corrupted table satisfies the Jacobi identity on the window")
                }
            }));
        }
    }
    out
}

/// `C(top, m)` with the printed convention: zero whenever `top < m`.
fn printed_binomial(top: &Rational, m: usize) -> Rational {
    if *top < int(m as i64) {
        Rational::zero()
    } else {
        gen_binomial(top, m)
    }
}

fn sign(s: usize) -> Rational {
    int(if s.is_multiple_of(2) { 1 } else { -1 })
}

pub(super) fn factorials(grid: &Grid) -> Vec<Item> {
    let shifts = [int(0), int(1), int(-1), rat(1, 2), rat(-1, 2), int(2)];
    let bases = [("d1", UElt::gen(Gen::D1)), ("d/2", UElt::gen(Gen::D).scale_rational(&rat(1, 2)))];
    let k = grid.max_factorial;
    let mut out = Vec::new();
    for (tname, t) in bases {
        let t = Arc::new(t);
        for a in &shifts {
            let label = |id: &str, extra: String| format!("{id}/T={tname} a={}{extra}", render_rational(a));
            for r in 0..=k {
                for s in 0..=k {
                    let (t1, a1) = (t.clone(), a.clone());
                    out.push(Item::new(label("rising-split", format!(" r={r} s={s}")), move || {
                        let lhs = rising(&t1, &a1, r + s);
                        let rhs = &rising(&t1, &a1, r) * &rising(&t1, &(&a1 + int(r as i64)), s);
                        judge(Claim::Elt(lhs, rhs), None)
                    }));
                    let (t1, a1) = (t.clone(), a.clone());
                    out.push(Item::new(label("falling-split", format!(" r={r} s={s}")), move || {
                        let lhs = falling(&t1, &a1, r + s);
                        let rhs = &falling(&t1, &a1, r) * &falling(&t1, &(&a1 - int(r as i64)), s);
                        judge(Claim::Elt(lhs, rhs), None)
                    }));
                }
                let (t2, a2) = (t.clone(), a.clone());
                out.push(Item::new(label("falling-as-rising", format!(" r={r}")), move || {
                    let shift = &a2 - int(r as i64) + int(1);
                    judge(Claim::Elt(falling(&t2, &a2, r), rising(&t2, &shift, r)), None)
                }));
            }
            for d in &shifts {
                for m in 0..=k {
                    let (t1, a1, d1) = (t.clone(), a.clone(), d.clone());
                    out.push(Item::new(label("mixed-sum", format!(" d={} m={m}", render_rational(d))), move || {
                        let mut lhs = UElt::zero();
                        for r in 0..=m {
                            let s = m - r;
                            let c = sign(s) / (factorial(r) * factorial(s));
                            lhs = &lhs + &(&falling(&t1, &a1, r) * &rising(&t1, &d1, s)).scale_rational(&c);
                        }
                        let top = &a1 - &d1;
                        let printed = Claim::Elt(lhs.clone(), UElt::rational(printed_binomial(&top, m)));
                        let corrected = Claim::Elt(lhs, UElt::rational(gen_binomial(&top, m)));
                        judge(printed, Some(corrected))
                    }));
                    let (t1, a1, d1) = (t.clone(), a.clone(), d.clone());
                    out.push(Item::new(label("falling-sum", format!(" d={} m={m}", render_rational(d))), move || {
                        let mut lhs = UElt::zero();
                        for r in 0..=m {
                            let s = m - r;
                            let c = sign(s) / (factorial(r) * factorial(s));
                            let shifted = &d1 - int(r as i64);
                            lhs = &lhs + &(&falling(&t1, &a1, r) * &falling(&t1, &shifted, s)).scale_rational(&c);
                        }
                        let top = &a1 - &d1 + int(m as i64) - int(1);
                        let printed = Claim::Elt(lhs.clone(), UElt::rational(printed_binomial(&top, m)));
                        let corrected = Claim::Elt(lhs, UElt::rational(gen_binomial(&top, m)));
                        judge(printed, Some(corrected))
                    }));
                }
            }
        }
    }
    out
}

fn contexts(grid: &Grid, order: usize) -> Vec<Arc<TwistContext>> {
    let mut out = Vec::new();
    for case in Case::ALL {
        for &n in &grid.ns {
            out.push(Arc::new(TwistContext::new(case, n, None, order).expect("grid contexts are valid")));
        }
    }
    out
}

pub(super) fn twist_families(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for ctx in contexts(grid, grid.family_order) {
        for c in &grid.cs {
            for d in &grid.cs {
                let tag = format!("{ctx} c={} d={}", render_rational(c), render_rational(d));
                let (k, c2, d2) = (ctx.clone(), c.clone(), d.clone());
                out.push(Item::new(format!("twist-product/{tag}"), move || {
                    let lhs = k.twist(&c2).try_mul(&k.inverse_twist(&d2)).expect("arity two");
                    let pow = one_minus_et_pow(k.e(), &(&c2 - &d2), k.order());
                    let rhs = pow.map(|x| Tensor::from_legs(&[&UElt::one(), x]));
                    judge(Claim::Tensor(lhs, rhs), None)
                }));
                let (k, c2, d2) = (ctx.clone(), c.clone(), d.clone());
                out.push(Item::new(format!("u-product/{tag}"), move || {
                    let lhs = k.u_family(&c2).try_mul(&k.u_inv_family(&d2)).expect("same kind");
                    let rhs = one_minus_et_pow(k.e(), &-(&c2 + &d2), k.order());
                    judge(Claim::Series(lhs, rhs), None)
                }));
            }
            let tag = format!("{ctx} c={}", render_rational(c));
            let (k, c2) = (ctx.clone(), c.clone());
            out.push(Item::new(format!("u-closed-form/{tag}"), move || {
                let mech = k.twist(&c2).map(|x| x.map_leg(1, antipode0).multiply_legs().expect("arity two"));
                judge(Claim::Series(k.u_family(&c2), mech), None)
            }));
            let (k, c2) = (ctx.clone(), c.clone());
            out.push(Item::new(format!("u-inverse-closed-form/{tag}"), move || {
                let mech = k.inverse_twist(&c2).map(|x| x.map_leg(0, antipode0).multiply_legs().expect("arity two"));
                judge(Claim::Series(k.u_inv_family(&c2), mech), None)
            }));
            for m in 0..=grid.max_factorial {
                let (k, c2) = (ctx.clone(), c.clone());
                out.push(Item::new(format!("delta-falling/{tag} m={m}"), move || {
                    let t = k.t();
                    let lhs = delta0(&falling(t, &Rational::zero(), m));
                    let mut rhs = Tensor::zero(2);
                    for i in 0..=m {
                        let piece = Tensor::from_legs(&[&falling(t, &-&c2, i), &falling(t, &c2, m - i)]);
                        let coeff = Laurent::constant(gen_binomial(&int(m as i64), i));
                        rhs = rhs.try_add(&piece.scale(&coeff)).expect("arity two");
                    }
                    judge(Claim::Tensor(Series::constant(lhs, 0), Series::constant(rhs, 0)), None)
                }));
            }
        }
    }
    out
}

pub(super) fn cocycle(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for ctx in contexts(grid, grid.order) {
        let k = ctx.clone();
        out.push(Item::new(format!("cocycle/{ctx}"), move || axiom_outcome(&check_cocycle(&k))));
        let k = ctx.clone();
        out.push(Item::group(vec![format!("counit-left/{ctx}"), format!("counit-right/{ctx}")], move || {
            check_twist_counit(&k).iter().map(axiom_outcome).collect()
        }));
    }
    out
}

/// An oracle built on first use and shared by every item of one context.
#[derive(Clone)]
pub(super) struct SharedOracle {
    pub(super) ctx: Arc<TwistContext>,
    cell: Arc<OnceLock<Oracle>>,
}

impl SharedOracle {
    pub(super) fn new(ctx: TwistContext) -> Self {
        SharedOracle { ctx: Arc::new(ctx), cell: Arc::new(OnceLock::new()) }
    }

    pub(super) fn get(&self) -> &Oracle {
        self.cell.get_or_init(|| Oracle::new(&self.ctx))
    }
}

const SINGLE_AXIOMS: [&str; 5] = ["coassociativity", "counit-left", "counit-right", "antipode-left", "antipode-right"];
const PAIR_AXIOMS: [&str; 3] = ["delta-multiplicative", "counit-multiplicative", "antipode-antimultiplicative"];

pub(super) fn hopf(grid: &Grid) -> Vec<Item> {
    let gens = Gen::window(grid.hopf_radius);
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let mut out = Vec::new();
    for case in Case::ALL {
        for &n in &grid.ns {
            let shared =
                SharedOracle::new(TwistContext::new(case, n, None, grid.order).expect("grid contexts are valid"));
            let ctx = shared.ctx.clone();
            for &g in &gens {
                let s = shared.clone();
                let names = SINGLE_AXIOMS.iter().map(|a| format!("{a}/{ctx} {g}")).collect();
                out.push(Item::group(names, move || {
                    check_hopf_single(s.get(), &UElt::gen(g)).iter().map(axiom_outcome).collect()
                }));
            }
            for _ in 0..grid.pairs {
                let a = *gens.choose(&mut rng).expect("nonempty window");
                let b = *gens.choose(&mut rng).expect("nonempty window");
                let s = shared.clone();
                let names = PAIR_AXIOMS.iter().map(|x| format!("{x}/{ctx} {a}*{b}")).collect();
                out.push(Item::group(names, move || {
                    check_hopf_pair(s.get(), &UElt::gen(a), &UElt::gen(b)).iter().map(axiom_outcome).collect()
                }));
            }
        }
    }
    out
}

pub(super) fn restriction(grid: &Grid) -> Vec<Item> {
    let gens: Vec<Gen> =
        Gen::window(grid.hopf_radius).into_iter().filter(|g| !matches!(g.kind(), Kind::D1 | Kind::D2)).collect();
    let outside = |g: Gen| matches!(g.kind(), Kind::D1 | Kind::D2);
    let mut out = Vec::new();
    for case in [Case::D, Case::DF] {
        for &n in &grid.ns {
            let shared =
                SharedOracle::new(TwistContext::new(case, n, None, grid.order).expect("grid contexts are valid"));
            let ctx = shared.ctx.clone();
            for &g in &gens {
                let s = shared.clone();
                let names =
                    ["closed", "coassociativity", "antipode-left"].iter().map(|a| format!("{a}/{ctx} {g}")).collect();
                out.push(Item::group(names, move || {
                    let oracle = s.get();
                    let x = UElt::gen(g);
                    let delta = oracle.delta(&x);
                    let anti = oracle.antipode(&x);
                    let leaks = delta.coeffs().iter().any(|t| t.mentions(outside))
                        || anti.coeffs().iter().any(|u| u.mentions(outside));
                    let closed = if leaks { Outcome::fail("the image mentions d1 or d2") } else { Outcome::pass() };
                    let axioms = check_hopf_single(oracle, &x);
                    vec![closed, axiom_outcome(&axioms[0]), axiom_outcome(&axioms[3])]
                }));
            }
        }
    }
    out
}

pub(super) fn noncocommutative(grid: &Grid) -> Vec<Item> {
    let gens = Arc::new(Gen::window(grid.hopf_radius));
    let mut out = Vec::new();
    for case in Case::ALL {
        for &n in &grid.ns {
            let ctx = TwistContext::new(case, n, None, grid.order.max(1)).expect("grid contexts are valid");
            let g = gens.clone();
            out.push(Item::new(format!("witness/{ctx}"), move || {
                let oracle = Oracle::new(&ctx);
                match g.iter().find(|&&x| is_noncocommutative_at(&oracle, &UElt::gen(x))) {
                    Some(x) => Outcome { detail: Some(format!("witness {x}")), ..Outcome::pass() },
                    None => Outcome::fail("every sampled coproduct is flip-symmetric mod t^2"),
                }
            }));
        }
    }
    out
}
