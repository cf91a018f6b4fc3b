//! Closed-form coproducts and antipodes against the conjugation oracle, and
//! their transport under the involution.

use crate::closedform::{cf_antipode_form, cf_delta_form, transport_mismatch, Form};
use crate::liealg::{Gen, Kind};
use crate::series::Mismatch;
use crate::twist::{Case, TwistContext};
use crate::uea::{tau_u, UElt};

use super::algebra::SharedOracle;
use super::{judge, Claim, Grid, Item, Outcome};

fn sampled(grid: &Grid, ctx: &TwistContext) -> Vec<Gen> {
    let mut out = vec![Gen::D, Gen::D1, Gen::D2];
    for m in grid.degrees(ctx.n()) {
        for kind in [Kind::E, Kind::F, Kind::G, Kind::H] {
            out.extend(Gen::try_new(kind, m));
        }
    }
    out
}

pub(super) fn closed_form(case: Case, grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for &n in &grid.ns {
        let shared = SharedOracle::new(TwistContext::new(case, n, None, grid.order).expect("grid contexts are valid"));
        let ctx = shared.ctx.clone();
        for y in sampled(grid, &ctx) {
            let s = shared.clone();
            let names = vec![format!("delta/n={n} {y}"), format!("antipode/n={n} {y}")];
            out.push(Item::group(names, move || {
                let oracle = s.get();
                let ctx = oracle.context();
                let yu = UElt::gen(y);
                let (delta, anti) = (oracle.delta(&yu), oracle.antipode(&yu));
                let d = judge(
                    Claim::Tensor(cf_delta_form(ctx, y, Form::Printed), delta.clone()),
                    Some(Claim::Tensor(cf_delta_form(ctx, y, Form::Corrected), delta)),
                );
                let a = judge(
                    Claim::Series(cf_antipode_form(ctx, y, Form::Printed), anti.clone()),
                    Some(Claim::Series(cf_antipode_form(ctx, y, Form::Corrected), anti)),
                );
                vec![d, a]
            }));
        }
    }
    out
}

fn describe(maps: [Option<Mismatch>; 2]) -> Option<String> {
    let parts: Vec<String> = ["delta", "antipode"]
        .iter()
        .zip(maps)
        .filter_map(|(name, m)| m.map(|m| format!("{name} at t^{}: difference {}", m.order, m.difference)))
        .collect();
    (!parts.is_empty()).then(|| parts.join("; "))
}

pub(super) fn tau_transport(grid: &Grid) -> Vec<Item> {
    let mut out = Vec::new();
    for case in [Case::G, Case::E, Case::D] {
        for &n in &grid.ns {
            let primary =
                SharedOracle::new(TwistContext::new(case, n, None, grid.order).expect("grid contexts are valid"));
            let partner = SharedOracle::new(primary.ctx.tau_image());
            for y in sampled(grid, &partner.ctx) {
                let (primary, partner) = (primary.clone(), partner.clone());
                let tag = format!("{}->{} n={n} {y}", case, case.partner());
                let names = vec![format!("oracle/{tag}"), format!("printed/{tag}"), format!("corrected/{tag}")];
                out.push(Item::group(names, move || {
                    let (t, c) = (primary.get(), partner.get());
                    let (sign, ty) = crate::liealg::tau_gen(y);
                    let tyu = UElt::gen(ty).scale(&crate::scalars::Laurent::from_int(sign));
                    let yu = UElt::gen(y);
                    let tau2 = |x: &crate::uea::Tensor| x.map_leg(0, tau_u).map_leg(1, tau_u);
                    let oracle = [
                        crate::series::compare_series(&c.delta(&yu), &t.delta(&tyu).map(tau2)),
                        crate::series::compare_series(&c.antipode(&yu), &t.antipode(&tyu).map(tau_u)),
                    ];
                    let printed = describe(transport_mismatch(&primary.ctx, &partner.ctx, y, Form::Printed));
                    let corrected = describe(transport_mismatch(&primary.ctx, &partner.ctx, y, Form::Corrected));
                    vec![
                        Outcome::expect_none(describe(oracle)),
                        printed.map(Outcome::discrepancy).unwrap_or_else(Outcome::pass),
                        Outcome::expect_none(corrected),
                    ]
                }));
            }
        }
    }
    out
}
