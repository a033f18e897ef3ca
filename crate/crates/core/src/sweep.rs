//! Exhaustive invariant sweeps over small shapes and tuples.
//!
//! Each check runs over every partition with at most `max_n` parts and
//! largest part at most `max_part`, and over every upper tuple for that
//! shape, comparing two independent routes to the same answer.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::demazure::match_gapless_to_demazure;
use crate::equivalence::{class_of, enumerate_gapless, equivalent};
use crate::error::Error;
use crate::gv::{efficiency_count, gv_matrix, schur_via_det};
use crate::paths::{
    construct_violation_witness, enumerate_disjoint, for_each_disjoint, identity,
    is_nonpermutable_brute, permutations,
};
use crate::rtuple::{is_gapless_core_via_core, RContext, RTuple};
use crate::shape::{enumerate_tableaux, row_bound_sum, Shape};

/// Partitions with exactly `n` parts (zeros allowed) and `λ_1 ≤ max_part`,
/// in reverse lexicographic order.
pub fn partitions(n: usize, max_part: usize) -> Vec<Shape> {
    fn rec(n: usize, bound: usize, cur: &mut Vec<i64>, out: &mut Vec<Shape>) {
        if cur.len() == n {
            out.push(Shape::new(n, cur).expect("weakly decreasing by construction"));
            return;
        }
        for p in (0..=bound).rev() {
            cur.push(p as i64);
            rec(n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every shape with `1 ≤ n ≤ max_n` parts and `λ_1 ≤ max_part`.
pub fn shapes(max_n: usize, max_part: usize) -> Vec<Shape> {
    (1..=max_n).flat_map(|n| partitions(n, max_part)).collect()
}

/// All tuples in `[n]^n` over the given dividers, lexicographically.
pub fn all_tuples(ctx: &RContext) -> Vec<RTuple> {
    bounded_tuples(ctx, |_| 1)
}

/// All upper tuples (`β_i ≥ i`) over the given dividers.
pub fn upper_tuples(ctx: &RContext) -> Vec<RTuple> {
    bounded_tuples(ctx, |i| i)
}

fn bounded_tuples(ctx: &RContext, low: impl Fn(usize) -> usize) -> Vec<RTuple> {
    let n = ctx.n();
    let lo: Vec<usize> = (1..=n).map(low).collect();
    let mut cur = lo.clone();
    let mut out = Vec::new();
    loop {
        out.push(RTuple::new(ctx.clone(), cur.clone()).expect("entries lie in [n]"));
        let Some(k) = (0..n).rev().find(|&k| cur[k] < n) else {
            break;
        };
        cur[k] += 1;
        cur[k + 1..].copy_from_slice(&lo[k + 1..]);
    }
    out
}

/// Outcome of one named check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: CheckReport) -> CheckReport {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

type ShapeCheck = fn(&Shape, usize) -> CheckReport;

/// The named checks run by [`run_all`], in order.
pub const CHECKS: &[(&str, ShapeCheck)] = &[
    ("rtuple-invariants", check_rtuple_invariants),
    ("nonpermutability-characterisation", check_nonpermutability),
    ("determinant-oracle", check_determinant_oracle),
    ("path-tableau-bijection", check_path_bijection),
    ("violation-witnesses", check_witnesses),
    ("forced-stilts", check_forced_stilts),
    ("class-intervals-and-efficiency", check_classes),
    ("equivalence-vs-tableau-sets", check_equivalence),
    ("gapless-count", check_gapless_count),
    ("demazure-match", check_demazure_match),
];

/// Runs one check over every shape within the caps, in parallel.
pub fn run_check(
    name: &str,
    check: ShapeCheck,
    max_n: usize,
    max_part: usize,
    brute_cap: usize,
) -> CheckReport {
    shapes(max_n, max_part)
        .par_iter()
        .map(|s| check(s, brute_cap))
        .reduce(
            || CheckReport {
                name: name.to_string(),
                ..Default::default()
            },
            CheckReport::merge,
        )
}

pub fn run_all(max_n: usize, max_part: usize, brute_cap: usize) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|(name, check)| run_check(name, *check, max_n, max_part, brute_cap))
        .collect()
}

fn report(name: &str) -> CheckReport {
    CheckReport {
        name: name.to_string(),
        ..Default::default()
    }
}

fn fail(r: &mut CheckReport, shape: &Shape, beta: &RTuple, what: impl std::fmt::Display) {
    r.failures.push(format!("λ=({shape}) β=({beta}): {what}"));
}

/// Core/platform identities and the class inclusions, including agreement of
/// the two gapless and the two gapless-core definitions.
pub fn check_rtuple_invariants(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("rtuple-invariants");
    for beta in upper_tuples(shape.ctx()) {
        r.cases += 1;
        let flags = match beta.classify() {
            Ok(f) => f,
            Err(e) => {
                fail(&mut r, shape, &beta, e);
                continue;
            }
        };
        let (core, plat, crit) = (
            beta.core().unwrap(),
            beta.platform().unwrap(),
            beta.critical_list().unwrap(),
        );
        if !core.le(&beta) {
            fail(&mut r, shape, &beta, "core exceeds the tuple");
        }
        if core.core().unwrap() != core || plat.platform().unwrap() != plat {
            fail(&mut r, shape, &beta, "core or platform not idempotent");
        }
        if core.critical_list().unwrap() != crit || plat.critical_list().unwrap() != crit {
            fail(&mut r, shape, &beta, "critical list not preserved");
        }
        if flags.is_r_increasing && core != beta {
            fail(
                &mut r,
                shape,
                &beta,
                "R-increasing tuple is not its own core",
            );
        }
        if flags.is_flag && !(flags.has_flag_critical_list && flags.is_bounded_by_platform) {
            fail(&mut r, shape, &beta, "flag outside UGC ∩ UBP");
        }
        if flags.is_r_increasing && !flags.is_bounded_by_platform {
            fail(
                &mut r,
                shape,
                &beta,
                "R-increasing tuple not bounded by platform",
            );
        }
        if flags.is_gapless && !(flags.is_r_increasing && flags.is_gapless_core) {
            fail(&mut r, shape, &beta, "gapless tuple outside UI ∩ UGC");
        }
        if flags.is_gapless_core != is_gapless_core_via_core(&beta) {
            fail(&mut r, shape, &beta, "gapless core definitions disagree");
        }
        if flags.is_gapless {
            let xi = plat.classify().unwrap();
            if !xi.is_ceiling_flag || plat.core().unwrap() != beta {
                fail(
                    &mut r,
                    shape,
                    &beta,
                    "platform of gapless tuple is not its ceiling flag",
                );
            }
        }
        if flags.is_ceiling_flag {
            let g = core.classify().unwrap();
            if !g.is_gapless || core.platform().unwrap() != beta {
                fail(
                    &mut r,
                    shape,
                    &beta,
                    "ceiling flag is not the platform of a gapless core",
                );
            }
        }
    }
    r
}

/// Brute-force nonpermutability equals gapless core and bounded by platform.
pub fn check_nonpermutability(shape: &Shape, cap: usize) -> CheckReport {
    let mut r = report("nonpermutability-characterisation");
    for beta in upper_tuples(shape.ctx()) {
        r.cases += 1;
        let predicate = beta.classify().unwrap().is_valid_gv_input();
        match is_nonpermutable_brute(shape, &beta, cap) {
            Ok(brute) if brute == predicate => {}
            Ok(brute) => fail(
                &mut r,
                shape,
                &beta,
                format!("brute {brute}, predicate {predicate}"),
            ),
            Err(e) => fail(&mut r, shape, &beta, e),
        }
    }
    r
}

/// The determinant (with the core fallback) equals the tableau sum on
/// every gapless core tuple; without the fallback it equals it on
/// `UGC ∩ UBP`.
pub fn check_determinant_oracle(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("determinant-oracle");
    for beta in upper_tuples(shape.ctx()) {
        let flags = beta.classify().unwrap();
        if !flags.is_gapless_core {
            continue;
        }
        r.cases += 1;
        let oracle = row_bound_sum(shape, &beta);
        match schur_via_det(shape, &beta, false) {
            Ok(res) if res.polynomial == oracle => {}
            Ok(res) => fail(
                &mut r,
                shape,
                &beta,
                format!("det {} vs tableaux {oracle}", res.polynomial),
            ),
            Err(e) => fail(&mut r, shape, &beta, e),
        }
        if flags.is_bounded_by_platform {
            let raw = gv_matrix(shape, &beta).unwrap().determinant();
            if raw != oracle {
                fail(
                    &mut r,
                    shape,
                    &beta,
                    format!("raw det {raw} vs tableaux {oracle}"),
                );
            }
        }
    }
    r
}

/// `|LD_λ(β)| = |S_λ(β)|` with matching weight multisets, and the recording
/// map sends each disjoint n-path to a tableau of the row bound set.
pub fn check_path_bijection(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("path-tableau-bijection");
    let id = identity(shape.n());
    for beta in upper_tuples(shape.ctx()) {
        r.cases += 1;
        let paths = enumerate_disjoint(shape, &beta, &id);
        let tabs: Vec<_> = enumerate_tableaux(shape, &beta).collect();
        if paths.len() != tabs.len() {
            fail(
                &mut r,
                shape,
                &beta,
                format!("{} paths vs {} tableaux", paths.len(), tabs.len()),
            );
            continue;
        }
        let mut pw: Vec<_> = paths.iter().map(|p| p.content()).collect();
        let mut tw: Vec<_> = tabs.iter().map(|t| t.content()).collect();
        pw.sort();
        tw.sort();
        if pw != tw {
            fail(&mut r, shape, &beta, "weight multisets differ");
        }
        let recorded: BTreeSet<_> = paths
            .iter()
            .filter_map(|p| crate::paths::path_to_tableau(shape, p).ok())
            .map(|t| t.columns().to_vec())
            .collect();
        let direct: BTreeSet<_> = tabs.iter().map(|t| t.columns().to_vec()).collect();
        if recorded != direct {
            fail(
                &mut r,
                shape,
                &beta,
                "recording is not a bijection onto the row bound set",
            );
        }
    }
    r
}

/// A validated witness exists exactly off `UGC ∩ UBP`.
pub fn check_witnesses(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("violation-witnesses");
    for beta in upper_tuples(shape.ctx()) {
        r.cases += 1;
        let valid = beta.classify().unwrap().is_valid_gv_input();
        match (valid, construct_violation_witness(shape, &beta)) {
            (true, Err(Error::Refused(_))) => {}
            (true, other) => fail(
                &mut r,
                shape,
                &beta,
                format!("expected refusal, got {other:?}"),
            ),
            (false, Ok(w)) => {
                if w.path.has_native_sinks() || w.path.validate(shape, &beta).is_err() {
                    fail(
                        &mut r,
                        shape,
                        &beta,
                        "witness is not a permuted disjoint n-path",
                    );
                }
            }
            (false, Err(e)) => fail(&mut r, shape, &beta, e),
        }
    }
    r
}

/// For `β ∈ UBP_λ`, every component of every disjoint n-path reaches its
/// sink longitude no deeper than the core entry of its terminal.
pub fn check_forced_stilts(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("forced-stilts");
    let perms = permutations(shape.n());
    for beta in upper_tuples(shape.ctx()) {
        if !beta.classify().unwrap().is_bounded_by_platform {
            continue;
        }
        let core = beta.core().unwrap();
        for pi in &perms {
            for_each_disjoint(shape, &beta, pi, |np| {
                r.cases += 1;
                for (k, c) in np.components.iter().enumerate() {
                    let t = pi[k];
                    if c.arrival_depth() > core.get(t) {
                        r.failures.push(format!(
                            "λ=({shape}) β=({beta}) π={pi:?}: component {} misses the stilt at depth {}",
                            k + 1,
                            core.get(t)
                        ));
                    }
                }
                ControlFlow::Continue(())
            });
        }
    }
    r
}

/// Core classes of `UGC ∩ UBP` are exactly the intervals `[γ, ξ]` and the
/// efficiency count is minimised only at `γ`.
pub fn check_classes(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("class-intervals-and-efficiency");
    let mut groups: BTreeMap<Vec<usize>, Vec<RTuple>> = BTreeMap::new();
    for beta in upper_tuples(shape.ctx()) {
        if beta.classify().unwrap().is_valid_gv_input() {
            groups
                .entry(beta.core().unwrap().entries().to_vec())
                .or_default()
                .push(beta);
        }
    }
    for (_, members) in groups {
        r.cases += 1;
        let class = class_of(shape, &members[0]).unwrap();
        let literal: BTreeSet<_> = members.iter().map(|b| b.entries().to_vec()).collect();
        let interval: BTreeSet<_> = class
            .members()
            .iter()
            .map(|b| b.entries().to_vec())
            .collect();
        let gamma = class.gamma().clone();
        if literal != interval {
            fail(&mut r, shape, &gamma, "class is not the interval [γ, ξ]");
        }
        if !class.gamma().classify().unwrap().is_gapless
            || !class.xi().classify().unwrap().is_ceiling_flag
        {
            fail(
                &mut r,
                shape,
                &gamma,
                "interval endpoints are not gapless / ceiling flag",
            );
        }
        let at_gamma = efficiency_count(shape, &gamma).unwrap();
        for m in &members {
            let e = efficiency_count(shape, m).unwrap();
            if m != &gamma && e <= at_gamma {
                fail(
                    &mut r,
                    shape,
                    m,
                    format!("efficiency {e} not above {at_gamma} at γ"),
                );
            }
        }
    }
    r
}

/// `β ≈ β'` via cores agrees with literal equality of tableau sets.
pub fn check_equivalence(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("equivalence-vs-tableau-sets");
    let tuples = upper_tuples(shape.ctx());
    let sets: Vec<BTreeSet<Vec<Vec<usize>>>> = tuples
        .iter()
        .map(|b| {
            enumerate_tableaux(shape, b)
                .map(|t| t.columns().to_vec())
                .collect()
        })
        .collect();
    for (a, sa) in tuples.iter().zip(&sets) {
        for (b, sb) in tuples.iter().zip(&sets) {
            r.cases += 1;
            if equivalent(shape, a, b).unwrap() != (sa == sb) {
                fail(
                    &mut r,
                    shape,
                    a,
                    format!("equivalence with ({b}) disagrees with tableau sets"),
                );
            }
        }
    }
    r
}

/// Gapless enumeration matches a brute-force filter of `[n]^n`, and its size
/// equals the number of classes and of distinct row bound sums on
/// `UGC ∩ UBP`.
pub fn check_gapless_count(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("gapless-count");
    r.cases += 1;
    let fast: Vec<_> = enumerate_gapless(shape)
        .iter()
        .map(|t| t.entries().to_vec())
        .collect();
    let slow: Vec<_> = all_tuples(shape.ctx())
        .into_iter()
        .filter(|t| t.classify().map(|f| f.is_gapless).unwrap_or(false))
        .map(|t| t.entries().to_vec())
        .collect();
    if fast != slow {
        r.failures.push(format!(
            "λ=({shape}): enumeration {} vs filter {}",
            fast.len(),
            slow.len()
        ));
    }
    let valid: Vec<_> = upper_tuples(shape.ctx())
        .into_iter()
        .filter(|b| b.classify().unwrap().is_valid_gv_input())
        .collect();
    let cores: BTreeSet<_> = valid
        .iter()
        .map(|b| b.core().unwrap().entries().to_vec())
        .collect();
    let polys: BTreeSet<String> = valid
        .iter()
        .map(|b| row_bound_sum(shape, b).to_string())
        .collect();
    if cores.len() != fast.len() || polys.len() != fast.len() {
        r.failures.push(format!(
            "λ=({shape}): {} gapless, {} classes, {} distinct sums",
            fast.len(),
            cores.len(),
            polys.len()
        ));
    }
    r
}

/// Every gapless determinant is a Demazure character of a λ-permutation.
pub fn check_demazure_match(shape: &Shape, _: usize) -> CheckReport {
    let mut r = report("demazure-match");
    r.cases += 1;
    match match_gapless_to_demazure(shape) {
        Ok(rep) if rep.is_complete() => {}
        Ok(rep) => r.failures.push(format!(
            "λ=({shape}): {} matched of {} gapless, {} unmatched, {} match pairs",
            rep.count,
            rep.parabolic_catalan,
            rep.unmatched_gammas.len(),
            rep.matched.len()
        )),
        Err(e) => r.failures.push(format!("λ=({shape}): {e}")),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // partitions inside a 3 x 3 box: C(6, 3)
        assert_eq!(partitions(3, 3).len(), 20);
        assert_eq!(partitions(4, 3).len(), 35);
        assert_eq!(partitions(1, 0).len(), 1);
    }

    #[test]
    fn tuple_counts() {
        let ctx = RContext::trivial(4).unwrap();
        assert_eq!(upper_tuples(&ctx).len(), 24);
        assert_eq!(all_tuples(&ctx).len(), 256);
        assert!(upper_tuples(&ctx).iter().all(RTuple::is_upper));
    }

    #[test]
    fn every_check_passes_at_n3() {
        for report in run_all(3, 2, 6) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(report.cases > 0, "{} ran nothing", report.name);
        }
    }
}
